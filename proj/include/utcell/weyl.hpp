#ifndef UTCELL_WEYL_HPP
#define UTCELL_WEYL_HPP

#include "utcell/root.hpp"

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace utcell {

// Element of S_n, 1-indexed. Composition is (u*v)(j) = u(v(j)).
class Permutation {
public:
    explicit Permutation(int n);  // identity
    static Permutation from_images(const std::vector<int>& images);
    static Permutation transposition(int n, int a, int b);

    int n() const { return static_cast<int>(img_.size()); }
    int operator()(int j) const { return img_[static_cast<std::size_t>(j - 1)]; }
    const std::vector<int>& images() const { return img_; }

    Permutation compose(const Permutation& v) const;
    Permutation inverse() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;

    std::string one_line() const;   // "3 4 2 1"
    std::string two_line() const;

private:
    std::vector<int> img_;
};

Permutation w_d(const BasicSubset& d);

std::optional<BasicSubset> basic_subset_of(const Permutation& w);

// {k : w(j) <= k <= n, k not an earlier image}. Contains w(j) itself.
std::set<int> i_wj(const Permutation& w, int j);

bool is_homogeneous(const Permutation& w);

// Row/column index sets of the minor attached to the pair (i,j):
// J' = {b < j : w(b) > i}, J = J' + {j}, I = w(J') + {i}, both ascending.
struct MinorSpec {
    std::vector<int> rows;
    std::vector<int> cols;
};

MinorSpec minor_spec(const Permutation& w, int i, int j);

Root act_on_root(const Permutation& w, const Root& r);

Permutation reflection(int n, const Root& xi);

// Product r_1 ... r_k over the first k extension roots.
Permutation reflection_prefix(int n, const std::vector<Root>& ext, int k);

// The extension roots; the reflections in this order multiply to w_D.
std::vector<Root> factorize(const BasicSubset& d);

} // namespace utcell

#endif
