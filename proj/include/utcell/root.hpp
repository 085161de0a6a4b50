#ifndef UTCELL_ROOT_HPP
#define UTCELL_ROOT_HPP

#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace utcell {

// A root is an index pair (row, col) of an off-diagonal matrix position,
// 1-indexed. Positive roots lie strictly below the diagonal (row > col).
struct Root {
    int row = 0;
    int col = 0;

    friend bool operator==(const Root&, const Root&) = default;

    bool positive() const { return row > col; }
    bool within(int n) const {
        return row >= 1 && row <= n && col >= 1 && col <= n && row != col;
    }
};

// Column-major order: smaller column first, then larger row first.
// Descending enumeration starts at (n,1) and ends at (n,n-1).
inline bool root_after(const Root& a, const Root& b) {
    if (a.col != b.col) return a.col < b.col;
    return a.row > b.row;
}

bool succ_gt(const Root& a, const Root& b);

// Comparator placing the succ-greatest root first in ordered containers.
struct SuccDesc {
    bool operator()(const Root& a, const Root& b) const { return root_after(a, b); }
};

using RootSet = std::set<Root, SuccDesc>;

std::vector<Root> all_positive_roots(int n);

std::optional<Root> root_sum(const Root& a, const Root& b);

bool is_basic(const RootSet& roots, int n);

struct BasicSubset {
    int n = 0;
    RootSet roots;

    // Validates positivity, board bounds and the one-per-row/column rule.
    static BasicSubset make(int n, const RootSet& roots);
    static BasicSubset make(int n, const std::vector<Root>& roots);

    bool contains(const Root& r) const { return roots.count(r) != 0; }
    std::size_t size() const { return roots.size(); }
};

struct RootPartition {
    RootSet singular;   // S(D)
    RootSet regular;    // R(D)
    RootSet m_set;      // M(D) = R(D) \ D
};

RootPartition classify(const BasicSubset& d);

std::vector<BasicSubset> enumerate_basic_subsets(int n);

// Text forms: "(i,j)" for a root, "(i,j),(k,l)" for lists.
std::string to_string(const Root& r);
std::vector<Root> parse_root_list(const std::string& text);

} // namespace utcell

#endif
