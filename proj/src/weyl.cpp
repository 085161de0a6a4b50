#include "utcell/weyl.hpp"

#include "utcell/diagram.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace utcell {

Permutation::Permutation(int n) {
    if (n < 1) throw std::invalid_argument("Permutation: size must be at least 1");
    img_.resize(static_cast<std::size_t>(n));
    std::iota(img_.begin(), img_.end(), 1);
}

Permutation Permutation::from_images(const std::vector<int>& images) {
    Permutation w(static_cast<int>(images.size()));
    std::vector<bool> seen(images.size(), false);
    for (int v : images) {
        if (v < 1 || v > static_cast<int>(images.size()) || seen[static_cast<std::size_t>(v - 1)])
            throw std::invalid_argument("Permutation: images are not a bijection of 1..n");
        seen[static_cast<std::size_t>(v - 1)] = true;
    }
    w.img_ = images;
    return w;
}

Permutation Permutation::transposition(int n, int a, int b) {
    Permutation w(n);
    if (a < 1 || a > n || b < 1 || b > n || a == b)
        throw std::invalid_argument("Permutation::transposition: bad indices");
    std::swap(w.img_[static_cast<std::size_t>(a - 1)], w.img_[static_cast<std::size_t>(b - 1)]);
    return w;
}

Permutation Permutation::compose(const Permutation& v) const {
    if (n() != v.n()) throw std::invalid_argument("Permutation::compose: size mismatch");
    Permutation out(n());
    for (int j = 1; j <= n(); ++j)
        out.img_[static_cast<std::size_t>(j - 1)] = (*this)(v(j));
    return out;
}

Permutation Permutation::inverse() const {
    Permutation out(n());
    for (int j = 1; j <= n(); ++j)
        out.img_[static_cast<std::size_t>((*this)(j) - 1)] = j;
    return out;
}

std::string Permutation::one_line() const {
    std::ostringstream os;
    for (int j = 1; j <= n(); ++j) {
        if (j > 1) os << ' ';
        os << (*this)(j);
    }
    return os.str();
}

std::string Permutation::two_line() const {
    std::ostringstream top, bot;
    for (int j = 1; j <= n(); ++j) {
        if (j > 1) { top << ' '; bot << ' '; }
        top << j;
        bot << (*this)(j);
    }
    return top.str() + "\n" + bot.str();
}

Permutation w_d(const BasicSubset& d) {
    const RootPartition part = classify(d);
    Permutation w(d.n);
    std::vector<int> images;
    std::vector<bool> used(static_cast<std::size_t>(d.n) + 1, false);
    for (int j = 1; j <= d.n; ++j) {
        int pick = 0;
        for (int i = d.n; i >= 1; --i) {
            if (used[static_cast<std::size_t>(i)]) continue;
            if (i > j && part.m_set.count(Root{i, j})) continue;
            pick = i;
            break;
        }
        used[static_cast<std::size_t>(pick)] = true;
        images.push_back(pick);
    }
    return Permutation::from_images(images);
}

std::optional<BasicSubset> basic_subset_of(const Permutation& w) {
    RootSet cand;
    for (int j = 1; j <= w.n(); ++j)
        if (w(j) > j) cand.insert(Root{w(j), j});
    if (!is_basic(cand, w.n())) return std::nullopt;
    BasicSubset d = BasicSubset::make(w.n(), cand);
    if (!(w_d(d) == w)) return std::nullopt;
    return d;
}

std::set<int> i_wj(const Permutation& w, int j) {
    if (j < 1 || j > w.n()) throw std::invalid_argument("i_wj: column out of range");
    std::set<int> out;
    for (int k = w(j); k <= w.n(); ++k) out.insert(k);
    for (int b = 1; b < j; ++b) out.erase(w(b));
    return out;
}

bool is_homogeneous(const Permutation& w) {
    // A pair (i,j) with i <= j, i in I_{w,j} and i != w(j) indexes a minor
    // that vanishes on the cell yet has a nonzero constant term; no such
    // pair may exist.
    for (int j = 1; j <= w.n(); ++j) {
        const std::set<int> iw = i_wj(w, j);
        for (int i : iw) {
            if (i > j) break;
            if (i != w(j)) return false;
        }
    }
    return true;
}

MinorSpec minor_spec(const Permutation& w, int i, int j) {
    if (i < 1 || i > w.n() || j < 1 || j > w.n())
        throw std::invalid_argument("minor_spec: indices out of range");
    MinorSpec spec;
    for (int b = 1; b < j; ++b) {
        if (w(b) > i) {
            spec.cols.push_back(b);
            spec.rows.push_back(w(b));
        }
    }
    spec.cols.push_back(j);
    spec.rows.push_back(i);
    std::sort(spec.rows.begin(), spec.rows.end());
    std::sort(spec.cols.begin(), spec.cols.end());
    return spec;
}

Root act_on_root(const Permutation& w, const Root& r) {
    if (r.row == r.col || r.row < 1 || r.row > w.n() || r.col < 1 || r.col > w.n())
        throw std::invalid_argument("act_on_root: not a root of this board");
    return Root{w(r.row), w(r.col)};
}

Permutation reflection(int n, const Root& xi) {
    return Permutation::transposition(n, xi.row, xi.col);
}

Permutation reflection_prefix(int n, const std::vector<Root>& ext, int k) {
    Permutation w(n);
    for (int i = 0; i < k; ++i)
        w = w.compose(reflection(n, ext[static_cast<std::size_t>(i)]));
    return w;
}

std::vector<Root> factorize(const BasicSubset& d) {
    return extension(d);
}

} // namespace utcell
