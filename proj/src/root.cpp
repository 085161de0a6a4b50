#include "utcell/root.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

namespace utcell {

namespace {

void require_positive(const Root& r, const char* who) {
    if (!r.positive())
        throw std::invalid_argument(std::string(who) + ": root " + to_string(r) +
                                    " is not positive");
}

} // namespace

bool succ_gt(const Root& a, const Root& b) {
    require_positive(a, "succ_gt");
    require_positive(b, "succ_gt");
    return root_after(a, b);
}

std::vector<Root> all_positive_roots(int n) {
    std::vector<Root> out;
    out.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (int col = 1; col < n; ++col)
        for (int row = n; row > col; --row)
            out.push_back(Root{row, col});
    return out;
}

std::optional<Root> root_sum(const Root& a, const Root& b) {
    require_positive(a, "root_sum");
    require_positive(b, "root_sum");
    if (a.col == b.row) return Root{a.row, b.col};
    if (b.col == a.row) return Root{b.row, a.col};
    return std::nullopt;
}

bool is_basic(const RootSet& roots, int n) {
    std::set<int> rows, cols;
    for (const Root& r : roots) {
        if (!r.within(n) || !r.positive())
            throw std::invalid_argument("is_basic: root " + to_string(r) +
                                        " is outside the board of size " + std::to_string(n));
        if (!rows.insert(r.row).second) return false;
        if (!cols.insert(r.col).second) return false;
    }
    return true;
}

BasicSubset BasicSubset::make(int n, const RootSet& roots) {
    if (n < 1) throw std::invalid_argument("BasicSubset: board size must be at least 1");
    if (!is_basic(roots, n))
        throw std::invalid_argument("BasicSubset: two roots share a row or a column");
    return BasicSubset{n, roots};
}

BasicSubset BasicSubset::make(int n, const std::vector<Root>& roots) {
    return make(n, RootSet(roots.begin(), roots.end()));
}

RootPartition classify(const BasicSubset& d) {
    RootPartition part;
    // (i,j) is singular when D holds a root to its left in row i or below it
    // in column j; such a root plus a positive complement lands in D.
    for (const Root& r : all_positive_roots(d.n)) {
        bool singular = false;
        for (const Root& s : d.roots) {
            if (s.row == r.row && s.col < r.col) { singular = true; break; }
            if (s.col == r.col && s.row > r.row) { singular = true; break; }
        }
        if (singular)
            part.singular.insert(r);
        else
            part.regular.insert(r);
    }
    for (const Root& r : part.regular)
        if (!d.contains(r)) part.m_set.insert(r);
    return part;
}

std::vector<BasicSubset> enumerate_basic_subsets(int n) {
    std::vector<Root> roots = all_positive_roots(n);
    std::vector<BasicSubset> out;
    std::vector<Root> chosen;
    std::function<void(std::size_t)> rec = [&](std::size_t k) {
        if (k == roots.size()) {
            out.push_back(BasicSubset::make(n, chosen));
            return;
        }
        rec(k + 1);
        const Root& cand = roots[k];
        for (const Root& c : chosen)
            if (c.row == cand.row || c.col == cand.col) return;
        chosen.push_back(cand);
        rec(k + 1);
        chosen.pop_back();
    };
    rec(0);
    return out;
}

std::string to_string(const Root& r) {
    return "(" + std::to_string(r.row) + "," + std::to_string(r.col) + ")";
}

std::vector<Root> parse_root_list(const std::string& text) {
    std::vector<Root> out;
    std::size_t i = 0;
    auto skip_ws = [&] { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
    auto read_int = [&]() -> int {
        skip_ws();
        std::size_t start = i;
        if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == start) throw std::invalid_argument("parse_root_list: expected integer in '" + text + "'");
        return std::stoi(text.substr(start, i - start));
    };
    auto expect = [&](char c) {
        skip_ws();
        if (i >= text.size() || text[i] != c)
            throw std::invalid_argument(std::string("parse_root_list: expected '") + c + "' in '" + text + "'");
        ++i;
    };
    skip_ws();
    if (i == text.size()) return out;
    while (true) {
        expect('(');
        int row = read_int();
        expect(',');
        int col = read_int();
        expect(')');
        out.push_back(Root{row, col});
        skip_ws();
        if (i == text.size()) break;
        expect(',');
    }
    return out;
}

} // namespace utcell
