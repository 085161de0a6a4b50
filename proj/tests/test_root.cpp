#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "utcell/root.hpp"

#include <algorithm>

using namespace utcell;

TEST_CASE("order: column first, then deeper row") {
    CHECK(succ_gt({3, 1}, {2, 1}));
    CHECK(succ_gt({2, 1}, {4, 2}));
    CHECK_FALSE(succ_gt({3, 1}, {3, 1}));
    CHECK_FALSE(succ_gt({2, 1}, {3, 1}));
    CHECK_THROWS_AS(succ_gt({1, 3}, {2, 1}), std::invalid_argument);
}

TEST_CASE("order is strict and total; descending enumeration matches") {
    for (int n = 2; n <= 6; ++n) {
        const std::vector<Root> roots = all_positive_roots(n);
        CHECK(roots.size() == static_cast<std::size_t>(n * (n - 1) / 2));
        CHECK(roots.front() == Root{n, 1});
        CHECK(roots.back() == Root{n, n - 1});
        for (std::size_t i = 0; i + 1 < roots.size(); ++i)
            CHECK(succ_gt(roots[i], roots[i + 1]));
        // trichotomy + transitivity by exhaustion
        for (const Root& a : roots)
            for (const Root& b : roots) {
                if (a == b)
                    CHECK_FALSE(succ_gt(a, b));
                else
                    CHECK(succ_gt(a, b) != succ_gt(b, a));
                for (const Root& c : roots)
                    if (succ_gt(a, b) && succ_gt(b, c)) CHECK(succ_gt(a, c));
            }
    }
}

TEST_CASE("root sums") {
    CHECK(root_sum({3, 2}, {2, 1}) == Root{3, 1});
    CHECK(root_sum({5, 3}, {3, 1}) == Root{5, 1});
    CHECK_FALSE(root_sum({4, 1}, {3, 2}).has_value());
    CHECK(root_sum({2, 1}, {3, 2}) == Root{3, 1});  // symmetric
}

TEST_CASE("is_basic") {
    CHECK(is_basic({{3, 1}, {4, 2}}, 4));
    CHECK_FALSE(is_basic({{3, 1}, {3, 2}}, 4));
    CHECK_FALSE(is_basic({{3, 1}, {4, 1}}, 4));
    CHECK(is_basic({}, 3));
    CHECK_THROWS_AS(is_basic({{5, 1}}, 4), std::invalid_argument);
    CHECK_THROWS_AS(BasicSubset::make(4, std::vector<Root>{{3, 1}, {3, 2}}), std::invalid_argument);
}

TEST_CASE("classify: worked n=4 example") {
    const BasicSubset d = BasicSubset::make(4, std::vector<Root>{{3, 1}, {4, 2}});
    const RootPartition part = classify(d);
    CHECK(part.singular == RootSet{{4, 3}, {3, 2}, {2, 1}});
    CHECK(part.m_set == RootSet{{4, 1}});
}

TEST_CASE("classify: empty subset has no singular roots") {
    const BasicSubset d = BasicSubset::make(4, std::vector<Root>{});
    const RootPartition part = classify(d);
    CHECK(part.singular.empty());
    CHECK(part.m_set.size() == 6);
}

TEST_CASE("classify: n=8 example") {
    const BasicSubset d = BasicSubset::make(8, std::vector<Root>{{4, 1}, {7, 2}, {8, 3}, {5, 4}});
    const RootPartition part = classify(d);
    CHECK(part.m_set == RootSet{{5, 1}, {6, 1}, {7, 1}, {8, 1}, {8, 2}, {6, 4}, {6, 5}});
}

TEST_CASE("classify laws, exhaustive n <= 6") {
    for (int n = 2; n <= 6; ++n) {
        const std::vector<Root> all = all_positive_roots(n);
        for (const BasicSubset& d : enumerate_basic_subsets(n)) {
            const RootPartition part = classify(d);
            CHECK(part.singular.size() + part.regular.size() == all.size());
            for (const Root& r : part.singular) CHECK_FALSE(part.regular.count(r));
            for (const Root& r : d.roots) CHECK(part.regular.count(r));
            CHECK(part.m_set.size() == part.regular.size() - d.roots.size());
            // m_set closed under root addition
            for (const Root& a : part.m_set)
                for (const Root& b : part.m_set)
                    if (auto s = root_sum(a, b); s && s->within(n)) CHECK(part.m_set.count(*s));
        }
    }
}

TEST_CASE("count of basic subsets vs. brute force over all subsets") {
    const std::size_t expected[] = {1, 2, 5, 15, 52};
    for (int n = 1; n <= 5; ++n) {
        CHECK(enumerate_basic_subsets(n).size() == expected[n - 1]);
        // independent route: filter every subset of the positive roots
        const std::vector<Root> roots = all_positive_roots(n);
        std::size_t count = 0;
        for (std::size_t mask = 0; mask < (std::size_t{1} << roots.size()); ++mask) {
            RootSet set;
            for (std::size_t k = 0; k < roots.size(); ++k)
                if (mask & (std::size_t{1} << k)) set.insert(roots[k]);
            if (is_basic(set, n)) ++count;
        }
        CHECK(count == expected[n - 1]);
    }
}

TEST_CASE("root text round trip") {
    CHECK(to_string(Root{4, 1}) == "(4,1)");
    const std::vector<Root> parsed = parse_root_list(" (4,1), (7,2) ,(8,3)");
    CHECK(parsed == std::vector<Root>{{4, 1}, {7, 2}, {8, 3}});
    CHECK(parse_root_list("").empty());
    CHECK_THROWS_AS(parse_root_list("(4,1),(x)"), std::invalid_argument);
}
