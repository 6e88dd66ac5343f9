#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "kroncoeff/contingency.hpp"
#include "kroncoeff/errors.hpp"

using namespace kroncoeff;

TEST_CASE("forced and degenerate marginals") {
    CHECK(count_tables({{0}, {0}, {0}}) == 1);
    CHECK(count_tables({{5}, {5}, {5}}) == 1);
    CHECK(count_tables({{1, 0}, {0, 1}, {1, 0}}) == 1);
    CHECK(count_tables({{0, 0}, {0, 0}, {0, 0}}) == 1);
    CHECK(count_tables({{1, 1}, {1, 1}, {1, 1}}) == 4);
    CHECK(count_tables({{2, 1}, {2, 1}, {3, 0}}) == 2);
    CHECK(count_tables({{1, 1}, {2, 0}, {1, 1}}) == 2);
    // mismatched totals and negative entries count zero
    CHECK(count_tables({{2, 1}, {2, 1}, {2, 0}}) == 0);
    CHECK(count_tables({{-1, 2}, {1, 0}, {1, 0}}) == 0);
    CHECK_THROWS_AS(count_tables({{1}, {1, 0}, {1}}), input_error);
}

TEST_CASE("naive oracle edge cases") {
    CHECK(count_tables_naive({{1, 1}, {1, 1}, {1, 1}}) == 4);
    CHECK(count_tables_naive({{0, 0}, {0, 0}, {0, 0}}) == 1);
    CHECK(count_tables_naive({{1, 1}, {2, 0}, {1, 1}}) == 2);
    CHECK(count_tables_naive({{2, 1}, {2, 1}, {2, 0}}) == 0);
    CHECK_THROWS_AS(count_tables_naive({{9, 9}, {9, 9}, {9, 9}}), input_error);
    CHECK_THROWS_AS(count_tables_naive({{1}, {1}, {1, 0}}), input_error);
}

TEST_CASE("dp agrees with enumeration on a small grid") {
    for (int len = 1; len <= 2; ++len) {
        std::vector<std::vector<int64_t>> vecs;
        std::vector<int64_t> acc(static_cast<size_t>(len), 0);
        auto gen = [&](auto&& self, int idx) -> void {
            if (idx == len) {
                vecs.push_back(acc);
                return;
            }
            for (int64_t v = 0; v <= 3; ++v) {
                acc[static_cast<size_t>(idx)] = v;
                self(self, idx + 1);
            }
        };
        gen(gen, 0);
        for (const auto& a : vecs) {
            for (const auto& b : vecs) {
                for (const auto& c : vecs) {
                    const Marginals m{a, b, c};
                    CHECK(count_tables(m) == count_tables_naive(m));
                }
            }
        }
    }
}

TEST_CASE("invariance under entry shuffles") {
    // relabeling coordinates in any one direction is a bijection on arrays
    const std::vector<int64_t> a{3, 1, 0};
    const std::vector<int64_t> b{2, 2, 0};
    const std::vector<int64_t> c{1, 1, 2};
    const BigCount base = count_tables_naive({a, b, c});
    CHECK(count_tables({a, b, c}) == base);
    CHECK(count_tables({{0, 1, 3}, b, c}) == base);
    CHECK(count_tables({{1, 0, 3}, {0, 2, 2}, c}) == base);
    CHECK(count_tables({a, b, {2, 1, 1}}) == base);
    // and so is permuting the roles of the three directions
    CHECK(count_tables({b, a, c}) == base);
    CHECK(count_tables({c, b, a}) == base);
    CHECK(count_tables({b, c, a}) == base);
}

TEST_CASE("positive whenever totals agree") {
    const std::vector<std::vector<int64_t>> samples{
        {4, 0, 0}, {2, 1, 1}, {0, 2, 2}, {1, 3, 0}, {4}, {3, 1}};
    for (const auto& a : samples) {
        for (const auto& b : samples) {
            for (const auto& c : samples) {
                if (a.size() != b.size() || a.size() != c.size()) continue;
                CHECK(count_tables({a, b, c}) > 0);
            }
        }
    }
}

TEST_CASE("cache management") {
    TableCounter counter(64);
    CHECK(counter.count({{2, 1}, {2, 1}, {2, 1}}) == counter.count({{2, 1}, {2, 1}, {2, 1}}));
    CHECK(counter.cached() > 0);
    counter.clear();
    CHECK(counter.cached() == 0);
}
