#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <vector>

#include "kroncoeff/characters.hpp"
#include "kroncoeff/errors.hpp"
#include "kroncoeff/kron.hpp"
#include "kroncoeff/lr.hpp"
#include "kroncoeff/partition.hpp"

using namespace kroncoeff;

namespace {

// Independent oracle via Frobenius: c^lambda_{mu nu} is the multiplicity of
// chi^lambda in the induction product, a double class sum over the two
// factors with the concatenated cycle type.
BigCount lr_by_characters(const Partition& lam, const Partition& mu, const Partition& nu) {
    if (lam.size() != mu.size() + nu.size()) return 0;
    const int64_t p = mu.size(), q = nu.size();
    const BigInt pfact = factorial(static_cast<unsigned long>(p));
    const BigInt qfact = factorial(static_cast<unsigned long>(q));
    BigInt total = 0;
    for (const Partition& rho1 : partitions_of(p)) {
        BigInt cls1;
        mpz_divexact(cls1.get_mpz_t(), pfact.get_mpz_t(),
                     centralizer_order(rho1).get_mpz_t());
        for (const Partition& rho2 : partitions_of(q)) {
            BigInt cls2;
            mpz_divexact(cls2.get_mpz_t(), qfact.get_mpz_t(),
                         centralizer_order(rho2).get_mpz_t());
            std::vector<int> joined;
            joined.reserve(static_cast<size_t>(rho1.length() + rho2.length()));
            for (int x : rho1.parts()) joined.push_back(x);
            for (int x : rho2.parts()) joined.push_back(x);
            std::sort(joined.begin(), joined.end(), std::greater<int>());
            total += cls1 * cls2 * chi(mu, rho1) * chi(nu, rho2) *
                     chi(lam, Partition(joined));
        }
    }
    const BigInt denom = pfact * qfact;
    REQUIRE(total % denom == 0);
    return total / denom;
}

std::vector<Partition> subpartitions(const Partition& outer) {
    std::vector<Partition> out;
    std::vector<int> acc;
    auto rec = [&](auto&& self, int row) -> void {
        out.emplace_back(acc);
        if (row == outer.length()) return;
        const int cap = std::min(outer.part(row),
                                 row > 0 ? acc[static_cast<size_t>(row - 1)]
                                         : outer.part(0));
        for (int len = 1; len <= cap; ++len) {
            acc.push_back(len);
            self(self, row + 1);
            acc.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

} // namespace

TEST_CASE("skew shape construction") {
    CHECK_NOTHROW(make_skew(Partition{3, 2}, Partition{2}));
    CHECK_THROWS_AS(make_skew(Partition{2}, Partition{3}), input_error);
}

TEST_CASE("fixed coefficients") {
    for (int n = 1; n <= 5; ++n) {
        for (const Partition& lam : partitions_of(n)) {
            CHECK(lr_coefficient(lam, lam, Partition{}) == 1);
        }
    }
    CHECK(lr_coefficient(Partition{2, 1}, Partition{1}, Partition{1, 1}) == 1);
    CHECK(lr_coefficient(Partition{2, 2}, Partition{2}, Partition{1, 1}) == 0);
    // frozen after confirming with both oracles below
    CHECK(lr_coefficient(Partition{3, 3}, Partition{2, 1}, Partition{2, 1}) == 1);
    CHECK(lr_by_characters(Partition{3, 3}, Partition{2, 1}, Partition{2, 1}) == 1);
    // size mismatch and non-containment return zero
    CHECK(lr_coefficient(Partition{3}, Partition{1}, Partition{1}) == 0);
    CHECK(lr_coefficient(Partition{2, 2}, Partition{3}, Partition{1}) == 0);
}

TEST_CASE("direct rule equals the character oracle") {
    for (int m = 1; m <= 6; ++m) {
        for (const Partition& lam : partitions_of(m)) {
            for (const Partition& mu : subpartitions(lam)) {
                for (const Partition& nu : partitions_of(m - mu.size())) {
                    CHECK(lr_coefficient(lam, mu, nu) == lr_by_characters(lam, mu, nu));
                }
            }
        }
    }
}

TEST_CASE("symmetry in the two lower labels") {
    for (int m = 1; m <= 7; ++m) {
        for (const Partition& lam : partitions_of(m)) {
            for (const Partition& mu : subpartitions(lam)) {
                for (const Partition& nu : partitions_of(m - mu.size())) {
                    CHECK(lr_coefficient(lam, mu, nu) == lr_coefficient(lam, nu, mu));
                }
            }
        }
    }
}

TEST_CASE("pieri expansions") {
    const auto two_to_one = pieri_expand(2, Partition{1});
    CHECK(two_to_one == std::vector<Partition>{Partition{3}, Partition{2, 1}});
    CHECK(pieri_expand(0, Partition{2, 1}) == std::vector<Partition>{Partition{2, 1}});
    const auto strips = pieri_expand(2, Partition{2, 1});
    CHECK(strips == std::vector<Partition>{Partition{4, 1}, Partition{3, 2},
                                           Partition{3, 1, 1}, Partition{2, 2, 1}});
    CHECK(pieri_expand(3, Partition{}) == std::vector<Partition>{Partition{3}});
    CHECK_THROWS_AS(pieri_expand(-1, Partition{}), input_error);

    // adding one horizontal strip is multiplicity free
    for (int r = 0; r <= 3; ++r) {
        for (const Partition& pi : partitions_of(r)) {
            for (int s = 0; s <= 4; ++s) {
                const auto expanded = pieri_expand(s, pi);
                const Partition strip = s == 0 ? Partition{} : Partition{s};
                for (const Partition& eta : partitions_of(r + s)) {
                    const bool inside =
                        std::find(expanded.begin(), expanded.end(), eta) != expanded.end();
                    CHECK(lr_coefficient(eta, strip, pi) == (inside ? 1 : 0));
                }
            }
        }
    }
}

TEST_CASE("murnaghan embedding") {
    CHECK(murnaghan_embedding(Partition{2, 1}, Partition{1}, Partition{1, 1}, 12) == 1);
    CHECK(murnaghan_embedding(Partition{2}, Partition{1}, Partition{1}, 10) == 1);
    CHECK(murnaghan_embedding(Partition{2, 2}, Partition{2, 2}, Partition{}, 16) == 1);
    CHECK_THROWS_AS(murnaghan_embedding(Partition{2, 1}, Partition{1}, Partition{1}, 10),
                    input_error); // sizes do not add up
    CHECK_THROWS_AS(murnaghan_embedding(Partition{5}, Partition{4}, Partition{1}, 6),
                    input_error); // first row too short
}

TEST_CASE("reduction route") {
    CHECK(lr_via_reduction(Partition{10, 1}, Partition{3}, Partition{2}) == 0);
    CHECK(lr_via_reduction(Partition{2, 1}, Partition{1}, Partition{1, 1}) == 1);
    CHECK(lr_via_reduction(Partition{3, 3}, Partition{2, 1}, Partition{2, 1}) == 1);
    CHECK(lr_via_reduction(Partition{4, 1}, Partition{3}, Partition{2}) == 1);

    for (int m = 1; m <= 5; ++m) {
        for (const Partition& lam : partitions_of(m)) {
            for (const Partition& mu : subpartitions(lam)) {
                for (const Partition& nu : partitions_of(m - mu.size())) {
                    const BigCount direct = lr_coefficient(lam, mu, nu);
                    CHECK(lr_via_reduction(lam, mu, nu) == direct);
                    const int64_t n = std::max<int64_t>(lam.part(0), mu.part(0)) +
                                      nu.size() + lam.size();
                    CHECK(murnaghan_embedding(lam, mu, nu, n) == direct);
                }
            }
        }
    }
}

TEST_CASE("reduced kronecker generalizes the coefficients") {
    for (int m = 1; m <= 5; ++m) {
        for (const Partition& lam : partitions_of(m)) {
            for (const Partition& mu : subpartitions(lam)) {
                for (const Partition& nu : partitions_of(m - mu.size())) {
                    CHECK(reduced_kron(lam, mu, nu) == lr_coefficient(lam, mu, nu));
                }
            }
        }
    }
}
