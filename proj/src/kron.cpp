#include "kroncoeff/kron.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "kroncoeff/characters.hpp"
#include "kroncoeff/contingency.hpp"
#include "kroncoeff/errors.hpp"

namespace kroncoeff {

KronSettings& kron_settings() {
    static KronSettings settings;
    return settings;
}

namespace {

int64_t common_size(const Partition& a, const Partition& b, const Partition& c,
                    const char* who) {
    if (a.size() != b.size() || a.size() != c.size()) {
        throw input_error(std::string(who) + ": the three partitions must have equal size");
    }
    return a.size();
}

int common_length(const Partition& a, const Partition& b, const Partition& c) {
    return std::max({a.length(), b.length(), c.length()});
}

int parity(const std::vector<int>& perm) {
    int inv = 0;
    for (size_t i = 0; i < perm.size(); ++i) {
        for (size_t j = i + 1; j < perm.size(); ++j) {
            if (perm[i] > perm[j]) ++inv;
        }
    }
    return inv % 2 ? -1 : 1;
}

// One coordinate of the alternating sum. Marginal exponents follow the
// Vandermonde expansion Delta(x) = sum_sigma sgn(sigma) prod_i x_i^{l-sigma(i)}
// matched against [x^{theta+delta}], giving marg_i = theta_i + sigma(i) - i.
// This convention is frozen by the oracle-equality tests.
struct MargTerm {
    std::vector<int64_t> marg; // sorted descending, padded to the common length
    int64_t plus = 0;          // permutations of sign +1 producing it
    int64_t minus = 0;
};

std::vector<MargTerm> signed_marginals_uncached(const Partition& p, int ell) {
    std::map<std::vector<int64_t>, std::pair<int64_t, int64_t>> acc;
    std::vector<int> perm(static_cast<size_t>(ell));
    std::iota(perm.begin(), perm.end(), 1);
    do {
        std::vector<int64_t> marg(static_cast<size_t>(ell));
        bool ok = true;
        for (int i = 0; i < ell; ++i) {
            marg[static_cast<size_t>(i)] = p.part(i) + perm[static_cast<size_t>(i)] - (i + 1);
            if (marg[static_cast<size_t>(i)] < 0) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        std::sort(marg.begin(), marg.end(), std::greater<int64_t>());
        auto& slot = acc[marg];
        if (parity(perm) > 0) {
            ++slot.first;
        } else {
            ++slot.second;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));

    std::vector<MargTerm> terms;
    terms.reserve(acc.size());
    for (auto& [marg, counts] : acc) {
        terms.push_back(MargTerm{marg, counts.first, counts.second});
    }
    return terms;
}

const std::vector<MargTerm>& signed_marginals(const Partition& p, int ell) {
    static std::mutex lock;
    static std::unordered_map<std::string, std::vector<MargTerm>> cache;
    const std::string key = p.str() + ";" + std::to_string(ell);
    {
        std::lock_guard<std::mutex> guard(lock);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    auto terms = signed_marginals_uncached(p, ell);
    std::lock_guard<std::mutex> guard(lock);
    return cache.emplace(key, std::move(terms)).first->second;
}

void check_tables_length(int ell) {
    if (ell > kron_settings().tables_max_len) {
        throw input_error("kron_via_tables: padded length " + std::to_string(ell) +
                          " exceeds the configured cap " +
                          std::to_string(kron_settings().tables_max_len));
    }
}

// Distinct marginal triples with their multiplicities, split by the sign of
// the producing permutation triple. Deduplicating up front lets the parallel
// loop claim each contingency count exactly once.
struct TripleTerm {
    const std::vector<int64_t>* a;
    const std::vector<int64_t>* b;
    const std::vector<int64_t>* c;
    BigInt even;
    BigInt odd;
};

std::vector<TripleTerm> combine_terms(const std::vector<MargTerm>& ta,
                                      const std::vector<MargTerm>& tb,
                                      const std::vector<MargTerm>& tc) {
    std::vector<TripleTerm> out;
    out.reserve(ta.size() * tb.size() * tc.size());
    for (const MargTerm& a : ta) {
        for (const MargTerm& b : tb) {
            for (const MargTerm& c : tc) {
                BigInt even = a.plus * b.plus;
                even *= c.plus;
                BigInt part = a.plus * b.minus;
                part *= c.minus;
                even += part;
                part = a.minus * b.plus;
                part *= c.minus;
                even += part;
                part = a.minus * b.minus;
                part *= c.plus;
                even += part;

                BigInt odd = a.plus * b.plus;
                odd *= c.minus;
                part = a.plus * b.minus;
                part *= c.plus;
                odd += part;
                part = a.minus * b.plus;
                part *= c.plus;
                odd += part;
                part = a.minus * b.minus;
                part *= c.minus;
                odd += part;

                if (even != 0 || odd != 0) {
                    out.push_back(TripleTerm{&a.marg, &b.marg, &c.marg, std::move(even),
                                             std::move(odd)});
                }
            }
        }
    }
    // largest totals first so the heavy counts are claimed early
    std::sort(out.begin(), out.end(), [](const TripleTerm& x, const TripleTerm& y) {
        const int64_t sx = *std::max_element(x.a->begin(), x.a->end());
        const int64_t sy = *std::max_element(y.a->begin(), y.a->end());
        if (sx != sy) return sx > sy;
        if (*x.a != *y.a) return *x.a > *y.a;
        if (*x.b != *y.b) return *x.b > *y.b;
        return *x.c > *y.c;
    });
    return out;
}

} // namespace

BigCount kron_via_characters(const Partition& lambda, const Partition& mu,
                             const Partition& nu) {
    const int64_t n = common_size(lambda, mu, nu, "kron_via_characters");
    const BigInt nfact = factorial(static_cast<unsigned long>(n));
    BigInt total = 0;
    for (const Partition& rho : partitions_of(n)) {
        BigInt class_size;
        mpz_divexact(class_size.get_mpz_t(), nfact.get_mpz_t(),
                     centralizer_order(rho).get_mpz_t());
        total += class_size * chi(lambda, rho) * chi(mu, rho) * chi(nu, rho);
    }
    if (!mpz_divisible_p(total.get_mpz_t(), nfact.get_mpz_t())) {
        throw internal_error("kron_via_characters: class sum for (" + lambda.str() + ";" +
                             mu.str() + ";" + nu.str() + ") is not divisible by n!");
    }
    BigInt g;
    mpz_divexact(g.get_mpz_t(), total.get_mpz_t(), nfact.get_mpz_t());
    if (g < 0) {
        throw internal_error("kron_via_characters: negative coefficient, character bug");
    }
    return g;
}

BigCount kron_via_tables(const Partition& alpha, const Partition& beta,
                         const Partition& gamma) {
    const int64_t n = common_size(alpha, beta, gamma, "kron_via_tables");
    const int ell = common_length(alpha, beta, gamma);
    if (ell == 0) return 1;
    check_tables_length(ell);

    const auto& ta = signed_marginals(alpha, ell);
    const auto& tb = signed_marginals(beta, ell);
    const auto& tc = signed_marginals(gamma, ell);
    const auto terms = combine_terms(ta, tb, tc);
    TableCounter& counter = global_table_counter();
    const bool parallel = n <= kron_settings().tables_parallel_max_n;

    BigInt result = 0;
#pragma omp parallel if (parallel)
    {
        BigInt local = 0;
#pragma omp for schedule(dynamic) nowait
        for (long i = 0; i < static_cast<long>(terms.size()); ++i) {
            const TripleTerm& t = terms[static_cast<size_t>(i)];
            const BigInt weight = t.even - t.odd;
            if (weight == 0) continue;
            BigInt tables = counter.count(Marginals{*t.a, *t.b, *t.c});
            if (tables != 0) local += tables * weight;
        }
#pragma omp critical(kron_tables_sum)
        result += local;
    }

    if (result < 0) {
        throw internal_error("kron_via_tables: negative result for (" + alpha.str() + ";" +
                             beta.str() + ";" + gamma.str() + ")");
    }
    return result;
}

BigCount kron_via_tables_reference(const Partition& alpha, const Partition& beta,
                                   const Partition& gamma) {
    common_size(alpha, beta, gamma, "kron_via_tables_reference");
    const int ell = common_length(alpha, beta, gamma);
    if (ell == 0) return 1;
    check_tables_length(ell);

    // unaggregated: every surviving permutation triple contributes one term
    struct SignedMarg {
        std::vector<int64_t> marg;
        int sign;
    };
    auto expand = [ell](const Partition& p) {
        std::vector<SignedMarg> out;
        std::vector<int> perm(static_cast<size_t>(ell));
        std::iota(perm.begin(), perm.end(), 1);
        do {
            std::vector<int64_t> marg(static_cast<size_t>(ell));
            bool ok = true;
            for (int i = 0; i < ell; ++i) {
                marg[static_cast<size_t>(i)] =
                    p.part(i) + perm[static_cast<size_t>(i)] - (i + 1);
                if (marg[static_cast<size_t>(i)] < 0) {
                    ok = false;
                    break;
                }
            }
            if (ok) out.push_back(SignedMarg{std::move(marg), parity(perm)});
        } while (std::next_permutation(perm.begin(), perm.end()));
        return out;
    };

    const auto sa = expand(alpha);
    const auto sb = expand(beta);
    const auto sc = expand(gamma);
    TableCounter& counter = global_table_counter();

    BigInt result = 0;
    for (const auto& a : sa) {
        for (const auto& b : sb) {
            for (const auto& c : sc) {
                BigInt term = counter.count(Marginals{a.marg, b.marg, c.marg});
                if (a.sign * b.sign * c.sign < 0) {
                    result -= term;
                } else {
                    result += term;
                }
            }
        }
    }
    if (result < 0) {
        throw internal_error("kron_via_tables_reference: negative result");
    }
    return result;
}

GappPair gapp_decomposition(const Partition& alpha, const Partition& beta,
                            const Partition& gamma) {
    const int64_t n = common_size(alpha, beta, gamma, "gapp_decomposition");
    const int ell = common_length(alpha, beta, gamma);
    if (ell == 0) return GappPair{1, 0};
    check_tables_length(ell);

    const auto& ta = signed_marginals(alpha, ell);
    const auto& tb = signed_marginals(beta, ell);
    const auto& tc = signed_marginals(gamma, ell);
    const auto terms = combine_terms(ta, tb, tc);
    TableCounter& counter = global_table_counter();
    const bool parallel = n <= kron_settings().tables_parallel_max_n;

    BigCount pos = 0, neg = 0;
#pragma omp parallel if (parallel)
    {
        BigCount lpos = 0, lneg = 0;
#pragma omp for schedule(dynamic) nowait
        for (long i = 0; i < static_cast<long>(terms.size()); ++i) {
            const TripleTerm& t = terms[static_cast<size_t>(i)];
            BigInt tables = counter.count(Marginals{*t.a, *t.b, *t.c});
            if (tables == 0) continue;
            lpos += t.even * tables;
            lneg += t.odd * tables;
        }
#pragma omp critical(kron_gapp_sum)
        {
            pos += lpos;
            neg += lneg;
        }
    }
    return GappPair{pos, neg};
}

namespace {

std::string reduction_certificate(const Reduced& red, const Partition& theta) {
    std::ostringstream out;
    out << "t=" << red.t << " ell=" << red.ell << " omega=" << red.omega.str()
        << " rho=" << red.rho.str() << " I=";
    for (size_t i = 0; i < red.index_set.size(); ++i) {
        if (i) out << ',';
        out << red.index_set[i];
    }
    out << " theta=" << theta.str();
    return out.str();
}

} // namespace

Partition apply_reduction_map(const Reduced& red, const Partition& theta) {
    const int ell = red.ell;
    if (theta.length() > ell) {
        throw input_error("apply_reduction_map: theta has more than ell parts");
    }
    for (int i = 0; i < ell; ++i) {
        if (static_cast<int64_t>(theta.part(i)) + red.t < red.rho.part(i)) {
            throw input_error("apply_reduction_map: rho not contained in theta + t^ell");
        }
    }
    const auto& index_set = red.index_set; // ascending, ends with ell+1
    const int interior = static_cast<int>(index_set.size()) - 1;
    std::vector<int> parts(static_cast<size_t>(ell));
    for (int j = 1; j <= ell; ++j) {
        const auto it = std::lower_bound(index_set.begin(), index_set.end(), j);
        const int ij = *it;
        const int ind = (ij == ell + 1)
                            ? 1
                            : interior - static_cast<int>(it - index_set.begin());
        const int64_t value = static_cast<int64_t>(theta.part(j - 1)) -
                              red.rho.part(ij - 1) + red.t * (ell - ij + ind);
        if (value < 0 || (j > 1 && value > parts[static_cast<size_t>(j - 2)])) {
            throw internal_error("reduction map produced a non-partition (" +
                                 reduction_certificate(red, theta) + ")");
        }
        parts[static_cast<size_t>(j - 1)] = static_cast<int>(value);
    }
    return Partition(std::move(parts));
}

ReductionOutcome reduce(const Partition& lambda, const Partition& mu, const Partition& nu) {
    const int64_t n = common_size(lambda, mu, nu, "reduce");
    const int ell = common_length(lambda, mu, nu);
    const int64_t t = n - nu.part(0);

    for (int i = 0; i < ell; ++i) {
        if (std::abs(static_cast<int64_t>(lambda.part(i)) - mu.part(i)) > t) {
            return ReductionOutcome{ProvablyZero{i + 1}};
        }
    }

    Reduced red;
    red.t = t;
    red.ell = ell;
    red.omega = union_of(lambda, mu);
    red.rho = intersect_of(lambda, mu);
    for (int i = 1; i <= ell; ++i) {
        if (red.rho.part(i - 1) >= static_cast<int64_t>(red.omega.part(i)) + t) {
            red.index_set.push_back(i);
        }
    }
    red.index_set.push_back(ell + 1);

    red.phi_lambda = apply_reduction_map(red, lambda);
    red.phi_mu = apply_reduction_map(red, mu);
    const int64_t r = red.phi_lambda.size();
    if (red.phi_mu.size() != r) {
        throw internal_error("reduce: |phi(lambda)| != |phi(mu)| (" +
                             reduction_certificate(red, lambda) + ")");
    }
    if (r - t < nu.part(1)) {
        throw internal_error("reduce: phi(nu) is not a partition (" +
                             reduction_certificate(red, nu) + ")");
    }
    std::vector<int> nu_parts;
    nu_parts.push_back(static_cast<int>(r - t));
    for (int i = 1; i < nu.length(); ++i) nu_parts.push_back(nu.part(i));
    red.phi_nu = Partition(std::move(nu_parts));
    if (red.phi_nu.size() != r) {
        throw internal_error("reduce: |phi(nu)| != |phi(lambda)| (" +
                             reduction_certificate(red, nu) + ")");
    }
    if (r > 2 * t * static_cast<int64_t>(ell) * ell) {
        throw internal_error("reduce: reduced size exceeds 2*t*ell^2 (" +
                             reduction_certificate(red, lambda) + ")");
    }
    return ReductionOutcome{std::move(red)};
}

bool dvir_vanishing(const Partition& lambda, const Partition& mu, const Partition& nu) {
    common_size(lambda, mu, nu, "dvir_vanishing");
    const int64_t a = lambda.length(), b = mu.length(), c = nu.length();
    return a * b < c || a * c < b || b * c < a;
}

BigCount compute(const Partition& lambda, const Partition& mu, const Partition& nu,
                 Method method) {
    const int64_t n = common_size(lambda, mu, nu, "compute");
    if (n == 0) return 1;
    switch (method) {
    case Method::oracle:
        return kron_via_characters(lambda, mu, nu);
    case Method::tables:
        return kron_via_tables(lambda, mu, nu);
    case Method::automatic:
        break;
    }

    // designate as nu the partition with the smallest second part, so that
    // t = n - nu_1 is as small as the triple allows
    std::array<const Partition*, 3> roles{&lambda, &mu, &nu};
    size_t best = 0;
    for (size_t i = 1; i < 3; ++i) {
        if (roles[i]->part(1) < roles[best]->part(1)) best = i;
    }
    std::swap(roles[best], roles[2]);

    if (dvir_vanishing(*roles[0], *roles[1], *roles[2])) return 0;

    ReductionOutcome outcome = reduce(*roles[0], *roles[1], *roles[2]);
    if (outcome.provably_zero()) return 0;
    const Reduced& red = outcome.reduced();

    const KronSettings& cfg = kron_settings();
    const int red_len = common_length(red.phi_lambda, red.phi_mu, red.phi_nu);
    const int64_t red_n = red.phi_lambda.size();
    if (red_len >= cfg.oracle_fallback_min_len &&
        (red_n <= cfg.oracle_fallback_max_n || red_len > cfg.tables_max_len)) {
        return kron_via_characters(red.phi_lambda, red.phi_mu, red.phi_nu);
    }
    return kron_via_tables(red.phi_lambda, red.phi_mu, red.phi_nu);
}

BigCount reduced_kron(const Partition& lambda, const Partition& mu, const Partition& nu) {
    std::array<const Partition*, 3> bars{&lambda, &mu, &nu};
    std::sort(bars.begin(), bars.end(), [](const Partition* x, const Partition* y) {
        return x->size() > y->size(); // largest first
    });
    const Partition& lam = *bars[0];
    const Partition& med = *bars[1];
    const Partition& sml = *bars[2];

    int64_t n = std::max<int64_t>(lam.part(0), med.part(0)) + sml.size() + lam.size();
    n = std::max({n, lam.size() + lam.part(0), med.size() + med.part(0),
                  sml.size() + sml.part(0)});

    auto embed = [n](const Partition& bar) {
        std::vector<int> parts;
        parts.push_back(static_cast<int>(n - bar.size()));
        for (int p : bar.parts()) parts.push_back(p);
        return Partition(std::move(parts));
    };
    return compute(embed(lam), embed(med), embed(sml), Method::automatic);
}

} // namespace kroncoeff
