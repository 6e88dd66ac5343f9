#include "kroncoeff/verify.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdlib>
#include <functional>
#include <limits>
#include <map>
#include <mutex>
#include <random>
#include <sstream>

#include "kroncoeff/characters.hpp"
#include "kroncoeff/contingency.hpp"
#include "kroncoeff/errors.hpp"
#include "kroncoeff/hooks.hpp"
#include "kroncoeff/kron.hpp"
#include "kroncoeff/lr.hpp"
#include "kroncoeff/partition.hpp"

namespace kroncoeff {

namespace {

// keeps the failure with the smallest case index so the reported
// counterexample does not depend on the thread schedule
struct FirstFailure {
    std::mutex lock;
    bool failed = false;
    int64_t index = std::numeric_limits<int64_t>::max();
    std::string message;

    void record(int64_t idx, std::string msg) {
        std::lock_guard<std::mutex> guard(lock);
        if (!failed || idx < index) {
            failed = true;
            index = idx;
            message = std::move(msg);
        }
    }
};

SuiteResult finish(std::string name, int64_t cases, FirstFailure& fail) {
    SuiteResult out;
    out.name = std::move(name);
    out.cases = cases;
    out.passed = !fail.failed;
    out.counterexample = fail.message;
    return out;
}

std::vector<std::array<Partition, 3>> all_triples(int n) {
    const auto parts = partitions_of(n);
    std::vector<std::array<Partition, 3>> out;
    out.reserve(parts.size() * parts.size() * parts.size());
    for (const auto& a : parts) {
        for (const auto& b : parts) {
            for (const auto& c : parts) {
                out.push_back({a, b, c});
            }
        }
    }
    return out;
}

std::string triple_str(const Partition& a, const Partition& b, const Partition& c) {
    return "(" + a.str() + " ; " + b.str() + " ; " + c.str() + ")";
}

Partition hook_partition(int n, int k) {
    std::vector<int> parts;
    parts.push_back(n - k);
    for (int i = 0; i < k; ++i) parts.push_back(1);
    return Partition(std::move(parts));
}

std::vector<Partition> subpartitions(const Partition& outer) {
    std::vector<Partition> out;
    std::vector<int> acc;
    auto rec = [&](auto&& self, int row) -> void {
        out.emplace_back(acc);
        if (row == outer.length()) return;
        const int cap =
            std::min(outer.part(row), row > 0 ? acc[static_cast<size_t>(row - 1)]
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

SuiteResult suite_method_equivalence(int max_n) {
    FirstFailure fail;
    std::atomic<int64_t> cases{0};
    for (int n = 1; n <= max_n; ++n) {
        const auto triples = all_triples(n);
#pragma omp parallel for schedule(dynamic)
        for (long i = 0; i < static_cast<long>(triples.size()); ++i) {
            const auto& [a, b, c] = triples[static_cast<size_t>(i)];
            try {
                const BigCount byChars = kron_via_characters(a, b, c);
                const BigCount byTables = kron_via_tables(a, b, c);
                const BigCount byAuto = compute(a, b, c, Method::automatic);
                if (byTables != byChars) {
                    fail.record(n * 1000000L + i, "tables != oracle at " + triple_str(a, b, c) +
                                                      ": " + byTables.get_str() + " vs " +
                                                      byChars.get_str());
                } else if (byAuto != byChars) {
                    fail.record(n * 1000000L + i, "auto != oracle at " + triple_str(a, b, c) +
                                                      ": " + byAuto.get_str() + " vs " +
                                                      byChars.get_str());
                }
                cases += 2;
            } catch (const std::exception& e) {
                fail.record(n * 1000000L + i, std::string("exception at ") +
                                                  triple_str(a, b, c) + ": " + e.what());
            }
        }
    }
    return finish("method-equivalence", cases, fail);
}

SuiteResult suite_s3_symmetry(int max_n) {
    FirstFailure fail;
    std::atomic<int64_t> cases{0};
    for (int n = 1; n <= max_n; ++n) {
        const auto parts = partitions_of(n);
        std::vector<std::array<Partition, 3>> triples;
        for (size_t x = 0; x < parts.size(); ++x) {
            for (size_t y = x; y < parts.size(); ++y) {
                for (size_t z = y; z < parts.size(); ++z) {
                    triples.push_back({parts[x], parts[y], parts[z]});
                }
            }
        }
#pragma omp parallel for schedule(dynamic)
        for (long i = 0; i < static_cast<long>(triples.size()); ++i) {
            const auto& [a, b, c] = triples[static_cast<size_t>(i)];
            try {
                const BigCount expected = kron_via_characters(a, b, c);
                const std::array<std::array<const Partition*, 3>, 6> orders{{
                    {&a, &b, &c}, {&a, &c, &b}, {&b, &a, &c},
                    {&b, &c, &a}, {&c, &a, &b}, {&c, &b, &a},
                }};
                for (const auto& ord : orders) {
                    if (compute(*ord[0], *ord[1], *ord[2], Method::automatic) != expected) {
                        fail.record(n * 1000000L + i,
                                    "pipeline breaks role symmetry at " +
                                        triple_str(*ord[0], *ord[1], *ord[2]));
                        break;
                    }
                }
                cases += 6;
            } catch (const std::exception& e) {
                fail.record(n * 1000000L + i, std::string("exception at ") +
                                                  triple_str(a, b, c) + ": " + e.what());
            }
        }
    }
    return finish("s3-symmetry", cases, fail);
}

SuiteResult suite_conjugation_symmetry(int max_n) {
    FirstFailure fail;
    std::atomic<int64_t> cases{0};
    for (int n = 1; n <= max_n; ++n) {
        const auto triples = all_triples(n);
#pragma omp parallel for schedule(dynamic)
        for (long i = 0; i < static_cast<long>(triples.size()); ++i) {
            const auto& [a, b, c] = triples[static_cast<size_t>(i)];
            try {
                const BigCount g = kron_via_characters(a, b, c);
                const Partition ac = conjugate(a), bc = conjugate(b), cc = conjugate(c);
                if (kron_via_characters(ac, bc, c) != g ||
                    kron_via_characters(ac, b, cc) != g ||
                    kron_via_characters(a, bc, cc) != g) {
                    fail.record(n * 1000000L + i,
                                "conjugation symmetry fails at " + triple_str(a, b, c));
                }
                cases += 3;
            } catch (const std::exception& e) {
                fail.record(n * 1000000L + i, std::string("exception at ") +
                                                  triple_str(a, b, c) + ": " + e.what());
            }
        }
    }
    return finish("conjugation-symmetry", cases, fail);
}

SuiteResult suite_gapp(int max_n) {
    FirstFailure fail;
    std::atomic<int64_t> cases{0};
    for (int n = 1; n <= max_n; ++n) {
        const auto triples = all_triples(n);
#pragma omp parallel for schedule(dynamic)
        for (long i = 0; i < static_cast<long>(triples.size()); ++i) {
            const auto& [a, b, c] = triples[static_cast<size_t>(i)];
            try {
                const GappPair gp = gapp_decomposition(a, b, c);
                if (gp.pos < 0 || gp.neg < 0 ||
                    gp.pos - gp.neg != kron_via_characters(a, b, c)) {
                    fail.record(n * 1000000L + i,
                                "gapp decomposition fails at " + triple_str(a, b, c) +
                                    ": pos=" + gp.pos.get_str() + " neg=" + gp.neg.get_str());
                }
                cases += 1;
            } catch (const std::exception& e) {
                fail.record(n * 1000000L + i, std::string("exception at ") +
                                                  triple_str(a, b, c) + ": " + e.what());
            }
        }
    }
    return finish("gapp-decomposition", cases, fail);
}

SuiteResult suite_reduction(int max_n) {
    FirstFailure fail;
    std::atomic<int64_t> cases{0};
    for (int n = 1; n <= max_n; ++n) {
        const auto parts = partitions_of(n);
        std::vector<std::array<Partition, 3>> triples;
        for (const auto& nu : parts) {
            if (2 * nu.part(0) < n) continue;
            for (const auto& lam : parts) {
                for (const auto& mu : parts) {
                    triples.push_back({lam, mu, nu});
                }
            }
        }
#pragma omp parallel for schedule(dynamic)
        for (long i = 0; i < static_cast<long>(triples.size()); ++i) {
            const auto& [lam, mu, nu] = triples[static_cast<size_t>(i)];
            try {
                const ReductionOutcome out = reduce(lam, mu, nu);
                const BigCount g = kron_via_characters(lam, mu, nu);
                if (out.provably_zero()) {
                    if (g != 0) {
                        fail.record(n * 1000000L + i,
                                    "reduce claims zero but g != 0 at " +
                                        triple_str(lam, mu, nu));
                    }
                } else {
                    const Reduced& red = out.reduced();
                    const int64_t r = red.phi_lambda.size();
                    const int64_t bound =
                        2 * red.t * static_cast<int64_t>(red.ell) * red.ell;
                    if (red.phi_mu.size() != r || red.phi_nu.size() != r || r > bound) {
                        fail.record(n * 1000000L + i,
                                    "reduced sizes broken at " + triple_str(lam, mu, nu));
                    } else if (kron_via_characters(red.phi_lambda, red.phi_mu,
                                                   red.phi_nu) != g) {
                        fail.record(n * 1000000L + i,
                                    "g changed under reduction at " +
                                        triple_str(lam, mu, nu) + " -> " +
                                        triple_str(red.phi_lambda, red.phi_mu, red.phi_nu));
                    }
                }
                cases += 1;
            } catch (const std::exception& e) {
                fail.record(n * 1000000L + i, std::string("exception at ") +
                                                  triple_str(lam, mu, nu) + ": " + e.what());
            }
        }
    }
    return finish("reduction-map", cases, fail);
}

SuiteResult suite_two_row(int max_n) {
    FirstFailure fail;
    std::atomic<int64_t> cases{0};
    for (int n = 1; n <= max_n; ++n) {
        const auto parts = partitions_of(n);
        for (int k = 0; 2 * k <= n; ++k) {
            const Partition lambda = k == 0 ? Partition{n} : Partition{n - k, k};
#pragma omp parallel for schedule(dynamic)
            for (long i = 0; i < static_cast<long>(parts.size()); ++i) {
                const Partition& nu = parts[static_cast<size_t>(i)];
                try {
                    if (chi_two_row(n, k, nu) != chi(lambda, nu)) {
                        fail.record(n * 1000000L + k * 10000L + i,
                                    "two-row formula fails at lambda=" + lambda.str() +
                                        " nu=" + nu.str());
                    }
                    cases += 1;
                } catch (const std::exception& e) {
                    fail.record(n * 1000000L + k * 10000L + i,
                                std::string("exception at nu=") + nu.str() + ": " + e.what());
                }
            }
        }
    }
    return finish("two-row-characters", cases, fail);
}

SuiteResult suite_hook_rule(int max_n) {
    FirstFailure fail;
    std::atomic<int64_t> cases{0};

    // reading word of the running example; rejected exactly at prefix 112133
    const std::vector<int> figure_word{1, 1, 2, 1, 3, 3, 1, 1, 4, 2, 2,
                                       2, 3, 3, 2, 1, 3, 4, 1, 2, 4, 5};
    if (is_ballot(figure_word)) {
        fail.record(0, "figure word unexpectedly ballot");
    }
    if (is_ballot(std::vector<int>(figure_word.begin(), figure_word.begin() + 6))) {
        fail.record(0, "prefix 112133 unexpectedly ballot");
    }
    if (!is_ballot(std::vector<int>(figure_word.begin(), figure_word.begin() + 5))) {
        fail.record(0, "prefix 11213 unexpectedly rejected");
    }
    cases += 3;

    for (int n = 1; n <= max_n; ++n) {
        const auto parts = partitions_of(n);
        std::vector<std::array<Partition, 2>> pairs;
        for (const auto& lam : parts) {
            for (const auto& mu : parts) pairs.push_back({lam, mu});
        }
        for (int k = 0; k < n; ++k) {
#pragma omp parallel for schedule(dynamic)
            for (long i = 0; i < static_cast<long>(pairs.size()); ++i) {
                const auto& [lam, mu] = pairs[static_cast<size_t>(i)];
                try {
                    const BigCount byRule = count_hook_kron(lam, mu, k);
                    const BigCount byChars =
                        kron_via_characters(lam, mu, hook_partition(n, k));
                    if (byRule != byChars) {
                        fail.record(n * 10000000L + k * 100000L + i,
                                    "hook rule fails at lambda=" + lam.str() + " mu=" +
                                        mu.str() + " k=" + std::to_string(k) + ": " +
                                        byRule.get_str() + " vs " + byChars.get_str());
                    }
                    cases += 1;
                } catch (const std::exception& e) {
                    fail.record(n * 10000000L + k * 100000L + i,
                                std::string("exception at lambda=") + lam.str() +
                                    " mu=" + mu.str() + " k=" + std::to_string(k) + ": " +
                                    e.what());
                }
            }
        }
    }
    return finish("hook-rule", cases, fail);
}

namespace {

void enumerate_small_barred(const Partition& shape, int max_value,
                            const std::function<void(const BarredTableau&)>& fn) {
    std::vector<std::vector<Entry>> rows(static_cast<size_t>(shape.length()));
    for (int r = 0; r < shape.length(); ++r) {
        rows[static_cast<size_t>(r)].resize(static_cast<size_t>(shape.part(r)));
    }
    auto fits = [&](int r, int c, const Entry& e) {
        if (c > 0) {
            const Entry& left = rows[static_cast<size_t>(r)][static_cast<size_t>(c - 1)];
            if (small_barred_key(left) > small_barred_key(e)) return false;
            if (left == e && e.barred) return false;
        }
        if (r > 0 && c < shape.part(r - 1)) {
            const Entry& above = rows[static_cast<size_t>(r - 1)][static_cast<size_t>(c)];
            if (small_barred_key(above) > small_barred_key(e)) return false;
            if (above == e && !e.barred) return false;
        }
        return true;
    };
    auto rec = [&](auto&& self, int r, int c) -> void {
        if (r == shape.length()) {
            fn(BarredTableau{shape, rows, OrderMode::small_barred});
            return;
        }
        if (c == shape.part(r)) {
            self(self, r + 1, 0);
            return;
        }
        // alphabet in small-barred order: 1', 2', ..., then 1, 2, ...
        for (int pass = 0; pass < 2; ++pass) {
            for (int v = 1; v <= max_value; ++v) {
                const Entry e{v, pass == 0};
                if (!fits(r, c, e)) continue;
                rows[static_cast<size_t>(r)][static_cast<size_t>(c)] = e;
                self(self, r, c + 1);
            }
        }
    };
    rec(rec, 0, 0);
}

} // namespace

SuiteResult suite_switching(int max_shape) {
    FirstFailure fail;
    std::atomic<int64_t> cases{0};
    std::vector<Partition> shapes;
    for (int m = 1; m <= max_shape; ++m) {
        for (const auto& shape : partitions_of(m)) shapes.push_back(shape);
    }
#pragma omp parallel for schedule(dynamic)
    for (long si = 0; si < static_cast<long>(shapes.size()); ++si) {
        const Partition& shape = shapes[static_cast<size_t>(si)];
        const int m = static_cast<int>(shape.size());
        std::map<std::string, std::string> image; // switched -> input
        int64_t local_cases = 0;
        try {
            enumerate_small_barred(shape, m, [&](const BarredTableau& t) {
                const BarredTableau fast = tableau_switch(t);
                const BarredTableau slow = tableau_switch_naive(t);
                if (fast.rows != slow.rows) {
                    fail.record(si * 1000000L + local_cases,
                                "accelerated != naive switch for " + t.str());
                    return;
                }
                if (fast.shape != t.shape || fast.content() != t.content() ||
                    fast.barred_count() != t.barred_count()) {
                    fail.record(si * 1000000L + local_cases,
                                "switch broke shape or content for " + t.str());
                    return;
                }
                auto [it, fresh] = image.emplace(fast.str(), t.str());
                if (!fresh) {
                    fail.record(si * 1000000L + local_cases,
                                "switch not injective: " + it->second + " and " + t.str() +
                                    " both map to " + fast.str());
                }
                ++local_cases;
            });
        } catch (const std::exception& e) {
            fail.record(si * 1000000L, std::string("exception on shape ") + shape.str() +
                                           ": " + e.what());
        }
        cases += local_cases;
    }
    return finish("tableau-switching", cases, fail);
}

namespace {

BigCount brute_2d(const std::vector<int64_t>& r, const std::vector<int64_t>& s) {
    std::vector<int64_t> rs = r, cs = s;
    BigCount count = 0;
    const int rows = static_cast<int>(r.size());
    const int cols = static_cast<int>(s.size());
    auto rec = [&](auto&& self, int idx) -> void {
        if (idx == rows * cols) {
            if (std::all_of(rs.begin(), rs.end(), [](int64_t x) { return x == 0; })) {
                count += 1;
            }
            return;
        }
        const int i = idx / cols;
        const int j = idx % cols;
        const int64_t hi = std::min(rs[static_cast<size_t>(i)], cs[static_cast<size_t>(j)]);
        const int64_t lo = (j == cols - 1) ? rs[static_cast<size_t>(i)] : 0;
        for (int64_t v = lo; v <= hi; ++v) {
            rs[static_cast<size_t>(i)] -= v;
            cs[static_cast<size_t>(j)] -= v;
            self(self, idx + 1);
            rs[static_cast<size_t>(i)] += v;
            cs[static_cast<size_t>(j)] += v;
        }
    };
    rec(rec, 0);
    return count;
}

} // namespace

SuiteResult suite_contingency(int max_len, int max_entry) {
    FirstFailure fail;
    std::atomic<int64_t> cases{0};
    for (int len = 1; len <= max_len; ++len) {
        // every vector of this length with entries 0..max_entry, keyed by sum
        std::vector<std::vector<int64_t>> vecs;
        std::vector<int64_t> acc(static_cast<size_t>(len), 0);
        auto gen = [&](auto&& self, int idx) -> void {
            if (idx == len) {
                vecs.push_back(acc);
                return;
            }
            for (int64_t v = 0; v <= max_entry; ++v) {
                acc[static_cast<size_t>(idx)] = v;
                self(self, idx + 1);
            }
        };
        gen(gen, 0);
        std::map<int64_t, std::vector<const std::vector<int64_t>*>> by_sum;
        for (const auto& v : vecs) {
            by_sum[std::accumulate(v.begin(), v.end(), int64_t{0})].push_back(&v);
        }

        std::vector<std::array<const std::vector<int64_t>*, 3>> triples;
        for (const auto& [sum, group] : by_sum) {
            for (const auto* a : group) {
                for (const auto* b : group) {
                    for (const auto* c : group) triples.push_back({a, b, c});
                }
            }
        }

#pragma omp parallel for schedule(dynamic)
        for (long i = 0; i < static_cast<long>(triples.size()); ++i) {
            const auto& [a, b, c] = triples[static_cast<size_t>(i)];
            try {
                auto vec_str = [](const std::vector<int64_t>& v) {
                    std::string s;
                    for (size_t j = 0; j < v.size(); ++j) {
                        if (j) s += ',';
                        s += std::to_string(v[j]);
                    }
                    return s;
                };
                const Marginals m{*a, *b, *c};
                const BigCount dp = count_tables(m);
                const BigCount slow = count_tables_naive(m);
                if (dp != slow) {
                    fail.record(len * 10000000L + i,
                                "dp != naive for a=" + vec_str(*a) + " b=" + vec_str(*b) +
                                    " c=" + vec_str(*c) + ": " + dp.get_str() + " vs " +
                                    slow.get_str());
                }
                if (dp != count_tables(Marginals{*b, *c, *a}) ||
                    dp != count_tables(Marginals{*c, *a, *b}) ||
                    dp != count_tables(Marginals{*b, *a, *c})) {
                    fail.record(len * 10000000L + i, "role permutation symmetry broken");
                }
                if (dp == 0) {
                    fail.record(len * 10000000L + i, "support positivity broken");
                }
                cases += 1;
            } catch (const std::exception& e) {
                fail.record(len * 10000000L + i, std::string("exception: ") + e.what());
            }
        }

        // collapsing one direction reduces to the 2-d count
        for (const auto& [sum, group] : by_sum) {
            for (const auto* a : group) {
                for (const auto* b : group) {
                    std::vector<int64_t> c(static_cast<size_t>(len), 0);
                    c[0] = sum;
                    const BigCount dp = count_tables(Marginals{*a, *b, c});
                    if (dp != brute_2d(*a, *b)) {
                        fail.record(0, "2-d reduction mismatch");
                    }
                    cases += 1;
                }
            }
        }
    }
    return finish("contingency-counts", cases, fail);
}

SuiteResult suite_example_replay() {
    FirstFailure fail;
    int64_t cases = 0;
    try {
        const Partition lam{19, 15, 12, 5, 1};
        const Partition mu{16, 16, 14, 3, 3};
        const Partition nu{49, 2, 1}; // any nu of 52 with first part 49 gives t = 3
        const ReductionOutcome out = reduce(lam, mu, nu);
        auto expect = [&](bool ok, const std::string& what) {
            ++cases;
            if (!ok) fail.record(cases, what);
        };
        expect(!out.provably_zero(), "reduction unexpectedly vanished");
        if (!out.provably_zero()) {
            const Reduced& red = out.reduced();
            expect(red.t == 3, "t != 3");
            expect(red.omega == Partition({19, 16, 14, 5, 3}), "omega mismatch");
            expect(red.rho == Partition({16, 15, 12, 3, 1}), "rho mismatch");
            expect(red.index_set == std::vector<int>({3, 6}), "index set != {3,6}");
            expect(apply_reduction_map(red, red.omega) == Partition({16, 13, 11, 5, 3}),
                   "phi(omega) mismatch");
            expect(apply_reduction_map(red, red.rho) == Partition({13, 12, 9, 3, 1}),
                   "phi(rho) mismatch");
            expect(apply_reduction_map(red, Partition({14, 14, 10, 2})) ==
                       Partition({11, 11, 7, 2}),
                   "phi(theta) mismatch");
            expect(red.phi_lambda == Partition({16, 12, 9, 5, 1}), "phi(lambda) mismatch");
            expect(red.phi_mu == Partition({13, 13, 11, 3, 3}), "phi(mu) mismatch");
            expect(red.phi_nu == Partition({40, 2, 1}), "phi(nu) mismatch");
        }
    } catch (const std::exception& e) {
        fail.record(0, std::string("exception: ") + e.what());
    }
    return finish("reduction-example-replay", cases, fail);
}

SuiteResult suite_lr(int max_size) {
    FirstFailure fail;
    std::atomic<int64_t> cases{0};
    std::vector<std::array<Partition, 3>> triples;
    for (int m = 1; m <= max_size; ++m) {
        for (const Partition& lam : partitions_of(m)) {
            for (const Partition& mu : subpartitions(lam)) {
                for (const Partition& nu : partitions_of(m - mu.size())) {
                    triples.push_back({lam, mu, nu});
                }
            }
        }
    }
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < static_cast<long>(triples.size()); ++i) {
        const auto& [lam, mu, nu] = triples[static_cast<size_t>(i)];
        try {
            const BigCount direct = lr_coefficient(lam, mu, nu);
            if (lr_coefficient(lam, nu, mu) != direct) {
                fail.record(i, "LR symmetry fails at " + triple_str(lam, mu, nu));
            }
            if (lr_via_reduction(lam, mu, nu) != direct) {
                fail.record(i, "LR via reduction fails at " + triple_str(lam, mu, nu));
            }
            const int64_t n =
                std::max<int64_t>(lam.part(0), mu.part(0)) + nu.size() + lam.size();
            if (murnaghan_embedding(lam, mu, nu, n) != direct) {
                fail.record(i, "Murnaghan embedding fails at " + triple_str(lam, mu, nu));
            }
            if (reduced_kron(lam, mu, nu) != direct) {
                fail.record(i, "reduced Kronecker < LR fails at " + triple_str(lam, mu, nu));
            }
            cases += 4;
        } catch (const std::exception& e) {
            fail.record(i, std::string("exception at ") + triple_str(lam, mu, nu) + ": " +
                               e.what());
        }
    }

    // Pieri: adding one horizontal strip hits each target exactly once
    for (int r = 0; r <= std::min(3, max_size); ++r) {
        for (const Partition& pi : partitions_of(r)) {
            for (int s = 0; s <= std::min<int64_t>(4, max_size); ++s) {
                const auto expanded = pieri_expand(s, pi);
                const Partition strip = s == 0 ? Partition{} : Partition{s};
                for (const Partition& eta : partitions_of(r + s)) {
                    const bool inside =
                        std::find(expanded.begin(), expanded.end(), eta) != expanded.end();
                    const BigCount c = lr_coefficient(eta, strip, pi);
                    if (c != (inside ? 1 : 0)) {
                        fail.record(0, "Pieri consistency fails at eta=" + eta.str() +
                                           " pi=" + pi.str() + " s=" + std::to_string(s));
                    }
                    cases += 1;
                }
            }
        }
    }
    return finish("littlewood-richardson", cases, fail);
}

SuiteResult suite_stabilization(int max_size) {
    FirstFailure fail;
    std::atomic<int64_t> cases{0};
    std::vector<Partition> small;
    for (int m = 0; m <= max_size; ++m) {
        for (const Partition& p : partitions_of(m)) small.push_back(p);
    }
    std::vector<std::array<Partition, 3>> triples;
    for (size_t x = 0; x < small.size(); ++x) {
        for (size_t y = x; y < small.size(); ++y) {
            for (size_t z = y; z < small.size(); ++z) {
                triples.push_back({small[x], small[y], small[z]});
            }
        }
    }
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < static_cast<long>(triples.size()); ++i) {
        auto [lam, mu, nu] = triples[static_cast<size_t>(i)];
        try {
            // order roles as reduced_kron does: largest size first
            std::array<Partition*, 3> roles{&lam, &mu, &nu};
            std::sort(roles.begin(), roles.end(),
                      [](Partition* a, Partition* b) { return a->size() > b->size(); });
            const int64_t bound = std::max<int64_t>(roles[0]->part(0), roles[1]->part(0)) +
                                  roles[2]->size() + roles[0]->size();
            const BigCount stable = reduced_kron(lam, mu, nu);
            for (int64_t n = bound; n <= bound + 3; ++n) {
                auto embed = [n](const Partition& p) {
                    std::vector<int> parts;
                    parts.push_back(static_cast<int>(n - p.size()));
                    for (int x : p.parts()) parts.push_back(x);
                    return Partition(std::move(parts));
                };
                if (compute(embed(*roles[0]), embed(*roles[1]), embed(*roles[2]),
                            Method::automatic) != stable) {
                    fail.record(i, "stabilization fails at " + triple_str(lam, mu, nu) +
                                       " n=" + std::to_string(n));
                    break;
                }
                cases += 1;
            }
        } catch (const std::exception& e) {
            fail.record(i, std::string("exception at ") + triple_str(lam, mu, nu) + ": " +
                               e.what());
        }
    }
    return finish("reduced-kron-stabilization", cases, fail);
}

SuiteResult suite_semigroup(int pairs, int max_n) {
    FirstFailure fail;
    int64_t cases = 0;
    if (max_n < 1) return finish("semigroup-property", cases, fail);

    std::mt19937 rng(20240801u);
    auto positive_triple = [&]() {
        while (true) {
            const int n = 1 + static_cast<int>(rng() % static_cast<unsigned>(max_n));
            const auto parts = partitions_of(n);
            const auto pick = [&]() { return parts[rng() % parts.size()]; };
            const Partition a = pick(), b = pick(), c = pick();
            if (kron_via_characters(a, b, c) > 0) return std::array<Partition, 3>{a, b, c};
        }
    };

    for (int i = 0; i < pairs; ++i) {
        const auto t1 = positive_triple();
        const auto t2 = positive_triple();
        try {
            const Partition sl = add(t1[0], t2[0]);
            const Partition sm = add(t1[1], t2[1]);
            const Partition sn = add(t1[2], t2[2]);
            if (compute(sl, sm, sn, Method::automatic) == 0) {
                fail.record(i, "semigroup property fails: " + triple_str(t1[0], t1[1], t1[2]) +
                                   " + " + triple_str(t2[0], t2[1], t2[2]));
            }
            ++cases;
        } catch (const std::exception& e) {
            fail.record(i, std::string("exception: ") + e.what());
        }
    }
    return finish("semigroup-property", cases, fail);
}

SuiteResult suite_littlewood(int max_n, int max_r) {
    FirstFailure fail;
    std::atomic<int64_t> cases{0};
    for (int n = 1; n <= max_n; ++n) {
        const auto parts = partitions_of(n);
        for (int r = 0; r <= std::min(max_r, n); ++r) {
            const auto alphas = partitions_of(n - r);
            const auto betas = partitions_of(r);
            for (const Partition& pi : betas) {
                std::vector<std::array<const Partition*, 2>> pairs;
                for (const auto& lam : parts) {
                    for (const auto& mu : parts) pairs.push_back({&lam, &mu});
                }
#pragma omp parallel for schedule(dynamic)
                for (long i = 0; i < static_cast<long>(pairs.size()); ++i) {
                    const Partition& lam = *pairs[static_cast<size_t>(i)][0];
                    const Partition& mu = *pairs[static_cast<size_t>(i)][1];
                    try {
                        BigInt lhs = 0;
                        for (const Partition& alpha : alphas) {
                            for (const Partition& beta : betas) {
                                const BigCount cl = lr_coefficient(lam, alpha, beta);
                                if (cl == 0) continue;
                                for (const Partition& gamma : betas) {
                                    const BigCount cm = lr_coefficient(mu, alpha, gamma);
                                    if (cm == 0) continue;
                                    lhs += cl * cm * kron_via_characters(beta, pi, gamma);
                                }
                            }
                        }
                        BigInt rhs = 0;
                        for (const Partition& eta : pieri_expand(n - r, pi)) {
                            rhs += kron_via_characters(lam, mu, eta);
                        }
                        if (lhs != rhs) {
                            fail.record(n * 1000000L + i,
                                        "cross identity fails at lambda=" + lam.str() +
                                            " mu=" + mu.str() + " pi=" + pi.str() + ": " +
                                            lhs.get_str() + " vs " + rhs.get_str());
                        }
                        cases += 1;
                    } catch (const std::exception& e) {
                        fail.record(n * 1000000L + i, std::string("exception: ") + e.what());
                    }
                }
            }
        }
    }
    return finish("littlewood-cross-identity", cases, fail);
}

std::vector<SuiteResult> run_verify(int max_n) {
    std::vector<SuiteResult> out;
    out.push_back(suite_method_equivalence(std::min(max_n, 7)));
    out.push_back(suite_s3_symmetry(std::min(max_n, 7)));
    out.push_back(suite_conjugation_symmetry(std::min(max_n, 7)));
    out.push_back(suite_gapp(std::min(max_n, 6)));
    out.push_back(suite_reduction(std::min(max_n, 10)));
    out.push_back(suite_two_row(std::min(max_n, 10)));
    out.push_back(suite_hook_rule(std::min(max_n, 8)));
    out.push_back(suite_switching(std::min(max_n, 6)));
    out.push_back(suite_contingency(3, std::min(max_n, 4)));
    out.push_back(suite_example_replay());
    out.push_back(suite_lr(std::min(max_n, 6)));
    out.push_back(suite_stabilization(std::min(max_n, 4)));
    out.push_back(suite_semigroup(200, std::min(max_n, 6)));
    out.push_back(suite_littlewood(std::min(max_n, 6), 2));
    return out;
}

} // namespace kroncoeff
