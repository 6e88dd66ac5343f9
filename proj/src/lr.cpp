#include "kroncoeff/lr.hpp"

#include <algorithm>
#include <cstdlib>

#include "kroncoeff/errors.hpp"
#include "kroncoeff/hooks.hpp"
#include "kroncoeff/kron.hpp"

namespace kroncoeff {

SkewShape make_skew(Partition outer, Partition inner) {
    if (!contains(outer, inner)) {
        throw input_error("make_skew: inner shape not contained in outer shape");
    }
    return SkewShape{std::move(outer), std::move(inner)};
}

namespace {

// Backtracks over semistandard fillings of outer/inner with content bounded
// by target; complete fillings with ballot reverse reading word are counted.
struct SkewCounter {
    const Partition& outer;
    const Partition& inner;
    const Partition& target;
    std::vector<std::vector<int>> grid;
    std::vector<int> remaining;
    BigCount found = 0;

    SkewCounter(const Partition& o, const Partition& i, const Partition& t)
        : outer(o), inner(i), target(t) {
        grid.resize(static_cast<size_t>(o.length()));
        for (int r = 0; r < o.length(); ++r) {
            grid[static_cast<size_t>(r)].assign(static_cast<size_t>(o.part(r)), 0);
        }
        remaining.assign(t.parts().begin(), t.parts().end());
    }

    void run() { fill(0, 0); }

    void fill(int r, int c) {
        if (r == outer.length()) {
            if (ballot_reverse_word()) found += 1;
            return;
        }
        if (c == outer.part(r)) {
            fill(r + 1, 0);
            return;
        }
        if (c < inner.part(r)) {
            fill(r, c + 1);
            return;
        }
        const int left = c > inner.part(r) ? grid[static_cast<size_t>(r)][static_cast<size_t>(c - 1)] : 1;
        int above = 0;
        if (r > 0 && c < outer.part(r - 1) && c >= inner.part(r - 1)) {
            above = grid[static_cast<size_t>(r - 1)][static_cast<size_t>(c)];
        }
        for (int v = std::max(left, above + 1); v <= static_cast<int>(remaining.size()); ++v) {
            if (remaining[static_cast<size_t>(v - 1)] == 0) continue;
            --remaining[static_cast<size_t>(v - 1)];
            grid[static_cast<size_t>(r)][static_cast<size_t>(c)] = v;
            fill(r, c + 1);
            ++remaining[static_cast<size_t>(v - 1)];
        }
    }

    bool ballot_reverse_word() const {
        std::vector<int> word;
        for (int r = 0; r < outer.length(); ++r) {
            for (int c = outer.part(r) - 1; c >= inner.part(r); --c) {
                word.push_back(grid[static_cast<size_t>(r)][static_cast<size_t>(c)]);
            }
        }
        return is_ballot(word);
    }
};

} // namespace

BigCount lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu) {
    if (lambda.size() != mu.size() + nu.size()) return 0;
    if (!contains(lambda, mu)) return 0;
    if (nu.empty()) return 1; // empty skew shape, empty filling
    SkewCounter counter(lambda, mu, nu);
    counter.run();
    return counter.found;
}

std::vector<Partition> pieri_expand(int64_t strip_length, const Partition& pi) {
    if (strip_length < 0) throw input_error("pieri_expand: negative strip length");
    std::vector<Partition> out;
    std::vector<int> acc;
    const int rows = pi.length() + 1;
    auto rec = [&](auto&& self, int row, int64_t budget) -> void {
        if (row == rows) {
            if (budget == 0) out.emplace_back(acc);
            return;
        }
        // horizontal strip: pi_row <= eta_row <= pi_{row-1}
        const int64_t lo = pi.part(row);
        const int64_t hi = row == 0 ? pi.part(0) + budget
                                    : std::min<int64_t>(pi.part(row - 1), pi.part(row) + budget);
        for (int64_t v = hi; v >= lo; --v) {
            acc.push_back(static_cast<int>(v));
            self(self, row + 1, budget - (v - lo));
            acc.pop_back();
        }
    };
    rec(rec, 0, strip_length);
    std::sort(out.begin(), out.end(), [](const Partition& a, const Partition& b) {
        return a.parts() > b.parts();
    });
    return out;
}

BigCount murnaghan_embedding(const Partition& lambda, const Partition& mu,
                             const Partition& nu, int64_t n) {
    if (lambda.size() != mu.size() + nu.size()) {
        throw input_error("murnaghan_embedding: need |lambda| = |mu| + |nu|");
    }
    auto embed = [n](const Partition& p) {
        const int64_t head = n - p.size();
        if (head < p.part(0)) {
            throw input_error("murnaghan_embedding: n too small to prepend a first row");
        }
        std::vector<int> parts;
        parts.push_back(static_cast<int>(head));
        for (int x : p.parts()) parts.push_back(x);
        return Partition(std::move(parts));
    };
    return compute(embed(lambda), embed(mu), embed(nu), Method::automatic);
}

BigCount lr_via_reduction(const Partition& lambda, const Partition& mu, const Partition& nu) {
    if (lambda.size() != mu.size() + nu.size()) return 0;
    const int len = std::max(lambda.length(), mu.length());
    for (int i = 0; i < len; ++i) {
        if (std::abs(static_cast<int64_t>(lambda.part(i)) - mu.part(i)) > nu.size()) {
            return 0;
        }
    }
    const int64_t n = std::max<int64_t>(lambda.part(0), mu.part(0)) + nu.size() + lambda.size();
    return murnaghan_embedding(lambda, mu, nu, n);
}

} // namespace kroncoeff
