#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "circix/code.hpp"
#include "circix/confusion.hpp"
#include "circix/construction.hpp"
#include "circix/gf.hpp"
#include "circix/graph.hpp"
#include "circix/limits.hpp"
#include "circix/params.hpp"
#include "circix/rational.hpp"

namespace circix {

namespace detail {

/// Enumerate l x n matrices in reduced row echelon form (one canonical
/// representative per l-dimensional rowspace of F_q^n) in a fixed order:
/// pivot-column sets ascending lexicographically, free entries counting up
/// in base q, row-major. The callback returns true to stop.
template <typename Callback>
bool for_each_rref(const PrimeField& f, int l, int n, Callback&& cb) {
    std::vector<int> pivots(l);
    for (int i = 0; i < l; ++i) pivots[i] = i;
    while (true) {
        // Free positions: right of the row's pivot, not a pivot column.
        std::vector<std::pair<int, int>> free_pos;
        std::vector<bool> is_pivot(n, false);
        for (int p : pivots) is_pivot[p] = true;
        for (int r = 0; r < l; ++r)
            for (int c = pivots[r] + 1; c < n; ++c)
                if (!is_pivot[c]) free_pos.emplace_back(r, c);

        GFMatrix m(f, l, n);
        for (int r = 0; r < l; ++r) m.set(r, pivots[r], 1);
        std::vector<int> counter(free_pos.size(), 0);
        while (true) {
            for (size_t idx = 0; idx < free_pos.size(); ++idx)
                m.set(free_pos[idx].first, free_pos[idx].second, counter[idx]);
            if (cb(m)) return true;
            size_t idx = counter.size();
            while (idx > 0 && counter[idx - 1] == f.q() - 1) counter[--idx] = 0;
            if (idx == 0) break;
            ++counter[idx - 1];
        }

        // Next pivot combination in lex order.
        int i = l - 1;
        while (i >= 0 && pivots[i] == n - l + i) --i;
        if (i < 0) return false;
        ++pivots[i];
        for (int j = i + 1; j < l; ++j) pivots[j] = pivots[j - 1] + 1;
    }
}

}  // namespace detail

struct BetaSlResult {
    int beta_sl = 0;
    LinearIndexCode witness;
};

/// Ground-truth oracle for the optimal scalar linear rate: the smallest l
/// for which some l x n encoding matrix over F_q is valid. Validity only
/// depends on the rowspace of B (the criterion is preserved by invertible
/// row operations), so only RREF canonical forms are enumerated. The first
/// valid matrix in enumeration order is returned as the witness.
inline std::optional<BetaSlResult> beta_scalar_exhaustive(const SideInfoGraph& g,
                                                          const PrimeField& field, int l_max) {
    limits::check(g.n() <= limits::exhaustive_max_n(), "beta_scalar_exhaustive: n <= 6");
    limits::check(field.q() <= limits::exhaustive_max_q(), "beta_scalar_exhaustive: q <= 3");
    if (l_max < 1 || l_max > g.n())
        throw std::invalid_argument("beta_scalar_exhaustive: need 1 <= l_max <= n");
    for (int l = 1; l <= l_max; ++l) {
        std::optional<BetaSlResult> found;
        detail::for_each_rref(field, l, g.n(), [&](const GFMatrix& m) {
            LinearIndexCode code{field, g.n(), 1, l, m};
            if (!is_valid(code, g)) return false;
            found = BetaSlResult{l, code};
            return true;
        });
        if (found) return found;
    }
    return std::nullopt;
}

/// Everything the bound chain omega(G^c) <= omega_c(G^c) <= beta(G)
/// <= chi_c(G^c) <= chi(G^c) pins down for one undirected instance, plus
/// the scalar oracle and the confusion bound where they fit.
struct SandwichReport {
    int n = 0;
    int q = 0;
    int omega_bar = 0;
    Rational omega_c_bar{1, 1};
    Rational constructed_rate{0, 1};
    bool constructed_valid = false;
    int chi_bar = 0;
    std::optional<int> beta_sl;             // n <= 6 and q <= 3 only
    std::optional<BetaLowerBound> confusion;  // t = 1, q^n within limits
    bool chain_ok = false;     // omega <= omega_c <= rate <= chi, beta_sl <= chi
    bool beta_certified = false;  // omega_c(G^c) == constructed rate
    Rational beta{0, 1};          // meaningful when certified
};

inline SandwichReport sandwich_report(const SideInfoGraph& g, const PrimeField& field) {
    if (!g.is_undirected()) throw std::invalid_argument("sandwich_report: directed input");
    const SideInfoGraph gbar = complement(g);
    SandwichReport r;
    r.n = g.n();
    r.q = field.q();
    r.omega_bar = clique_number(gbar);
    r.omega_c_bar = circular_clique_number(gbar);
    r.chi_bar = chromatic_number(gbar);

    const ChiCResult chi_c = circular_chromatic_number(gbar);
    const LinearIndexCode code = build_code(g, chi_c.coloring, field);
    r.constructed_rate = code.rate();
    r.constructed_valid = is_valid(code, g);

    if (g.n() <= limits::exhaustive_max_n() && field.q() <= limits::exhaustive_max_q()) {
        auto res = beta_scalar_exhaustive(g, field, g.n());
        if (res) r.beta_sl = res->beta_sl;  // l = n always works, so this always hits
    }
    long long confusion_vertices = 1;
    bool fits = true;
    for (int i = 0; i < g.n() && fits; ++i) {
        confusion_vertices *= field.q();
        fits = confusion_vertices <= limits::confusion_max_vertices();
    }
    if (fits) r.confusion = beta_lower_bound(g, 1, field);

    r.chain_ok = Rational(r.omega_bar) <= r.omega_c_bar &&
                 r.omega_c_bar <= r.constructed_rate &&
                 r.constructed_rate <= Rational(r.chi_bar) && r.constructed_valid;
    if (r.beta_sl) r.chain_ok = r.chain_ok && *r.beta_sl <= r.chi_bar;
    r.beta_certified = r.omega_c_bar == r.constructed_rate;
    if (r.beta_certified) r.beta = r.constructed_rate;
    return r;
}

}  // namespace circix
