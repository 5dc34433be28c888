#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "circix/generators.hpp"
#include "circix/graph.hpp"
#include "circix/limits.hpp"
#include "circix/max_clique.hpp"
#include "circix/rational.hpp"

namespace circix {

/// A (k,d) circular coloring: colors in {0..k-1} with
/// d <= |f(u)-f(v)| <= k-d across every edge.
struct CircularColoring {
    int k = 1;
    int d = 1;
    std::vector<int> assignment;
};

inline bool coloring_is_valid(const SideInfoGraph& g, const CircularColoring& col) {
    if (static_cast<int>(col.assignment.size()) != g.n() || col.k < 1 || col.d < 1) return false;
    for (int f : col.assignment)
        if (f < 0 || f >= col.k) return false;
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v) {
            if (!g.has_edge(u, v)) continue;
            const int diff = std::abs(col.assignment[u] - col.assignment[v]);
            if (diff < col.d || diff > col.k - col.d) return false;
        }
    return true;
}

namespace detail {

inline void require_undirected(const SideInfoGraph& g, const char* where) {
    if (!g.is_undirected())
        throw std::invalid_argument(std::string(where) + ": directed input");
}

inline BitAdjacency to_bit_adjacency(const SideInfoGraph& g) {
    BitAdjacency adj(g.n());
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v)
            if (g.has_edge(u, v)) adj.add_edge(u, v);
    return adj;
}

}  // namespace detail

/// Exact clique number via branch and bound with greedy-coloring bounds.
inline int clique_number(const SideInfoGraph& g) {
    detail::require_undirected(g, "clique_number");
    limits::check(g.n() <= limits::clique_max_n(), "clique_number: n <= 24");
    const detail::BitAdjacency adj = detail::to_bit_adjacency(g);
    return detail::max_clique_size(adj);
}

namespace detail {

/// Proper-colorability decision with at most c colors; most-saturated-first
/// branching (DSATUR order) with first-use symmetry breaking.
inline bool colorable_rec(const std::vector<std::uint64_t>& adj, std::vector<int>& color, int c,
                          int colored, int max_used) {
    const int n = static_cast<int>(adj.size());
    if (colored == n) return true;
    int pick = -1, pick_sat = -1, pick_deg = -1;
    for (int v = 0; v < n; ++v) {
        if (color[v] >= 0) continue;
        std::uint64_t seen = 0;
        for (int u = 0; u < n; ++u)
            if (color[u] >= 0 && ((adj[v] >> u) & 1)) seen |= std::uint64_t{1} << color[u];
        const int sat = __builtin_popcountll(seen);
        const int deg = __builtin_popcountll(adj[v]);
        if (sat > pick_sat || (sat == pick_sat && deg > pick_deg)) {
            pick = v;
            pick_sat = sat;
            pick_deg = deg;
        }
    }
    std::uint64_t used = 0;
    for (int u = 0; u < n; ++u)
        if (color[u] >= 0 && ((adj[pick] >> u) & 1)) used |= std::uint64_t{1} << color[u];
    const int limit = std::min(c - 1, max_used + 1);
    for (int col = 0; col <= limit; ++col) {
        if ((used >> col) & 1) continue;
        color[pick] = col;
        if (colorable_rec(adj, color, c, colored + 1, std::max(max_used, col))) return true;
        color[pick] = -1;
    }
    return false;
}

inline bool colorable(const SideInfoGraph& g, int c) {
    std::vector<std::uint64_t> adj(g.n(), 0);
    for (int u = 0; u < g.n(); ++u)
        for (int v = 0; v < g.n(); ++v)
            if (u != v && g.has_edge(u, v)) adj[u] |= std::uint64_t{1} << v;
    std::vector<int> color(g.n(), -1);
    return colorable_rec(adj, color, c, 0, -1);
}

/// Lexicographically least proper coloring with exactly the given palette
/// size; vertices in index order, colors ascending. The lex-least coloring
/// always satisfies f(v) <= 1 + max(f(0..v-1)), so the cap is safe.
inline bool lex_coloring_rec(const SideInfoGraph& g, std::vector<int>& color, int c, int v,
                             int max_used) {
    if (v == g.n()) return true;
    const int limit = std::min(c - 1, max_used + 1);
    for (int col = 0; col <= limit; ++col) {
        bool ok = true;
        for (int u = 0; u < v && ok; ++u)
            if (g.has_edge(u, v) && color[u] == col) ok = false;
        if (!ok) continue;
        color[v] = col;
        if (lex_coloring_rec(g, color, c, v + 1, std::max(max_used, col))) return true;
    }
    color[v] = -1;
    return false;
}

}  // namespace detail

struct ChromaticResult {
    int chi = 0;
    std::vector<int> coloring;  // lexicographically least optimal coloring
};

/// Exact chromatic number: iterative deepening upward from the clique number.
inline ChromaticResult chromatic(const SideInfoGraph& g) {
    detail::require_undirected(g, "chromatic_number");
    limits::check(g.n() <= limits::chromatic_max_n(), "chromatic_number: n <= 16");
    for (int c = clique_number(g); c <= g.n(); ++c) {
        if (!detail::colorable(g, c)) continue;
        std::vector<int> color(g.n(), -1);
        detail::lex_coloring_rec(g, color, c, 0, -1);
        return {c, color};
    }
    throw std::logic_error("chromatic: unreachable");  // n colors always suffice
}

inline int chromatic_number(const SideInfoGraph& g) { return chromatic(g).chi; }

namespace detail {

/// Backtracking (k,d) circular-coloring search with forward-checked color
/// domains. Vertices are ordered by descending degree (index tiebreak); the
/// returned assignment is the least one in that search order. The first
/// search vertex is pinned to color 0: the constraint only depends on
/// cyclic color distance, so any solution rotates to one with f(v0) = 0.
inline bool circ_color_rec(const std::vector<int>& order,
                           const std::vector<std::vector<int>>& neighbors,
                           const std::vector<std::uint64_t>& allowed_with, int pos,
                           std::vector<std::uint64_t>& domain, std::vector<int>& assignment) {
    if (pos == static_cast<int>(order.size())) return true;
    const int v = order[pos];
    std::uint64_t candidates = domain[v];
    if (pos == 0) candidates &= 1;  // rotation symmetry
    while (candidates != 0) {
        const int col = __builtin_ctzll(candidates);
        candidates &= candidates - 1;
        assignment[v] = col;
        std::vector<std::pair<int, std::uint64_t>> saved;
        bool dead = false;
        for (int u : neighbors[v]) {
            if (assignment[u] >= 0) continue;
            const std::uint64_t next = domain[u] & allowed_with[col];
            if (next != domain[u]) {
                saved.emplace_back(u, domain[u]);
                domain[u] = next;
                if (next == 0) {
                    dead = true;
                    break;
                }
            }
        }
        if (!dead && circ_color_rec(order, neighbors, allowed_with, pos + 1, domain, assignment))
            return true;
        for (auto& [u, old] : saved) domain[u] = old;
        assignment[v] = -1;
    }
    return false;
}

}  // namespace detail

/// Search for a (k,d) circular coloring; nullopt if none exists. Edgeless
/// graphs accept any (k,d) since the constraint is vacuous.
inline std::optional<CircularColoring> has_circular_coloring(const SideInfoGraph& g, int k, int d) {
    detail::require_undirected(g, "has_circular_coloring");
    if (k < 1 || d < 1) throw std::invalid_argument("has_circular_coloring: need k, d >= 1");
    if (k > 62) throw std::invalid_argument("has_circular_coloring: k <= 62");

    std::vector<int> order(g.n());
    for (int v = 0; v < g.n(); ++v) order[v] = v;
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return g.degree(a) > g.degree(b); });

    std::vector<std::vector<int>> neighbors(g.n());
    for (int u = 0; u < g.n(); ++u)
        for (int v = 0; v < g.n(); ++v)
            if (u != v && g.has_edge(u, v)) neighbors[u].push_back(v);

    const std::uint64_t full = (std::uint64_t{1} << k) - 1;
    std::vector<std::uint64_t> allowed_with(k, 0);
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b) {
            const int diff = std::abs(a - b);
            if (diff >= d && diff <= k - d) allowed_with[a] |= std::uint64_t{1} << b;
        }

    std::vector<std::uint64_t> domain(g.n(), full);
    std::vector<int> assignment(g.n(), -1);
    if (!detail::circ_color_rec(order, neighbors, allowed_with, 0, domain, assignment))
        return std::nullopt;
    return CircularColoring{k, d, assignment};
}

namespace detail {

/// All reduced fractions k/d with k <= max_k, lo <= k/d <= hi, sorted by
/// exact value. Cross-product comparison only.
inline std::vector<std::pair<int, int>> reduced_fractions(int max_k, const Rational& lo,
                                                          const Rational& hi, bool ascending) {
    std::vector<std::pair<int, int>> out;
    for (int k = 1; k <= max_k; ++k)
        for (int d = 1; d <= k; ++d) {
            if (std::gcd(k, d) != 1) continue;
            const Rational v(k, d);
            if (v < lo || v > hi) continue;
            out.emplace_back(k, d);
        }
    std::sort(out.begin(), out.end(), [&](auto a, auto b) {
        const Rational ra(a.first, a.second), rb(b.first, b.second);
        return ascending ? ra < rb : rb < ra;
    });
    return out;
}

/// Is the circular clique K_{k/d} an induced subgraph of g? Enumerates
/// k-subsets in lexicographic order with a regularity prefilter before the
/// full isomorphism test.
inline bool contains_induced_circular_clique(const SideInfoGraph& g, int k, int d) {
    if (k > g.n()) return false;
    const SideInfoGraph pattern = circular_clique(k, d);
    const int pattern_degree = k - 2 * d + 1;
    const int pattern_edges = pattern.edge_count();
    std::vector<int> subset(k);
    for (int i = 0; i < k; ++i) subset[i] = i;
    while (true) {
        const SideInfoGraph h = induced_subgraph(g, subset);
        bool regular = h.edge_count() == pattern_edges;
        for (int v = 0; regular && v < k; ++v)
            if (h.degree(v) != pattern_degree) regular = false;
        if (regular && is_isomorphic(h, pattern)) return true;
        // next k-combination of {0..n-1} in lex order
        int i = k - 1;
        while (i >= 0 && subset[i] == g.n() - k + i) --i;
        if (i < 0) return false;
        ++subset[i];
        for (int j = i + 1; j < k; ++j) subset[j] = subset[j - 1] + 1;
    }
}

}  // namespace detail

struct ChiCResult {
    Rational value;
    CircularColoring coloring;
};

/// Exact circular chromatic number with a witness coloring. Enumerates
/// reduced k/d, k <= n (chi_c is always attained there), ascending between
/// omega and chi; the first feasible fraction is the answer.
inline ChiCResult circular_chromatic_number(const SideInfoGraph& g) {
    detail::require_undirected(g, "circular_chromatic_number");
    limits::check(g.n() <= limits::circular_max_n(), "circular_chromatic_number: n <= 12");
    if (g.edge_count() == 0)
        return {Rational(1, 1), CircularColoring{1, 1, std::vector<int>(g.n(), 0)}};
    const int omega = clique_number(g);
    const int chi = chromatic_number(g);
    for (auto [k, d] : detail::reduced_fractions(g.n(), Rational(omega), Rational(chi), true)) {
        if (auto col = has_circular_coloring(g, k, d)) return {Rational(k, d), *col};
    }
    throw std::logic_error("circular_chromatic_number: unreachable");  // (chi,1) is feasible
}

/// Exact circular clique number: largest reduced k/d with K_{k/d} induced
/// in g. Only fractions with floor(k/d) <= omega can occur (K_{floor} sits
/// inside K_{k/d}), and K_{omega/1} always occurs, so the scan runs
/// descending through [omega, omega+1).
inline Rational circular_clique_number(const SideInfoGraph& g) {
    detail::require_undirected(g, "circular_clique_number");
    limits::check(g.n() <= limits::circular_max_n(), "circular_clique_number: n <= 12");
    if (g.edge_count() == 0) return {1, 1};
    const int omega = clique_number(g);
    for (auto [k, d] :
         detail::reduced_fractions(g.n(), Rational(omega), Rational(omega + 1), false)) {
        if (Rational(k, d) == Rational(omega + 1)) continue;
        if (k < 2 * d) continue;  // K_{k/d} requires k >= 2d
        if (detail::contains_induced_circular_clique(g, k, d)) return {k, d};
    }
    return {omega, 1};
}

struct CircularPerfectReport {
    bool circular_perfect = true;
    std::vector<int> witness;  // least violating subset in subset-lex order
    Rational witness_omega_c{0, 1};
    Rational witness_chi_c{0, 1};
};

namespace detail {

inline bool circ_perfect_rec(const SideInfoGraph& g, std::vector<int>& subset, int next_min,
                             CircularPerfectReport& report) {
    if (subset.size() >= 3) {  // smaller subgraphs always have omega_c = chi_c
        const SideInfoGraph h = induced_subgraph(g, subset);
        const Rational oc = circular_clique_number(h);
        const Rational cc = circular_chromatic_number(h).value;
        if (!(oc == cc)) {
            report = {false, subset, oc, cc};
            return false;
        }
    }
    for (int v = next_min; v < g.n(); ++v) {
        subset.push_back(v);
        if (!circ_perfect_rec(g, subset, v + 1, report)) return false;
        subset.pop_back();
    }
    return true;
}

}  // namespace detail

/// Circular perfectness by exhausting all induced subgraphs (subset-lex
/// order, short-circuiting on the first violation).
inline CircularPerfectReport circular_perfect_check(const SideInfoGraph& g) {
    detail::require_undirected(g, "is_circular_perfect");
    limits::check(g.n() <= limits::circular_perfect_max_n(), "is_circular_perfect: n <= 10");
    CircularPerfectReport report;
    std::vector<int> subset;
    for (int v = 0; v < g.n(); ++v) {
        subset.push_back(v);
        if (!detail::circ_perfect_rec(g, subset, v + 1, report)) return report;
        subset.pop_back();
    }
    return report;
}

inline bool is_circular_perfect(const SideInfoGraph& g) {
    return circular_perfect_check(g).circular_perfect;
}

namespace detail {

/// Does S induce a single cycle? (Every vertex of S has exactly two
/// S-neighbors and the induced graph is connected.)
inline bool induces_cycle(const SideInfoGraph& g, const std::vector<int>& s) {
    const int m = static_cast<int>(s.size());
    for (int a = 0; a < m; ++a) {
        int deg = 0;
        for (int b = 0; b < m; ++b)
            if (a != b && g.has_edge(s[a], s[b])) ++deg;
        if (deg != 2) return false;
    }
    std::vector<bool> seen(m, false);
    std::vector<int> stack{0};
    seen[0] = true;
    int count = 1;
    while (!stack.empty()) {
        const int a = stack.back();
        stack.pop_back();
        for (int b = 0; b < m; ++b)
            if (!seen[b] && g.has_edge(s[a], s[b])) {
                seen[b] = true;
                ++count;
                stack.push_back(b);
            }
    }
    return count == m;
}

inline bool subsets_contain_odd_hole(const SideInfoGraph& g, const SideInfoGraph& gc) {
    const int n = g.n();
    for (int m = 5; m <= n; m += 2) {
        std::vector<int> subset(m);
        for (int i = 0; i < m; ++i) subset[i] = i;
        while (true) {
            if (detail::induces_cycle(g, subset) || detail::induces_cycle(gc, subset)) return true;
            int i = m - 1;
            while (i >= 0 && subset[i] == n - m + i) --i;
            if (i < 0) break;
            ++subset[i];
            for (int j = i + 1; j < m; ++j) subset[j] = subset[j - 1] + 1;
        }
    }
    return false;
}

}  // namespace detail

/// Perfectness via the odd-hole characterization: no induced odd cycle of
/// length >= 5 in g or its complement.
inline bool is_perfect(const SideInfoGraph& g) {
    detail::require_undirected(g, "is_perfect");
    limits::check(g.n() <= limits::perfect_max_n(), "is_perfect: n <= 12");
    return !detail::subsets_contain_odd_hole(g, complement(g));
}

struct ParamReport {
    int omega = 0;
    int chi = 0;
    Rational omega_c{1, 1};
    Rational chi_c{1, 1};
    std::optional<bool> circular_perfect;  // only when n is within its limit
    std::optional<bool> perfect;
};

inline ParamReport param_report(const SideInfoGraph& g) {
    detail::require_undirected(g, "param_report");
    ParamReport r;
    r.omega = clique_number(g);
    r.chi = chromatic_number(g);
    r.omega_c = circular_clique_number(g);
    r.chi_c = circular_chromatic_number(g).value;
    if (g.n() <= limits::circular_perfect_max_n())
        r.circular_perfect = is_circular_perfect(g);
    if (g.n() <= limits::perfect_max_n()) r.perfect = is_perfect(g);
    return r;
}

}  // namespace circix
