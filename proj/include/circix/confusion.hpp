#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "circix/gf.hpp"
#include "circix/graph.hpp"
#include "circix/limits.hpp"
#include "circix/max_clique.hpp"
#include "circix/params.hpp"
#include "circix/rational.hpp"

namespace circix {

/// Confusion graph of G for t-length messages over F_q: vertices are all
/// q^(nt) cumulated message vectors; two are adjacent iff some receiver
/// cannot tell them apart (its own block differs while every block it knows
/// agrees). Vertex index v encodes the tuple in base q, block-major:
/// symbol (i, j) is digit i*t + j.
class ConfusionGraph {
public:
    ConfusionGraph(SideInfoGraph base, int t, PrimeField field)
        : base_(std::move(base)), t_(t), field_(field) {
        if (t < 1) throw std::invalid_argument("ConfusionGraph: t >= 1");
        pow_.assign(base_.n() * t_ + 1, 1);
        for (size_t digit = 1; digit < pow_.size(); ++digit) {
            pow_[digit] = pow_[digit - 1] * field_.q();
            limits::check(pow_[digit] <= limits::confusion_max_vertices(),
                          "confusion graph: q^(n t) <= 4096");
        }
        vertex_count_ = pow_.back();
    }

    [[nodiscard]] const SideInfoGraph& base() const { return base_; }
    [[nodiscard]] int t() const { return t_; }
    [[nodiscard]] const PrimeField& field() const { return field_; }
    [[nodiscard]] long long vertex_count() const { return vertex_count_; }

    [[nodiscard]] int symbol(long long vertex, int i, int j) const {
        return static_cast<int>((vertex / pow_[i * t_ + j]) % field_.q());
    }

    /// Block i as one base-q number (digits i*t .. i*t + t - 1).
    [[nodiscard]] long long block(long long vertex, int i) const {
        return (vertex / pow_[i * t_]) % pow_t();
    }

    [[nodiscard]] bool blocks_equal(long long x, long long y, int i) const {
        return block(x, i) == block(y, i);
    }

    /// Adjacency oracle; x == y is a caller error.
    [[nodiscard]] bool edge(long long x, long long y) const {
        if (x == y) throw std::invalid_argument("confusion_edge: x == y");
        for (int i = 0; i < base_.n(); ++i) {
            if (blocks_equal(x, y, i)) continue;
            bool agrees_on_side_info = true;
            for (int j = 0; j < base_.n() && agrees_on_side_info; ++j)
                if (base_.knows(i, j) && !blocks_equal(x, y, j)) agrees_on_side_info = false;
            if (agrees_on_side_info) return true;
        }
        return false;
    }

private:
    [[nodiscard]] long long pow_t() const { return pow_[t_]; }

    SideInfoGraph base_;
    int t_;
    PrimeField field_;
    std::vector<long long> pow_;
    long long vertex_count_ = 0;
};

namespace detail {

/// Constructive bracket on omega(Gamma_t(G)).
///   lower: an independent set S of the side-information graph (no arcs
///   either way between members) gives an explicit clique: fix all blocks
///   outside S, vary the S-blocks freely — q^(t|S|) tuples, any two of
///   which confuse the receiver of a differing S-block.
///   upper: a valid code of length l separates confusable tuples, so
///   omega <= q^l; the clique-cover code over the bidirected subgraph has
///   l = t * chi of its complement.
struct ConfusionBracket {
    long long lower = 1;
    long long upper = -1;  // -1: not computed (graph over the solver limits)
};

inline ConfusionBracket confusion_bracket(const SideInfoGraph& g, int t, const PrimeField& f) {
    SideInfoGraph mutual(g.n());  // bidirected subgraph
    SideInfoGraph united(g.n());  // arcs in either direction
    for (int u = 0; u < g.n(); ++u)
        for (int v = 0; v < g.n(); ++v) {
            if (u == v) continue;
            if (g.knows(u, v) && g.knows(v, u)) mutual.add(u, v);
            if (g.knows(u, v) || g.knows(v, u)) united.add(u, v);
        }
    ConfusionBracket bracket;
    if (g.n() > limits::clique_max_n() || g.n() > limits::chromatic_max_n()) return bracket;
    const int alpha = max_clique_size(to_bit_adjacency(complement(united)));
    const int cover = chromatic_number(complement(mutual));
    bracket.lower = 1;
    for (int i = 0; i < t * alpha; ++i) bracket.lower *= f.q();
    bracket.upper = 1;
    for (int i = 0; i < t * cover; ++i) bracket.upper *= f.q();
    if (bracket.lower > bracket.upper)
        throw std::logic_error("confusion bracket inverted");  // would mean a solver bug
    return bracket;
}

}  // namespace detail

/// Exact omega(Gamma_t(G)). Branch and bound over bitset adjacency (built
/// only inside this call, at most 4096 vertices; never an edge list), with
/// two structural aids: the constructive bracket above (when it pins the
/// value no search is needed, and otherwise it seeds the incumbent and the
/// stopping bound), and vertex transitivity — adjacency depends only on the
/// difference of tuples, so some maximum clique contains vertex 0 and the
/// search runs on its neighborhood.
inline int max_clique_confusion(const ConfusionGraph& gamma) {
    const auto bracket =
        detail::confusion_bracket(gamma.base(), gamma.t(), gamma.field());
    if (bracket.upper >= 0 && bracket.lower == bracket.upper)
        return static_cast<int>(bracket.lower);

    const int n = static_cast<int>(gamma.vertex_count());
    std::vector<int> hood;  // neighborhood of the zero tuple
    for (int y = 1; y < n; ++y)
        if (gamma.edge(0, y)) hood.push_back(y);
    detail::BitAdjacency adj(static_cast<int>(hood.size()));
    for (size_t a = 0; a < hood.size(); ++a)
        for (size_t b = a + 1; b < hood.size(); ++b)
            if (gamma.edge(hood[a], hood[b]))
                adj.add_edge(static_cast<int>(a), static_cast<int>(b));
    const int incumbent = static_cast<int>(bracket.lower) - 1;
    const int limit = bracket.upper >= 0 ? static_cast<int>(bracket.upper) - 1 : -1;
    return 1 + detail::MaxCliqueSolver(adj, incumbent, limit).solve();
}

inline int max_clique_confusion(const SideInfoGraph& g, int t, const PrimeField& field) {
    return max_clique_confusion(ConfusionGraph(g, t, field));
}

/// log_q(omega(Gamma_t(G))) / t: a lower bound on the broadcast rate.
/// Exact as a rational whenever omega is a power of q (always the case for
/// edgeless graphs, where the bound equals n); otherwise a decimal.
struct BetaLowerBound {
    long long omega = 0;
    long long vertices = 0;
    bool exact = false;
    Rational exact_value{0, 1};
    double approx = 0.0;
};

inline BetaLowerBound beta_lower_bound(const SideInfoGraph& g, int t, const PrimeField& field) {
    const ConfusionGraph gamma(g, t, field);
    BetaLowerBound out;
    out.vertices = gamma.vertex_count();
    out.omega = max_clique_confusion(gamma);
    long long power = 1;
    int exponent = 0;
    while (power < out.omega) {
        power *= field.q();
        ++exponent;
    }
    if (power == out.omega) {
        out.exact = true;
        out.exact_value = Rational(exponent, t);
    }
    out.approx = std::log(static_cast<double>(out.omega)) /
                 (std::log(static_cast<double>(field.q())) * t);
    return out;
}

/// The induced-subgraph embedding behind the monotonicity bound: a tuple on
/// H's messages maps to a tuple on G's by fixing the remaining blocks.
/// vertex_map[h] = original vertex of G; fixed supplies blocks of G not in
/// the image (base-q digits, block-major, in increasing vertex order).
inline long long embed_tuple(const ConfusionGraph& gamma_h, const SideInfoGraph& g,
                             const std::vector<int>& vertex_map, long long h_vertex,
                             const std::vector<int>& fixed) {
    const int t = gamma_h.t();
    const int q = gamma_h.field().q();
    std::vector<int> digits(static_cast<size_t>(g.n()) * t, -1);
    for (int h = 0; h < gamma_h.base().n(); ++h)
        for (int j = 0; j < t; ++j) digits[vertex_map[h] * t + j] = gamma_h.symbol(h_vertex, h, j);
    size_t next_fixed = 0;
    for (auto& digit : digits)
        if (digit < 0) {
            if (next_fixed >= fixed.size())
                throw std::invalid_argument("embed_tuple: not enough fixed digits");
            digit = fixed[next_fixed++];
        }
    long long out = 0;
    for (int pos = g.n() * t - 1; pos >= 0; --pos) out = out * q + digits[pos];
    return out;
}

}  // namespace circix
