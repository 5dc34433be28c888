#pragma once

#include <stdexcept>
#include <vector>

#include "circix/code.hpp"
#include "circix/gf.hpp"
#include "circix/graph.hpp"
#include "circix/params.hpp"

namespace circix {

/// Bookkeeping for the coloring-based achievable scheme. Given a (k,d)
/// circular coloring of the complement, message length is t = d, code
/// length l = k, and transmission l sums X_{i,j_i} over the window
/// A_l = {l, l-1, ..., l-(d-1)} (mod k) with j_i = (k-i+l) mod k. Message
/// symbol (v, j) with v colored i appears exactly once, in transmission
/// (i+j) mod k.
struct ConstructionPlan {
    CircularColoring coloring;                    // coloring of the complement
    std::vector<std::vector<int>> color_classes;  // C_0..C_{k-1}, possibly empty

    [[nodiscard]] int k() const { return coloring.k; }
    [[nodiscard]] int d() const { return coloring.d; }
    [[nodiscard]] int color_of(int v) const { return coloring.assignment[v]; }
    [[nodiscard]] int transmission_of(int v, int j) const { return (color_of(v) + j) % k(); }

    /// Window A_l: the d color classes contributing to transmission l.
    [[nodiscard]] std::vector<int> window(int l) const {
        std::vector<int> out;
        for (int s = 0; s < d(); ++s) out.push_back(((l - s) % k() + k()) % k());
        return out;
    }
};

inline ConstructionPlan make_plan(const SideInfoGraph& g, const CircularColoring& coloring) {
    if (!g.is_undirected()) throw std::invalid_argument("construction: directed input");
    if (coloring.d > coloring.k)
        throw std::invalid_argument("construction: need d <= k");
    if (!coloring_is_valid(complement(g), coloring))
        throw std::invalid_argument("construction: invalid circular coloring of the complement");
    ConstructionPlan plan{coloring, std::vector<std::vector<int>>(coloring.k)};
    for (int v = 0; v < g.n(); ++v) plan.color_classes[coloring.assignment[v]].push_back(v);
    return plan;
}

/// Build the rate-k/d code for G from a (k,d) circular coloring of its
/// complement. Row l of B has a 1 in column (v, s) for every vertex v whose
/// color lies s steps back in the window of l; all coefficients are 1. The
/// result is checked against the validity criterion before being returned.
inline LinearIndexCode build_code(const SideInfoGraph& g, const CircularColoring& coloring,
                                  const PrimeField& field) {
    const ConstructionPlan plan = make_plan(g, coloring);
    const int k = plan.k(), d = plan.d();
    GFMatrix b(field, k, g.n() * d);
    for (int l = 0; l < k; ++l)
        for (int s = 0; s < d; ++s) {
            const int i = ((l - s) % k + k) % k;
            for (int v : plan.color_classes[i]) b.set(l, v * d + s, 1);
        }
    LinearIndexCode code{field, g.n(), d, k, std::move(b)};
    if (!is_valid(code, g))
        throw std::logic_error("construction: built code failed the validity criterion");
    return code;
}

/// Specialized decoder: x_{v,j} is recovered from its unique transmission
/// by subtracting every other summand, all of which are side information at
/// v (same-class vertices and window classes are non-adjacent in the
/// complement). Missing side information indicates an invalid coloring.
inline int decode_constructed(const ConstructionPlan& plan, const PrimeField& field,
                              const std::vector<int>& transmissions, int v, int j,
                              const SideValues& side) {
    if (static_cast<int>(transmissions.size()) != plan.k())
        throw std::invalid_argument("decode_constructed: need k transmissions");
    const int l = plan.transmission_of(v, j);
    int value = transmissions[l];
    for (int s = 0; s < plan.d(); ++s) {
        const int i = ((l - s) % plan.k() + plan.k()) % plan.k();
        for (int vp : plan.color_classes[i]) {
            if (vp == v && s == j) continue;
            auto it = side.find(vp);
            if (it == side.end() || static_cast<int>(it->second.size()) <= s)
                throw std::invalid_argument("decode_constructed: missing side-information value");
            value = field.sub(value, it->second[s]);
        }
    }
    return value;
}

}  // namespace circix
