#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "circix/graph.hpp"
#include "circix/prng.hpp"

namespace circix {

inline SideInfoGraph complete(int n) {
    SideInfoGraph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

inline SideInfoGraph edgeless(int n) { return SideInfoGraph(n); }

inline SideInfoGraph cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle: need n >= 3");
    SideInfoGraph g(n);
    for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
    return g;
}

/// Circular clique K_{k/d}: vertices 0..k-1, u ~ v iff d <= |u-v| <= k-d.
/// Non-reduced (k, d) is accepted; the parameter searches enumerate reduced
/// fractions only.
inline SideInfoGraph circular_clique(int k, int d) {
    if (d < 1 || k < 2 * d) throw std::invalid_argument("circular_clique: need k >= 2d >= 2");
    SideInfoGraph g(k);
    for (int u = 0; u < k; ++u)
        for (int v = u + 1; v < k; ++v) {
            const int diff = v - u;
            if (diff >= d && diff <= k - d) g.add_edge(u, v);
        }
    return g;
}

/// Web: the complement of a circular clique.
inline SideInfoGraph web(int p, int q) { return complement(circular_clique(p, q)); }

/// Union of two graphs sharing one vertex: a's last vertex is identified
/// with b's first. join_at_vertex(complete(n), edgeless(n)) is the
/// 2n-1-vertex perfect graph whose complementary rates multiply to n^2.
inline SideInfoGraph join_at_vertex(const SideInfoGraph& a, const SideInfoGraph& b) {
    const int n = a.n() + b.n() - 1;
    const int shift = a.n() - 1;  // b's vertex v lands at shift + v
    SideInfoGraph g(n);
    for (int i = 0; i < a.n(); ++i)
        for (int j = 0; j < a.n(); ++j)
            if (i != j && a.knows(i, j)) g.add(i, j);
    for (int i = 0; i < b.n(); ++i)
        for (int j = 0; j < b.n(); ++j)
            if (i != j && b.knows(i, j)) g.add(shift + i, shift + j);
    return g;
}

/// S_i = {i-(d-1), ..., i-1, i+1, ..., i+(d-1)} mod n. d = 1 is edgeless.
inline SideInfoGraph symmetric_neighbouring_side_info(int n, int d) {
    if (d < 1 || 2 * (d - 1) > n - 1)
        throw std::invalid_argument("symmetric_neighbouring_side_info: need 1 <= d, 2(d-1) < n");
    SideInfoGraph g(n);
    for (int i = 0; i < n; ++i)
        for (int off = 1; off <= d - 1; ++off) {
            g.add(i, (i + off) % n);
            g.add(i, (i - off + n) % n);
        }
    return g;
}

/// Receiver i knows everything except the D messages on each side of its
/// own; the complement is the web K̄_{n/(D+1)}.
inline SideInfoGraph symmetric_neighbouring_interference(int n, int D) {
    if (D < 0 || n < 2 * (D + 1))
        throw std::invalid_argument("symmetric_neighbouring_interference: need 0 <= D, n >= 2(D+1)");
    SideInfoGraph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            const int diff = (j - i + n) % n;
            const int cyc = diff < n - diff ? diff : n - diff;
            if (cyc > D) g.add(i, j);
        }
    return g;
}

namespace detail {

/// Vertices of the interlacing graph: k-subsets of n circle points with
/// pairwise cyclic distance >= r.
inline void interlacing_vertices(int n, int k, int r, std::vector<int>& current,
                                 std::vector<std::vector<int>>& out) {
    if (static_cast<int>(current.size()) == k) {
        // Cyclic wrap between the last and first chosen points.
        const int wrap = n - current.back() + current.front();
        if (k == 1 || wrap >= r) out.push_back(current);
        return;
    }
    const int lo = current.empty() ? 0 : current.back() + r;
    for (int p = lo; p < n; ++p) {
        current.push_back(p);
        interlacing_vertices(n, k, r, current, out);
        current.pop_back();
    }
}

/// Do v' points fall into >= 2 of the arcs the circle splits into once v's
/// points are removed? Subsets sharing a circle point never interlace
/// (their chords meet at an endpoint instead of crossing).
inline bool interlaces(const std::vector<int>& v, const std::vector<int>& vp, int n) {
    std::vector<char> removed(n, 0);
    for (int p : v) removed[p] = 1;
    for (int p : vp)
        if (removed[p]) return false;
    // Arc id of a surviving point = index of the previous removed point.
    std::vector<int> arc(n, -1);
    int current = -1;
    for (int pass = 0; pass < 2; ++pass)  // two passes resolve the wrap
        for (int p = 0; p < n; ++p) {
            if (removed[p])
                current = p;
            else
                arc[p] = current;
        }
    int first_arc = -2;
    for (int p : vp) {
        if (first_arc == -2)
            first_arc = arc[p];
        else if (arc[p] != first_arc)
            return true;
    }
    return false;
}

}  // namespace detail

/// Interlacing graph: vertices are the k-subsets of n circle points with
/// pairwise cyclic distance >= r; two vertices are adjacent iff they
/// interlace. Circular perfect with chi_c = n/k.
inline SideInfoGraph interlacing_graph(int n, int k, int r) {
    if (k < 1 || r < 1 || n < k * r) throw std::invalid_argument("interlacing_graph: need n >= k*r");
    std::vector<std::vector<int>> verts;
    std::vector<int> current;
    detail::interlacing_vertices(n, k, r, current, verts);
    if (verts.empty() || verts.size() > 64)
        throw std::invalid_argument("interlacing_graph: vertex count out of range (1..64)");
    SideInfoGraph g(static_cast<int>(verts.size()));
    for (size_t a = 0; a < verts.size(); ++a)
        for (size_t b = a + 1; b < verts.size(); ++b)
            if (detail::interlaces(verts[a], verts[b], n))
                g.add_edge(static_cast<int>(a), static_cast<int>(b));
    return g;
}

/// Seed-deterministic G(n, p); identical seeds reproduce identical graphs
/// byte for byte.
inline SideInfoGraph random_graph(int n, double edge_prob, std::uint64_t seed) {
    SplitMix64 rng(seed);
    SideInfoGraph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.chance(edge_prob)) g.add_edge(u, v);
    return g;
}

/// Directed variant: each ordered pair (j -> i) sampled independently.
inline SideInfoGraph random_digraph(int n, double arc_prob, std::uint64_t seed) {
    SplitMix64 rng(seed);
    SideInfoGraph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j && rng.chance(arc_prob)) g.add(i, j);
    return g;
}

}  // namespace circix
