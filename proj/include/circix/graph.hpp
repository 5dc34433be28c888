#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "circix/limits.hpp"

namespace circix {

/// Side-information graph on vertices 0..n-1. side_info[i] is the set of
/// messages receiver i already knows, stored as a bitmask (n <= 64).
/// Directed in general; j in S_i means there is an arc j -> i. When the
/// sets are symmetric the graph is the usual undirected graph where an
/// edge {i,j} means i and j know each other's message.
class SideInfoGraph {
public:
    explicit SideInfoGraph(int n) : n_(n), side_(n, 0) {
        if (n < 1 || n > 64) throw std::invalid_argument("SideInfoGraph: need 1 <= n <= 64");
    }

    SideInfoGraph(int n, const std::vector<std::vector<int>>& side_info) : SideInfoGraph(n) {
        if (static_cast<int>(side_info.size()) != n)
            throw std::invalid_argument("SideInfoGraph: side_info.size() != n");
        for (int i = 0; i < n; ++i)
            for (int j : side_info[i]) add(i, j);
    }

    [[nodiscard]] int n() const { return n_; }

    /// j in S_i?
    [[nodiscard]] bool knows(int i, int j) const { return (side_[i] >> j) & 1; }
    [[nodiscard]] std::uint64_t side_mask(int i) const { return side_[i]; }

    void add(int i, int j) {
        if (i < 0 || i >= n_ || j < 0 || j >= n_)
            throw std::invalid_argument("SideInfoGraph: vertex out of range");
        if (i == j) throw std::invalid_argument("SideInfoGraph: i in side_info[i]");
        side_[i] |= std::uint64_t{1} << j;
    }
    void add_edge(int u, int v) {
        add(u, v);
        add(v, u);
    }

    [[nodiscard]] bool is_undirected() const {
        for (int i = 0; i < n_; ++i)
            for (int j = i + 1; j < n_; ++j)
                if (knows(i, j) != knows(j, i)) return false;
        return true;
    }

    [[nodiscard]] bool has_edge(int u, int v) const { return knows(u, v) && knows(v, u); }

    [[nodiscard]] std::vector<int> side_info(int i) const {
        std::vector<int> out;
        for (int j = 0; j < n_; ++j)
            if (knows(i, j)) out.push_back(j);
        return out;
    }

    [[nodiscard]] int edge_count() const {
        int count = 0;
        for (int i = 0; i < n_; ++i)
            for (int j = i + 1; j < n_; ++j)
                if (has_edge(i, j)) ++count;
        return count;
    }

    [[nodiscard]] int degree(int v) const {
        int deg = 0;
        for (int j = 0; j < n_; ++j)
            if (j != v && has_edge(v, j)) ++deg;
        return deg;
    }

    friend bool operator==(const SideInfoGraph& a, const SideInfoGraph& b) {
        return a.n_ == b.n_ && a.side_ == b.side_;
    }

private:
    int n_;
    std::vector<std::uint64_t> side_;
};

/// Complement by side-information sets: S'_i = [n] \ (S_i u {i}). For
/// undirected graphs this is the ordinary graph complement; for directed
/// graphs it is the convention the tensor-product bound is proved with.
inline SideInfoGraph complement(const SideInfoGraph& g) {
    SideInfoGraph out(g.n());
    for (int i = 0; i < g.n(); ++i)
        for (int j = 0; j < g.n(); ++j)
            if (j != i && !g.knows(i, j)) out.add(i, j);
    return out;
}

/// Induced subgraph on S; vertices are relabeled 0..|S|-1 preserving the
/// order they appear in S.
inline SideInfoGraph induced_subgraph(const SideInfoGraph& g, const std::vector<int>& s) {
    if (s.empty()) throw std::invalid_argument("induced_subgraph: empty vertex set");
    for (int v : s)
        if (v < 0 || v >= g.n()) throw std::invalid_argument("induced_subgraph: vertex out of range");
    SideInfoGraph out(static_cast<int>(s.size()));
    for (size_t a = 0; a < s.size(); ++a)
        for (size_t b = 0; b < s.size(); ++b)
            if (a != b && g.knows(s[a], s[b])) out.add(static_cast<int>(a), static_cast<int>(b));
    return out;
}

namespace detail {

inline bool iso_extend(const SideInfoGraph& g, const SideInfoGraph& h, std::vector<int>& map,
                       std::vector<bool>& used, int next) {
    const int n = g.n();
    if (next == n) return true;
    for (int cand = 0; cand < n; ++cand) {
        if (used[cand] || g.degree(next) != h.degree(cand)) continue;
        bool ok = true;
        for (int prev = 0; prev < next && ok; ++prev)
            if (g.has_edge(next, prev) != h.has_edge(cand, map[prev])) ok = false;
        if (!ok) continue;
        map[next] = cand;
        used[cand] = true;
        if (iso_extend(g, h, map, used, next + 1)) return true;
        used[cand] = false;
    }
    return false;
}

}  // namespace detail

/// Exact isomorphism test for small undirected graphs (backtracking with
/// degree pruning). Only needed inside the circular-clique search, so the
/// size limit is strict.
inline bool is_isomorphic(const SideInfoGraph& g, const SideInfoGraph& h) {
    if (!g.is_undirected() || !h.is_undirected())
        throw std::invalid_argument("is_isomorphic: undirected graphs only");
    limits::check(g.n() <= limits::iso_max_n() && h.n() <= limits::iso_max_n(),
                  "is_isomorphic: n <= 12");
    if (g.n() != h.n() || g.edge_count() != h.edge_count()) return false;
    std::vector<int> dg, dh;
    for (int v = 0; v < g.n(); ++v) {
        dg.push_back(g.degree(v));
        dh.push_back(h.degree(v));
    }
    std::sort(dg.begin(), dg.end());
    std::sort(dh.begin(), dh.end());
    if (dg != dh) return false;
    std::vector<int> map(g.n(), -1);
    std::vector<bool> used(g.n(), false);
    return detail::iso_extend(g, h, map, used, 0);
}

}  // namespace circix
