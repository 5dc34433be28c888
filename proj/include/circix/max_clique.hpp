#pragma once

#include <cstdint>
#include <vector>

namespace circix::detail {

/// Dense adjacency over dynamic bitsets, sized for up to a few thousand
/// vertices (confusion graphs) while staying cheap for n <= 24 graphs.
struct BitAdjacency {
    int n = 0;
    int words = 0;
    std::vector<std::vector<std::uint64_t>> rows;

    explicit BitAdjacency(int n_) : n(n_), words((n_ + 63) / 64), rows(n_) {
        for (auto& r : rows) r.assign(words, 0);
    }
    void add_edge(int u, int v) {
        rows[u][v >> 6] |= std::uint64_t{1} << (v & 63);
        rows[v][u >> 6] |= std::uint64_t{1} << (u & 63);
    }
    [[nodiscard]] bool adjacent(int u, int v) const {
        return (rows[u][v >> 6] >> (v & 63)) & 1;
    }
};

using Bits = std::vector<std::uint64_t>;

inline bool bits_any(const Bits& b) {
    for (auto w : b)
        if (w != 0) return true;
    return false;
}
inline int bits_first(const Bits& b) {
    for (size_t i = 0; i < b.size(); ++i)
        if (b[i] != 0) return static_cast<int>(i * 64 + __builtin_ctzll(b[i]));
    return -1;
}
inline void bits_clear(Bits& b, int v) { b[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }

/// Exact maximum clique, Tomita-style branch and bound: candidates are
/// greedily colored and processed in reverse color order, pruning whenever
/// size + color can no longer beat the incumbent. Deterministic. An initial
/// incumbent and a proven upper limit (when the caller has one) tighten the
/// search; `solve` returns max(best clique found, initial incumbent).
class MaxCliqueSolver {
public:
    explicit MaxCliqueSolver(const BitAdjacency& g, int initial_best = 0, int upper_limit = -1)
        : g_(g), best_(initial_best), upper_limit_(upper_limit) {}

    int solve() {
        Bits all(g_.words, 0);
        for (int v = 0; v < g_.n; ++v) all[v >> 6] |= std::uint64_t{1} << (v & 63);
        expand(all, 0);
        return best_;
    }

private:
    [[nodiscard]] bool done() const { return upper_limit_ >= 0 && best_ >= upper_limit_; }

    void expand(Bits candidates, int size) {
        if (done()) return;
        std::vector<int> order, color;
        color_sort(candidates, order, color);
        for (int idx = static_cast<int>(order.size()) - 1; idx >= 0; --idx) {
            if (size + color[idx] <= best_ || done()) return;
            const int v = order[idx];
            Bits next(g_.words);
            bool nonempty = false;
            for (int w = 0; w < g_.words; ++w) {
                next[w] = candidates[w] & g_.rows[v][w];
                nonempty |= next[w] != 0;
            }
            if (nonempty) {
                expand(std::move(next), size + 1);
            } else if (size + 1 > best_) {
                best_ = size + 1;
            }
            bits_clear(candidates, v);
        }
    }

    /// Greedy coloring of the candidate set; emits vertices color class by
    /// color class so color[] is nondecreasing along order[].
    void color_sort(const Bits& candidates, std::vector<int>& order, std::vector<int>& color) {
        Bits uncolored = candidates;
        int c = 0;
        while (bits_any(uncolored)) {
            ++c;
            Bits avail = uncolored;
            while (bits_any(avail)) {
                const int v = bits_first(avail);
                bits_clear(uncolored, v);
                bits_clear(avail, v);
                for (int w = 0; w < g_.words; ++w) avail[w] &= ~g_.rows[v][w];
                order.push_back(v);
                color.push_back(c);
            }
        }
    }

    const BitAdjacency& g_;
    int best_ = 0;
    int upper_limit_ = -1;
};

inline int max_clique_size(const BitAdjacency& g) { return MaxCliqueSolver(g).solve(); }

}  // namespace circix::detail
