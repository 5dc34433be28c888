#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

#include "circix/confusion.hpp"
#include "circix/generators.hpp"
#include "circix/prng.hpp"
#include "circix/search.hpp"

using namespace circix;

namespace {

// Straight re-derivation of the adjacency rule, written independently of
// ConfusionGraph's digit bookkeeping.
bool slow_edge(const SideInfoGraph& g, int t, int q, long long x, long long y) {
    const auto symbol = [&](long long v, int i, int j) {
        for (int digit = 0; digit < i * t + j; ++digit) v /= q;
        return static_cast<int>(v % q);
    };
    const auto block_eq = [&](int i) {
        for (int j = 0; j < t; ++j)
            if (symbol(x, i, j) != symbol(y, i, j)) return false;
        return true;
    };
    for (int i = 0; i < g.n(); ++i) {
        if (block_eq(i)) continue;
        bool ok = true;
        for (int j = 0; j < g.n() && ok; ++j)
            if (g.knows(i, j) && !block_eq(j)) ok = false;
        if (ok) return true;
    }
    return false;
}

// Independent clique oracle: plain recursion over candidate masks with only
// the counting prune, no coloring bounds. Usable to ~64 vertices.
void simple_clique_rec(const std::vector<std::uint64_t>& adj, std::uint64_t candidates, int size,
                       int& best) {
    best = std::max(best, size);
    while (candidates != 0) {
        if (size + __builtin_popcountll(candidates) <= best) return;
        const int v = __builtin_ctzll(candidates);
        candidates &= candidates - 1;
        simple_clique_rec(adj, candidates & adj[v], size + 1, best);
    }
}

int brute_force_confusion_omega(const ConfusionGraph& gamma) {
    const int n = static_cast<int>(gamma.vertex_count());
    REQUIRE(n <= 64);
    std::vector<std::uint64_t> adj(n, 0);
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y)
            if (gamma.edge(x, y)) {
                adj[x] |= std::uint64_t{1} << y;
                adj[y] |= std::uint64_t{1} << x;
            }
    int best = 0;
    simple_clique_rec(adj, n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1, 0, best);
    return best;
}

}  // namespace

TEST_CASE("confusion edges") {
    PrimeField f2(2);
    // Edgeless base: every receiver confuses everything, Gamma_1 = K_4.
    const ConfusionGraph complete_confusion(edgeless(2), 1, f2);
    CHECK(complete_confusion.vertex_count() == 4);
    for (int x = 0; x < 4; ++x)
        for (int y = x + 1; y < 4; ++y) CHECK(complete_confusion.edge(x, y));

    // K_2 base: tuples (0,0) vs (1,0) confusable at receiver 0, but
    // (0,0) vs (1,1) differ in both known blocks.
    const ConfusionGraph k2(complete(2), 1, f2);
    CHECK(k2.edge(0b00, 0b01));
    CHECK_FALSE(k2.edge(0b00, 0b11));
    CHECK_THROWS_AS(k2.edge(1, 1), std::invalid_argument);
}

TEST_CASE("edge oracle matches an independent recomputation") {
    for (auto [n, t, q, seed] :
         {std::tuple{5, 1, 2, 0}, {3, 2, 2, 1}, {4, 1, 3, 2}, {2, 2, 3, 3}}) {
        const auto g = random_graph(n, 0.5, static_cast<std::uint64_t>(seed));
        const ConfusionGraph gamma(g, t, PrimeField(q));
        int edges = 0, slow_edges = 0;
        for (long long x = 0; x < gamma.vertex_count(); ++x)
            for (long long y = x + 1; y < gamma.vertex_count(); ++y) {
                edges += gamma.edge(x, y) ? 1 : 0;
                slow_edges += slow_edge(g, t, q, x, y) ? 1 : 0;
                CHECK(gamma.edge(x, y) == slow_edge(g, t, q, x, y));
            }
        CHECK(edges == slow_edges);
    }
    // C_5 edge count, recomputed by the independent double loop above.
    const ConfusionGraph c5(cycle(5), 1, PrimeField(2));
    int count = 0;
    for (long long x = 0; x < 32; ++x)
        for (long long y = x + 1; y < 32; ++y)
            if (c5.edge(x, y)) ++count;
    int slow_count = 0;
    for (long long x = 0; x < 32; ++x)
        for (long long y = x + 1; y < 32; ++y)
            if (slow_edge(cycle(5), 1, 2, x, y)) ++slow_count;
    CHECK(count == slow_count);
}

TEST_CASE("confusion clique numbers") {
    PrimeField f2(2);
    // Edgeless base: complete confusion graph on q^n vertices.
    CHECK(max_clique_confusion(edgeless(3), 1, f2) == 8);
    CHECK(max_clique_confusion(edgeless(2), 1, PrimeField(3)) == 9);
    // Complete base at t=1: the confusion graph is the Hamming cube graph
    // (edges at distance exactly one), whose cliques are edges.
    for (int n : {2, 3, 4}) {
        const ConfusionGraph gamma(complete(n), 1, f2);
        const int omega = max_clique_confusion(gamma);
        CHECK(omega == 2);
        CHECK(omega == brute_force_confusion_omega(gamma));
    }
    // C_5: value derived from the independent recursion, then frozen.
    const ConfusionGraph c5(cycle(5), 1, f2);
    CHECK(brute_force_confusion_omega(c5) == 4);
    CHECK(max_clique_confusion(c5) == 4);
}

TEST_CASE("clique solver matches the independent oracle on random instances") {
    SplitMix64 rng(61);
    for (int trial = 0; trial < 24; ++trial) {
        const bool directed = trial % 3 == 2;
        const int q = trial % 4 == 1 ? 3 : 2;
        int n, t;
        if (q == 3) {
            n = 2 + static_cast<int>(rng.below(2));  // 9 or 27 vertices
            t = 1;
        } else {
            t = trial % 5 == 0 ? 2 : 1;
            n = t == 2 ? 2 + static_cast<int>(rng.below(2)) : 3 + static_cast<int>(rng.below(3));
        }
        const auto g = directed ? random_digraph(n, 0.5, 7000 + trial)
                                : random_graph(n, 0.5, 7000 + trial);
        const ConfusionGraph gamma(g, t, PrimeField(q));
        REQUIRE(gamma.vertex_count() <= 64);
        CHECK(max_clique_confusion(gamma) == brute_force_confusion_omega(gamma));
    }
    // C_5 has an imperfect complement, so this exercises the search path.
    const ConfusionGraph c5(cycle(5), 1, PrimeField(2));
    CHECK(max_clique_confusion(c5) == brute_force_confusion_omega(c5));
}

TEST_CASE("beta lower bound") {
    PrimeField f2(2);
    for (int n : {2, 4, 7}) {
        const auto bound = beta_lower_bound(edgeless(n), 1, f2);
        REQUIRE(bound.exact);
        CHECK(bound.exact_value == Rational(n, 1));
        CHECK(bound.vertices == (1LL << n));
    }
    const auto k4 = beta_lower_bound(complete(4), 1, f2);
    REQUIRE(k4.exact);
    CHECK(k4.exact_value == Rational(1, 1));  // omega = 2 = q^1
    const auto c5 = beta_lower_bound(cycle(5), 1, f2);
    CHECK(c5.omega == 4);
    CHECK(c5.exact_value == Rational(2, 1));
}

TEST_CASE("induced subgraphs embed into the confusion graph") {
    SplitMix64 rng(17);
    for (int trial = 0; trial < 12; ++trial) {
        const int n = 3 + static_cast<int>(rng.below(3));
        const int t = 1 + static_cast<int>(rng.below(2));
        if (n * t > 8) continue;
        const auto g = random_graph(n, 0.5, 500 + trial);
        const int h_size = 1 + static_cast<int>(rng.below(n - 1));
        std::vector<int> vertex_map;
        for (int v = 0; v < n && static_cast<int>(vertex_map.size()) < h_size; ++v)
            if (rng.chance(0.6) || n - v == h_size - static_cast<int>(vertex_map.size()))
                vertex_map.push_back(v);
        const auto h = induced_subgraph(g, vertex_map);

        PrimeField f2(2);
        const ConfusionGraph gamma_h(h, t, f2);
        const ConfusionGraph gamma_g(g, t, f2);
        std::vector<int> fixed((n - h.n()) * t);
        for (int& digit : fixed) digit = static_cast<int>(rng.below(2));

        for (long long x = 0; x < gamma_h.vertex_count(); ++x)
            for (long long y = x + 1; y < gamma_h.vertex_count(); ++y) {
                if (!gamma_h.edge(x, y)) continue;
                const long long xg = embed_tuple(gamma_h, g, vertex_map, x, fixed);
                const long long yg = embed_tuple(gamma_h, g, vertex_map, y, fixed);
                CHECK(gamma_g.edge(xg, yg));
            }
        CHECK(max_clique_confusion(gamma_h) <= max_clique_confusion(gamma_g));
    }
}

TEST_CASE("valid codes separate confusable tuples") {
    // q^l >= omega(Gamma_t) for any valid code of length l.
    SplitMix64 rng(29);
    PrimeField f2(2);
    int tested = 0;
    for (int trial = 0; trial < 60 && tested < 12; ++trial) {
        const int n = 2 + static_cast<int>(rng.below(3));
        const auto g = random_graph(n, 0.5, 900 + trial);
        const auto found = beta_scalar_exhaustive(g, f2, n);
        REQUIRE(found.has_value());
        ++tested;
        const int omega = max_clique_confusion(g, 1, f2);
        long long codewords = 1;
        for (int i = 0; i < found->beta_sl; ++i) codewords *= 2;
        CHECK(codewords >= omega);
    }
}

TEST_CASE("confusion size limit") {
    CHECK_THROWS_AS(ConfusionGraph(edgeless(13), 1, PrimeField(2)), limit_error);
    CHECK_THROWS_AS(ConfusionGraph(edgeless(5), 2, PrimeField(3)), limit_error);
}
