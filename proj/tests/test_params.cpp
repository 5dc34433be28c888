#include <catch2/catch_amalgamated.hpp>

#include "circix/generators.hpp"
#include "circix/params.hpp"

using namespace circix;

namespace {

int brute_force_omega(const SideInfoGraph& g) {
    int best = 0;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << g.n()); ++mask) {
        std::vector<int> verts;
        for (int v = 0; v < g.n(); ++v)
            if ((mask >> v) & 1) verts.push_back(v);
        bool clique = true;
        for (size_t a = 0; a < verts.size() && clique; ++a)
            for (size_t b = a + 1; b < verts.size() && clique; ++b)
                if (!g.has_edge(verts[a], verts[b])) clique = false;
        if (clique) best = std::max(best, static_cast<int>(verts.size()));
    }
    return best;
}

// Exhaustive proper-coloring oracle: try every assignment of c colors.
bool brute_force_colorable(const SideInfoGraph& g, int c) {
    std::vector<int> color(g.n(), 0);
    while (true) {
        bool proper = true;
        for (int u = 0; u < g.n() && proper; ++u)
            for (int v = u + 1; v < g.n() && proper; ++v)
                if (g.has_edge(u, v) && color[u] == color[v]) proper = false;
        if (proper) return true;
        int i = g.n();
        while (i > 0 && color[i - 1] == c - 1) color[--i] = 0;
        if (i == 0) return false;
        ++color[i - 1];
    }
}

}  // namespace

TEST_CASE("clique number") {
    CHECK(clique_number(complete(6)) == 6);
    CHECK(clique_number(cycle(5)) == 2);
    CHECK(clique_number(web(9, 3)) == 3);
    CHECK(clique_number(web(9, 3)) == brute_force_omega(web(9, 3)));
    CHECK(clique_number(edgeless(4)) == 1);
    CHECK_THROWS_AS(clique_number(random_digraph(4, 0.5, 1)), std::invalid_argument);

    for (std::uint64_t seed = 0; seed < 15; ++seed) {
        const auto g = random_graph(9, 0.25 + 0.05 * static_cast<double>(seed), seed);
        CHECK(clique_number(g) == brute_force_omega(g));
    }
}

TEST_CASE("chromatic number") {
    CHECK(chromatic_number(cycle(5)) == 3);
    CHECK(chromatic_number(edgeless(7)) == 1);
    CHECK(chromatic_number(web(9, 3)) == 3);
    CHECK(chromatic_number(complete(8)) == 8);
    CHECK_THROWS_AS(chromatic_number(random_digraph(4, 0.5, 1)), std::invalid_argument);

    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const auto g = random_graph(7, 0.5, seed);
        const int chi = chromatic_number(g);
        CHECK(brute_force_colorable(g, chi));
        if (chi > 1) CHECK_FALSE(brute_force_colorable(g, chi - 1));
    }
}

TEST_CASE("lex-least optimal coloring") {
    const auto result = chromatic(cycle(5));
    CHECK(result.chi == 3);
    CHECK(result.coloring == std::vector<int>{0, 1, 0, 1, 2});
    CHECK(chromatic(complete(3)).coloring == std::vector<int>{0, 1, 2});
}

TEST_CASE("circular coloring search") {
    const auto c5 = has_circular_coloring(cycle(5), 5, 2);
    REQUIRE(c5.has_value());
    CHECK(c5->assignment == std::vector<int>{0, 2, 4, 1, 3});
    CHECK(coloring_is_valid(cycle(5), *c5));

    CHECK_FALSE(has_circular_coloring(cycle(5), 2, 1).has_value());

    const auto k3 = has_circular_coloring(complete(3), 3, 1);
    REQUIRE(k3.has_value());
    CHECK(k3->assignment == std::vector<int>{0, 1, 2});

    // Edgeless graphs accept any (k, d).
    CHECK(has_circular_coloring(edgeless(4), 3, 5).has_value());
}

TEST_CASE("circular chromatic number") {
    CHECK(circular_chromatic_number(cycle(7)).value == Rational(7, 3));
    CHECK(circular_chromatic_number(web(9, 3)).value == Rational(3, 1));
    CHECK(circular_chromatic_number(complete(6)).value == Rational(6, 1));
    CHECK(circular_chromatic_number(cycle(5)).value == Rational(5, 2));
    CHECK(circular_chromatic_number(edgeless(5)).value == Rational(1, 1));
    const auto witness = circular_chromatic_number(cycle(9));
    CHECK(witness.value == Rational(9, 4));
    CHECK(coloring_is_valid(cycle(9), witness.coloring));
}

TEST_CASE("circular cliques are their own witnesses") {
    for (auto [k, d] : {std::pair{5, 2}, {7, 2}, {7, 3}, {8, 3}, {9, 4}, {10, 3}}) {
        CHECK(circular_chromatic_number(circular_clique(k, d)).value == Rational(k, d));
        CHECK(circular_clique_number(circular_clique(k, d)) == Rational(k, d));
    }
    CHECK(circular_clique_number(complete(7)) == Rational(7, 1));
}

TEST_CASE("closed-form chi_c for the named families") {
    // Even cycles sit at 2, odd cycles at 2 + 1/d.
    CHECK(circular_chromatic_number(cycle(6)).value == Rational(2, 1));
    CHECK(circular_chromatic_number(cycle(8)).value == Rational(2, 1));
    // Interlacing graphs on n points with k-subsets: chi_c = n/k.
    CHECK(circular_chromatic_number(interlacing_graph(5, 2, 2)).value == Rational(5, 2));
    CHECK(circular_chromatic_number(interlacing_graph(6, 2, 2)).value == Rational(3, 1));
    CHECK(circular_chromatic_number(interlacing_graph(7, 3, 2)).value == Rational(7, 3));
    CHECK(circular_chromatic_number(interlacing_graph(6, 3, 2)).value == Rational(2, 1));
    CHECK(circular_chromatic_number(interlacing_graph(8, 4, 2)).value == Rational(2, 1));
    CHECK(circular_chromatic_number(interlacing_graph(6, 2, 3)).value == Rational(3, 1));
    // Webs: chi_c = p / floor(p/q).
    CHECK(circular_chromatic_number(web(7, 2)).value == Rational(7, 3));
    CHECK(circular_chromatic_number(web(10, 3)).value == Rational(10, 3));
}

TEST_CASE("circular clique number") {
    CHECK(circular_clique_number(cycle(5)) == Rational(5, 2));
    CHECK(circular_clique_number(complete(4)) == Rational(4, 1));
    CHECK(circular_clique_number(cycle(7)) == Rational(7, 3));
    CHECK(circular_clique_number(cycle(9)) == Rational(9, 4));
    CHECK(circular_clique_number(edgeless(3)) == Rational(1, 1));
    CHECK(circular_clique_number(web(9, 3)) == Rational(3, 1));
}

TEST_CASE("circular perfectness") {
    CHECK(is_circular_perfect(cycle(5)));
    CHECK(is_circular_perfect(web(9, 3)));
    CHECK_FALSE(is_circular_perfect(web(8, 3)));
    const auto report = circular_perfect_check(web(8, 3));
    CHECK_FALSE(report.circular_perfect);
    const auto h = induced_subgraph(web(8, 3), report.witness);
    CHECK(circular_clique_number(h) == report.witness_omega_c);
    CHECK(circular_chromatic_number(h).value == report.witness_chi_c);
    CHECK_FALSE(report.witness_omega_c == report.witness_chi_c);
}

TEST_CASE("perfectness") {
    CHECK(is_perfect(complete(5)));
    CHECK(is_perfect(random_graph(8, 0.0, 0)));
    // Bipartite graphs have no odd cycles at all.
    SideInfoGraph bip(6);
    for (int u = 0; u < 3; ++u)
        for (int v = 3; v < 6; ++v)
            if ((u + v) % 2 == 0) bip.add_edge(u, v);
    CHECK(is_perfect(bip));
    CHECK_FALSE(is_perfect(cycle(5)));
    CHECK_FALSE(is_perfect(cycle(7)));
    CHECK_FALSE(is_perfect(complement(cycle(7))));  // odd antihole
    CHECK(is_perfect(join_at_vertex(complete(3), edgeless(3))));
    CHECK(is_perfect(cycle(6)));
}

TEST_CASE("parameter chain and floor/ceil identities") {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        const auto g = random_graph(3 + static_cast<int>(seed % 5), 0.45, seed);
        const auto report = param_report(g);
        CHECK(Rational(report.omega) <= report.omega_c);
        CHECK(report.omega_c <= report.chi_c);
        CHECK(report.chi_c <= Rational(report.chi));
        CHECK(report.omega_c.floor() == report.omega);
        CHECK(report.chi_c.ceil() == report.chi);
        REQUIRE(report.perfect.has_value());
        REQUIRE(report.circular_perfect.has_value());
        if (*report.perfect) CHECK(*report.circular_perfect);
        if (*report.circular_perfect) CHECK(report.omega_c == report.chi_c);
    }
}

TEST_CASE("size limits") {
    CHECK_THROWS_AS(circular_chromatic_number(edgeless(13)), limit_error);
    CHECK_THROWS_AS(is_circular_perfect(edgeless(11)), limit_error);
    CHECK_THROWS_AS(is_perfect(edgeless(13)), limit_error);
}
