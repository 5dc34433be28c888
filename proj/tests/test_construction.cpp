#include <catch2/catch_amalgamated.hpp>

#include "circix/construction.hpp"
#include "circix/generators.hpp"
#include "circix/params.hpp"
#include "circix/prng.hpp"

using namespace circix;

namespace {

std::vector<int> random_message(SplitMix64& rng, const PrimeField& f, int len) {
    std::vector<int> x(len);
    for (int& e : x) e = static_cast<int>(rng.below(f.q()));
    return x;
}

SideValues side_values_for(const SideInfoGraph& g, int i, int t, const std::vector<int>& x) {
    SideValues side;
    for (int u = 0; u < g.n(); ++u) {
        if (!g.knows(i, u)) continue;
        std::vector<int> block(t);
        for (int j = 0; j < t; ++j) block[j] = x[u * t + j];
        side[u] = block;
    }
    return side;
}

}  // namespace

TEST_CASE("construction on the complement of C_5") {
    const auto g = complement(cycle(5));
    const auto chi_c = circular_chromatic_number(complement(g));
    REQUIRE(chi_c.value == Rational(5, 2));

    for (int q : {2, 3}) {
        PrimeField f(q);
        const auto code = build_code(g, chi_c.coloring, f);
        CHECK(code.t == 2);
        CHECK(code.l == 5);
        CHECK(code.rate() == Rational(5, 2));
        CHECK(is_valid(code, g));
    }
}

TEST_CASE("construction on the edgeless graph is uncoded") {
    PrimeField f2(2);
    // Complement of edgeless(4) is K_4; its chi_c coloring is (4, 1).
    const auto chi_c = circular_chromatic_number(complete(4));
    REQUIRE(chi_c.value == Rational(4, 1));
    const auto code = build_code(edgeless(4), chi_c.coloring, f2);
    CHECK(code.t == 1);
    CHECK(code.l == 4);
    // Singleton color classes: B is a permutation of I_n; the chi_c witness
    // colors vertex v with color v, so B = I_n exactly.
    CHECK(code.B == GFMatrix::identity(f2, 4));
}

TEST_CASE("construction for the web(9,3) side-information problem") {
    const auto g = circular_clique(9, 3);
    const auto gbar = complement(g);
    CHECK(gbar == web(9, 3));
    const auto chi_c = circular_chromatic_number(gbar);
    REQUIRE(chi_c.value == Rational(3, 1));

    PrimeField f2(2);
    const auto code = build_code(g, chi_c.coloring, f2);
    CHECK(code.l == 3);
    CHECK(code.t == 1);
    CHECK(code.rate() == Rational(3, 1));
    CHECK(is_valid(code, g));
}

TEST_CASE("explicit coloring: f(v) = v mod 3 on web(9,3)") {
    const auto g = circular_clique(9, 3);
    CircularColoring mod3{3, 1, {0, 1, 2, 0, 1, 2, 0, 1, 2}};
    REQUIRE(coloring_is_valid(web(9, 3), mod3));
    PrimeField f5(5);
    const auto code = build_code(g, mod3, f5);
    CHECK(code.rate() == Rational(3, 1));

    // Receiver 0 is in class C_0 = {0, 3, 6}; it recovers x_0 from T_0 by
    // subtracting the two known summands.
    const auto plan = make_plan(g, mod3);
    CHECK(plan.color_classes[0] == std::vector<int>{0, 3, 6});
    SplitMix64 rng(3);
    const auto x = random_message(rng, f5, 9);
    const auto transmissions = encode(code, x);
    CHECK(transmissions[0] == f5.add(f5.add(x[0], x[3]), x[6]));
    const int decoded =
        decode_constructed(plan, f5, transmissions, 0, 0, side_values_for(g, 0, 1, x));
    CHECK(decoded == x[0]);
}

TEST_CASE("edgeless graph: each transmission is one message symbol") {
    PrimeField f2(2);
    const auto g = edgeless(3);
    const auto chi_c = circular_chromatic_number(complete(3));
    const auto code = build_code(g, chi_c.coloring, f2);
    const auto plan = make_plan(g, chi_c.coloring);
    const std::vector<int> x{1, 0, 1};
    const auto transmissions = encode(code, x);
    for (int v = 0; v < 3; ++v)
        CHECK(decode_constructed(plan, f2, transmissions, v, 0, SideValues{}) == x[v]);
}

TEST_CASE("every message symbol appears in exactly one transmission") {
    for (auto [p, q] : {std::pair{5, 2}, {7, 2}, {9, 3}, {7, 3}}) {
        const auto g = circular_clique(p, q);
        const auto chi_c = circular_chromatic_number(complement(g));
        const auto code = build_code(g, chi_c.coloring, PrimeField(2));
        for (int col = 0; col < code.B.cols(); ++col) {
            int appearances = 0;
            for (int row = 0; row < code.B.rows(); ++row) appearances += code.B.at(row, col);
            CHECK(appearances == 1);
        }
    }
}

TEST_CASE("constructed decoder round-trips and matches the generic decoder") {
    const auto g = complement(cycle(5));
    const auto chi_c = circular_chromatic_number(cycle(5));
    PrimeField f3(3);
    const auto code = build_code(g, chi_c.coloring, f3);
    const auto plan = make_plan(g, chi_c.coloring);

    SplitMix64 rng(41);
    for (int round = 0; round < 50; ++round) {
        const auto x = random_message(rng, f3, code.n * code.t);
        const auto transmissions = encode(code, x);
        for (int v = 0; v < g.n(); ++v) {
            const auto side = side_values_for(g, v, code.t, x);
            const auto generic = decode(code, g, v, transmissions, side);
            for (int j = 0; j < code.t; ++j) {
                const int symbol = decode_constructed(plan, f3, transmissions, v, j, side);
                CHECK(symbol == x[v * code.t + j]);
                CHECK(symbol == generic[j]);
            }
        }
    }
}

TEST_CASE("construction rejects bad inputs") {
    const auto g = complement(cycle(5));
    CHECK_THROWS_AS(build_code(g, CircularColoring{5, 2, {0, 0, 0, 0, 0}}, PrimeField(2)),
                    std::invalid_argument);  // not a valid coloring of the complement
    CHECK_THROWS_AS(build_code(random_digraph(4, 0.5, 2), CircularColoring{1, 1, {0, 0, 0, 0}},
                               PrimeField(2)),
                    std::invalid_argument);  // directed
    const auto plan = make_plan(g, circular_chromatic_number(cycle(5)).coloring);
    CHECK_THROWS_AS(decode_constructed(plan, PrimeField(2), {0, 0, 0, 0, 0}, 0, 0, SideValues{}),
                    std::invalid_argument);  // missing side information
}

TEST_CASE("optimality certificate composition") {
    // When the complement is circular perfect, the constructed rate meets
    // the circular clique lower bound, certifying the broadcast rate.
    for (auto [p, q] : {std::pair{5, 2}, {9, 3}}) {
        const auto g = circular_clique(p, q);
        const auto gbar = complement(g);
        REQUIRE(is_circular_perfect(gbar));
        const auto chi_c = circular_chromatic_number(gbar);
        const auto code = build_code(g, chi_c.coloring, PrimeField(2));
        CHECK(code.rate() == circular_clique_number(gbar));
    }
}
