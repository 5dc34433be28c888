// circix: index codes from circular colorings, exact graph parameters, and
// the exhaustive oracles that certify optimality. See README.md for the
// command reference; all outputs are JSON (or CSV/DOT where noted) and every
// command is deterministic given its flags and --seed.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "circix/acceptance.hpp"
#include "circix/circix.hpp"

namespace {

using circix::json;
using circix::Rational;

std::string bound_string(const circix::BetaLowerBound& bound) {
    if (bound.exact) return bound.exact_value.str();
    char buffer[32];
    std::snprintf(buffer, sizeof(buffer), "%.6f", bound.approx);
    return buffer;
}

void emit(const std::string& text, const std::string& out_path) {
    const std::string body = text.ends_with('\n') ? text : text + "\n";
    if (out_path.empty())
        std::cout << body;
    else
        circix::save_text(out_path, body);
}

void emit(const json& j, const std::string& out_path) { emit(j.dump(2), out_path); }

circix::SideInfoGraph load_graph(const std::string& path) {
    return circix::graph_from_json(circix::load_json(path));
}

int parse_int(const std::vector<std::string>& args, size_t index, const char* what) {
    if (index >= args.size()) throw std::invalid_argument(std::string("gen: missing ") + what);
    return std::stoi(args[index]);
}

double parse_double(const std::vector<std::string>& args, size_t index, const char* what) {
    if (index >= args.size()) throw std::invalid_argument(std::string("gen: missing ") + what);
    return std::stod(args[index]);
}

circix::SideInfoGraph generate(const std::string& family, const std::vector<std::string>& p,
                               std::uint64_t seed) {
    using namespace circix;
    if (family == "circular-clique") return circular_clique(parse_int(p, 0, "k"), parse_int(p, 1, "d"));
    if (family == "web") return web(parse_int(p, 0, "p"), parse_int(p, 1, "q"));
    if (family == "cycle") return cycle(parse_int(p, 0, "n"));
    if (family == "complete") return complete(parse_int(p, 0, "n"));
    if (family == "edgeless") return edgeless(parse_int(p, 0, "n"));
    if (family == "join-at-vertex") {
        const int n = parse_int(p, 0, "n");
        return join_at_vertex(complete(n), edgeless(n));
    }
    if (family == "neighbouring-side-info")
        return symmetric_neighbouring_side_info(parse_int(p, 0, "n"), parse_int(p, 1, "d"));
    if (family == "neighbouring-interference")
        return symmetric_neighbouring_interference(parse_int(p, 0, "n"), parse_int(p, 1, "D"));
    if (family == "interlacing")
        return interlacing_graph(parse_int(p, 0, "n"), parse_int(p, 1, "k"), parse_int(p, 2, "r"));
    if (family == "random") return random_graph(parse_int(p, 0, "n"), parse_double(p, 1, "edge_prob"), seed);
    if (family == "random-digraph")
        return random_digraph(parse_int(p, 0, "n"), parse_double(p, 1, "arc_prob"), seed);
    throw std::invalid_argument("gen: unknown family '" + family + "'");
}

json interval_json(const circix::RateInterval& iv) {
    return json{{"lo", iv.lo.str()}, {"hi", iv.hi.str()}, {"exact", iv.exact()}};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"index codes for complements of circular perfect graphs"};
    app.require_subcommand(1);

    // ---- gen ------------------------------------------------------------
    std::string gen_family, gen_out, gen_format = "json";
    std::vector<std::string> gen_params;
    std::uint64_t gen_seed = 0;
    bool gen_complement = false;
    auto* gen = app.add_subcommand("gen", "generate a side-information graph");
    gen->add_option("family", gen_family,
                    "circular-clique|web|cycle|complete|edgeless|join-at-vertex|"
                    "neighbouring-side-info|neighbouring-interference|interlacing|"
                    "random|random-digraph")
        ->required();
    gen->add_option("params", gen_params, "family parameters");
    gen->add_option("--seed", gen_seed, "seed for random families");
    gen->add_option("--out", gen_out, "output path (default stdout)");
    gen->add_option("--format", gen_format, "json|dot")->check(CLI::IsMember({"json", "dot"}));
    gen->add_flag("--complement", gen_complement, "emit the complement instead");

    // ---- params ----------------------------------------------------------
    std::string params_graph, params_out;
    auto* params_cmd = app.add_subcommand("params", "exact graph parameters");
    params_cmd->add_option("graph", params_graph, "graph JSON file")->required();
    params_cmd->add_option("--out", params_out, "output path (default stdout)");

    // ---- construct ---------------------------------------------------------
    std::string cons_graph, cons_coloring, cons_out;
    int cons_q = 2;
    auto* cons = app.add_subcommand("construct", "build the coloring-based code");
    cons->add_option("graph", cons_graph, "side-information graph JSON")->required();
    cons->add_option("--q", cons_q, "prime field size");
    cons->add_option("--coloring", cons_coloring,
                     "circular coloring of the complement (computed if omitted)");
    cons->add_option("--out", cons_out, "code output path (default stdout)");

    // ---- verify ------------------------------------------------------------
    std::string verify_graph, verify_code, verify_out;
    auto* verify = app.add_subcommand("verify", "check a code against the validity criterion");
    verify->add_option("graph", verify_graph)->required();
    verify->add_option("code", verify_code)->required();
    verify->add_option("--out", verify_out, "output path (default stdout)");

    // ---- decode-demo ---------------------------------------------------------
    std::string demo_graph, demo_code, demo_out;
    int demo_q = 2;
    std::uint64_t demo_seed = 0;
    auto* demo = app.add_subcommand("decode-demo", "encode a random message and decode everywhere");
    demo->add_option("graph", demo_graph)->required();
    demo->add_option("--code", demo_code, "code JSON (constructed if omitted)");
    demo->add_option("--q", demo_q, "prime field size when constructing");
    demo->add_option("--seed", demo_seed, "message seed");
    demo->add_option("--out", demo_out, "output path (default stdout)");

    // ---- oracle ------------------------------------------------------------
    auto* oracle = app.add_subcommand("oracle", "exact exhaustive oracles");
    oracle->require_subcommand(1);
    std::string conf_graph, conf_out;
    int conf_t = 1, conf_q = 2;
    auto* conf = oracle->add_subcommand("confusion", "confusion-graph clique bound");
    conf->add_option("graph", conf_graph)->required();
    conf->add_option("--t", conf_t, "message length");
    conf->add_option("--q", conf_q, "field size");
    conf->add_option("--out", conf_out, "output path (default stdout)");

    std::string ex_graph, ex_out;
    int ex_q = 2, ex_lmax = 0;
    auto* ex = oracle->add_subcommand("exhaustive", "optimal scalar linear code");
    ex->add_option("graph", ex_graph)->required();
    ex->add_option("--q", ex_q, "field size");
    ex->add_option("--l-max", ex_lmax, "largest code length to try (default n)");
    ex->add_option("--out", ex_out, "output path (default stdout)");

    // ---- report ------------------------------------------------------------
    std::string report_graph, report_out;
    int report_q = 2;
    auto* report = app.add_subcommand("report", "sandwich report with certification");
    report->add_option("graph", report_graph)->required();
    report->add_option("--q", report_q, "field size");
    report->add_option("--out", report_out, "output path (default stdout)");

    // ---- ng ------------------------------------------------------------
    std::string ng_graph, ng_out;
    int ng_q = 2;
    auto* ng = app.add_subcommand("ng", "Nordhaus-Gaddum bound report");
    ng->add_option("graph", ng_graph)->required();
    ng->add_option("--q", ng_q, "field size");
    ng->add_option("--out", ng_out, "output path (default stdout)");

    // ---- suite ------------------------------------------------------------
    std::string suite_csv = "suite.csv", suite_json = "suite.json";
    int suite_maxn = 5, suite_q = 2;
    std::uint64_t suite_seed = 0;
    auto* suite = app.add_subcommand("suite", "run the full acceptance battery");
    suite->add_option("--max-n", suite_maxn, "sweep bound (5..6)");
    suite->add_option("--q", suite_q, "base field for sweeps");
    suite->add_option("--seed", suite_seed, "randomness seed");
    suite->add_option("--out", suite_csv, "CSV path");
    suite->add_option("--json", suite_json, "pass/fail JSON path");

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed()) {
            auto g = generate(gen_family, gen_params, gen_seed);
            if (gen_complement) g = circix::complement(g);
            if (gen_format == "dot")
                emit(circix::to_dot(g), gen_out);
            else
                emit(circix::to_json(g), gen_out);
        } else if (params_cmd->parsed()) {
            const auto g = load_graph(params_graph);
            const auto r = circix::param_report(g);
            json j{{"omega", r.omega},
                   {"chi", r.chi},
                   {"omega_c", r.omega_c.str()},
                   {"chi_c", r.chi_c.str()}};
            j["circular_perfect"] = r.circular_perfect ? json(*r.circular_perfect) : json();
            j["perfect"] = r.perfect ? json(*r.perfect) : json();
            emit(j, params_out);
        } else if (cons->parsed()) {
            const auto g = load_graph(cons_graph);
            const circix::PrimeField field(cons_q);
            circix::CircularColoring coloring =
                cons_coloring.empty()
                    ? circix::circular_chromatic_number(circix::complement(g)).coloring
                    : circix::coloring_from_json(circix::load_json(cons_coloring));
            const auto code = circix::build_code(g, coloring, field);
            json j = circix::to_json(code);
            j["rate"] = code.rate().str();
            j["coloring"] = circix::to_json(coloring);
            // Circular-clique certificate; null when the graph is too large
            // for the omega_c search.
            if (g.n() <= circix::limits::circular_max_n()) {
                const Rational omega_c = circix::circular_clique_number(circix::complement(g));
                j["optimal"] = omega_c == code.rate();
            } else {
                j["optimal"] = json();
            }
            emit(j, cons_out);
        } else if (verify->parsed()) {
            const auto g = load_graph(verify_graph);
            const auto code = circix::code_from_json(circix::load_json(verify_code));
            const auto r = circix::check_validity(code, g);
            json violations = json::array();
            for (auto [i, jdx] : r.violations) violations.push_back({i, jdx});
            emit(json{{"valid", r.valid}, {"violations", violations}, {"rate", code.rate().str()}},
                 verify_out);
        } else if (demo->parsed()) {
            const auto g = load_graph(demo_graph);
            const auto code =
                demo_code.empty()
                    ? circix::build_code(
                          g, circix::circular_chromatic_number(circix::complement(g)).coloring,
                          circix::PrimeField(demo_q))
                    : circix::code_from_json(circix::load_json(demo_code));
            circix::SplitMix64 rng(demo_seed);
            std::vector<int> x(code.n * code.t);
            for (int& e : x) e = static_cast<int>(rng.below(code.field.q()));
            const auto codeword = circix::encode(code, x);
            json decoded = json::array();
            bool all_ok = true;
            for (int i = 0; i < g.n(); ++i) {
                circix::SideValues side;
                for (int u = 0; u < g.n(); ++u) {
                    if (!g.knows(i, u)) continue;
                    std::vector<int> block(code.t);
                    for (int j = 0; j < code.t; ++j) block[j] = x[code.col(u, j)];
                    side[u] = block;
                }
                const auto xi = circix::decode(code, g, i, codeword, side);
                decoded.push_back(xi);
                for (int j = 0; j < code.t; ++j) all_ok = all_ok && xi[j] == x[code.col(i, j)];
            }
            emit(json{{"q", code.field.q()},
                      {"rate", code.rate().str()},
                      {"message", x},
                      {"codeword", codeword},
                      {"decoded", decoded},
                      {"all_decoded", all_ok}},
                 demo_out);
        } else if (conf->parsed()) {
            const auto g = load_graph(conf_graph);
            const auto bound = circix::beta_lower_bound(g, conf_t, circix::PrimeField(conf_q));
            emit(json{{"omega", bound.omega},
                      {"bound", bound_string(bound)},
                      {"vertices", bound.vertices},
                      {"exact", bound.exact}},
                 conf_out);
        } else if (ex->parsed()) {
            const auto g = load_graph(ex_graph);
            const int l_max = ex_lmax > 0 ? ex_lmax : g.n();
            const auto found = circix::beta_scalar_exhaustive(g, circix::PrimeField(ex_q), l_max);
            if (found)
                emit(json{{"beta_sl", found->beta_sl}, {"witness", circix::to_json(found->witness)}},
                     ex_out);
            else
                emit(json{{"beta_sl", nullptr},
                          {"note", "no valid scalar code with l <= " + std::to_string(l_max)}},
                     ex_out);
        } else if (report->parsed()) {
            const auto g = load_graph(report_graph);
            const auto r = circix::sandwich_report(g, circix::PrimeField(report_q));
            json j{{"n", r.n},
                   {"q", r.q},
                   {"omega_bar", r.omega_bar},
                   {"omega_c_bar", r.omega_c_bar.str()},
                   {"constructed_rate", r.constructed_rate.str()},
                   {"constructed_valid", r.constructed_valid},
                   {"chi_bar", r.chi_bar},
                   {"chain_ok", r.chain_ok},
                   {"beta_certified", r.beta_certified}};
            j["beta_sl"] = r.beta_sl ? json(*r.beta_sl) : json();
            j["beta"] = r.beta_certified ? json(r.beta.str()) : json();
            if (r.confusion)
                j["confusion"] = json{{"omega", r.confusion->omega},
                                      {"bound", bound_string(*r.confusion)},
                                      {"vertices", r.confusion->vertices}};
            else
                j["confusion"] = json();
            emit(j, report_out);
        } else if (ng->parsed()) {
            const auto g = load_graph(ng_graph);
            const circix::PrimeField field(ng_q);
            json j{{"n", g.n()}, {"q", ng_q}, {"directed", !g.is_undirected()}};
            if (g.is_undirected()) {
                const auto prod = circix::product_bound_report(g, field);
                const auto sum = circix::sum_bound_report(g, field);
                j["product"] = json{{"beta_g", interval_json(prod.beta_g)},
                                    {"beta_gbar", interval_json(prod.beta_gbar)},
                                    {"lo", prod.product_lo.str()},
                                    {"hi", prod.product_hi.str()},
                                    {"consistent_with_lower", prod.consistent_with_lower},
                                    {"consistent_with_upper", prod.consistent_with_upper},
                                    {"lower_equality_certified", prod.lower_equality_certified},
                                    {"upper_equality_certified", prod.upper_equality_certified},
                                    {"exact", prod.exact}};
                j["sum"] = json{{"lo", sum.sum_lo.str()},
                                {"hi", sum.sum_hi.str()},
                                {"chromatic_upper_ok", sum.chromatic_upper_ok},
                                {"upper_ok", sum.upper_ok},
                                {"consistent_with_lower", sum.consistent_with_lower},
                                {"lower_equality_possible", sum.lower_equality_possible},
                                {"upper_equality_certified", sum.upper_equality_certified}};
            } else {
                // The product lower bound still applies to directed graphs,
                // with the complement taken on side-information sets.
                j["complement_convention"] = "side-information";
            }
            // Tensor-rank witness pair: oracle codes when small, otherwise
            // the uncoded baseline (always valid).
            const auto pick_code = [&](const circix::SideInfoGraph& graph) {
                if (graph.n() <= circix::limits::exhaustive_max_n() &&
                    field.q() <= circix::limits::exhaustive_max_q())
                    return circix::beta_scalar_exhaustive(graph, field, graph.n())->witness;
                return circix::LinearIndexCode::uncoded(field, graph.n());
            };
            const auto tensor =
                circix::tensor_rank_check(pick_code(g), pick_code(circix::complement(g)), g);
            j["tensor_rank"] = json{{"t", tensor.t},
                                    {"l1", tensor.l1},
                                    {"l2", tensor.l2},
                                    {"rank", tensor.rank},
                                    {"rank_full", tensor.rank_full},
                                    {"length_product_ok", tensor.length_product_ok}};
            emit(j, ng_out);
        } else if (suite->parsed()) {
            const auto results = circix::acceptance::run_all(
                {suite_seed, suite_maxn, suite_q});
            circix::save_text(suite_csv, circix::acceptance::to_csv(results));
            json criteria = json::array();
            bool all_pass = true;
            for (const auto& r : results) {
                json checks = json::array();
                for (const auto& chk : r.checks)
                    checks.push_back(json{{"name", chk.name},
                                          {"pass", chk.pass},
                                          {"detail", chk.detail}});
                criteria.push_back(json{{"id", r.id},
                                        {"name", r.name},
                                        {"pass", r.pass},
                                        {"seconds", r.seconds},
                                        {"budget_seconds", r.budget_seconds},
                                        {"checks", checks}});
                all_pass = all_pass && r.pass;
            }
            const json summary{{"all_pass", all_pass},
                               {"criteria", criteria},
                               {"csv", suite_csv},
                               {"seed", suite_seed},
                               {"max_n", suite_maxn},
                               {"q", suite_q}};
            circix::save_text(suite_json, summary.dump(2) + "\n");
            std::cout << summary.dump(2) << '\n';
            return all_pass ? 0 : 1;
        }
    } catch (const circix::limit_error& e) {
        std::cerr << "limit exceeded: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
