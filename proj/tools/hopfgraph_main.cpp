#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "hopfgraph/character.hpp"
#include "hopfgraph/hopf.hpp"
#include "hopfgraph/io.hpp"
#include "hopfgraph/matroid.hpp"
#include "hopfgraph/qsym.hpp"
#include "hopfgraph/tutte.hpp"
#include "hopfgraph/verify.hpp"

namespace {

using hopfgraph::Multigraph;
using hopfgraph::Rational;
using nlohmann::json;

struct Options {
    std::string graph_spec;
    std::string graph_file;
    std::string char_spec;
    int64_t k = 0;
    std::string x = "2";
    std::string y = "0";
    int m = 1;
    std::string grid;
    uint64_t seed = hopfgraph::kDefaultSeed;
    std::string format = "json";
    int jobs = 1;
    bool no_cache = false;
    std::string suite = "all";
};

Multigraph load_graph(const Options& opt) {
    if (!opt.graph_file.empty()) {
        std::ifstream in(opt.graph_file);
        if (!in) throw std::invalid_argument("cannot open graph file: " + opt.graph_file);
        std::stringstream buffer;
        buffer << in.rdbuf();
        return hopfgraph::parse_graph(buffer.str());
    }
    if (opt.graph_spec.empty()) {
        throw std::invalid_argument("a graph is required (--graph or --graph-file)");
    }
    return hopfgraph::parse_graph(opt.graph_spec);
}

std::vector<int64_t> parse_grid(const std::string& spec) {
    auto dots = spec.find("..");
    if (dots == std::string::npos) {
        throw std::invalid_argument("grid must look like '-2..4', got '" + spec + "'");
    }
    int64_t lo = std::stoll(spec.substr(0, dots));
    int64_t hi = std::stoll(spec.substr(dots + 2));
    if (lo > hi) throw std::invalid_argument("empty grid range: '" + spec + "'");
    std::vector<int64_t> out;
    for (int64_t v = lo; v <= hi; ++v) out.push_back(v);
    return out;
}

void emit(const Options& opt, const std::string& json_text, const std::string& plain_text) {
    std::cout << (opt.format == "text" ? plain_text : json_text) << "\n";
}

std::string graphsum_text(const hopfgraph::GraphSum& s) {
    if (s.is_zero()) return "0";
    std::string out;
    for (const auto& [key, coeff] : s.terms()) {
        if (!out.empty()) out += "  +  ";
        out += coeff.str() + " * [" + hopfgraph::format_text(key.to_multigraph()) + "]";
    }
    return out;
}

int run_verify(const Options& opt) {
    hopfgraph::VerifyOptions vopts;
    vopts.seed = opt.seed;
    vopts.jobs = opt.jobs;
    if (!opt.grid.empty()) vopts.k_grid = parse_grid(opt.grid);

    std::vector<hopfgraph::SuiteReport> reports;
    if (opt.suite == "all") {
        reports = hopfgraph::run_all_suites(vopts);
    } else {
        reports.push_back(hopfgraph::run_suite(opt.suite, vopts));
    }

    bool all_pass = true;
    if (opt.format == "text") {
        for (const auto& report : reports) {
            for (const auto& check : report.checks) {
                std::cout << (check.pass ? "[PASS] " : "[FAIL] ") << report.suite << ": "
                          << check.label;
                if (!check.pass && !check.detail.empty()) std::cout << " (" << check.detail << ")";
                std::cout << "\n";
            }
            all_pass = all_pass && report.passed();
        }
        std::cout << (all_pass ? "all checks passed" : "FAILURES present") << "\n";
    } else {
        json out;
        out["suites"] = json::array();
        for (const auto& report : reports) {
            json checks = json::array();
            for (const auto& check : report.checks) {
                checks.push_back(
                    {{"label", check.label}, {"pass", check.pass}, {"detail", check.detail}});
            }
            out["suites"].push_back(
                {{"suite", report.suite}, {"passed", report.passed()}, {"checks", checks}});
            all_pass = all_pass && report.passed();
        }
        out["passed"] = all_pass;
        std::cout << out.dump() << "\n";
    }
    return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computations in the graph Hopf algebra"};
    app.require_subcommand(1);
    app.fallthrough();
    Options opt;

    app.add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();
    app.add_flag("--no-cache", opt.no_cache, "disable the Tutte memo cache");

    auto add_graph_opts = [&](CLI::App* cmd) {
        cmd->add_option("--graph", opt.graph_spec, "graph spec: K5, C6, P4, star3, E7, "
                                                   "'n=3; edges=0-1,1-2', or JSON");
        cmd->add_option("--graph-file", opt.graph_file, "file holding a graph spec");
    };

    std::function<int()> action;

    auto* antipode = app.add_subcommand("antipode", "antipode S(G) as a graph sum");
    antipode->fallthrough();
    add_graph_opts(antipode);
    antipode->callback([&] {
        action = [&] {
            auto s = hopfgraph::antipode_flats(load_graph(opt));
            emit(opt, hopfgraph::graphsum_to_json(s), graphsum_text(s));
            return 0;
        };
    });

    auto* tutte_cmd = app.add_subcommand("tutte", "Tutte polynomial T_G(x,y)");
    tutte_cmd->fallthrough();
    add_graph_opts(tutte_cmd);
    auto* opt_x = tutte_cmd->add_option("--x", opt.x, "evaluate at x (rational p/q)");
    auto* opt_y = tutte_cmd->add_option("--y", opt.y, "evaluate at y (rational p/q)");
    tutte_cmd->callback([&] {
        action = [&] {
            auto t = hopfgraph::tutte(load_graph(opt));
            if (opt_x->count() || opt_y->count()) {
                Rational v = t.eval(Rational::parse(opt.x), Rational::parse(opt.y));
                emit(opt, json{{"value", v.str()}}.dump(), v.str());
            } else {
                emit(opt, hopfgraph::bivar_to_json(t), t.str());
            }
            return 0;
        };
    });

    auto* chromatic_cmd = app.add_subcommand("chromatic", "chromatic polynomial");
    chromatic_cmd->fallthrough();
    add_graph_opts(chromatic_cmd);
    chromatic_cmd->callback([&] {
        action = [&] {
            auto p = hopfgraph::chromatic(load_graph(opt));
            emit(opt, hopfgraph::polyk_to_json(p), p.str());
            return 0;
        };
    });

    auto* degree_cmd =
        app.add_subcommand("degree-chromatic", "degree-chromatic polynomial P_m(G;k)");
    degree_cmd->fallthrough();
    add_graph_opts(degree_cmd);
    degree_cmd->add_option("--m", opt.m, "degree bound m (m=1 is chromatic)")->required();
    degree_cmd->callback([&] {
        action = [&] {
            auto p = hopfgraph::degree_chromatic(load_graph(opt), opt.m);
            emit(opt, hopfgraph::polyk_to_json(p), p.str());
            return 0;
        };
    });

    auto* eval_cmd = app.add_subcommand("char-eval", "evaluate a character on a graph");
    eval_cmd->fallthrough();
    add_graph_opts(eval_cmd);
    eval_cmd->add_option("--char", opt.char_spec, "character spec, e.g. zeta, xi:2, tau:2,0")
        ->required();
    eval_cmd->callback([&] {
        action = [&] {
            Rational v = hopfgraph::parse_char_spec(opt.char_spec)(load_graph(opt));
            emit(opt, json{{"value", v.str()}}.dump(), v.str());
            return 0;
        };
    });

    auto* power_cmd =
        app.add_subcommand("char-power", "k-th convolution power of a character on a graph");
    power_cmd->fallthrough();
    add_graph_opts(power_cmd);
    power_cmd->add_option("--char", opt.char_spec, "character spec")->required();
    power_cmd->add_option("--k", opt.k, "convolution power (may be negative)")->required();
    power_cmd->callback([&] {
        action = [&] {
            Rational v = hopfgraph::convolution_power_value(
                hopfgraph::parse_char_spec(opt.char_spec), opt.k, load_graph(opt));
            emit(opt, json{{"value", v.str()}}.dump(), v.str());
            return 0;
        };
    });

    auto* poly_cmd = app.add_subcommand("poly-in-k", "polynomial k -> phi^k(G)");
    poly_cmd->fallthrough();
    add_graph_opts(poly_cmd);
    poly_cmd->add_option("--char", opt.char_spec, "character spec")->required();
    poly_cmd->callback([&] {
        action = [&] {
            auto p =
                hopfgraph::poly_in_k(hopfgraph::parse_char_spec(opt.char_spec), load_graph(opt));
            emit(opt, hopfgraph::polyk_to_json(p), p.str());
            return 0;
        };
    });

    auto* flats_cmd = app.add_subcommand("flats", "flats of the graphic matroid");
    flats_cmd->fallthrough();
    add_graph_opts(flats_cmd);
    flats_cmd->callback([&] {
        action = [&] {
            Multigraph g = load_graph(opt);
            auto all = hopfgraph::flats(g);
            json list = json::array();
            std::string text;
            for (auto f : all) {
                json edges = json::array();
                std::string line;
                for (int i = 0; i < g.edge_count(); ++i) {
                    if (f >> i & 1) {
                        edges.push_back(i);
                        if (!line.empty()) line += ",";
                        line += std::to_string(i);
                    }
                }
                list.push_back(edges);
                text += "{" + line + "}\n";
            }
            emit(opt, json{{"count", all.size()}, {"flats", list}}.dump(),
                 text + "count: " + std::to_string(all.size()));
            return 0;
        };
    });

    auto* acyclic_cmd = app.add_subcommand("acyclic-count", "number of acyclic orientations");
    acyclic_cmd->fallthrough();
    add_graph_opts(acyclic_cmd);
    acyclic_cmd->callback([&] {
        action = [&] {
            int64_t count = hopfgraph::count_acyclic_orientations(load_graph(opt));
            emit(opt, json{{"count", count}}.dump(), std::to_string(count));
            return 0;
        };
    });

    auto* verify_cmd = app.add_subcommand("verify", "run a named verification suite");
    verify_cmd->fallthrough();
    verify_cmd->add_option("suite", opt.suite, "suite name or 'all'")->required();
    verify_cmd->add_option("--seed", opt.seed, "seed for sampled corpora")->capture_default_str();
    verify_cmd->add_option("--jobs", opt.jobs, "worker threads for 'all'")->capture_default_str();
    verify_cmd->add_option("--grid", opt.grid, "k-grid override, e.g. -2..4");
    verify_cmd->callback([&] { action = [&] { return run_verify(opt); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cout << json{{"error", {{"type", "usage"}, {"message", e.what()}}}}.dump() << "\n";
        return 2;
    }

    if (opt.no_cache) hopfgraph::TutteCache::instance().set_enabled(false);

    try {
        return action();
    } catch (const std::exception& e) {
        std::cout << json{{"error", {{"type", "runtime"}, {"message", e.what()}}}}.dump() << "\n";
        return 2;
    }
}
