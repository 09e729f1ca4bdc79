#include "hopfgraph/io.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <vector>

#include <json.hpp>

#include "hopfgraph/graph_sum.hpp"
#include "hopfgraph/poly.hpp"
#include "hopfgraph/qsym.hpp"

namespace hopfgraph {

namespace {

using nlohmann::json;

std::string strip(std::string_view s) {
    std::string out;
    for (char c : s) {
        if (!std::isspace(static_cast<unsigned char>(c))) out += c;
    }
    return out;
}

int parse_int(std::string_view s, const char* what) {
    try {
        size_t used = 0;
        int value = std::stoi(std::string(s), &used);
        if (used != s.size()) throw std::invalid_argument("");
        return value;
    } catch (const std::exception&) {
        throw std::invalid_argument(std::string("bad ") + what + ": '" + std::string(s) + "'");
    }
}

Multigraph parse_text_format(const std::string& spec) {
    // n=<int>;edges=<u>-<v>,... (whitespace already stripped)
    auto semi = spec.find(';');
    std::string n_part = semi == std::string::npos ? spec : spec.substr(0, semi);
    if (!n_part.starts_with("n=")) {
        throw std::invalid_argument("graph spec must start with n=<int>: '" + spec + "'");
    }
    Multigraph g(parse_int(n_part.substr(2), "vertex count"));
    if (semi == std::string::npos) return g;
    std::string edge_part = spec.substr(semi + 1);
    if (!edge_part.starts_with("edges=")) {
        throw std::invalid_argument("expected edges=...: '" + spec + "'");
    }
    edge_part = edge_part.substr(6);
    size_t at = 0;
    while (at < edge_part.size()) {
        size_t comma = edge_part.find(',', at);
        std::string item = edge_part.substr(at, comma == std::string::npos ? comma : comma - at);
        auto dash = item.find('-', item.starts_with("-") ? 1 : 0);
        if (dash == std::string::npos) {
            throw std::invalid_argument("bad edge '" + item + "'");
        }
        g.add_edge(parse_int(item.substr(0, dash), "endpoint"),
                   parse_int(item.substr(dash + 1), "endpoint"));
        at = comma == std::string::npos ? edge_part.size() : comma + 1;
    }
    return g;
}

Multigraph parse_json_format(const std::string& text) {
    json doc = json::parse(text);
    Multigraph g(doc.at("n").get<int>());
    for (const auto& pair : doc.value("edges", json::array())) {
        g.add_edge(pair.at(0).get<int>(), pair.at(1).get<int>());
    }
    return g;
}

bool parse_named(const std::string& spec, Multigraph& out) {
    std::string head;
    size_t at = 0;
    while (at < spec.size() && !std::isdigit(static_cast<unsigned char>(spec[at]))) ++at;
    head = spec.substr(0, at);
    std::string family;
    if (head == "K") family = "complete";
    else if (head == "C") family = "cycle";
    else if (head == "P") family = "path";
    else if (head == "E") family = "edgeless";
    else if (head == "star") family = "star";
    else return false;
    if (at == spec.size()) return false;
    out = Multigraph::named(family, parse_int(spec.substr(at), "family size"));
    return true;
}

}  // namespace

std::string format_text(const Multigraph& g) {
    std::string out = "n=" + std::to_string(g.vertex_count()) + "; edges=";
    for (size_t i = 0; i < g.edges().size(); ++i) {
        if (i > 0) out += ",";
        out += std::to_string(g.edges()[i].u) + "-" + std::to_string(g.edges()[i].v);
    }
    return out;
}

Multigraph parse_graph(std::string_view spec) {
    std::string s = strip(spec);
    if (s.empty()) throw std::invalid_argument("empty graph spec");
    if (s[0] == '{') return parse_json_format(s);
    if (Multigraph named; parse_named(s, named)) return named;
    return parse_text_format(s);
}

std::string graph_to_json(const Multigraph& g) {
    json edges = json::array();
    for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
    return json{{"n", g.vertex_count()}, {"edges", edges}}.dump();
}

std::string graphsum_to_json(const GraphSum& s) {
    // Graph sums serialize as a bare list of {graph, coeff} entries.
    json terms = json::array();
    for (const auto& [key, coeff] : s.terms()) {
        terms.push_back({{"graph", format_text(key.to_multigraph())}, {"coeff", coeff.str()}});
    }
    return terms.dump();
}

std::string bivar_to_json(const BivarPoly& p) {
    // Highest x power first, then highest y.
    std::vector<std::pair<std::pair<int, int>, Rational>> entries(p.terms().begin(),
                                                                  p.terms().end());
    std::sort(entries.begin(), entries.end(),
              [](const auto& a, const auto& b) { return a.first > b.first; });
    json terms = json::array();
    for (const auto& [exps, coeff] : entries) {
        terms.push_back({{"x", exps.first}, {"y", exps.second}, {"coeff", coeff.str()}});
    }
    return json{{"terms", terms}}.dump();
}

std::string polyk_to_json(const PolyInK& p) {
    json terms = json::array();
    for (int i = p.degree(); i >= 0; --i) {
        if (p.coeff(i).is_zero()) continue;
        terms.push_back({{"k", i}, {"coeff", p.coeff(i).str()}});
    }
    return json{{"terms", terms}}.dump();
}

std::string qsym_to_json(const QSymElement& q) {
    json terms = json::array();
    for (const auto& [alpha, coeff] : q.terms()) {
        terms.push_back({{"alpha", alpha}, {"coeff", coeff.str()}});
    }
    return json{{"terms", terms}}.dump();
}

}  // namespace hopfgraph
