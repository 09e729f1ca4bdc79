#include "hopfgraph/verify.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <functional>
#include <future>
#include <map>
#include <random>
#include <set>
#include <stdexcept>

#include "hopfgraph/character.hpp"
#include "hopfgraph/hopf.hpp"
#include "hopfgraph/io.hpp"
#include "hopfgraph/matroid.hpp"
#include "hopfgraph/qsym.hpp"
#include "hopfgraph/reciprocity.hpp"
#include "hopfgraph/tutte.hpp"
#include "hopfgraph/tutte_identities.hpp"

namespace hopfgraph {

bool SuiteReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

int SuiteReport::failed_count() const {
    return static_cast<int>(
        std::count_if(checks.begin(), checks.end(), [](const CheckResult& c) { return !c.pass; }));
}

// --- corpora -----------------------------------------------------------------

std::vector<Multigraph> simple_graph_corpus(int max_n) {
    std::map<CanonicalKey, Multigraph> classes;
    for (int n = 1; n <= max_n; ++n) {
        std::vector<std::pair<int, int>> pairs;
        for (int u = 0; u < n; ++u) {
            for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
        }
        for (uint64_t mask = 0; mask < (uint64_t(1) << pairs.size()); ++mask) {
            Multigraph g(n);
            for (size_t i = 0; i < pairs.size(); ++i) {
                if (mask >> i & 1) g.add_edge(pairs[i].first, pairs[i].second);
            }
            classes.emplace(canonical_key(g), g);
        }
    }
    std::vector<Multigraph> out;
    out.reserve(classes.size());
    for (const auto& [key, g] : classes) out.push_back(key.to_multigraph());
    return out;
}

std::vector<Multigraph> random_multigraph_corpus(int count, int max_n, int max_e, uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<Multigraph> out;
    out.reserve(count);
    for (int i = 0; i < count; ++i) {
        int n = 1 + static_cast<int>(rng() % max_n);
        int e = static_cast<int>(rng() % (max_e + 1));
        Multigraph g(n);
        for (int j = 0; j < e; ++j) {
            g.add_edge(static_cast<int>(rng() % n), static_cast<int>(rng() % n));
        }
        out.push_back(std::move(g));
    }
    return out;
}

std::vector<Multigraph> tree_corpus(int max_n) {
    std::map<CanonicalKey, Multigraph> classes;
    if (max_n >= 1) {
        Multigraph single(1);
        classes.emplace(canonical_key(single), single);
    }
    for (int n = 2; n <= max_n; ++n) {
        std::vector<std::pair<int, int>> pairs;
        for (int u = 0; u < n; ++u) {
            for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
        }
        // Gosper's hack over (n-1)-subsets of the edge slots.
        uint64_t mask = (uint64_t(1) << (n - 1)) - 1;
        uint64_t limit = uint64_t(1) << pairs.size();
        while (mask < limit) {
            Multigraph g(n);
            for (size_t i = 0; i < pairs.size(); ++i) {
                if (mask >> i & 1) g.add_edge(pairs[i].first, pairs[i].second);
            }
            if (g.rank() == n - 1) classes.emplace(canonical_key(g), g);
            uint64_t low = mask & (~mask + 1);
            uint64_t ripple = mask + low;
            mask = ripple | (((mask ^ ripple) >> 2) / low);
        }
    }
    std::vector<Multigraph> out;
    out.reserve(classes.size());
    for (const auto& [key, g] : classes) out.push_back(key.to_multigraph());
    return out;
}

// --- suite plumbing ------------------------------------------------------------

namespace {

struct Checker {
    SuiteReport report;

    explicit Checker(std::string suite) { report.suite = std::move(suite); }

    void add(std::string label, bool pass, std::string detail = "") {
        report.checks.push_back({std::move(label), pass, pass ? "" : std::move(detail)});
    }

    // Predicate returns an empty string on pass, a failure detail otherwise.
    void sweep(std::string label, const std::vector<Multigraph>& graphs,
               const std::function<std::string(const Multigraph&)>& fn) {
        bool pass = true;
        std::string detail;
        for (const Multigraph& g : graphs) {
            std::string failure = fn(g);
            if (!failure.empty()) {
                pass = false;
                detail = failure;
                break;
            }
        }
        add(std::move(label), pass, std::move(detail));
    }
};

std::string graph_label(const Multigraph& g) { return format_text(g); }

std::vector<int64_t> default_k_grid(const VerifyOptions& opts) {
    if (!opts.k_grid.empty()) return opts.k_grid;
    return {-3, -2, -1, 0, 1, 2, 3, 4, 5};
}

std::vector<Rational> rationals(std::initializer_list<int64_t> values) {
    std::vector<Rational> out;
    for (int64_t v : values) out.emplace_back(v);
    return out;
}

// --- criterion 1: antipode ---------------------------------------------------

SuiteReport suite_antipode(const VerifyOptions& opts) {
    Checker c("antipode");
    std::vector<Multigraph> graphs = simple_graph_corpus(5);
    for (Multigraph& g : random_multigraph_corpus(200, 5, 7, opts.seed)) {
        graphs.push_back(std::move(g));
    }
    c.sweep("flats formula matches ordered-partition oracle", graphs, [](const Multigraph& g) {
        return antipode_flats(g) == antipode_takeuchi(g) ? "" : "mismatch on " + graph_label(g);
    });
    c.sweep("hopf axiom m(S x I)Delta = u eps", graphs, [](const Multigraph& g) {
        return hopf_axiom_check(g) ? "" : "axiom fails on " + graph_label(g);
    });
    c.sweep("antipode is an involution", graphs, [](const Multigraph& g) {
        return antipode_linear(antipode_flats(g)) == GraphSum::basis(g)
                   ? ""
                   : "S(S(G)) != G on " + graph_label(g);
    });
    return c.report;
}

// --- criterion 2: Stanley's theorem ------------------------------------------

SuiteReport suite_stanley(const VerifyOptions&) {
    Checker c("stanley");
    c.sweep("zeta^{-1}(G) = (-1)^n a(G) with brute-forced a(G)", simple_graph_corpus(5),
            [](const Multigraph& g) {
                Rational lhs = convolution_power_value(zeta_char(), -1, g);
                auto orientations = acyclic_orientations_bruteforce(g);
                Rational rhs = Rational(-1).pow(g.vertex_count()) *
                               Rational(static_cast<int64_t>(orientations.size()));
                return lhs == rhs ? ""
                                  : "got " + lhs.str() + ", oracle " + rhs.str() + " on " +
                                        graph_label(g);
            });
    return c.report;
}

// --- criterion 3: A009775 ----------------------------------------------------

SuiteReport suite_a009775(const VerifyOptions&) {
    Checker c("a009775");
    const auto& reference = a009775_reference_values();
    auto acyclic = [](const Multigraph& g) { return !g.has_loop() && g.edge_count() == g.rank(); };
    for (int n = 1; n <= 8; ++n) {
        Rational flats_value = inverse_via_flats(acyclic, Multigraph::complete(n));
        int64_t closed = a009775_closed_form(n);
        bool ok = flats_value == Rational(reference[n - 1]) && closed == reference[n - 1];
        c.add("alpha^{-1}(K_" + std::to_string(n) + ") = " + std::to_string(reference[n - 1]), ok,
              "flats " + flats_value.str() + ", closed form " + std::to_string(closed));
    }
    bool tail_ok = true;
    for (int n = 9; n <= 12; ++n) {
        tail_ok = tail_ok && a009775_closed_form(n) == reference[n - 1];
    }
    c.add("closed form matches listed values through n = 12", tail_ok);
    return c.report;
}

// --- criterion 4: cycle identity ---------------------------------------------

SuiteReport suite_cycles(const VerifyOptions&) {
    Checker c("cycles");
    auto acyclic = [](const Multigraph& g) { return !g.has_loop() && g.edge_count() == g.rank(); };
    for (int n = 3; n <= 8; ++n) {
        Rational value = inverse_via_flats(acyclic, Multigraph::cycle(n));
        Rational expected = Rational(-1).pow(n) + Rational(1);
        c.add("alpha^{-1}(C_" + std::to_string(n) + ") = (-1)^n + 1", value == expected,
              "got " + value.str() + ", expected " + expected.str());
    }
    return c.report;
}

// --- criterion 5: degree-chromatic -------------------------------------------

SuiteReport suite_degree_chromatic(const VerifyOptions&) {
    Checker c("degree-chromatic");
    // P_2 of the 3-edge path: k^4 - 2k^2 + k.
    PolyInK path_poly = degree_chromatic(Multigraph::path(4), 2);
    PolyInK path_expected({Rational(0), Rational(1), Rational(-2), Rational(0), Rational(1)});
    c.add("P_2(path on 4) = k^4 - 2k^2 + k", path_poly == path_expected, path_poly.str());

    PolyInK star_poly = degree_chromatic(Multigraph::star(3), 2);
    PolyInK star_expected({Rational(0), Rational(2), Rational(-3), Rational(0), Rational(1)});
    c.add("P_2(star on 4) = k^4 - 3k^2 + 2k", star_poly == star_expected, star_poly.str());

    bool lead_ok = true;
    std::string detail;
    for (const Multigraph& tree : tree_corpus(7)) {
        int n = tree.vertex_count();
        if (n <= 2) continue;
        Rational expected(0);
        for (int v = 0; v < n; ++v) expected -= binomial(tree.degree(v), 2);
        PolyInK poly = degree_chromatic(tree, 2);
        if (!(poly.coeff(n - 2) == expected && poly.coeff(n) == Rational(1))) {
            lead_ok = false;
            detail = "tree " + graph_label(tree);
            break;
        }
    }
    c.add("k^{n-2} coefficient is -sum_v C(d_v, 2) on all trees n <= 7", lead_ok, detail);
    return c.report;
}

// --- criterion 6: Tutte character identity ------------------------------------

SuiteReport suite_tutte_char(const VerifyOptions& opts) {
    Checker c("tutte-char");
    std::vector<Multigraph> graphs = simple_graph_corpus(5);
    graphs.push_back(Multigraph::complete(6));
    graphs.push_back(Multigraph::cycle(6));
    graphs.push_back(disjoint_union(Multigraph::star(3), Multigraph::cycle(3)));
    auto xs = rationals({-2, -1, 0, 2, 3});
    auto ys = rationals({-2, -1, 0, 1, 2, 3});
    auto ks = default_k_grid(opts);
    c.sweep("rho^k = k^c (x-1)^rk T((k+x-1)/(x-1), y) with x=2, x=0, k=-1 forms", graphs,
            [&](const Multigraph& g) {
                return tutte_char_identity_check(g, xs, ys, ks) ? ""
                                                                : "fails on " + graph_label(g);
            });
    return c.report;
}

// --- criterion 7: recipe base cases -------------------------------------------

SuiteReport suite_recipe(const VerifyOptions&) {
    Checker c("recipe");
    // 20 grid points: x in {-2,0,1,2,3} x (y,k) in {(-1,1),(0,2),(2,-2),(3,3)}.
    std::vector<Rational> xs = rationals({-2, 0, 1, 2, 3});
    std::vector<std::pair<Rational, int64_t>> yks{
        {Rational(-1), 1}, {Rational(0), 2}, {Rational(2), -2}, {Rational(3), 3}};

    auto each_point = [&](const std::function<bool(const Rational&, const Rational&, int64_t)>& f) {
        for (const Rational& x : xs) {
            for (const auto& [y, k] : yks) {
                if (!f(x, y, k)) return "x=" + x.str() + " y=" + y.str() + " k=" + std::to_string(k);
            }
        }
        return std::string();
    };

    {
        bool ok = true;
        std::string at;
        for (int n : {0, 1, 3, 5}) {
            Multigraph g = Multigraph::edgeless(n);
            std::string fail = each_point([&](const Rational& x, const Rational& y, int64_t k) {
                return convolution_power_rho(g, x, y, k) == Rational(k).pow(n);
            });
            if (!fail.empty()) {
                ok = false;
                at = "n=" + std::to_string(n) + " " + fail;
                break;
            }
        }
        c.add("edgeless: P(K-bar_n; k) = k^n", ok, at);
    }

    {
        // Loop rule on a bare loop and on C_3 with a loop attached (loop is edge 3).
        std::vector<std::pair<Multigraph, int>> cases;
        cases.emplace_back(Multigraph(1, {{0, 0}}), 0);
        cases.emplace_back(Multigraph(3, {{0, 1}, {1, 2}, {0, 2}, {0, 0}}), 3);
        bool ok = true;
        std::string at;
        for (const auto& [g, loop_index] : cases) {
            Multigraph without = g.without_edge(loop_index);
            std::string fail = each_point([&](const Rational& x, const Rational& y, int64_t k) {
                return convolution_power_rho(g, x, y, k) ==
                       y * convolution_power_rho(without, x, y, k);
            });
            if (!fail.empty()) {
                ok = false;
                at = graph_label(g) + " " + fail;
                break;
            }
        }
        c.add("loop rule: P(G) = y P(G - loop)", ok, at);
    }

    {
        // Deletion-contraction on C_4 edge 0 and on a double edge with a pendant.
        std::vector<Multigraph> cases{Multigraph::cycle(4),
                                      Multigraph(3, {{0, 1}, {0, 1}, {1, 2}})};
        bool ok = true;
        std::string at;
        for (const Multigraph& g : cases) {
            Multigraph deleted = g.without_edge(0);
            Multigraph contracted = g.contract(1);
            std::string fail = each_point([&](const Rational& x, const Rational& y, int64_t k) {
                return convolution_power_rho(g, x, y, k) ==
                       convolution_power_rho(deleted, x, y, k) +
                           (x - Rational(1)) * convolution_power_rho(contracted, x, y, k);
            });
            if (!fail.empty()) {
                ok = false;
                at = graph_label(g) + " " + fail;
                break;
            }
        }
        c.add("deletion-contraction: P(G) = P(G-e) + (x-1) P(G/e)", ok, at);
    }

    {
        // Cut-edge rule on the middle edge of P_4 and an edge of the star.
        std::vector<std::pair<Multigraph, int>> cases;
        cases.emplace_back(Multigraph::path(4), 1);
        cases.emplace_back(Multigraph::star(3), 0);
        bool ok = true;
        std::string at;
        for (const auto& [g, cut_index] : cases) {
            Multigraph without = g.without_edge(cut_index);
            std::string fail = each_point([&](const Rational& x, const Rational& y, int64_t k) {
                Rational scale = (Rational(k) + x - Rational(1)) / Rational(k);
                return convolution_power_rho(g, x, y, k) ==
                       scale * convolution_power_rho(without, x, y, k);
            });
            if (!fail.empty()) {
                ok = false;
                at = graph_label(g) + " " + fail;
                break;
            }
        }
        c.add("cut-edge rule: P(G) = ((k+x-1)/k) P(G-e)", ok, at);
    }
    return c.report;
}

// --- criterion 8: T(3,2) subset sum -------------------------------------------

SuiteReport suite_t32(const VerifyOptions&) {
    Checker c("t32");
    std::vector<Multigraph> connected;
    for (const Multigraph& g : simple_graph_corpus(5)) {
        if (g.components() == 1) connected.push_back(g);
    }
    c.sweep("T(G;3,2) equals the monochromatic-pair subset sum", connected,
            [](const Multigraph& g) {
                auto [tutte_side, subset_side] = t32_identity(g);
                return tutte_side == subset_side
                           ? ""
                           : tutte_side.str() + " vs " + subset_side.str() + " on " +
                                 graph_label(g);
            });
    return c.report;
}

// --- criterion 9: complete-graph identities ------------------------------------

SuiteReport suite_kn(const VerifyOptions&) {
    Checker c("kn");
    bool factorial_ok = true;
    std::string at;
    for (int n = 1; n <= 7 && factorial_ok; ++n) {
        BivarPoly t = tutte(Multigraph::complete(n));
        for (int k = 0; k <= 5; ++k) {
            if (!(t.eval(Rational(k + 1), Rational(0)) == factorial(n + k - 1) / factorial(k))) {
                factorial_ok = false;
                at = "n=" + std::to_string(n) + " k=" + std::to_string(k);
                break;
            }
        }
    }
    c.add("T_{K_n}(k+1, 0) = (n+k-1)!/k! for n <= 7, k <= 5", factorial_ok, at);

    for (Rational y : {Rational(0), Rational(2)}) {
        bool ok = true;
        std::string where;
        for (int n = 1; n <= 7 && ok; ++n) {
            for (int k = 1; k <= 4; ++k) {
                if (!kn_power_identities(n, k, y)) {
                    ok = false;
                    where = "n=" + std::to_string(n) + " k=" + std::to_string(k);
                    break;
                }
            }
        }
        c.add("multinomial convolution identity at y = " + y.str() + " for n <= 7, k <= 4", ok,
              where);
    }
    return c.report;
}

// --- criterion 10: rho at x = 1 -------------------------------------------------

SuiteReport suite_rho_one(const VerifyOptions& opts) {
    Checker c("rho-one");
    auto ks = default_k_grid(opts);
    auto ys = rationals({-1, 0, 2});
    c.sweep("rho_{1,y}^k(G) = k^n by direct convolution", simple_graph_corpus(5),
            [&](const Multigraph& g) {
                for (const Rational& y : ys) {
                    for (int64_t k : ks) {
                        if (!(convolution_power_rho(g, Rational(1), y, k) ==
                              Rational(k).pow(g.vertex_count()))) {
                            return "y=" + y.str() + " k=" + std::to_string(k) + " on " +
                                   graph_label(g);
                        }
                    }
                }
                return std::string();
            });
    return c.report;
}

// --- criterion 11: QSym bridge ---------------------------------------------------

SuiteReport suite_qsym(const VerifyOptions&) {
    Checker c("qsym");
    std::vector<Character> characters{zeta_char(), xi_char(Rational(2)),
                                      tau_char(Rational(2), Rational(0))};
    auto corpus = simple_graph_corpus(5);
    for (const Character& chi : characters) {
        c.sweep("pi(psi(G)) = P_{" + chi.name() + ",G}(k)", corpus, [&](const Multigraph& g) {
            return pi_specialization(psi(g, chi)) == poly_in_k(chi, g)
                       ? ""
                       : "mismatch on " + graph_label(g);
        });
    }

    {
        bool ok = true;
        std::string at;
        for (int total = 0; total <= 6 && ok; ++total) {
            for (int wa = 0; wa <= total && ok; ++wa) {
                for (const Composition& alpha : compositions_of(wa)) {
                    for (const Composition& beta : compositions_of(total - wa)) {
                        PolyInK lhs = pi_specialization(m_product(alpha, beta));
                        PolyInK rhs = PolyInK::binomial_poly(static_cast<int>(alpha.size())) *
                                      PolyInK::binomial_poly(static_cast<int>(beta.size()));
                        if (!(lhs == rhs)) {
                            ok = false;
                            at = composition_str(alpha) + " * " + composition_str(beta);
                            break;
                        }
                    }
                    if (!ok) break;
                }
            }
        }
        c.add("pi is multiplicative on products of combined weight <= 6", ok, at);
    }

    {
        bool ok = true;
        std::string at;
        for (int ell = 0; ell <= 6 && ok; ++ell) {
            for (int64_t x = 0; x <= 7 && ok; ++x) {
                for (int64_t y = 0; y <= 7; ++y) {
                    Rational sum(0);
                    for (int j = 0; j <= ell; ++j) sum += binomial(x, j) * binomial(y, ell - j);
                    if (!(sum == binomial(x + y, ell))) {
                        ok = false;
                        at = "l=" + std::to_string(ell) + " x=" + std::to_string(x) +
                             " y=" + std::to_string(y);
                        break;
                    }
                }
            }
        }
        c.add("Vandermonde convolution for l <= 6", ok, at);
    }
    return c.report;
}

// --- criterion 12: reciprocity-family suites --------------------------------------

SuiteReport suite_reciprocity(const VerifyOptions&) {
    Checker c("reciprocity");
    bool ok = true;
    std::string at;
    for (int n = 0; n <= 7 && ok; ++n) {
        for (int m = 0; m <= 7; ++m) {
            auto [lhs, rhs] = reciprocity_check(n, m);
            if (!(lhs == rhs && lhs == reciprocity_closed_form(n, m))) {
                ok = false;
                at = "n=" + std::to_string(n) + " m=" + std::to_string(m);
                break;
            }
        }
    }
    c.add("(zeta^n * xi_1)(K_m) symmetric and equal to the closed form", ok, at);

    bool signed_ok = true;
    std::string signed_at;
    for (int n = 0; n <= 7 && signed_ok; ++n) {
        for (int m = 0; m <= 7; ++m) {
            if (!signed_reciprocity_check(n, m)) {
                signed_ok = false;
                signed_at = "n=" + std::to_string(n) + " m=" + std::to_string(m);
                break;
            }
        }
    }
    c.add("signed reciprocity with xi_{-1}", signed_ok, signed_at);
    return c.report;
}

SuiteReport suite_derangements(const VerifyOptions&) {
    Checker c("derangements");
    c.add("(zeta^{-1} * xi_{+-1})(K_n) match derangement/arrangement recurrences, n <= 8",
          derangement_check(8));
    return c.report;
}

SuiteReport suite_egf(const VerifyOptions&) {
    Checker c("egf");
    for (Rational cc : {Rational(-1), Rational(1), Rational(2)}) {
        bool ok = true;
        std::string at;
        for (int64_t k = -2; k <= 3; ++k) {
            if (!egf_check(cc, k, 8)) {
                ok = false;
                at = "k=" + std::to_string(k);
                break;
            }
        }
        c.add("EGF prefix e^{cx}(1+x)^k at c = " + cc.str() + ", k in [-2,3], n <= 8", ok, at);
    }
    return c.report;
}

SuiteReport suite_coclique(const VerifyOptions&) {
    Checker c("coclique");
    auto cs = rationals({-1, 1, 2});
    c.sweep("(zeta * xi_c)(G) equals the coclique sum", simple_graph_corpus(5),
            [&](const Multigraph& g) {
                int n = g.vertex_count();
                for (const Rational& cval : cs) {
                    Rational lhs = convolve(zeta_char(), xi_char(cval))(g);
                    // Independent-set enumeration straight off the edge list.
                    Rational rhs(0);
                    for (uint64_t q = 0; q < (uint64_t(1) << n); ++q) {
                        bool independent = true;
                        for (const Edge& e : g.edges()) {
                            if ((q >> e.u & 1) && (q >> e.v & 1)) {
                                independent = false;
                                break;
                            }
                        }
                        if (independent) rhs += cval.pow(n - std::popcount(q));
                    }
                    if (!(lhs == rhs)) {
                        return "c=" + cval.str() + " on " + graph_label(g);
                    }
                }
                return std::string();
            });
    return c.report;
}

// --- criterion 13: engine cross-checks -------------------------------------------

namespace {

int64_t spanning_tree_bruteforce(const Multigraph& g) {
    int n = g.vertex_count();
    int e = g.edge_count();
    int64_t count = 0;
    for (uint64_t mask = 0; mask < (uint64_t(1) << e); ++mask) {
        if (std::popcount(mask) != n - 1) continue;
        // Acyclic and spanning: n-1 edges joining everything without a repeat.
        std::vector<int> parent(n);
        for (int v = 0; v < n; ++v) parent[v] = v;
        auto find = [&](int v) {
            while (parent[v] != v) v = parent[v] = parent[parent[v]];
            return v;
        };
        bool acyclic = true;
        for (int i = 0; i < e && acyclic; ++i) {
            if (!(mask >> i & 1)) continue;
            int ru = find(g.edges()[i].u);
            int rv = find(g.edges()[i].v);
            if (ru == rv) {
                acyclic = false;
            } else {
                parent[ru] = rv;
            }
        }
        if (acyclic) ++count;
    }
    return count;
}

}  // namespace

SuiteReport suite_engine(const VerifyOptions& opts) {
    Checker c("engine");
    std::vector<Multigraph> graphs = simple_graph_corpus(5);
    for (Multigraph& g : random_multigraph_corpus(100, 5, 10, opts.seed ^ 0x9E3779B97F4A7C15ULL)) {
        graphs.push_back(std::move(g));
    }
    auto xs = rationals({-2, -1, 0, 2, 3, 4});
    auto ys = rationals({-2, -1, 0, 1, 2, 3});

    c.sweep("R and T interconvert on the integer grid", graphs, [&](const Multigraph& g) {
        BivarPoly r = rank_nullity_poly(g);
        BivarPoly t = tutte(g);
        for (const Rational& x : xs) {
            Rational xm1 = x - Rational(1);
            Rational ratio = x / xm1;
            Rational scale = xm1.pow(g.rank());
            for (const Rational& y : ys) {
                if (!(r.eval(x, y) == scale * t.eval(ratio, y)) ||
                    !(t.eval(x, y) == scale * r.eval(ratio, y))) {
                    return "x=" + x.str() + " y=" + y.str() + " on " + graph_label(g);
                }
            }
        }
        return std::string();
    });

    c.sweep("T(1,1) counts spanning trees (connected graphs)", graphs, [](const Multigraph& g) {
        if (g.components() != 1) return std::string();
        Rational lhs = tutte(g).eval(Rational(1), Rational(1));
        int64_t oracle = spanning_tree_bruteforce(g);
        return lhs == Rational(oracle)
                   ? ""
                   : lhs.str() + " vs " + std::to_string(oracle) + " on " + graph_label(g);
    });

    c.sweep("T(2,0) counts acyclic orientations", graphs, [](const Multigraph& g) {
        Rational lhs = tutte(g).eval(Rational(2), Rational(0));
        auto oracle = acyclic_orientations_bruteforce(g);
        return lhs == Rational(static_cast<int64_t>(oracle.size()))
                   ? ""
                   : lhs.str() + " vs " + std::to_string(oracle.size()) + " on " + graph_label(g);
    });
    return c.report;
}

using SuiteFn = SuiteReport (*)(const VerifyOptions&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
    static const std::vector<std::pair<std::string, SuiteFn>> suites{
        {"antipode", suite_antipode},
        {"stanley", suite_stanley},
        {"a009775", suite_a009775},
        {"cycles", suite_cycles},
        {"degree-chromatic", suite_degree_chromatic},
        {"tutte-char", suite_tutte_char},
        {"recipe", suite_recipe},
        {"t32", suite_t32},
        {"kn", suite_kn},
        {"rho-one", suite_rho_one},
        {"qsym", suite_qsym},
        {"reciprocity", suite_reciprocity},
        {"derangements", suite_derangements},
        {"egf", suite_egf},
        {"coclique", suite_coclique},
        {"engine", suite_engine},
    };
    return suites;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& [name, fn] : registry()) out.push_back(name);
        return out;
    }();
    return names;
}

SuiteReport run_suite(const std::string& name, const VerifyOptions& opts) {
    for (const auto& [suite, fn] : registry()) {
        if (suite == name) return fn(opts);
    }
    throw std::invalid_argument("unknown verify suite: '" + name + "'");
}

std::vector<SuiteReport> run_all_suites(const VerifyOptions& opts) {
    const auto& suites = registry();
    std::vector<SuiteReport> reports(suites.size());
    if (opts.jobs <= 1) {
        for (size_t i = 0; i < suites.size(); ++i) reports[i] = suites[i].second(opts);
        return reports;
    }
    std::vector<std::future<void>> tasks;
    std::atomic<size_t> next{0};
    int workers = std::min<int>(opts.jobs, static_cast<int>(suites.size()));
    for (int w = 0; w < workers; ++w) {
        tasks.push_back(std::async(std::launch::async, [&] {
            for (size_t i = next.fetch_add(1); i < suites.size(); i = next.fetch_add(1)) {
                reports[i] = suites[i].second(opts);
            }
        }));
    }
    for (auto& t : tasks) t.get();
    return reports;
}

}  // namespace hopfgraph
