#include "hopfgraph/tutte_identities.hpp"

#include <map>
#include <stdexcept>

#include "hopfgraph/hopf.hpp"

namespace hopfgraph {

namespace {

// Antipodes of every induced subgraph, memoized per isomorphism class; these
// depend only on the graph, so identity checks share them across grid points.
std::vector<GraphSum> induced_antipodes(const Multigraph& g) {
    uint64_t size = uint64_t(1) << g.vertex_count();
    std::vector<GraphSum> sums(size);
    std::map<CanonicalKey, GraphSum> memo;
    for (uint64_t mask = 0; mask < size; ++mask) {
        Multigraph sub = g.induced(mask);
        CanonicalKey key = canonical_key(sub);
        auto it = memo.find(key);
        if (it == memo.end()) it = memo.emplace(key, antipode_flats(sub)).first;
        sums[mask] = it->second;
    }
    return sums;
}

// Convolution powers of one character on one graph, from a base value table.
class PowerTable {
public:
    PowerTable(const Character& phi, const Multigraph& g, const std::vector<GraphSum>* antipodes)
        : phi_(phi), g_(g), antipodes_(antipodes) {
        base_ = induced_subgraph_values(phi, g);
    }

    Rational power(int64_t k) const {
        if (k == 0) return Rational(g_.vertex_count() == 0 ? 1 : 0);
        if (k > 0) return repeated(base_, static_cast<uint64_t>(k));
        return repeated(inverse_values(), static_cast<uint64_t>(-k));
    }

private:
    const std::vector<Rational>& inverse_values() const {
        if (inverse_.empty()) {
            if (antipodes_ == nullptr) {
                throw std::logic_error("PowerTable: negative power without antipode table");
            }
            inverse_.reserve(antipodes_->size());
            for (const GraphSum& s : *antipodes_) inverse_.push_back(apply(phi_, s));
        }
        return inverse_;
    }

    static Rational repeated(const std::vector<Rational>& base, uint64_t exponent) {
        if (exponent == 1) return base.back();
        std::vector<Rational> acc;
        std::vector<Rational> sq = base;
        while (exponent > 0) {
            if (exponent & 1) acc = acc.empty() ? sq : subset_convolution(acc, sq);
            exponent >>= 1;
            if (exponent > 0) sq = subset_convolution(sq, sq);
        }
        return acc.back();
    }

    Character phi_;
    Multigraph g_;
    const std::vector<GraphSum>* antipodes_;
    std::vector<Rational> base_;
    mutable std::vector<Rational> inverse_;
};

}  // namespace

Rational convolution_power_rho(const Multigraph& g, const Rational& x, const Rational& y,
                               int64_t k) {
    auto antipodes = induced_antipodes(g);
    return PowerTable(rho_char(x, y), g, &antipodes).power(k);
}

bool coboundary_check(const Multigraph& g, const std::vector<Rational>& t_grid,
                      const std::vector<int64_t>& k_grid) {
    BivarPoly t_poly = tutte(g);
    Rational c(g.components());
    int rk = g.rank();
    auto antipodes = induced_antipodes(g);
    for (const Rational& t : t_grid) {
        if (t == Rational(1)) throw std::invalid_argument("coboundary_check(): t = 1 excluded");
        PowerTable table(rho_char(t, t), g, &antipodes);
        Rational tm1 = t - Rational(1);
        for (int64_t k : k_grid) {
            Rational lhs = table.power(k);
            Rational rhs = Rational(k).pow(g.components()) * tm1.pow(rk) *
                           t_poly.eval((Rational(k) + tm1) / tm1, t);
            if (!(lhs == rhs)) return false;
        }
    }
    return true;
}

bool tutte_char_identity_check(const Multigraph& g, const std::vector<Rational>& x_grid,
                               const std::vector<Rational>& y_grid,
                               const std::vector<int64_t>& k_grid) {
    BivarPoly t_poly = tutte(g);
    int comps = g.components();
    int rk = g.rank();
    int n = g.vertex_count();
    auto antipodes = induced_antipodes(g);

    for (const Rational& x : x_grid) {
        if (x == Rational(1)) {
            throw std::invalid_argument("tutte_char_identity_check(): x = 1 excluded");
        }
        Rational xm1 = x - Rational(1);
        for (const Rational& y : y_grid) {
            PowerTable table(rho_char(x, y), g, &antipodes);
            for (int64_t k : k_grid) {
                Rational rhs = Rational(k).pow(comps) * xm1.pow(rk) *
                               t_poly.eval((Rational(k) + xm1) / xm1, y);
                if (!(table.power(k) == rhs)) return false;
            }
        }
    }

    // x = 2: tau_{2,y}^k(G) == k^c T(k+1, y).
    for (const Rational& y : y_grid) {
        PowerTable table(tau_char(Rational(2), y), g, &antipodes);
        for (int64_t k : k_grid) {
            Rational rhs = Rational(k).pow(comps) * t_poly.eval(Rational(k + 1), y);
            if (!(table.power(k) == rhs)) return false;
        }
    }

    // x = 0: (tilde tau_{0,y})^k(G) == k^c (-1)^rk T(1-k, y), and at k = -1
    // the corollary (tilde tau_{0,y})^{-1} == bar(tau_{2,y}).
    for (const Rational& y : y_grid) {
        PowerTable table(tilde(tau_char(Rational(0), y)), g, &antipodes);
        for (int64_t k : k_grid) {
            Rational rhs = Rational(k).pow(comps) * Rational(-1).pow(rk) *
                           t_poly.eval(Rational(1 - k), y);
            if (!(table.power(k) == rhs)) return false;
        }
        Rational bar_tau = Rational(-1).pow(n) * t_poly.eval(Rational(2), y);
        if (!(table.power(-1) == bar_tau)) return false;
    }
    return true;
}

std::pair<Rational, Rational> t32_identity(const Multigraph& g) {
    if (g.components() != 1) throw std::invalid_argument("t32_identity(): G must be connected");
    Rational from_tutte = tutte(g).eval(Rational(3), Rational(2));
    Rational subset_sum(0);
    int n = g.vertex_count();
    uint64_t full = (uint64_t(1) << n) - 1;
    for (uint64_t u = 0;; ++u) {
        int inside = g.induced(u).edge_count();
        int outside = g.induced(full & ~u).edge_count();
        subset_sum += Rational(2).pow(inside + outside - 1);
        if (u == full) break;
    }
    return {from_tutte, subset_sum};
}

namespace {

void compositions_nonneg(int total, int parts, std::vector<int>& current,
                         const std::function<void(const std::vector<int>&)>& emit) {
    if (parts == 1) {
        current.push_back(total);
        emit(current);
        current.pop_back();
        return;
    }
    for (int first = 0; first <= total; ++first) {
        current.push_back(first);
        compositions_nonneg(total - first, parts - 1, current, emit);
        current.pop_back();
    }
}

}  // namespace

bool kn_power_identities(int n, int k, const Rational& y) {
    // n >= 1: the identity divides by the count of nonempty leading parts,
    // which degenerates on K_0.
    if (n < 1 || n > 8) throw std::invalid_argument("kn_power_identities(): n must be in [1, 8]");
    if (k < 1 || k > 4) throw std::invalid_argument("kn_power_identities(): k must be in [1, 4]");

    Rational lhs = tutte(Multigraph::complete(n)).eval(Rational(k + 1), y);

    std::vector<Rational> tau_values;  // tau_{2,y}(K_a) for a = 0..n
    for (int a = 0; a <= n; ++a) {
        tau_values.push_back(tutte(Multigraph::complete(a)).eval(Rational(2), y));
    }

    Rational conv_sum(0);
    Rational two_power_sum(0);
    std::vector<int> scratch;
    compositions_nonneg(n, k, scratch, [&](const std::vector<int>& parts) {
        Rational multinomial = factorial(n);
        Rational tau_product(1);
        int pair_exponent = 0;
        for (int a : parts) {
            multinomial /= factorial(a);
            tau_product *= tau_values[a];
            pair_exponent += a * (a - 1) / 2;
        }
        conv_sum += multinomial * tau_product;
        two_power_sum += multinomial * Rational(2).pow(pair_exponent);
    });

    bool ok = lhs == conv_sum / Rational(k);
    if (y == Rational(0)) {
        ok = ok && lhs == factorial(n + k - 1) / factorial(k);
    }
    if (y == Rational(2)) {
        ok = ok && lhs == two_power_sum / Rational(k);
    }
    return ok;
}

bool tutte_from_P(const Multigraph& g, const std::vector<int64_t>& x_grid,
                  const std::vector<Rational>& y_grid) {
    BivarPoly t_poly = tutte(g);
    int n = g.vertex_count();
    int comps = g.components();
    auto antipodes = induced_antipodes(g);
    for (const Rational& y : y_grid) {
        PowerTable p2(rho_char(Rational(2), y), g, &antipodes);
        PowerTable p0(rho_char(Rational(0), y), g, &antipodes);
        for (int64_t x : x_grid) {
            if (x == 1) throw std::invalid_argument("tutte_from_P(): x = 1 excluded");
            Rational t_val = t_poly.eval(Rational(x), y);
            Rational xm1(x - 1);
            Rational form1 = xm1.pow(-comps) * p2.power(x - 1);
            // Substituting k = 1-x into the x -> 0 specialization gives
            // T = (-1)^n (x-1)^{-c} P_{0,y}(G; 1-x).
            Rational form2 = Rational(-1).pow(n) * xm1.pow(-comps) * p0.power(1 - x);
            if (!(t_val == form1 && t_val == form2)) return false;
        }
    }
    return true;
}

}  // namespace hopfgraph
