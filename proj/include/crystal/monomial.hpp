#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "crystal/lattice.hpp"

namespace crystal {

/// Exponent-vector monomial over a fixed variable count.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(int num_vars) : e_(num_vars, 0) {}
    explicit Monomial(std::vector<int> exps) : e_(std::move(exps)) {
        for (int v : e_)
            if (v < 0) throw std::invalid_argument("monomial: negative exponent");
    }

    static Monomial variable(int num_vars, int v) {
        Monomial m(num_vars);
        m.e_.at(v) = 1;
        return m;
    }

    int num_vars() const { return static_cast<int>(e_.size()); }
    int exponent(int v) const { return e_.at(v); }
    const std::vector<int>& exponents() const { return e_; }
    int degree() const { return std::accumulate(e_.begin(), e_.end(), 0); }
    bool is_one() const { return degree() == 0; }
    bool squarefree() const {
        return std::all_of(e_.begin(), e_.end(), [](int v) { return v <= 1; });
    }

    /// Bitmask of variables with positive exponent; needs num_vars <= 32.
    uint32_t support() const {
        if (num_vars() > 32) throw resource_error("monomial support mask limited to 32 variables");
        uint32_t m = 0;
        for (int v = 0; v < num_vars(); ++v)
            if (e_[v] > 0) m |= uint32_t{1} << v;
        return m;
    }

    Monomial operator*(const Monomial& o) const {
        Monomial r(*this);
        for (int v = 0; v < num_vars(); ++v) r.e_[v] += o.e_[v];
        return r;
    }

    bool divides(const Monomial& o) const {
        for (int v = 0; v < num_vars(); ++v)
            if (e_[v] > o.e_[v]) return false;
        return true;
    }

    /// Exact quotient o / *this not provided; this / o requires o | this.
    Monomial divided_by(const Monomial& o) const {
        Monomial r(*this);
        for (int v = 0; v < num_vars(); ++v) {
            r.e_[v] -= o.e_[v];
            if (r.e_[v] < 0) throw std::invalid_argument("monomial: inexact division");
        }
        return r;
    }

    static Monomial lcm(const Monomial& a, const Monomial& b) {
        Monomial r(a);
        for (int v = 0; v < r.num_vars(); ++v) r.e_[v] = std::max(a.e_[v], b.e_[v]);
        return r;
    }

    static Monomial gcd(const Monomial& a, const Monomial& b) {
        Monomial r(a);
        for (int v = 0; v < r.num_vars(); ++v) r.e_[v] = std::min(a.e_[v], b.e_[v]);
        return r;
    }

    bool coprime(const Monomial& o) const {
        for (int v = 0; v < num_vars(); ++v)
            if (e_[v] > 0 && o.e_[v] > 0) return false;
        return true;
    }

    bool operator==(const Monomial& o) const { return e_ == o.e_; }
    bool operator!=(const Monomial& o) const { return e_ != o.e_; }

    /// Canonical storage order (degree, then exponents lexicographically).
    /// Independent of any monomial order; used only for deterministic output.
    bool operator<(const Monomial& o) const {
        int d = degree(), od = o.degree();
        if (d != od) return d < od;
        return e_ < o.e_;
    }

    std::string str(const std::vector<std::string>& labels) const {
        std::string out;
        for (int v = 0; v < num_vars(); ++v) {
            if (e_[v] == 0) continue;
            if (!out.empty()) out += "*";
            out += labels.at(v);
            if (e_[v] > 1) out += "^" + std::to_string(e_[v]);
        }
        return out.empty() ? "1" : out;
    }

private:
    std::vector<int> e_;
};

/// Default variable names x1..xn for monomials with no lattice behind them.
inline std::vector<std::string> generic_labels(int num_vars) {
    std::vector<std::string> labels;
    labels.reserve(num_vars);
    for (int v = 0; v < num_vars; ++v) labels.push_back("x" + std::to_string(v + 1));
    return labels;
}

/// Graded reverse lexicographic order for a fixed variable ranking
/// (rank 0 = lowest variable).  Higher total degree wins; on equal degrees
/// the lowest-ranked variable with differing exponent decides, the monomial
/// with the smaller exponent there being the larger one.
class MonomialOrder {
public:
    explicit MonomialOrder(std::vector<int> vars_by_rank) : by_rank_(std::move(vars_by_rank)) {
        const int n = static_cast<int>(by_rank_.size());
        rank_of_.assign(n, -1);
        for (int r = 0; r < n; ++r) {
            int v = by_rank_[r];
            if (v < 0 || v >= n || rank_of_[v] != -1)
                throw std::invalid_argument("monomial order: ranking must be a permutation of the variables");
            rank_of_[v] = r;
        }
    }

    int num_vars() const { return static_cast<int>(by_rank_.size()); }
    int rank_of(int v) const { return rank_of_.at(v); }
    int var_at_rank(int r) const { return by_rank_.at(r); }

    /// -1, 0, +1 as a is below, equal to, above b.
    int compare(const Monomial& a, const Monomial& b) const {
        int da = a.degree(), db = b.degree();
        if (da != db) return da < db ? -1 : 1;
        for (int r = 0; r < num_vars(); ++r) {
            int v = by_rank_[r];
            if (a.exponent(v) != b.exponent(v)) return a.exponent(v) < b.exponent(v) ? 1 : -1;
        }
        return 0;
    }

    bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

private:
    std::vector<int> by_rank_;
    std::vector<int> rank_of_;
};

/// Polynomial ring attached to a lattice: one variable per element, ranked by
/// a linear extension with the bottom first and the top last.  The family
/// builders emit elements already in ranking order, so their extension is the
/// identity; file lattices get the smallest-id-first extension.
struct RingContext {
    int num_vars = 0;
    std::vector<std::string> labels;   // variable id -> label
    std::vector<int> vars_by_rank;     // rank -> variable id

    static RingContext for_lattice(const FiniteLattice& L) {
        RingContext ctx;
        ctx.num_vars = L.size();
        for (const auto& e : L.elements()) ctx.labels.push_back(e.label);
        // Kahn's algorithm, always taking the smallest available id.
        std::vector<int> below(L.size(), 0);
        for (int a = 0; a < L.size(); ++a)
            for (int b = 0; b < L.size(); ++b)
                if (a != b && L.leq(b, a)) ++below[a];
        std::vector<bool> used(L.size(), false);
        for (int step = 0; step < L.size(); ++step) {
            int pick = -1;
            for (int a = 0; a < L.size(); ++a)
                if (!used[a] && below[a] == 0) { pick = a; break; }
            if (pick < 0) throw std::logic_error("ring context: order relation is cyclic");
            used[pick] = true;
            ctx.vars_by_rank.push_back(pick);
            for (int a = 0; a < L.size(); ++a)
                if (!used[a] && L.leq(pick, a)) --below[a];
        }
        return ctx;
    }
};

inline MonomialOrder crystal_order(const RingContext& ctx) { return MonomialOrder(ctx.vars_by_rank); }

/// Pure difference of two monomials, normalized so lead is strictly above
/// trail; lead == trail collapses to zero, represented by nullopt.
struct Binomial {
    Monomial lead, trail;

    static std::optional<Binomial> make(const Monomial& f, const Monomial& g, const MonomialOrder& order) {
        int c = order.compare(f, g);
        if (c == 0) return std::nullopt;
        return c > 0 ? Binomial{f, g} : Binomial{g, f};
    }

    bool operator==(const Binomial& o) const { return lead == o.lead && trail == o.trail; }

    std::string str(const std::vector<std::string>& labels) const {
        return lead.str(labels) + " - " + trail.str(labels);
    }
};

/// One generator a*b - (a v b)(a ^ b) per incomparable pair, in the id order
/// produced by incomparable_pairs.  Comparable pairs would give zero and are
/// never formed.
inline std::vector<Binomial> join_meet_generators(const FiniteLattice& L, const RingContext& ctx,
                                                  const MonomialOrder& order) {
    std::vector<Binomial> gens;
    for (auto [a, b] : incomparable_pairs(L)) {
        Monomial ab = Monomial::variable(ctx.num_vars, a) * Monomial::variable(ctx.num_vars, b);
        Monomial jm = Monomial::variable(ctx.num_vars, L.join(a, b)) * Monomial::variable(ctx.num_vars, L.meet(a, b));
        auto bin = Binomial::make(ab, jm, order);
        if (bin) gens.push_back(*bin);
    }
    return gens;
}

struct CompatibilityReport {
    bool compatible = true;
    std::vector<std::string> violations;
};

/// The order is compatible when every join-meet generator leads with the
/// incomparable product a*b rather than with (a v b)(a ^ b).  Also checks
/// that the ranking is a linear extension of the lattice order.
inline CompatibilityReport check_compatibility(const FiniteLattice& L, const RingContext& ctx,
                                               const MonomialOrder& order, const std::vector<Binomial>& gens) {
    CompatibilityReport rep;
    for (int a = 0; a < L.size(); ++a)
        for (int b = 0; b < L.size(); ++b)
            if (a != b && L.leq(a, b) && order.rank_of(a) >= order.rank_of(b)) {
                rep.compatible = false;
                rep.violations.push_back("ranking is not a linear extension: " + L.label(a) + " <= " + L.label(b) +
                                         " but ranks " + std::to_string(order.rank_of(a)) + " >= " +
                                         std::to_string(order.rank_of(b)));
            }
    for (const auto& g : gens) {
        uint32_t sup = g.lead.support();
        bool ok = g.lead.squarefree() && g.lead.degree() == 2 && sup != 0;
        if (ok) {
            int a = -1, b = -1;
            for (int v = 0; v < ctx.num_vars; ++v)
                if (sup & (uint32_t{1} << v)) (a < 0 ? a : b) = v;
            ok = b >= 0 && !L.comparable(a, b);
        }
        if (!ok) {
            rep.compatible = false;
            rep.violations.push_back("generator leads with the comparable side: " + g.str(ctx.labels));
        }
    }
    return rep;
}

}  // namespace crystal
