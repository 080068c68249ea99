#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "crystal/monomial.hpp"

namespace crystal {

/// Monomial ideal held by its unique minimal generating set, canonically
/// sorted (degree, then exponents) for stable output.
class MonomialIdeal {
public:
    static MonomialIdeal from_generators(int num_vars, std::vector<Monomial> gens) {
        std::sort(gens.begin(), gens.end());
        gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
        std::vector<Monomial> minimal;
        for (size_t i = 0; i < gens.size(); ++i) {
            bool redundant = false;
            for (size_t j = 0; j < gens.size() && !redundant; ++j)
                if (i != j && gens[j].divides(gens[i])) redundant = true;
            if (!redundant) minimal.push_back(gens[i]);
        }
        MonomialIdeal I;
        I.num_vars_ = num_vars;
        I.gens_ = std::move(minimal);
        return I;
    }

    int num_vars() const { return num_vars_; }
    const std::vector<Monomial>& generators() const { return gens_; }
    bool empty() const { return gens_.empty(); }
    bool squarefree() const {
        return std::all_of(gens_.begin(), gens_.end(), [](const Monomial& m) { return m.squarefree(); });
    }

private:
    int num_vars_ = 0;
    std::vector<Monomial> gens_;
};

struct GroebnerBasis {
    std::vector<Binomial> elements;
    MonomialOrder order;
    bool reduced = false;
};

/// S-binomial of two pure-difference binomials.  With coefficients fixed at
/// +1/-1 the S-polynomial is again a pure difference (or zero): the lead
/// terms cancel exactly, leaving (L/lead_g)*trail_g - (L/lead_f)*trail_f.
inline std::optional<Binomial> s_binomial(const Binomial& f, const Binomial& g, const MonomialOrder& order) {
    Monomial L = Monomial::lcm(f.lead, g.lead);
    return Binomial::make(L.divided_by(g.lead) * g.trail, L.divided_by(f.lead) * f.trail, order);
}

namespace detail {

/// Full normal form of a monomial: repeatedly rewrite m -> (m/lead)*trail by
/// the first applicable basis element.  Terminates because trail < lead.
inline Monomial normal_form(Monomial m, const std::vector<Binomial>& basis) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& b : basis)
            if (b.lead.divides(m)) {
                m = m.divided_by(b.lead) * b.trail;
                changed = true;
                break;
            }
    }
    return m;
}

}  // namespace detail

/// Reduces both monomials of b to normal form modulo the basis; the two
/// normal forms coincide exactly when b lies in the ideal of the basis.
inline std::optional<Binomial> reduce(const Binomial& b, const std::vector<Binomial>& basis,
                                      const MonomialOrder& order) {
    return Binomial::make(detail::normal_form(b.lead, basis), detail::normal_form(b.trail, basis), order);
}

/// Buchberger's algorithm specialized to pure-difference binomials, with the
/// coprime-lead and chain criteria, followed by minimalization and
/// autoreduction.  The result is the unique reduced Groebner basis, sorted by
/// lead monomial, and is verified by reducing every S-binomial to zero.
inline GroebnerBasis buchberger(const std::vector<Binomial>& gens, const MonomialOrder& order) {
    std::vector<Binomial> basis;
    for (const auto& g : gens) {
        auto b = Binomial::make(g.lead, g.trail, order);  // renormalize defensively
        if (b && std::find(basis.begin(), basis.end(), *b) == basis.end()) basis.push_back(*b);
    }

    // Pair queue keyed by (lcm degree, i, j); done records treated pairs for
    // the chain criterion.
    std::set<std::tuple<int, int, int>> queue;
    std::set<std::pair<int, int>> done;
    auto push_pairs_for = [&](int j) {
        for (int i = 0; i < j; ++i)
            queue.emplace(Monomial::lcm(basis[i].lead, basis[j].lead).degree(), i, j);
    };
    for (int j = 1; j < static_cast<int>(basis.size()); ++j) push_pairs_for(j);

    while (!queue.empty()) {
        auto [deg, i, j] = *queue.begin();
        queue.erase(queue.begin());
        done.emplace(i, j);
        if (basis[i].lead.coprime(basis[j].lead)) continue;
        Monomial L = Monomial::lcm(basis[i].lead, basis[j].lead);
        bool chained = false;
        for (int k = 0; k < static_cast<int>(basis.size()) && !chained; ++k) {
            if (k == i || k == j || !basis[k].lead.divides(L)) continue;
            auto key = [](int a, int b) { return std::make_pair(std::min(a, b), std::max(a, b)); };
            if (done.count(key(i, k)) && done.count(key(k, j))) chained = true;
        }
        if (chained) continue;
        auto s = s_binomial(basis[i], basis[j], order);
        if (!s) continue;
        auto r = reduce(*s, basis, order);
        if (!r) continue;
        basis.push_back(*r);
        push_pairs_for(static_cast<int>(basis.size()) - 1);
    }

    // Minimalize: keep only elements whose lead no other kept lead divides.
    std::vector<Binomial> minimal;
    for (size_t i = 0; i < basis.size(); ++i) {
        bool redundant = false;
        for (size_t j = 0; j < basis.size() && !redundant; ++j) {
            if (i == j) continue;
            if (basis[j].lead == basis[i].lead) redundant = j < i;
            else if (basis[j].lead.divides(basis[i].lead)) redundant = true;
        }
        if (!redundant) minimal.push_back(basis[i]);
    }

    // Autoreduce trails until stable; leads are already pairwise non-dividing.
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i < minimal.size(); ++i) {
            std::vector<Binomial> others;
            for (size_t j = 0; j < minimal.size(); ++j)
                if (j != i) others.push_back(minimal[j]);
            Monomial nf = detail::normal_form(minimal[i].trail, others);
            if (nf != minimal[i].trail) {
                auto b = Binomial::make(minimal[i].lead, nf, order);
                if (!b) throw std::logic_error("buchberger: autoreduction collapsed a basis element");
                minimal[i] = *b;
                changed = true;
            }
        }
    }
    std::sort(minimal.begin(), minimal.end(), [](const Binomial& a, const Binomial& b) {
        if (!(a.lead == b.lead)) return a.lead < b.lead;
        return a.trail < b.trail;
    });

    for (size_t i = 0; i < minimal.size(); ++i)
        for (size_t j = i + 1; j < minimal.size(); ++j) {
            auto s = s_binomial(minimal[i], minimal[j], order);
            if (s && reduce(*s, minimal, order))
                throw std::logic_error("buchberger: an S-binomial of the final basis does not reduce to zero");
        }

    return GroebnerBasis{std::move(minimal), order, true};
}

inline MonomialIdeal initial_ideal(const GroebnerBasis& gb) {
    std::vector<Monomial> leads;
    for (const auto& b : gb.elements) leads.push_back(b.lead);
    return MonomialIdeal::from_generators(gb.order.num_vars(), std::move(leads));
}

enum class ClaimedSet {
    section1,        // cross-chain quadrics x_{i,r} x_{j,s} only
    theorem1_proof,  // quadrics plus the cubics s x_{c,i} t for i >= 2
    section5,        // levelwise quadrics z_{i,r} z_{i+k,s} only
};

inline ClaimedSet claimed_set_from_string(const std::string& s) {
    if (s == "section1") return ClaimedSet::section1;
    if (s == "theorem1-proof") return ClaimedSet::theorem1_proof;
    if (s == "section5") return ClaimedSet::section5;
    throw std::invalid_argument("unknown claimed set: " + s + " (expected section1 | theorem1-proof | section5)");
}

/// Expands a named claimed generator set for in(I) of a crystal lattice.
/// Variable ids follow the builder layout: s, chains in block order, t.
inline std::vector<Monomial> claimed_crystal_initial(const CrystalSpec& spec, ClaimedSet which) {
    if (which == ClaimedSet::section5)
        throw std::invalid_argument("claimed set section5 applies to o-lattice specs only");
    std::vector<int> chain_start(spec.k);
    for (int c = 0, at = 1; c < spec.k; ++c) {
        chain_start[c] = at;
        at += spec.ns[c];
    }
    const int num_vars = 2 + std::accumulate(spec.ns.begin(), spec.ns.end(), 0);
    const int s = 0, t = num_vars - 1;

    std::vector<Monomial> out;
    for (int c1 = 0; c1 < spec.k; ++c1)
        for (int c2 = c1 + 1; c2 < spec.k; ++c2)
            for (int r1 = 0; r1 < spec.ns[c1]; ++r1)
                for (int r2 = 0; r2 < spec.ns[c2]; ++r2)
                    out.push_back(Monomial::variable(num_vars, chain_start[c1] + r1) *
                                  Monomial::variable(num_vars, chain_start[c2] + r2));
    if (which == ClaimedSet::theorem1_proof)
        for (int c = 0; c < spec.k; ++c)
            for (int i = 1; i < spec.ns[c]; ++i)
                out.push_back(Monomial::variable(num_vars, s) * Monomial::variable(num_vars, chain_start[c] + i) *
                              Monomial::variable(num_vars, t));
    std::sort(out.begin(), out.end());
    return out;
}

/// Levelwise quadrics claimed for in(I) of an o-lattice.
inline std::vector<Monomial> claimed_o_initial(const OLatticeSpec& spec) {
    int num_vars = spec.k + 1 + std::accumulate(spec.ms.begin(), spec.ms.end(), 0) +
                   std::accumulate(spec.Ms.begin(), spec.Ms.end(), 0);
    std::vector<Monomial> out;
    int at = 1;
    for (int i = 0; i < spec.k; ++i) {
        int m_start = at, M_start = at + spec.ms[i];
        for (int r1 = 0; r1 < spec.ms[i]; ++r1)
            for (int r2 = 0; r2 < spec.Ms[i]; ++r2)
                out.push_back(Monomial::variable(num_vars, m_start + r1) * Monomial::variable(num_vars, M_start + r2));
        at += spec.ms[i] + spec.Ms[i] + 1;  // skip past t_i
    }
    std::sort(out.begin(), out.end());
    return out;
}

struct ClaimComparison {
    std::vector<Monomial> claimed, computed, missing, extra;
    bool equal = false;
};

inline ClaimComparison compare_initial(const MonomialIdeal& computed, std::vector<Monomial> claimed) {
    ClaimComparison c;
    c.claimed = std::move(claimed);
    c.computed = computed.generators();
    std::set_difference(c.claimed.begin(), c.claimed.end(), c.computed.begin(), c.computed.end(),
                        std::back_inserter(c.missing));
    std::set_difference(c.computed.begin(), c.computed.end(), c.claimed.begin(), c.claimed.end(),
                        std::back_inserter(c.extra));
    c.equal = c.missing.empty() && c.extra.empty();
    return c;
}

}  // namespace crystal
