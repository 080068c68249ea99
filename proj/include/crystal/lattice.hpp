#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace crystal {

/// Raised when an enumeration would exceed the configured resource caps.
class resource_error : public std::runtime_error {
public:
    explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

struct LatticeElement {
    int id = 0;
    std::string label;
};

/// Finite lattice with precomputed order relation and join/meet tables.
/// Elements carry dense ids 0..N-1; construction fails unless every pair
/// has a unique least upper bound and greatest lower bound.
class FiniteLattice {
public:
    FiniteLattice(std::vector<LatticeElement> elements, std::vector<uint8_t> leq)
        : elements_(std::move(elements)), leq_(std::move(leq)) {
        n_ = static_cast<int>(elements_.size());
        if (n_ == 0) throw std::invalid_argument("lattice: no elements");
        if (leq_.size() != static_cast<size_t>(n_) * n_)
            throw std::invalid_argument("lattice: relation size mismatch");
        validate_poset();
        build_tables();
    }

    int size() const { return n_; }
    const std::vector<LatticeElement>& elements() const { return elements_; }
    const std::string& label(int a) const { return elements_.at(a).label; }

    bool leq(int a, int b) const { return leq_[static_cast<size_t>(a) * n_ + b] != 0; }
    bool comparable(int a, int b) const { return leq(a, b) || leq(b, a); }
    int join(int a, int b) const { return join_[static_cast<size_t>(a) * n_ + b]; }
    int meet(int a, int b) const { return meet_[static_cast<size_t>(a) * n_ + b]; }
    int bottom() const { return bottom_; }
    int top() const { return top_; }

private:
    void validate_poset() {
        for (int a = 0; a < n_; ++a)
            if (!leq(a, a)) throw std::invalid_argument("lattice: relation not reflexive at " + label(a));
        for (int a = 0; a < n_; ++a)
            for (int b = 0; b < n_; ++b) {
                if (a != b && leq(a, b) && leq(b, a))
                    throw std::invalid_argument("lattice: antisymmetry fails for {" + label(a) + ", " + label(b) + "}");
                if (!leq(a, b)) continue;
                for (int c = 0; c < n_; ++c)
                    if (leq(b, c) && !leq(a, c))
                        throw std::invalid_argument("lattice: transitivity fails through {" + label(a) + ", " +
                                                    label(b) + ", " + label(c) + "}");
            }
        std::map<std::string, int> seen;
        for (const auto& e : elements_)
            if (!seen.emplace(e.label, e.id).second)
                throw std::invalid_argument("lattice: duplicate label " + e.label);
    }

    // Least upper bound: the unique u with a<=u, b<=u and u<=v for every
    // other upper bound v.  Dually for the meet.
    int bound(int a, int b, bool upper) const {
        std::vector<int> cand;
        for (int c = 0; c < n_; ++c) {
            bool ok = upper ? (leq(a, c) && leq(b, c)) : (leq(c, a) && leq(c, b));
            if (ok) cand.push_back(c);
        }
        for (int c : cand) {
            bool least = true;
            for (int d : cand)
                if (upper ? !leq(c, d) : !leq(d, c)) { least = false; break; }
            if (least) return c;
        }
        return -1;
    }

    void build_tables() {
        join_.assign(static_cast<size_t>(n_) * n_, -1);
        meet_.assign(static_cast<size_t>(n_) * n_, -1);
        for (int a = 0; a < n_; ++a)
            for (int b = a; b < n_; ++b) {
                int j = bound(a, b, true);
                if (j < 0)
                    throw std::invalid_argument("lattice: no unique join for {" + label(a) + ", " + label(b) + "}");
                int m = bound(a, b, false);
                if (m < 0)
                    throw std::invalid_argument("lattice: no unique meet for {" + label(a) + ", " + label(b) + "}");
                join_[static_cast<size_t>(a) * n_ + b] = join_[static_cast<size_t>(b) * n_ + a] = j;
                meet_[static_cast<size_t>(a) * n_ + b] = meet_[static_cast<size_t>(b) * n_ + a] = m;
            }
        bottom_ = top_ = 0;
        for (int c = 1; c < n_; ++c) {
            bottom_ = meet(bottom_, c);
            top_ = join(top_, c);
        }
    }

    std::vector<LatticeElement> elements_;
    std::vector<uint8_t> leq_;
    std::vector<int> join_, meet_;
    int n_ = 0, bottom_ = 0, top_ = 0;
};

struct CrystalSpec {
    int k = 0;
    std::vector<int> ns;
};

struct OLatticeSpec {
    int k = 0;
    std::vector<int> ms;
    std::vector<int> Ms;
};

/// Chains x_{i,1} < ... < x_{i,n_i} between a common bottom s and top t.
/// Element ids follow the variable ranking: s, chain 1, chain 2, ..., t.
inline FiniteLattice build_crystal(const CrystalSpec& spec) {
    if (spec.k < 1) throw std::invalid_argument("crystal spec: k must be >= 1, got " + std::to_string(spec.k));
    if (static_cast<int>(spec.ns.size()) != spec.k)
        throw std::invalid_argument("crystal spec: expected " + std::to_string(spec.k) + " chain lengths, got " +
                                    std::to_string(spec.ns.size()));
    for (int i = 0; i < spec.k; ++i)
        if (spec.ns[i] < 1)
            throw std::invalid_argument("crystal spec: n_" + std::to_string(i + 1) + " must be >= 1, got " +
                                        std::to_string(spec.ns[i]));

    std::vector<LatticeElement> el;
    std::vector<int> chain_of, pos_of;  // chain index 0..k-1, or -1 for s / -2 for t
    auto add = [&](const std::string& lab, int chain, int pos) {
        el.push_back({static_cast<int>(el.size()), lab});
        chain_of.push_back(chain);
        pos_of.push_back(pos);
    };
    add("s", -1, 0);
    for (int i = 0; i < spec.k; ++i)
        for (int j = 1; j <= spec.ns[i]; ++j)
            add("x_{" + std::to_string(i + 1) + "," + std::to_string(j) + "}", i, j);
    add("t", -2, 0);

    const int n = static_cast<int>(el.size());
    std::vector<uint8_t> leq(static_cast<size_t>(n) * n, 0);
    auto set = [&](int a, int b) { leq[static_cast<size_t>(a) * n + b] = 1; };
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            bool r;
            if (a == b || chain_of[a] == -1 || chain_of[b] == -2) r = true;
            else if (chain_of[b] == -1 || chain_of[a] == -2) r = false;
            else r = chain_of[a] == chain_of[b] && pos_of[a] <= pos_of[b];
            if (r) set(a, b);
        }
    return FiniteLattice(std::move(el), std::move(leq));
}

/// Spine t_0 < t_1 < ... < t_k with two parallel chains per level: z_{i,*}
/// (length m_i) and z_{i+k,*} (length M_i) strictly between t_{i-1} and t_i.
/// Zero-length chains are allowed and simply leave the level thinner.
inline FiniteLattice build_o_lattice(const OLatticeSpec& spec) {
    if (spec.k < 1) throw std::invalid_argument("o-lattice spec: k must be >= 1, got " + std::to_string(spec.k));
    if (static_cast<int>(spec.ms.size()) != spec.k || static_cast<int>(spec.Ms.size()) != spec.k)
        throw std::invalid_argument("o-lattice spec: expected " + std::to_string(spec.k) +
                                    " lower and upper chain lengths");
    for (int i = 0; i < spec.k; ++i)
        if (spec.ms[i] < 0 || spec.Ms[i] < 0)
            throw std::invalid_argument("o-lattice spec: chain lengths at level " + std::to_string(i + 1) +
                                        " must be >= 0");

    // level = 0 for t_0, i for everything ending at t_i; side distinguishes
    // the two chains of a level, -1 marks spine elements.
    std::vector<LatticeElement> el;
    std::vector<int> level_of, side_of, pos_of;
    auto add = [&](const std::string& lab, int level, int side, int pos) {
        el.push_back({static_cast<int>(el.size()), lab});
        level_of.push_back(level);
        side_of.push_back(side);
        pos_of.push_back(pos);
    };
    add("t_0", 0, -1, 0);
    for (int i = 1; i <= spec.k; ++i) {
        for (int j = 1; j <= spec.ms[i - 1]; ++j)
            add("z_{" + std::to_string(i) + "," + std::to_string(j) + "}", i, 0, j);
        for (int j = 1; j <= spec.Ms[i - 1]; ++j)
            add("z_{" + std::to_string(i + spec.k) + "," + std::to_string(j) + "}", i, 1, j);
        add("t_" + std::to_string(i), i, -1, 0);
    }

    const int n = static_cast<int>(el.size());
    std::vector<uint8_t> leq(static_cast<size_t>(n) * n, 0);
    // Spine element t_i sits at the top of level i; chain elements of level i
    // lie strictly between t_{i-1} and t_i, so their effective level range is
    // (i-1, i).  Comparability across levels flows through the spine.
    auto lo = [&](int a) { return side_of[a] < 0 ? level_of[a] : level_of[a] - 1; };
    auto hi = [&](int a) { return level_of[a]; };
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            bool r;
            if (a == b) r = true;
            else if (side_of[a] >= 0 && side_of[b] >= 0 && level_of[a] == level_of[b])
                r = side_of[a] == side_of[b] && pos_of[a] <= pos_of[b];
            else r = hi(a) <= lo(b);
            if (r) leq[static_cast<size_t>(a) * n + b] = 1;
        }
    return FiniteLattice(std::move(el), std::move(leq));
}

/// All unordered pairs {a,b} with a < b (by id) that are incomparable.
inline std::vector<std::pair<int, int>> incomparable_pairs(const FiniteLattice& L) {
    std::vector<std::pair<int, int>> out;
    for (int a = 0; a < L.size(); ++a)
        for (int b = a + 1; b < L.size(); ++b)
            if (!L.comparable(a, b)) out.emplace_back(a, b);
    return out;
}

struct LatticeLawReport {
    bool is_lattice = false;
    bool is_modular = false;
    bool is_distributive = false;
};

/// Exhaustive check of the lattice, modular and distributive laws.
inline LatticeLawReport check_lattice_laws(const FiniteLattice& L) {
    LatticeLawReport r;
    const int n = L.size();
    r.is_lattice = true;
    for (int a = 0; a < n && r.is_lattice; ++a)
        for (int b = 0; b < n && r.is_lattice; ++b) {
            int j = L.join(a, b), m = L.meet(a, b);
            if (!(L.leq(a, j) && L.leq(b, j) && L.leq(m, a) && L.leq(m, b))) r.is_lattice = false;
            for (int c = 0; c < n; ++c) {
                if (L.leq(a, c) && L.leq(b, c) && !L.leq(j, c)) r.is_lattice = false;
                if (L.leq(c, a) && L.leq(c, b) && !L.leq(c, m)) r.is_lattice = false;
            }
        }
    r.is_modular = r.is_distributive = r.is_lattice;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                if (L.leq(a, c) && L.join(a, L.meet(b, c)) != L.meet(L.join(a, b), c)) r.is_modular = false;
                if (L.meet(a, L.join(b, c)) != L.join(L.meet(a, b), L.meet(a, c))) r.is_distributive = false;
            }
    return r;
}

}  // namespace crystal
