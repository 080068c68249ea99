#pragma once

#include <atomic>
#include <bit>
#include <map>
#include <mutex>
#include <thread>
#include <vector>

#include "crystal/groebner.hpp"
#include "crystal/homology.hpp"

namespace crystal {

/// Multigraded Betti numbers of a monomial quotient R/I, with the graded and
/// total aggregations and the projective dimension.  beta_0 = 1 (the rank-one
/// free cover of the quotient) always occupies (i=0, multidegree 1).
struct BettiTable {
    FieldSpec field;
    std::map<int, std::map<Monomial, long long>> multigraded;  // i -> multidegree -> rank
    std::map<int, std::map<int, long long>> graded;            // i -> total degree -> rank
    std::vector<long long> totals;                             // index = homological degree
    int pd = 0;

    void add(int i, const Monomial& degree, long long rank) {
        if (rank != 0) multigraded[i][degree] += rank;
    }

    void finalize() {
        graded.clear();
        totals.clear();
        for (auto it = multigraded.begin(); it != multigraded.end();) {
            auto& by_deg = it->second;
            for (auto jt = by_deg.begin(); jt != by_deg.end();)
                jt = jt->second == 0 ? by_deg.erase(jt) : std::next(jt);
            it = by_deg.empty() ? multigraded.erase(it) : std::next(it);
        }
        for (const auto& [i, by_deg] : multigraded)
            for (const auto& [m, r] : by_deg) graded[i][m.degree()] += r;
        pd = multigraded.empty() ? 0 : multigraded.rbegin()->first;
        totals.assign(pd + 1, 0);
        for (const auto& [i, by_deg] : graded)
            for (const auto& [j, r] : by_deg) totals[i] += r;
    }

    long long total(int i) const { return (i >= 0 && i < static_cast<int>(totals.size())) ? totals[i] : 0; }

    bool same_graded_tables(const BettiTable& o) const { return graded == o.graded && totals == o.totals; }
};

namespace detail {

template <class Fn>
void parallel_for(int jobs, int n, Fn fn) {
    if (jobs < 1) jobs = 1;
    if (jobs <= 1 || n <= 1) {
        for (int i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<int> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&] {
        try {
            for (int i = next.fetch_add(1); i < n; i = next.fetch_add(1)) fn(i);
        } catch (...) {
            std::lock_guard<std::mutex> lock(error_mutex);
            if (!error) error = std::current_exception();
        }
    };
    std::vector<std::thread> threads;
    int width = std::min(jobs, n);
    threads.reserve(width);
    for (int t = 0; t < width; ++t) threads.emplace_back(worker);
    for (auto& t : threads) t.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace detail

/// Stanley-Reisner complex of a squarefree monomial ideal: faces are the
/// vertex subsets whose product no generator divides.
inline SimplicialComplex stanley_reisner(const MonomialIdeal& I, size_t max_faces = size_t{1} << 20) {
    for (const auto& g : I.generators()) {
        if (!g.squarefree())
            throw std::invalid_argument("stanley_reisner: non-squarefree generator " +
                                        g.str(generic_labels(I.num_vars())));
        if (g.is_one()) throw std::invalid_argument("stanley_reisner: the unit ideal has no quotient complex");
    }
    const int n = I.num_vars();
    if (n > 20) throw resource_error("stanley_reisner: face enumeration capped at 20 variables");
    std::vector<uint32_t> gens;
    for (const auto& g : I.generators()) gens.push_back(g.support());
    std::vector<uint32_t> faces;
    for (uint32_t tau = 0; tau < (uint32_t{1} << n); ++tau) {
        bool face = true;
        for (uint32_t g : gens)
            if ((g & ~tau) == 0) { face = false; break; }
        if (face) {
            faces.push_back(tau);
            if (faces.size() > max_faces) throw resource_error("stanley_reisner: face cap exceeded");
        }
    }
    return SimplicialComplex::from_faces(n, faces, max_faces);
}

namespace detail {

/// Multidegrees with possibly nonzero Betti numbers: unions of generator
/// supports (the lcm closure), ascending and duplicate-free.
inline std::vector<uint32_t> support_union_closure(const std::vector<uint32_t>& supports) {
    std::vector<uint32_t> closure(supports);
    std::sort(closure.begin(), closure.end());
    closure.erase(std::unique(closure.begin(), closure.end()), closure.end());
    std::vector<uint32_t> work(closure);
    std::unordered_map<uint32_t, char> seen;
    for (uint32_t s : closure) seen.emplace(s, 1);
    while (!work.empty()) {
        uint32_t u = work.back();
        work.pop_back();
        for (uint32_t s : closure)
            if (seen.emplace(u | s, 1).second) work.push_back(u | s);
    }
    std::vector<uint32_t> out;
    out.reserve(seen.size());
    for (const auto& [m, one] : seen) out.push_back(m);
    std::sort(out.begin(), out.end());
    return out;
}

inline Monomial monomial_from_mask(int num_vars, uint32_t mask) {
    std::vector<int> e(num_vars, 0);
    for (int v = 0; v < num_vars; ++v)
        if (mask & (uint32_t{1} << v)) e[v] = 1;
    return Monomial(std::move(e));
}

}  // namespace detail

/// Hochster's formula: beta_{i,sigma}(R/I) = dim of reduced H_(|sigma|-i-1)
/// of the Stanley-Reisner complex restricted to sigma.  Only unions of
/// generator supports can contribute, so the subset loop runs over that
/// closure; the loop parallelizes over sigma with a deterministic merge.
inline BettiTable hochster_betti(const MonomialIdeal& I, const FieldSpec& field, int jobs = 1, int max_vars = 16,
                                 size_t max_faces = size_t{1} << 20) {
    if (I.num_vars() > max_vars)
        throw resource_error("hochster_betti: " + std::to_string(I.num_vars()) + " variables exceeds cap of " +
                             std::to_string(max_vars) + " (use the unsafe cap override to lift)");
    for (const auto& g : I.generators()) {
        if (!g.squarefree())
            throw std::invalid_argument("hochster_betti: non-squarefree generator " +
                                        g.str(generic_labels(I.num_vars())));
        if (g.is_one()) throw std::invalid_argument("hochster_betti: the unit ideal has no quotient resolution");
    }

    BettiTable table;
    table.field = field;
    table.add(0, Monomial(I.num_vars()), 1);
    if (I.empty()) {
        table.finalize();
        return table;
    }

    std::vector<uint32_t> gens;
    for (const auto& g : I.generators()) gens.push_back(g.support());
    std::vector<uint32_t> sigmas = detail::support_union_closure(gens);

    std::vector<std::vector<std::pair<int, int>>> results(sigmas.size());  // (i, rank)
    detail::parallel_for(jobs, static_cast<int>(sigmas.size()), [&](int idx) {
        uint32_t sigma = sigmas[idx];
        int v = std::popcount(sigma);
        if (v > 20) throw resource_error("hochster_betti: face cap exceeded");
        std::vector<uint32_t> faces;
        faces.reserve(size_t{1} << std::min(v, 20));
        // enumerate subsets of sigma, keeping those no generator divides
        uint32_t tau = sigma;
        while (true) {
            bool face = true;
            for (uint32_t g : gens)
                if ((g & ~tau) == 0) { face = false; break; }
            if (face) faces.push_back(tau);
            if (tau == 0) break;
            tau = (tau - 1) & sigma;
        }
        if (faces.size() > max_faces) throw resource_error("hochster_betti: face cap exceeded");
        std::sort(faces.begin(), faces.end());
        std::vector<int> dims = detail::homology_from_masks(faces, field);
        for (int i = 0; i <= v; ++i) {
            int hidx = v - i;  // degree |sigma|-i-1, shifted by one
            if (hidx >= 0 && hidx < static_cast<int>(dims.size()) && dims[hidx] != 0)
                results[idx].emplace_back(i, dims[hidx]);
        }
    });
    for (size_t idx = 0; idx < sigmas.size(); ++idx)
        for (auto [i, r] : results[idx])
            table.add(i, detail::monomial_from_mask(I.num_vars(), sigmas[idx]), r);
    table.finalize();
    return table;
}

/// Closed-form Betti table of K[x_1..x_n]/(x_1,...,x_n): the Koszul complex
/// resolves the quotient, so totals[i] = C(n,i) with pure degrees j = i.
inline BettiTable koszul_betti(int n) {
    if (n < 1) throw std::invalid_argument("koszul_betti: n must be >= 1");
    BettiTable table;
    table.field = FieldSpec::rationals();
    if (n <= 16) {
        for (uint32_t sigma = 0; sigma < (uint32_t{1} << n); ++sigma)
            table.add(std::popcount(sigma), detail::monomial_from_mask(n, sigma), 1);
        table.finalize();
        return table;
    }
    // beyond mask range keep only the aggregated tables
    table.add(0, Monomial(n), 1);
    table.finalize();
    table.graded.clear();
    table.totals.assign(n + 1, 0);
    long long c = 1;
    for (int i = 0; i <= n; ++i) {
        table.totals[i] = c;
        table.graded[i][i] = c;
        c = c * (n - i) / (i + 1);
    }
    table.pd = n;
    return table;
}

/// Monomial ideal polarization: exponent x_v^e spreads over e squarefree
/// copy variables.  Copies are laid out variable-major, one slot minimum per
/// original variable, so original supports embed unchanged.
struct Polarization {
    MonomialIdeal ideal;
    std::vector<int> origin;  // polarized variable -> original variable
};

inline Polarization polarize(const MonomialIdeal& I) {
    const int n = I.num_vars();
    std::vector<int> maxe(n, 1);
    for (const auto& g : I.generators())
        for (int v = 0; v < n; ++v) maxe[v] = std::max(maxe[v], g.exponent(v));
    std::vector<int> first(n, 0);
    std::vector<int> origin;
    for (int v = 0; v < n; ++v) {
        first[v] = static_cast<int>(origin.size());
        for (int c = 0; c < maxe[v]; ++c) origin.push_back(v);
    }
    std::vector<Monomial> gens;
    for (const auto& g : I.generators()) {
        std::vector<int> e(origin.size(), 0);
        for (int v = 0; v < n; ++v)
            for (int c = 0; c < g.exponent(v); ++c) e[first[v] + c] = 1;
        gens.emplace_back(std::move(e));
    }
    return Polarization{MonomialIdeal::from_generators(static_cast<int>(origin.size()), std::move(gens)),
                        std::move(origin)};
}

/// Betti table of R/I for an arbitrary monomial ideal.  Squarefree ideals go
/// straight to Hochster's formula; otherwise the ideal is polarized (which
/// preserves all graded Betti numbers) and the polarized multidegrees are
/// folded back to exponent vectors over the original variables.
inline BettiTable monomial_betti(const MonomialIdeal& I, const FieldSpec& field, int jobs = 1, int max_vars = 16,
                                 size_t max_faces = size_t{1} << 20) {
    if (I.squarefree()) return hochster_betti(I, field, jobs, max_vars, max_faces);
    if (I.num_vars() > max_vars)
        throw resource_error("monomial_betti: " + std::to_string(I.num_vars()) + " variables exceeds cap of " +
                             std::to_string(max_vars) + " (use the unsafe cap override to lift)");
    Polarization P = polarize(I);
    // the polarized ring is larger than the input ring; cap it independently
    BettiTable polar = hochster_betti(P.ideal, field, jobs, std::max(max_vars, P.ideal.num_vars()), max_faces);
    BettiTable table;
    table.field = field;
    for (const auto& [i, by_deg] : polar.multigraded)
        for (const auto& [m, r] : by_deg) {
            std::vector<int> e(I.num_vars(), 0);
            for (int pv = 0; pv < m.num_vars(); ++pv) e[P.origin[pv]] += m.exponent(pv);
            table.add(i, Monomial(std::move(e)), r);
        }
    table.finalize();
    return table;
}

/// Independent Betti oracle from the lcm lattice: for i >= 1,
/// beta_{i,m}(R/I) = dim of reduced H_(i-2) of the order complex of the open
/// interval below m in the lattice of generator-subset lcms.  Works for
/// arbitrary monomial ideals, so it cross-checks the polarization route too.
inline BettiTable lcm_lattice_betti(const MonomialIdeal& I, const FieldSpec& field, int jobs = 1, int max_gens = 12,
                                    size_t max_faces = size_t{1} << 20) {
    const int g = static_cast<int>(I.generators().size());
    if (g > max_gens)
        throw resource_error("lcm_lattice_betti: " + std::to_string(g) + " generators exceeds cap of " +
                             std::to_string(max_gens));
    for (const auto& gen : I.generators())
        if (gen.is_one()) throw std::invalid_argument("lcm_lattice_betti: the unit ideal has no quotient resolution");
    BettiTable table;
    table.field = field;
    table.add(0, Monomial(I.num_vars()), 1);
    if (I.empty()) {
        table.finalize();
        return table;
    }

    // distinct lcms of nonempty generator subsets, canonically sorted
    std::vector<Monomial> elems;
    {
        std::map<Monomial, char> seen;
        for (uint32_t sub = 1; sub < (uint32_t{1} << g); ++sub) {
            Monomial m(I.num_vars());
            for (int t = 0; t < g; ++t)
                if (sub & (uint32_t{1} << t)) m = Monomial::lcm(m, I.generators()[t]);
            seen.emplace(std::move(m), 1);
        }
        for (const auto& [m, one] : seen) elems.push_back(m);
        std::sort(elems.begin(), elems.end());
    }
    const int ne = static_cast<int>(elems.size());
    std::vector<std::vector<char>> strictly_below(ne, std::vector<char>(ne, 0));
    for (int a = 0; a < ne; ++a)
        for (int b = 0; b < ne; ++b)
            if (a != b && elems[a].divides(elems[b])) strictly_below[a][b] = 1;

    std::vector<std::vector<std::pair<int, long long>>> results(ne);  // (i, rank)
    detail::parallel_for(jobs, ne, [&](int mi) {
        // open interval: everything strictly below elems[mi]
        std::vector<int> interval;
        for (int a = 0; a < ne; ++a)
            if (strictly_below[a][mi]) interval.push_back(a);
        const int ni = static_cast<int>(interval.size());
        if (ni == 0) {
            results[mi].emplace_back(1, 1);  // atom: order complex {emptyset}
            return;
        }
        // cones are contractible: a unique minimal or maximal element kills
        // all reduced homology
        int mins = 0, maxs = 0;
        for (int x = 0; x < ni; ++x) {
            bool is_min = true, is_max = true;
            for (int y = 0; y < ni; ++y) {
                if (strictly_below[interval[y]][interval[x]]) is_min = false;
                if (strictly_below[interval[x]][interval[y]]) is_max = false;
            }
            mins += is_min;
            maxs += is_max;
        }
        if (mins == 1 || maxs == 1) return;

        // chains of the interval, grouped by length; interval is sorted by
        // (degree, exponents) so divisibility always points forward
        std::vector<std::vector<std::vector<int>>> levels;  // levels[l]: chains of length l+1
        levels.push_back({});
        for (int x = 0; x < ni; ++x) levels[0].push_back({x});
        size_t total_faces = 1 + levels[0].size();
        while (!levels.back().empty()) {
            std::vector<std::vector<int>> next;
            for (const auto& c : levels.back())
                for (int y = c.back() + 1; y < ni; ++y)
                    if (strictly_below[interval[c.back()]][interval[y]]) {
                        std::vector<int> ext(c);
                        ext.push_back(y);
                        next.push_back(std::move(ext));
                    }
            total_faces += next.size();
            if (total_faces > max_faces) throw resource_error("lcm_lattice_betti: face cap exceeded");
            if (next.empty()) break;
            levels.push_back(std::move(next));
        }

        // boundary ranks between consecutive levels; level -1 is the empty
        // chain, whose boundary map from level 0 has rank 1
        const int top = static_cast<int>(levels.size()) - 1;
        std::vector<int> ranks(top + 2, 0);
        ranks[0] = 1;
        for (int l = 1; l <= top; ++l) {
            std::map<std::vector<int>, int> index;
            for (int r = 0; r < static_cast<int>(levels[l - 1].size()); ++r) index.emplace(levels[l - 1][r], r);
            linalg::SparseIntCols cols(levels[l].size());
            for (size_t j = 0; j < levels[l].size(); ++j) {
                const auto& c = levels[l][j];
                std::vector<std::pair<int, int>> entries;
                for (size_t drop = 0; drop < c.size(); ++drop) {
                    std::vector<int> sub;
                    for (size_t x = 0; x < c.size(); ++x)
                        if (x != drop) sub.push_back(c[x]);
                    entries.emplace_back(index.at(sub), drop % 2 == 0 ? 1 : -1);
                }
                std::sort(entries.begin(), entries.end());
                cols[j] = std::move(entries);
            }
            ranks[l] = linalg::sparse_rank(cols, field);
        }
        for (int l = 0; l <= top; ++l) {
            // levels[l] holds the faces of dimension l, so homology degree l
            long long dim = static_cast<long long>(levels[l].size()) - ranks[l] - (l + 1 <= top ? ranks[l + 1] : 0);
            if (dim != 0) results[mi].emplace_back(l + 2, dim);  // i = degree + 2
        }
    });
    for (int mi = 0; mi < ne; ++mi)
        for (auto [i, r] : results[mi]) table.add(i, elems[mi], r);
    table.finalize();
    return table;
}

}  // namespace crystal
