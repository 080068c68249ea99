#pragma once

#include <chrono>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "crystal/betti.hpp"
#include "crystal/lattice.hpp"

namespace crystal {

/// Per-run resource configuration shared by the pipeline entry points.
struct RunLimits {
    int max_vars = 16;
    size_t max_faces = size_t{1} << 20;
    int jobs = 1;
};

struct GroebnerResult {
    FiniteLattice lattice;
    RingContext ctx;
    MonomialOrder order;
    std::vector<Binomial> generators;
    CompatibilityReport compatibility;
    GroebnerBasis gb;
    MonomialIdeal initial;
};

struct PipelineResult {
    FiniteLattice lattice;
    RingContext ctx;
    MonomialOrder order;
    std::vector<Binomial> generators;
    CompatibilityReport compatibility;
    GroebnerBasis gb;
    MonomialIdeal initial;
    BettiTable betti;
};

/// Ring and order from the lattice, join-meet generators, reduced Groebner
/// basis, initial ideal.  Caps are checked before anything else runs.
inline GroebnerResult analyze_lattice_groebner(FiniteLattice L, const RunLimits& lim = {}) {
    if (L.size() > lim.max_vars)
        throw resource_error("pipeline: " + std::to_string(L.size()) + " variables exceeds cap of " +
                             std::to_string(lim.max_vars) + " (use the unsafe cap override to lift)");
    RingContext ctx = RingContext::for_lattice(L);
    MonomialOrder order = crystal_order(ctx);
    std::vector<Binomial> gens = join_meet_generators(L, ctx, order);
    CompatibilityReport compat = check_compatibility(L, ctx, order, gens);
    if (!compat.compatible)
        throw std::runtime_error("pipeline: monomial order incompatible with the lattice: " +
                                 (compat.violations.empty() ? std::string("unknown") : compat.violations.front()));
    GroebnerBasis gb = buchberger(gens, order);
    MonomialIdeal in = initial_ideal(gb);
    return GroebnerResult{std::move(L),      std::move(ctx), std::move(order), std::move(gens),
                          std::move(compat), std::move(gb),  std::move(in)};
}

/// Full pipeline: the Groebner stage plus the Betti table of the quotient by
/// the initial ideal.
inline PipelineResult analyze_lattice(FiniteLattice L, const FieldSpec& field, const RunLimits& lim = {}) {
    GroebnerResult g = analyze_lattice_groebner(std::move(L), lim);
    BettiTable betti = monomial_betti(g.initial, field, lim.jobs, lim.max_vars, lim.max_faces);
    return PipelineResult{std::move(g.lattice),       std::move(g.ctx), std::move(g.order), std::move(g.generators),
                          std::move(g.compatibility), std::move(g.gb),  std::move(g.initial), std::move(betti)};
}

inline PipelineResult analyze_crystal(const CrystalSpec& spec, const FieldSpec& field, const RunLimits& lim = {}) {
    return analyze_lattice(build_crystal(spec), field, lim);
}

inline PipelineResult analyze_o_lattice(const OLatticeSpec& spec, const FieldSpec& field, const RunLimits& lim = {}) {
    return analyze_lattice(build_o_lattice(spec), field, lim);
}

/// Spec grammar used in reports and sweeps: "k:n1,...,nk" for crystal
/// lattices and "k:m1,...,mk/M1,...,Mk" for o-lattices.
inline std::string crystal_spec_str(const CrystalSpec& spec) {
    std::string s = std::to_string(spec.k) + ":";
    for (size_t i = 0; i < spec.ns.size(); ++i) s += (i ? "," : "") + std::to_string(spec.ns[i]);
    return s;
}

inline std::string o_spec_str(const OLatticeSpec& spec) {
    std::string s = std::to_string(spec.k) + ":";
    for (size_t i = 0; i < spec.ms.size(); ++i) s += (i ? "," : "") + std::to_string(spec.ms[i]);
    s += "/";
    for (size_t i = 0; i < spec.Ms.size(); ++i) s += (i ? "," : "") + std::to_string(spec.Ms[i]);
    return s;
}

inline CrystalSpec parse_crystal_spec(const std::string& s) {
    auto colon = s.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("crystal spec must look like k:n1,...,nk");
    CrystalSpec spec;
    try {
        spec.k = std::stoi(s.substr(0, colon));
        std::stringstream rest(s.substr(colon + 1));
        std::string tok;
        while (std::getline(rest, tok, ',')) spec.ns.push_back(std::stoi(tok));
    } catch (const std::exception&) {
        throw std::invalid_argument("cannot parse crystal spec: " + s);
    }
    return spec;
}

inline OLatticeSpec parse_o_spec(const std::string& s) {
    auto colon = s.find(':');
    auto slash = s.find('/');
    if (colon == std::string::npos || slash == std::string::npos || slash < colon)
        throw std::invalid_argument("o-lattice spec must look like k:m1,...,mk/M1,...,Mk");
    OLatticeSpec spec;
    try {
        spec.k = std::stoi(s.substr(0, colon));
        auto parse_list = [](const std::string& part, std::vector<int>& out) {
            std::stringstream ss(part);
            std::string tok;
            while (std::getline(ss, tok, ',')) out.push_back(std::stoi(tok));
        };
        parse_list(s.substr(colon + 1, slash - colon - 1), spec.ms);
        parse_list(s.substr(slash + 1), spec.Ms);
    } catch (const std::exception&) {
        throw std::invalid_argument("cannot parse o-lattice spec: " + s);
    }
    return spec;
}

struct VerificationReport {
    std::string claim;
    std::string instance;
    std::string field;
    int pd = 0;
    std::vector<long long> totals;
    std::vector<std::pair<std::string, bool>> conditions;
    std::vector<std::string> notes;
    std::string status;  // pass | fail | report-only
    double elapsed_ms = 0;

    bool failed() const { return status == "fail"; }
};

namespace detail {

inline long long binomial_coeff(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long c = 1;
    for (int i = 0; i < k; ++i) c = c * (n - i) / (i + 1);
    return c;
}

class Stopwatch {
public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

inline void settle_status(VerificationReport& r, bool report_only = false) {
    bool all = true;
    for (const auto& [desc, holds] : r.conditions) all = all && holds;
    r.status = report_only ? "report-only" : (all ? "pass" : "fail");
}

}  // namespace detail

/// Closed forms reported for the two-chain family: with n2 = 1 the first two
/// total Betti numbers are claimed as 2*n1-1 and n1*(n1-1); with n2 = 2 as
/// 3*n1 and n1*(n1+1)-1.  The report records computed against claimed.
inline VerificationReport check_known_identities(int n1, int variant_n2, const FieldSpec& field,
                                                 const RunLimits& lim = {}) {
    if (n1 < 1) throw std::invalid_argument("check_known_identities: n1 must be >= 1");
    if (variant_n2 != 1 && variant_n2 != 2)
        throw std::invalid_argument("check_known_identities: variant must select n2 = 1 or n2 = 2");
    detail::Stopwatch sw;
    CrystalSpec spec{2, {n1, variant_n2}};
    PipelineResult p = analyze_crystal(spec, field, lim);
    VerificationReport r;
    r.claim = "known-identities[n2=" + std::to_string(variant_n2) + "]";
    r.instance = crystal_spec_str(spec);
    r.field = field.str();
    r.pd = p.betti.pd;
    r.totals = p.betti.totals;
    long long c1 = variant_n2 == 1 ? 2LL * n1 - 1 : 3LL * n1;
    long long c2 = variant_n2 == 1 ? 1LL * n1 * (n1 - 1) : 1LL * n1 * (n1 + 1) - 1;
    r.conditions.emplace_back("totals[1] = " + std::to_string(c1) + " (computed " + std::to_string(p.betti.total(1)) +
                                  ")",
                              p.betti.total(1) == c1);
    r.conditions.emplace_back("totals[2] = " + std::to_string(c2) + " (computed " + std::to_string(p.betti.total(2)) +
                                  ")",
                              p.betti.total(2) == c2);
    detail::settle_status(r);
    r.elapsed_ms = sw.ms();
    return r;
}

/// Projective dimension bounds for the two-chain family:
/// max{n1,n2} <= pd <= n1+n2+1, plus C(n1,i) <= totals[i] for i = 1..n1.
/// Inputs are swapped if needed so n1 >= n2.
inline VerificationReport check_theorem1(int n1, int n2, const FieldSpec& field, const RunLimits& lim = {}) {
    if (n1 < 1 || n2 < 1) throw std::invalid_argument("check_theorem1: chain lengths must be >= 1");
    if (n1 < n2) std::swap(n1, n2);
    detail::Stopwatch sw;
    CrystalSpec spec{2, {n1, n2}};
    PipelineResult p = analyze_crystal(spec, field, lim);
    VerificationReport r;
    r.claim = "theorem1";
    r.instance = crystal_spec_str(spec);
    r.field = field.str();
    r.pd = p.betti.pd;
    r.totals = p.betti.totals;
    r.conditions.emplace_back("max{n1,n2} = " + std::to_string(n1) + " <= pd = " + std::to_string(r.pd), n1 <= r.pd);
    r.conditions.emplace_back("pd = " + std::to_string(r.pd) + " <= n1+n2+1 = " + std::to_string(n1 + n2 + 1),
                              r.pd <= n1 + n2 + 1);
    for (int i = 1; i <= n1; ++i) {
        long long lo = detail::binomial_coeff(n1, i);
        r.conditions.emplace_back("C(n1," + std::to_string(i) + ") = " + std::to_string(lo) + " <= totals[" +
                                      std::to_string(i) + "] = " + std::to_string(p.betti.total(i)),
                                  lo <= p.betti.total(i));
    }
    if (n1 == 1 && n2 == 1 && r.pd < 2)
        r.notes.push_back("computed pd = " + std::to_string(r.pd) +
                          " sits below the previously reported lower bound 2 for this family; recorded as an "
                          "observation, not a failure");
    detail::settle_status(r);
    r.elapsed_ms = sw.ms();
    return r;
}

/// Same bounds for k >= 3 chains: max{n_i} <= pd <= sum(n_i) + 2 and the
/// C(n1,i) lower bounds.  The tuple is sorted descending first.
inline VerificationReport check_corollary2(int k, std::vector<int> ns, const FieldSpec& field,
                                           const RunLimits& lim = {}) {
    if (k < 3) throw std::invalid_argument("check_corollary2: needs k >= 3 chains");
    if (static_cast<int>(ns.size()) != k) throw std::invalid_argument("check_corollary2: expected k chain lengths");
    std::sort(ns.begin(), ns.end(), std::greater<int>());
    detail::Stopwatch sw;
    CrystalSpec spec{k, ns};
    PipelineResult p = analyze_crystal(spec, field, lim);
    VerificationReport r;
    r.claim = "corollary2";
    r.instance = crystal_spec_str(spec);
    r.field = field.str();
    r.pd = p.betti.pd;
    r.totals = p.betti.totals;
    int sum = std::accumulate(ns.begin(), ns.end(), 0);
    r.conditions.emplace_back("max{n_i} = " + std::to_string(ns[0]) + " <= pd = " + std::to_string(r.pd),
                              ns[0] <= r.pd);
    r.conditions.emplace_back("pd = " + std::to_string(r.pd) + " <= sum+2 = " + std::to_string(sum + 2),
                              r.pd <= sum + 2);
    for (int i = 1; i <= ns[0]; ++i) {
        long long lo = detail::binomial_coeff(ns[0], i);
        r.conditions.emplace_back("C(n1," + std::to_string(i) + ") = " + std::to_string(lo) + " <= totals[" +
                                      std::to_string(i) + "] = " + std::to_string(p.betti.total(i)),
                                  lo <= p.betti.total(i));
    }
    detail::settle_status(r);
    r.elapsed_ms = sw.ms();
    return r;
}

/// Bounds for the o-lattice family: max over all chain lengths <= pd <=
/// k + 1 + sum of all chain lengths.
inline VerificationReport check_theorem4(int k, const std::vector<int>& ms, const std::vector<int>& Ms,
                                         const FieldSpec& field, const RunLimits& lim = {}) {
    detail::Stopwatch sw;
    OLatticeSpec spec{k, ms, Ms};
    PipelineResult p = analyze_o_lattice(spec, field, lim);
    VerificationReport r;
    r.claim = "theorem4";
    r.instance = o_spec_str(spec);
    r.field = field.str();
    r.pd = p.betti.pd;
    r.totals = p.betti.totals;
    int mx = 0, sum = 0;
    for (int v : ms) { mx = std::max(mx, v); sum += v; }
    for (int v : Ms) { mx = std::max(mx, v); sum += v; }
    r.conditions.emplace_back("max{m_i,M_i} = " + std::to_string(mx) + " <= pd = " + std::to_string(r.pd),
                              mx <= r.pd);
    r.conditions.emplace_back("pd = " + std::to_string(r.pd) + " <= k+1+sum = " + std::to_string(k + 1 + sum),
                              r.pd <= k + 1 + sum);
    detail::settle_status(r);
    r.elapsed_ms = sw.ms();
    return r;
}

/// Koszul cross-check: the computed Betti table of K[x_1..x_n]/(x_1..x_n)
/// must match the closed form C(n,i).
inline VerificationReport check_lemma1(int n, const FieldSpec& field, const RunLimits& lim = {}) {
    if (n < 1) throw std::invalid_argument("check_lemma1: n must be >= 1");
    detail::Stopwatch sw;
    std::vector<Monomial> vars;
    for (int v = 0; v < n; ++v) vars.push_back(Monomial::variable(n, v));
    MonomialIdeal I = MonomialIdeal::from_generators(n, std::move(vars));
    BettiTable computed = hochster_betti(I, field, lim.jobs, std::max(lim.max_vars, n), lim.max_faces);
    BettiTable closed = koszul_betti(n);
    VerificationReport r;
    r.claim = "lemma1";
    r.instance = "n=" + std::to_string(n);
    r.field = field.str();
    r.pd = computed.pd;
    r.totals = computed.totals;
    r.conditions.emplace_back("pd = n = " + std::to_string(n), computed.pd == n);
    r.conditions.emplace_back("totals[i] = C(n,i) for all i", computed.totals == closed.totals);
    detail::settle_status(r);
    r.elapsed_ms = sw.ms();
    return r;
}

/// Report-only scan: does pd of the two-chain quotient with n2 = 1 equal n1?
inline std::vector<VerificationReport> scan_conjecture(int N, const FieldSpec& field, const RunLimits& lim = {}) {
    if (N < 1) throw std::invalid_argument("scan_conjecture: N must be >= 1");
    std::vector<VerificationReport> out;
    for (int n1 = 1; n1 <= N; ++n1) {
        detail::Stopwatch sw;
        CrystalSpec spec{2, {n1, 1}};
        PipelineResult p = analyze_crystal(spec, field, lim);
        VerificationReport r;
        r.claim = "conjecture";
        r.instance = crystal_spec_str(spec);
        r.field = field.str();
        r.pd = p.betti.pd;
        r.totals = p.betti.totals;
        r.conditions.emplace_back("pd = " + std::to_string(r.pd) + " vs conjectured n1 = " + std::to_string(n1),
                                  r.pd == n1);
        detail::settle_status(r, true);
        r.elapsed_ms = sw.ms();
        out.push_back(std::move(r));
    }
    return out;
}

struct SweepRow {
    std::string family;
    std::string params;
    std::string field;
    int pd = -1;
    std::vector<long long> totals;
    std::string bounds;
    std::string status;
    std::string error;
    double elapsed_ms = 0;
};

struct SweepResult {
    std::vector<SweepRow> rows;

    bool any_failed() const {
        for (const auto& r : rows)
            if (r.status == "fail") return true;
        return false;
    }
};

namespace detail {

inline SweepRow row_from_report(const std::string& family, const VerificationReport& rep) {
    SweepRow row;
    row.family = family;
    row.params = rep.instance;
    row.field = rep.field;
    row.pd = rep.pd;
    row.totals = rep.totals;
    std::string bounds;
    for (const auto& [desc, holds] : rep.conditions) bounds += (bounds.empty() ? "" : "; ") + desc;
    row.bounds = bounds;
    row.status = rep.status;
    row.elapsed_ms = rep.elapsed_ms;
    return row;
}

template <class Fn>
SweepRow guarded_row(const std::string& family, const std::string& params, const FieldSpec& field, Fn fn) {
    try {
        return row_from_report(family, fn());
    } catch (const std::exception& e) {
        SweepRow row;
        row.family = family;
        row.params = params;
        row.field = field.str();
        row.status = "error";
        row.error = e.what();
        return row;
    }
}

}  // namespace detail

/// Two-chain grid sweep over 1 <= n1 <= max_n1, 1 <= n2 <= max_n2.
inline SweepResult sweep_crystal2(int max_n1, int max_n2, const FieldSpec& field, const RunLimits& lim = {}) {
    SweepResult out;
    for (int n1 = 1; n1 <= max_n1; ++n1)
        for (int n2 = 1; n2 <= max_n2; ++n2) {
            CrystalSpec spec{2, {n1, n2}};
            out.rows.push_back(detail::guarded_row("crystal", crystal_spec_str(spec), field, [&] {
                VerificationReport r = check_theorem1(n1, n2, field, lim);
                r.instance = crystal_spec_str(spec);  // keep the unsorted grid point
                return r;
            }));
        }
    return out;
}

/// Enumerates every o-lattice spec with k <= max_k and at most max_vars
/// variables (chain lengths >= 0), in lexicographic parameter order.
inline std::vector<OLatticeSpec> enumerate_o_specs(int max_k, int max_vars) {
    std::vector<OLatticeSpec> specs;
    for (int k = 1; k <= max_k; ++k) {
        int budget = max_vars - (k + 1);
        if (budget < 0) continue;
        std::vector<int> lens(2 * k, 0);
        // odometer over 2k chain lengths with sum <= budget
        while (true) {
            int sum = std::accumulate(lens.begin(), lens.end(), 0);
            if (sum <= budget) {
                OLatticeSpec spec;
                spec.k = k;
                spec.ms.assign(lens.begin(), lens.begin() + k);
                spec.Ms.assign(lens.begin() + k, lens.end());
                specs.push_back(std::move(spec));
            }
            int pos = 2 * k - 1;
            while (pos >= 0) {
                ++lens[pos];
                if (std::accumulate(lens.begin(), lens.end(), 0) <= budget) break;
                lens[pos] = 0;
                --pos;
            }
            if (pos < 0) break;
        }
    }
    return specs;
}

/// Bound sweep over the full o-lattice grid with k <= 2 and <= max_vars
/// variables.
inline SweepResult sweep_o_lattice(int max_vars, const FieldSpec& field, const RunLimits& lim = {}) {
    SweepResult out;
    for (const auto& spec : enumerate_o_specs(2, max_vars))
        out.rows.push_back(detail::guarded_row("o-lattice", o_spec_str(spec), field,
                                               [&] { return check_theorem4(spec.k, spec.ms, spec.Ms, field, lim); }));
    return out;
}

inline SweepResult sweep_conjecture(int N, const FieldSpec& field, const RunLimits& lim = {}) {
    SweepResult out;
    for (const auto& rep : scan_conjecture(N, field, lim))
        out.rows.push_back(detail::row_from_report("conjecture", rep));
    return out;
}

}  // namespace crystal
