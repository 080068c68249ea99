#pragma once

#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "crystal/lattice_io.hpp"
#include "crystal/verify.hpp"

namespace crystal {

inline nlohmann::json binomial_to_json(const Binomial& b, const std::vector<std::string>& labels) {
    return nlohmann::json{{"lead", b.lead.str(labels)}, {"trail", b.trail.str(labels)}};
}

inline nlohmann::json betti_to_json(const BettiTable& t, const std::vector<std::string>& labels,
                                    bool include_multigraded = false) {
    nlohmann::json j;
    j["field"] = t.field.str();
    j["pd"] = t.pd;
    j["totals"] = t.totals;
    nlohmann::json graded = nlohmann::json::object();
    for (const auto& [i, by_deg] : t.graded) {
        nlohmann::json row = nlohmann::json::object();
        for (const auto& [deg, r] : by_deg) row[std::to_string(deg)] = r;
        graded[std::to_string(i)] = std::move(row);
    }
    j["graded"] = std::move(graded);
    if (include_multigraded) {
        nlohmann::json mg = nlohmann::json::array();
        for (const auto& [i, by_deg] : t.multigraded)
            for (const auto& [m, r] : by_deg)
                mg.push_back({{"i", i}, {"degree", m.str(labels)}, {"rank", r}});
        j["multigraded"] = std::move(mg);
    }
    return j;
}

/// Text Betti table: rows are total degrees, columns homological degrees.
inline std::string betti_text_table(const BettiTable& t) {
    int max_deg = 0;
    for (const auto& [i, by_deg] : t.graded)
        for (const auto& [deg, r] : by_deg) max_deg = std::max(max_deg, deg);
    size_t width = 6;
    std::ostringstream out;
    out << std::setw(6) << "deg\\i";
    for (int i = 0; i <= t.pd; ++i) out << std::setw(width) << i;
    out << "\n";
    for (int deg = 0; deg <= max_deg; ++deg) {
        bool any = false;
        for (int i = 0; i <= t.pd && !any; ++i) {
            auto it = t.graded.find(i);
            any = it != t.graded.end() && it->second.count(deg) != 0;
        }
        if (!any) continue;
        out << std::setw(6) << deg;
        for (int i = 0; i <= t.pd; ++i) {
            auto it = t.graded.find(i);
            long long v = 0;
            if (it != t.graded.end()) {
                auto jt = it->second.find(deg);
                if (jt != it->second.end()) v = jt->second;
            }
            if (v == 0) out << std::setw(width) << ".";
            else out << std::setw(width) << v;
        }
        out << "\n";
    }
    out << "totals:";
    for (long long v : t.totals) out << " " << v;
    out << "\npd: " << t.pd << "\n";
    return out.str();
}

inline nlohmann::json comparison_to_json(const ClaimComparison& c, const std::vector<std::string>& labels,
                                         const std::string& which) {
    auto list = [&](const std::vector<Monomial>& ms) {
        nlohmann::json a = nlohmann::json::array();
        for (const auto& m : ms) a.push_back(m.str(labels));
        return a;
    };
    return nlohmann::json{{"which", which},          {"equal", c.equal},
                          {"claimed", list(c.claimed)}, {"computed", list(c.computed)},
                          {"missing", list(c.missing)}, {"extra", list(c.extra)}};
}

inline nlohmann::json gb_to_json(const GroebnerBasis& gb, const MonomialIdeal& initial,
                                 const std::vector<std::string>& labels) {
    nlohmann::json j;
    j["basis"] = nlohmann::json::array();
    for (const auto& b : gb.elements) j["basis"].push_back(binomial_to_json(b, labels));
    j["initial"] = nlohmann::json::array();
    for (const auto& m : initial.generators()) j["initial"].push_back(m.str(labels));
    return j;
}

inline nlohmann::json report_to_json(const VerificationReport& r, bool with_timing = true) {
    nlohmann::json j;
    j["claim"] = r.claim;
    j["instance"] = r.instance;
    j["field"] = r.field;
    j["pd"] = r.pd;
    j["totals"] = r.totals;
    j["conditions"] = nlohmann::json::array();
    for (const auto& [desc, holds] : r.conditions)
        j["conditions"].push_back({{"condition", desc}, {"holds", holds}});
    j["notes"] = r.notes;
    j["status"] = r.status;
    if (with_timing) j["elapsed_ms"] = r.elapsed_ms;
    return j;
}

inline std::string report_text(const VerificationReport& r) {
    std::ostringstream out;
    out << r.claim << " at " << r.instance << " over " << r.field << "\n";
    out << "  pd = " << r.pd << ", totals =";
    for (long long v : r.totals) out << " " << v;
    out << "\n";
    for (const auto& [desc, holds] : r.conditions)
        out << "  [" << (holds ? "ok" : "VIOLATED") << "] " << desc << "\n";
    for (const auto& n : r.notes) out << "  note: " << n << "\n";
    out << "  status: " << r.status << "\n";
    return out.str();
}

inline nlohmann::json sweep_to_json(const SweepResult& s, bool with_timing = true) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& r : s.rows) {
        nlohmann::json row;
        row["family"] = r.family;
        row["params"] = r.params;
        row["field"] = r.field;
        row["pd"] = r.pd;
        row["totals"] = r.totals;
        row["bounds"] = r.bounds;
        row["status"] = r.status;
        row["error"] = r.error;
        if (with_timing) row["elapsed_ms"] = r.elapsed_ms;
        rows.push_back(std::move(row));
    }
    return nlohmann::json{{"rows", std::move(rows)}};
}

namespace detail {

inline std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += "\"";
    return out;
}

}  // namespace detail

inline std::string sweep_to_csv(const SweepResult& s) {
    std::string out = "family,params,field,pd,totals,bounds,status\n";
    for (const auto& r : s.rows) {
        std::string totals;
        for (size_t i = 0; i < r.totals.size(); ++i) totals += (i ? "|" : "") + std::to_string(r.totals[i]);
        out += detail::csv_escape(r.family) + "," + detail::csv_escape(r.params) + "," + detail::csv_escape(r.field) +
               "," + std::to_string(r.pd) + "," + totals + "," + detail::csv_escape(r.bounds) + "," +
               detail::csv_escape(r.status) + "\n";
    }
    return out;
}

inline nlohmann::json lattice_report_to_json(const FiniteLattice& L) {
    LatticeLawReport laws = check_lattice_laws(L);
    nlohmann::json j = lattice_to_json(L);
    j["size"] = L.size();
    j["bottom"] = L.label(L.bottom());
    j["top"] = L.label(L.top());
    j["laws"] = {{"is_lattice", laws.is_lattice},
                 {"is_modular", laws.is_modular},
                 {"is_distributive", laws.is_distributive}};
    j["incomparable_pair_count"] = incomparable_pairs(L).size();
    return j;
}

}  // namespace crystal
