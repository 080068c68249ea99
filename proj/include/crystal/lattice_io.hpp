#pragma once

#include <fstream>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "crystal/lattice.hpp"

namespace crystal {

/// Reads {"elements": [labels...], "covers": [[lo,hi],...]} where covers list
/// label pairs with lo below hi.  The transitive closure is computed here;
/// poset and lattice validation happen in the FiniteLattice constructor.
inline FiniteLattice lattice_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("elements") || !j.contains("covers"))
        throw std::invalid_argument("lattice json: need object with 'elements' and 'covers'");
    std::vector<LatticeElement> el;
    std::map<std::string, int> id_of;
    for (const auto& lab : j.at("elements")) {
        if (!lab.is_string()) throw std::invalid_argument("lattice json: element labels must be strings");
        std::string s = lab.get<std::string>();
        if (!id_of.emplace(s, static_cast<int>(el.size())).second)
            throw std::invalid_argument("lattice json: duplicate label " + s);
        el.push_back({static_cast<int>(el.size()), s});
    }
    const int n = static_cast<int>(el.size());
    std::vector<uint8_t> leq(static_cast<size_t>(n) * n, 0);
    for (int a = 0; a < n; ++a) leq[static_cast<size_t>(a) * n + a] = 1;
    for (const auto& cov : j.at("covers")) {
        if (!cov.is_array() || cov.size() != 2)
            throw std::invalid_argument("lattice json: each cover must be a [lo,hi] pair");
        auto look = [&](const nlohmann::json& v) {
            std::string s = v.get<std::string>();
            auto it = id_of.find(s);
            if (it == id_of.end()) throw std::invalid_argument("lattice json: unknown label " + s);
            return it->second;
        };
        leq[static_cast<size_t>(look(cov[0])) * n + look(cov[1])] = 1;
    }
    for (int c = 0; c < n; ++c)  // Warshall transitive closure
        for (int a = 0; a < n; ++a) {
            if (!leq[static_cast<size_t>(a) * n + c]) continue;
            for (int b = 0; b < n; ++b)
                if (leq[static_cast<size_t>(c) * n + b]) leq[static_cast<size_t>(a) * n + b] = 1;
        }
    return FiniteLattice(std::move(el), std::move(leq));
}

inline FiniteLattice load_lattice_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open lattice file: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument("lattice file " + path + ": " + e.what());
    }
    return lattice_from_json(j);
}

/// Emits the same format the reader accepts; covers are the minimal relation.
inline nlohmann::json lattice_to_json(const FiniteLattice& L) {
    nlohmann::json j;
    j["elements"] = nlohmann::json::array();
    for (const auto& e : L.elements()) j["elements"].push_back(e.label);
    j["covers"] = nlohmann::json::array();
    const int n = L.size();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (a == b || !L.leq(a, b)) continue;
            bool cover = true;
            for (int c = 0; c < n && cover; ++c)
                if (c != a && c != b && L.leq(a, c) && L.leq(c, b)) cover = false;
            if (cover) j["covers"].push_back({L.label(a), L.label(b)});
        }
    return j;
}

}  // namespace crystal
