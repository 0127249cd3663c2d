#ifndef QCRYST_GRAPH_JSON_HPP
#define QCRYST_GRAPH_JSON_HPP

#include <json.hpp>
#include <string>

#include "qcryst/crystal.hpp"

namespace qcryst {

/// {vertices:[{id, payload, wt}], edges:[{src, dst, label}]}
inline std::string to_json_string(const CrystalGraph& g) {
    nlohmann::json j;
    j["vertices"] = nlohmann::json::array();
    j["edges"] = nlohmann::json::array();
    for (size_t i = 0; i < g.size(); ++i) {
        nlohmann::json v;
        v["id"] = i;
        v["payload"] = g.verts[i].str();
        v["wt"] = g.wts[i];
        j["vertices"].push_back(v);
    }
    for (size_t i = 0; i < g.size(); ++i)
        for (auto [l, d] : g.fout[i]) {
            nlohmann::json e;
            e["src"] = i;
            e["dst"] = d;
            e["label"] = label_name(l);
            j["edges"].push_back(e);
        }
    return j.dump(2) + "\n";
}

}  // namespace qcryst

#endif
