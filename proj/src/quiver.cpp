#include "strclan/quiver.hpp"

#include <fstream>
#include <json.hpp>
#include <set>
#include <sstream>

namespace strclan {

void Quiver::reindex() {
    vertex_index.clear();
    arrow_index.clear();
    for (size_t i = 0; i < vertices.size(); ++i) vertex_index[vertices[i]] = static_cast<int>(i);
    for (size_t i = 0; i < arrows.size(); ++i) arrow_index[arrows[i].id] = static_cast<int>(i);
}

const Arrow& Quiver::arrow(const std::string& id) const {
    auto it = arrow_index.find(id);
    if (it == arrow_index.end()) throw input_error("unknown arrow id '" + id + "'");
    return arrows[it->second];
}

std::vector<int> Quiver::arrows_from(int v) const {
    std::vector<int> out;
    for (size_t i = 0; i < arrows.size(); ++i)
        if (vertex_index.at(arrows[i].source) == v) out.push_back(static_cast<int>(i));
    return out;
}

std::vector<int> Quiver::arrows_to(int v) const {
    std::vector<int> out;
    for (size_t i = 0; i < arrows.size(); ++i)
        if (vertex_index.at(arrows[i].target) == v) out.push_back(static_cast<int>(i));
    return out;
}

void Presentation::check_well_formed() const {
    std::set<std::string> vs(quiver.vertices.begin(), quiver.vertices.end());
    if (vs.size() != quiver.vertices.size()) throw input_error("presentation: duplicate vertex ids");
    std::set<std::string> as;
    for (const auto& a : quiver.arrows) {
        if (!as.insert(a.id).second) throw input_error("presentation: duplicate arrow id '" + a.id + "'");
        if (!vs.count(a.source)) throw input_error("presentation: arrow '" + a.id + "' has unknown source '" + a.source + "'");
        if (!vs.count(a.target)) throw input_error("presentation: arrow '" + a.id + "' has unknown target '" + a.target + "'");
        if (a.special && a.source != a.target)
            throw input_error("presentation: special arrow '" + a.id + "' is not a loop");
    }
    for (const auto& r : relations) {
        if (r.size() < 2) throw input_error("presentation: relation shorter than 2 arrows");
        for (size_t i = 0; i < r.size(); ++i) {
            const Arrow& ai = quiver.arrow(r[i]);
            if (i + 1 < r.size()) {
                const Arrow& an = quiver.arrow(r[i + 1]);
                if (ai.source != an.target)
                    throw input_error("presentation: relation [" + r[0] + ",...] not composable at '" + r[i] + "'");
            }
        }
    }
}

std::vector<std::string> Presentation::special_loops_at(const std::string& vertex) const {
    std::vector<std::string> out;
    for (const auto& a : quiver.arrows)
        if (a.special && a.source == vertex) out.push_back(a.id);
    return out;
}

std::vector<std::vector<int>> Presentation::relation_indices() const {
    std::vector<std::vector<int>> out;
    for (const auto& r : relations) {
        std::vector<int> ri;
        for (const auto& id : r) ri.push_back(quiver.arrow_index.at(id));
        out.push_back(std::move(ri));
    }
    return out;
}

Presentation presentation_from_json(const std::string& json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw input_error(std::string("presentation: JSON parse error: ") + e.what());
    }
    Presentation p;
    try {
        if (!j.contains("vertices")) throw input_error("presentation: missing 'vertices'");
        if (!j.contains("arrows")) throw input_error("presentation: missing 'arrows'");
        for (const auto& v : j.at("vertices")) p.quiver.vertices.push_back(v.get<std::string>());
        for (const auto& a : j.at("arrows")) {
            Arrow ar;
            ar.id = a.at("id").get<std::string>();
            ar.source = a.at("source").get<std::string>();
            ar.target = a.at("target").get<std::string>();
            ar.special = a.value("special", false);
            p.quiver.arrows.push_back(ar);
        }
        if (j.contains("relations"))
            for (const auto& r : j.at("relations"))
                p.relations.push_back(r.get<std::vector<std::string>>());
    } catch (const nlohmann::json::exception& e) {
        throw input_error(std::string("presentation: bad field: ") + e.what());
    }
    p.quiver.reindex();
    p.check_well_formed();
    return p;
}

std::string presentation_to_json(const Presentation& p) {
    nlohmann::ordered_json j;
    j["vertices"] = p.quiver.vertices;
    j["arrows"] = nlohmann::ordered_json::array();
    for (const auto& a : p.quiver.arrows) {
        nlohmann::ordered_json ja;
        ja["id"] = a.id;
        ja["source"] = a.source;
        ja["target"] = a.target;
        ja["special"] = a.special;
        j["arrows"].push_back(ja);
    }
    j["relations"] = p.relations;
    return j.dump(2);
}

Presentation load_presentation_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open presentation file '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return presentation_from_json(ss.str());
}

} // namespace strclan
