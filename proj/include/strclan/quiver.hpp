#pragma once

#include "strclan/field.hpp"

#include <map>
#include <string>
#include <vector>

namespace strclan {

struct Arrow {
    std::string id;
    std::string source;
    std::string target;
    bool special = false;
};

struct Quiver {
    std::vector<std::string> vertices;
    std::vector<Arrow> arrows;

    std::map<std::string, int> vertex_index;
    std::map<std::string, int> arrow_index;

    void reindex();
    bool has_vertex(const std::string& v) const { return vertex_index.count(v) > 0; }
    const Arrow& arrow(const std::string& id) const;
    std::vector<int> arrows_from(int v) const;
    std::vector<int> arrows_to(int v) const;
};

/// kQ/(R ∪ R^Sp): quiver, special loops flagged on arrows, monomial relations.
/// Relations are arrow-id lists composed right to left: ["c","a"] is the path c∘a.
struct Presentation {
    Quiver quiver;
    std::vector<std::vector<std::string>> relations;

    /// Structural well-formedness (ids resolve, specials are loops, relations
    /// composable with length >= 2). Throws input errors naming the field.
    void check_well_formed() const;

    bool has_special() const {
        for (const auto& a : quiver.arrows)
            if (a.special) return true;
        return false;
    }
    std::vector<std::string> special_loops_at(const std::string& vertex) const;

    /// Relation as arrow indices, kept in the stored (right-to-left) order.
    std::vector<std::vector<int>> relation_indices() const;
};

Presentation presentation_from_json(const std::string& json_text);
std::string presentation_to_json(const Presentation& p);
Presentation load_presentation_file(const std::string& path);

} // namespace strclan
