#pragma once

#include "strclan/field.hpp"
#include "strclan/quiver.hpp"

#include <optional>
#include <string>
#include <vector>

namespace strclan {

struct AxiomFailure {
    std::string axiom;   // "S0","S1","S2","S3","C0","C1","C2"
    std::string witness; // offending vertex / arrow pair / cycle
};

struct AlgebraReport {
    bool is_string_algebra = false;
    bool is_clannish = false;
    bool is_finite_dimensional = false;
    std::optional<BigInt> k_dimension;      // empty when infinite
    std::optional<int> max_path_length;     // empty when infinite
    std::vector<AxiomFailure> failed_axioms;

    std::string text() const;
};

/// Walk automaton over reduced paths: relations (and special squares) are
/// forbidden factors, Aho-Corasick style so relations longer than 2 are exact.
struct PathAutomaton {
    struct TrieNode {
        std::vector<std::pair<int, int>> next; // (arrow, node)
        int fail = 0;
        bool terminal = false;
    };
    std::vector<TrieNode> trie;
    const Presentation* pres = nullptr;

    explicit PathAutomaton(const Presentation& p);
    int step(int node, int arrow) const;
    bool forbidden(int node) const { return trie[node].terminal; }

    /// Reachable (vertex,node) graph. Returns a relation-free cycle (as arrow
    /// ids, in application order) if one exists.
    std::optional<std::vector<std::string>> find_cycle() const;

    /// Requires acyclic; counts reduced paths (incl. one trivial per vertex)
    /// and the longest reduced path.
    std::pair<BigInt, int> count_and_longest() const;

  private:
    int goto_raw(int node, int arrow) const;
    void build_states(std::vector<std::vector<std::pair<int, int>>>& adj,
                      std::vector<std::pair<int, int>>& states) const;
};

AlgebraReport validate_string_algebra(const Presentation& p);
AlgebraReport validate_clannish(const Presentation& p);

/// Longest reduced path length in the quotient algebra. Errors when infinite.
int path_length_bound(const Presentation& p);

} // namespace strclan
