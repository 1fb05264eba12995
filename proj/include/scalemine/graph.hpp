#pragma once

#include <cstddef>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "scalemine/inventory.hpp"
#include "scalemine/pairs.hpp"

namespace scalemine {

struct RelationEdge {
    std::string weak;
    std::string strong;
    std::string phrase_id; // provenance
};

struct ResolvedEdge {
    std::string from; // weak
    std::string to;   // strong
    std::size_t weight = 0;

    bool operator==(const ResolvedEdge&) const = default;
};

// Directed weak->strong multigraph over lemmas. `edges` keeps every pair
// instance including loops; `resolved` holds at most one direction per node
// pair (majority wins, exact ties drop both) and never contains loops.
struct RelationGraph {
    std::vector<std::string> nodes; // sorted unique
    std::vector<RelationEdge> edges;
    std::vector<ResolvedEdge> resolved; // sorted (from, to)
    std::vector<std::pair<std::string, std::string>> dropped_ties; // a < b
    bool is_resolved = false;
};

RelationGraph build_graph(const std::vector<WeakStrongPair>& pairs);
RelationGraph resolve_directions(RelationGraph graph);

struct GraphDiagnostics {
    struct Bidirectional {
        std::string a, b; // a < b
        std::size_t ab = 0, ba = 0;
    };
    std::vector<Bidirectional> bidirectional_pairs;
    std::vector<std::pair<std::string, std::size_t>> loops; // lemma, count
    std::vector<std::vector<std::string>> components; // weakly connected, resolved digraph
    std::size_t node_pair_count = 0; // unordered pairs with >=1 edge, loops excluded
    std::vector<std::pair<std::string, std::string>> dropped_ties;
};

// Bidirectional pairs and loops come from the unresolved multiset; components
// from the resolved digraph over the full node set.
GraphDiagnostics diagnose(const RelationGraph& graph);

struct CategoryPath {
    int category = 0;
    std::string weak;
    std::string strong;
    std::vector<std::string> nodes; // weak ... strong, no repeats
    bool via_same_category = false; // an intermediate node shares the endpoint category
};

struct PathSearchResult {
    std::vector<CategoryPath> paths;
    // Deduplicated (category, weak, strong) endpoint pairs, sorted.
    std::vector<std::tuple<int, std::string, std::string>> unique_pairs;
};

// For every ordered pair of distinct same-category lemmas present in the
// graph, enumerate all simple resolved-edge paths from weak to strong with at
// most max_depth edges. Requires a resolved graph.
PathSearchResult find_category_paths(const RelationGraph& graph,
                                     const AdjectiveInventory& inventory,
                                     std::size_t max_depth = 10);

// One arrow per edge instance, loops included.
std::string to_dot_multigraph(const RelationGraph& graph);
// Resolved digraph, multiplicity as edge label.
std::string to_dot_resolved(const RelationGraph& graph);

std::string render_diagnostics(const GraphDiagnostics& diag);

} // namespace scalemine
