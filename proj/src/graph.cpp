#include "scalemine/graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "scalemine/errors.hpp"

namespace scalemine {

RelationGraph build_graph(const std::vector<WeakStrongPair>& pairs) {
    RelationGraph g;
    std::set<std::string> nodes;
    for (const auto& p : pairs) {
        nodes.insert(p.weak);
        nodes.insert(p.strong);
        g.edges.push_back(RelationEdge{p.weak, p.strong, p.phrase_id});
    }
    g.nodes.assign(nodes.begin(), nodes.end());
    return g;
}

RelationGraph resolve_directions(RelationGraph graph) {
    std::map<std::pair<std::string, std::string>, std::size_t> counts;
    for (const auto& e : graph.edges) {
        if (e.weak == e.strong) continue; // loops never enter the resolved digraph
        ++counts[{e.weak, e.strong}];
    }

    graph.resolved.clear();
    graph.dropped_ties.clear();
    std::set<std::pair<std::string, std::string>> done;
    for (const auto& [dir, n] : counts) {
        auto key = dir.first < dir.second ? dir : std::make_pair(dir.second, dir.first);
        if (!done.insert(key).second) continue;
        std::size_t forward = n;
        std::size_t backward = 0;
        auto rev = counts.find({dir.second, dir.first});
        if (rev != counts.end()) backward = rev->second;
        if (forward > backward)
            graph.resolved.push_back(ResolvedEdge{dir.first, dir.second, forward});
        else if (backward > forward)
            graph.resolved.push_back(ResolvedEdge{dir.second, dir.first, backward});
        else
            graph.dropped_ties.push_back(key);
    }
    std::sort(graph.resolved.begin(), graph.resolved.end(),
              [](const ResolvedEdge& a, const ResolvedEdge& b) {
                  return std::tie(a.from, a.to) < std::tie(b.from, b.to);
              });
    std::sort(graph.dropped_ties.begin(), graph.dropped_ties.end());
    graph.is_resolved = true;
    return graph;
}

GraphDiagnostics diagnose(const RelationGraph& graph_in) {
    // Bidirectional pairs and loops read the raw multiset; components need the
    // resolved digraph, so resolve a copy if the caller has not.
    const RelationGraph graph =
        graph_in.is_resolved ? graph_in : resolve_directions(graph_in);
    GraphDiagnostics d;
    d.dropped_ties = graph.dropped_ties;

    std::map<std::pair<std::string, std::string>, std::size_t> counts;
    std::map<std::string, std::size_t> loops;
    std::set<std::pair<std::string, std::string>> pairs;
    for (const auto& e : graph.edges) {
        if (e.weak == e.strong) {
            ++loops[e.weak];
            continue;
        }
        ++counts[{e.weak, e.strong}];
        pairs.insert(e.weak < e.strong ? std::make_pair(e.weak, e.strong)
                                       : std::make_pair(e.strong, e.weak));
    }
    d.node_pair_count = pairs.size();
    d.loops.assign(loops.begin(), loops.end());

    for (const auto& [a, b] : pairs) {
        auto ab = counts.find({a, b});
        auto ba = counts.find({b, a});
        if (ab != counts.end() && ba != counts.end())
            d.bidirectional_pairs.push_back({a, b, ab->second, ba->second});
    }

    // Weakly connected components of the resolved digraph over all nodes.
    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < graph.nodes.size(); ++i) index[graph.nodes[i]] = i;
    std::vector<std::size_t> parent(graph.nodes.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto root = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& e : graph.resolved)
        parent[root(index.at(e.from))] = root(index.at(e.to));
    std::map<std::size_t, std::vector<std::string>> comps;
    for (std::size_t i = 0; i < graph.nodes.size(); ++i)
        comps[root(i)].push_back(graph.nodes[i]);
    for (auto& [r, members] : comps) d.components.push_back(std::move(members));
    std::sort(d.components.begin(), d.components.end());
    return d;
}

namespace {

void dfs_paths(const std::map<std::string, std::vector<std::string>>& adjacency,
               const std::string& target, std::size_t max_depth,
               std::vector<std::string>& path, std::set<std::string>& on_path,
               std::vector<std::vector<std::string>>& out) {
    const std::string& here = path.back();
    if (path.size() > max_depth) return; // edges used == path.size()-1
    auto it = adjacency.find(here);
    if (it == adjacency.end()) return;
    for (const auto& next : it->second) {
        if (on_path.count(next)) continue;
        path.push_back(next);
        if (next == target) {
            out.push_back(path); // a branch terminates when the target is reached
        } else if (path.size() <= max_depth) {
            on_path.insert(next);
            dfs_paths(adjacency, target, max_depth, path, on_path, out);
            on_path.erase(next);
        }
        path.pop_back();
    }
}

} // namespace

PathSearchResult find_category_paths(const RelationGraph& graph,
                                     const AdjectiveInventory& inventory,
                                     std::size_t max_depth) {
    if (!graph.is_resolved)
        throw InternalError("find_category_paths requires a resolved graph");

    std::map<std::string, std::vector<std::string>> adjacency;
    for (const auto& e : graph.resolved) adjacency[e.from].push_back(e.to);
    for (auto& [from, tos] : adjacency) std::sort(tos.begin(), tos.end());

    std::set<std::string> nodes(graph.nodes.begin(), graph.nodes.end());

    PathSearchResult result;
    std::set<std::tuple<int, std::string, std::string>> unique;
    for (int category : inventory.categories()) {
        std::vector<std::string> present;
        for (const auto& lemma : inventory.category_lemmas(category))
            if (nodes.count(lemma)) present.push_back(lemma);
        for (const auto& from : present) {
            for (const auto& to : present) {
                if (from == to) continue;
                std::vector<std::vector<std::string>> found;
                std::vector<std::string> path{from};
                std::set<std::string> on_path{from};
                dfs_paths(adjacency, to, max_depth, path, on_path, found);
                for (auto& nodeseq : found) {
                    CategoryPath cp;
                    cp.category = category;
                    cp.weak = from;
                    cp.strong = to;
                    cp.via_same_category = false;
                    for (std::size_t i = 1; i + 1 < nodeseq.size(); ++i) {
                        const InventoryEntry* e = inventory.find(nodeseq[i]);
                        if (e && e->category == category) cp.via_same_category = true;
                    }
                    cp.nodes = std::move(nodeseq);
                    result.paths.push_back(std::move(cp));
                    unique.insert({category, from, to});
                }
            }
        }
    }
    result.unique_pairs.assign(unique.begin(), unique.end());
    return result;
}

std::string to_dot_multigraph(const RelationGraph& graph) {
    std::ostringstream out;
    out << "digraph weak_strong {\n";
    for (const auto& n : graph.nodes) out << "  \"" << n << "\";\n";
    std::vector<std::pair<std::string, std::string>> arrows;
    for (const auto& e : graph.edges) arrows.emplace_back(e.weak, e.strong);
    std::sort(arrows.begin(), arrows.end());
    for (const auto& [from, to] : arrows)
        out << "  \"" << from << "\" -> \"" << to << "\";\n";
    out << "}\n";
    return out.str();
}

std::string to_dot_resolved(const RelationGraph& graph) {
    std::ostringstream out;
    out << "digraph weak_strong_resolved {\n";
    for (const auto& n : graph.nodes) out << "  \"" << n << "\";\n";
    for (const auto& e : graph.resolved)
        out << "  \"" << e.from << "\" -> \"" << e.to << "\" [label=" << e.weight << "];\n";
    out << "}\n";
    return out.str();
}

std::string render_diagnostics(const GraphDiagnostics& d) {
    std::ostringstream out;
    out << "node pairs with edges: " << d.node_pair_count << "\n";
    out << "bidirectional pairs: " << d.bidirectional_pairs.size() << "\n";
    for (const auto& b : d.bidirectional_pairs)
        out << "  {" << b.a << ", " << b.b << "}: " << b.a << "->" << b.b << " " << b.ab
            << ", " << b.b << "->" << b.a << " " << b.ba << "\n";
    out << "loops: " << d.loops.size() << "\n";
    for (const auto& [lemma, n] : d.loops) out << "  " << lemma << ": " << n << "\n";
    out << "dropped ties: " << d.dropped_ties.size() << "\n";
    for (const auto& [a, b] : d.dropped_ties) out << "  {" << a << ", " << b << "}\n";
    out << "weakly connected components: " << d.components.size() << "\n";
    for (const auto& c : d.components) {
        out << "  {";
        for (std::size_t i = 0; i < c.size(); ++i) out << (i ? ", " : "") << c[i];
        out << "}\n";
    }
    return out.str();
}

} // namespace scalemine
