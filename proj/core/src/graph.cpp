#include "ontolith/graph.hpp"

#include <algorithm>
#include <cmath>
#include <deque>

namespace ontolith {

const Node& Graph::node(const NodeId& id) const {
    auto it = nodes_.find(id);
    if (it == nodes_.end()) {
        throw Error(ErrorCode::UnknownNode, "node '" + id + "' does not exist");
    }
    return it->second;
}

EdgeKey Graph::canonical(EdgeKey k) const {
    if (!directed_ && k.target < k.source) {
        std::swap(k.source, k.target);
    }
    return k;
}

bool Graph::has_edge(const NodeId& source, const NodeId& target, const std::string& relation) const {
    return edges_.count(canonical({source, target, relation})) != 0;
}

bool Graph::adjacent(const NodeId& source, const NodeId& target) const {
    auto from = edges_.lower_bound({source, "", ""});
    for (auto it = from; it != edges_.end() && it->first.source == source; ++it) {
        if (it->first.target == target) return true;
    }
    if (!directed_) {
        auto rev = edges_.lower_bound({target, "", ""});
        for (auto it = rev; it != edges_.end() && it->first.source == target; ++it) {
            if (it->first.target == source) return true;
        }
    }
    return false;
}

double Graph::edge_weight(const NodeId& source, const NodeId& target, const std::string& relation) const {
    auto it = edges_.find(canonical({source, target, relation}));
    if (it == edges_.end()) {
        throw Error(ErrorCode::UnknownEdge,
                    "edge (" + source + ", " + target + ", " + relation + ") does not exist");
    }
    return it->second;
}

std::vector<Edge> Graph::edge_list() const {
    std::vector<Edge> out;
    out.reserve(edges_.size());
    for (const auto& [k, w] : edges_) {
        out.push_back({k.source, k.target, k.relation, w});
    }
    return out;
}

void Graph::add_node_in_place(Node n) {
    if (nodes_.count(n.id)) {
        throw Error(ErrorCode::DuplicateNode, "node '" + n.id + "' already exists");
    }
    if (n.id.empty()) {
        throw Error(ErrorCode::UnknownNode, "node id must be non-empty");
    }
    nodes_.emplace(n.id, std::move(n));
}

void Graph::add_edge_in_place(Edge e) {
    if (!nodes_.count(e.source)) {
        throw Error(ErrorCode::MissingEndpoint, "source '" + e.source + "' does not exist");
    }
    if (!nodes_.count(e.target)) {
        throw Error(ErrorCode::MissingEndpoint, "target '" + e.target + "' does not exist");
    }
    if (!std::isfinite(e.weight)) {
        throw Error(ErrorCode::NonFiniteWeight,
                    "edge (" + e.source + ", " + e.target + ", " + e.relation + ") has non-finite weight");
    }
    EdgeKey k = canonical(e.key());
    if (edges_.count(k)) {
        throw Error(ErrorCode::DuplicateEdge,
                    "edge (" + k.source + ", " + k.target + ", " + k.relation + ") already exists");
    }
    edges_.emplace(std::move(k), e.weight);
}

void Graph::remove_node_in_place(const NodeId& id) {
    if (!nodes_.count(id)) {
        throw Error(ErrorCode::UnknownNode, "node '" + id + "' does not exist");
    }
    nodes_.erase(id);
    for (auto it = edges_.begin(); it != edges_.end();) {
        if (it->first.source == id || it->first.target == id) {
            it = edges_.erase(it);
        } else {
            ++it;
        }
    }
}

void Graph::remove_edge_in_place(const NodeId& source, const NodeId& target, const std::string& relation) {
    EdgeKey k = canonical({source, target, relation});
    auto it = edges_.find(k);
    if (it == edges_.end()) {
        throw Error(ErrorCode::UnknownEdge,
                    "edge (" + source + ", " + target + ", " + relation + ") does not exist");
    }
    edges_.erase(it);
}

Graph Graph::add_node(Node n) const {
    Graph g = *this;
    g.add_node_in_place(std::move(n));
    ++g.version_;
    return g;
}

Graph Graph::add_edge(Edge e) const {
    Graph g = *this;
    g.add_edge_in_place(std::move(e));
    ++g.version_;
    return g;
}

Graph Graph::remove_node(const NodeId& id) const {
    Graph g = *this;
    g.remove_node_in_place(id);
    ++g.version_;
    return g;
}

Graph Graph::remove_edge(const NodeId& source, const NodeId& target, const std::string& relation) const {
    Graph g = *this;
    g.remove_edge_in_place(source, target, relation);
    ++g.version_;
    return g;
}

std::vector<NeighborEntry> Graph::neighbors(const NodeId& id, Direction direction) const {
    if (!nodes_.count(id)) {
        throw Error(ErrorCode::UnknownNode, "node '" + id + "' does not exist");
    }
    std::vector<NeighborEntry> out;
    const bool want_out = direction == Direction::Out || direction == Direction::Both;
    const bool want_in = direction == Direction::In || direction == Direction::Both;
    for (const auto& [k, w] : edges_) {
        if (directed_) {
            if (want_out && k.source == id) out.push_back({k.target, k.relation, w});
            if (want_in && k.target == id) out.push_back({k.source, k.relation, w});
            // A directed self-loop is both an out- and an in-edge; under
            // Both it still contributes a single incidence.
            if (direction == Direction::Both && k.source == id && k.target == id) out.pop_back();
        } else {
            // Undirected: every incident edge is a neighbor regardless of
            // the canonical orientation it is stored under.
            if (k.source == id) out.push_back({k.target, k.relation, w});
            else if (k.target == id) out.push_back({k.source, k.relation, w});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

Graph Graph::subgraph(const std::set<NodeId>& seeds, std::size_t hops) const {
    for (const auto& s : seeds) {
        if (!nodes_.count(s)) {
            throw Error(ErrorCode::UnknownNode, "seed '" + s + "' does not exist");
        }
    }
    // Undirected BFS (context neighborhoods ignore edge direction).
    std::map<NodeId, std::vector<NodeId>> adj;
    for (const auto& [k, w] : edges_) {
        adj[k.source].push_back(k.target);
        adj[k.target].push_back(k.source);
    }
    std::set<NodeId> included(seeds.begin(), seeds.end());
    std::deque<std::pair<NodeId, std::size_t>> frontier;
    for (const auto& s : seeds) frontier.emplace_back(s, 0);
    while (!frontier.empty()) {
        auto [u, d] = frontier.front();
        frontier.pop_front();
        if (d >= hops) continue;
        auto it = adj.find(u);
        if (it == adj.end()) continue;
        for (const auto& v : it->second) {
            if (included.insert(v).second) {
                frontier.emplace_back(v, d + 1);
            }
        }
    }
    GraphBuilder b(directed_);
    for (const auto& id : included) {
        b.add_node(nodes_.at(id));
    }
    for (const auto& [k, w] : edges_) {
        if (included.count(k.source) && included.count(k.target)) {
            b.add_edge({k.source, k.target, k.relation, w});
        }
    }
    return std::move(b).build();
}

} // namespace ontolith
