#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "ontolith/errors.hpp"

namespace ontolith {

using NodeId = std::string;

struct Node {
    NodeId id;
    std::string label;
    std::string node_type;
    std::map<std::string, std::string> attributes;

    friend bool operator==(const Node&, const Node&) = default;
};

struct EdgeKey {
    NodeId source;
    NodeId target;
    std::string relation;

    friend auto operator<=>(const EdgeKey&, const EdgeKey&) = default;
};

struct Edge {
    NodeId source;
    NodeId target;
    std::string relation;
    double weight = 1.0;

    EdgeKey key() const { return {source, target, relation}; }
    friend bool operator==(const Edge&, const Edge&) = default;
};

enum class Direction { Out, In, Both };

struct NeighborEntry {
    NodeId id;
    std::string relation;
    double weight;

    friend auto operator<=>(const NeighborEntry&, const NeighborEntry&) = default;
};

// Immutable text-attributed property graph. Every mutation returns a fresh
// value with the version bumped; snapshots are safe to share across threads.
// For undirected graphs an edge is stored once under its canonical
// orientation (lexicographically smaller endpoint first).
class Graph {
public:
    Graph() = default;
    explicit Graph(bool directed) : directed_(directed) {}

    bool directed() const { return directed_; }
    std::uint64_t version() const { return version_; }
    std::size_t node_count() const { return nodes_.size(); }
    std::size_t edge_count() const { return edges_.size(); }

    const std::map<NodeId, Node>& nodes() const { return nodes_; }
    const std::map<EdgeKey, double>& edges() const { return edges_; }

    bool has_node(const NodeId& id) const { return nodes_.count(id) != 0; }
    const Node& node(const NodeId& id) const;

    // Canonicalizes the orientation for undirected graphs before lookup.
    bool has_edge(const NodeId& source, const NodeId& target, const std::string& relation) const;
    // True when any relation connects source to target (source->target for
    // directed graphs, either stored orientation for undirected ones).
    bool adjacent(const NodeId& source, const NodeId& target) const;
    double edge_weight(const NodeId& source, const NodeId& target, const std::string& relation) const;

    std::vector<Edge> edge_list() const;

    Graph add_node(Node n) const;
    Graph add_edge(Edge e) const;
    Graph remove_node(const NodeId& id) const;
    Graph remove_edge(const NodeId& source, const NodeId& target, const std::string& relation) const;

    // One entry per incident edge, sorted by (id, relation, weight).
    std::vector<NeighborEntry> neighbors(const NodeId& id, Direction direction) const;

    // Induced subgraph of every node within `hops` of any seed (following
    // edges in both directions), plus all edges between included nodes.
    // The result is a fresh value with version 0.
    Graph subgraph(const std::set<NodeId>& seeds, std::size_t hops) const;

    // Structural equality: directedness, nodes and edges. Version is runtime
    // lineage state and deliberately excluded.
    friend bool operator==(const Graph& a, const Graph& b) {
        return a.directed_ == b.directed_ && a.nodes_ == b.nodes_ && a.edges_ == b.edges_;
    }

private:
    friend class GraphBuilder;

    EdgeKey canonical(EdgeKey k) const;
    void add_node_in_place(Node n);
    void add_edge_in_place(Edge e);
    void remove_node_in_place(const NodeId& id);
    void remove_edge_in_place(const NodeId& source, const NodeId& target, const std::string& relation);

    bool directed_ = true;
    std::uint64_t version_ = 0;
    std::map<NodeId, Node> nodes_;
    std::map<EdgeKey, double> edges_;
};

// Bulk construction without the per-mutation copy cost of the value API.
// Validation rules are identical to Graph::add_node / Graph::add_edge.
class GraphBuilder {
public:
    explicit GraphBuilder(bool directed) : g_(directed) {}
    explicit GraphBuilder(Graph base) : g_(std::move(base)) {}

    GraphBuilder& add_node(Node n) {
        g_.add_node_in_place(std::move(n));
        return *this;
    }
    GraphBuilder& add_edge(Edge e) {
        g_.add_edge_in_place(std::move(e));
        return *this;
    }
    bool has_node(const NodeId& id) const { return g_.has_node(id); }
    bool has_edge(const NodeId& s, const NodeId& t, const std::string& r) const {
        return g_.has_edge(s, t, r);
    }

    Graph build() && { return std::move(g_); }
    Graph build_with_version(std::uint64_t version) && {
        g_.version_ = version;
        return std::move(g_);
    }

private:
    Graph g_;
};

} // namespace ontolith
