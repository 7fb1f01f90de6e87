#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace signed_spectra {

using Vertex = int;

/// Edge of a signed graph with u < v and sign in {+1, -1}.
struct SignedEdge {
    Vertex u = 0;
    Vertex v = 0;
    int sign = 1;

    auto operator<=>(const SignedEdge&) const = default;
};

/// Raised for malformed graph input (self-loops, duplicates, bad ids, bad signs).
class GraphError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/**
 * Immutable simple signed graph on vertices 0..order-1.
 *
 * Edges are kept normalized (u < v) and sorted lexicographically, so two
 * graphs compare equal iff they have the same order, edge set and signature.
 * A dense sign table gives O(1) adjacency queries; the orders this library
 * targets are small.
 */
class SignedGraph {
public:
    SignedGraph() = default;

    int order() const { return order_; }
    std::size_t size() const { return edges_.size(); }
    std::span<const SignedEdge> edges() const { return edges_; }

    /// +1 or -1 for an edge, 0 for a non-adjacent pair (or u == v).
    int sign(Vertex u, Vertex v) const { return signs_[static_cast<std::size_t>(u * order_ + v)]; }
    bool adjacent(Vertex u, Vertex v) const { return sign(u, v) != 0; }
    int degree(Vertex v) const;
    std::vector<Vertex> neighbors(Vertex v) const;
    std::size_t negative_edge_count() const;

    bool operator==(const SignedGraph& other) const {
        return order_ == other.order_ && edges_ == other.edges_;
    }

private:
    friend SignedGraph build(int order, std::vector<SignedEdge> edges);

    int order_ = 0;
    std::vector<SignedEdge> edges_;
    std::vector<std::int8_t> signs_;
};

/// Validates and normalizes an edge list. Endpoints may be given in either order.
SignedGraph build(int order, std::vector<SignedEdge> edges);

/// K_n with every edge carrying `sign`.
SignedGraph complete_graph(int order, int sign = 1);

/// Cycle 0-1-...-(n-1)-0 whose first `negative_edges` edges (in the sorted edge order) are negative.
SignedGraph cycle_graph(int order, int negative_edges = 0);

/// Switching at U: flips every edge with exactly one endpoint in U.
SignedGraph switch_at(const SignedGraph& g, std::span<const Vertex> vertex_set);

/// -Γ: every sign reversed.
SignedGraph negate(const SignedGraph& g);

/// Image of g under the vertex map v -> permutation[v].
SignedGraph relabel(const SignedGraph& g, std::span<const Vertex> permutation);

/// Adds edge uv with `sign`, or overwrites the sign if uv is already present.
SignedGraph with_edge(const SignedGraph& g, Vertex u, Vertex v, int sign);
SignedGraph without_edge(const SignedGraph& g, Vertex u, Vertex v);

/// Component id per vertex; ids are assigned in order of smallest member.
std::vector<int> connected_components(const SignedGraph& g);
int component_count(const SignedGraph& g);

bool is_balanced(const SignedGraph& g);

/// Throws GraphError unless both graphs share the same underlying graph.
bool switching_equivalent(const SignedGraph& g1, const SignedGraph& g2);

/// Shortest negative cycle length via BFS in the signed double cover; empty if balanced.
std::optional<int> negative_girth(const SignedGraph& g);

bool has_negative_triangle(const SignedGraph& g);
bool has_negative_quadrilateral(const SignedGraph& g);

/**
 * True iff g has neither a negative 3-cycle nor a negative 4-cycle.
 *
 * Computed by explicit triangle/quadrilateral enumeration and cross-checked
 * against the negative girth; a disagreement throws std::logic_error.
 */
bool is_c34_minus_free(const SignedGraph& g);

inline constexpr int kBalancedCliqueSearchLimit = 12;

/// Largest balanced complete subgraph, by branch and bound. Throws GraphError above `order_limit`.
int balanced_clique_number(const SignedGraph& g, int order_limit = kBalancedCliqueSearchLimit);

}  // namespace signed_spectra
