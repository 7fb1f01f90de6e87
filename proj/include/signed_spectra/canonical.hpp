#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "signed_spectra/signed_graph.hpp"

namespace signed_spectra {

inline constexpr int kMaxCanonicalOrder = 10;

using Permutation = std::vector<Vertex>;

/// Unsigned simple graph as adjacency bit rows; used for underlying graphs.
class SimpleGraph {
public:
    SimpleGraph() = default;
    explicit SimpleGraph(int order);

    int order() const { return order_; }
    bool adjacent(Vertex u, Vertex v) const { return (rows_[static_cast<std::size_t>(u)] >> v) & 1U; }
    std::uint32_t row(Vertex v) const { return rows_[static_cast<std::size_t>(v)]; }
    int degree(Vertex v) const;
    std::size_t size() const;

    void add_edge(Vertex u, Vertex v);

    /// Edges (u < v) in lexicographic order.
    std::vector<std::pair<Vertex, Vertex>> edges() const;

    bool operator==(const SimpleGraph&) const = default;

private:
    int order_ = 0;
    std::vector<std::uint32_t> rows_;
};

SimpleGraph underlying(const SignedGraph& g);
SimpleGraph relabel(const SimpleGraph& g, std::span<const Vertex> permutation);

/// Signed graph on `g` with the edges flagged in `negative_mask` (bit i = i-th sorted edge) negative.
SignedGraph with_signature(const SimpleGraph& g, std::uint64_t negative_mask);

/// Upper-triangle adjacency bits packed row-major, first pair in the most significant position.
std::uint64_t adjacency_code(const SimpleGraph& g);

/**
 * Canonical relabeling of an unsigned graph.
 *
 * `position[v]` is the canonical label of input vertex v; relabeling by it
 * yields the same graph for every isomorphic input. `generators` generate
 * the automorphism group of the input graph.
 */
struct CanonicalLabeling {
    Permutation position;
    std::uint64_t code = 0;
    std::vector<Permutation> generators;
};

/// Individualization/refinement search with twin pruning; order <= kMaxCanonicalOrder.
CanonicalLabeling canonical_labeling(const SimpleGraph& g);

/// Canonically relabeled copy of g together with automorphism generators expressed on it.
struct CanonicalGraph {
    SimpleGraph graph;
    Permutation position;
    std::uint64_t code = 0;
    std::vector<Permutation> automorphisms;
};

CanonicalGraph canonical_form(const SimpleGraph& g);

/**
 * Switching-class bookkeeping for signatures on one fixed underlying graph.
 *
 * Signatures are bit masks over the sorted edge list (bit set = negative).
 * A breadth-first spanning forest rooted at the smallest vertex of each
 * component selects the representative of a switching class: the unique
 * switching-equivalent signature that is positive on every forest edge.
 */
class SignatureFrame {
public:
    explicit SignatureFrame(SimpleGraph g);

    const SimpleGraph& graph() const { return graph_; }
    std::size_t edge_count() const { return edges_.size(); }
    const std::vector<std::pair<Vertex, Vertex>>& edges() const { return edges_; }
    int edge_index(Vertex u, Vertex v) const { return index_[static_cast<std::size_t>(u * graph_.order() + v)]; }
    int component_count() const { return components_; }

    std::uint64_t forest_mask() const { return forest_mask_; }
    /// Edge indices outside the spanning forest, ascending; there are m - n + c of them.
    const std::vector<int>& cycle_edges() const { return cycle_edges_; }

    std::uint64_t negative_mask(const SignedGraph& g) const;
    /// Forest-positive representative of the switching class of `mask`.
    std::uint64_t normalize(std::uint64_t mask) const;
    /// Signature carried along the vertex map v -> permutation[v]; requires an automorphism.
    std::uint64_t permute(std::uint64_t mask, const Permutation& automorphism) const;

    /// Representative whose cycle edges take the bits of `class_index` in order.
    std::uint64_t class_representative(std::uint64_t class_index) const;

private:
    SimpleGraph graph_;
    std::vector<std::pair<Vertex, Vertex>> edges_;
    std::vector<int> index_;
    std::vector<Vertex> bfs_order_;
    std::vector<int> parent_edge_;  // -1 at roots
    std::vector<Vertex> parent_;
    std::vector<int> cycle_edges_;
    std::vector<std::uint64_t> star_;  // incident edges per vertex
    std::uint64_t forest_mask_ = 0;
    int components_ = 0;
};

/// Forest-normalized signatures reachable from `mask` under the automorphism group.
std::vector<std::uint64_t> switching_orbit(const SignatureFrame& frame, std::span<const Permutation> generators,
                                           std::uint64_t mask);

/// Fixed-length key: order byte, canonical adjacency code, minimal normalized signature (big endian).
struct CanonicalCode {
    std::array<std::uint8_t, 17> bytes{};

    static CanonicalCode make(int order, std::uint64_t graph_code, std::uint64_t signature);
    std::string hex() const;

    auto operator<=>(const CanonicalCode&) const = default;
};

/// Equal codes iff switching isomorphic. Throws GraphError above kMaxCanonicalOrder.
CanonicalCode canonical_code(const SignedGraph& g);

struct CanonicalCodeHash {
    std::size_t operator()(const CanonicalCode& c) const noexcept;
};

}  // namespace signed_spectra
