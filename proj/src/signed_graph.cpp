#include "signed_spectra/signed_graph.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <string>

namespace signed_spectra {

namespace {

void check_vertex(const SignedGraph& g, Vertex v) {
    if (v < 0 || v >= g.order()) {
        throw GraphError("vertex " + std::to_string(v) + " out of range for order " +
                         std::to_string(g.order()));
    }
}

std::vector<SignedEdge> edges_of(const SignedGraph& g) {
    return {g.edges().begin(), g.edges().end()};
}

}  // namespace

int SignedGraph::degree(Vertex v) const {
    int d = 0;
    for (Vertex w = 0; w < order_; ++w) d += adjacent(v, w) ? 1 : 0;
    return d;
}

std::vector<Vertex> SignedGraph::neighbors(Vertex v) const {
    std::vector<Vertex> out;
    for (Vertex w = 0; w < order_; ++w) {
        if (adjacent(v, w)) out.push_back(w);
    }
    return out;
}

std::size_t SignedGraph::negative_edge_count() const {
    return static_cast<std::size_t>(
        std::count_if(edges_.begin(), edges_.end(), [](const SignedEdge& e) { return e.sign < 0; }));
}

SignedGraph build(int order, std::vector<SignedEdge> edges) {
    if (order < 0) throw GraphError("negative order");
    SignedGraph g;
    g.order_ = order;
    g.signs_.assign(static_cast<std::size_t>(order) * static_cast<std::size_t>(order), 0);
    for (auto& e : edges) {
        if (e.u < 0 || e.u >= order || e.v < 0 || e.v >= order) {
            throw GraphError("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                             ") has an endpoint out of range for order " + std::to_string(order));
        }
        if (e.u == e.v) throw GraphError("self-loop at vertex " + std::to_string(e.u));
        if (e.sign != 1 && e.sign != -1) {
            throw GraphError("invalid sign " + std::to_string(e.sign) + " on edge (" +
                             std::to_string(e.u) + "," + std::to_string(e.v) + ")");
        }
        if (e.u > e.v) std::swap(e.u, e.v);
        auto& slot = g.signs_[static_cast<std::size_t>(e.u * order + e.v)];
        if (slot != 0) {
            throw GraphError("duplicate edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ")");
        }
        slot = static_cast<std::int8_t>(e.sign);
        g.signs_[static_cast<std::size_t>(e.v * order + e.u)] = static_cast<std::int8_t>(e.sign);
    }
    std::sort(edges.begin(), edges.end());
    g.edges_ = std::move(edges);
    return g;
}

SignedGraph complete_graph(int order, int sign) {
    std::vector<SignedEdge> edges;
    for (Vertex u = 0; u < order; ++u) {
        for (Vertex v = u + 1; v < order; ++v) edges.push_back({u, v, sign});
    }
    return build(order, std::move(edges));
}

SignedGraph cycle_graph(int order, int negative_edges) {
    if (order < 3) throw GraphError("a cycle needs at least 3 vertices");
    std::vector<SignedEdge> edges;
    for (Vertex u = 0; u + 1 < order; ++u) edges.push_back({u, u + 1, 1});
    edges.push_back({0, order - 1, 1});
    std::sort(edges.begin(), edges.end());
    for (int i = 0; i < negative_edges && i < order; ++i) edges[static_cast<std::size_t>(i)].sign = -1;
    return build(order, std::move(edges));
}

SignedGraph switch_at(const SignedGraph& g, std::span<const Vertex> vertex_set) {
    std::vector<bool> in_set(static_cast<std::size_t>(g.order()), false);
    for (Vertex v : vertex_set) {
        check_vertex(g, v);
        in_set[static_cast<std::size_t>(v)] = true;
    }
    auto edges = edges_of(g);
    for (auto& e : edges) {
        if (in_set[static_cast<std::size_t>(e.u)] != in_set[static_cast<std::size_t>(e.v)]) e.sign = -e.sign;
    }
    return build(g.order(), std::move(edges));
}

SignedGraph negate(const SignedGraph& g) {
    auto edges = edges_of(g);
    for (auto& e : edges) e.sign = -e.sign;
    return build(g.order(), std::move(edges));
}

SignedGraph relabel(const SignedGraph& g, std::span<const Vertex> permutation) {
    if (permutation.size() != static_cast<std::size_t>(g.order())) {
        throw GraphError("permutation length does not match graph order");
    }
    std::vector<bool> hit(permutation.size(), false);
    for (Vertex p : permutation) {
        check_vertex(g, p);
        if (hit[static_cast<std::size_t>(p)]) throw GraphError("relabeling is not a permutation");
        hit[static_cast<std::size_t>(p)] = true;
    }
    auto edges = edges_of(g);
    for (auto& e : edges) {
        e.u = permutation[static_cast<std::size_t>(e.u)];
        e.v = permutation[static_cast<std::size_t>(e.v)];
    }
    return build(g.order(), std::move(edges));
}

SignedGraph with_edge(const SignedGraph& g, Vertex u, Vertex v, int sign) {
    check_vertex(g, u);
    check_vertex(g, v);
    auto edges = edges_of(g);
    const Vertex a = std::min(u, v), b = std::max(u, v);
    auto it = std::find_if(edges.begin(), edges.end(), [&](const SignedEdge& e) { return e.u == a && e.v == b; });
    if (it != edges.end()) {
        it->sign = sign;
    } else {
        edges.push_back({a, b, sign});
    }
    return build(g.order(), std::move(edges));
}

SignedGraph without_edge(const SignedGraph& g, Vertex u, Vertex v) {
    check_vertex(g, u);
    check_vertex(g, v);
    auto edges = edges_of(g);
    const Vertex a = std::min(u, v), b = std::max(u, v);
    std::erase_if(edges, [&](const SignedEdge& e) { return e.u == a && e.v == b; });
    return build(g.order(), std::move(edges));
}

std::vector<int> connected_components(const SignedGraph& g) {
    const int n = g.order();
    std::vector<int> comp(static_cast<std::size_t>(n), -1);
    int next = 0;
    for (Vertex s = 0; s < n; ++s) {
        if (comp[static_cast<std::size_t>(s)] >= 0) continue;
        std::vector<Vertex> stack{s};
        comp[static_cast<std::size_t>(s)] = next;
        while (!stack.empty()) {
            Vertex u = stack.back();
            stack.pop_back();
            for (Vertex w = 0; w < n; ++w) {
                if (g.adjacent(u, w) && comp[static_cast<std::size_t>(w)] < 0) {
                    comp[static_cast<std::size_t>(w)] = next;
                    stack.push_back(w);
                }
            }
        }
        ++next;
    }
    return comp;
}

int component_count(const SignedGraph& g) {
    auto comp = connected_components(g);
    return comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
}

bool is_balanced(const SignedGraph& g) {
    const int n = g.order();
    std::vector<int> theta(static_cast<std::size_t>(n), 0);
    for (Vertex s = 0; s < n; ++s) {
        if (theta[static_cast<std::size_t>(s)] != 0) continue;
        theta[static_cast<std::size_t>(s)] = 1;
        std::vector<Vertex> stack{s};
        while (!stack.empty()) {
            Vertex u = stack.back();
            stack.pop_back();
            for (Vertex w = 0; w < n; ++w) {
                const int sg = g.sign(u, w);
                if (sg == 0) continue;
                const int want = theta[static_cast<std::size_t>(u)] * sg;
                int& tw = theta[static_cast<std::size_t>(w)];
                if (tw == 0) {
                    tw = want;
                    stack.push_back(w);
                } else if (tw != want) {
                    return false;
                }
            }
        }
    }
    return true;
}

bool switching_equivalent(const SignedGraph& g1, const SignedGraph& g2) {
    if (g1.order() != g2.order() || g1.size() != g2.size()) {
        throw GraphError("switching equivalence needs identical underlying graphs");
    }
    std::vector<SignedEdge> product;
    product.reserve(g1.size());
    for (std::size_t i = 0; i < g1.size(); ++i) {
        const auto& a = g1.edges()[i];
        const auto& b = g2.edges()[i];
        if (a.u != b.u || a.v != b.v) throw GraphError("switching equivalence needs identical underlying graphs");
        product.push_back({a.u, a.v, a.sign * b.sign});
    }
    return is_balanced(build(g1.order(), std::move(product)));
}

std::optional<int> negative_girth(const SignedGraph& g) {
    const int n = g.order();
    constexpr int kUnseen = std::numeric_limits<int>::max();
    int best = kUnseen;
    std::vector<int> dist(static_cast<std::size_t>(2 * n));
    std::deque<int> queue;
    // State 2*v + layer; negative edges swap layers.
    for (Vertex s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), kUnseen);
        dist[static_cast<std::size_t>(2 * s)] = 0;
        queue.assign(1, 2 * s);
        const int target = 2 * s + 1;
        while (!queue.empty()) {
            const int state = queue.front();
            queue.pop_front();
            const int d = dist[static_cast<std::size_t>(state)];
            if (d + 1 >= best) break;
            const Vertex u = state / 2;
            const int layer = state % 2;
            for (Vertex w = 0; w < n; ++w) {
                const int sg = g.sign(u, w);
                if (sg == 0) continue;
                const int next = 2 * w + (sg < 0 ? 1 - layer : layer);
                if (dist[static_cast<std::size_t>(next)] != kUnseen) continue;
                dist[static_cast<std::size_t>(next)] = d + 1;
                if (next == target) {
                    best = std::min(best, d + 1);
                    queue.clear();
                    break;
                }
                queue.push_back(next);
            }
        }
    }
    if (best == kUnseen) return std::nullopt;
    return best;
}

bool has_negative_triangle(const SignedGraph& g) {
    const int n = g.order();
    for (Vertex a = 0; a < n; ++a) {
        for (Vertex b = a + 1; b < n; ++b) {
            const int ab = g.sign(a, b);
            if (ab == 0) continue;
            for (Vertex c = b + 1; c < n; ++c) {
                if (ab * g.sign(b, c) * g.sign(a, c) < 0) return true;
            }
        }
    }
    return false;
}

bool has_negative_quadrilateral(const SignedGraph& g) {
    const int n = g.order();
    auto negative = [&](Vertex p, Vertex q, Vertex r, Vertex s) {
        return g.sign(p, q) * g.sign(q, r) * g.sign(r, s) * g.sign(s, p) < 0;
    };
    for (Vertex a = 0; a < n; ++a) {
        for (Vertex b = a + 1; b < n; ++b) {
            for (Vertex c = b + 1; c < n; ++c) {
                for (Vertex d = c + 1; d < n; ++d) {
                    if (negative(a, b, c, d) || negative(a, b, d, c) || negative(a, c, b, d)) return true;
                }
            }
        }
    }
    return false;
}

bool is_c34_minus_free(const SignedGraph& g) {
    const bool by_enumeration = !has_negative_triangle(g) && !has_negative_quadrilateral(g);
    const auto girth = negative_girth(g);
    const bool by_girth = !girth || *girth > 4;
    if (by_enumeration != by_girth) {
        throw std::logic_error("negative-cycle enumeration disagrees with negative girth");
    }
    return by_enumeration;
}

namespace {

struct CliqueSearch {
    const SignedGraph& g;
    std::vector<Vertex> clique;
    std::vector<int> theta;  // switching function realizing balance on the clique
    int best = 0;

    void extend(std::vector<Vertex> candidates) {
        if (static_cast<int>(clique.size()) > best) best = static_cast<int>(clique.size());
        if (static_cast<int>(clique.size() + candidates.size()) <= best) return;
        while (!candidates.empty()) {
            if (static_cast<int>(clique.size() + candidates.size()) <= best) return;
            const Vertex v = candidates.back();
            candidates.pop_back();
            const int tv = clique.empty() ? 1 : theta[static_cast<std::size_t>(clique.front())] * g.sign(v, clique.front());
            theta[static_cast<std::size_t>(v)] = tv;
            clique.push_back(v);
            std::vector<Vertex> next;
            for (Vertex w : candidates) {
                if (!g.adjacent(v, w)) continue;
                // w must be consistent with the clique's switching function
                const int tw = theta[static_cast<std::size_t>(clique.front())] * g.sign(w, clique.front());
                bool ok = true;
                for (Vertex c : clique) {
                    if (g.sign(w, c) != tw * theta[static_cast<std::size_t>(c)]) {
                        ok = false;
                        break;
                    }
                }
                if (ok) next.push_back(w);
            }
            extend(std::move(next));
            clique.pop_back();
        }
    }
};

}  // namespace

int balanced_clique_number(const SignedGraph& g, int order_limit) {
    if (g.order() > order_limit) {
        throw GraphError("balanced clique search limited to order " + std::to_string(order_limit));
    }
    if (g.order() == 0) return 0;
    CliqueSearch search{g, {}, std::vector<int>(static_cast<std::size_t>(g.order()), 0), 0};
    std::vector<Vertex> all(static_cast<std::size_t>(g.order()));
    for (Vertex v = 0; v < g.order(); ++v) all[static_cast<std::size_t>(v)] = v;
    search.extend(std::move(all));
    return search.best;
}

}  // namespace signed_spectra
