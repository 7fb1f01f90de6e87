#include "signed_spectra/canonical.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <limits>
#include <set>
#include <unordered_set>

namespace signed_spectra {

SimpleGraph::SimpleGraph(int order) : order_(order), rows_(static_cast<std::size_t>(order), 0U) {
    if (order < 0 || order > 32) throw GraphError("simple graph order must be within 0..32");
}

int SimpleGraph::degree(Vertex v) const { return std::popcount(row(v)); }

std::size_t SimpleGraph::size() const {
    std::size_t twice = 0;
    for (auto r : rows_) twice += static_cast<std::size_t>(std::popcount(r));
    return twice / 2;
}

void SimpleGraph::add_edge(Vertex u, Vertex v) {
    if (u == v || u < 0 || v < 0 || u >= order_ || v >= order_) throw GraphError("invalid simple edge");
    rows_[static_cast<std::size_t>(u)] |= 1U << v;
    rows_[static_cast<std::size_t>(v)] |= 1U << u;
}

std::vector<std::pair<Vertex, Vertex>> SimpleGraph::edges() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    for (Vertex u = 0; u < order_; ++u) {
        for (Vertex v = u + 1; v < order_; ++v) {
            if (adjacent(u, v)) out.emplace_back(u, v);
        }
    }
    return out;
}

SimpleGraph underlying(const SignedGraph& g) {
    SimpleGraph s(g.order());
    for (const auto& e : g.edges()) s.add_edge(e.u, e.v);
    return s;
}

SimpleGraph relabel(const SimpleGraph& g, std::span<const Vertex> permutation) {
    SimpleGraph out(g.order());
    for (auto [u, v] : g.edges()) {
        out.add_edge(permutation[static_cast<std::size_t>(u)], permutation[static_cast<std::size_t>(v)]);
    }
    return out;
}

SignedGraph with_signature(const SimpleGraph& g, std::uint64_t negative_mask) {
    std::vector<SignedEdge> edges;
    int i = 0;
    for (auto [u, v] : g.edges()) {
        edges.push_back({u, v, ((negative_mask >> i) & 1U) ? -1 : 1});
        ++i;
    }
    return build(g.order(), std::move(edges));
}

std::uint64_t adjacency_code(const SimpleGraph& g) {
    std::uint64_t code = 0;
    for (Vertex u = 0; u < g.order(); ++u) {
        for (Vertex v = u + 1; v < g.order(); ++v) code = (code << 1) | (g.adjacent(u, v) ? 1U : 0U);
    }
    return code;
}

namespace {

using Cells = std::vector<std::vector<Vertex>>;

// Splits cells by neighbour counts into every cell until the partition is equitable.
void refine(const SimpleGraph& g, Cells& cells) {
    const int n = g.order();
    std::vector<int> cell_of(static_cast<std::size_t>(n));
    while (true) {
        for (std::size_t c = 0; c < cells.size(); ++c) {
            for (Vertex v : cells[c]) cell_of[static_cast<std::size_t>(v)] = static_cast<int>(c);
        }
        Cells next;
        next.reserve(static_cast<std::size_t>(n));
        for (const auto& cell : cells) {
            if (cell.size() == 1) {
                next.push_back(cell);
                continue;
            }
            std::vector<std::pair<std::uint64_t, Vertex>> keyed;
            keyed.reserve(cell.size());
            for (Vertex v : cell) {
                // 4 bits per cell count; n <= kMaxCanonicalOrder keeps it in 64 bits
                std::uint64_t key = 0;
                std::uint32_t row = g.row(v);
                std::array<std::uint8_t, 16> counts{};
                while (row) {
                    const int w = std::countr_zero(row);
                    row &= row - 1;
                    ++counts[static_cast<std::size_t>(cell_of[static_cast<std::size_t>(w)])];
                }
                for (std::size_t c = 0; c < cells.size(); ++c) key = (key << 4) | counts[c];
                keyed.emplace_back(key, v);
            }
            std::stable_sort(keyed.begin(), keyed.end(),
                             [](const auto& a, const auto& b) { return a.first < b.first; });
            std::vector<Vertex> run{keyed.front().second};
            for (std::size_t i = 1; i < keyed.size(); ++i) {
                if (keyed[i].first != keyed[i - 1].first) {
                    next.push_back(std::move(run));
                    run.clear();
                }
                run.push_back(keyed[i].second);
            }
            next.push_back(std::move(run));
        }
        const bool stable = next.size() == cells.size();
        cells = std::move(next);
        if (stable) return;
    }
}

bool twins(const SimpleGraph& g, Vertex a, Vertex b) {
    return (g.row(a) & ~(1U << b)) == (g.row(b) & ~(1U << a));
}

struct LabelingSearch {
    const SimpleGraph& g;
    bool have_best = false;
    std::uint64_t best = 0;
    std::vector<Vertex> best_order;
    std::set<Permutation> generators;

    std::uint64_t certificate(const std::vector<Vertex>& order) const {
        std::uint64_t code = 0;
        const auto n = order.size();
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) code = (code << 1) | (g.adjacent(order[i], order[j]) ? 1U : 0U);
        }
        return code;
    }

    void add_generator(Permutation p) {
        bool identity = true;
        for (std::size_t i = 0; i < p.size(); ++i) identity = identity && p[i] == static_cast<Vertex>(i);
        if (!identity) generators.insert(std::move(p));
    }

    void leaf(const Cells& cells) {
        std::vector<Vertex> order;
        order.reserve(cells.size());
        for (const auto& c : cells) order.push_back(c.front());
        const auto cert = certificate(order);
        if (!have_best || cert < best) {
            have_best = true;
            best = cert;
            best_order = std::move(order);
        } else if (cert == best) {
            Permutation gamma(order.size());
            for (std::size_t p = 0; p < order.size(); ++p) {
                gamma[static_cast<std::size_t>(order[p])] = best_order[p];
            }
            add_generator(std::move(gamma));
        }
    }

    void search(Cells cells) {
        refine(g, cells);
        auto target = std::find_if(cells.begin(), cells.end(), [](const auto& c) { return c.size() > 1; });
        if (target == cells.end()) {
            leaf(cells);
            return;
        }
        const auto index = static_cast<std::size_t>(target - cells.begin());
        const std::vector<Vertex> cell = *target;
        std::vector<Vertex> explored;
        for (Vertex v : cell) {
            auto twin = std::find_if(explored.begin(), explored.end(), [&](Vertex r) { return twins(g, r, v); });
            if (twin != explored.end()) {
                // (r v) is an automorphism fixing the current prefix
                Permutation t(static_cast<std::size_t>(g.order()));
                for (Vertex i = 0; i < g.order(); ++i) t[static_cast<std::size_t>(i)] = i;
                std::swap(t[static_cast<std::size_t>(*twin)], t[static_cast<std::size_t>(v)]);
                add_generator(std::move(t));
                continue;
            }
            explored.push_back(v);
            Cells child;
            child.reserve(cells.size() + 1);
            child.insert(child.end(), cells.begin(), cells.begin() + static_cast<std::ptrdiff_t>(index));
            child.push_back({v});
            std::vector<Vertex> rest;
            for (Vertex w : cell) {
                if (w != v) rest.push_back(w);
            }
            child.push_back(std::move(rest));
            child.insert(child.end(), cells.begin() + static_cast<std::ptrdiff_t>(index) + 1, cells.end());
            search(std::move(child));
        }
    }
};

}  // namespace

CanonicalLabeling canonical_labeling(const SimpleGraph& g) {
    const int n = g.order();
    if (n > kMaxCanonicalOrder) {
        throw GraphError("canonical labeling supports order <= " + std::to_string(kMaxCanonicalOrder));
    }
    CanonicalLabeling out;
    if (n == 0) return out;
    Cells start(1);
    for (Vertex v = 0; v < n; ++v) start.front().push_back(v);
    LabelingSearch search{g, false, 0, {}, {}};
    search.search(std::move(start));
    out.position.assign(static_cast<std::size_t>(n), 0);
    for (std::size_t p = 0; p < search.best_order.size(); ++p) {
        out.position[static_cast<std::size_t>(search.best_order[p])] = static_cast<Vertex>(p);
    }
    out.code = search.best;
    out.generators.assign(search.generators.begin(), search.generators.end());
    return out;
}

CanonicalGraph canonical_form(const SimpleGraph& g) {
    auto lab = canonical_labeling(g);
    CanonicalGraph out;
    out.graph = relabel(g, lab.position);
    out.code = lab.code;
    for (const auto& gamma : lab.generators) {
        Permutation conj(gamma.size());
        for (std::size_t v = 0; v < gamma.size(); ++v) {
            conj[static_cast<std::size_t>(lab.position[v])] = lab.position[static_cast<std::size_t>(gamma[v])];
        }
        out.automorphisms.push_back(std::move(conj));
    }
    out.position = std::move(lab.position);
    return out;
}

SignatureFrame::SignatureFrame(SimpleGraph g) : graph_(std::move(g)) {
    const int n = graph_.order();
    edges_ = graph_.edges();
    if (edges_.size() > 64) throw GraphError("signature masks support at most 64 edges");
    index_.assign(static_cast<std::size_t>(n * n), -1);
    star_.assign(static_cast<std::size_t>(n), 0);
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        auto [u, v] = edges_[i];
        index_[static_cast<std::size_t>(u * n + v)] = static_cast<int>(i);
        index_[static_cast<std::size_t>(v * n + u)] = static_cast<int>(i);
        star_[static_cast<std::size_t>(u)] |= std::uint64_t{1} << i;
        star_[static_cast<std::size_t>(v)] |= std::uint64_t{1} << i;
    }
    parent_edge_.assign(static_cast<std::size_t>(n), -1);
    parent_.assign(static_cast<std::size_t>(n), -1);
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (Vertex root = 0; root < n; ++root) {
        if (seen[static_cast<std::size_t>(root)]) continue;
        ++components_;
        seen[static_cast<std::size_t>(root)] = true;
        std::deque<Vertex> queue{root};
        while (!queue.empty()) {
            const Vertex u = queue.front();
            queue.pop_front();
            bfs_order_.push_back(u);
            for (Vertex w = 0; w < n; ++w) {
                if (!graph_.adjacent(u, w) || seen[static_cast<std::size_t>(w)]) continue;
                seen[static_cast<std::size_t>(w)] = true;
                parent_[static_cast<std::size_t>(w)] = u;
                parent_edge_[static_cast<std::size_t>(w)] = edge_index(u, w);
                forest_mask_ |= std::uint64_t{1} << edge_index(u, w);
                queue.push_back(w);
            }
        }
    }
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        if (!((forest_mask_ >> i) & 1U)) cycle_edges_.push_back(static_cast<int>(i));
    }
}

std::uint64_t SignatureFrame::negative_mask(const SignedGraph& g) const {
    std::uint64_t mask = 0;
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        const int s = g.sign(edges_[i].first, edges_[i].second);
        if (s == 0) throw GraphError("signed graph does not match the frame's underlying graph");
        if (s < 0) mask |= std::uint64_t{1} << i;
    }
    if (g.size() != edges_.size()) throw GraphError("signed graph does not match the frame's underlying graph");
    return mask;
}

std::uint64_t SignatureFrame::normalize(std::uint64_t mask) const {
    std::array<std::uint8_t, 32> flipped{};
    std::uint64_t out = mask;
    for (Vertex v : bfs_order_) {
        const auto vi = static_cast<std::size_t>(v);
        const int pe = parent_edge_[vi];
        if (pe < 0) continue;
        // switch v iff the forest path to it would otherwise carry a negative edge
        flipped[vi] = static_cast<std::uint8_t>(flipped[static_cast<std::size_t>(parent_[vi])] ^ ((mask >> pe) & 1U));
        if (flipped[vi]) out ^= star_[vi];
    }
    return out;
}

std::uint64_t SignatureFrame::permute(std::uint64_t mask, const Permutation& automorphism) const {
    std::uint64_t out = 0;
    while (mask) {
        const int i = std::countr_zero(mask);
        mask &= mask - 1;
        const auto [u, v] = edges_[static_cast<std::size_t>(i)];
        const int j = edge_index(automorphism[static_cast<std::size_t>(u)], automorphism[static_cast<std::size_t>(v)]);
        if (j < 0) throw GraphError("permutation is not an automorphism of the frame graph");
        out |= std::uint64_t{1} << j;
    }
    return out;
}

std::uint64_t SignatureFrame::class_representative(std::uint64_t class_index) const {
    std::uint64_t mask = 0;
    for (std::size_t k = 0; k < cycle_edges_.size(); ++k) {
        if ((class_index >> k) & 1U) mask |= std::uint64_t{1} << cycle_edges_[k];
    }
    return mask;
}

std::vector<std::uint64_t> switching_orbit(const SignatureFrame& frame, std::span<const Permutation> generators,
                                           std::uint64_t mask) {
    const auto start = frame.normalize(mask);
    std::unordered_set<std::uint64_t> seen{start};
    std::vector<std::uint64_t> orbit{start};
    for (std::size_t i = 0; i < orbit.size(); ++i) {
        for (const auto& gen : generators) {
            const auto next = frame.normalize(frame.permute(orbit[i], gen));
            if (seen.insert(next).second) orbit.push_back(next);
        }
    }
    return orbit;
}

CanonicalCode CanonicalCode::make(int order, std::uint64_t graph_code, std::uint64_t signature) {
    CanonicalCode c;
    c.bytes[0] = static_cast<std::uint8_t>(order);
    for (int i = 0; i < 8; ++i) {
        c.bytes[static_cast<std::size_t>(1 + i)] = static_cast<std::uint8_t>(graph_code >> (56 - 8 * i));
        c.bytes[static_cast<std::size_t>(9 + i)] = static_cast<std::uint8_t>(signature >> (56 - 8 * i));
    }
    return c;
}

std::string CanonicalCode::hex() const {
    static constexpr char kDigits[] = "0123456789abcdef";
    std::string out;
    out.reserve(bytes.size() * 2);
    for (auto b : bytes) {
        out.push_back(kDigits[b >> 4]);
        out.push_back(kDigits[b & 0xF]);
    }
    return out;
}

std::size_t CanonicalCodeHash::operator()(const CanonicalCode& c) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (auto b : c.bytes) h = (h ^ b) * 1099511628211ULL;
    return h;
}

CanonicalCode canonical_code(const SignedGraph& g) {
    if (g.order() > kMaxCanonicalOrder) {
        throw GraphError("canonical codes support order <= " + std::to_string(kMaxCanonicalOrder));
    }
    const auto form = canonical_form(underlying(g));
    const auto relabeled = relabel(g, form.position);
    const SignatureFrame frame(form.graph);
    const auto orbit = switching_orbit(frame, form.automorphisms, frame.negative_mask(relabeled));
    return CanonicalCode::make(g.order(), form.code, *std::min_element(orbit.begin(), orbit.end()));
}

}  // namespace signed_spectra
