#include "oracles.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace oracles {

using signed_spectra::BigInt;
using signed_spectra::IntegerMatrix;
using signed_spectra::Polynomial;

namespace {

void extend_path(const SignedGraph& g, Vertex start, Vertex at, int sign, std::vector<bool>& on_path, int length,
                 std::vector<std::pair<int, int>>& out) {
    for (Vertex w = 0; w < g.order(); ++w) {
        const int s = g.sign(at, w);
        if (s == 0) continue;
        if (w == start && length >= 3) {
            out.emplace_back(length, sign * s);
            continue;
        }
        if (w <= start || on_path[static_cast<std::size_t>(w)]) continue;
        on_path[static_cast<std::size_t>(w)] = true;
        extend_path(g, start, w, sign * s, on_path, length + 1, out);
        on_path[static_cast<std::size_t>(w)] = false;
    }
}

}  // namespace

std::vector<std::pair<int, int>> all_cycles(const SignedGraph& g) {
    std::vector<std::pair<int, int>> out;
    std::vector<bool> on_path(static_cast<std::size_t>(g.order()), false);
    for (Vertex s = 0; s < g.order(); ++s) {
        on_path[static_cast<std::size_t>(s)] = true;
        extend_path(g, s, s, 1, on_path, 1, out);
        on_path[static_cast<std::size_t>(s)] = false;
    }
    return out;
}

std::optional<int> negative_girth_by_cycles(const SignedGraph& g) {
    std::optional<int> best;
    for (auto [len, sign] : all_cycles(g)) {
        if (sign < 0 && (!best || len < *best)) best = len;
    }
    return best;
}

bool balanced_by_cycles(const SignedGraph& g) {
    const auto cycles = all_cycles(g);
    return std::all_of(cycles.begin(), cycles.end(), [](auto c) { return c.second > 0; });
}

int balanced_clique_by_subsets(const SignedGraph& g) {
    const int n = g.order();
    int best = n > 0 ? 1 : 0;
    for (std::uint32_t s = 1; s < (1U << n); ++s) {
        const int size = __builtin_popcount(s);
        if (size <= best) continue;
        std::vector<Vertex> vs;
        for (Vertex v = 0; v < n; ++v) {
            if ((s >> v) & 1U) vs.push_back(v);
        }
        bool ok = true;
        for (std::size_t i = 0; ok && i < vs.size(); ++i) {
            for (std::size_t j = i + 1; ok && j < vs.size(); ++j) {
                if (!g.adjacent(vs[i], vs[j])) ok = false;
                for (std::size_t k = j + 1; ok && k < vs.size(); ++k) {
                    if (g.sign(vs[i], vs[j]) * g.sign(vs[j], vs[k]) * g.sign(vs[i], vs[k]) < 0) ok = false;
                }
            }
        }
        if (ok) best = size;
    }
    return best;
}

std::pair<std::uint64_t, std::uint64_t> brute_switching_iso_key(const SignedGraph& g) {
    const int n = g.order();
    std::vector<Vertex> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::pair<std::uint64_t, std::uint64_t> best{~std::uint64_t{0}, ~std::uint64_t{0}};
    do {
        // inverse: vertex sitting at position p
        std::vector<Vertex> at(static_cast<std::size_t>(n));
        for (Vertex v = 0; v < n; ++v) at[static_cast<std::size_t>(perm[static_cast<std::size_t>(v)])] = v;
        std::uint64_t adj = 0;
        for (Vertex i = 0; i < n; ++i) {
            for (Vertex j = i + 1; j < n; ++j) adj = (adj << 1) | (g.adjacent(at[static_cast<std::size_t>(i)], at[static_cast<std::size_t>(j)]) ? 1U : 0U);
        }
        if (adj > best.first) continue;
        for (std::uint32_t sw = 0; sw < (1U << n); ++sw) {
            std::uint64_t sig = 0;
            for (Vertex i = 0; i < n; ++i) {
                for (Vertex j = i + 1; j < n; ++j) {
                    const Vertex a = at[static_cast<std::size_t>(i)], b = at[static_cast<std::size_t>(j)];
                    const int s = g.sign(a, b);
                    if (s == 0) continue;
                    const int flipped = (((sw >> a) ^ (sw >> b)) & 1U) ? -s : s;
                    sig = (sig << 1) | (flipped < 0 ? 1U : 0U);
                }
            }
            best = std::min(best, std::pair{adj, sig});
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

std::size_t unlabeled_graph_count(int n) {
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    }
    std::vector<std::vector<int>> perms;
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        perms.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    // index of pair (u,v) for fast relabeling
    std::vector<int> index(static_cast<std::size_t>(n * n));
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        index[static_cast<std::size_t>(pairs[i].first * n + pairs[i].second)] = static_cast<int>(i);
        index[static_cast<std::size_t>(pairs[i].second * n + pairs[i].first)] = static_cast<int>(i);
    }
    std::set<std::uint32_t> classes;
    for (std::uint32_t m = 0; m < (1U << pairs.size()); ++m) {
        std::uint32_t best = m;
        for (const auto& p : perms) {
            std::uint32_t img = 0;
            for (std::size_t i = 0; i < pairs.size(); ++i) {
                if ((m >> i) & 1U) {
                    img |= 1U << index[static_cast<std::size_t>(p[static_cast<std::size_t>(pairs[i].first)] * n +
                                                                p[static_cast<std::size_t>(pairs[i].second)])];
                }
            }
            best = std::min(best, img);
            if (best < m) break;  // m is not the orbit minimum
        }
        if (best == m) classes.insert(m);
    }
    return classes.size();
}

std::size_t switching_orbit_count(const SignedGraph& g) {
    const int n = g.order();
    const auto m = g.size();
    std::set<std::uint64_t> reps;
    for (std::uint64_t sig = 0; sig < (std::uint64_t{1} << m); ++sig) {
        std::uint64_t best = sig;
        for (std::uint32_t sw = 0; sw < (1U << n); ++sw) {
            std::uint64_t img = sig;
            for (std::size_t i = 0; i < m; ++i) {
                const auto& e = g.edges()[i];
                if (((sw >> e.u) ^ (sw >> e.v)) & 1U) img ^= std::uint64_t{1} << i;
            }
            best = std::min(best, img);
        }
        reps.insert(best);
    }
    return reps.size();
}

Polynomial laplace_char_poly(const IntegerMatrix& m) {
    const std::size_t n = m.size();
    if (n == 0) return Polynomial{1};
    // entries of λI - M
    std::vector<std::vector<Polynomial>> a(n, std::vector<Polynomial>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            a[i][j] = Polynomial(std::vector<BigInt>{-m[i][j]});
            if (i == j) a[i][j] += Polynomial{0, 1};
        }
    }
    struct Expand {
        static Polynomial det(const std::vector<std::vector<Polynomial>>& a) {
            const std::size_t k = a.size();
            if (k == 1) return a[0][0];
            Polynomial total;
            for (std::size_t col = 0; col < k; ++col) {
                std::vector<std::vector<Polynomial>> minor;
                for (std::size_t r = 1; r < k; ++r) {
                    std::vector<Polynomial> row;
                    for (std::size_t c = 0; c < k; ++c) {
                        if (c != col) row.push_back(a[r][c]);
                    }
                    minor.push_back(std::move(row));
                }
                Polynomial term = a[0][col] * det(minor);
                if (col % 2 == 0) {
                    total += term;
                } else {
                    total -= term;
                }
            }
            return total;
        }
    };
    return Expand::det(a);
}

SignedGraph random_signed_graph(std::mt19937_64& rng, int n, double edge_probability, double negative_probability) {
    std::bernoulli_distribution edge(edge_probability), negative(negative_probability);
    std::vector<signed_spectra::SignedEdge> edges;
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            if (edge(rng)) edges.push_back({u, v, negative(rng) ? -1 : 1});
        }
    }
    return signed_spectra::build(n, std::move(edges));
}

}  // namespace oracles
