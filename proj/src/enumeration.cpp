#include "signed_spectra/enumeration.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <exception>
#include <fstream>
#include <map>
#include <mutex>
#include <thread>
#include <unordered_set>

#include <json.hpp>

#include "signed_spectra/family.hpp"
#include "signed_spectra/graph_io.hpp"
#include "signed_spectra/spectrum.hpp"

namespace signed_spectra {

std::vector<SimpleGraph> generate_underlying(int n) {
    if (n < 1 || n > kMaxGeneratedOrder) {
        throw std::invalid_argument("built-in generation supports 1 <= n <= " + std::to_string(kMaxGeneratedOrder));
    }
    std::vector<SimpleGraph> level{SimpleGraph(1)};
    for (int k = 2; k <= n; ++k) {
        // every graph on k vertices is a graph on k-1 vertices plus one vertex
        std::map<std::uint64_t, SimpleGraph> seen;
        for (const auto& base : level) {
            for (std::uint32_t nbrs = 0; nbrs < (1U << (k - 1)); ++nbrs) {
                SimpleGraph g(k);
                for (auto [u, v] : base.edges()) g.add_edge(u, v);
                for (Vertex u = 0; u < k - 1; ++u) {
                    if ((nbrs >> u) & 1U) g.add_edge(u, k - 1);
                }
                auto lab = canonical_labeling(g);
                if (!seen.contains(lab.code)) seen.emplace(lab.code, relabel(g, lab.position));
            }
        }
        level.clear();
        for (auto& [code, g] : seen) level.push_back(std::move(g));
    }
    return level;
}

std::vector<SignedGraph> signature_classes(const SimpleGraph& g) {
    const SignatureFrame frame(g);
    const auto beta = frame.cycle_edges().size();
    if (beta > 30) throw std::invalid_argument("too many independent cycles to list signature classes");
    std::vector<SignedGraph> out;
    out.reserve(std::size_t{1} << beta);
    for (std::uint64_t idx = 0; idx < (std::uint64_t{1} << beta); ++idx) {
        out.push_back(with_signature(g, frame.class_representative(idx)));
    }
    return out;
}

namespace {

// Edge masks of all triangles and quadrilaterals of g.
struct ShortCycles {
    std::vector<std::uint64_t> triangles;
    std::vector<std::uint64_t> quadrilaterals;
};

ShortCycles short_cycles(const SignatureFrame& frame) {
    const auto& g = frame.graph();
    const int n = g.order();
    auto bit = [&](Vertex a, Vertex b) { return std::uint64_t{1} << frame.edge_index(a, b); };
    ShortCycles out;
    for (Vertex a = 0; a < n; ++a) {
        for (Vertex b = a + 1; b < n; ++b) {
            if (!g.adjacent(a, b)) continue;
            for (Vertex c = b + 1; c < n; ++c) {
                if (g.adjacent(b, c) && g.adjacent(a, c)) out.triangles.push_back(bit(a, b) | bit(b, c) | bit(a, c));
            }
        }
    }
    auto add_quad = [&](Vertex p, Vertex q, Vertex r, Vertex s) {
        if (g.adjacent(p, q) && g.adjacent(q, r) && g.adjacent(r, s) && g.adjacent(s, p)) {
            out.quadrilaterals.push_back(bit(p, q) | bit(q, r) | bit(r, s) | bit(s, p));
        }
    };
    for (Vertex a = 0; a < n; ++a) {
        for (Vertex b = a + 1; b < n; ++b) {
            for (Vertex c = b + 1; c < n; ++c) {
                for (Vertex d = c + 1; d < n; ++d) {
                    add_quad(a, b, c, d);
                    add_quad(a, b, d, c);
                    add_quad(a, c, b, d);
                }
            }
        }
    }
    return out;
}

class SignatureSearch {
public:
    SignatureSearch(const SignatureFrame& frame, std::uint64_t* instances) : frame_(frame), instances_(instances) {
        const auto& cycle_edges = frame.cycle_edges();
        checks_.resize(cycle_edges.size());
        const auto cycles = short_cycles(frame);
        // attach each short cycle to the last non-forest edge it contains; triangles first
        auto attach = [&](std::uint64_t mask) {
            for (std::size_t k = cycle_edges.size(); k-- > 0;) {
                if ((mask >> cycle_edges[k]) & 1U) {
                    checks_[k].push_back(mask);
                    return;
                }
            }
        };
        for (auto m : cycles.triangles) attach(m);
        for (auto m : cycles.quadrilaterals) attach(m);
    }

    template <typename Visit>
    void run(Visit&& visit) {
        descend(0, 0, visit);
    }

private:
    template <typename Visit>
    void descend(std::size_t k, std::uint64_t mask, Visit& visit) {
        if (k == checks_.size()) {
            if (instances_) ++*instances_;
            if (mask != 0) visit(mask);  // forest-positive and not all-positive: unbalanced
            return;
        }
        for (std::uint64_t bit : {std::uint64_t{0}, std::uint64_t{1}}) {
            const std::uint64_t next = mask | (bit << frame_.cycle_edges()[k]);
            bool ok = true;
            for (auto cycle : checks_[k]) {
                if (std::popcount(next & cycle) % 2 == 1) {
                    ok = false;
                    break;
                }
            }
            if (ok) descend(k + 1, next, visit);
        }
    }

    const SignatureFrame& frame_;
    std::uint64_t* instances_;
    std::vector<std::vector<std::uint64_t>> checks_;
};

SignedGraphClass make_class(const SimpleGraph& canonical, std::uint64_t graph_code, std::uint64_t mask) {
    SignedGraphClass c;
    c.representative = with_signature(canonical, mask);
    c.code = CanonicalCode::make(canonical.order(), graph_code, mask);
    const auto spec = eigenvalues(c.representative);
    c.lambda1 = spec.largest();
    c.lambda_min = spec.smallest();
    c.rho = spec.spectral_radius();
    return c;
}

}  // namespace

std::vector<SignedGraphClass> admissible_classes_on(const SimpleGraph& g, std::uint64_t* instances) {
    const auto form = canonical_form(g);
    const SignatureFrame frame(form.graph);
    std::vector<SignedGraphClass> out;
    if (frame.cycle_edges().empty()) return out;
    std::unordered_set<std::uint64_t> seen;
    SignatureSearch search(frame, instances);
    search.run([&](std::uint64_t mask) {
        if (seen.contains(mask)) return;
        const auto orbit = switching_orbit(frame, form.automorphisms, mask);
        seen.insert(orbit.begin(), orbit.end());
        out.push_back(make_class(form.graph, form.code, *std::min_element(orbit.begin(), orbit.end())));
    });
    return out;
}

namespace {

using nlohmann::json;

struct CheckpointEntry {
    std::string graph6;
    std::vector<SignedGraphClass> classes;
};

std::map<std::size_t, CheckpointEntry> load_checkpoint(const std::string& path) {
    std::map<std::size_t, CheckpointEntry> done;
    std::ifstream in(path);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        json entry;
        try {
            entry = json::parse(line);
        } catch (const json::exception&) {
            continue;  // torn line from an interrupted run
        }
        std::vector<SignedGraphClass> classes;
        for (const auto& c : entry.at("classes")) {
            SignedGraphClass cls;
            cls.representative = parse_sg1(c.at("sg1").get<std::string>());
            cls.code = canonical_code(cls.representative);
            cls.lambda1 = c.at("lambda1").get<double>();
            cls.lambda_min = c.at("lambda_min").get<double>();
            cls.rho = c.at("rho").get<double>();
            classes.push_back(std::move(cls));
        }
        done[entry.at("graph").get<std::size_t>()] = {entry.at("graph6").get<std::string>(), std::move(classes)};
    }
    return done;
}

std::string checkpoint_line(std::size_t index, const SimpleGraph& g, const std::vector<SignedGraphClass>& classes) {
    json entry{{"graph", index}, {"graph6", to_graph6(g)}, {"classes", json::array()}};
    for (const auto& c : classes) {
        entry["classes"].push_back(
            {{"sg1", to_sg1(c.representative)}, {"lambda1", c.lambda1}, {"lambda_min", c.lambda_min}, {"rho", c.rho}});
    }
    return entry.dump();
}

}  // namespace

std::vector<SignedGraphClass> enumerate_admissible(int n, const EnumerationOptions& options) {
    std::vector<SimpleGraph> graphs;
    if (options.underlying) {
        // canonical dedup; distinct underlying graphs are never switching isomorphic
        std::map<std::uint64_t, SimpleGraph> unique;
        for (const auto& g : *options.underlying) {
            if (g.order() != n) throw std::invalid_argument("input graph order does not match --n");
            auto lab = canonical_labeling(g);
            unique.emplace(lab.code, relabel(g, lab.position));
        }
        for (auto& [code, g] : unique) graphs.push_back(std::move(g));
    } else {
        if (n == kMaxGeneratedOrder && !options.allow_order_8) {
            throw std::invalid_argument("order 8 enumeration must be enabled explicitly");
        }
        graphs = generate_underlying(n);
    }

    std::map<std::size_t, CheckpointEntry> done;
    if (options.checkpoint_path) done = load_checkpoint(*options.checkpoint_path);

    std::vector<std::vector<SignedGraphClass>> per_graph(graphs.size());
    std::atomic<std::size_t> next{0};
    std::atomic<std::uint64_t> total_instances{0};
    std::mutex io_mutex;
    std::exception_ptr failure;
    std::ofstream checkpoint;
    if (options.checkpoint_path) {
        bool torn = false;
        if (std::ifstream existing(*options.checkpoint_path, std::ios::ate); existing && existing.tellg() > 0) {
            existing.seekg(-1, std::ios::end);
            torn = existing.get() != '\n';
        }
        checkpoint.open(*options.checkpoint_path, std::ios::app);
        if (torn) checkpoint << '\n';
    }

    auto worker = [&] {
        try {
            while (true) {
                const std::size_t i = next.fetch_add(1);
                if (i >= graphs.size()) return;
                // entries from a run over different graphs are ignored
                if (auto it = done.find(i); it != done.end() && it->second.graph6 == to_graph6(graphs[i])) {
                    per_graph[i] = it->second.classes;
                    continue;
                }
                std::uint64_t instances = 0;
                per_graph[i] = admissible_classes_on(graphs[i], &instances);
                const auto total = total_instances.fetch_add(instances) + instances;
                if (options.instance_cap != 0 && total > options.instance_cap) {
                    throw EnumerationBudgetExceeded("enumeration examined " + std::to_string(total) +
                                                    " signature instances, above the cap of " +
                                                    std::to_string(options.instance_cap));
                }
                if (checkpoint.is_open()) {
                    std::lock_guard lock(io_mutex);
                    checkpoint << checkpoint_line(i, graphs[i], per_graph[i]) << '\n' << std::flush;
                }
            }
        } catch (...) {
            std::lock_guard lock(io_mutex);
            if (!failure) failure = std::current_exception();
            next.store(graphs.size());
        }
    };

    const int threads = std::max(1, options.threads);
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    }
    if (failure) std::rethrow_exception(failure);

    std::vector<SignedGraphClass> out;
    for (auto& batch : per_graph) {
        for (auto& c : batch) out.push_back(std::move(c));
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.code < b.code; });
    return out;
}

VerificationReport verify_theorem(int n, double tolerance, const EnumerationOptions& options) {
    if (n < 6 || n > kMaxGeneratedOrder) throw std::invalid_argument("verify_theorem supports 6 <= n <= 8");
    if (!(tolerance > 0)) throw std::invalid_argument("tolerance must be positive");
    const auto start = std::chrono::steady_clock::now();

    VerificationReport r;
    r.order = n;
    r.tolerance = tolerance;
    r.classes = enumerate_admissible(n, options);
    r.class_count = r.classes.size();
    r.gamma_n = gamma_n(n);
    r.extremal_code = canonical_code(build_family({n, 0}));

    if (!r.classes.empty()) {
        auto best = std::max_element(r.classes.begin(), r.classes.end(),
                                     [](const auto& a, const auto& b) { return a.rho < b.rho; });
        r.max_rho = best->rho;
        double runner_up = -1.0;
        for (const auto& c : r.classes) {
            if (r.max_rho - c.rho < kTieTolerance) {
                r.argmax_codes.push_back(c.code);
            } else {
                runner_up = std::max(runner_up, c.rho);
            }
        }
        r.runner_up_gap = runner_up < 0 ? r.max_rho : r.max_rho - runner_up;
        r.unique_maximizer = r.argmax_codes.size() == 1 && r.runner_up_gap > kUniquenessGap;
        r.maximizer_is_extremal = r.argmax_codes.size() == 1 && r.argmax_codes.front() == r.extremal_code;
        r.maximizer_rho_is_lambda1 = std::abs(best->rho - best->lambda1) < kTieTolerance;
    }
    r.theorem_holds = !r.classes.empty() && std::abs(r.max_rho - r.gamma_n) <= tolerance && r.unique_maximizer &&
                      r.maximizer_is_extremal;
    r.wall_time = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
    return r;
}

}  // namespace signed_spectra
