#include "signed_spectra/lemmas.hpp"

#include <cmath>
#include <sstream>

#include "signed_spectra/graph_io.hpp"
#include "signed_spectra/spectrum.hpp"

namespace signed_spectra {

namespace {

enum class Entry { zero, nonzero, ambiguous };

Entry classify(double x, const LemmaCheckOptions& o) {
    const double a = std::abs(x);
    if (a < o.zero_threshold) return Entry::zero;
    if (a >= o.nonzero_threshold) return Entry::nonzero;
    return Entry::ambiguous;
}

std::string describe(const SignedGraph& g) {
    std::string s = to_sg1(g);
    for (auto& c : s) {
        if (c == '\n') c = ';';
    }
    return s;
}

}  // namespace

LemmaReport check_lemmas(std::span<const SignedGraph> sample, const LemmaCheckOptions& options) {
    LemmaReport report;
    for (const auto& g : sample) {
        ++report.graphs;
        if (g.order() == 0) continue;
        const auto eig = jacobi_eigen(adjacency(g));
        const double lambda1 = eig.values(0);
        const int n = g.order();

        const int omega = balanced_clique_number(g);
        ++report.clique_bound_checks;
        const double bound = n * (1.0 - 1.0 / omega);
        if (lambda1 > bound + options.clique_bound_slack) {
            std::ostringstream os;
            os << "balanced clique bound: lambda1 " << lambda1 << " > " << bound << " for " << describe(g);
            report.violations.push_back(os.str());
        }

        if (n < 2 || lambda1 - eig.values(1) <= options.spectral_gap) {
            ++report.skipped_degenerate;
            continue;
        }
        const Eigen::VectorXd x = eig.vectors.col(0);
        for (Vertex r = 0; r < n; ++r) {
            for (Vertex s = r + 1; s < n; ++s) {
                const Entry er = classify(x(r), options), es = classify(x(s), options);
                if (er == Entry::ambiguous || es == Entry::ambiguous) {
                    ++report.skipped_degenerate;
                    continue;
                }
                if (er == Entry::zero && es == Entry::zero) continue;
                if (er == Entry::nonzero && es == Entry::nonzero && x(r) * x(s) < 0) continue;

                std::vector<std::pair<const char*, SignedGraph>> perturbed;
                const int sign = g.sign(r, s);
                if (sign == 0) {
                    perturbed.emplace_back("add positive edge", with_edge(g, r, s, 1));
                } else if (sign < 0) {
                    perturbed.emplace_back("remove negative edge", without_edge(g, r, s));
                    perturbed.emplace_back("reverse negative edge", with_edge(g, r, s, 1));
                }
                for (const auto& [what, h] : perturbed) {
                    ++report.perturbation_checks;
                    const double after = eigenvalues(h).largest();
                    if (!(after - lambda1 > options.strict_increase)) {
                        std::ostringstream os;
                        os.precision(17);
                        os << what << " (" << r << "," << s << "): lambda1 " << lambda1 << " -> " << after
                           << " for " << describe(g);
                        report.violations.push_back(os.str());
                    }
                }
            }
        }
    }
    return report;
}

}  // namespace signed_spectra
