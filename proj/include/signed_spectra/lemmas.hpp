#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "signed_spectra/signed_graph.hpp"

namespace signed_spectra {

struct LemmaCheckOptions {
    double clique_bound_slack = 1e-9;
    /// λ1 - λ2 must exceed this before the leading eigenvector is trusted.
    double spectral_gap = 1e-6;
    /// Entries below this magnitude are treated as exact zeros.
    double zero_threshold = 1e-12;
    /// Entries at or above this magnitude are treated as nonzero; those in between skip the pair.
    double nonzero_threshold = 1e-6;
    /// Required λ1 increase for the strict perturbation inequality.
    double strict_increase = 1e-12;
};

struct LemmaReport {
    std::size_t graphs = 0;
    std::size_t clique_bound_checks = 0;
    std::size_t perturbation_checks = 0;
    std::size_t skipped_degenerate = 0;  // λ1 not separated or ambiguous eigenvector entries
    std::vector<std::string> violations;

    bool ok() const { return violations.empty(); }
};

/**
 * Checks, for every graph in the sample, the balanced-clique bound
 * λ1 <= n(1 - 1/ω_b) and the strict λ1 increase under each eligible
 * perturbation: adding a positive edge at a non-adjacent pair, or deleting /
 * reversing a negative edge, where x_r x_s >= 0 and not both zero.
 */
LemmaReport check_lemmas(std::span<const SignedGraph> sample, const LemmaCheckOptions& options = {});

}  // namespace signed_spectra
