#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "signed_spectra/canonical.hpp"
#include "signed_spectra/signed_graph.hpp"

namespace signed_spectra {

inline constexpr int kMaxGeneratedOrder = 8;
inline constexpr int kDefaultVerifiedOrder = 7;

/// Every isomorphism class of simple graphs on n vertices (1 <= n <= 8), canonically labeled, sorted by code.
std::vector<SimpleGraph> generate_underlying(int n);

/// One representative per switching class of signatures on g (forest edges kept positive): 2^(m-n+c) graphs.
std::vector<SignedGraph> signature_classes(const SimpleGraph& g);

struct SignedGraphClass {
    SignedGraph representative;
    CanonicalCode code;
    double lambda1 = 0.0;
    double lambda_min = 0.0;
    double rho = 0.0;
};

class EnumerationBudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct EnumerationOptions {
    int threads = 1;
    /// Cap on examined signature instances; 0 disables the cap.
    std::uint64_t instance_cap = 0;
    /// Underlying graphs to use instead of built-in generation (e.g. from a graph6 file).
    std::optional<std::vector<SimpleGraph>> underlying;
    /// Allow built-in generation at order 8.
    bool allow_order_8 = false;
    /// Per-graph results are appended here and reused on restart.
    std::optional<std::string> checkpoint_path;
};

/**
 * All switching-isomorphism classes of unbalanced signed graphs of order n
 * with no negative 3-cycle and no negative 4-cycle, sorted by canonical code.
 *
 * Signatures on each underlying graph are enumerated as forest-positive
 * representatives by depth-first assignment of the non-forest edges; a
 * triangle or quadrilateral is tested as soon as its last non-forest edge is
 * fixed. Orbits under the automorphism group collapse switching-isomorphic
 * representatives.
 */
std::vector<SignedGraphClass> enumerate_admissible(int n, const EnumerationOptions& options = {});

/// Classes admissible on one (not necessarily canonical) underlying graph.
std::vector<SignedGraphClass> admissible_classes_on(const SimpleGraph& g, std::uint64_t* instances = nullptr);

struct VerificationReport {
    int order = 0;
    std::size_t class_count = 0;
    std::vector<SignedGraphClass> classes;
    double max_rho = 0.0;
    std::vector<CanonicalCode> argmax_codes;  // classes within 1e-9 of max_rho
    double runner_up_gap = 0.0;               // max_rho minus best rho outside argmax
    double gamma_n = 0.0;
    CanonicalCode extremal_code;               // code of Γ_n
    bool unique_maximizer = false;
    bool maximizer_is_extremal = false;
    bool maximizer_rho_is_lambda1 = false;
    bool theorem_holds = false;
    double tolerance = 0.0;
    std::chrono::milliseconds wall_time{0};
};

inline constexpr double kTieTolerance = 1e-9;
inline constexpr double kUniquenessGap = 1e-6;

/**
 * Scans every admissible class of order n (6 <= n <= 8) and checks that the
 * maximum spectral radius equals γ_n within `tolerance`, attained by Γ_n alone
 * with a runner-up gap above kUniquenessGap.
 */
VerificationReport verify_theorem(int n, double tolerance, const EnumerationOptions& options = {});

}  // namespace signed_spectra
