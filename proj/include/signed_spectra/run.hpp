#pragma once

#include <functional>
#include <optional>
#include <string>

#include "signed_spectra/report.hpp"

namespace signed_spectra {

enum class Command { verify, fig3, family, gamma, enumerate, check_lemmas };
enum class Format { json, csv, text };

std::optional<Command> parse_command(const std::string& name);
std::string command_name(Command c);
std::optional<Format> parse_format(const std::string& name);

struct RunConfig {
    Command command = Command::verify;
    std::optional<int> order;
    std::optional<int> tau;
    double tolerance = 5e-4;
    std::optional<int> threads;
    std::optional<std::string> input_path;
    std::optional<std::string> output_path;
    Format format = Format::json;
    bool deterministic = false;
    int max_order_override = kDefaultVerifiedOrder;
    std::uint64_t instance_cap = 0;
    std::optional<std::string> checkpoint_path;
};

/// Exit statuses of `run`.
inline constexpr int kStatusOk = 0;
inline constexpr int kStatusAssertionFailed = 1;
inline constexpr int kStatusInvalidConfig = 2;
inline constexpr int kStatusIoError = 3;

/// Environment variables consulted for settings that were not given as flags.
inline constexpr const char* kThreadsEnv = "SGSPEC_THREADS";
inline constexpr const char* kOutputDirEnv = "SGSPEC_OUTPUT_DIR";
inline constexpr const char* kInstanceCapEnv = "SGSPEC_INSTANCE_CAP";
inline constexpr const char* kCheckpointEnv = "SGSPEC_CHECKPOINT";

using EnvLookup = std::function<std::optional<std::string>(const std::string&)>;

EnvLookup process_environment();

/// Fills unset threads / output path / cap / checkpoint from the environment; explicit values win.
/// Throws std::invalid_argument on a malformed instance cap.
RunConfig with_environment(RunConfig config, const EnvLookup& env);

/// Empty when valid, else the reason.
std::optional<std::string> validate(const RunConfig& config);

nlohmann::json config_to_json(const RunConfig& config);

struct RunResult {
    int status = kStatusOk;
    ReportDocument document;
    std::string rendered;  // document in the requested format
};

/// Dispatches the command and writes the rendered report to output_path when set.
RunResult run(const RunConfig& config);

}  // namespace signed_spectra
