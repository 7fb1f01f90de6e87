// sgspec: signed-graph spectral verification front end.
//
//   sgspec verify --n 7 --threads 4
//   sgspec fig3 --format csv
//   sgspec family --n 12 --tau 3
//   sgspec gamma --n 7

#include <iostream>

#include <CLI11.hpp>

#include "signed_spectra/run.hpp"

int main(int argc, char** argv) {
    using namespace signed_spectra;

    CLI::App app{"Spectral extremal verification for signed graphs without negative 3- and 4-cycles"};
    app.set_version_flag("--version", std::string(kToolVersion));

    std::string command;
    std::string format = "json";
    RunConfig config;
    int order = 0, tau = 0, threads = 0;

    app.add_option("command", command, "verify | fig3 | family | gamma | enumerate | check-lemmas")
        ->required()
        ->check(CLI::IsMember({"verify", "fig3", "family", "gamma", "enumerate", "check-lemmas"}));
    auto* n_opt = app.add_option("--n", order, "Graph order");
    auto* tau_opt = app.add_option("--tau", tau, "Family parameter tau (family command)");
    app.add_option("--tolerance", config.tolerance, "Tolerance against published decimals")->capture_default_str();
    auto* threads_opt = app.add_option("--threads", threads, "Worker threads for enumeration");
    auto* input_opt = app.add_option("--input", "graph6 file of underlying graphs, one per line");
    auto* output_opt = app.add_option("--output", "Write the report here instead of stdout");
    app.add_option("--format", format, "json | csv | text")
        ->check(CLI::IsMember({"json", "csv", "text"}))
        ->capture_default_str();
    app.add_flag("--deterministic", config.deterministic, "Omit timestamps and wall times");
    app.add_option("--max-order-override", config.max_order_override, "Raise the order gate (8 enables n = 8)")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kStatusInvalidConfig;
    }

    config.command = *parse_command(command);
    config.format = *parse_format(format);
    if (*n_opt) config.order = order;
    if (*tau_opt) config.tau = tau;
    if (*threads_opt) config.threads = threads;
    if (*input_opt) config.input_path = input_opt->as<std::string>();
    if (*output_opt) config.output_path = output_opt->as<std::string>();
    try {
        config = with_environment(std::move(config), process_environment());
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid configuration: " << e.what() << '\n';
        return kStatusInvalidConfig;
    }

    const auto result = run(config);
    if (result.status == kStatusInvalidConfig || result.status == kStatusIoError) {
        for (const auto& line : result.document.summary) std::cerr << line << '\n';
        return result.status;
    }
    if (!config.output_path) std::cout << result.rendered;
    return result.status;
}
