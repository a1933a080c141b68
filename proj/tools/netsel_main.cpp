#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "netsel/config.hpp"
#include "netsel/report.hpp"
#include "netsel/simulator.hpp"

namespace {

std::vector<std::string> split_csv(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream is(text);
    std::string token;
    while (std::getline(is, token, ','))
        if (!token.empty()) out.push_back(token);
    return out;
}

void print_summary(const std::vector<netsel::SimulationReport>& reports) {
    std::printf("%-16s %-9s %12s %12s %10s %10s\n", "traffic_class", "variant",
                "abnormality", "handoffs", "abn_events", "handoffs/run");
    for (const netsel::SimulationReport& report : reports) {
        for (const auto& [variant, agg] : report.aggregates) {
            std::printf("%-16s %-9s %12.4f %12.4f %10.2f %12.2f\n",
                        report.traffic_class.c_str(), to_string(variant).c_str(),
                        agg.mean_abnormality_rate, agg.mean_handoff_rate,
                        agg.mean_abnormality_events, agg.mean_handoff_count);
        }
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "ANP-weighted TOPSIS network selection: runs the four strategy variants "
        "over seeded attribute streams and reports ranking-abnormality and "
        "handoff metrics"};

    std::string config_path;
    std::string traffic_class = "all";
    std::string variant_arg = "all";
    std::string out_dir = "out";
    std::string format_arg = "csv,json";
    std::optional<std::uint64_t> seed_override;
    std::optional<std::size_t> replications_override;
    std::optional<std::size_t> points_override;
    bool verbose = false;
    bool print_default = false;

    app.add_option("--config", config_path,
                   "Config file (JSON); built-in defaults when omitted");
    app.add_option("--traffic-class", traffic_class,
                   "Traffic class name, comma list, or 'all'");
    app.add_option("--variant", variant_arg,
                   "Variant (TOPSIS1..TOPSIS4), comma list, or 'all'");
    app.add_option("--seed", seed_override, "Master seed override");
    app.add_option("--replications", replications_override,
                   "Replication count override");
    app.add_option("--decision-points", points_override,
                   "Decision points per replication override");
    app.add_option("--out", out_dir, "Output directory");
    app.add_option("--format", format_arg, "Output formats: csv,json");
    app.add_flag("-v,--verbose", verbose, "Progress output on stderr");
    app.add_flag("--print-default-config", print_default,
                 "Print the built-in default config and exit");

    CLI11_PARSE(app, argc, argv);

    if (print_default) {
        std::cout << netsel::default_config_text();
        return 0;
    }

    try {
        netsel::AppConfig config = config_path.empty()
                                       ? netsel::parse_config(netsel::default_config_text())
                                       : netsel::load_config_file(config_path);
        if (seed_override) config.simulation.seed = *seed_override;
        if (replications_override) {
            if (*replications_override < 1)
                throw netsel::ConfigError("--replications must be >= 1");
            config.simulation.replications = *replications_override;
        }
        if (points_override) {
            if (*points_override < 1)
                throw netsel::ConfigError("--decision-points must be >= 1");
            config.simulation.decision_points = *points_override;
        }

        if (variant_arg != "all") {
            std::vector<netsel::VariantId> variants;
            for (const std::string& token : split_csv(variant_arg)) {
                const auto v = netsel::variant_from_string(token);
                if (!v) throw netsel::ConfigError("unknown variant '" + token + "'");
                variants.push_back(*v);
            }
            config.simulation.variants = variants;
        }

        std::vector<std::string> classes;
        if (traffic_class == "all") {
            if (config.simulation.traffic_class != "all")
                classes.push_back(config.simulation.traffic_class);
            else
                for (const auto& [name, profile] : config.profiles) {
                    (void)profile;
                    classes.push_back(name);
                }
        } else {
            classes = split_csv(traffic_class);
        }

        netsel::RunManifest manifest;
        manifest.config_path = config_path;
        manifest.output_dir = out_dir;
        manifest.verbosity = verbose ? 1 : 0;
        for (const std::string& token : split_csv(format_arg)) {
            if (token == "csv")
                manifest.formats.push_back(netsel::OutputFormat::Csv);
            else if (token == "json")
                manifest.formats.push_back(netsel::OutputFormat::Json);
            else
                throw netsel::ConfigError("unknown output format '" + token + "'");
        }
        if (manifest.formats.empty())
            throw netsel::ConfigError("at least one output format is required");

        std::vector<netsel::SimulationReport> reports;
        for (const std::string& name : classes) {
            if (config.profiles.find(name) == config.profiles.end())
                throw netsel::ConfigError("traffic class '" + name +
                                          "' is not configured");
            if (verbose)
                std::fprintf(stderr, "running %s: %zu replications x %zu points\n",
                             name.c_str(), config.simulation.replications,
                             config.simulation.decision_points);
            reports.push_back(netsel::run_simulation(
                netsel::config_for_class(config, name), config.profiles.at(name)));
        }

        const netsel::EmittedFiles files = netsel::emit_report(reports, manifest);
        print_summary(reports);
        if (verbose)
            for (const std::string& path : files.paths)
                std::fprintf(stderr, "wrote %s\n", path.c_str());
        return 0;
    } catch (const netsel::InconsistentJudgmentsError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const netsel::EmitError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 3;
    } catch (const netsel::ConfigError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 4;
    }
}
