#pragma once

#include <string>
#include <vector>

#include "netsel/simulator.hpp"

namespace netsel {

enum class OutputFormat { Csv, Json };

struct RunManifest {
    std::string config_path;  // informational, echoed into the JSON report
    std::string output_dir;
    std::vector<OutputFormat> formats;  // at least one
    int verbosity = 0;
};

// A double rendered with 12 significant digits ("%.12g").
std::string format_g12(double value);

// One row per (traffic_class, variant, replication).
std::string metrics_csv(const std::vector<SimulationReport>& reports);

// Per (traffic_class, variant) means and standard deviations.
std::string aggregate_csv(const std::vector<SimulationReport>& reports);

// Full traces; byte-stable for a fixed report.
std::string report_json(const std::vector<SimulationReport>& reports,
                        const std::string& config_path = "");

struct EmittedFiles {
    std::vector<std::string> paths;
};

// Writes metrics.csv / aggregate.csv (CSV format) and report.json (JSON
// format) under manifest.output_dir. On failure the files created by this
// call are removed and EmitError is thrown.
EmittedFiles emit_report(const std::vector<SimulationReport>& reports,
                         const RunManifest& manifest);

}  // namespace netsel
