#include "netsel/report.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace netsel {

using ordered_json = nlohmann::ordered_json;
namespace fs = std::filesystem;

std::string format_g12(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.12g", value);
    return buffer;
}

namespace {

// nlohmann's dump() prints shortest-round-trip doubles; the report contract
// pins numbers to 12 significant digits, so the document is printed here.
void dump_12sig(const ordered_json& node, std::ostream& os, int indent) {
    const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
    const std::string pad_in(static_cast<std::size_t>(indent + 1) * 2, ' ');
    switch (node.type()) {
        case ordered_json::value_t::object: {
            if (node.empty()) {
                os << "{}";
                return;
            }
            os << "{\n";
            bool first = true;
            for (const auto& [key, value] : node.items()) {
                if (!first) os << ",\n";
                first = false;
                os << pad_in << ordered_json(key).dump() << ": ";
                dump_12sig(value, os, indent + 1);
            }
            os << "\n" << pad << "}";
            return;
        }
        case ordered_json::value_t::array: {
            if (node.empty()) {
                os << "[]";
                return;
            }
            os << "[\n";
            bool first = true;
            for (const auto& value : node) {
                if (!first) os << ",\n";
                first = false;
                os << pad_in;
                dump_12sig(value, os, indent + 1);
            }
            os << "\n" << pad << "]";
            return;
        }
        case ordered_json::value_t::number_float:
            os << format_g12(node.get<double>());
            return;
        default:
            os << node.dump();
            return;
    }
}

ordered_json snapshot_json(const NetworkSnapshot& snap) {
    ordered_json out;
    out["network"] = snap.network_id;
    out["cb"] = snap.cb;
    out["s"] = snap.s;
    out["ab"] = snap.ab;
    out["d"] = snap.d;
    out["j"] = snap.j;
    out["l"] = snap.l;
    return out;
}

ordered_json metrics_json(const RunMetrics& m) {
    ordered_json out;
    out["abnormality_events"] = m.abnormality_events;
    out["abnormality_rate"] = m.abnormality_rate;
    out["handoff_count"] = m.handoff_count;
    out["handoff_rate"] = m.handoff_rate;
    out["selections"] = m.selections;
    return out;
}

ordered_json aggregate_json(const VariantAggregate& a) {
    ordered_json out;
    out["mean_abnormality_rate"] = a.mean_abnormality_rate;
    out["stddev_abnormality_rate"] = a.stddev_abnormality_rate;
    out["mean_handoff_rate"] = a.mean_handoff_rate;
    out["stddev_handoff_rate"] = a.stddev_handoff_rate;
    out["mean_abnormality_events"] = a.mean_abnormality_events;
    out["mean_handoff_count"] = a.mean_handoff_count;
    return out;
}

ordered_json report_json_body(const SimulationReport& report) {
    ordered_json out;
    out["traffic_class"] = report.traffic_class;

    ordered_json config;
    config["decision_points"] = report.config.decision_points;
    config["seed"] = report.config.seed;
    config["replications"] = report.config.replications;
    ordered_json variants = ordered_json::array();
    for (VariantId v : report.config.variants) variants.push_back(to_string(v));
    config["variants"] = std::move(variants);
    ordered_json networks = ordered_json::array();
    for (const NetworkRangeSpec& spec : report.config.network_specs) {
        ordered_json entry;
        entry["id"] = spec.network_id;
        entry["cb"] = spec.cb;
        entry["s"] = spec.s;
        entry["ab"] = ordered_json::array({spec.ab.lo, spec.ab.hi});
        entry["d"] = ordered_json::array({spec.d.lo, spec.d.hi});
        entry["j"] = ordered_json::array({spec.j.lo, spec.j.hi});
        entry["l"] = ordered_json::array({spec.l.lo, spec.l.hi});
        networks.push_back(std::move(entry));
    }
    config["networks"] = std::move(networks);
    out["config"] = std::move(config);

    ordered_json aggregates = ordered_json::object();
    for (const auto& [variant, agg] : report.aggregates)
        aggregates[to_string(variant)] = aggregate_json(agg);
    out["aggregates"] = std::move(aggregates);

    ordered_json replications = ordered_json::array();
    for (const ReplicationResult& rep : report.replications) {
        ordered_json r;
        r["index"] = rep.index;
        r["seed"] = rep.seed;
        ordered_json metrics = ordered_json::object();
        for (const auto& [variant, m] : rep.metrics)
            metrics[to_string(variant)] = metrics_json(m);
        r["metrics"] = std::move(metrics);
        ordered_json points = ordered_json::array();
        for (std::size_t t = 0; t < rep.points.size(); ++t) {
            const DecisionTrace& trace = rep.points[t];
            ordered_json point;
            point["t"] = t + 1;
            ordered_json snaps = ordered_json::array();
            for (const NetworkSnapshot& snap : trace.snapshots)
                snaps.push_back(snapshot_json(snap));
            point["snapshots"] = std::move(snaps);
            ordered_json per_variant = ordered_json::object();
            for (const auto& [variant, vt] : trace.variants) {
                ordered_json v;
                ordered_json scores = ordered_json::object();
                for (const auto& [network, score] : vt.scores) scores[network] = score;
                v["scores"] = std::move(scores);
                v["ranking"] = vt.ranking;
                v["selected"] = vt.selected;
                v["handoff"] = vt.handoff;
                v["abnormality"] = vt.abnormality;
                per_variant[to_string(variant)] = std::move(v);
            }
            point["variants"] = std::move(per_variant);
            points.push_back(std::move(point));
        }
        r["points"] = std::move(points);
        replications.push_back(std::move(r));
    }
    out["replications"] = std::move(replications);
    return out;
}

}  // namespace

std::string metrics_csv(const std::vector<SimulationReport>& reports) {
    std::ostringstream os;
    os << "traffic_class,variant,replication,decision_points,"
          "abnormality_events,abnormality_rate,handoff_count,handoff_rate\n";
    for (const SimulationReport& report : reports) {
        for (const ReplicationResult& rep : report.replications) {
            for (const auto& [variant, m] : rep.metrics) {
                os << report.traffic_class << ',' << to_string(variant) << ','
                   << rep.index << ',' << report.config.decision_points << ','
                   << m.abnormality_events << ',' << format_g12(m.abnormality_rate)
                   << ',' << m.handoff_count << ',' << format_g12(m.handoff_rate)
                   << '\n';
            }
        }
    }
    return os.str();
}

std::string aggregate_csv(const std::vector<SimulationReport>& reports) {
    std::ostringstream os;
    os << "traffic_class,variant,replications,"
          "mean_abnormality_rate,stddev_abnormality_rate,"
          "mean_handoff_rate,stddev_handoff_rate,"
          "mean_abnormality_events,mean_handoff_count\n";
    for (const SimulationReport& report : reports) {
        for (const auto& [variant, agg] : report.aggregates) {
            os << report.traffic_class << ',' << to_string(variant) << ','
               << report.replications.size() << ','
               << format_g12(agg.mean_abnormality_rate) << ','
               << format_g12(agg.stddev_abnormality_rate) << ','
               << format_g12(agg.mean_handoff_rate) << ','
               << format_g12(agg.stddev_handoff_rate) << ','
               << format_g12(agg.mean_abnormality_events) << ','
               << format_g12(agg.mean_handoff_count) << '\n';
        }
    }
    return os.str();
}

std::string report_json(const std::vector<SimulationReport>& reports,
                        const std::string& config_path) {
    ordered_json root;
    root["schema"] = "netsel-report-v1";
    root["config_path"] = config_path;
    ordered_json body = ordered_json::array();
    for (const SimulationReport& report : reports)
        body.push_back(report_json_body(report));
    root["reports"] = std::move(body);
    std::ostringstream os;
    dump_12sig(root, os, 0);
    os << "\n";
    return os.str();
}

EmittedFiles emit_report(const std::vector<SimulationReport>& reports,
                         const RunManifest& manifest) {
    if (manifest.formats.empty())
        throw EmitError("no output format selected");

    std::error_code ec;
    fs::create_directories(manifest.output_dir, ec);
    if (ec)
        throw EmitError("cannot create output directory '" + manifest.output_dir +
                        "': " + ec.message());

    EmittedFiles emitted;
    const auto write_file = [&](const std::string& name, const std::string& content) {
        const fs::path path = fs::path(manifest.output_dir) / name;
        {
            std::ofstream out(path, std::ios::binary | std::ios::trunc);
            if (out && (out << content) && out.flush()) {
                emitted.paths.push_back(path.string());
                return;
            }
        }
        // Remove the partial file this writer may have left behind.
        std::error_code cleanup;
        if (fs::is_regular_file(path, cleanup)) fs::remove(path, cleanup);
        throw EmitError("failed to write '" + path.string() + "'");
    };

    try {
        const bool csv = std::find(manifest.formats.begin(), manifest.formats.end(),
                                   OutputFormat::Csv) != manifest.formats.end();
        const bool json = std::find(manifest.formats.begin(), manifest.formats.end(),
                                    OutputFormat::Json) != manifest.formats.end();
        if (csv) {
            write_file("metrics.csv", metrics_csv(reports));
            write_file("aggregate.csv", aggregate_csv(reports));
        }
        if (json) write_file("report.json", report_json(reports, manifest.config_path));
    } catch (...) {
        for (const std::string& path : emitted.paths) fs::remove(path, ec);
        throw;
    }
    return emitted;
}

}  // namespace netsel
