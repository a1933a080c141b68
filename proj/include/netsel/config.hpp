#pragma once

#include <map>
#include <string>

#include "netsel/simulator.hpp"
#include "netsel/strategy.hpp"

namespace netsel {

// Parsed configuration: the simulation section (traffic_class may be "all")
// plus the raw judgment specs and the validated profiles per traffic class.
struct AppConfig {
    SimulationConfig simulation;
    std::map<std::string, ProfileSpec> profile_specs;
    std::map<std::string, TrafficClassProfile> profiles;  // derived from specs

    friend bool operator==(const AppConfig& a, const AppConfig& b) {
        return a.simulation == b.simulation && a.profile_specs == b.profile_specs;
    }
};

// Parses and fully validates a JSON config (sections: simulation, criteria,
// networks, traffic_classes). Every pairwise matrix is consistency-checked;
// CR >= 0.1 raises InconsistentJudgmentsError naming the matrix, any other
// violation raises ConfigError naming the field.
AppConfig parse_config(const std::string& text);

AppConfig load_config_file(const std::string& path);

// Canonical JSON for the config; parse_config(serialize_config(c)) == c.
std::string serialize_config(const AppConfig& config);

// The shipped default configuration (also stored at configs/default.json).
const std::string& default_config_text();

// The simulation config for one concrete traffic class.
SimulationConfig config_for_class(const AppConfig& config,
                                  const std::string& traffic_class);

}  // namespace netsel
