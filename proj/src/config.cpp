#include "netsel/config.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace netsel {

using nlohmann::json;

namespace {

const json& require(const json& obj, const std::string& key, const std::string& ctx) {
    const auto it = obj.find(key);
    if (it == obj.end())
        throw ConfigError(ctx + ": missing field '" + key + "'");
    return *it;
}

void reject_unknown(const json& obj, std::initializer_list<const char*> known,
                    const std::string& ctx) {
    for (const auto& [key, value] : obj.items()) {
        (void)value;
        bool ok = false;
        for (const char* k : known)
            if (key == k) ok = true;
        if (!ok) throw ConfigError(ctx + ": unknown field '" + key + "'");
    }
}

double as_number(const json& v, const std::string& ctx) {
    if (!v.is_number()) throw ConfigError(ctx + ": expected a number");
    return v.get<double>();
}

std::uint64_t as_count(const json& v, const std::string& ctx, std::uint64_t min) {
    if (!v.is_number_unsigned())
        throw ConfigError(ctx + ": expected a nonnegative integer");
    const std::uint64_t n = v.get<std::uint64_t>();
    if (n < min)
        throw ConfigError(ctx + ": must be >= " + std::to_string(min));
    return n;
}

Range as_range(const json& v, const std::string& ctx) {
    if (!v.is_array() || v.size() != 2)
        throw ConfigError(ctx + ": expected a [lo, hi] pair");
    return Range{as_number(v[0], ctx + "[0]"), as_number(v[1], ctx + "[1]")};
}

JudgmentSet parse_judgment_set(const json& obj,
                               const std::vector<std::string>& labels,
                               const std::string& ctx) {
    if (!obj.is_object())
        throw ConfigError(ctx + ": expected an object of \"a/b\": \"value\" judgments");
    JudgmentSet set;
    set.labels = labels;
    for (const auto& [key, value] : obj.items()) {
        const auto slash = key.find('/');
        if (slash == std::string::npos)
            throw ConfigError(ctx + ": judgment key '" + key + "' is not of the form a/b");
        const std::string lhs = key.substr(0, slash);
        const std::string rhs = key.substr(slash + 1);
        const auto index_of = [&](const std::string& name) -> std::size_t {
            for (std::size_t i = 0; i < labels.size(); ++i)
                if (labels[i] == name) return i;
            throw ConfigError(ctx + ": judgment key '" + key +
                              "' references unknown element '" + name + "'");
        };
        std::size_t i = index_of(lhs);
        std::size_t j = index_of(rhs);
        if (i == j)
            throw ConfigError(ctx + ": judgment key '" + key + "' compares an element to itself");
        if (!value.is_string())
            throw ConfigError(ctx + ": judgment '" + key + "' must be a string like \"3\" or \"1/3\"");
        auto judgment = SaatyJudgment::parse(value.get<std::string>());
        if (!judgment)
            throw ConfigError(ctx + ": judgment '" + key + "' = \"" +
                              value.get<std::string>() +
                              "\" is not on the 1-9 comparison scale");
        if (i > j) {
            std::swap(i, j);
            judgment = judgment->reciprocal();
        }
        if (!set.upper.emplace(JudgmentKey{i, j}, *judgment).second)
            throw ConfigError(ctx + ": duplicate judgment for pair '" + key + "'");
    }
    return set;
}

json serialize_judgment_set(const JudgmentSet& set) {
    json out = json::object();
    for (const auto& [key, judgment] : set.upper)
        out[set.labels[key.first] + "/" + set.labels[key.second]] = judgment.str();
    return out;
}

const std::map<std::string, std::string>& expected_criteria_directions() {
    static const std::map<std::string, std::string> expected = {
        {"CB", "cost"},    {"S", "benefit"}, {"AB", "benefit"}, {"D", "cost"},
        {"J", "cost"},     {"L", "cost"},    {"H", "benefit"}};
    return expected;
}

}  // namespace

AppConfig parse_config(const std::string& text) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("config is not valid JSON: ") + e.what());
    }
    if (!root.is_object()) throw ConfigError("config root must be an object");
    reject_unknown(root, {"simulation", "criteria", "networks", "traffic_classes"},
                   "config");

    AppConfig config;

    // simulation
    {
        const json& sim = require(root, "simulation", "config");
        reject_unknown(sim,
                       {"decision_points", "seed", "replications", "traffic_class",
                        "variants"},
                       "simulation");
        config.simulation.decision_points = static_cast<std::size_t>(
            as_count(require(sim, "decision_points", "simulation"),
                     "simulation.decision_points", 1));
        config.simulation.seed =
            as_count(require(sim, "seed", "simulation"), "simulation.seed", 0);
        config.simulation.replications = static_cast<std::size_t>(
            as_count(require(sim, "replications", "simulation"),
                     "simulation.replications", 1));
        const json& cls = require(sim, "traffic_class", "simulation");
        if (!cls.is_string())
            throw ConfigError("simulation.traffic_class: expected a string");
        config.simulation.traffic_class = cls.get<std::string>();
        const json& variants = require(sim, "variants", "simulation");
        if (!variants.is_array())
            throw ConfigError("simulation.variants: expected an array");
        for (const json& v : variants) {
            if (!v.is_string())
                throw ConfigError("simulation.variants: entries must be strings");
            const auto variant = variant_from_string(v.get<std::string>());
            if (!variant)
                throw ConfigError("simulation.variants: unknown variant '" +
                                  v.get<std::string>() + "'");
            for (VariantId existing : config.simulation.variants)
                if (existing == *variant)
                    throw ConfigError("simulation.variants: variant '" +
                                      v.get<std::string>() + "' listed twice");
            config.simulation.variants.push_back(*variant);
        }
    }

    // criteria: fixed direction table, present for documentation and checked
    // against the model so the file cannot contradict the code.
    {
        const json& criteria = require(root, "criteria", "config");
        if (!criteria.is_object()) throw ConfigError("criteria: expected an object");
        const auto& expected = expected_criteria_directions();
        for (const auto& [name, direction] : expected) {
            const json& v = require(criteria, name, "criteria");
            if (!v.is_string() || v.get<std::string>() != direction)
                throw ConfigError("criteria." + name + ": must be \"" + direction + "\"");
        }
        for (const auto& [key, value] : criteria.items()) {
            (void)value;
            if (expected.find(key) == expected.end())
                throw ConfigError("criteria: unknown criterion '" + key + "'");
        }
    }

    // networks
    std::vector<std::string> network_ids;
    {
        const json& networks = require(root, "networks", "config");
        if (!networks.is_array() || networks.empty())
            throw ConfigError("networks: expected a non-empty array");
        for (const json& entry : networks) {
            if (!entry.is_object()) throw ConfigError("networks: entries must be objects");
            reject_unknown(entry, {"id", "cb", "s", "ab", "d", "j", "l"}, "networks");
            NetworkRangeSpec spec;
            const json& id = require(entry, "id", "networks");
            if (!id.is_string()) throw ConfigError("networks.id: expected a string");
            spec.network_id = id.get<std::string>();
            const std::string ctx = "networks." + spec.network_id;
            spec.cb = as_number(require(entry, "cb", ctx), ctx + ".cb");
            spec.s = as_number(require(entry, "s", ctx), ctx + ".s");
            spec.ab = as_range(require(entry, "ab", ctx), ctx + ".ab");
            spec.d = as_range(require(entry, "d", ctx), ctx + ".d");
            spec.j = as_range(require(entry, "j", ctx), ctx + ".j");
            spec.l = as_range(require(entry, "l", ctx), ctx + ".l");
            config.simulation.network_specs.push_back(NetworkRangeSpec::checked(spec));
            network_ids.push_back(spec.network_id);
        }
    }

    // traffic classes
    {
        const json& classes = require(root, "traffic_classes", "config");
        if (!classes.is_object() || classes.empty())
            throw ConfigError("traffic_classes: expected a non-empty object");
        for (const auto& [name, body] : classes.items()) {
            const std::string ctx = "traffic_classes." + name;
            if (!body.is_object()) throw ConfigError(ctx + ": expected an object");
            reject_unknown(body, {"level1", "level2", "level3"}, ctx);
            ProfileSpec spec;
            spec.class_name = name;
            spec.level1 = parse_judgment_set(require(body, "level1", ctx),
                                             level1_labels(), ctx + ".level1");
            spec.level2 = parse_judgment_set(require(body, "level2", ctx),
                                             level2_labels(), ctx + ".level2");
            const json& level3 = require(body, "level3", ctx);
            if (!level3.is_object()) throw ConfigError(ctx + ".level3: expected an object");
            for (Criterion c : kAllCriteria) {
                const auto it = level3.find(to_string(c));
                if (it == level3.end())
                    throw ConfigError(ctx + ".level3: missing matrix for criterion " +
                                      to_string(c));
                spec.level3.emplace(
                    c, parse_judgment_set(*it, network_ids,
                                          ctx + ".level3." + to_string(c)));
            }
            for (const auto& [key, value] : level3.items()) {
                (void)value;
                if (!criterion_from_string(key))
                    throw ConfigError(ctx + ".level3: unknown criterion '" + key + "'");
            }
            config.profiles.emplace(name, load_profile(spec));
            config.profile_specs.emplace(name, std::move(spec));
        }
    }

    if (config.simulation.traffic_class != "all" &&
        config.profile_specs.find(config.simulation.traffic_class) ==
            config.profile_specs.end())
        throw ConfigError("simulation.traffic_class '" +
                          config.simulation.traffic_class +
                          "' is not a configured traffic class");
    return config;
}

AppConfig load_config_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open config file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_config(buffer.str());
}

std::string serialize_config(const AppConfig& config) {
    json root = json::object();

    json sim = json::object();
    sim["decision_points"] = config.simulation.decision_points;
    sim["seed"] = config.simulation.seed;
    sim["replications"] = config.simulation.replications;
    sim["traffic_class"] = config.simulation.traffic_class;
    json variants = json::array();
    for (VariantId v : config.simulation.variants) variants.push_back(to_string(v));
    sim["variants"] = std::move(variants);
    root["simulation"] = std::move(sim);

    json criteria = json::object();
    for (const auto& [name, direction] : expected_criteria_directions())
        criteria[name] = direction;
    root["criteria"] = std::move(criteria);

    json networks = json::array();
    for (const NetworkRangeSpec& spec : config.simulation.network_specs) {
        json entry = json::object();
        entry["id"] = spec.network_id;
        entry["cb"] = spec.cb;
        entry["s"] = spec.s;
        entry["ab"] = json::array({spec.ab.lo, spec.ab.hi});
        entry["d"] = json::array({spec.d.lo, spec.d.hi});
        entry["j"] = json::array({spec.j.lo, spec.j.hi});
        entry["l"] = json::array({spec.l.lo, spec.l.hi});
        networks.push_back(std::move(entry));
    }
    root["networks"] = std::move(networks);

    json classes = json::object();
    for (const auto& [name, spec] : config.profile_specs) {
        json body = json::object();
        body["level1"] = serialize_judgment_set(spec.level1);
        body["level2"] = serialize_judgment_set(spec.level2);
        json level3 = json::object();
        for (Criterion c : kAllCriteria)
            level3[to_string(c)] = serialize_judgment_set(spec.level3.at(c));
        body["level3"] = std::move(level3);
        classes[name] = std::move(body);
    }
    root["traffic_classes"] = std::move(classes);

    return root.dump(2) + "\n";
}

SimulationConfig config_for_class(const AppConfig& config,
                                  const std::string& traffic_class) {
    if (config.profiles.find(traffic_class) == config.profiles.end())
        throw ConfigError("traffic class '" + traffic_class + "' is not configured");
    SimulationConfig out = config.simulation;
    out.traffic_class = traffic_class;
    return out;
}

const std::string& default_config_text() {
    static const std::string text = R"({
  "simulation": {
    "decision_points": 12,
    "seed": 42,
    "replications": 1,
    "traffic_class": "all",
    "variants": ["TOPSIS1", "TOPSIS2", "TOPSIS3", "TOPSIS4"]
  },
  "criteria": {
    "CB": "cost",
    "S": "benefit",
    "AB": "benefit",
    "D": "cost",
    "J": "cost",
    "L": "cost",
    "H": "benefit"
  },
  "networks": [
    { "id": "UMTS",  "cb": 60, "s": 70, "ab": [0.1, 2.0],  "d": [25, 50],   "j": [5, 10],  "l": [20, 80] },
    { "id": "WLAN",  "cb": 10, "s": 50, "ab": [1.0, 11.0], "d": [100, 150], "j": [10, 20], "l": [20, 80] },
    { "id": "WIMAX", "cb": 40, "s": 60, "ab": [1.0, 60.0], "d": [60, 100],  "j": [3, 10],  "l": [20, 80] }
  ],
  "traffic_classes": {
    "background": {
      "level1": {
        "qos/security": "4", "qos/cost": "2", "qos/history": "2",
        "security/cost": "1/3", "security/history": "1/3", "cost/history": "1"
      },
      "level2": {
        "AB/D": "1", "AB/J": "1", "AB/L": "1/2",
        "D/J": "1", "D/L": "1/3", "J/L": "1/2"
      },
      "level3": {
        "CB": { "UMTS/WLAN": "1/6", "UMTS/WIMAX": "1/2", "WLAN/WIMAX": "3" },
        "S":  { "UMTS/WLAN": "4",   "UMTS/WIMAX": "2",   "WLAN/WIMAX": "1/2" },
        "AB": { "UMTS/WLAN": "1/3", "UMTS/WIMAX": "1/9", "WLAN/WIMAX": "1/3" },
        "D":  { "UMTS/WLAN": "7",   "UMTS/WIMAX": "3",   "WLAN/WIMAX": "1/2" },
        "J":  { "UMTS/WLAN": "3",   "UMTS/WIMAX": "1/2", "WLAN/WIMAX": "1/5" },
        "L":  { "UMTS/WLAN": "1",   "UMTS/WIMAX": "1",   "WLAN/WIMAX": "1" },
        "H":  { "UMTS/WLAN": "1",   "UMTS/WIMAX": "1",   "WLAN/WIMAX": "1" }
      }
    },
    "conversational": {
      "level1": {
        "qos/security": "5", "qos/cost": "3", "qos/history": "2",
        "security/cost": "1/2", "security/history": "1/3", "cost/history": "1/2"
      },
      "level2": {
        "AB/D": "1/3", "AB/J": "1/2", "AB/L": "1",
        "D/J": "1", "D/L": "3", "J/L": "2"
      },
      "level3": {
        "CB": { "UMTS/WLAN": "1/6", "UMTS/WIMAX": "1/2", "WLAN/WIMAX": "3" },
        "S":  { "UMTS/WLAN": "4",   "UMTS/WIMAX": "2",   "WLAN/WIMAX": "1/2" },
        "AB": { "UMTS/WLAN": "1/3", "UMTS/WIMAX": "1/9", "WLAN/WIMAX": "1/3" },
        "D":  { "UMTS/WLAN": "7",   "UMTS/WIMAX": "3",   "WLAN/WIMAX": "1/2" },
        "J":  { "UMTS/WLAN": "3",   "UMTS/WIMAX": "1/2", "WLAN/WIMAX": "1/5" },
        "L":  { "UMTS/WLAN": "1",   "UMTS/WIMAX": "1",   "WLAN/WIMAX": "1" },
        "H":  { "UMTS/WLAN": "1",   "UMTS/WIMAX": "1",   "WLAN/WIMAX": "1" }
      }
    },
    "interactive": {
      "level1": {
        "qos/security": "5", "qos/cost": "2", "qos/history": "2",
        "security/cost": "1/3", "security/history": "1/2", "cost/history": "1"
      },
      "level2": {
        "AB/D": "1/3", "AB/J": "2", "AB/L": "1/2",
        "D/J": "4", "D/L": "1", "J/L": "1/4"
      },
      "level3": {
        "CB": { "UMTS/WLAN": "1/6", "UMTS/WIMAX": "1/2", "WLAN/WIMAX": "3" },
        "S":  { "UMTS/WLAN": "4",   "UMTS/WIMAX": "2",   "WLAN/WIMAX": "1/2" },
        "AB": { "UMTS/WLAN": "1/3", "UMTS/WIMAX": "1/9", "WLAN/WIMAX": "1/3" },
        "D":  { "UMTS/WLAN": "7",   "UMTS/WIMAX": "3",   "WLAN/WIMAX": "1/2" },
        "J":  { "UMTS/WLAN": "3",   "UMTS/WIMAX": "1/2", "WLAN/WIMAX": "1/5" },
        "L":  { "UMTS/WLAN": "1",   "UMTS/WIMAX": "1",   "WLAN/WIMAX": "1" },
        "H":  { "UMTS/WLAN": "1",   "UMTS/WIMAX": "1",   "WLAN/WIMAX": "1" }
      }
    },
    "streaming": {
      "level1": {
        "qos/security": "5", "qos/cost": "3", "qos/history": "3",
        "security/cost": "1/2", "security/history": "1/2", "cost/history": "1"
      },
      "level2": {
        "AB/D": "1/2", "AB/J": "1/2", "AB/L": "1",
        "D/J": "1", "D/L": "2", "J/L": "2"
      },
      "level3": {
        "CB": { "UMTS/WLAN": "1/6", "UMTS/WIMAX": "1/2", "WLAN/WIMAX": "3" },
        "S":  { "UMTS/WLAN": "4",   "UMTS/WIMAX": "2",   "WLAN/WIMAX": "1/2" },
        "AB": { "UMTS/WLAN": "1/3", "UMTS/WIMAX": "1/9", "WLAN/WIMAX": "1/3" },
        "D":  { "UMTS/WLAN": "7",   "UMTS/WIMAX": "3",   "WLAN/WIMAX": "1/2" },
        "J":  { "UMTS/WLAN": "3",   "UMTS/WIMAX": "1/2", "WLAN/WIMAX": "1/5" },
        "L":  { "UMTS/WLAN": "1",   "UMTS/WIMAX": "1",   "WLAN/WIMAX": "1" },
        "H":  { "UMTS/WLAN": "1",   "UMTS/WIMAX": "1",   "WLAN/WIMAX": "1" }
      }
    }
  }
}
)";
    return text;
}

}  // namespace netsel
