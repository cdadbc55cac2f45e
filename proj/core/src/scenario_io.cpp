#include "jamcov/scenario_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "jamcov/errors.hpp"
#include "jamcov/util.hpp"

namespace jamcov {

namespace {

using nlohmann::json;

// Pulls known keys out of an object and complains about leftovers, so typos
// in scenario files fail loudly instead of silently taking defaults.
class ObjectReader {
public:
    ObjectReader(const json& node, std::string path) : path_(std::move(path)) {
        if (!node.is_object()) {
            throw ValidationError(path_ + " must be an object");
        }
        remaining_ = node;
    }

    bool has(const char* key) const { return remaining_.contains(key); }

    json take(const char* key) {
        json value = remaining_.at(key);
        remaining_.erase(key);
        return value;
    }

    double number(const char* key, double fallback) {
        if (!has(key)) {
            return fallback;
        }
        const json value = take(key);
        if (!value.is_number()) {
            throw ValidationError(path_ + "." + key + " must be a number");
        }
        return value.get<double>();
    }

    std::uint64_t unsigned_integer(const char* key, std::uint64_t fallback) {
        if (!has(key)) {
            return fallback;
        }
        const json value = take(key);
        if (!value.is_number_unsigned()) {
            throw ValidationError(path_ + "." + key + " must be a non-negative integer");
        }
        return value.get<std::uint64_t>();
    }

    std::vector<double> number_list(const char* key, std::vector<double> fallback) {
        if (!has(key)) {
            return fallback;
        }
        const json value = take(key);
        if (!value.is_array() || value.empty()) {
            throw ValidationError(path_ + "." + key + " must be a non-empty array of numbers");
        }
        std::vector<double> list;
        list.reserve(value.size());
        for (const json& item : value) {
            if (!item.is_number()) {
                throw ValidationError(path_ + "." + key + " must contain numbers only");
            }
            list.push_back(item.get<double>());
        }
        return list;
    }

    void finish() const {
        if (!remaining_.empty()) {
            std::string keys;
            for (auto it = remaining_.begin(); it != remaining_.end(); ++it) {
                if (!keys.empty()) keys += ", ";
                keys += it.key();
            }
            throw UnknownKeyError("unknown key(s) in " + path_ + ": " + keys);
        }
    }

    const std::string& path() const { return path_; }

private:
    json remaining_;
    std::string path_;
};

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

Scenario scenario_from_json(const json& root) {
    ObjectReader top(root, "scenario");

    bool db_input = false;
    if (top.has("snr_unit")) {
        const json unit = top.take("snr_unit");
        if (!unit.is_string() || (unit != "linear" && unit != "db")) {
            throw ValidationError("snr_unit must be \"linear\" or \"db\"");
        }
        db_input = (unit == "db");
    }
    const auto to_linear = [db_input](double value) {
        return db_input ? db_to_linear(value) : value;
    };

    Scenario scenario;
    if (!top.has("d_ab")) {
        throw ValidationError("scenario is missing the required key d_ab");
    }
    scenario.d_ab = top.number("d_ab", 0.0);
    scenario.rate_rs = top.number("rate_rs", 1.0);

    if (top.has("env")) {
        ObjectReader env(top.take("env"), "env");
        scenario.env.psi = env.number("psi", scenario.env.psi);
        scenario.env.omega = env.number("omega", scenario.env.omega);
        scenario.env.alpha = env.number("alpha", scenario.env.alpha);
        scenario.env.alpha_j = env.number("alpha_j", scenario.env.alpha_j);
        scenario.env.eta_los = env.number("eta_los", scenario.env.eta_los);
        scenario.env.eta_nlos = env.number("eta_nlos", scenario.env.eta_nlos);
        env.finish();
    }

    const bool has_powers = top.has("powers");
    const bool has_budget = top.has("power_budget");
    if (has_powers && has_budget) {
        throw ValidationError("give either powers or power_budget, not both");
    }
    if (has_budget) {
        ObjectReader budget(top.take("power_budget"), "power_budget");
        PowerBudget parsed;
        if (!budget.has("gamma_t")) {
            throw ValidationError("power_budget is missing the required key gamma_t");
        }
        parsed.gamma_t = to_linear(budget.number("gamma_t", 0.0));
        parsed.alice_share = budget.number("alice_share", parsed.alice_share);
        parsed.jammer_ratio = budget.number("jammer_ratio", parsed.jammer_ratio);
        budget.finish();
        scenario.budget = parsed;
        scenario.powers = parsed.resolve();
    } else if (has_powers) {
        ObjectReader powers(top.take("powers"), "powers");
        scenario.powers.gamma_a = to_linear(powers.number("gamma_a", 15.0));
        scenario.powers.gamma_j1 = to_linear(powers.number("gamma_j1", 15.0));
        scenario.powers.gamma_j2 = to_linear(powers.number("gamma_j2", 15.0));
        powers.finish();
    } else if (db_input) {
        scenario.powers.gamma_a = db_to_linear(scenario.powers.gamma_a);
        scenario.powers.gamma_j1 = db_to_linear(scenario.powers.gamma_j1);
        scenario.powers.gamma_j2 = db_to_linear(scenario.powers.gamma_j2);
    }

    if (top.has("jammers")) {
        ObjectReader jammers(top.take("jammers"), "jammers");
        scenario.jammers.r_j = jammers.number("r_j", scenario.jammers.r_j);
        scenario.jammers.theta_j1_deg =
            jammers.number("theta_j1_deg", scenario.jammers.theta_j1_deg);
        scenario.jammers.theta_j2_deg =
            jammers.number("theta_j2_deg", scenario.jammers.theta_j2_deg);
        scenario.jammers.z_j1 = jammers.number("z_j1", scenario.jammers.z_j1);
        scenario.jammers.z_j2 = jammers.number("z_j2", scenario.jammers.z_j2);
        jammers.finish();
    }

    if (top.has("region")) {
        ObjectReader region(top.take("region"), "region");
        scenario.region.radius_s = region.number("radius_s", scenario.region.radius_s);
        scenario.region.exclusion_radius =
            region.number("exclusion_radius", scenario.region.exclusion_radius);
        scenario.region.n_radial =
            static_cast<unsigned>(region.unsigned_integer("n_radial", scenario.region.n_radial));
        scenario.region.n_angular =
            static_cast<unsigned>(region.unsigned_integer("n_angular", scenario.region.n_angular));
        region.finish();
    }

    if (top.has("mc")) {
        ObjectReader mc(top.take("mc"), "mc");
        scenario.mc.n_samples = mc.unsigned_integer("n_samples", scenario.mc.n_samples);
        scenario.mc.seed = mc.unsigned_integer("seed", scenario.mc.seed);
        scenario.mc.n_substreams = static_cast<std::uint32_t>(
            mc.unsigned_integer("n_substreams", scenario.mc.n_substreams));
        mc.finish();
    }

    if (top.has("sweeps")) {
        ObjectReader sweeps(top.take("sweeps"), "sweeps");
        scenario.sweeps.heights = sweeps.number_list("heights", scenario.sweeps.heights);
        scenario.sweeps.angle_step_deg =
            sweeps.number("angle_step_deg", scenario.sweeps.angle_step_deg);
        scenario.sweeps.ratios = sweeps.number_list("ratios", scenario.sweeps.ratios);
        scenario.sweeps.rj_values = sweeps.number_list("rj_values", scenario.sweeps.rj_values);
        scenario.sweeps.theta_step_deg =
            sweeps.number("theta_step_deg", scenario.sweeps.theta_step_deg);
        scenario.sweeps.validate_ring_fractions = sweeps.number_list(
            "validate_ring_fractions", scenario.sweeps.validate_ring_fractions);
        scenario.sweeps.validate_angle_step_deg =
            sweeps.number("validate_angle_step_deg", scenario.sweeps.validate_angle_step_deg);
        sweeps.finish();
    }

    if (top.has("theta_study")) {
        ObjectReader study(top.take("theta_study"), "theta_study");
        ThetaStudy parsed;
        parsed.d_ab_values = study.number_list("d_ab_values", {});
        parsed.r_j_values = study.number_list("r_j_values", {});
        study.finish();
        scenario.theta_study = parsed;
    }

    top.finish();
    scenario.validate();
    return scenario;
}

json list_to_json(const std::vector<double>& values) {
    json out = json::array();
    for (double v : values) {
        out.push_back(v);
    }
    return out;
}

}  // namespace

Scenario parse_scenario(const std::string& text) {
    json root;
    try {
        root = json::parse(text, nullptr, true, /*ignore_comments=*/true);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("scenario parse error: ") + e.what());
    }
    return scenario_from_json(root);
}

Scenario load_scenario(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open scenario file " + path.string());
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (in.bad()) {
        throw IoError("failed reading scenario file " + path.string());
    }
    return parse_scenario(buffer.str());
}

std::string canonical_json(const Scenario& scenario) {
    json root;
    root["d_ab"] = scenario.d_ab;
    root["rate_rs"] = scenario.rate_rs;
    root["env"] = {{"psi", scenario.env.psi},
                   {"omega", scenario.env.omega},
                   {"alpha", scenario.env.alpha},
                   {"alpha_j", scenario.env.alpha_j},
                   {"eta_los", scenario.env.eta_los},
                   {"eta_nlos", scenario.env.eta_nlos}};
    if (scenario.budget) {
        root["power_budget"] = {{"gamma_t", scenario.budget->gamma_t},
                                {"alice_share", scenario.budget->alice_share},
                                {"jammer_ratio", scenario.budget->jammer_ratio}};
    } else {
        root["powers"] = {{"gamma_a", scenario.powers.gamma_a},
                          {"gamma_j1", scenario.powers.gamma_j1},
                          {"gamma_j2", scenario.powers.gamma_j2}};
    }
    root["jammers"] = {{"r_j", scenario.jammers.r_j},
                       {"theta_j1_deg", scenario.jammers.theta_j1_deg},
                       {"theta_j2_deg", scenario.jammers.theta_j2_deg},
                       {"z_j1", scenario.jammers.z_j1},
                       {"z_j2", scenario.jammers.z_j2}};
    root["region"] = {{"radius_s", scenario.region.radius_s},
                      {"exclusion_radius", scenario.region.exclusion_radius},
                      {"n_radial", scenario.region.n_radial},
                      {"n_angular", scenario.region.n_angular}};
    root["mc"] = {{"n_samples", scenario.mc.n_samples},
                  {"seed", scenario.mc.seed},
                  {"n_substreams", scenario.mc.n_substreams}};
    root["sweeps"] = {
        {"heights", list_to_json(scenario.sweeps.heights)},
        {"angle_step_deg", scenario.sweeps.angle_step_deg},
        {"ratios", list_to_json(scenario.sweeps.ratios)},
        {"rj_values", list_to_json(scenario.sweeps.rj_values)},
        {"theta_step_deg", scenario.sweeps.theta_step_deg},
        {"validate_ring_fractions", list_to_json(scenario.sweeps.validate_ring_fractions)},
        {"validate_angle_step_deg", scenario.sweeps.validate_angle_step_deg}};
    if (scenario.theta_study) {
        root["theta_study"] = {{"d_ab_values", list_to_json(scenario.theta_study->d_ab_values)},
                               {"r_j_values", list_to_json(scenario.theta_study->r_j_values)}};
    }
    return root.dump(2) + "\n";
}

std::uint64_t scenario_hash(const Scenario& scenario) {
    return fnv1a64(canonical_json(scenario));
}

std::string scenario_hash_hex(const Scenario& scenario) {
    return to_hex(scenario_hash(scenario));
}

}  // namespace jamcov
