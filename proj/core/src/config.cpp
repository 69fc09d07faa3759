#include "gridtf/config.hpp"

#include <nlohmann/json.hpp>

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace gridtf {

using json = nlohmann::ordered_json;

namespace {

void reject_unknown(const json& obj, const std::set<std::string>& allowed,
                    const std::string& where) {
    for (const auto& [key, value] : obj.items()) {
        if (!allowed.count(key))
            throw std::invalid_argument("config: unknown key \"" + key + "\" in " + where);
    }
}

double num(const json& obj, const char* key, double fallback) {
    if (!obj.contains(key)) return fallback;
    if (!obj[key].is_number()) throw std::invalid_argument(std::string("config: ") + key + " must be a number");
    return obj[key].get<double>();
}

}  // namespace

std::string to_string(AlphaMode mode) {
    switch (mode) {
        case AlphaMode::min_req: return "min-req";
        case AlphaMode::max_lim: return "max-lim";
        case AlphaMode::explicit_values: return "explicit";
    }
    return "min-req";
}

AlphaMode alpha_mode_from_string(const std::string& s) {
    if (s == "min-req") return AlphaMode::min_req;
    if (s == "max-lim") return AlphaMode::max_lim;
    if (s == "explicit") return AlphaMode::explicit_values;
    throw std::invalid_argument("config: alpha mode must be min-req, max-lim or explicit");
}

AlphaParams ScenarioConfig::resolve_alpha() const {
    switch (alpha_mode) {
        case AlphaMode::min_req: return min_requirements_alpha(grid_code, gains);
        case AlphaMode::max_lim: return max_limits_alpha(grid_code, device_limits, gains);
        case AlphaMode::explicit_values:
            if (!explicit_alpha)
                throw std::invalid_argument("config: explicit alpha mode without alpha values");
            return *explicit_alpha;
    }
    throw std::logic_error("unreachable alpha mode");
}

void validate_config(const ScenarioConfig& config) {
    validate_grid_code(config.grid_code);
    validate_device_limits(config.device_limits);
    validate_device_model(config.device_model);
    validate_gains(config.gains);
    validate_tolerance(config.tolerance);
    if (config.order < 1 || config.order > 10)
        throw std::invalid_argument("config: order must be in [1, 10]");
    if (!(config.horizon_s > 0.0)) throw std::invalid_argument("config: horizon must be positive");
    if (config.dt && !(*config.dt > 0.0))
        throw std::invalid_argument("config: dt must be positive");
    if (!std::isfinite(config.frequency_step_pu) || !std::isfinite(config.voltage_step_pu))
        throw std::invalid_argument("config: steps must be finite");
    for (const auto& name : config.baselines) {
        if (name != "vi-fast" && name != "vi-slow")
            throw std::invalid_argument("config: unknown baseline \"" + name + "\"");
    }
    if (config.alpha_mode == AlphaMode::explicit_values) {
        if (!config.explicit_alpha)
            throw std::invalid_argument("config: explicit alpha mode without alpha values");
        validate_alpha_structure(*config.explicit_alpha);
    }
}

ScenarioConfig parse_config(const std::string& json_text) {
    json root;
    try {
        root = json::parse(json_text);
    } catch (const json::parse_error& err) {
        throw std::invalid_argument(std::string("config: malformed JSON: ") + err.what());
    }
    if (!root.is_object()) throw std::invalid_argument("config: top level must be an object");
    reject_unknown(root,
                   {"grid_code", "device_limits", "device_model", "gains", "alpha", "order",
                    "steps", "sim", "tolerance", "baselines", "output_dir", "superimposed",
                    "minreal_tol"},
                   "top level");

    ScenarioConfig c;

    if (root.contains("grid_code")) {
        const auto& g = root["grid_code"];
        reject_unknown(g,
                       {"t_i_max_fcr", "t_a_max_fcr", "t_90_max_vq", "t_100_max_vq",
                        "t_a_max_ffr", "t_d_min_ffr", "t_r_min_ffr", "x_peak_ffr"},
                       "grid_code");
        c.grid_code.t_i_max_fcr = num(g, "t_i_max_fcr", c.grid_code.t_i_max_fcr);
        c.grid_code.t_a_max_fcr = num(g, "t_a_max_fcr", c.grid_code.t_a_max_fcr);
        c.grid_code.t_90_max_vq = num(g, "t_90_max_vq", c.grid_code.t_90_max_vq);
        c.grid_code.t_100_max_vq = num(g, "t_100_max_vq", c.grid_code.t_100_max_vq);
        c.grid_code.t_a_max_ffr = num(g, "t_a_max_ffr", c.grid_code.t_a_max_ffr);
        c.grid_code.t_d_min_ffr = num(g, "t_d_min_ffr", c.grid_code.t_d_min_ffr);
        c.grid_code.t_r_min_ffr = num(g, "t_r_min_ffr", c.grid_code.t_r_min_ffr);
        c.grid_code.x_peak_ffr = num(g, "x_peak_ffr", c.grid_code.x_peak_ffr);
    }
    if (root.contains("device_limits")) {
        const auto& d = root["device_limits"];
        reject_unknown(d, {"r_max_p", "r_max_q", "t_d_max_ffr", "t_r_max_ffr", "m_max_p"},
                       "device_limits");
        c.device_limits.r_max_p = num(d, "r_max_p", c.device_limits.r_max_p);
        c.device_limits.r_max_q = num(d, "r_max_q", c.device_limits.r_max_q);
        c.device_limits.t_d_max_ffr = num(d, "t_d_max_ffr", c.device_limits.t_d_max_ffr);
        c.device_limits.t_r_max_ffr = num(d, "t_r_max_ffr", c.device_limits.t_r_max_ffr);
        c.device_limits.m_max_p = num(d, "m_max_p", c.device_limits.m_max_p);
    }
    if (root.contains("device_model")) {
        const auto& d = root["device_model"];
        reject_unknown(d, {"tau_dc", "i_dc_sat", "i_dc_0", "kp_p", "ki_p"}, "device_model");
        c.device_model.tau_dc = num(d, "tau_dc", c.device_model.tau_dc);
        c.device_model.i_dc_sat = num(d, "i_dc_sat", c.device_model.i_dc_sat);
        c.device_model.i_dc_0 = num(d, "i_dc_0", c.device_model.i_dc_0);
        c.device_model.kp_p = num(d, "kp_p", c.device_model.kp_p);
        c.device_model.ki_p = num(d, "ki_p", c.device_model.ki_p);
    }
    if (root.contains("gains")) {
        const auto& g = root["gains"];
        reject_unknown(g, {"d_p", "k_p_ffr", "d_q"}, "gains");
        c.gains.d_p = num(g, "d_p", c.gains.d_p);
        c.gains.k_p_ffr = num(g, "k_p_ffr", c.gains.k_p_ffr);
        c.gains.d_q = num(g, "d_q", c.gains.d_q);
    }
    if (root.contains("alpha")) {
        const auto& a = root["alpha"];
        reject_unknown(a,
                       {"mode", "t_i_fcr", "t_a_fcr", "t_90_vq", "t_100_vq", "t_a_ffr", "t_d_ffr",
                        "t_r_ffr", "p_ffr_peak"},
                       "alpha");
        if (a.contains("mode")) c.alpha_mode = alpha_mode_from_string(a["mode"].get<std::string>());
        if (c.alpha_mode == AlphaMode::explicit_values) {
            AlphaParams alpha;
            alpha.t_i_fcr = num(a, "t_i_fcr", 0.0);
            alpha.t_a_fcr = num(a, "t_a_fcr", 0.0);
            alpha.t_90_vq = num(a, "t_90_vq", 0.0);
            alpha.t_100_vq = num(a, "t_100_vq", 0.0);
            alpha.t_a_ffr = num(a, "t_a_ffr", 0.0);
            alpha.t_d_ffr = num(a, "t_d_ffr", 0.0);
            alpha.t_r_ffr = num(a, "t_r_ffr", 0.0);
            alpha.p_ffr_peak = num(a, "p_ffr_peak", 0.0);
            c.explicit_alpha = alpha;
        }
    }
    if (root.contains("order")) {
        if (!root["order"].is_number_integer())
            throw std::invalid_argument("config: order must be an integer");
        c.order = root["order"].get<int>();
    }
    if (root.contains("steps")) {
        const auto& s = root["steps"];
        reject_unknown(s, {"frequency_pu", "voltage_pu"}, "steps");
        c.frequency_step_pu = num(s, "frequency_pu", c.frequency_step_pu);
        c.voltage_step_pu = num(s, "voltage_pu", c.voltage_step_pu);
    }
    if (root.contains("sim")) {
        const auto& s = root["sim"];
        reject_unknown(s, {"horizon_s", "dt"}, "sim");
        c.horizon_s = num(s, "horizon_s", c.horizon_s);
        if (s.contains("dt")) {
            if (s["dt"].is_string()) {
                if (s["dt"].get<std::string>() != "auto")
                    throw std::invalid_argument("config: dt must be a number or \"auto\"");
            } else {
                c.dt = num(s, "dt", 0.0);
            }
        }
    }
    if (root.contains("tolerance")) {
        const auto& t = root["tolerance"];
        reject_unknown(t, {"band", "timing_s", "corridor", "kink_exclusion_s", "dwell_samples"},
                       "tolerance");
        c.tolerance.band = num(t, "band", c.tolerance.band);
        c.tolerance.timing_s = num(t, "timing_s", c.tolerance.timing_s);
        c.tolerance.corridor = num(t, "corridor", c.tolerance.corridor);
        c.tolerance.kink_exclusion_s = num(t, "kink_exclusion_s", c.tolerance.kink_exclusion_s);
        if (t.contains("dwell_samples")) c.tolerance.dwell_samples = t["dwell_samples"].get<int>();
    }
    if (root.contains("baselines")) {
        if (!root["baselines"].is_array())
            throw std::invalid_argument("config: baselines must be an array of names");
        c.baselines.clear();
        for (const auto& b : root["baselines"]) c.baselines.push_back(b.get<std::string>());
    }
    if (root.contains("output_dir")) c.output_dir = root["output_dir"].get<std::string>();
    if (root.contains("superimposed")) c.superimposed = root["superimposed"].get<bool>();
    if (root.contains("minreal_tol")) c.minreal_tol = num(root, "minreal_tol", 0.0);

    validate_config(c);
    return c;
}

ScenarioConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("config: cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

std::string config_to_json(const ScenarioConfig& c) {
    json root;
    root["grid_code"] = {{"t_i_max_fcr", c.grid_code.t_i_max_fcr},
                         {"t_a_max_fcr", c.grid_code.t_a_max_fcr},
                         {"t_90_max_vq", c.grid_code.t_90_max_vq},
                         {"t_100_max_vq", c.grid_code.t_100_max_vq},
                         {"t_a_max_ffr", c.grid_code.t_a_max_ffr},
                         {"t_d_min_ffr", c.grid_code.t_d_min_ffr},
                         {"t_r_min_ffr", c.grid_code.t_r_min_ffr},
                         {"x_peak_ffr", c.grid_code.x_peak_ffr}};
    root["device_limits"] = {{"r_max_p", c.device_limits.r_max_p},
                             {"r_max_q", c.device_limits.r_max_q},
                             {"t_d_max_ffr", c.device_limits.t_d_max_ffr},
                             {"t_r_max_ffr", c.device_limits.t_r_max_ffr},
                             {"m_max_p", c.device_limits.m_max_p}};
    root["device_model"] = {{"tau_dc", c.device_model.tau_dc},
                            {"i_dc_sat", c.device_model.i_dc_sat},
                            {"i_dc_0", c.device_model.i_dc_0},
                            {"kp_p", c.device_model.kp_p},
                            {"ki_p", c.device_model.ki_p}};
    root["gains"] = {{"d_p", c.gains.d_p}, {"k_p_ffr", c.gains.k_p_ffr}, {"d_q", c.gains.d_q}};
    root["alpha"] = {{"mode", to_string(c.alpha_mode)}};
    if (c.alpha_mode == AlphaMode::explicit_values && c.explicit_alpha) {
        const auto& a = *c.explicit_alpha;
        root["alpha"]["t_i_fcr"] = a.t_i_fcr;
        root["alpha"]["t_a_fcr"] = a.t_a_fcr;
        root["alpha"]["t_90_vq"] = a.t_90_vq;
        root["alpha"]["t_100_vq"] = a.t_100_vq;
        root["alpha"]["t_a_ffr"] = a.t_a_ffr;
        root["alpha"]["t_d_ffr"] = a.t_d_ffr;
        root["alpha"]["t_r_ffr"] = a.t_r_ffr;
        root["alpha"]["p_ffr_peak"] = a.p_ffr_peak;
    }
    root["order"] = c.order;
    root["steps"] = {{"frequency_pu", c.frequency_step_pu}, {"voltage_pu", c.voltage_step_pu}};
    root["sim"] = {{"horizon_s", c.horizon_s}};
    if (c.dt)
        root["sim"]["dt"] = *c.dt;
    else
        root["sim"]["dt"] = "auto";
    root["tolerance"] = {{"band", c.tolerance.band},
                         {"timing_s", c.tolerance.timing_s},
                         {"corridor", c.tolerance.corridor},
                         {"kink_exclusion_s", c.tolerance.kink_exclusion_s},
                         {"dwell_samples", c.tolerance.dwell_samples}};
    root["baselines"] = c.baselines;
    root["output_dir"] = c.output_dir;
    root["superimposed"] = c.superimposed;
    if (c.minreal_tol) root["minreal_tol"] = *c.minreal_tol;
    return root.dump(2) + "\n";
}

}  // namespace gridtf
