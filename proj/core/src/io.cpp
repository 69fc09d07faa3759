#include "gridtf/io.hpp"

#include <nlohmann/json.hpp>

#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace gridtf {

using json = nlohmann::ordered_json;

namespace {

std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

json finite_or_string(double v) {
    // JSON has no infinity; violation slacks can be unbounded.
    if (std::isfinite(v)) return v;
    return v > 0 ? "inf" : "-inf";
}

json tf_to_json(const RationalTF& tf) {
    json out;
    out["num"] = tf.num.coeffs();
    out["den"] = tf.den.coeffs();
    out["dc_gain"] = tf.den[0] != 0.0 ? json(dc_gain(tf)) : json("pole-at-origin");
    out["stable"] = is_stable(tf);
    json pole_list = json::array();
    for (const auto& p : poles(tf)) pole_list.push_back({p.real(), p.imag()});
    out["poles"] = pole_list;
    return out;
}

json tolerances_to_json(const ToleranceSpec& tol) {
    return {{"band", tol.band},
            {"timing_s", tol.timing_s},
            {"corridor", tol.corridor},
            {"kink_exclusion_s", tol.kink_exclusion_s},
            {"dwell_samples", tol.dwell_samples}};
}

}  // namespace

std::string trajectory_to_csv(const Trajectory& traj) {
    validate_trajectory(traj);
    std::string out = "t," + (traj.label.empty() ? std::string("y") : traj.label) + "\n";
    for (std::size_t k = 0; k < traj.samples.size(); ++k) {
        out += format_double(traj.time_at(k));
        out += ',';
        out += format_double(traj.samples[k]);
        out += '\n';
    }
    return out;
}

void write_trajectory_csv(const Trajectory& traj, const std::string& path) {
    write_text_file(trajectory_to_csv(traj), path);
}

std::string synth_document_to_json(const SynthDocument& doc) {
    json root;
    root["order"] = doc.order;
    root["alpha"] = {{"t_i_fcr", doc.alpha.t_i_fcr},   {"t_a_fcr", doc.alpha.t_a_fcr},
                     {"t_90_vq", doc.alpha.t_90_vq},   {"t_100_vq", doc.alpha.t_100_vq},
                     {"t_a_ffr", doc.alpha.t_a_ffr},   {"t_d_ffr", doc.alpha.t_d_ffr},
                     {"t_r_ffr", doc.alpha.t_r_ffr},   {"p_ffr_peak", doc.alpha.p_ffr_peak}};
    root["gains"] = {{"d_p", doc.gains.d_p}, {"k_p_ffr", doc.gains.k_p_ffr}, {"d_q", doc.gains.d_q}};
    root["fp"] = tf_to_json(doc.fp);
    root["fp_fcr"] = tf_to_json(doc.fp_fcr);
    root["fp_ffr"] = tf_to_json(doc.fp_ffr);
    root["vq"] = tf_to_json(doc.vq);
    if (doc.minreal_tol) {
        root["fp"]["minreal"] = tf_to_json(minreal(doc.fp, *doc.minreal_tol));
        root["vq"]["minreal"] = tf_to_json(minreal(doc.vq, *doc.minreal_tol));
        root["minreal_tol"] = *doc.minreal_tol;
    }
    return root.dump(2) + "\n";
}

LoadedTF synth_document_from_json(const std::string& json_text) {
    const json root = json::parse(json_text);
    auto read_tf = [](const json& node) {
        return RationalTF::make(Polynomial(node["num"].get<std::vector<double>>()),
                                Polynomial(node["den"].get<std::vector<double>>()));
    };
    return {read_tf(root.at("fp")), read_tf(root.at("vq"))};
}

std::string violation_report_to_json(const ViolationReport& report) {
    json root;
    root["feasible"] = report.feasible;
    json list = json::array();
    for (const auto& c : report.constraints) {
        list.push_back({{"id", c.id},
                        {"detail", c.detail},
                        {"value", finite_or_string(c.value)},
                        {"lower", finite_or_string(c.lower)},
                        {"upper", finite_or_string(c.upper)},
                        {"slack", finite_or_string(c.slack)},
                        {"satisfied", c.satisfied}});
    }
    root["constraints"] = list;
    return root.dump(2) + "\n";
}

std::string compliance_reports_to_json(const std::vector<ComplianceReport>& reports,
                                       const std::string& scenario) {
    json root;
    root["scenario"] = scenario;
    bool all = true;
    json list = json::array();
    for (const auto& r : reports) {
        json entry;
        entry["service"] = r.service;
        entry["capacity"] = r.capacity;
        entry["step_magnitude"] = r.step_magnitude;
        entry["tolerances"] = tolerances_to_json(r.tolerances);
        json checks = json::array();
        for (const auto& e : r.entries) {
            checks.push_back({{"id", e.id},
                              {"detail", e.detail},
                              {"measured", finite_or_string(e.measured)},
                              {"bound", finite_or_string(e.bound)},
                              {"margin", finite_or_string(e.margin)},
                              {"pass", e.pass}});
        }
        entry["entries"] = checks;
        entry["pass"] = r.pass;
        list.push_back(entry);
        all = all && r.pass;
    }
    root["checks"] = list;
    root["pass"] = all;
    return root.dump(2) + "\n";
}

std::string compliance_summary_table(
    const std::vector<std::pair<std::string, std::vector<ComplianceReport>>>& scenarios) {
    std::ostringstream out;
    out << std::left;
    for (const auto& [name, reports] : scenarios) {
        bool all = true;
        for (const auto& r : reports) all = all && r.pass;
        out << "scenario " << name << ": " << (all ? "PASS" : "FAIL") << "\n";
        for (const auto& r : reports) {
            out << "  [" << (r.pass ? "pass" : "FAIL") << "] " << r.service << "\n";
            for (const auto& e : r.entries) {
                out << "    " << (e.pass ? "  ok  " : " FAIL ") << std::setw(22) << e.id
                    << " measured=" << format_double(e.measured)
                    << " bound=" << format_double(e.bound) << "\n";
            }
        }
    }
    return out.str();
}

void write_text_file(const std::string& text, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
    if (!out) throw std::runtime_error("failed while writing " + path);
}

}  // namespace gridtf
