#include "gridtf/commands.hpp"

#include "gridtf/baselines.hpp"
#include "gridtf/io.hpp"

#include <filesystem>
#include <ostream>

namespace gridtf {

namespace {

namespace fs = std::filesystem;

fs::path ensure_outdir(const ScenarioConfig& config) {
    fs::path dir(config.output_dir);
    fs::create_directories(dir);
    return dir;
}

std::string scenario_name(const ScenarioConfig& config) { return to_string(config.alpha_mode); }

struct ScenarioRun {
    Trajectory dp;       // active power response to the frequency step
    Trajectory dq;       // reactive power response to the voltage step
    TrackingResult loop; // reduced-order actuator path for the fp channel
};

/// Responses follow the grid convention dp = -T_fp df, dq = -T_vq dv.
ScenarioRun run_scenario(const RationalTF& fp, const RationalTF& vq,
                         const ScenarioConfig& config) {
    ScenarioRun run;
    run.dp = step_response(fp, -config.frequency_step_pu, config.horizon_s, config.dt, "dp");
    run.dq = step_response(vq, -config.voltage_step_pu, config.horizon_s, config.dt, "dq");
    run.loop =
        simulate_tracking_loop(fp, config.device_model, -config.frequency_step_pu,
                               config.horizon_s);
    return run;
}

void write_run_csvs(const ScenarioRun& run, const std::string& name, const fs::path& dir) {
    write_trajectory_csv(run.dp, (dir / (name + "_dp.csv")).string());
    write_trajectory_csv(run.dq, (dir / (name + "_dq.csv")).string());
    write_trajectory_csv(run.loop.i_dc_ref, (dir / (name + "_idc_ref.csv")).string());
    write_trajectory_csv(run.loop.achieved_power, (dir / (name + "_dp_achieved.csv")).string());
}

void write_reference_csvs(const AlphaParams& alpha, const GainSpec& gains,
                          const ScenarioConfig& config, const std::string& name,
                          const fs::path& dir) {
    const auto fcr = build_fcr_curve(gains, alpha.t_i_fcr, alpha.t_a_fcr);
    const auto ffr = build_ffr_curve(gains, alpha.t_a_ffr, alpha.t_d_ffr, alpha.t_r_ffr,
                                     alpha.p_ffr_peak);
    const auto vq = build_vq_curve(gains, alpha.t_90_vq, alpha.t_100_vq);
    const double dt = config.horizon_s / 2000.0;
    auto fp_curve = scale_curve(superimpose(fcr, ffr), config.frequency_step_pu);
    auto vq_curve = scale_curve(vq, config.voltage_step_pu);
    write_trajectory_csv(sample_curve(fp_curve, config.horizon_s, dt, "dp_ref"),
                         (dir / (name + "_dp_ref.csv")).string());
    write_trajectory_csv(sample_curve(vq_curve, config.horizon_s, dt, "dq_ref"),
                         (dir / (name + "_dq_ref.csv")).string());
}

const char* kPlotScript =
    "# gnuplot script for the exported trajectories\n"
    "set datafile separator ','\n"
    "set key autotitle columnhead\n"
    "set xlabel 't [s]'\n"
    "plot for [f in system('ls *_dp.csv *_dp_ref.csv 2>/dev/null')] f using 1:2 with lines\n"
    "pause -1\n";

int refuse_if_infeasible(const ScenarioConfig& config, bool force, std::ostream& out) {
    const AlphaParams alpha = config.resolve_alpha();
    const auto report = validate_alpha(alpha, config.gains, config.grid_code,
                                       config.device_limits, config.superimposed);
    if (!report.feasible && !force) {
        out << "curve parameters violate grid-code/device constraints; "
               "use --force to proceed\n";
        for (const auto& c : report.constraints)
            if (!c.satisfied) out << "  violated: " << c.id << " (" << c.detail << ")\n";
        return kExitConfigError;
    }
    return kExitPass;
}

std::vector<ComplianceReport> check_scenario(const ScenarioRun& run, const AlphaParams& alpha,
                                             const ScenarioConfig& config) {
    std::vector<ComplianceReport> reports;
    reports.push_back(check_fcr(run.dp, alpha, config.gains, config.grid_code, config.tolerance,
                                config.superimposed));
    Trajectory share = config.superimposed ? ffr_residual(run.dp, alpha, config.gains) : run.dp;
    reports.push_back(check_ffr(share, alpha, config.gains, config.grid_code,
                                config.device_limits, config.tolerance));
    reports.push_back(check_vq(run.dq, alpha, config.gains, config.grid_code, config.tolerance));
    return reports;
}

}  // namespace

int cmd_validate(const ScenarioConfig& config, std::ostream& out) {
    const AlphaParams alpha = config.resolve_alpha();
    const auto report = validate_alpha(alpha, config.gains, config.grid_code,
                                       config.device_limits, config.superimposed);
    const fs::path dir = ensure_outdir(config);
    write_text_file(violation_report_to_json(report), (dir / "validation.json").string());
    for (const auto& warning : grid_code_warnings(config.grid_code))
        out << "warning: " << warning << "\n";
    for (const auto& c : report.constraints) {
        out << (c.satisfied ? "  ok  " : " FAIL ") << c.id << "  " << c.detail << "\n";
    }
    out << (report.feasible ? "feasible" : "infeasible") << "\n";
    return report.feasible ? kExitPass : kExitFail;
}

int cmd_synth(const ScenarioConfig& config, bool force, std::ostream& out) {
    if (const int rc = refuse_if_infeasible(config, force, out); rc != kExitPass) return rc;
    const AlphaParams alpha = config.resolve_alpha();
    const TdesMatrix tdes = build_tdes(alpha, config.gains, config.order);

    SynthDocument doc;
    doc.order = config.order;
    doc.alpha = alpha;
    doc.gains = config.gains;
    doc.fp = tdes.fp;
    doc.fp_fcr = curve_to_tf(build_fcr_curve(config.gains, alpha.t_i_fcr, alpha.t_a_fcr),
                             config.order);
    doc.fp_ffr = curve_to_tf(build_ffr_curve(config.gains, alpha.t_a_ffr, alpha.t_d_ffr,
                                             alpha.t_r_ffr, alpha.p_ffr_peak),
                             config.order);
    doc.vq = tdes.vq;
    doc.minreal_tol = config.minreal_tol;

    const fs::path dir = ensure_outdir(config);
    write_text_file(synth_document_to_json(doc), (dir / "tdes.json").string());
    out << "wrote " << (dir / "tdes.json").string() << "\n";
    return kExitPass;
}

int cmd_simulate(const ScenarioConfig& config, bool force, std::ostream& out) {
    if (const int rc = refuse_if_infeasible(config, force, out); rc != kExitPass) return rc;
    const AlphaParams alpha = config.resolve_alpha();
    const TdesMatrix tdes = build_tdes(alpha, config.gains, config.order);
    const fs::path dir = ensure_outdir(config);
    const std::string name = scenario_name(config);

    const ScenarioRun run = run_scenario(tdes.fp, tdes.vq, config);
    write_run_csvs(run, name, dir);
    write_reference_csvs(alpha, config.gains, config, name, dir);
    if (run.loop.saturated) out << name << ": dc current reference saturation engaged\n";

    for (const auto& bname : config.baselines) {
        const auto spec = baseline_by_name(bname);
        const ScenarioRun brun =
            run_scenario(baseline_tf(*spec, Channel::fp), baseline_tf(*spec, Channel::vq), config);
        write_run_csvs(brun, bname, dir);
        if (brun.loop.saturated) out << bname << ": dc current reference saturation engaged\n";
    }
    write_text_file(kPlotScript, (dir / "plots.gp").string());
    out << "trajectories written to " << dir.string() << "\n";
    return kExitPass;
}

int cmd_check(const ScenarioConfig& config, bool force, std::ostream& out) {
    if (const int rc = refuse_if_infeasible(config, force, out); rc != kExitPass) return rc;
    const AlphaParams alpha = config.resolve_alpha();
    const TdesMatrix tdes = build_tdes(alpha, config.gains, config.order);
    const fs::path dir = ensure_outdir(config);
    const std::string name = scenario_name(config);

    std::vector<std::pair<std::string, std::vector<ComplianceReport>>> all;

    const ScenarioRun run = run_scenario(tdes.fp, tdes.vq, config);
    write_run_csvs(run, name, dir);
    write_reference_csvs(alpha, config.gains, config, name, dir);
    auto scenario_reports = check_scenario(run, alpha, config);
    write_text_file(compliance_reports_to_json(scenario_reports, name),
                    (dir / ("compliance_" + name + ".json")).string());
    all.emplace_back(name, scenario_reports);

    for (const auto& bname : config.baselines) {
        const auto spec = baseline_by_name(bname);
        const ScenarioRun brun =
            run_scenario(baseline_tf(*spec, Channel::fp), baseline_tf(*spec, Channel::vq), config);
        write_run_csvs(brun, bname, dir);
        auto reports = check_scenario(brun, alpha, config);
        write_text_file(compliance_reports_to_json(reports, bname),
                        (dir / ("compliance_" + bname + ".json")).string());
        all.emplace_back(bname, reports);
    }

    const std::string table = compliance_summary_table(all);
    write_text_file(table, (dir / "summary.txt").string());
    out << table;

    bool scenario_pass = true;
    for (const auto& r : scenario_reports) scenario_pass = scenario_pass && r.pass;
    return scenario_pass ? kExitPass : kExitFail;
}

}  // namespace gridtf
