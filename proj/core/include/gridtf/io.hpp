#pragma once

#include "gridtf/compliance.hpp"
#include "gridtf/gridcode.hpp"
#include "gridtf/rational.hpp"
#include "gridtf/simulate.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gridtf {

/// CSV export: header "t,<label>", one row per sample, shortest
/// round-trippable doubles. Identical inputs give byte-identical files.
std::string trajectory_to_csv(const Trajectory& traj);
void write_trajectory_csv(const Trajectory& traj, const std::string& path);

/// Transfer-function document: ascending coefficient arrays with monic
/// denominators, pole lists, DC gains.
struct SynthDocument {
    int order = 0;
    AlphaParams alpha;
    GainSpec gains;
    RationalTF fp;      // superimposed FCR + FFR channel
    RationalTF fp_fcr;  // per-service components
    RationalTF fp_ffr;
    RationalTF vq;
    std::optional<double> minreal_tol;
};

std::string synth_document_to_json(const SynthDocument& doc);
/// Reads the coefficient arrays back out of a synth document.
struct LoadedTF {
    RationalTF fp;
    RationalTF vq;
};
LoadedTF synth_document_from_json(const std::string& json_text);

std::string violation_report_to_json(const ViolationReport& report);
std::string compliance_reports_to_json(const std::vector<ComplianceReport>& reports,
                                       const std::string& scenario);

/// Plain-text summary table of per-entry results for the CLI.
std::string compliance_summary_table(
    const std::vector<std::pair<std::string, std::vector<ComplianceReport>>>& scenarios);

void write_text_file(const std::string& text, const std::string& path);

}  // namespace gridtf
