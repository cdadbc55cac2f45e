#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "jamcov/area_metrics.hpp"
#include "jamcov/scenario.hpp"

namespace jamcov {

// One sweep curve: axis values with their metric values, optional companion
// columns (grouping labels, per-point argument pairs), and the argmax. Rows
// are stored with the axis ascending inside each group; the argmax is the
// first row attaining the maximum, so ties resolve toward the smallest axis
// value.
struct SweepResult {
    std::string axis_name;
    std::string metric_name;
    std::vector<double> axis_values;
    std::vector<double> metric_values;
    std::vector<std::pair<std::string, std::vector<double>>> extra_columns;
    std::size_t argmax_index = 0;

    double argmax_value() const { return axis_values.at(argmax_index); }
    double argmax_metric() const { return metric_values.at(argmax_index); }

    // Recomputes argmax_index by first-maximum scan; call after filling rows.
    void finalize_argmax();
};

// Scenario WSC under one improvement-metric choice; the shared kernel of the
// sweeps below. Orbit-angle sweeps default to the delta-based WSC; the
// opening-angle optimization uses delta_bar (see optimize_theta).
double scenario_wsc(const Scenario& scenario, DeltaKind kind, unsigned workers = 0);

// Surrogate objective for the opening angle theta = theta_j1 + theta_j2 with
// symmetric jammers: the sum of delta_bar at the three orbit probes
// (0, +r_j), (0, -r_j) and (-r_j, 0).
double f_theta(const Scenario& scenario, double theta);

// Exhaustive maximization of f_theta on a uniform grid over [0, pi].
SweepResult optimize_theta(const Scenario& scenario, double theta_grid_step,
                           unsigned workers = 0);

// Full WSC curve over the same opening-angle grid; the expensive reference
// the surrogate is judged against.
SweepResult theta_wsc_curve(const Scenario& scenario, double theta_grid_step,
                            DeltaKind kind = DeltaKind::delta_bar, unsigned workers = 0);

// WSC versus the jammer power split under a fixed total budget. Ratio 0 puts
// the whole jamming budget on jammer 1, ratio 1 splits it evenly.
SweepResult sweep_power_ratio(const Scenario& scenario, const PowerBudget& budget,
                              std::span<const double> ratios,
                              DeltaKind kind = DeltaKind::delta, unsigned workers = 0);

// Single-jammer study: WSC per (height, orbit angle), the second jammer
// silenced. Orbit angles are degrees counterclockwise from east, so 180 is
// directly behind Alice. Rows group by height; the height column is emitted
// alongside the angle axis.
SweepResult sweep_height(const Scenario& scenario, std::span<const double> heights,
                         std::span<const double> angles_deg,
                         DeltaKind kind = DeltaKind::delta, unsigned workers = 0);

// Per orbit radius, exhaustive search over the half-angle pair grid; reports
// the maximizing (theta_j1, theta_j2) in degrees and its WSC.
SweepResult sweep_angle_pairs(const Scenario& scenario, std::span<const double> rj_values,
                              double angle_step, DeltaKind kind = DeltaKind::delta,
                              unsigned workers = 0);

}  // namespace jamcov
