#include "jamcov/optimizer.hpp"

#include <cmath>

#include "jamcov/errors.hpp"
#include "jamcov/parallel.hpp"
#include "jamcov/util.hpp"

namespace jamcov {

namespace {

std::vector<double> uniform_grid(double upper, double step) {
    const std::size_t count = static_cast<std::size_t>(std::floor(upper / step + 1e-9));
    std::vector<double> values(count + 1);
    for (std::size_t i = 0; i <= count; ++i) {
        values[i] = std::min(static_cast<double>(i) * step, upper);
    }
    return values;
}

Scenario with_symmetric_opening(const Scenario& scenario, double theta) {
    Scenario variant = scenario;
    variant.jammers.theta_j1_deg = rad_to_deg(theta / 2.0);
    variant.jammers.theta_j2_deg = variant.jammers.theta_j1_deg;
    return variant;
}

DeltaEvaluator evaluator_for(const Scenario& scenario, const NodeLayout& layout,
                             const TransmitPowers& powers) {
    return DeltaEvaluator(layout, powers, scenario.env, scenario.rate_rs,
                          scenario.region.exclusion_radius);
}

}  // namespace

void SweepResult::finalize_argmax() {
    if (metric_values.empty()) {
        throw InvalidParameterError("sweep produced no rows");
    }
    argmax_index = 0;
    for (std::size_t i = 1; i < metric_values.size(); ++i) {
        if (metric_values[i] > metric_values[argmax_index]) {
            argmax_index = i;
        }
    }
}

double scenario_wsc(const Scenario& scenario, DeltaKind kind, unsigned workers) {
    return wsc(delta_field(scenario, scenario.region, kind, workers));
}

double f_theta(const Scenario& scenario, double theta) {
    if (!(theta >= 0.0 && theta <= kPi)) {
        throw InvalidParameterError("f_theta: opening angle must lie in [0, pi], got " +
                                    format_double(theta));
    }
    const Scenario variant = with_symmetric_opening(scenario, theta);
    const DeltaEvaluator evaluator =
        evaluator_for(variant, variant.layout(), variant.powers);
    const double r = variant.jammers.r_j;
    return evaluator.delta_bar_at({0.0, +r}) + evaluator.delta_bar_at({0.0, -r}) +
           evaluator.delta_bar_at({-r, 0.0});
}

SweepResult optimize_theta(const Scenario& scenario, double theta_grid_step, unsigned workers) {
    if (!(theta_grid_step > 0.0)) {
        throw InvalidParameterError("optimize_theta: grid step must be positive");
    }
    const std::vector<double> grid = uniform_grid(kPi, theta_grid_step);

    SweepResult result;
    result.axis_name = "theta_deg";
    result.metric_name = "f_theta";
    result.axis_values.resize(grid.size());
    result.metric_values.resize(grid.size());
    parallel_for(grid.size(), workers, [&](std::size_t i) {
        result.axis_values[i] = rad_to_deg(grid[i]);
        result.metric_values[i] = f_theta(scenario, grid[i]);
    });
    result.finalize_argmax();
    return result;
}

SweepResult theta_wsc_curve(const Scenario& scenario, double theta_grid_step, DeltaKind kind,
                            unsigned workers) {
    if (!(theta_grid_step > 0.0)) {
        throw InvalidParameterError("theta_wsc_curve: grid step must be positive");
    }
    const std::vector<double> grid = uniform_grid(kPi, theta_grid_step);

    SweepResult result;
    result.axis_name = "theta_deg";
    result.metric_name = "wsc";
    result.axis_values.resize(grid.size());
    result.metric_values.resize(grid.size());
    parallel_for(grid.size(), workers, [&](std::size_t i) {
        const Scenario variant = with_symmetric_opening(scenario, grid[i]);
        result.axis_values[i] = rad_to_deg(grid[i]);
        result.metric_values[i] = scenario_wsc(variant, kind, 1);
    });
    result.finalize_argmax();
    return result;
}

SweepResult sweep_power_ratio(const Scenario& scenario, const PowerBudget& budget,
                              std::span<const double> ratios, DeltaKind kind,
                              unsigned workers) {
    budget.validate();
    if (ratios.empty()) {
        throw InvalidParameterError("sweep_power_ratio: empty ratio list");
    }

    SweepResult result;
    result.axis_name = "jammer_ratio";
    result.metric_name = "wsc";
    result.axis_values.assign(ratios.begin(), ratios.end());
    result.metric_values.resize(ratios.size());
    parallel_for(ratios.size(), workers, [&](std::size_t i) {
        PowerBudget split = budget;
        split.jammer_ratio = ratios[i];
        Scenario variant = scenario;
        variant.budget = split;
        variant.powers = split.resolve();
        result.metric_values[i] = scenario_wsc(variant, kind, 1);
    });
    result.finalize_argmax();
    return result;
}

SweepResult sweep_height(const Scenario& scenario, std::span<const double> heights,
                         std::span<const double> angles_deg, DeltaKind kind,
                         unsigned workers) {
    if (heights.empty() || angles_deg.empty()) {
        throw InvalidParameterError("sweep_height: empty axis list");
    }
    TransmitPowers solo = scenario.powers;
    solo.gamma_j2 = 0.0;

    const std::size_t rows = heights.size() * angles_deg.size();
    SweepResult result;
    result.axis_name = "angle_deg";
    result.metric_name = "wsc";
    result.axis_values.resize(rows);
    result.metric_values.resize(rows);
    result.extra_columns = {{"z_j", std::vector<double>(rows)}};

    parallel_for(rows, workers, [&](std::size_t i) {
        const std::size_t h = i / angles_deg.size();
        const std::size_t a = i % angles_deg.size();
        const Point2D ground = polar_point(scenario.jammers.r_j, deg_to_rad(angles_deg[a]));
        // The silenced jammer shares the active jammer's position so the
        // layout stays on one orbit.
        const NodeLayout layout =
            make_layout(scenario.d_ab, ground, ground, heights[h], heights[h]);
        const DeltaEvaluator evaluator = evaluator_for(scenario, layout, solo);
        const DeltaField field = delta_field(evaluator, scenario.region, kind, 1);
        result.axis_values[i] = angles_deg[a];
        result.metric_values[i] = wsc(field);
        result.extra_columns[0].second[i] = heights[h];
    });
    result.finalize_argmax();
    return result;
}

SweepResult sweep_angle_pairs(const Scenario& scenario, std::span<const double> rj_values,
                              double angle_step, DeltaKind kind, unsigned workers) {
    if (rj_values.empty()) {
        throw InvalidParameterError("sweep_angle_pairs: empty orbit radius list");
    }
    if (!(angle_step > 0.0)) {
        throw InvalidParameterError("sweep_angle_pairs: angle step must be positive");
    }
    const std::vector<double> grid = uniform_grid(kPi, angle_step);

    struct BestOfRow {
        double wsc = 0.0;
        double theta_j2 = 0.0;
    };
    // One task per (orbit radius, theta_j1) row; theta_j2 scans serially
    // inside so the per-row argmax keeps the smallest-angle tie-break.
    const std::size_t rows = rj_values.size() * grid.size();
    std::vector<BestOfRow> row_best(rows);
    parallel_for(rows, workers, [&](std::size_t i) {
        const std::size_t r = i / grid.size();
        const std::size_t t1 = i % grid.size();
        BestOfRow best;
        bool first = true;
        for (double theta_j2 : grid) {
            const NodeLayout layout =
                place_nodes(scenario.d_ab, rj_values[r], {grid[t1], theta_j2},
                            scenario.jammers.z_j1, scenario.jammers.z_j2);
            const DeltaEvaluator evaluator = evaluator_for(scenario, layout, scenario.powers);
            const double value = wsc(delta_field(evaluator, scenario.region, kind, 1));
            if (first || value > best.wsc) {
                best = {value, theta_j2};
                first = false;
            }
        }
        row_best[i] = best;
    });

    SweepResult result;
    result.axis_name = "r_j";
    result.metric_name = "wsc";
    result.axis_values.assign(rj_values.begin(), rj_values.end());
    result.metric_values.resize(rj_values.size());
    result.extra_columns = {{"theta_j1_deg", std::vector<double>(rj_values.size())},
                            {"theta_j2_deg", std::vector<double>(rj_values.size())}};
    for (std::size_t r = 0; r < rj_values.size(); ++r) {
        std::size_t best_t1 = 0;
        for (std::size_t t1 = 1; t1 < grid.size(); ++t1) {
            if (row_best[r * grid.size() + t1].wsc > row_best[r * grid.size() + best_t1].wsc) {
                best_t1 = t1;
            }
        }
        const BestOfRow& best = row_best[r * grid.size() + best_t1];
        result.metric_values[r] = best.wsc;
        result.extra_columns[0].second[r] = rad_to_deg(grid[best_t1]);
        result.extra_columns[1].second[r] = rad_to_deg(best.theta_j2);
    }
    result.finalize_argmax();
    return result;
}

}  // namespace jamcov
