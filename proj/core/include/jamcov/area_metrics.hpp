#pragma once

#include <functional>
#include <vector>

#include "jamcov/evaluator.hpp"
#include "jamcov/region.hpp"
#include "jamcov/scenario.hpp"

namespace jamcov {

struct CellSample {
    Point2D eve{};
    double r = 0.0;
    double phi = 0.0;
    double delta_value = 0.0;
    double cell_area = 0.0;
};

// Sampled improvement surface over the region: one sample per polar cell,
// cell areas summing to total_area.
struct DeltaField {
    std::vector<CellSample> samples;
    double total_area = 0.0;
};

// Evaluates delta (or delta_bar) on the midpoint polar grid of the region:
// radial midpoints between exclusion_radius and radius_s, angular midpoints
// on [0, 2pi), cell_area = r * dr * dphi. Cell evaluation runs in parallel;
// samples land in indexed slots so results do not depend on worker count.
DeltaField delta_field(const Scenario& scenario, const RegionSpec& region, DeltaKind kind,
                       unsigned workers = 0);

// Same grid for a prebuilt evaluator; the workhorse behind layout sweeps
// that step outside the scenario's own jammer parameterization.
DeltaField delta_field(const DeltaEvaluator& evaluator, const RegionSpec& region,
                       DeltaKind kind, unsigned workers = 0);

// Same grid, arbitrary integrand; the building block behind analytic
// integration checks and custom surfaces.
DeltaField field_from_function(const RegionSpec& region,
                               const std::function<double(Point2D)>& fn);

// Total area where the improvement strictly exceeds 1.
double coverage(const DeltaField& field);

// Area-average of the improvement over the whole region.
double efficiency(const DeltaField& field);

// Weighted secrecy coverage: coverage(field) * efficiency(field).
double wsc(const DeltaField& field);

}  // namespace jamcov
