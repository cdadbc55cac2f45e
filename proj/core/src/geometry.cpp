#include "jamcov/geometry.hpp"

#include <cmath>
#include <string>

#include "jamcov/errors.hpp"
#include "jamcov/util.hpp"

namespace jamcov {

double horizontal_distance(Point2D p, Point2D q) {
    return std::hypot(p.x - q.x, p.y - q.y);
}

Point2D polar_point(double radius, double phi) {
    return {radius * std::cos(phi), radius * std::sin(phi)};
}

NodeLayout place_nodes(double d_ab, double r_j, JammerAngles angles, double z_j1, double z_j2) {
    if (!(d_ab > 0.0)) {
        throw InvalidParameterError("place_nodes: d_ab must be positive, got " +
                                    format_double(d_ab));
    }
    if (!(r_j > 0.0)) {
        throw InvalidParameterError("place_nodes: r_j must be positive, got " +
                                    format_double(r_j));
    }
    if (!(angles.theta_j1 >= 0.0 && angles.theta_j1 <= kPi) ||
        !(angles.theta_j2 >= 0.0 && angles.theta_j2 <= kPi)) {
        throw InvalidParameterError("place_nodes: jammer angles must lie in [0, pi]");
    }
    if (!(z_j1 > 0.0) || !(z_j2 > 0.0)) {
        throw InvalidParameterError("place_nodes: jammer heights must be positive");
    }

    NodeLayout layout;
    layout.alice = {0.0, 0.0};
    layout.bob = {d_ab, 0.0};
    layout.jammer1_ground = {-r_j * std::cos(angles.theta_j1), -r_j * std::sin(angles.theta_j1)};
    layout.jammer2_ground = {-r_j * std::cos(angles.theta_j2), +r_j * std::sin(angles.theta_j2)};
    layout.z_j1 = z_j1;
    layout.z_j2 = z_j2;
    return layout;
}

NodeLayout make_layout(double d_ab, Point2D jammer1_ground, Point2D jammer2_ground,
                       double z_j1, double z_j2) {
    if (!(d_ab > 0.0)) {
        throw InvalidParameterError("make_layout: d_ab must be positive, got " +
                                    format_double(d_ab));
    }
    if (!(z_j1 > 0.0) || !(z_j2 > 0.0)) {
        throw InvalidParameterError("make_layout: jammer heights must be positive");
    }
    const Point2D origin{0.0, 0.0};
    const double r1 = horizontal_distance(jammer1_ground, origin);
    const double r2 = horizontal_distance(jammer2_ground, origin);
    if (!(r1 > 0.0) || !(r2 > 0.0)) {
        throw InvalidParameterError("make_layout: jammer grounds must be off the origin");
    }
    if (std::abs(r1 - r2) > 1e-9 * std::max(r1, r2)) {
        throw InvalidParameterError("make_layout: jammer grounds must share one orbit radius");
    }

    NodeLayout layout;
    layout.alice = origin;
    layout.bob = {d_ab, 0.0};
    layout.jammer1_ground = jammer1_ground;
    layout.jammer2_ground = jammer2_ground;
    layout.z_j1 = z_j1;
    layout.z_j2 = z_j2;
    return layout;
}

}  // namespace jamcov
