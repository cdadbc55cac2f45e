#pragma once

namespace jamcov {

struct Point2D {
    double x = 0.0;
    double y = 0.0;
};

// Euclidean norm of p - q; symmetric, zero iff p == q.
double horizontal_distance(Point2D p, Point2D q);

// Point at (radius*cos(phi), radius*sin(phi)): the counterclockwise-from-east
// polar convention used for eavesdropper positions and orbit sampling. This
// is a different convention from JammerAngles below; both are intentional.
Point2D polar_point(double radius, double phi);

// Jammer half-angles in radians, each in [0, pi]. Measured from the ray
// behind Alice (the negative-x direction): jammer 1 opens clockwise into
// y < 0, jammer 2 counterclockwise into y > 0. The opening angle between the
// jammers is theta_j1 + theta_j2.
struct JammerAngles {
    double theta_j1 = 0.0;
    double theta_j2 = 0.0;

    double opening() const { return theta_j1 + theta_j2; }
};

// All nodes in one Cartesian frame: Alice pinned at the origin, Bob on the
// positive x axis, jammer ground projections on a circle around Alice.
struct NodeLayout {
    Point2D alice{};
    Point2D bob{};
    Point2D jammer1_ground{};
    Point2D jammer2_ground{};
    double z_j1 = 0.0;
    double z_j2 = 0.0;

    double d_ab() const { return bob.x; }
};

// Builds the frame from the cylindrical jammer parameterization:
//   jammer1_ground = (-r_j*cos(theta_j1), -r_j*sin(theta_j1))
//   jammer2_ground = (-r_j*cos(theta_j2), +r_j*sin(theta_j2))
NodeLayout place_nodes(double d_ab, double r_j, JammerAngles angles, double z_j1, double z_j2);

// Frame from explicit on-orbit jammer ground positions. Used by studies whose
// angle conventions run the full circle (single-jammer orbit sweeps); both
// grounds must sit on a common circle around Alice.
NodeLayout make_layout(double d_ab, Point2D jammer1_ground, Point2D jammer2_ground,
                       double z_j1, double z_j2);

}  // namespace jamcov
