#pragma once

namespace jamcov {

// Circular surveillance region around Alice, discretized on a midpoint polar
// grid. The annulus between exclusion_radius and radius_s is what the area
// metrics integrate over; the exclusion keeps eavesdropper points away from
// the zero-distance fading degeneracy at Alice.
struct RegionSpec {
    double radius_s = 40.0;
    double exclusion_radius = 0.5;
    unsigned n_radial = 64;
    unsigned n_angular = 180;

    void validate() const;
    double total_area() const;  // pi * (radius_s^2 - exclusion_radius^2)
};

}  // namespace jamcov
