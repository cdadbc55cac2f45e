#include "jamcov/parallel.hpp"

#include <algorithm>

namespace jamcov {

unsigned resolve_workers(unsigned workers) {
    if (workers != 0) {
        return workers;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return std::clamp(hw, 1u, 64u);
}

}  // namespace jamcov
