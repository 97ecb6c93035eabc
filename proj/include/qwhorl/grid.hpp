#pragma once

#include <cstddef>

#include "qwhorl/core.hpp"

namespace qwhorl {

// Rectangular sampling lattice over the (Re alpha, Im alpha) plane.
// Node (i, j) sits at (xmin + i dx, ymin + j dy); both ends are included.
struct GridSpec {
    double xmin = -1.0;
    double xmax = 1.0;
    double ymin = -1.0;
    double ymax = 1.0;
    std::size_t nx = 64;
    std::size_t ny = 64;

    static GridSpec square(std::size_t n, double lo = -1.0, double hi = 1.0) {
        return {lo, hi, lo, hi, n, n};
    }

    // Throws std::invalid_argument when the window is empty or a side has < 2 nodes.
    void validate() const;

    double dx() const { return (xmax - xmin) / static_cast<double>(nx - 1); }
    double dy() const { return (ymax - ymin) / static_cast<double>(ny - 1); }
    std::size_t size() const { return nx * ny; }

    PhasePoint node(std::size_t i, std::size_t j) const {
        return {xmin + static_cast<double>(i) * dx(), ymin + static_cast<double>(j) * dy()};
    }

    friend bool operator==(const GridSpec&, const GridSpec&) = default;
};

}  // namespace qwhorl
