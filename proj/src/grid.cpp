#include "qwhorl/grid.hpp"

#include <cmath>
#include <stdexcept>

namespace qwhorl {

void GridSpec::validate() const {
    if (!std::isfinite(xmin) || !std::isfinite(xmax) || !std::isfinite(ymin) ||
        !std::isfinite(ymax)) {
        throw std::invalid_argument("grid window must be finite");
    }
    if (!(xmax > xmin) || !(ymax > ymin)) {
        throw std::invalid_argument("grid window is empty (need xmax > xmin and ymax > ymin)");
    }
    if (nx < 2 || ny < 2) {
        throw std::invalid_argument("grid needs at least 2 nodes per axis");
    }
}

}  // namespace qwhorl
