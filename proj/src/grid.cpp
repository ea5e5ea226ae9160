#include "stackgame/grid.hpp"

namespace stackgame {

std::vector<double> linspace(double lo, double hi, std::size_t count) {
    std::vector<double> values;
    values.reserve(count);
    if (count == 1) {
        values.push_back(lo);
        return values;
    }
    const double span = hi - lo;
    const double last = static_cast<double>(count - 1);
    for (std::size_t i = 0; i + 1 < count; ++i) {
        values.push_back(lo + span * static_cast<double>(i) / last);
    }
    if (count > 1) values.push_back(hi);
    return values;
}

}  // namespace stackgame
