#pragma once

#include <cstddef>
#include <vector>

namespace stackgame {

// `count` evenly spaced values over [lo, hi], both ends included. A single
// value is lo. The last value is exactly hi.
std::vector<double> linspace(double lo, double hi, std::size_t count);

}  // namespace stackgame
