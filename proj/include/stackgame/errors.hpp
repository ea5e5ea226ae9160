#pragma once

#include <stdexcept>
#include <string>

namespace stackgame {

// Raised when a scenario value violates a type invariant (negative weight,
// non-finite metric, empty population, ...).
class InvalidScenario : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// The sweep lattice handed to an emitter does not match its declared shape.
class MalformedLattice : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// The leader's weight domain produced no grid points.
class EmptyDomain : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace stackgame
