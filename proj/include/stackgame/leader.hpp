#pragma once

#include <array>
#include <cstddef>
#include <utility>
#include <variant>
#include <vector>

#include "stackgame/game_core.hpp"
#include "stackgame/population.hpp"
#include "stackgame/response.hpp"

namespace stackgame {

// Ties in leader value within this tolerance go to the earliest grid point.
inline constexpr double kLeaderTieTolerance = 1e-9;

// Compact set the leader searches over, discretized with `resolution`
// subdivisions per axis.
//
//   Simplex  alpha + beta + gamma = total
//   Box      [0, alpha_max] x [0, beta_max] x [0, gamma_max]
class WeightDomain {
public:
    struct Simplex {
        double total;
        friend bool operator==(const Simplex&, const Simplex&) = default;
    };
    struct Box {
        double alpha_max;
        double beta_max;
        double gamma_max;
        friend bool operator==(const Box&, const Box&) = default;
    };
    using Kind = std::variant<Simplex, Box>;

    static WeightDomain simplex(double total, std::size_t resolution);
    static WeightDomain box(double alpha_max, double beta_max, double gamma_max,
                            std::size_t resolution);
    // Unit simplex at resolution 100.
    static WeightDomain default_domain() { return simplex(1.0, 100); }

    const Kind& kind() const { return kind_; }
    std::size_t resolution() const { return resolution_; }

    friend bool operator==(const WeightDomain&, const WeightDomain&) = default;

private:
    WeightDomain(Kind kind, std::size_t resolution) : kind_(kind), resolution_(resolution) {}
    Kind kind_;
    std::size_t resolution_;
};

struct EquilibriumResult {
    AlgorithmWeights weights;
    StrategyShares shares;
    double leader_value;
    // Mean creator utility of each strategy across the population, at the
    // optimal weights. For a single creator this is that creator's utility.
    std::array<double, 2> creator_utilities;
    std::size_t grid_index;
    std::size_t grid_points_evaluated;

    double creator_utility(Strategy s) const { return creator_utilities[index_of(s)]; }
};

// Platform engagement: sum over s of share(s) * (a*clicks_s + b*watch_s + g*shares_s).
// Drama risk does not enter.
double algorithm_utility(const AlgorithmWeights& weights, const StrategyShares& shares,
                         const GameTable& table);

// Simplex: (i, j, k) * total / n over i + j + k = n, lexicographic in (i, j, k).
// Box: the (n + 1)^3 lattice, lexicographic.
std::vector<AlgorithmWeights> enumerate_domain(const WeightDomain& domain);

// Leader grid search anticipating the population's response. The chosen point
// is the earliest in enumeration order whose value is within
// kLeaderTieTolerance of the grid maximum.
EquilibriumResult stackelberg_solve(const WeightDomain& domain, const Population& pop,
                                    const ResponseRule& rule, const GameTable& table);

// stackelberg_solve for a single creator at each delta, in input order.
std::vector<std::pair<double, EquilibriumResult>> delta_sensitivity(
    const WeightDomain& domain, const std::vector<double>& deltas, UtilityModel model,
    const ResponseRule& rule, const GameTable& table);

}  // namespace stackgame
