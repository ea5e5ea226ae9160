#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "stackgame/game_core.hpp"
#include "stackgame/response.hpp"

namespace stackgame {

// Non-empty ordered list of creators.
class Population {
public:
    explicit Population(std::vector<CreatorParams> members);
    static Population single(const CreatorParams& creator) { return Population{{creator}}; }

    const std::vector<CreatorParams>& members() const { return members_; }
    std::size_t size() const { return members_.size(); }

private:
    std::vector<CreatorParams> members_;
};

// Fraction of the population playing each strategy.
class StrategyShares {
public:
    StrategyShares(double collaboration, double beefing);
    static StrategyShares point_mass(Strategy s);

    double operator[](Strategy s) const { return share_[index_of(s)]; }

    friend bool operator==(const StrategyShares&, const StrategyShares&) = default;

private:
    std::array<double, 2> share_;
};

// Exact rule: counts of best responses over the population size.
// Stochastic rules: mean response probability across members (expected
// shares, no sampling). Member errors are rethrown as InvalidScenario naming
// the member index.
StrategyShares population_shares(const Population& pop, const ResponseRule& rule,
                                 const AlgorithmWeights& weights, const GameTable& table);

Population make_delta_grid_population(double delta_min, double delta_max, std::size_t count,
                                      UtilityModel model);

}  // namespace stackgame
