#include "stackgame/population.hpp"

#include <cmath>
#include <string>

#include "stackgame/grid.hpp"

namespace stackgame {

Population::Population(std::vector<CreatorParams> members) : members_(std::move(members)) {
    if (members_.empty()) {
        throw InvalidScenario("population must have at least one member");
    }
}

StrategyShares::StrategyShares(double collaboration, double beefing)
    : share_{collaboration, beefing} {
    for (double s : share_) {
        if (!std::isfinite(s) || s < 0.0 || s > 1.0) {
            throw InvalidScenario("strategy share must lie in [0, 1]");
        }
    }
    if (std::abs(collaboration + beefing - 1.0) > 1e-12) {
        throw InvalidScenario("strategy shares must sum to 1");
    }
}

StrategyShares StrategyShares::point_mass(Strategy s) {
    return s == Strategy::Collaboration ? StrategyShares{1.0, 0.0} : StrategyShares{0.0, 1.0};
}

StrategyShares population_shares(const Population& pop, const ResponseRule& rule,
                                 const AlgorithmWeights& weights, const GameTable& table) {
    const auto n = static_cast<double>(pop.size());
    const auto& members = pop.members();

    if (rule.is_exact()) {
        std::size_t beefing = 0;
        for (std::size_t i = 0; i < members.size(); ++i) {
            try {
                if (best_response(weights, members[i], table) == Strategy::Beefing) ++beefing;
            } catch (const InvalidScenario& e) {
                throw InvalidScenario("member " + std::to_string(i) + ": " + e.what());
            }
        }
        const auto collab = pop.size() - beefing;
        return StrategyShares{static_cast<double>(collab) / n, static_cast<double>(beefing) / n};
    }

    double collab_mass = 0.0;
    double beef_mass = 0.0;
    for (std::size_t i = 0; i < members.size(); ++i) {
        try {
            const auto dist = respond(rule, weights, members[i], table);
            collab_mass += dist[Strategy::Collaboration];
            beef_mass += dist[Strategy::Beefing];
        } catch (const InvalidScenario& e) {
            throw InvalidScenario("member " + std::to_string(i) + ": " + e.what());
        }
    }
    // Renormalize so accumulated rounding cannot push the sum off 1.
    const double total = collab_mass + beef_mass;
    return StrategyShares{collab_mass / total, beef_mass / total};
}

Population make_delta_grid_population(double delta_min, double delta_max, std::size_t count,
                                      UtilityModel model) {
    require_non_negative(delta_min, "delta_min");
    require_non_negative(delta_max, "delta_max");
    if (delta_min > delta_max) {
        throw InvalidScenario("delta_min must not exceed delta_max");
    }
    if (count == 0) {
        throw InvalidScenario("population count must be >= 1");
    }
    std::vector<CreatorParams> members;
    members.reserve(count);
    for (double d : linspace(delta_min, delta_max, count)) {
        members.emplace_back(d, model);
    }
    return Population{std::move(members)};
}

}  // namespace stackgame
