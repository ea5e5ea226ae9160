#include "stackgame/response.hpp"

#include <algorithm>
#include <cmath>

namespace stackgame {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

}  // namespace

ResponseRule ResponseRule::quantal(double lambda) {
    require_non_negative(lambda, "lambda");
    return ResponseRule{Quantal{lambda}};
}

ResponseRule ResponseRule::satisficing(double aspiration) {
    if (!std::isfinite(aspiration)) {
        throw InvalidScenario("aspiration must be finite");
    }
    return ResponseRule{Satisficing{aspiration}};
}

ResponseDistribution ResponseDistribution::point_mass(Strategy s) {
    std::array<double, 2> p{0.0, 0.0};
    p[index_of(s)] = 1.0;
    return ResponseDistribution{p};
}

ResponseDistribution ResponseDistribution::from_masses(double collaboration, double beefing) {
    require_non_negative(collaboration, "probability mass");
    require_non_negative(beefing, "probability mass");
    const double total = collaboration + beefing;
    if (!(total > 0.0) || !std::isfinite(total)) {
        throw InvalidScenario("probability masses must have a positive finite sum");
    }
    return ResponseDistribution{{collaboration / total, beefing / total}};
}

Strategy best_response(const AlgorithmWeights& weights, const CreatorParams& params,
                       const GameTable& table, double tie_tolerance) {
    const double gap = utility_gap(weights, params, table);
    return gap > tie_tolerance ? Strategy::Beefing : Strategy::Collaboration;
}

ResponseDistribution respond(const ResponseRule& rule, const AlgorithmWeights& weights,
                             const CreatorParams& params, const GameTable& table) {
    return std::visit(
        overloaded{
            [&](const ResponseRule::Exact&) {
                return ResponseDistribution::point_mass(best_response(weights, params, table));
            },
            [&](const ResponseRule::Quantal& q) {
                const double u_collab =
                    creator_utility(weights, params, table, Strategy::Collaboration);
                const double u_beef = creator_utility(weights, params, table, Strategy::Beefing);
                // Shift by the max so the larger exponent is exactly 0.
                const double top = std::max(u_collab, u_beef);
                return ResponseDistribution::from_masses(std::exp(q.lambda * (u_collab - top)),
                                                         std::exp(q.lambda * (u_beef - top)));
            },
            [&](const ResponseRule::Satisficing& s) {
                for (Strategy candidate : kStrategies) {
                    if (creator_utility(weights, params, table, candidate) >= s.aspiration) {
                        return ResponseDistribution::point_mass(candidate);
                    }
                }
                return ResponseDistribution::point_mass(best_response(weights, params, table));
            },
        },
        rule.kind());
}

std::optional<double> switching_delta(const AlgorithmWeights& weights, UtilityModel model,
                                      const GameTable& table) {
    // gap(delta) = engagement_gap - delta * risk_gap
    const double engagement_gap = utility_gap(weights, CreatorParams{0.0, model}, table);
    const double risk_collab = table.at(Strategy::Collaboration).drama_risk();
    const double risk_beef = table.at(Strategy::Beefing).drama_risk();
    const double risk_gap = model == UtilityModel::Linear
                                ? risk_beef - risk_collab
                                : risk_beef * risk_beef - risk_collab * risk_collab;
    if (risk_gap == 0.0) {
        return std::nullopt;
    }
    return engagement_gap / risk_gap;
}

}  // namespace stackgame
