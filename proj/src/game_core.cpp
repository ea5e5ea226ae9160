#include "stackgame/game_core.hpp"

#include <cmath>
#include <string>

namespace stackgame {

void require_non_negative(double value, std::string_view what) {
    if (!std::isfinite(value)) {
        throw InvalidScenario(std::string(what) + " must be finite");
    }
    if (value < 0.0) {
        throw InvalidScenario(std::string(what) + " must be >= 0");
    }
}

std::string_view to_string(Strategy s) {
    switch (s) {
        case Strategy::Collaboration: return "Collaboration";
        case Strategy::Beefing: return "Beefing";
    }
    return "?";
}

std::string_view to_string(UtilityModel m) {
    switch (m) {
        case UtilityModel::Linear: return "linear";
        case UtilityModel::Nonlinear: return "nonlinear";
    }
    return "?";
}

EngagementProfile::EngagementProfile(double clicks, double watch_time, double shares,
                                     double drama_risk)
    : clicks_(clicks), watch_time_(watch_time), shares_(shares), drama_risk_(drama_risk) {
    require_non_negative(clicks, "clicks");
    require_non_negative(watch_time, "watch_time");
    require_non_negative(shares, "shares");
    require_non_negative(drama_risk, "drama_risk");
}

GameTable::GameTable(EngagementProfile collaboration, EngagementProfile beefing)
    : profiles_{collaboration, beefing} {}

GameTable default_table() {
    return GameTable{EngagementProfile{2.0, 5.0, 3.0, 0.0}, EngagementProfile{5.0, 2.0, 4.0, 3.0}};
}

AlgorithmWeights::AlgorithmWeights(double alpha, double beta, double gamma)
    : alpha_(alpha), beta_(beta), gamma_(gamma) {
    require_non_negative(alpha, "alpha");
    require_non_negative(beta, "beta");
    require_non_negative(gamma, "gamma");
}

CreatorParams::CreatorParams(double delta, UtilityModel model) : delta_(delta), model_(model) {
    require_non_negative(delta, "delta");
}

double creator_utility(const AlgorithmWeights& w, const CreatorParams& params,
                       const EngagementProfile& p) {
    double u = 0.0;
    switch (params.model()) {
        case UtilityModel::Linear:
            u = w.alpha() * p.clicks() + w.beta() * p.watch_time() + w.gamma() * p.shares() -
                params.delta() * p.drama_risk();
            break;
        case UtilityModel::Nonlinear:
            u = w.alpha() * std::log1p(p.clicks()) + w.beta() * std::sqrt(p.watch_time()) +
                w.gamma() * p.shares() - params.delta() * p.drama_risk() * p.drama_risk();
            break;
    }
    // Finite inputs can still overflow.
    if (!std::isfinite(u)) {
        throw InvalidScenario("creator utility is not finite");
    }
    return u;
}

double utility_gap(const AlgorithmWeights& weights, const CreatorParams& params,
                   const GameTable& table) {
    return creator_utility(weights, params, table, Strategy::Beefing) -
           creator_utility(weights, params, table, Strategy::Collaboration);
}

}  // namespace stackgame
