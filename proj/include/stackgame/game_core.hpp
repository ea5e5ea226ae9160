#pragma once

#include <array>
#include <cstddef>
#include <string_view>

#include "stackgame/errors.hpp"

namespace stackgame {

// Creator strategies in canonical order. Collaboration sorts first and is the
// tie-break winner everywhere a deterministic choice is needed.
enum class Strategy : std::size_t { Collaboration = 0, Beefing = 1 };

inline constexpr std::array<Strategy, 2> kStrategies{Strategy::Collaboration,
                                                     Strategy::Beefing};

constexpr std::size_t index_of(Strategy s) { return static_cast<std::size_t>(s); }

std::string_view to_string(Strategy s);

// Engagement a strategy is expected to generate.
class EngagementProfile {
public:
    EngagementProfile(double clicks, double watch_time, double shares, double drama_risk);

    double clicks() const { return clicks_; }
    double watch_time() const { return watch_time_; }
    double shares() const { return shares_; }
    double drama_risk() const { return drama_risk_; }

    friend bool operator==(const EngagementProfile&, const EngagementProfile&) = default;

private:
    double clicks_;
    double watch_time_;
    double shares_;
    double drama_risk_;
};

// Engagement profile for each strategy.
class GameTable {
public:
    GameTable(EngagementProfile collaboration, EngagementProfile beefing);

    const EngagementProfile& at(Strategy s) const { return profiles_[index_of(s)]; }

    friend bool operator==(const GameTable&, const GameTable&) = default;

private:
    std::array<EngagementProfile, 2> profiles_;
};

// The illustrative table: Collaboration (2, 5, 3, 0), Beefing (5, 2, 4, 3).
GameTable default_table();

// Leader's engagement weights on clicks, watch time and shares.
class AlgorithmWeights {
public:
    AlgorithmWeights(double alpha, double beta, double gamma);

    double alpha() const { return alpha_; }
    double beta() const { return beta_; }
    double gamma() const { return gamma_; }

    AlgorithmWeights scaled(double c) const { return {alpha_ * c, beta_ * c, gamma_ * c}; }

    friend bool operator==(const AlgorithmWeights&, const AlgorithmWeights&) = default;

private:
    double alpha_;
    double beta_;
    double gamma_;
};

enum class UtilityModel { Linear, Nonlinear };

std::string_view to_string(UtilityModel m);

class CreatorParams {
public:
    explicit CreatorParams(double delta, UtilityModel model = UtilityModel::Linear);

    double delta() const { return delta_; }
    UtilityModel model() const { return model_; }

    CreatorParams with_delta(double delta) const { return CreatorParams{delta, model_}; }

    friend bool operator==(const CreatorParams&, const CreatorParams&) = default;

private:
    double delta_;
    UtilityModel model_;
};

/// Creator payoff for producing content with the given engagement profile.
///
/// Linear:    a*clicks + b*watch + g*shares - d*risk
/// Nonlinear: a*ln(1 + clicks) + b*sqrt(watch) + g*shares - d*risk^2
///
/// The nonlinear model uses the natural logarithm. Throws InvalidScenario if
/// the result is not finite.
double creator_utility(const AlgorithmWeights& weights, const CreatorParams& params,
                       const EngagementProfile& profile);

inline double creator_utility(const AlgorithmWeights& weights, const CreatorParams& params,
                              const GameTable& table, Strategy s) {
    return creator_utility(weights, params, table.at(s));
}

// U(Beefing) - U(Collaboration). Positive means Beefing is strictly preferred.
double utility_gap(const AlgorithmWeights& weights, const CreatorParams& params,
                   const GameTable& table);

// Throws InvalidScenario naming `what` unless value is finite and >= 0.
void require_non_negative(double value, std::string_view what);

}  // namespace stackgame
