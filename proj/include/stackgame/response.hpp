#pragma once

#include <array>
#include <optional>
#include <variant>

#include "stackgame/game_core.hpp"

namespace stackgame {

// Gaps with magnitude at or below this are ties and resolve to Collaboration.
inline constexpr double kTieTolerance = 1e-9;

// How a creator turns utilities into a choice.
//
//   Exact        arg max, ties to Collaboration
//   Quantal      logit choice, prob(s) proportional to exp(lambda * U(s))
//   Satisficing  first strategy in canonical order whose utility reaches the
//                aspiration level, otherwise the exact best response
class ResponseRule {
public:
    struct Exact {
        friend bool operator==(const Exact&, const Exact&) = default;
    };
    struct Quantal {
        double lambda;
        friend bool operator==(const Quantal&, const Quantal&) = default;
    };
    struct Satisficing {
        double aspiration;
        friend bool operator==(const Satisficing&, const Satisficing&) = default;
    };
    using Kind = std::variant<Exact, Quantal, Satisficing>;

    ResponseRule() = default;

    static ResponseRule exact() { return ResponseRule{}; }
    static ResponseRule quantal(double lambda);
    static ResponseRule satisficing(double aspiration);

    const Kind& kind() const { return kind_; }
    bool is_exact() const { return std::holds_alternative<Exact>(kind_); }

    friend bool operator==(const ResponseRule&, const ResponseRule&) = default;

private:
    explicit ResponseRule(Kind kind) : kind_(kind) {}
    Kind kind_{Exact{}};
};

// Probability of each strategy; entries lie in [0, 1] and sum to 1.
class ResponseDistribution {
public:
    static ResponseDistribution point_mass(Strategy s);
    // Normalizes non-negative masses; throws InvalidScenario if they sum to zero.
    static ResponseDistribution from_masses(double collaboration, double beefing);

    double operator[](Strategy s) const { return prob_[index_of(s)]; }

private:
    explicit ResponseDistribution(std::array<double, 2> prob) : prob_(prob) {}
    std::array<double, 2> prob_;
};

Strategy best_response(const AlgorithmWeights& weights, const CreatorParams& params,
                       const GameTable& table, double tie_tolerance = kTieTolerance);

ResponseDistribution respond(const ResponseRule& rule, const AlgorithmWeights& weights,
                             const CreatorParams& params, const GameTable& table);

// Sponsor sensitivity at which the creator is indifferent between the two
// strategies. Empty when the gap does not depend on delta (equal drama risk,
// or equal squared risk for the nonlinear model). A negative threshold is
// returned as is: Beefing then loses for every admissible delta.
std::optional<double> switching_delta(const AlgorithmWeights& weights, UtilityModel model,
                                      const GameTable& table);

}  // namespace stackgame
