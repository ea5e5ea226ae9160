#include "stackgame/leader.hpp"

#include <algorithm>
#include <cmath>
#include <fmt/format.h>

namespace stackgame {

namespace {

void require_positive(double value, const char* what) {
    if (!std::isfinite(value) || value <= 0.0) {
        throw InvalidScenario(fmt::format("{} must be finite and > 0", what));
    }
}

void require_resolution(std::size_t resolution) {
    if (resolution == 0) {
        throw InvalidScenario("domain resolution must be >= 1");
    }
}

double engagement(const AlgorithmWeights& w, const EngagementProfile& p) {
    return w.alpha() * p.clicks() + w.beta() * p.watch_time() + w.gamma() * p.shares();
}

}  // namespace

WeightDomain WeightDomain::simplex(double total, std::size_t resolution) {
    require_positive(total, "simplex total");
    require_resolution(resolution);
    return WeightDomain{Simplex{total}, resolution};
}

WeightDomain WeightDomain::box(double alpha_max, double beta_max, double gamma_max,
                               std::size_t resolution) {
    require_positive(alpha_max, "alpha_max");
    require_positive(beta_max, "beta_max");
    require_positive(gamma_max, "gamma_max");
    require_resolution(resolution);
    return WeightDomain{Box{alpha_max, beta_max, gamma_max}, resolution};
}

double algorithm_utility(const AlgorithmWeights& weights, const StrategyShares& shares,
                         const GameTable& table) {
    double value = 0.0;
    for (Strategy s : kStrategies) {
        value += shares[s] * engagement(weights, table.at(s));
    }
    if (!std::isfinite(value)) {
        throw InvalidScenario("algorithm utility is not finite");
    }
    return value;
}

std::vector<AlgorithmWeights> enumerate_domain(const WeightDomain& domain) {
    const std::size_t n = domain.resolution();
    const auto nd = static_cast<double>(n);
    std::vector<AlgorithmWeights> points;

    if (const auto* simplex = std::get_if<WeightDomain::Simplex>(&domain.kind())) {
        const double t = simplex->total;
        points.reserve((n + 1) * (n + 2) / 2);
        for (std::size_t i = 0; i <= n; ++i) {
            for (std::size_t j = 0; j + i <= n; ++j) {
                const std::size_t k = n - i - j;
                points.emplace_back(t * static_cast<double>(i) / nd,
                                    t * static_cast<double>(j) / nd,
                                    t * static_cast<double>(k) / nd);
            }
        }
    } else {
        const auto& box = std::get<WeightDomain::Box>(domain.kind());
        points.reserve((n + 1) * (n + 1) * (n + 1));
        for (std::size_t i = 0; i <= n; ++i) {
            for (std::size_t j = 0; j <= n; ++j) {
                for (std::size_t k = 0; k <= n; ++k) {
                    points.emplace_back(box.alpha_max * static_cast<double>(i) / nd,
                                        box.beta_max * static_cast<double>(j) / nd,
                                        box.gamma_max * static_cast<double>(k) / nd);
                }
            }
        }
    }
    return points;
}

EquilibriumResult stackelberg_solve(const WeightDomain& domain, const Population& pop,
                                    const ResponseRule& rule, const GameTable& table) {
    const auto points = enumerate_domain(domain);
    if (points.empty()) {
        throw EmptyDomain("weight domain has no grid points");
    }

    std::vector<double> values;
    values.reserve(points.size());
    for (const auto& w : points) {
        values.push_back(algorithm_utility(w, population_shares(pop, rule, w, table), table));
    }

    const double best = *std::max_element(values.begin(), values.end());
    const auto chosen = static_cast<std::size_t>(
        std::find_if(values.begin(), values.end(),
                     [&](double v) { return v >= best - kLeaderTieTolerance; }) -
        values.begin());

    const AlgorithmWeights& w = points[chosen];
    const StrategyShares shares = population_shares(pop, rule, w, table);

    std::array<double, 2> utilities{0.0, 0.0};
    for (const auto& member : pop.members()) {
        for (Strategy s : kStrategies) {
            utilities[index_of(s)] += creator_utility(w, member, table, s);
        }
    }
    for (double& u : utilities) u /= static_cast<double>(pop.size());

    return EquilibriumResult{
        .weights = w,
        .shares = shares,
        .leader_value = algorithm_utility(w, shares, table),
        .creator_utilities = utilities,
        .grid_index = chosen,
        .grid_points_evaluated = points.size(),
    };
}

std::vector<std::pair<double, EquilibriumResult>> delta_sensitivity(
    const WeightDomain& domain, const std::vector<double>& deltas, UtilityModel model,
    const ResponseRule& rule, const GameTable& table) {
    if (deltas.empty()) {
        throw InvalidScenario("delta list must not be empty");
    }
    std::vector<std::pair<double, EquilibriumResult>> results;
    results.reserve(deltas.size());
    for (double delta : deltas) {
        try {
            const auto pop = Population::single(CreatorParams{delta, model});
            results.emplace_back(delta, stackelberg_solve(domain, pop, rule, table));
        } catch (const InvalidScenario& e) {
            throw InvalidScenario(fmt::format("delta={}: {}", delta, e.what()));
        }
    }
    return results;
}

}  // namespace stackgame
