#pragma once

// Test-only reference computations. They work on raw doubles and never call
// into the library's evaluation path, so they can check it independently.

#include <array>
#include <cmath>
#include <cstddef>
#include <functional>
#include <random>
#include <vector>

namespace oracle {

struct Metrics {
    double clicks, watch, shares, risk;
};

// Collaboration, Beefing.
inline constexpr std::array<Metrics, 2> kTable{{{2, 5, 3, 0}, {5, 2, 4, 3}}};

inline double linear_u(double a, double b, double g, double d, const Metrics& m) {
    return a * m.clicks + b * m.watch + g * m.shares - d * m.risk;
}

inline double linear_gap(double a, double b, double g, double d) {
    return linear_u(a, b, g, d, kTable[1]) - linear_u(a, b, g, d, kTable[0]);
}

// 0 = Collaboration, 1 = Beefing; compares the two utilities directly.
inline int brute_choice(double a, double b, double g, double d, double tol = 1e-9) {
    const double uc = linear_u(a, b, g, d, kTable[0]);
    const double ub = linear_u(a, b, g, d, kTable[1]);
    return ub - uc > tol ? 1 : 0;
}

// Root of a decreasing function on [lo, hi] by bisection.
inline double bisect(const std::function<double(double)>& f, double lo, double hi,
                     int iterations = 200) {
    for (int i = 0; i < iterations; ++i) {
        const double mid = 0.5 * (lo + hi);
        (f(mid) > 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

struct LeaderOutcome {
    std::size_t index;
    double value;
    double a, b, g;
};

// Exhaustive unit-simplex search for a single linear Exact creator with
// Table 1 metrics. Points are visited as i (alpha) outer, j (beta) inner.
inline LeaderOutcome brute_leader(std::size_t n, double delta) {
    std::vector<LeaderOutcome> all;
    for (std::size_t i = 0; i <= n; ++i) {
        for (std::size_t j = 0; i + j <= n; ++j) {
            const double a = double(i) / double(n);
            const double b = double(j) / double(n);
            const double g = double(n - i - j) / double(n);
            const auto& m = kTable[brute_choice(a, b, g, delta)];
            all.push_back({all.size(), a * m.clicks + b * m.watch + g * m.shares, a, b, g});
        }
    }
    double best = -INFINITY;
    for (const auto& o : all) best = std::max(best, o.value);
    for (const auto& o : all) {
        if (o.value >= best - 1e-9) return o;
    }
    return all.front();
}

inline std::mt19937_64 rng(std::uint64_t seed) { return std::mt19937_64{seed}; }

}  // namespace oracle
