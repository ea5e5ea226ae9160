#include <gtest/gtest.h>

#include <random>
#include <regex>
#include <sstream>

#include "oracles.hpp"
#include "stackgame/sweep.hpp"

using namespace stackgame;

namespace {

Scenario scenario(double a, double b, double g, double d) {
    return Scenario{AlgorithmWeights{a, b, g}, CreatorParams{d}, default_table(),
                    ResponseRule::exact()};
}

SweepSpec delta_sweep(double lo, double hi, std::size_t steps, const Scenario& fixed) {
    return SweepSpec{SweepAxis{Parameter::Delta, lo, hi, steps}, std::nullopt, fixed};
}

SweepSpec corner_sweep() {
    return SweepSpec{SweepAxis{Parameter::Alpha, 0, 1, 2}, SweepAxis{Parameter::Gamma, 0, 1, 2},
                     scenario(0, 0, 0, 0)};
}

std::size_t count(const std::string& text, const std::string& needle) {
    std::size_t n = 0;
    for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1))
        ++n;
    return n;
}

}  // namespace

TEST(RunSweep, DeltaSweepFlipsAfterThreshold) {
    const auto cells = run_sweep(delta_sweep(0, 4, 5, scenario(2.5, 0.5, 2.0, 1.0)));
    ASSERT_EQ(cells.size(), 5u);
    const std::vector<Strategy> expected{Strategy::Beefing, Strategy::Beefing, Strategy::Beefing,
                                         Strategy::Collaboration, Strategy::Collaboration};
    for (std::size_t i = 0; i < cells.size(); ++i) {
        EXPECT_EQ(cells[i].param_values.at("delta"), static_cast<double>(i));
        EXPECT_EQ(cells[i].chosen, expected[i]);
        EXPECT_EQ(oracle::brute_choice(2.5, 0.5, 2.0, double(i)),
                  expected[i] == Strategy::Beefing ? 1 : 0);
    }
}

TEST(RunSweep, SingleCell) {
    const auto cells = run_sweep(delta_sweep(1, 1, 1, scenario(1.0, 2.0, 1.5, 7.0)));
    ASSERT_EQ(cells.size(), 1u);
    EXPECT_EQ(cells[0].chosen, Strategy::Collaboration);
    EXPECT_NEAR(cells[0].utility(Strategy::Collaboration), 16.5, 1e-12);
    EXPECT_NEAR(cells[0].utility(Strategy::Beefing), 12.0, 1e-12);
}

TEST(RunSweep, TwoAxisCorners) {
    const auto cells = run_sweep(corner_sweep());
    ASSERT_EQ(cells.size(), 4u);
    // Outer alpha, inner gamma; gap = 3a + g.
    const double corners[4][2] = {{0, 0}, {0, 1}, {1, 0}, {1, 1}};
    for (std::size_t i = 0; i < 4; ++i) {
        EXPECT_EQ(cells[i].param_values.at("alpha"), corners[i][0]);
        EXPECT_EQ(cells[i].param_values.at("gamma"), corners[i][1]);
        EXPECT_EQ(cells[i].gap, 3 * corners[i][0] + corners[i][1]);
        EXPECT_EQ(cells[i].chosen, i == 0 ? Strategy::Collaboration : Strategy::Beefing);
    }
}

TEST(SweepSpec, Validation) {
    const auto fixed = scenario(1, 1, 1, 1);
    EXPECT_THROW(SweepSpec(SweepAxis{Parameter::Delta, 2, 1, 3}, std::nullopt, fixed),
                 InvalidScenario);
    EXPECT_THROW(SweepSpec(SweepAxis{Parameter::Delta, 0, 1, 0}, std::nullopt, fixed),
                 InvalidScenario);
    EXPECT_THROW(SweepSpec(SweepAxis{Parameter::Beta, 0, 1, 2}, SweepAxis{Parameter::Beta, 0, 1, 2},
                           fixed),
                 InvalidScenario);
}

TEST(RegionBoundary, Examples) {
    EXPECT_NEAR(*region_boundary(delta_sweep(0, 10, 11, scenario(2.5, 0.5, 2.0, 1))), 8.0 / 3.0,
                1e-12);
    EXPECT_FALSE(region_boundary(delta_sweep(0, 10, 11, scenario(1.0, 2.0, 1.5, 1))));
    EXPECT_FALSE(region_boundary(delta_sweep(3, 10, 11, scenario(2.5, 0.5, 2.0, 1))));
    EXPECT_THROW(region_boundary(corner_sweep()), InvalidScenario);
}

TEST(EmitCsv, SingleCell) {
    const auto cells = run_sweep(delta_sweep(1, 1, 1, scenario(1.0, 2.0, 1.5, 1.0)));
    std::ostringstream out;
    emit_csv(cells, out);
    EXPECT_EQ(out.str(), "delta,u_collab,u_beef,gap,chosen\n1,16.5,12,-4.5,Collaboration\n");
}

TEST(EmitCsv, RowCountAndSortedHeader) {
    std::ostringstream out;
    emit_csv(run_sweep(delta_sweep(0, 4, 5, scenario(2.5, 0.5, 2.0, 1.0))), out);
    EXPECT_EQ(count(out.str(), "\n"), 6u);

    const SweepSpec spec{SweepAxis{Parameter::Gamma, 0, 1, 2}, SweepAxis{Parameter::Alpha, 0, 1, 2},
                         scenario(0, 0, 0, 0)};
    std::ostringstream two;
    emit_csv(run_sweep(spec), two);
    EXPECT_EQ(two.str().substr(0, two.str().find('\n')), "alpha,gamma,u_collab,u_beef,gap,chosen");
}

TEST(EmitCsv, EmptyIsRejected) {
    std::ostringstream out;
    EXPECT_THROW(emit_csv({}, out), InvalidScenario);
}

TEST(EmitCsv, WriteFailureIsReported) {
    std::ostringstream out;
    out.setstate(std::ios::badbit);
    const auto cells = run_sweep(delta_sweep(1, 1, 1, scenario(1, 1, 1, 1)));
    EXPECT_THROW(emit_csv(cells, out), std::ios_base::failure);
}

TEST(EmitCsv, RoundTripsToNineDigits) {
    auto gen = oracle::rng(51);
    std::uniform_real_distribution<double> u(0.0, 3.0);
    const SweepSpec spec{SweepAxis{Parameter::Beta, 0.1, 2.9, 7},
                         SweepAxis{Parameter::Delta, 0.0, 4.3, 6},
                         scenario(u(gen), u(gen), u(gen), u(gen))};
    const auto cells = run_sweep(spec);
    std::ostringstream out;
    emit_csv(cells, out);

    std::istringstream in(out.str());
    std::string line;
    std::getline(in, line);
    ASSERT_EQ(line, "beta,delta,u_collab,u_beef,gap,chosen");
    auto close9 = [](double parsed, double exact) {
        return std::abs(parsed - exact) <= 5e-9 * std::max(1.0, std::abs(exact));
    };
    for (const auto& cell : cells) {
        ASSERT_TRUE(std::getline(in, line));
        std::vector<std::string> fields;
        std::stringstream row(line);
        for (std::string f; std::getline(row, f, ',');) fields.push_back(f);
        ASSERT_EQ(fields.size(), 6u);
        EXPECT_TRUE(close9(std::stod(fields[0]), cell.param_values.at("beta")));
        EXPECT_TRUE(close9(std::stod(fields[1]), cell.param_values.at("delta")));
        EXPECT_TRUE(close9(std::stod(fields[2]), cell.utility(Strategy::Collaboration)));
        EXPECT_TRUE(close9(std::stod(fields[3]), cell.utility(Strategy::Beefing)));
        EXPECT_TRUE(close9(std::stod(fields[4]), cell.gap));
        EXPECT_EQ(fields[5], to_string(cell.chosen));
    }
}

TEST(EmitRegionSvg, FourCorners) {
    const auto spec = corner_sweep();
    std::ostringstream out;
    emit_region_svg(spec, run_sweep(spec), out);
    const auto svg = out.str();
    EXPECT_EQ(svg.rfind("<svg", 0), 0u);
    EXPECT_NE(svg.find("</svg>"), std::string::npos);
    EXPECT_EQ(count(svg, "<rect class=\"cell\""), 4u);
    EXPECT_EQ(count(svg, std::string("fill=\"") + std::string(kBeefingColor) + "\"><title>"), 3u);
    EXPECT_NE(svg.find("alpha [0, 1]"), std::string::npos);
    EXPECT_NE(svg.find("gamma [0, 1]"), std::string::npos);
}

TEST(EmitRegionSvg, DegenerateLattice) {
    const SweepSpec spec{SweepAxis{Parameter::Alpha, 1, 1, 1}, SweepAxis{Parameter::Beta, 2, 2, 1},
                         scenario(0, 0, 0, 1)};
    std::ostringstream out;
    emit_region_svg(spec, run_sweep(spec), out);
    EXPECT_EQ(count(out.str(), "<rect class=\"cell\""), 1u);
}

TEST(EmitRegionSvg, Deterministic) {
    const SweepSpec spec{SweepAxis{Parameter::Alpha, 0, 3, 9}, SweepAxis{Parameter::Delta, 0, 5, 7},
                         scenario(1, 1, 1, 1)};
    std::ostringstream a, b;
    emit_region_svg(spec, run_sweep(spec), a);
    emit_region_svg(spec, run_sweep(spec), b);
    EXPECT_EQ(a.str(), b.str());
}

TEST(EmitRegionSvg, MalformedLattice) {
    const auto spec = corner_sweep();
    auto cells = run_sweep(spec);
    cells.pop_back();
    std::ostringstream out;
    EXPECT_THROW(emit_region_svg(spec, cells, out), MalformedLattice);
    const auto one_axis = delta_sweep(0, 1, 2, scenario(1, 1, 1, 1));
    EXPECT_THROW(emit_region_svg(one_axis, run_sweep(one_axis), out), MalformedLattice);
}

TEST(SweepProperty, DeltaSweepsAreMonotone) {
    auto gen = oracle::rng(52);
    std::uniform_real_distribution<double> u(0.0, 5.0);
    for (int trial = 0; trial < 200; ++trial) {
        const auto cells = run_sweep(delta_sweep(0, 15, 61, scenario(u(gen), u(gen), u(gen), 0)));
        bool collab = false;
        for (const auto& c : cells) {
            if (collab) EXPECT_EQ(c.chosen, Strategy::Collaboration);
            collab = collab || c.chosen == Strategy::Collaboration;
        }
    }
}

TEST(SweepProperty, CellsAreRecomputable) {
    const Scenario fixed{AlgorithmWeights{0.4, 1.2, 0.9},
                         CreatorParams{0.7, UtilityModel::Nonlinear}, default_table(),
                         ResponseRule::exact()};
    const SweepSpec spec{SweepAxis{Parameter::Beta, 0, 2, 5}, SweepAxis{Parameter::Delta, 0, 1, 4},
                         fixed};
    const auto cells = run_sweep(spec);
    ASSERT_EQ(cells.size(), spec.cell_count());
    for (const auto& cell : cells) {
        Scenario s = with_parameter(fixed, Parameter::Beta, cell.param_values.at("beta"));
        s = with_parameter(s, Parameter::Delta, cell.param_values.at("delta"));
        EXPECT_EQ(cell.chosen, best_response(s.weights, s.creator, s.table));
        EXPECT_EQ(cell.gap, utility_gap(s.weights, s.creator, s.table));
    }
}
