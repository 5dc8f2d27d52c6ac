#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "landau_qsl/constants.hpp"
#include "landau_qsl/qsl.hpp"

using namespace lqsl;

namespace {
constexpr double mc2 = constants.electron_mass_energy_erg;
constexpr double pi = std::numbers::pi;
} // namespace

TEST_CASE("energy spread") {
    CHECK(delta_h(1.0, 3.0) == 1.0);
    CHECK(delta_h(1.0, std::sqrt(3.0)) == doctest::Approx(0.3660).epsilon(1e-4));
    CHECK_THROWS_AS(delta_h(2.0, 2.0), std::invalid_argument);
    CHECK_THROWS_AS(delta_h(0.0, 2.0), std::invalid_argument);
}

TEST_CASE("orthogonalization time") {
    // a gap of pi hbar gives dH = pi hbar / 2 and tau = 1 s
    const auto unit = tau_qsl_from_gap(pi * constants.hbar_erg_s, 1.0);
    CHECK(unit.tau == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(unit.bound == SpeedBound::mandelstam_tamm);

    const auto t = tau_qsl(mc2, std::sqrt(3.0) * mc2);
    CHECK(t.tau == doctest::Approx(pi * constants.hbar_erg_s / ((std::sqrt(3.0) - 1.0) * mc2)).epsilon(1e-14));
    CHECK(t.tau == doctest::Approx(3.54e-21).epsilon(2e-3));
    CHECK(t.bound == SpeedBound::mandelstam_tamm);

    // a synthetic pair with <H> below dH selects the other bound
    const auto ml = tau_qsl(-1.0, 3.0);
    CHECK(ml.bound == SpeedBound::margolus_levitin);
    CHECK(ml.tau == doctest::Approx(pi * constants.hbar_erg_s / 2.0));
    CHECK(bound_name(ml.bound) == "ML");
    CHECK_THROWS_AS(tau_qsl(2.0, 1.0), std::invalid_argument);
}

TEST_CASE("laboratory field strengths") {
    const FieldProfile uniform(10.0, 0.0);
    const auto up0 = qsl_velocity(uniform, SpinBranch::plus);
    const auto down0 = qsl_velocity(uniform, SpinBranch::minus);
    CHECK(up0.v_over_c == doctest::Approx(1.9e-7).epsilon(0.05));
    CHECK(down0.v_over_c == doctest::Approx(up0.v_over_c).epsilon(0.005));

    const FieldProfile linear(2e-5, 1.0);
    const auto up1 = qsl_velocity(linear, SpinBranch::plus);
    const auto down1 = qsl_velocity(linear, SpinBranch::minus);
    CHECK(up1.v_over_c == doctest::Approx(3.2e-7).epsilon(0.1));
    CHECK(down1.v_over_c == doctest::Approx(3.0e-7).epsilon(0.1));
    CHECK(up1.v_over_c > up0.v_over_c);
    CHECK(down1.v_over_c > up0.v_over_c);
}

TEST_CASE("QSL point invariants") {
    for (double n : {-0.5, 0.0, 1.0, 2.0}) {
        for (auto spin : {SpinBranch::plus, SpinBranch::minus}) {
            const auto grid = log_grid(1e8, 1e20, 2);
            for (const auto& p : sweep_b0(n, spin, 0, grid)) {
                CHECK(p.v_over_c > 0.0);
                CHECK(p.v_over_c < 1.0);
                CHECK(p.bound == SpeedBound::mandelstam_tamm);
                CHECK(p.epsilon_low >= 1.0);
                const double gap = (p.epsilon_high - p.epsilon_low) * mc2;
                CHECK(p.tau_qsl_s * gap / (pi * constants.hbar_erg_s) == doctest::Approx(1.0).epsilon(1e-6));
                CHECK(0.5 * (p.epsilon_high + p.epsilon_low) >= 0.5 * (p.epsilon_high - p.epsilon_low));
                CHECK(p.rho_disp_pm / p.tau_qsl_s / constants.light_speed_pm_s == doctest::Approx(p.v_over_c).epsilon(1e-9));
            }
        }
    }
}

TEST_CASE("field sweeps") {
    const auto grid = log_grid(1e4, 1e20, 4);
    for (double n : {-0.5, 0.0, 1.0, 2.0}) {
        for (auto spin : {SpinBranch::plus, SpinBranch::minus}) {
            const auto sweep = sweep_b0(n, spin, 0, grid);
            for (std::size_t i = 1; i < sweep.size(); ++i) {
                CHECK(sweep[i].v_over_c >= sweep[i - 1].v_over_c);
                CHECK(sweep[i].tau_qsl_s < sweep[i - 1].tau_qsl_s);
            }
            // non-relativistic slope 1/(n+2)
            const double b_lo = from_beta(1e-9, n).b0(), b_hi = from_beta(1e-7, n).b0();
            const double lo = qsl_velocity(FieldProfile(b_lo, n), spin).v_over_c;
            const double hi = qsl_velocity(FieldProfile(b_hi, n), spin).v_over_c;
            const double slope = std::log(hi / lo) / std::log(b_hi / b_lo);
            CHECK(slope == doctest::Approx(1.0 / (n + 2.0)).epsilon(0.01));

            // approach to the closed-form saturation value
            const double sat = sqsl(n, spin);
            const double at_1e8 = qsl_velocity(from_beta(1e8, n), spin).v_over_c;
            CHECK(at_1e8 == doctest::Approx(sat).epsilon(0.005));
        }
    }
}

TEST_CASE("saturated tail flattens on the plus branch") {
    // The plus branch has a massive lower level and saturates like 1/beta^(2/(n+2));
    // the minus branch starts from the zero mode and approaches its limit like beta^(-1/(n+2)).
    for (double n : {0.0, 1.0}) {
        const double a = qsl_velocity(from_beta(1e4, n), SpinBranch::plus).v_over_c;
        const double b = qsl_velocity(from_beta(1e5, n), SpinBranch::plus).v_over_c;
        CHECK(std::abs(b / a - 1.0) < 1e-3);
    }
}

TEST_CASE("closed-form saturation") {
    CHECK(sqsl(0.0, SpinBranch::minus) == doctest::Approx(1.0 / std::sqrt(pi)).epsilon(1e-6));
    CHECK(sqsl(0.0, SpinBranch::plus) == doctest::Approx((2.0 - std::sqrt(2.0)) / std::sqrt(2.0 * pi)).epsilon(1e-6));
    CHECK(sqsl(0.0, SpinBranch::plus) < sqsl(0.0, SpinBranch::minus));
}

TEST_CASE("exponent sweeps") {
    const std::vector<double> n_grid{-0.5, 0.0, 0.5, 1.0, 2.0};
    const auto serial = sweep_n(constant_b0(), SpinBranch::plus, 0, n_grid, 0, {}, 1);
    const auto threaded = sweep_n(constant_b0(), SpinBranch::plus, 0, n_grid, 0, {}, 4);
    REQUIRE(serial.size() == n_grid.size());
    for (std::size_t i = 0; i < serial.size(); ++i) {
        CHECK(serial[i].profile.n() == n_grid[i]);
        CHECK(serial[i].v_over_c == threaded[i].v_over_c);
        CHECK(serial[i].tau_qsl_s == threaded[i].tau_qsl_s);
    }
    const std::vector<double> b0{1e17};
    CHECK(serial[1].v_over_c == sweep_b0(0.0, SpinBranch::plus, 0, b0)[0].v_over_c);
}

TEST_CASE("log grid") {
    const auto g = log_grid(1e10, 1e12, 4);
    CHECK(g.size() == 9);
    CHECK(g.front() == 1e10);
    CHECK(g.back() == doctest::Approx(1e12));
    CHECK(log_grid(5.0, 5.0, 3).size() == 1);
    CHECK_THROWS_AS(log_grid(1.0, 10.0, 0), std::invalid_argument);
    CHECK_THROWS_AS(log_grid(0.0, 10.0, 1), std::invalid_argument);
}
