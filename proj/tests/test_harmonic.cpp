#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <sstream>
#include <vector>

#include "arrival/harmonic.hpp"
#include "arrival/specfun.hpp"

using namespace arrival;
namespace ho = arrival::harmonic;

namespace {

constexpr double kPi = 3.14159265358979323846;

const OscillatorConfig kDefault{};                 // hbar = omega = 1, k = 2
const OscillatorConfig kScaled{1.7, 2.5, 0.25};    // k, omega, hbar

// two-branch cosine form, valid wherever the branches are separated
double separated_form(double x, double E, const OscillatorConfig& cfg) {
    const double amp2 = (2.0 / kPi) * std::sqrt(cfg.k / (2.0 * E - cfg.k * x * x));
    const double S = ho::action_plus({std::fabs(x), E}, cfg);
    return std::sqrt(amp2) * std::cos(S / cfg.hbar);
}

// abscissa (0 < x < turning point) where the Airy argument equals the
// crossover value for level n
double crossover_position(int n, const OscillatorConfig& cfg) {
    const double E = ho::eigen_energy(n, cfg);
    double lo = 1e-3 * ho::turning_point_position(E, cfg);
    double hi = 0.999999 * ho::turning_point_position(E, cfg);
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double arg = core::airy_argument(E, ho::turning_point_at(mid, cfg), cfg.hbar);
        (arg < core::kCrossoverArgument ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

} // namespace

TEST_CASE("energy levels form the even ladder") {
    for (int n = 0; n <= 10; ++n) {
        CHECK(std::fabs(ho::eigen_energy(n, kDefault) - (n + 0.5)) <= 1e-10);
    }
    for (int n = 0; n <= 9; ++n) {
        const double gap = ho::eigen_energy(n + 1, kDefault) - ho::eigen_energy(n, kDefault);
        CHECK(std::fabs(gap - kDefault.hbar * kDefault.omega) <= 1e-9);
    }
    for (int n : {0, 3, 7}) {
        const double expected = kScaled.hbar * kScaled.omega * (n + 0.5);
        CHECK(ho::eigen_energy(n, kScaled) == doctest::Approx(expected).epsilon(1e-10));
    }
    CHECK_THROWS_AS(ho::eigen_energy(-1, kDefault), std::domain_error);
}

TEST_CASE("well action difference is linear in energy") {
    std::mt19937 rng(77);
    std::uniform_real_distribution<double> energy(0.1, 40.0);
    for (int trial = 0; trial < 50; ++trial) {
        const double E = energy(rng);
        CHECK(ho::well_action_difference(E, kDefault)
              == doctest::Approx(kPi * E).epsilon(1e-13));
        CHECK(ho::well_action_difference(E, kScaled)
              == doctest::Approx(kPi * E / kScaled.omega).epsilon(1e-13));
    }
}

TEST_CASE("arrival times within one cycle") {
    const double T = kDefault.period();
    CHECK(ho::arrival_time({0.0, 2.5}, +1, 0, kDefault) == doctest::Approx(T / 4).epsilon(1e-14));
    CHECK(ho::arrival_time({0.0, 2.5}, -1, 0, kDefault) == doctest::Approx(-T / 4).epsilon(1e-14));

    const double x_tp = ho::turning_point_position(2.5, kDefault);
    CHECK(std::fabs(ho::arrival_time({x_tp, 2.5}, +1, 0, kDefault)) <= 1e-7);
    CHECK(std::fabs(ho::arrival_time({x_tp, 2.5}, -1, 0, kDefault)) <= 1e-7);

    // reflection through T/2 for x < 0, plus whole-cycle shifts
    const double t_pos = ho::arrival_time({0.8, 2.5}, +1, 0, kDefault);
    CHECK(ho::arrival_time({-0.8, 2.5}, +1, 0, kDefault)
          == doctest::Approx(0.5 * T - t_pos).epsilon(1e-14));
    CHECK(ho::arrival_time({0.8, 2.5}, +1, 3, kDefault)
          == doctest::Approx(t_pos + 3 * T).epsilon(1e-14));

    CHECK_THROWS_AS(ho::arrival_time({2.0, 2.5}, +1, 0, kDefault), std::domain_error);
    CHECK_THROWS_AS(ho::arrival_time({0.5, 2.5}, +2, 0, kDefault), std::domain_error);

    // the registered branch continues the same times across x = 0
    const auto plus = ho::branch(+1, 0, kDefault);
    CHECK(plus.arrival_time(-0.8, 2.5)
          == doctest::Approx(ho::arrival_time({-0.8, 2.5}, +1, 0, kDefault)).epsilon(1e-13));
}

TEST_CASE("action values and parity identity") {
    const double E = 3.2;
    const double x_tp = ho::turning_point_position(E, kDefault);
    CHECK(ho::action_plus({x_tp, E}, kDefault)
          == doctest::Approx(-0.25 * kPi * kDefault.hbar).epsilon(1e-12));
    CHECK(ho::action_plus({0.0, E}, kDefault)
          == doctest::Approx(0.5 * kPi * E - 0.25 * kPi).epsilon(1e-13));
    CHECK_THROWS_AS(ho::action_plus({x_tp * 1.01, E}, kDefault), std::domain_error);

    // signed continuation: S(-x) = pi E/omega - pi hbar/2 - S(x)
    for (double x : {0.1, 0.6, 1.2}) {
        const double lhs = ho::detail::action_signed(-x, E, kDefault);
        const double rhs = kPi * E - 0.5 * kPi - ho::detail::action_signed(x, E, kDefault);
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-13));
    }
}

TEST_CASE("branch actions reproduce arrival times by finite differences") {
    for (int sign : {+1, -1}) {
        for (int cycle : {0, 1}) {
            const auto br = ho::branch(sign, cycle, kDefault);
            for (auto [x, E] : std::vector<std::pair<double, double>>{
                     {0.3, 2.5}, {-0.8, 3.1}, {1.0, 4.7}, {0.0, 1.5}}) {
                CHECK(core::action_time_residual(br, x, E) <= 1e-6);
            }
        }
    }
    // mixed derivative dt/dx against the analytic value (finite-difference
    // cross partials carry ~1e-5 cancellation noise at the pinned step)
    const auto br = ho::branch(+1, 0, kDefault);
    for (auto [x, E] : std::vector<std::pair<double, double>>{{0.3, 2.5}, {-0.9, 4.1}}) {
        const double analytic = -std::sqrt(kDefault.k / (2.0 * E - kDefault.k * x * x));
        CHECK(core::mixed_action_derivative(br, x, E)
              == doctest::Approx(analytic).epsilon(2e-4));
    }
}

TEST_CASE("eigenfunction values at the origin") {
    const double w0 = ho::wavefunction(0, 0.0, kDefault);
    CHECK(w0 == doctest::Approx(std::sqrt((2.0 / kPi) * std::sqrt(2.0))).epsilon(1e-9));
    CHECK(std::fabs(w0 - 0.9489) < 2e-4);
    CHECK(std::fabs(ho::wavefunction(1, 0.0, kDefault)) <= 1e-10);

    // the overshoot against the exact peak stays under 8%
    const double exact0 = specfun::ho_eigenfunction_exact(0, 0.0, kDefault);
    CHECK(exact0 == doctest::Approx(std::pow(2.0 / kPi, 0.25)).epsilon(1e-12));
    CHECK(std::fabs(w0 - exact0) / exact0 < 0.08);
}

TEST_CASE("parity sign rule") {
    for (int n = 0; n <= 20; ++n) {
        const double parity = (n % 2 == 0) ? 1.0 : -1.0;
        for (double x : {0.1, 0.7, 1.3, 2.2, 3.0}) {
            CHECK(ho::wavefunction(n, -x, kDefault) == parity * ho::wavefunction(n, x, kDefault));
            CHECK(ho::photon_probability(-x, n, kDefault) == ho::photon_probability(x, n, kDefault));
        }
    }
}

TEST_CASE("zero crossings of the second eigenfunction") {
    const auto bisect_zero = [](auto&& f, double lo, double hi) {
        double flo = f(lo);
        for (int it = 0; it < 120; ++it) {
            const double mid = 0.5 * (lo + hi);
            const double fmid = f(mid);
            if ((flo < 0) == (fmid < 0)) {
                lo = mid;
                flo = fmid;
            } else {
                hi = mid;
            }
        }
        return 0.5 * (lo + hi);
    };
    const double semi = bisect_zero(
        [](double x) { return ho::wavefunction(2, x, kDefault); }, 0.2, 0.9);
    const double exact = bisect_zero(
        [](double x) { return specfun::ho_eigenfunction_exact(2, x, kDefault); }, 0.2, 0.9);
    CHECK(exact == doctest::Approx(0.5).epsilon(1e-9));
    CHECK(std::fabs(semi - exact) <= 0.05);
}

TEST_CASE("agreement with the exact eigenfunctions away from the patch") {
    for (int n : {1, 2}) {
        const double E = ho::eigen_energy(n, kDefault);
        double worst = 0.0;
        for (int i = 0; i <= 600; ++i) {
            const double x = -3.0 + 6.0 * i / 600.0;
            if (x != 0.0) {
                const double arg =
                    core::airy_argument(E, ho::turning_point_at(std::fabs(x), kDefault),
                                        kDefault.hbar);
                if (arg >= core::kCrossoverArgument - 1e-9) continue;
            }
            const double diff = std::fabs(ho::wavefunction(n, x, kDefault)
                                          - specfun::ho_eigenfunction_exact(n, x, kDefault));
            worst = std::max(worst, diff);
        }
        CHECK_MESSAGE(worst <= 0.08, "level ", n, " worst deviation ", worst);
    }
}

TEST_CASE("normalization of the patched eigenfunctions") {
    for (int n = 1; n <= 10; ++n) {
        const double E = ho::eigen_energy(n, kDefault);
        const double L = ho::turning_point_position(E, kDefault) + 3.0;
        const int steps = 4200;
        const double h = 2.0 * L / steps;
        double sum = 0.0;
        for (int i = 0; i <= steps; ++i) {
            const double x = -L + i * h;
            const double w = ho::wavefunction(n, x, kDefault);
            sum += (i == 0 || i == steps ? 0.5 : 1.0) * w * w;
        }
        const double norm = sum * h;
        CHECK_MESSAGE((norm >= 0.95 && norm <= 1.05), "level ", n, " integrates to ", norm);
    }
    // the exact oracle integrates to one much more tightly
    for (int n : {1, 4, 9}) {
        const int steps = 4800;
        const double L = 12.0;
        const double h = 2.0 * L / steps;
        double sum = 0.0;
        for (int i = 0; i <= steps; ++i) {
            const double u = specfun::ho_eigenfunction_exact(n, -L + i * h, kDefault);
            sum += (i == 0 || i == steps ? 0.5 : 1.0) * u * u;
        }
        CHECK(sum * h == doctest::Approx(1.0).epsilon(1e-8));
    }
}

TEST_CASE("separated and Airy moduli at the crossover argument") {
    // the two evaluations should agree within 5% for levels 1..6
    for (int n = 1; n <= 6; ++n) {
        const double E = ho::eigen_energy(n, kDefault);
        const double xc = crossover_position(n, kDefault);
        const core::QuantizationSpec q{kDefault.hbar * kDefault.omega, core::CONTINUOUS};
        const double sep = std::fabs(separated_form(xc, E, kDefault));
        const double airy =
            std::fabs(core::airy_amplitude(E, ho::turning_point_at(xc, kDefault), q,
                                           kDefault.hbar));
        const double rel = std::fabs(sep - airy) / sep;
        CHECK_MESSAGE(rel <= 0.05, "level ", n, " crossover at x = ", xc,
                      ": separated ", sep, ", Airy ", airy, ", mismatch ", rel * 100, "%");
    }
}

TEST_CASE("regime selection along the x = 3 column") {
    for (int n = 0; n <= 11; ++n) {
        CHECK(ho::wavefunction_regime(n, 3.0, kDefault) == core::Regime::AIRY_PATCH);
    }
    for (int n = 12; n <= 25; ++n) {
        CHECK(ho::wavefunction_regime(n, 3.0, kDefault) == core::Regime::SEPARATED_BRANCHES);
    }
    // turning point energy 9 hbar omega sits between levels 8 and 9
    CHECK(ho::eigen_energy(8, kDefault) < 9.0);
    CHECK(ho::eigen_energy(9, kDefault) > 9.0);
    CHECK(0.5 * kDefault.k * 9.0 == doctest::Approx(9.0));
}

TEST_CASE("patched value matches the turning-point expression directly") {
    const double E = ho::eigen_energy(5, kDefault);
    const auto tp = ho::turning_point_at(3.0, kDefault);
    const double scale = std::cbrt(tp.gamma);
    const double rho = kDefault.hbar * kDefault.omega * std::cbrt(tp.gamma * tp.gamma)
                       * std::fabs(tp.dV_dB);
    const double direct = std::sqrt(rho) * specfun::airy_ai(-scale * (E - tp.V));
    CHECK(ho::wavefunction(5, 3.0, kDefault) == doctest::Approx(direct).epsilon(1e-13));
}

TEST_CASE("photon statistics at x = 3 oscillate with period four") {
    std::vector<double> P(26, 0.0);
    for (int n = 10; n <= 25; ++n) {
        P[n] = ho::photon_probability(3.0, n, kDefault);
    }
    for (int n = 11; n <= 24; ++n) {
        const bool is_min = P[n] < P[n - 1] && P[n] < P[n + 1];
        const bool expected = (n == 14 || n == 18 || n == 22);
        CHECK_MESSAGE(is_min == expected, "local-minimum test at n = ", n,
                      " (P = ", P[n], ")");
    }
    // spacing of four quanta matches the modulation period near n = 18
    const double E18 = ho::eigen_energy(18, kDefault);
    const double t1 = ho::arrival_time({3.0, E18}, +1, 0, kDefault);
    const double t2 = ho::arrival_time({3.0, E18}, -1, 0, kDefault);
    const double E_mod = core::modulation_period(t1, t2, kDefault.hbar);
    CHECK(std::fabs(E_mod - 4.0) <= 0.1);
}

TEST_CASE("odd photon numbers vanish at the origin") {
    for (int n : {1, 3, 5, 7, 9, 11, 15}) {
        CHECK(ho::photon_probability(0.0, n, kDefault) <= 1e-18);
    }
}

TEST_CASE("small-x parity formula") {
    CHECK(ho::small_x_parity_probability(3, 0.0, kDefault) == 0.0);
    const double expected6 = (2.0 / kPi) * std::sqrt(kDefault.k / (2.0 * 6.5));
    CHECK(ho::small_x_parity_probability(6, 0.0, kDefault)
          == doctest::Approx(expected6).epsilon(1e-14));

    // cross-check against the full evaluation at x = 0.225
    for (int n = 0; n <= 12; ++n) {
        const double full = ho::photon_probability(0.225, n, kDefault);
        const double small = ho::small_x_parity_probability(n, 0.225, kDefault);
        const double rel = std::fabs(small - full) / full;
        CHECK_MESSAGE(rel <= 0.10, "n = ", n, ": full ", full, ", small-x ", small,
                      ", relative gap ", rel * 100, "%");
    }
}

TEST_CASE("first even minimum and its inversion") {
    const double E1 = ho::first_even_minimum_energy(0.225, kDefault);
    CHECK(E1 == doctest::Approx(12.1847).epsilon(1e-4));
    CHECK(std::lround(E1 / 2.0) * 2 == 12);
    const double E1b = ho::first_even_minimum_energy(0.275, kDefault);
    CHECK(std::lround(E1b / 2.0) * 2 == 8);
    CHECK(ho::first_even_minimum_energy(0.9, kDefault)
          == doctest::Approx(ho::first_even_minimum_energy(0.225, kDefault) / 16.0)
                 .epsilon(1e-14));
    CHECK_THROWS_AS(ho::first_even_minimum_energy(0.0, kDefault), std::domain_error);

    CHECK(ho::estimate_x_from_minimum(12.5, kDefault) == doctest::Approx(0.222144).epsilon(1e-5));
    CHECK(ho::estimate_x_from_minimum(9.5, kDefault) == doctest::Approx(0.254817).epsilon(1e-5));
    CHECK(ho::estimate_x_from_minimum(8.5, kDefault) == doctest::Approx(0.269389).epsilon(1e-5));
    CHECK_THROWS_AS(ho::estimate_x_from_minimum(0.0, kDefault), std::domain_error);

    // the two operations invert each other
    for (double x : {0.1, 0.225, 0.4}) {
        CHECK(ho::estimate_x_from_minimum(ho::first_even_minimum_energy(x, kDefault), kDefault)
              == doctest::Approx(x).epsilon(1e-12));
    }
}

TEST_CASE("momentum recovered from the action gradient") {
    CHECK(std::fabs(ho::momentum_from_action({0.0, 2.5}, kDefault))
          == doctest::Approx(std::sqrt(2.0 * kDefault.k * 2.5)).epsilon(1e-6));
    const double mid = std::sqrt(2.5 / kDefault.k);
    CHECK(std::fabs(ho::momentum_from_action({mid, 2.5}, kDefault))
          == doctest::Approx(std::sqrt(kDefault.k * 2.5)).epsilon(1e-8));

    // near the turning point the magnitude falls toward zero
    const double near_tp = ho::turning_point_position(2.5, kDefault) * (1.0 - 1e-4);
    const double p_near = std::fabs(ho::momentum_from_action({near_tp, 2.5}, kDefault));
    CHECK(p_near == doctest::Approx(0.044720).epsilon(1e-3));

    std::mt19937 rng(2026);
    std::uniform_real_distribution<double> energy(0.3, 30.0);
    std::uniform_real_distribution<double> frac(-0.95, 0.95);
    for (int trial = 0; trial < 100; ++trial) {
        const double E = energy(rng);
        const double x = frac(rng) * ho::turning_point_position(E, kDefault);
        const double expected =
            std::sqrt(2.0 * kDefault.k * (E - 0.5 * kDefault.k * x * x)) / kDefault.omega;
        CHECK(std::fabs(ho::momentum_from_action({x, E}, kDefault))
              == doctest::Approx(expected).epsilon(1e-5));
    }
    CHECK_THROWS_AS(ho::momentum_from_action({3.0, 2.5}, kDefault), std::domain_error);
}

TEST_CASE("assembly is unit independent") {
    const OscillatorConfig cfg{1.1, 1.3, 0.7};
    for (int n : {0, 2, 5}) {
        const double E = ho::eigen_energy(n, cfg);
        for (double x : {0.0, 0.2, 0.5}) {
            if (x != 0.0
                && core::regime_select(E, ho::turning_point_at(x, cfg), cfg.hbar)
                       != core::Regime::SEPARATED_BRANCHES) {
                continue;
            }
            CHECK(ho::wavefunction(n, x, cfg)
                  == doctest::Approx(separated_form(x, E, cfg)).epsilon(1e-12));
        }
    }
    // normalization carries over to the scaled units
    const double E3 = ho::eigen_energy(3, cfg);
    const double L = ho::turning_point_position(E3, cfg) + 3.0;
    const int steps = 4200;
    const double h = 2.0 * L / steps;
    double sum = 0.0;
    for (int i = 0; i <= steps; ++i) {
        const double w = ho::wavefunction(3, -L + i * h, cfg);
        sum += (i == 0 || i == steps ? 0.5 : 1.0) * w * w;
    }
    CHECK(sum * h == doctest::Approx(1.0).epsilon(0.05));
}
