#include "arrival/harmonic.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace arrival::harmonic {

namespace {

constexpr double kPi = 3.14159265358979323846;

// relative slack for "at the turning point" comparisons
constexpr double kEdgeSlack = 1e-12;

void check_sign(int sign) {
    if (sign != 1 && sign != -1) {
        throw std::domain_error("branch sign must be +1 or -1");
    }
}

// arccos argument sqrt(k/2E) x, clamped against roundoff at the edges
double cos_argument(double x, double E, const OscillatorConfig& cfg, bool* forbidden) {
    const double u = std::sqrt(cfg.k / (2.0 * E)) * x;
    *forbidden = std::fabs(u) > 1.0 + kEdgeSlack;
    return std::clamp(u, -1.0, 1.0);
}

} // namespace

bool classically_allowed(const HOPoint& p, const OscillatorConfig& cfg) {
    return p.E > 0.0 && p.E >= 0.5 * cfg.k * p.x * p.x;
}

double turning_point_position(double E, const OscillatorConfig& cfg) {
    cfg.validate();
    if (!(E > 0.0)) {
        throw std::domain_error("turning_point_position requires E > 0");
    }
    return std::sqrt(2.0 * E / cfg.k);
}

double well_action_difference(double E, const OscillatorConfig& cfg) {
    const double x_tp = turning_point_position(E, cfg);
    return detail::action_signed(-x_tp, E, cfg) - detail::action_signed(x_tp, E, cfg);
}

double eigen_energy(int n, const OscillatorConfig& cfg) {
    cfg.validate();
    if (n < 0) {
        throw std::domain_error("eigen_energy requires n >= 0");
    }
    const auto diff = [&cfg](double E) { return well_action_difference(E, cfg); };
    const double E_lo = 1e-9 * cfg.hbar * cfg.omega; // the action difference needs E > 0
    const double E_hi = cfg.hbar * cfg.omega * (static_cast<double>(n) + 1.5);
    return core::quantized_energies(diff, n, E_lo, E_hi, cfg.hbar).back();
}

double arrival_time(const HOPoint& p, int sign, int n_cycle, const OscillatorConfig& cfg) {
    cfg.validate();
    check_sign(sign);
    if (!(p.E > 0.0)) {
        throw std::domain_error("arrival_time requires E > 0");
    }
    bool forbidden = false;
    const double u = cos_argument(std::fabs(p.x), p.E, cfg, &forbidden);
    if (forbidden) {
        throw std::domain_error("arrival_time: point is classically forbidden");
    }
    const double T = cfg.period();
    double t = sign * std::acos(u) / cfg.omega;
    if (p.x < 0.0) {
        t = 0.5 * T - t;
    }
    return t + n_cycle * T;
}

double detail::action_signed(double x, double E, const OscillatorConfig& cfg) {
    bool forbidden = false;
    const double u = cos_argument(x, E, cfg, &forbidden);
    if (forbidden) {
        throw std::domain_error("action: point is classically forbidden");
    }
    // x sqrt((k/2)(E - k x^2/2))/omega rewritten as (E/omega) u sqrt(1 - u^2):
    // the combination acos(u) - u sqrt(1 - u^2) goes flat at the turning
    // points, which keeps roundoff there at eps rather than sqrt(eps)
    const double root = std::sqrt(std::max(1.0 - u * u, 0.0));
    return (E / cfg.omega) * (std::acos(u) - u * root) - 0.25 * kPi * cfg.hbar;
}

double action_plus(const HOPoint& p, const OscillatorConfig& cfg) {
    cfg.validate();
    if (!(p.E > 0.0)) {
        throw std::domain_error("action requires E > 0");
    }
    return detail::action_signed(std::fabs(p.x), p.E, cfg);
}

core::TurningPoint turning_point_at(double x, const OscillatorConfig& cfg) {
    cfg.validate();
    if (x == 0.0) {
        throw std::domain_error("turning_point_at requires x != 0");
    }
    core::TurningPoint tp;
    tp.V = 0.5 * cfg.k * x * x;
    tp.gamma = 2.0 / (cfg.omega * cfg.omega * cfg.k * x * x);
    tp.dV_dB = cfg.k * x;
    return tp;
}

core::Branch branch(int sign, int n_cycle, const OscillatorConfig& cfg) {
    cfg.validate();
    check_sign(sign);
    core::Branch br;
    br.index = sign * (1 + n_cycle);
    const double T = cfg.period();
    const double cycle_action = 2.0 * kPi / cfg.omega; // d/dE of one extra period's action
    br.domain = [cfg](double B, double E) {
        return E > 0.0 && E - 0.5 * cfg.k * B * B > 0.0;
    };
    br.arrival_time = [cfg, sign, n_cycle, T](double B, double E) {
        bool forbidden = false;
        const double u = cos_argument(B, E, cfg, &forbidden);
        if (forbidden) {
            throw std::domain_error("arrival_time: point is classically forbidden");
        }
        return sign * std::acos(u) / cfg.omega + n_cycle * T;
    };
    br.action = [cfg, sign, n_cycle, cycle_action](double B, double E) {
        return sign * detail::action_signed(B, E, cfg) + n_cycle * cycle_action * E;
    };
    return br;
}

core::Regime wavefunction_regime(int n, double x, const OscillatorConfig& cfg) {
    cfg.validate();
    if (n < 0) {
        throw std::domain_error("wavefunction requires n >= 0");
    }
    const double ax = std::fabs(x);
    if (ax == 0.0) {
        return core::Regime::SEPARATED_BRANCHES;
    }
    const double E = eigen_energy(n, cfg);
    return core::regime_select(E, turning_point_at(ax, cfg), cfg.hbar);
}

double wavefunction(int n, double x, const OscillatorConfig& cfg) {
    cfg.validate();
    if (n < 0) {
        throw std::domain_error("wavefunction requires n >= 0");
    }
    const double E = eigen_energy(n, cfg);
    const double ax = std::fabs(x);
    const double parity = (x < 0.0 && n % 2 == 1) ? -1.0 : 1.0;
    const core::QuantizationSpec q{cfg.hbar * cfg.omega, core::CONTINUOUS};

    const bool separated =
        ax == 0.0 || core::regime_select(E, turning_point_at(ax, cfg), cfg.hbar) ==
                         core::Regime::SEPARATED_BRANCHES;
    double value = 0.0;
    if (separated) {
        // two conjugate branches; dt/dx is the mixed action derivative
        const double d2S = -std::sqrt(cfg.k / (2.0 * E - cfg.k * ax * ax)) / cfg.omega;
        const double A = core::van_vleck_amplitude(d2S, q, cfg.hbar);
        const double S = action_plus({ax, E}, cfg);
        const auto sum = core::superpose({{A, S}, {A, -S}}, cfg.hbar);
        value = std::sqrt(q.dE_Q) * sum.real();
    } else {
        value = core::airy_amplitude(E, turning_point_at(ax, cfg), q, cfg.hbar);
    }
    return parity * value;
}

double photon_probability(double x, int n, const OscillatorConfig& cfg) {
    const double w = wavefunction(n, x, cfg);
    return w * w;
}

double small_x_parity_probability(int n, double x, const OscillatorConfig& cfg) {
    cfg.validate();
    if (n < 0) {
        throw std::domain_error("small_x_parity_probability requires n >= 0");
    }
    const double quanta = cfg.hbar * cfg.omega * (n + 0.5);
    const double prefactor = (2.0 / kPi) * std::sqrt(cfg.k / (2.0 * quanta));
    const double arg = std::sqrt(2.0 * cfg.k * (n + 0.5) / (cfg.hbar * cfg.omega)) * x;
    const double trig = (n % 2 == 0) ? std::cos(arg) : std::sin(arg);
    return prefactor * trig * trig;
}

double first_even_minimum_energy(double x, const OscillatorConfig& cfg) {
    cfg.validate();
    if (x == 0.0) {
        throw std::domain_error("first_even_minimum_energy requires x != 0");
    }
    const double quarter = 0.25 * kPi * cfg.hbar * cfg.omega;
    return quarter * quarter / (0.5 * cfg.k * x * x);
}

double estimate_x_from_minimum(double E1, const OscillatorConfig& cfg) {
    cfg.validate();
    if (!(E1 > 0.0)) {
        throw std::domain_error("estimate_x_from_minimum requires E1 > 0");
    }
    return 0.25 * kPi * cfg.hbar * cfg.omega / std::sqrt(0.5 * cfg.k * E1);
}

double momentum_from_action(const HOPoint& p, const OscillatorConfig& cfg) {
    cfg.validate();
    if (!(p.E > 0.0) || !(p.E - 0.5 * cfg.k * p.x * p.x > 0.0)) {
        throw std::domain_error("momentum_from_action requires an interior point");
    }
    double h = std::max(1e-6 * std::fabs(p.x), 1e-9);
    const auto inside = [&](double x) { return p.E - 0.5 * cfg.k * x * x > 0.0; };
    int shrink = 0;
    while ((!inside(p.x + h) || !inside(p.x - h)) && shrink < 24) {
        h *= 0.5;
        ++shrink;
    }
    if (!inside(p.x + h) || !inside(p.x - h)) {
        throw std::domain_error("momentum_from_action: no interior step at this point");
    }
    return (detail::action_signed(p.x + h, p.E, cfg)
            - detail::action_signed(p.x - h, p.E, cfg)) / (2.0 * h);
}

} // namespace arrival::harmonic
