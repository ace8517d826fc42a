#include "arrival/twomode.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace arrival::twomode {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kLatticeTol = 1e-9;

double clamp1(double u) { return std::clamp(u, -1.0, 1.0); }

double parity_sign(long k) { return (k % 2 == 0) ? 1.0 : -1.0; }

void require_interior(const SpinPoint& p, const TwoModeConfig& cfg) {
    const double I = cfg.I();
    if (!(p.J1 * p.J1 + p.J2 * p.J2 < I * I)) {
        throw std::domain_error(
            "point is on or beyond the turning-point circle; use the Airy regime");
    }
}

void check_sign(int sign) {
    if (sign != 1 && sign != -1) {
        throw std::domain_error("branch sign must be +1 or -1");
    }
}

// S_+ without preconditions, shared by the public operation and the branch
double raw_action(double J1, double J2, double I, double hbar) {
    const double r1 = std::sqrt(I * I - J1 * J1);
    const double r2 = std::sqrt(I * I - J2 * J2);
    return -J1 * std::acos(clamp1(J2 / r1)) - J2 * std::acos(clamp1(J1 / r2))
           + I * std::acos(clamp1(J1 * J2 / (r1 * r2))) - 0.25 * kPi * hbar;
}

// folded evaluation on the m1 >= 0, m2 >= 0 quadrant
double folded_inner(double m2, double m1, const TwoModeConfig& cfg) {
    const double I = cfg.I();
    const double J1 = cfg.hbar * m1;
    const double J2 = cfg.hbar * m2;
    const core::QuantizationSpec q{cfg.hbar, cfg.hbar};

    const bool separated =
        m2 == 0.0 || core::regime_select(-J1, turning_point_at(J2, cfg), cfg.hbar) ==
                         core::Regime::SEPARATED_BRANCHES;
    if (separated) {
        const double disc = I * I - J1 * J1 - J2 * J2;
        const double A = core::van_vleck_amplitude(-1.0 / std::sqrt(disc), q, cfg.hbar);
        const double S = raw_action(J1, J2, I, cfg.hbar);
        const auto sum = core::superpose({{A, S}, {A, -S}}, cfg.hbar);
        return std::sqrt(q.dE_Q) * sum.real();
    }
    return core::airy_amplitude(-J1, turning_point_at(J2, cfg), q, cfg.hbar);
}

} // namespace

void TwoModeConfig::validate() const {
    if (N < 1) throw std::domain_error("TwoModeConfig: N must be >= 1");
    if (!(hbar > 0.0)) throw std::domain_error("TwoModeConfig: hbar must be > 0");
}

void validate_quantum_number(double m, const TwoModeConfig& cfg) {
    cfg.validate();
    const double twice = 2.0 * m;
    const long tm = std::lround(twice);
    if (std::fabs(twice - tm) > kLatticeTol) {
        throw std::domain_error("quantum number must be integer or half-integer");
    }
    if (std::labs(tm) > cfg.N) {
        throw std::domain_error("quantum number exceeds N/2");
    }
    if ((tm - cfg.N) % 2 != 0) {
        throw std::domain_error("quantum number has the wrong parity for this N");
    }
}

double arrival_phase(const SpinPoint& p, const TwoModeConfig& cfg, int sign, int n_cycle) {
    cfg.validate();
    check_sign(sign);
    require_interior(p, cfg);
    const double I = cfg.I();
    const double r1 = std::sqrt(I * I - p.J1 * p.J1);
    return sign * std::acos(clamp1(p.J2 / r1)) + 2.0 * kPi * n_cycle;
}

double action_jact(const SpinPoint& p, const TwoModeConfig& cfg, int sign) {
    cfg.validate();
    check_sign(sign);
    require_interior(p, cfg);
    return sign * raw_action(p.J1, p.J2, cfg.I(), cfg.hbar);
}

core::TurningPoint turning_point_at(double J2, const TwoModeConfig& cfg) {
    cfg.validate();
    const double I = cfg.I();
    if (J2 == 0.0 || !(std::fabs(J2) < I)) {
        throw std::domain_error("turning_point_at requires 0 < |J2| < I");
    }
    // engine frame with energy-like variable -J1: the allowed region
    // J1 < sqrt(I^2 - J2^2) maps to E above the threshold V = -sqrt(I^2 - J2^2)
    const double edge = std::sqrt(I * I - J2 * J2);
    core::TurningPoint tp;
    tp.V = -edge;
    tp.gamma = 2.0 * edge / (J2 * J2);
    tp.dV_dB = J2 / edge;
    return tp;
}

core::Branch branch(int sign, int n_cycle, const TwoModeConfig& cfg) {
    cfg.validate();
    check_sign(sign);
    core::Branch br;
    br.index = sign * (1 + n_cycle);
    const double I = cfg.I();
    const double hbar = cfg.hbar;
    br.domain = [I](double B, double E) { return E * E + B * B < I * I; };
    br.arrival_time = [I, sign, n_cycle](double B, double E) {
        const double J1 = -E;
        const double r1 = std::sqrt(I * I - J1 * J1);
        return sign * std::acos(clamp1(B / r1)) + 2.0 * kPi * n_cycle;
    };
    br.action = [I, hbar, sign, n_cycle](double B, double E) {
        return sign * raw_action(-E, B, I, hbar) + 2.0 * kPi * n_cycle * E;
    };
    return br;
}

core::Regime regime_at(double m2, double m1, const TwoModeConfig& cfg) {
    validate_quantum_number(m1, cfg);
    validate_quantum_number(m2, cfg);
    const double a1 = std::fabs(m1);
    const double a2 = std::fabs(m2);
    if (a2 == 0.0) {
        return core::Regime::SEPARATED_BRANCHES;
    }
    return core::regime_select(-cfg.hbar * a1, turning_point_at(cfg.hbar * a2, cfg), cfg.hbar);
}

double inner_product(double m2, double m1, const TwoModeConfig& cfg) {
    validate_quantum_number(m1, cfg);
    validate_quantum_number(m2, cfg);
    // fold into the first quadrant; each reflection shifts the cosine phase by
    // a multiple of pi, captured by an overall sign
    double sign = 1.0;
    double a1 = m1;
    double a2 = m2;
    if (a1 < 0.0) {
        sign *= parity_sign(std::lround(a2 - a1));
        a1 = -a1;
        a2 = -a2;
    }
    if (a2 < 0.0) {
        sign *= parity_sign(std::lround(cfg.N / 2.0 - a1));
        a2 = -a2;
    }
    return sign * folded_inner(a2, a1, cfg);
}

double probability(double m2, double m1, const TwoModeConfig& cfg) {
    const double v = inner_product(m2, m1, cfg);
    return v * v;
}

double m2one_probability(double m1, const TwoModeConfig& cfg) {
    cfg.validate();
    if (cfg.N % 2 != 0) {
        throw std::domain_error("m2 = 1 lies on the even-N lattice only");
    }
    const long im1 = std::lround(m1);
    if (std::fabs(m1 - im1) > kLatticeTol) {
        throw std::domain_error("m1 must be an integer for even N");
    }
    const double half = (cfg.N + 1) / 2.0;
    if (!(std::fabs(m1) < half)) {
        throw std::domain_error("|m1| must be below (N+1)/2");
    }
    const double frac = (m1 * m1) / (half * half);
    const double envelope = (2.0 / kPi) / std::sqrt(half * half - m1 * m1);
    const bool even_class = (cfg.N / 2 - im1) % 2 == 0;
    return envelope * (even_class ? frac : 1.0 - frac);
}

} // namespace arrival::twomode
