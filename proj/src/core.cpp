#include "arrival/core.hpp"

#include <cmath>
#include <string>

#include "arrival/specfun.hpp"

namespace arrival::core {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

double fd_step(double scale) { return std::max(1e-6 * std::fabs(scale), 1e-9); }

// shrink h until [v-h, v+h] stays inside the branch domain along one axis
template <typename Inside>
double fit_step(double h, const Inside& inside) {
    for (int i = 0; i < 24 && !(inside(h)); ++i) h *= 0.5;
    if (!inside(h))
        throw std::domain_error("finite difference: no admissible step inside branch domain");
    return h;
}

} // namespace

double van_vleck_amplitude(double d2S_dBdE, const QuantizationSpec& q, double hbar) {
    q.validate();
    if (!(hbar > 0.0)) throw std::domain_error("van_vleck_amplitude: hbar must be > 0");
    if (!std::isfinite(d2S_dBdE))
        throw std::domain_error("van_vleck_amplitude: non-finite d2S/dBdE");
    const double density_factor = q.dB_Q ? *q.dB_Q : 1.0;
    return std::sqrt(density_factor / (2.0 * kPi * hbar) * std::fabs(d2S_dBdE));
}

std::complex<double> superpose(const std::vector<BranchContribution>& contribs, double hbar) {
    if (contribs.empty()) throw std::domain_error("superpose: empty contribution list");
    if (!(hbar > 0.0)) throw std::domain_error("superpose: hbar must be > 0");
    std::complex<double> acc{0.0, 0.0};
    for (const auto& c : contribs) {
        if (c.amplitude < 0.0) throw std::domain_error("superpose: negative branch amplitude");
        acc += c.amplitude * std::exp(std::complex<double>(0.0, c.action / hbar));
    }
    return acc;
}

double quantization_interval(double T, double hbar) {
    if (!(T > 0.0)) throw std::domain_error("quantization_interval: period must be > 0");
    if (!(hbar > 0.0)) throw std::domain_error("quantization_interval: hbar must be > 0");
    return 2.0 * kPi * hbar / T;
}

std::vector<double> quantized_energies(const std::function<double(double)>& action_diff,
                                       int n_max, double E_lo, double E_hi, double hbar) {
    if (n_max < 0) throw std::domain_error("quantized_energies: n_max must be >= 0");
    if (!(E_hi > E_lo)) throw std::domain_error("quantized_energies: empty bracket");
    if (!(hbar > 0.0)) throw std::domain_error("quantized_energies: hbar must be > 0");

    // coarse monotonicity guard; bisection below assumes an increasing map
    const int kScan = 64;
    double prev = action_diff(E_lo);
    const double slack = 1e-12 * (std::fabs(prev) + 1.0);
    for (int i = 1; i <= kScan; ++i) {
        const double E = E_lo + (E_hi - E_lo) * i / kScan;
        const double v = action_diff(E);
        if (v < prev - slack)
            throw std::domain_error("quantized_energies: action difference not monotone on bracket");
        prev = v;
    }

    const double f_lo = action_diff(E_lo);
    const double f_hi = action_diff(E_hi);
    std::vector<double> out;
    out.reserve(n_max + 1);
    for (int n = 0; n <= n_max; ++n) {
        const double target = kPi * hbar * (n + 0.5);
        if (target < f_lo || target > f_hi)
            throw bracket_error("quantized_energies: root not bracketed for n = " +
                                std::to_string(n));
        double lo = E_lo, hi = E_hi;
        for (int it = 0; it < 200; ++it) {
            const double mid = 0.5 * (lo + hi);
            if (action_diff(mid) < target)
                lo = mid;
            else
                hi = mid;
            if (hi - lo <= 1e-12 * std::max(1.0, std::fabs(mid))) break;
        }
        out.push_back(0.5 * (lo + hi));
    }
    return out;
}

double modulation_period(double t1, double t2, double hbar) {
    if (t1 == t2)
        throw std::domain_error(
            "modulation_period: merged branches (t1 == t2); use the Airy regime");
    if (!(hbar > 0.0)) throw std::domain_error("modulation_period: hbar must be > 0");
    return 2.0 * kPi * hbar / std::fabs(t2 - t1);
}

double interference_probability(double A, double S1, double S2, double dE_Q, double hbar) {
    if (A < 0.0) throw std::domain_error("interference_probability: A must be >= 0");
    if (!(hbar > 0.0)) throw std::domain_error("interference_probability: hbar must be > 0");
    return 2.0 * dE_Q * A * A * (1.0 + std::cos((S2 - S1) / hbar));
}

double airy_argument(double E, const TurningPoint& tp, double hbar) {
    if (!(tp.gamma > 0.0)) throw std::domain_error("airy_argument: gamma must be > 0");
    if (!(hbar > 0.0)) throw std::domain_error("airy_argument: hbar must be > 0");
    return -std::cbrt(tp.gamma / (hbar * hbar)) * (E - tp.V);
}

double airy_amplitude(double E, const TurningPoint& tp, const QuantizationSpec& q, double hbar) {
    q.validate();
    if (!(tp.gamma > 0.0)) throw std::domain_error("airy_amplitude: gamma must be > 0");
    if (!(hbar > 0.0)) throw std::domain_error("airy_amplitude: hbar must be > 0");
    const double scale = std::cbrt(tp.gamma / (hbar * hbar)); // (gamma/hbar^2)^{1/3}
    const double density_factor = q.dB_Q ? *q.dB_Q : 1.0;
    const double rho = q.dE_Q * density_factor * scale * scale * std::fabs(tp.dV_dB);
    return std::sqrt(rho) * specfun::airy_ai(-scale * (E - tp.V));
}

Regime regime_select(double E, const TurningPoint& tp, double hbar) {
    if (!(tp.gamma > 0.0)) throw std::domain_error("regime_select: gamma must be > 0");
    if (!(hbar > 0.0)) throw std::domain_error("regime_select: hbar must be > 0");
    const double threshold = tp.V - kCrossoverArgument * std::cbrt(hbar * hbar / tp.gamma);
    return (E < threshold) ? Regime::AIRY_PATCH : Regime::SEPARATED_BRANCHES;
}

double mixed_action_derivative(const Branch& br, double B, double E) {
    if (!br.action || !br.domain) throw std::domain_error("mixed_action_derivative: empty branch");
    if (!br.domain(B, E)) throw std::domain_error("mixed_action_derivative: point outside branch domain");
    const double hB = fit_step(fd_step(B), [&](double h) {
        return br.domain(B - h, E) && br.domain(B + h, E);
    });
    const double hE = fit_step(fd_step(E), [&](double h) {
        return br.domain(B - hB, E - h) && br.domain(B - hB, E + h) &&
               br.domain(B + hB, E - h) && br.domain(B + hB, E + h);
    });
    const double spp = br.action(B + hB, E + hE);
    const double spm = br.action(B + hB, E - hE);
    const double smp = br.action(B - hB, E + hE);
    const double smm = br.action(B - hB, E - hE);
    return (spp - spm - smp + smm) / (4.0 * hB * hE);
}

double action_time_residual(const Branch& br, double B, double E) {
    if (!br.action || !br.arrival_time || !br.domain)
        throw std::domain_error("action_time_residual: empty branch");
    if (!br.domain(B, E)) throw std::domain_error("action_time_residual: point outside branch domain");
    const double hE = fit_step(fd_step(E), [&](double h) {
        return br.domain(B, E - h) && br.domain(B, E + h);
    });
    const double dS_dE = (br.action(B, E + hE) - br.action(B, E - hE)) / (2.0 * hE);
    const double t = br.arrival_time(B, E);
    return std::fabs(dS_dE - t) / std::max(std::fabs(t), 1e-300);
}

} // namespace arrival::core
