#ifndef ARRIVAL_CORE_HPP
#define ARRIVAL_CORE_HPP

#include <complex>
#include <functional>
#include <optional>
#include <vector>

#include "arrival/errors.hpp"

namespace arrival::core {

// Airy argument above which the two-branch sum degrades and the turning-point
// patch takes over; the boundary itself evaluates as separated branches.
inline constexpr double kCrossoverArgument = -1.42;

// Marker for continuous observables: the corresponding quantization interval
// is omitted from amplitude prefactors (density convention).
inline constexpr std::nullopt_t CONTINUOUS = std::nullopt;

struct QuantizationSpec {
    double dE_Q;                  // energy-level spacing 2*pi*hbar/T
    std::optional<double> dB_Q;   // observable spacing, or CONTINUOUS

    void validate() const {
        if (!(dE_Q > 0.0)) throw std::domain_error("QuantizationSpec: dE_Q must be > 0");
        if (dB_Q && !(*dB_Q > 0.0))
            throw std::domain_error("QuantizationSpec: discrete dB_Q must be > 0");
    }
};

// Local turning-point data: threshold energy V(B), the quadratic-merge
// coefficient gamma of (t+ - t-)^2 = gamma (E - V), and dV/dB.
struct TurningPoint {
    double V;
    double gamma;
    double dV_dB;
};

enum class Regime { SEPARATED_BRANCHES, AIRY_PATCH };

struct BranchContribution {
    double amplitude; // A_nu >= 0
    double action;    // S_nu
};

// One arrival-time solution t_nu(B, E) together with its action S_nu(B, E)
// and the (B, E) region where the branch exists; dS/dE must reproduce the
// arrival time inside the domain.
struct Branch {
    int index = 0;
    std::function<double(double, double)> arrival_time;
    std::function<double(double, double)> action;
    std::function<bool(double, double)> domain;
};

// sqrt((dB_Q / 2 pi hbar) |d2S/dBdE|); dB_Q omitted when CONTINUOUS.
double van_vleck_amplitude(double d2S_dBdE, const QuantizationSpec& q, double hbar);

// sum A_nu exp(i S_nu / hbar); the caller carries the global
// sqrt(dE_Q dB_Q / 2 pi hbar) factoring via van_vleck_amplitude.
std::complex<double> superpose(const std::vector<BranchContribution>& contribs, double hbar);

// dE_Q = 2 pi hbar / T
double quantization_interval(double T, double hbar);

// Solve action_diff(E_n) = pi hbar (n + 1/2) for n = 0..n_max by bisection on
// [E_lo, E_hi]; action_diff is the inter-turning-point action difference
// S_+(B2, E) - S_+(B1, E) and must be monotone increasing on the bracket.
// Throws bracket_error naming the failing level when a root is not bracketed.
std::vector<double> quantized_energies(const std::function<double(double)>& action_diff,
                                       int n_max, double E_lo, double E_hi, double hbar);

// E_mod = 2 pi hbar / |t2 - t1|
double modulation_period(double t1, double t2, double hbar);

// 2 dE_Q A^2 (1 + cos((S2 - S1)/hbar))
double interference_probability(double A, double S1, double S2, double dE_Q, double hbar);

// sqrt(rho_N) * Ai(-(gamma/hbar^2)^{1/3} (E - V)),
// rho_N = dE_Q dB_Q (gamma/hbar^2)^{2/3} |dV/dB| (continuous factors omitted)
double airy_amplitude(double E, const TurningPoint& tp, const QuantizationSpec& q, double hbar);

// AIRY_PATCH iff E < V + 1.42 (hbar^2/gamma)^{1/3}; the boundary value itself
// selects SEPARATED_BRANCHES.
Regime regime_select(double E, const TurningPoint& tp, double hbar);

// The Airy argument -(gamma/hbar^2)^{1/3} (E - V) that regime_select thresholds.
double airy_argument(double E, const TurningPoint& tp, double hbar);

// Centered finite-difference cross partial d2S/dBdE of a branch action,
// step h = max(1e-6 |scale|, 1e-9) per axis, shrunk to stay inside the domain.
double mixed_action_derivative(const Branch& br, double B, double E);

// | FD_E(S) - t | / max(|t|, 1e-300): the relative residual between a
// branch's action derivative and its arrival time.
double action_time_residual(const Branch& br, double B, double E);

} // namespace arrival::core

#endif
