#ifndef ARRIVAL_TWOMODE_HPP
#define ARRIVAL_TWOMODE_HPP

#include "arrival/core.hpp"

namespace arrival::twomode {

struct TwoModeConfig {
    int N = 2;          // total photon number
    double hbar = 1.0;

    // Casimir-like radius hbar (N+1)/2, strictly above the largest amplitude hbar N/2
    double I() const { return hbar * (N + 1) / 2.0; }
    void validate() const;
};

struct SpinPoint {
    double J1; // input-side photon-difference action, hbar * m1
    double J2; // output-side photon-difference action, hbar * m2
};

// m must sit on the half-integer lattice of N: 2m integral, |2m| <= N,
// 2m congruent to N mod 2. Throws otherwise.
void validate_quantum_number(double m, const TwoModeConfig& cfg);

// phi_pm = +-arccos(J2/sqrt(I^2 - J1^2)) + 2 pi n_cycle, on the strict
// interior J1^2 + J2^2 < I^2.
double arrival_phase(const SpinPoint& p, const TwoModeConfig& cfg, int sign, int n_cycle);

// S_+ = -J1 arccos(J2/sqrt(I^2-J1^2)) - J2 arccos(J1/sqrt(I^2-J2^2))
//       + I arccos(J1 J2 / sqrt((I^2-J1^2)(I^2-J2^2))) - (pi/4) hbar; S_- = -S_+.
double action_jact(const SpinPoint& p, const TwoModeConfig& cfg, int sign);

// Turning-point data for the patch along J1 at fixed J2 != 0, in the
// engine frame where the energy-like variable is -J1 (the classically
// allowed side J1 < sqrt(I^2 - J2^2) then lies above the threshold).
core::TurningPoint turning_point_at(double J2, const TwoModeConfig& cfg);

// Registered arrival branch over (B = J2, E = -J1).
core::Branch branch(int sign, int n_cycle, const TwoModeConfig& cfg);

// Which evaluation the semiclassical inner product uses at (m2, m1).
core::Regime regime_at(double m2, double m1, const TwoModeConfig& cfg);

// Semiclassical <m2|m1>: two-branch cosine form on the interior, Airy patch
// near the J1 turning point at fixed J2, quadrant folding for negative m.
double inner_product(double m2, double m1, const TwoModeConfig& cfg);

// |<m2|m1>|^2
double probability(double m2, double m1, const TwoModeConfig& cfg);

// Closed-form output probabilities for m2 = 1 (even N): a quadratic-envelope
// alternation in m1 that crosses over near m1 = (N+1)/(2 sqrt(2)).
double m2one_probability(double m1, const TwoModeConfig& cfg);

} // namespace arrival::twomode

#endif
