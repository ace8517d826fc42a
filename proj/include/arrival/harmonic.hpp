#ifndef ARRIVAL_HARMONIC_HPP
#define ARRIVAL_HARMONIC_HPP

#include "arrival/config.hpp"
#include "arrival/core.hpp"

namespace arrival::harmonic {

struct HOPoint {
    double x; // position
    double E; // energy
};

// E > (1/2) k x^2
bool classically_allowed(const HOPoint& p, const OscillatorConfig& cfg);

// sqrt(2E/k)
double turning_point_position(double E, const OscillatorConfig& cfg);

// E_n from the quantization solver applied to the well action difference.
double eigen_energy(int n, const OscillatorConfig& cfg);

// S_+(B2, E) - S_+(B1, E) across the well = pi E / omega.
double well_action_difference(double E, const OscillatorConfig& cfg);

// t = +-(1/omega) arccos(sqrt(k x^2 / 2E)) + n_cycle T; for x < 0 the branch
// reflects through t -> T/2 - t. Throws outside the classically allowed region.
double arrival_time(const HOPoint& p, int sign, int n_cycle, const OscillatorConfig& cfg);

// S_+ = (E/omega) arccos(sqrt(k/2E) x) - x sqrt((k/2 omega^2)(E - k x^2/2)) - (pi/4) hbar,
// evaluated at |x|; S_- = -S_+.
double action_plus(const HOPoint& p, const OscillatorConfig& cfg);

// Local turning-point data at position x != 0: V = (1/2) k x^2,
// gamma = 2/(omega^2 k x^2), dV/dx = k x.
core::TurningPoint turning_point_at(double x, const OscillatorConfig& cfg);

// Registered arrival branch over (B = x, E); uses the signed-arccos
// continuation so dS/dE = t holds on both sides of the well.
core::Branch branch(int sign, int n_cycle, const OscillatorConfig& cfg);

// Which evaluation the semiclassical eigenfunction uses at (n, x).
core::Regime wavefunction_regime(int n, double x, const OscillatorConfig& cfg);

// Semiclassical <x|n> at E_n: two-branch cosine form away from the turning
// points, Airy patch near them, parity sign for x < 0.
double wavefunction(int n, double x, const OscillatorConfig& cfg);

// |<x|n>|^2, a density relative to dx.
double photon_probability(double x, int n, const OscillatorConfig& cfg);

// Small-x closed form: (2/pi) sqrt(k/(2 hbar omega (n+1/2))) *
// cos^2(sqrt((2k/hbar omega)(n+1/2)) x) for even n, sin^2 for odd n.
double small_x_parity_probability(int n, double x, const OscillatorConfig& cfg);

// E_1 = (pi/4)^2 (hbar omega)^2 / ((1/2) k x^2)
double first_even_minimum_energy(double x, const OscillatorConfig& cfg);

// inverse of the above: x = (pi/4) hbar omega / sqrt((1/2) k E_1)
double estimate_x_from_minimum(double E1, const OscillatorConfig& cfg);

// centered finite difference dS_+/dx of the signed action; magnitude equals
// sqrt((2k/omega^2)(E - (1/2) k x^2)) inside the well.
double momentum_from_action(const HOPoint& p, const OscillatorConfig& cfg);

namespace detail {
// signed-arccos continuation of the + action, valid for either sign of x
double action_signed(double x, double E, const OscillatorConfig& cfg);
} // namespace detail

} // namespace arrival::harmonic

#endif
