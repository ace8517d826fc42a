#ifndef ARRIVAL_SPECFUN_HPP
#define ARRIVAL_SPECFUN_HPP

#include "arrival/config.hpp"

namespace arrival::specfun {

// Truncation control for the series evaluations.
struct PrecisionBudget {
    double abs_tol = 1e-12;
    int max_terms = 200;

    void validate() const {
        if (!(abs_tol > 0.0) || max_terms < 1)
            throw std::domain_error("PrecisionBudget requires abs_tol > 0 and max_terms >= 1");
    }
};

// Airy Ai(x), absolute error <= 1e-10 on [-12, 8].
// Maclaurin pair series on [-7, 6]; exponential asymptotic above 6;
// trigonometric asymptotic below -7 (the -7/-6 choice is where the
// trigonometric expansion first reaches the 1e-10 target).
double airy_ai(double x);
double airy_ai(double x, const PrecisionBudget& budget);

// Physicists' Hermite polynomial H_n via H_{n+1} = 2x H_n - 2n H_{n-1}.
double hermite_phys(int n, double x);

// Normalized eigenfunction of H = (omega^2/2k)p^2 + (k/2)x^2 (effective mass
// k/omega^2, frequency omega). Oracle for the semiclassical wavefunction.
double ho_eigenfunction_exact(int n, double x, const OscillatorConfig& cfg);

// Exact 50:50 beam-splitter amplitude <m2|m1> for Fock inputs
// (N/2 + m1, N/2 - m1): finite photon-routing sum, equivalent to the Wigner
// rotation matrix element d^{N/2}_{m2,m1}(pi/2). m is integer for even N,
// half-integer for odd N.
double beam_splitter_amplitude_exact(int N, double m1, double m2);

// log(n!) with a cached table; exact to ~1e-15 relative for n <= 1700.
double log_factorial(int n);

// log C(n, k); requires 0 <= k <= n.
double log_binomial(int n, int k);

} // namespace arrival::specfun

#endif
