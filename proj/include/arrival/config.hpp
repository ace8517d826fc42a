#ifndef ARRIVAL_CONFIG_HPP
#define ARRIVAL_CONFIG_HPP

#include <stdexcept>

namespace arrival {

// Unit system of the harmonic-oscillator family. The defaults (hbar = omega = 1,
// k = 2) make x dimensionless with the energy relation E = (omega^2/2k)p^2 + (k/2)x^2,
// i.e. effective mass k/omega^2.
struct OscillatorConfig {
    double k = 2.0;     // spring constant [energy/length^2]
    double omega = 1.0; // angular frequency [1/time]
    double hbar = 1.0;  // action quantum

    double period() const { return 2.0 * 3.141592653589793238462643383279502884 / omega; }

    void validate() const {
        if (!(k > 0.0) || !(omega > 0.0) || !(hbar > 0.0))
            throw std::domain_error("OscillatorConfig requires k, omega, hbar > 0");
    }
};

} // namespace arrival

#endif
