#include "arrival/specfun.hpp"

#include <cmath>
#include <limits>
#include <vector>

namespace arrival::specfun {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

// Ai(0) = 3^(-2/3)/Gamma(2/3), -Ai'(0) = 3^(-1/3)/Gamma(1/3)
constexpr double kAi0 = 0.35502805388781723926;
constexpr double kAip0 = 0.25881940379280679840;

// series crossovers; the negative one sits at -7 because the trigonometric
// asymptotic only reaches ~1e-9 absolute at -6 (optimal-truncation error
// ~ envelope * e^{-2 zeta}) while the pair series stays well under 1e-10
// down to -8 in long double.
constexpr double kSeriesHi = 6.0;
constexpr double kSeriesLo = -7.0;

// Ai(x) = kAi0 * f(x) - kAip0 * g(x)
// f = sum x^{3k} / ((3k)(3k-1)(3k-3)(3k-4)...),  g likewise shifted by one power.
double airy_series(double x, const PrecisionBudget& budget) {
    const long double x3 = static_cast<long double>(x) * x * x;
    long double f_term = 1.0L, g_term = x;
    long double f = f_term, g = g_term;
    long double peak = std::fabs(f_term) + std::fabs(g_term);
    for (int k = 1; k <= budget.max_terms; ++k) {
        f_term *= x3 / (3.0L * k * (3.0L * k - 1.0L));
        g_term *= x3 / ((3.0L * k + 1.0L) * (3.0L * k));
        f += f_term;
        g += g_term;
        const long double mag = std::fabs(f_term) + std::fabs(g_term);
        if (mag > peak) peak = mag;
        if (mag < 1e-19L * peak && mag < budget.abs_tol) break;
    }
    return static_cast<double>(kAi0 * f - kAip0 * g);
}

// x > kSeriesHi:  Ai ~ e^{-zeta} / (2 sqrt(pi) x^{1/4}) * sum (-1)^k c_k zeta^{-k}
// with c_0 = 1, c_k = c_{k-1} (6k-1)(6k-5)/(72k); truncated at the smallest term.
double airy_asymptotic_pos(double x, const PrecisionBudget& budget) {
    const double zeta = (2.0 / 3.0) * x * std::sqrt(x);
    long double sum = 1.0L;
    long double term = 1.0L;
    long double prev = std::numeric_limits<long double>::max();
    for (int k = 1; k <= budget.max_terms; ++k) {
        term *= (6.0L * k - 1.0L) * (6.0L * k - 5.0L) / (72.0L * k * zeta);
        if (term > prev || term < 1e-17L) break; // divergent tail begins
        sum += (k % 2 != 0) ? -term : term;
        prev = term;
    }
    const double envelope = std::exp(-zeta) / (2.0 * std::sqrt(kPi) * std::pow(x, 0.25));
    return envelope * static_cast<double>(sum);
}

// x < kSeriesLo:  Ai(-t) ~ pi^{-1/2} t^{-1/4} [ sin(zeta + pi/4) * P - cos(zeta + pi/4) * Q ]
// where P = sum (-1)^k c_{2k} zeta^{-2k} and Q = sum (-1)^k c_{2k+1} zeta^{-2k-1};
// flattened over the single index j the sign is + for j mod 4 in {0,1}, - otherwise.
double airy_asymptotic_neg(double x, const PrecisionBudget& budget) {
    const double t = -x;
    const double zeta = (2.0 / 3.0) * t * std::sqrt(t);
    long double P = 1.0L, Q = 0.0L;
    long double term = 1.0L; // c_j zeta^{-j}
    long double prev = std::numeric_limits<long double>::max();
    for (int j = 1; j <= budget.max_terms; ++j) {
        term *= (6.0L * j - 1.0L) * (6.0L * j - 5.0L) / (72.0L * j * zeta);
        if (term > prev || term < 1e-17L) break;
        prev = term;
        const long double signed_term = (j % 4 <= 1) ? term : -term;
        if (j % 2 == 0)
            P += signed_term;
        else
            Q += signed_term;
    }
    const double s = std::sin(zeta + kPi / 4.0);
    const double c = std::cos(zeta + kPi / 4.0);
    const double envelope = 1.0 / (std::sqrt(kPi) * std::pow(t, 0.25));
    return envelope * (s * static_cast<double>(P) - c * static_cast<double>(Q));
}

} // namespace

double airy_ai(double x) {
    static const PrecisionBudget kDefault{};
    return airy_ai(x, kDefault);
}

double airy_ai(double x, const PrecisionBudget& budget) {
    budget.validate();
    if (!std::isfinite(x)) throw std::domain_error("airy_ai: non-finite argument");
    if (x > kSeriesHi) return airy_asymptotic_pos(x, budget);
    if (x < kSeriesLo) return airy_asymptotic_neg(x, budget);
    return airy_series(x, budget);
}

double hermite_phys(int n, double x) {
    if (n < 0) throw std::domain_error("hermite_phys: n must be >= 0");
    if (n == 0) return 1.0;
    double hm = 1.0, h = 2.0 * x;
    for (int k = 1; k < n; ++k) {
        const double hp = 2.0 * x * h - 2.0 * k * hm;
        hm = h;
        h = hp;
    }
    return h;
}

double ho_eigenfunction_exact(int n, double x, const OscillatorConfig& cfg) {
    if (n < 0) throw std::domain_error("ho_eigenfunction_exact: n must be >= 0");
    cfg.validate();
    // effective mass k/omega^2 and frequency omega give length scale
    // alpha = sqrt(k / (omega hbar)); psi_n(x) = sqrt(alpha) u_n(alpha x)
    // with u_n orthonormal in xi.
    const double alpha = std::sqrt(cfg.k / (cfg.omega * cfg.hbar));
    const double xi = alpha * x;
    double um = 0.0;
    double u = std::pow(kPi, -0.25) * std::exp(-0.5 * xi * xi);
    for (int k = 0; k < n; ++k) {
        const double up = xi * std::sqrt(2.0 / (k + 1.0)) * u - std::sqrt(k / (k + 1.0)) * um;
        um = u;
        u = up;
    }
    return std::sqrt(alpha) * u;
}

double log_factorial(int n) {
    if (n < 0) throw std::domain_error("log_factorial: n must be >= 0");
    constexpr int kTableSize = 2048;
    static const std::vector<double> table = [] {
        std::vector<double> t(kTableSize);
        long double acc = 0.0L;
        t[0] = 0.0;
        for (int i = 1; i < kTableSize; ++i) {
            acc += std::log(static_cast<long double>(i));
            t[i] = static_cast<double>(acc);
        }
        return t;
    }();
    if (n < kTableSize) return table[n];
    return static_cast<double>(std::lgamma(static_cast<double>(n) + 1.0));
}

double log_binomial(int n, int k) {
    if (n < 0 || k < 0 || k > n) throw std::domain_error("log_binomial: need 0 <= k <= n");
    return log_factorial(n) - log_factorial(k) - log_factorial(n - k);
}

namespace {

// round a half-integer-valued double onto the 2m integer lattice
int twice_m(double m, const char* label) {
    const double tm = 2.0 * m;
    const double r = std::nearbyint(tm);
    if (std::fabs(tm - r) > 1e-9)
        throw std::domain_error(std::string("beam_splitter_amplitude_exact: ") + label +
                                " is not on the half-integer lattice");
    return static_cast<int>(r);
}

} // namespace

double beam_splitter_amplitude_exact(int N, double m1, double m2) {
    if (N < 1) throw std::domain_error("beam_splitter_amplitude_exact: N must be >= 1");
    const int t1 = twice_m(m1, "m1");
    const int t2 = twice_m(m2, "m2");
    if (std::abs(t1) > N || std::abs(t2) > N)
        throw std::domain_error("beam_splitter_amplitude_exact: |m| exceeds N/2");
    if (((t1 - N) % 2) != 0 || ((t2 - N) % 2) != 0)
        throw std::domain_error("beam_splitter_amplitude_exact: m parity does not match N");

    const int n1 = (N + t1) / 2, n2 = (N - t1) / 2; // input occupation
    const int k1 = (N + t2) / 2, k2 = (N - t2) / 2; // output occupation

    // <k1,k2| U |n1,n2> for the 50:50 splitter: route i photons of mode 1 and
    // k1 - i photons of mode 2 into output 1; each crossing carries the minus
    // sign of the splitter phase convention. Equivalent to d^{N/2}_{m2,m1}(pi/2).
    const double pref = 0.5 * (log_factorial(k1) + log_factorial(k2) -
                               log_factorial(n1) - log_factorial(n2)) -
                        0.5 * N * std::log(2.0);
    const int i_lo = std::max(0, k1 - n2);
    const int i_hi = std::min(n1, k1);
    long double sum = 0.0L, comp = 0.0L; // Kahan: orthogonality needs ~1e-12
    for (int i = i_lo; i <= i_hi; ++i) {
        const int j = k1 - i;
        const long double mag =
            std::exp(static_cast<long double>(log_binomial(n1, i) + log_binomial(n2, j) + pref));
        const long double term = ((n2 - j) % 2 != 0) ? -mag : mag;
        const long double y = term - comp;
        const long double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    return static_cast<double>(sum);
}

} // namespace arrival::specfun
