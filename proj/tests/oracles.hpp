#ifndef BOUNDSTATE_TESTS_ORACLES_HPP
#define BOUNDSTATE_TESTS_ORACLES_HPP

#include <cmath>

// Test-only oracles, kept independent of the library's quadrature path.

namespace test_oracles {

// One-dimensional Bessel-Laplace representation of the band-edge constant:
//   a11(0) = 1/2 - int_0^inf e^{-2t} (I0(t) - I1(t))^2 dt.
// Composite Simpson on [0, T] plus the analytic tail
//   int_T^inf = 1/(16 pi T^2) + 1/(32 pi T^3) + O(T^-4),
// from e^{-2t}(I0 - I1)^2 = 1/(8 pi t^3) + 3/(32 pi t^4) + ...
inline double bessel_laplace_a11_at_zero() {
    const double T = 200.0;
    const int n = 40000;  // even
    const double h = T / n;
    auto f = [](double t) {
        if (t == 0.0) return 1.0;  // I0(0) - I1(0) = 1
        const double diff = std::cyl_bessel_i(0.0, t) - std::cyl_bessel_i(1.0, t);
        const double scaled = std::exp(-t) * diff;
        return scaled * scaled;
    };
    double sum = f(0.0) + f(T);
    for (int i = 1; i < n; ++i) sum += (i % 2 ? 4.0 : 2.0) * f(h * i);
    const double integral = sum * h / 3.0;
    const double tail = 1.0 / (16 * M_PI * T * T) + 1.0 / (32 * M_PI * T * T * T);
    return 0.5 - (integral + tail);
}

}  // namespace test_oracles

#endif
