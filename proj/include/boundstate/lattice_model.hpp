#ifndef BOUNDSTATE_LATTICE_MODEL_HPP
#define BOUNDSTATE_LATTICE_MODEL_HPP

#include <cmath>
#include <cstdlib>

// Lattice two-boson fiber model on Z^2: couplings, momenta, dispersions,
// the pair potential in both representations, and the essential band.
// Everything here is pure and reentrant.

namespace boundstate {

inline constexpr double two_pi = 6.283185307179586476925286766559;

// Reduce an angle into [-pi, pi).
inline double reduce_angle(double x) {
    double r = std::fmod(x + M_PI, two_pi);
    if (r < 0) r += two_pi;
    return r - M_PI;
}

// Interaction magnitudes: on-site, nearest-neighbour, next-nearest-neighbour.
struct CouplingParams {
    double gamma = 0.0;
    double lambda = 0.0;
    double mu = 0.0;
};

// Point of the 2-torus, components kept in [-pi, pi).
struct TorusPoint {
    double p1 = 0.0;
    double p2 = 0.0;
    TorusPoint() = default;
    TorusPoint(double a, double b) : p1(reduce_angle(a)), p2(reduce_angle(b)) {}
};

// Total two-particle quasimomentum, same reduction as TorusPoint.
struct Quasimomentum {
    double k1 = 0.0;
    double k2 = 0.0;
    Quasimomentum() = default;
    Quasimomentum(double a, double b) : k1(reduce_angle(a)), k2(reduce_angle(b)) {}
};

// Relative lattice coordinate.
struct LatticeVector {
    int x1 = 0;
    int x2 = 0;
    int l1norm() const { return std::abs(x1) + std::abs(x2); }
};

struct EssentialBand {
    double e_min = 0.0;
    double e_max = 0.0;
    double width() const { return e_max - e_min; }
    bool degenerate(double tol = 1e-12) const { return width() <= tol; }
    bool contains(double z) const { return z >= e_min && z <= e_max; }
};

// eps(p) = sum_i (1 - cos p_i), in [0, 4].
inline double single_dispersion(const TorusPoint& p) {
    return (1.0 - std::cos(p.p1)) + (1.0 - std::cos(p.p2));
}

// E_K(p) = 2 sum_i (1 - cos(K_i/2) cos p_i).
inline double pair_dispersion(const Quasimomentum& K, const TorusPoint& p) {
    return 2.0 * (1.0 - std::cos(K.k1 / 2) * std::cos(p.p1)) +
           2.0 * (1.0 - std::cos(K.k2 / 2) * std::cos(p.p2));
}

// [E_min(K), E_max(K)], the spectrum of the free fiber operator.
inline EssentialBand essential_band(const Quasimomentum& K) {
    const double c1 = std::cos(K.k1 / 2), c2 = std::cos(K.k2 / 2);
    // cos(K_i/2) >= 0 for K_i in [-pi, pi), so min/max sit at cos p_i = +/-1.
    return {2.0 * (1.0 - c1) + 2.0 * (1.0 - c2), 2.0 * (1.0 + c1) + 2.0 * (1.0 + c2)};
}

// Position-space pair potential: gamma at |x|=0, lambda/2 at |x|=1,
// mu/2 at |x|=2 (l^1 norm, so diagonals included), zero beyond.
inline double potential_position(const LatticeVector& x, const CouplingParams& c) {
    switch (x.l1norm()) {
        case 0: return c.gamma;
        case 1: return c.lambda / 2;
        case 2: return c.mu / 2;
        default: return 0.0;
    }
}

// v(p) = gamma + lambda sum cos p_i + mu sum cos 2p_i + 2 mu cos p1 cos p2;
// the Fourier transform of potential_position over its 13-point support.
inline double potential_momentum(const TorusPoint& p, const CouplingParams& c) {
    return c.gamma + c.lambda * (std::cos(p.p1) + std::cos(p.p2)) +
           c.mu * (std::cos(2 * p.p1) + std::cos(2 * p.p2)) +
           2 * c.mu * std::cos(p.p1) * std::cos(p.p2);
}

// Single-particle hopping amplitudes: 2 on site, -1/2 to the four neighbours.
inline double hopping_coefficient(const LatticeVector& s) {
    const int n = s.l1norm();
    if (n == 0) return 2.0;
    if (n == 1) return -0.5;
    return 0.0;
}

}  // namespace boundstate

#endif
