#ifndef BOUNDSTATE_TORUS_QUADRATURE_HPP
#define BOUNDSTATE_TORUS_QUADRATURE_HPP

#include <functional>
#include <unordered_map>
#include <vector>

#include "boundstate/lattice_model.hpp"

// Periodic (trapezoidal) quadrature on T^2 and the Gram integrals of the
// Lippmann-Schwinger kernels against the free resolvent.
//
// Conventions fixed here:
//   a_ij(z)    = 1/(8 pi^2) int phi_i phi_j / (E_0(p) - z) dp,
//                phi_1 = cos p1 - cos p2, phi_2 = cos 2p1 - cos 2p2
//   g_mn(K,z)  = 1/(4 pi^2) int e_m e_n / (E_K(p) - z) dp,
//                e = (1, cos p1, cos p2, cos 2p1, cos 2p2,
//                     cos p1 cos p2, sin p1 sin p2)
//
// z may touch a band edge of [0,8] exactly (the single singular grid node is
// assigned its limit value 0: numerators vanish to fourth order there);
// z strictly inside the band, or within 1e-8 of an edge without being equal,
// is rejected.

namespace boundstate {

struct GridSpec {
    int n = 512;  // points per axis; must be >= 16 and even
    GridSpec() = default;
    explicit GridSpec(int points);
};

void validate(const GridSpec& g);  // throws std::invalid_argument

// Uniform periodic rule (2pi/n)^2 sum f(nodes), nodes p_j = -pi + 2pi j / n,
// summed in lexicographic node order. Spectrally accurate for smooth f.
double integrate_torus(const std::function<double(double, double)>& f, const GridSpec& g);

struct GramMatrix2 {
    double a11 = 0.0, a12 = 0.0, a22 = 0.0;
    double z = 0.0;
};

struct GramMatrix7 {
    double g[7][7] = {};
    Quasimomentum K;
    double z = 0.0;
};

// Band-edge limits of a_ij at K=0 and the derived curve parameters.
struct EdgeConstants {
    double e11 = 0.0, e12 = 0.0, e22 = 0.0;
    double d = 0.0;           // e11*e22 - e12^2, > 0 by Cauchy-Schwarz
    double mu_star = 0.0;     // e11/d
    double lambda_star = 0.0; // e22/d
};

// Evaluates a_ij(z) at K=0 on a fixed grid, caching by z. The integrands are
// even per axis and swap-symmetric, so nodes are folded onto a quarter grid
// with multiplicities (fixed summation order, independent of callers).
// Not safe for concurrent use; give each worker its own evaluator.
class Gram2Evaluator {
  public:
    explicit Gram2Evaluator(const GridSpec& g);
    GramMatrix2 operator()(double z) const;
    const GridSpec& grid() const { return grid_; }

  private:
    GridSpec grid_;
    std::vector<double> energy_, f11_, f12_, f22_;  // folded nodes, weights included
    mutable std::unordered_map<double, GramMatrix2> cache_;
};

// Evaluates g_mn(K,z), caching by z. Nodes folded by joint negation p -> -p.
class Gram7Evaluator {
  public:
    Gram7Evaluator(const Quasimomentum& K, const GridSpec& g);
    GramMatrix7 operator()(double z) const;
    const EssentialBand& band() const { return band_; }
    const Quasimomentum& momentum() const { return K_; }

  private:
    Quasimomentum K_;
    GridSpec grid_;
    EssentialBand band_;
    std::vector<double> energy_, weight_;
    std::vector<double> kernels_[7];
    mutable std::unordered_map<double, GramMatrix7> cache_;
};

// One-shot conveniences.
GramMatrix2 gram2(double z, const GridSpec& g);
GramMatrix7 gram7(const Quasimomentum& K, double z, const GridSpec& g);

// gram2 at z = 0 exactly, plus the derived d, mu_star, lambda_star.
EdgeConstants edge_constants(const GridSpec& g);

}  // namespace boundstate

#endif
