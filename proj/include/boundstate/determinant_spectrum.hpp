#ifndef BOUNDSTATE_DETERMINANT_SPECTRUM_HPP
#define BOUNDSTATE_DETERMINANT_SPECTRUM_HPP

#include <functional>
#include <utility>
#include <vector>

#include "boundstate/lattice_model.hpp"
#include "boundstate/torus_quadrature.hpp"

// Lippmann-Schwinger determinants and zero counting off the essential band.
//
// Antisymmetric sector at K=0 (rank 2):
//   Delta(z) = det [[1 + lambda a11, mu a12], [lambda a12, 1 + mu a22]]
// Full fiber operator at any K (rank <= 7):
//   Delta(z) = det(I + W G(K,z)),  W = diag(gamma, lambda, lambda, mu, mu, 2mu, 2mu)
// Zeros off the band are exactly the discrete eigenvalues.

namespace boundstate {

struct LSMatrix2 {
    double m[2][2] = {};
    double lambda = 0.0, mu = 0.0, z = 0.0;
    double det() const { return m[0][0] * m[1][1] - m[0][1] * m[1][0]; }
};

struct LSMatrix7 {
    double m[7][7] = {};
    CouplingParams c;
    Quasimomentum K;
    double z = 0.0;
    double det() const;  // LU with partial pivoting
};

LSMatrix2 ls_matrix2(double lambda, double mu, const GramMatrix2& a);
LSMatrix7 ls_matrix7(const CouplingParams& c, const GramMatrix7& g);

double det2(double lambda, double mu, const GramMatrix2& a);
double det2(double lambda, double mu, double z, const GridSpec& g);
double det7(const CouplingParams& c, const GramMatrix7& g);
double det7(const CouplingParams& c, const Quasimomentum& K, double z, const GridSpec& g);

// Symmetric-sector 5x5 block at K=0 in the rotated kernel basis
// {1, cos p1 + cos p2, cos 2p1 + cos 2p2, cos p1 cos p2, sin p1 sin p2}
// with weights (gamma, lambda/2, mu/2, 2mu, 2mu); det7 = det2 * det5 at K=0.
double det5(const CouplingParams& c, double z, const GridSpec& g);

// Determinant zeros split by band side. Zeros closer together than pair_tol
// cannot be certified by sign changes and land in `inconclusive` instead.
struct ZeroReport {
    std::vector<double> below, above;                    // ascending
    std::vector<double> residual_below, residual_above;  // |det| at each zero
    std::vector<double> inconclusive;
    double z_minus = 0.0, z_plus = 0.0;  // search endpoints actually used
    bool expansion_converged = true;     // |det-1| < far_tol reached at both ends
    std::pair<int, int> counts() const {
        return {static_cast<int>(below.size()), static_cast<int>(above.size())};
    }
};

struct ZeroSearchOptions {
    int points_per_side = 2000;   // primary scan resolution
    double offset_min = 1e-6;     // first scan point distance from the edge
    double span_initial = 64.0;   // distance covered before testing far_tol
    double far_tol = 1e-4;        // |det - 1| threshold for the outer endpoint
    double span_cap = 1e8;        // give up expanding beyond this distance
    double bisect_width = 1e-10;  // bracket width for the refined zero
    double pair_tol = 1e-8;       // closer zeros are reported inconclusive
};

// Sign-change scan over log-spaced offsets from each band edge (globally
// anchored so repeated searches hit an evaluator's cache), one level of 10x
// local refinement around sign-preserving minima of |det|, then bisection.
// `det` must be continuous off the band and -> 1 at +-infinity; it may throw
// std::domain_error at the exact edges (the edge sample is then skipped).
ZeroReport find_zeros(const std::function<double(double)>& det, const EssentialBand& band,
                      const ZeroSearchOptions& opts = {});

// Zeros of det7 for the full fiber operator; degenerate bands (E identically
// constant, e.g. K=(pi,pi)) are scanned on both sides of the single point.
ZeroReport bound_state_report(const CouplingParams& c, const Quasimomentum& K, const GridSpec& g,
                              const ZeroSearchOptions& opts = {});

// (n_minus, n_plus): certified det7 zero counts below/above the band.
std::pair<int, int> count_bound_states(const CouplingParams& c, const Quasimomentum& K,
                                       const GridSpec& g);

}  // namespace boundstate

#endif
