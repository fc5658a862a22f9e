#ifndef BOUNDSTATE_PHASE_PLANE_HPP
#define BOUNDSTATE_PHASE_PLANE_HPP

#include <optional>

#include "boundstate/torus_quadrature.hpp"

// Partition of the (lambda, mu) coupling plane by the threshold coefficients
//   C+(l,m) = (1 - l e11)(1 - m e22) - l m e12^2 = d [(l - l*)(m - m*) - kappa]
//   C-(l,m) = C+(-l,-m)
// into the components C^+-_k (k = 0,1,2) whose antisymmetric bound-state
// counts at K=0 are constant, plus exact counts / K-uniform lower bounds.
// All coefficients come from computed EdgeConstants, not from the printed
// polynomial forms.

namespace boundstate {

enum class CurveSide { plus, minus };

// Hyperbola C^side = 0: (lambda - s*lambda_star)(mu - s*mu_star) = kappa.
struct PhaseCurve {
    double mu_star = 0.0;      // vertical asymptote (expected ~5.8788)
    double lambda_star = 0.0;  // horizontal asymptote (expected 8)
    double kappa = 0.0;        // offset (expected 4)
    CurveSide side = CurveSide::plus;
};

PhaseCurve phase_curve(CurveSide side, const EdgeConstants& e);

// Component index per band side; Boundary when |C| <= eps_b.
enum class ComponentIndex { zero = 0, one = 1, two = 2, boundary = -1 };

struct RegionLabel {
    ComponentIndex k_minus = ComponentIndex::zero;
    ComponentIndex k_plus = ComponentIndex::zero;
    bool on_boundary() const {
        return k_minus == ComponentIndex::boundary || k_plus == ComponentIndex::boundary;
    }
};

double c_plus(double lambda, double mu, const EdgeConstants& e);
double c_minus(double lambda, double mu, const EdgeConstants& e);

// The unique lambda with C^side(lambda, mu) = 0, or nullopt on the asymptote
// mu == side * mu_star where no solution exists.
std::optional<double> lambda_curve(double mu, CurveSide side, const EdgeConstants& e);

RegionLabel classify(double lambda, double mu, const EdgeConstants& e, double eps_b = 1e-6);

// Exact antisymmetric-sector counts at K=0 and K-uniform lower bounds for
// the full operator at any gamma. No prediction on a boundary.
struct CountPrediction {
    int alpha = 0;  // below the band
    int beta = 0;   // above the band
};

std::optional<CountPrediction> predicted_counts(const RegionLabel& label);

}  // namespace boundstate

#endif
