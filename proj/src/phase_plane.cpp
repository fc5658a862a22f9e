#include "boundstate/phase_plane.hpp"

#include <cmath>

namespace boundstate {

PhaseCurve phase_curve(CurveSide side, const EdgeConstants& e) {
    PhaseCurve c;
    c.mu_star = e.mu_star;
    c.lambda_star = e.lambda_star;
    c.kappa = (e.e12 / e.d) * (e.e12 / e.d);
    c.side = side;
    return c;
}

double c_plus(double lambda, double mu, const EdgeConstants& e) {
    return (1.0 - lambda * e.e11) * (1.0 - mu * e.e22) - lambda * mu * e.e12 * e.e12;
}

double c_minus(double lambda, double mu, const EdgeConstants& e) { return c_plus(-lambda, -mu, e); }

std::optional<double> lambda_curve(double mu, CurveSide side, const EdgeConstants& e) {
    const PhaseCurve c = phase_curve(side, e);
    const double s = (side == CurveSide::plus) ? 1.0 : -1.0;
    const double den = mu - s * c.mu_star;
    if (den == 0.0) return std::nullopt;
    return c.kappa / den + s * c.lambda_star;
}

namespace {

ComponentIndex side_index(double cval, bool beyond_asymptote, double eps_b) {
    if (std::abs(cval) <= eps_b) return ComponentIndex::boundary;
    if (cval < 0) return ComponentIndex::one;
    return beyond_asymptote ? ComponentIndex::two : ComponentIndex::zero;
}

}  // namespace

RegionLabel classify(double lambda, double mu, const EdgeConstants& e, double eps_b) {
    RegionLabel out;
    out.k_plus = side_index(c_plus(lambda, mu, e), mu > e.mu_star, eps_b);
    out.k_minus = side_index(c_minus(lambda, mu, e), mu < -e.mu_star, eps_b);
    return out;
}

std::optional<CountPrediction> predicted_counts(const RegionLabel& label) {
    if (label.on_boundary()) return std::nullopt;
    return CountPrediction{static_cast<int>(label.k_minus), static_cast<int>(label.k_plus)};
}

}  // namespace boundstate
