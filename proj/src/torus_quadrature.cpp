#include "boundstate/torus_quadrature.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace boundstate {

namespace {

constexpr double kEdgeGuard = 1e-8;    // reject z this close to (but not at) an edge
constexpr double kSingularTol = 1e-12; // node-at-edge detection

void check_spectral_parameter(double z, const EssentialBand& band, bool edges_allowed) {
    const bool at_edge = (z == band.e_min) || (z == band.e_max);
    if (at_edge) {
        if (edges_allowed) return;
        throw std::domain_error("spectral parameter lies on the band edge");
    }
    if (z > band.e_min && z < band.e_max)
        throw std::domain_error("spectral parameter inside the essential band [" +
                                std::to_string(band.e_min) + ", " + std::to_string(band.e_max) + "]");
    if (std::abs(z - band.e_min) < kEdgeGuard || std::abs(z - band.e_max) < kEdgeGuard)
        throw std::domain_error("spectral parameter within 1e-8 of a band edge");
}

}  // namespace

GridSpec::GridSpec(int points) : n(points) { validate(*this); }

void validate(const GridSpec& g) {
    if (g.n < 16) throw std::invalid_argument("GridSpec: n must be >= 16");
    if (g.n % 2 != 0) throw std::invalid_argument("GridSpec: n must be even");
}

double integrate_torus(const std::function<double(double, double)>& f, const GridSpec& g) {
    validate(g);
    const int n = g.n;
    const double h = two_pi / n;
    double sum = 0.0;
    for (int j = 0; j < n; ++j) {
        const double p1 = -M_PI + h * j;
        for (int k = 0; k < n; ++k) sum += f(p1, -M_PI + h * k);
    }
    return sum * h * h;
}

Gram2Evaluator::Gram2Evaluator(const GridSpec& g) : grid_(g) {
    validate(grid_);
    const int n = grid_.n;
    const double h = two_pi / n;
    const int half = n / 2;
    // integrands even in each p_i and swap-symmetric: fold to j,k in [0,n/2], k<=j
    energy_.reserve((half + 1) * (half + 2) / 2);
    for (int j = 0; j <= half; ++j) {
        const double p1 = -M_PI + h * j;
        const double c1 = std::cos(p1), C1 = std::cos(2 * p1);
        const double mj = (j == 0 || j == half) ? 1.0 : 2.0;
        for (int k = 0; k <= j; ++k) {
            const double p2 = -M_PI + h * k;
            const double c2 = std::cos(p2), C2 = std::cos(2 * p2);
            const double mk = (k == 0 || k == half) ? 1.0 : 2.0;
            const double w = mj * mk * (k < j ? 2.0 : 1.0);
            const double phi1 = c1 - c2, phi2 = C1 - C2;
            energy_.push_back(2.0 * (2.0 - c1 - c2));
            f11_.push_back(w * phi1 * phi1);
            f12_.push_back(w * phi1 * phi2);
            f22_.push_back(w * phi2 * phi2);
        }
    }
}

GramMatrix2 Gram2Evaluator::operator()(double z) const {
    if (auto it = cache_.find(z); it != cache_.end()) return it->second;
    const EssentialBand band{0.0, 8.0};
    check_spectral_parameter(z, band, /*edges_allowed=*/true);
    const bool at_edge = (z == 0.0) || (z == 8.0);
    double s11 = 0.0, s12 = 0.0, s22 = 0.0;
    const std::size_t m = energy_.size();
    for (std::size_t i = 0; i < m; ++i) {
        const double den = energy_[i] - z;
        if (at_edge && std::abs(den) < kSingularTol) continue;  // limit value is 0
        const double inv = 1.0 / den;
        s11 += f11_[i] * inv;
        s12 += f12_[i] * inv;
        s22 += f22_[i] * inv;
    }
    // (2pi/n)^2 / (8 pi^2) = 1 / (2 n^2)
    const double scale = 0.5 / (static_cast<double>(grid_.n) * grid_.n);
    GramMatrix2 out{s11 * scale, s12 * scale, s22 * scale, z};
    cache_.emplace(z, out);
    return out;
}

Gram7Evaluator::Gram7Evaluator(const Quasimomentum& K, const GridSpec& g)
    : K_(K), grid_(g), band_(essential_band(K)) {
    validate(grid_);
    const int n = grid_.n;
    const double h = two_pi / n;
    const double ck1 = std::cos(K_.k1 / 2), ck2 = std::cos(K_.k2 / 2);
    // all e_m e_n products and E_K are even under joint negation p -> -p;
    // representatives are (j,k) <= (n-j, n-k) mod n lexicographically
    for (int j = 0; j < n; ++j) {
        const int jn = (n - j) % n;
        for (int k = 0; k < n; ++k) {
            const int kn = (n - k) % n;
            if (jn < j || (jn == j && kn < k)) continue;
            const double w = (jn == j && kn == k) ? 1.0 : 2.0;
            const double p1 = -M_PI + h * j, p2 = -M_PI + h * k;
            const double c1 = std::cos(p1), c2 = std::cos(p2);
            energy_.push_back(2.0 * (1.0 - ck1 * c1) + 2.0 * (1.0 - ck2 * c2));
            weight_.push_back(w);
            kernels_[0].push_back(1.0);
            kernels_[1].push_back(c1);
            kernels_[2].push_back(c2);
            kernels_[3].push_back(std::cos(2 * p1));
            kernels_[4].push_back(std::cos(2 * p2));
            kernels_[5].push_back(c1 * c2);
            kernels_[6].push_back(std::sin(p1) * std::sin(p2));
        }
    }
}

GramMatrix7 Gram7Evaluator::operator()(double z) const {
    if (auto it = cache_.find(z); it != cache_.end()) return it->second;
    check_spectral_parameter(z, band_, /*edges_allowed=*/false);
    double acc[7][7] = {};
    const std::size_t m = energy_.size();
    for (std::size_t i = 0; i < m; ++i) {
        const double inv = weight_[i] / (energy_[i] - z);
        double ev[7];
        for (int a = 0; a < 7; ++a) ev[a] = kernels_[a][i] * inv;
        for (int a = 0; a < 7; ++a) {
            const double ea = kernels_[a][i];
            for (int b = a; b < 7; ++b) acc[a][b] += ea * ev[b];
        }
    }
    GramMatrix7 out;
    out.K = K_;
    out.z = z;
    const double scale = 1.0 / (static_cast<double>(grid_.n) * grid_.n);
    for (int a = 0; a < 7; ++a)
        for (int b = a; b < 7; ++b) out.g[a][b] = out.g[b][a] = acc[a][b] * scale;
    cache_.emplace(z, out);
    return out;
}

GramMatrix2 gram2(double z, const GridSpec& g) { return Gram2Evaluator(g)(z); }

GramMatrix7 gram7(const Quasimomentum& K, double z, const GridSpec& g) {
    return Gram7Evaluator(K, g)(z);
}

EdgeConstants edge_constants(const GridSpec& g) {
    const GramMatrix2 a = gram2(0.0, g);
    EdgeConstants e;
    e.e11 = a.a11;
    e.e12 = a.a12;
    e.e22 = a.a22;
    e.d = e.e11 * e.e22 - e.e12 * e.e12;
    e.mu_star = e.e11 / e.d;
    e.lambda_star = e.e22 / e.d;
    return e;
}

}  // namespace boundstate
