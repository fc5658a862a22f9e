#include "boundstate/determinant_spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace boundstate {

double LSMatrix7::det() const {
    double a[7][7];
    for (int i = 0; i < 7; ++i)
        for (int j = 0; j < 7; ++j) a[i][j] = m[i][j];
    double result = 1.0;
    for (int col = 0; col < 7; ++col) {
        int piv = col;
        for (int r = col + 1; r < 7; ++r)
            if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
        if (a[piv][col] == 0.0) return 0.0;
        if (piv != col) {
            for (int j = col; j < 7; ++j) std::swap(a[piv][j], a[col][j]);
            result = -result;
        }
        result *= a[col][col];
        for (int r = col + 1; r < 7; ++r) {
            const double f = a[r][col] / a[col][col];
            for (int j = col + 1; j < 7; ++j) a[r][j] -= f * a[col][j];
        }
    }
    return result;
}

LSMatrix2 ls_matrix2(double lambda, double mu, const GramMatrix2& a) {
    LSMatrix2 out;
    out.lambda = lambda;
    out.mu = mu;
    out.z = a.z;
    out.m[0][0] = 1.0 + lambda * a.a11;
    out.m[0][1] = mu * a.a12;
    out.m[1][0] = lambda * a.a12;
    out.m[1][1] = 1.0 + mu * a.a22;
    return out;
}

LSMatrix7 ls_matrix7(const CouplingParams& c, const GramMatrix7& g) {
    const double w[7] = {c.gamma, c.lambda, c.lambda, c.mu, c.mu, 2 * c.mu, 2 * c.mu};
    LSMatrix7 out;
    out.c = c;
    out.K = g.K;
    out.z = g.z;
    for (int m = 0; m < 7; ++m)
        for (int n = 0; n < 7; ++n) out.m[m][n] = (m == n ? 1.0 : 0.0) + w[m] * g.g[m][n];
    return out;
}

double det2(double lambda, double mu, const GramMatrix2& a) {
    return (1.0 + lambda * a.a11) * (1.0 + mu * a.a22) - lambda * mu * a.a12 * a.a12;
}

double det2(double lambda, double mu, double z, const GridSpec& g) {
    return det2(lambda, mu, gram2(z, g));
}

double det7(const CouplingParams& c, const GramMatrix7& g) { return ls_matrix7(c, g).det(); }

double det7(const CouplingParams& c, const Quasimomentum& K, double z, const GridSpec& g) {
    return det7(c, gram7(K, z, g));
}

double det5(const CouplingParams& c, double z, const GridSpec& g) {
    validate(g);
    const EssentialBand band{0.0, 8.0};
    if (z > band.e_min && z < band.e_max)
        throw std::domain_error("det5: spectral parameter inside the essential band");
    const int n = g.n;
    const double h = two_pi / n;
    double s[5][5] = {};
    for (int j = 0; j < n; ++j) {
        const double p1 = -M_PI + h * j;
        const double c1 = std::cos(p1), C1 = std::cos(2 * p1), s1 = std::sin(p1);
        for (int k = 0; k < n; ++k) {
            const double p2 = -M_PI + h * k;
            const double c2 = std::cos(p2);
            const double f[5] = {1.0, c1 + c2, C1 + std::cos(2 * p2), c1 * c2, s1 * std::sin(p2)};
            const double inv = 1.0 / (2.0 * (2.0 - c1 - c2) - z);
            for (int a = 0; a < 5; ++a)
                for (int b = a; b < 5; ++b) s[a][b] += f[a] * f[b] * inv;
        }
    }
    const double scale = 1.0 / (static_cast<double>(n) * n);  // (2pi/n)^2 / (4 pi^2)
    const double w[5] = {c.gamma, c.lambda / 2, c.mu / 2, 2 * c.mu, 2 * c.mu};
    double m[5][5];
    for (int a = 0; a < 5; ++a)
        for (int b = 0; b < 5; ++b) {
            const double gab = s[std::min(a, b)][std::max(a, b)] * scale;
            m[a][b] = (a == b ? 1.0 : 0.0) + w[a] * gab;
        }
    // 5x5 LU
    double result = 1.0;
    for (int col = 0; col < 5; ++col) {
        int piv = col;
        for (int r = col + 1; r < 5; ++r)
            if (std::abs(m[r][col]) > std::abs(m[piv][col])) piv = r;
        if (m[piv][col] == 0.0) return 0.0;
        if (piv != col) {
            for (int jj = col; jj < 5; ++jj) std::swap(m[piv][jj], m[col][jj]);
            result = -result;
        }
        result *= m[col][col];
        for (int r = col + 1; r < 5; ++r) {
            const double f = m[r][col] / m[col][col];
            for (int jj = col + 1; jj < 5; ++jj) m[r][jj] -= f * m[col][jj];
        }
    }
    return result;
}

namespace {

struct SideScan {
    std::vector<double> zeros, residuals, inconclusive;
    double endpoint = 0.0;
    bool converged = true;
};

double bisect(const std::function<double(double)>& det, double lo, double hi, double flo,
              double width) {
    // keep the bracket [lo, hi] with a sign change; return midpoint
    for (int it = 0; it < 200 && (hi - lo) > width; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double fm = det(mid);
        if (fm == 0.0) return mid;
        if ((flo < 0) != (fm < 0)) {
            hi = mid;
        } else {
            lo = mid;
            flo = fm;
        }
    }
    return 0.5 * (lo + hi);
}

SideScan scan_side(const std::function<double(double)>& det, double edge, int dir,
                   const ZeroSearchOptions& opts) {
    SideScan out;
    // globally anchored log ladder of offsets: d_j = offset_min * 10^(j/ppd)
    const double decades0 = std::log10(opts.span_initial / opts.offset_min);
    const double ppd = opts.points_per_side / decades0;
    std::vector<double> zs;
    std::vector<double> vals;
    // the exact edge first, when the determinant extends there
    bool have_edge = true;
    double edge_val = 0.0;
    try {
        edge_val = det(edge);
    } catch (const std::domain_error&) {
        have_edge = false;
    }
    if (have_edge) {
        zs.push_back(edge);
        vals.push_back(edge_val);
    }
    double dist = opts.offset_min;
    int j = 0;
    while (true) {
        dist = opts.offset_min * std::pow(10.0, j / ppd);
        if (dist > opts.span_cap) {
            out.converged = false;
            break;
        }
        const double z = edge + dir * dist;
        const double v = det(z);
        zs.push_back(z);
        vals.push_back(v);
        if (dist >= opts.span_initial && std::abs(v - 1.0) < opts.far_tol) break;
        ++j;
    }
    out.endpoint = zs.back();

    std::vector<std::pair<double, double>> brackets;  // (lo, hi) sorted by |z|
    auto sgn = [](double v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); };
    for (std::size_t i = 0; i + 1 < zs.size(); ++i)
        if (sgn(vals[i]) * sgn(vals[i + 1]) < 0) brackets.emplace_back(zs[i], zs[i + 1]);
    // one level of 10x refinement around sign-preserving local minima of |det|
    for (std::size_t i = 1; i + 1 < zs.size(); ++i) {
        const double av = std::abs(vals[i]);
        if (av < std::abs(vals[i - 1]) && av < std::abs(vals[i + 1]) &&
            sgn(vals[i - 1]) == sgn(vals[i]) && sgn(vals[i]) == sgn(vals[i + 1])) {
            const int fine = 20;
            double prev_z = zs[i - 1], prev_v = vals[i - 1];
            for (int q = 1; q <= fine; ++q) {
                const double z = zs[i - 1] + (zs[i + 1] - zs[i - 1]) * q / fine;
                const double v = (q == fine) ? vals[i + 1] : det(z);
                if (sgn(prev_v) * sgn(v) < 0) brackets.emplace_back(prev_z, z);
                prev_z = z;
                prev_v = v;
            }
        }
    }
    for (auto& [blo, bhi] : brackets) {
        double lo = std::min(blo, bhi), hi = std::max(blo, bhi);
        const double z0 = bisect(det, lo, hi, det(lo), opts.bisect_width);
        out.zeros.push_back(z0);
        out.residuals.push_back(std::abs(det(z0)));
    }
    // sort zeros with their residuals
    std::vector<std::size_t> order(out.zeros.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return out.zeros[a] < out.zeros[b]; });
    std::vector<double> zsorted, rsorted;
    for (auto i : order) {
        zsorted.push_back(out.zeros[i]);
        rsorted.push_back(out.residuals[i]);
    }
    // pairs too close for sign-change certification -> inconclusive
    std::vector<bool> drop(zsorted.size(), false);
    for (std::size_t i = 0; i + 1 < zsorted.size(); ++i)
        if (zsorted[i + 1] - zsorted[i] < opts.pair_tol) drop[i] = drop[i + 1] = true;
    out.zeros.clear();
    out.residuals.clear();
    for (std::size_t i = 0; i < zsorted.size(); ++i) {
        if (drop[i]) {
            out.inconclusive.push_back(zsorted[i]);
        } else {
            out.zeros.push_back(zsorted[i]);
            out.residuals.push_back(rsorted[i]);
        }
    }
    return out;
}

}  // namespace

ZeroReport find_zeros(const std::function<double(double)>& det, const EssentialBand& band,
                      const ZeroSearchOptions& opts) {
    ZeroReport report;
    SideScan above = scan_side(det, band.e_max, +1, opts);
    SideScan below = scan_side(det, band.e_min, -1, opts);
    report.above = above.zeros;
    report.residual_above = above.residuals;
    report.below = below.zeros;
    report.residual_below = below.residuals;
    report.inconclusive = below.inconclusive;
    report.inconclusive.insert(report.inconclusive.end(), above.inconclusive.begin(),
                               above.inconclusive.end());
    report.z_plus = above.endpoint;
    report.z_minus = below.endpoint;
    report.expansion_converged = above.converged && below.converged;
    return report;
}

ZeroReport bound_state_report(const CouplingParams& c, const Quasimomentum& K, const GridSpec& g,
                              const ZeroSearchOptions& opts) {
    Gram7Evaluator gram(K, g);
    auto det = [&](double z) { return det7(c, gram(z)); };
    return find_zeros(det, gram.band(), opts);
}

std::pair<int, int> count_bound_states(const CouplingParams& c, const Quasimomentum& K,
                                       const GridSpec& g) {
    return bound_state_report(c, K, g).counts();
}

}  // namespace boundstate
