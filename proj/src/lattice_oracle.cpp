#include "boundstate/lattice_oracle.hpp"

#include <lapacke.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

namespace boundstate {

namespace {

struct Site {
    int x1, x2;
    bool operator==(const Site& o) const { return x1 == o.x1 && x2 == o.x2; }
    bool operator<(const Site& o) const { return x1 != o.x1 ? x1 < o.x1 : x2 < o.x2; }
};

struct BasisVector {
    // distinct sites with coefficients; 1/sqrt(#sites) normalization
    std::array<Site, 4> sites;
    std::array<double, 4> coeff;
    int size = 0;
};

// orbit of x under negation (and swap for the swap sectors), deduplicated
std::vector<Site> orbit(Site x, bool with_swap) {
    std::vector<Site> pts{x, {-x.x1, -x.x2}};
    if (with_swap) {
        pts.push_back({x.x2, x.x1});
        pts.push_back({-x.x2, -x.x1});
    }
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

}  // namespace

SymMatrix build_matrix(const CouplingParams& c, const Quasimomentum& K, const BoxSpec& b) {
    if (b.l < 10) throw std::invalid_argument("BoxSpec: l must be >= 10");
    const bool with_swap = b.sector != Sector::full_even;
    if (with_swap && K.k1 != K.k2)
        throw std::invalid_argument("swap sectors require K1 == K2");

    const int l = b.l, side = 2 * l + 1;
    auto site_id = [l, side](const Site& s) { return (s.x1 + l) * side + (s.x2 + l); };

    // one basis vector per orbit; antisymmetric sector skips swap-invariant orbits
    std::vector<BasisVector> basis;
    std::vector<int> index_of_site(static_cast<std::size_t>(side) * side, -1);
    std::vector<double> coeff_of_site(static_cast<std::size_t>(side) * side, 0.0);
    for (int x1 = -l; x1 <= l; ++x1) {
        for (int x2 = -l; x2 <= l; ++x2) {
            const Site x{x1, x2};
            auto orb = orbit(x, with_swap);
            if (!(x == orb.back())) continue;  // canonical representative: orbit max
            BasisVector v;
            if (b.sector == Sector::swap_antisymmetric) {
                if (orb.size() < 4) continue;  // swap-invariant orbits carry no odd vector
                const double w = 0.5;
                for (const Site& s : orb) {
                    const bool swapped_copy = !(s == x) && !(s == Site{-x.x1, -x.x2});
                    v.sites[v.size] = s;
                    v.coeff[v.size++] = swapped_copy ? -w : w;
                }
            } else {
                const double w = 1.0 / std::sqrt(static_cast<double>(orb.size()));
                for (const Site& s : orb) {
                    v.sites[v.size] = s;
                    v.coeff[v.size++] = w;
                }
            }
            const int idx = static_cast<int>(basis.size());
            for (int q = 0; q < v.size; ++q) {
                index_of_site[site_id(v.sites[q])] = idx;
                coeff_of_site[site_id(v.sites[q])] = v.coeff[q];
            }
            basis.push_back(v);
        }
    }

    const double hop[2] = {std::cos(K.k1 / 2), std::cos(K.k2 / 2)};
    SymMatrix m;
    m.dim = static_cast<int>(basis.size());
    m.a.assign(static_cast<std::size_t>(m.dim) * m.dim, 0.0);
    for (int i = 0; i < m.dim; ++i) {
        const BasisVector& v = basis[i];
        for (int q = 0; q < v.size; ++q) {
            const Site s = v.sites[q];
            const double cs = v.coeff[q];
            m.at(i, i) += cs * cs * (4.0 + potential_position({s.x1, s.x2}, c));
            for (int axis = 0; axis < 2; ++axis) {
                for (int dir = -1; dir <= 1; dir += 2) {
                    Site t = s;
                    (axis == 0 ? t.x1 : t.x2) += dir;
                    if (std::max(std::abs(t.x1), std::abs(t.x2)) > l) continue;
                    const int jdx = index_of_site[site_id(t)];
                    if (jdx < 0) continue;  // site absent from this sector
                    m.at(i, jdx) += -hop[axis] * cs * coeff_of_site[site_id(t)];
                }
            }
        }
    }
    return m;
}

std::vector<double> eigensolve(const SymMatrix& m) {
    if (m.dim <= 0 || m.a.size() != static_cast<std::size_t>(m.dim) * m.dim)
        throw std::invalid_argument("eigensolve: malformed matrix");
    for (int i = 0; i < m.dim; ++i)
        for (int j = i + 1; j < m.dim; ++j)
            if (std::abs(m.at(i, j) - m.at(j, i)) > 1e-12)
                throw std::invalid_argument("eigensolve: matrix is not symmetric");
    std::vector<double> a = m.a;
    std::vector<double> w(m.dim);
    const lapack_int info = LAPACKE_dsyevd(LAPACK_ROW_MAJOR, 'N', 'U', m.dim, a.data(), m.dim,
                                           w.data());
    if (info != 0) throw std::runtime_error("eigensolve: dsyevd failed");
    return w;  // ascending
}

OracleReport count_outside(const std::vector<double>& eigs, const EssentialBand& band,
                           double delta) {
    OracleReport r;
    for (double e : eigs) {
        if (e < band.e_min - delta) {
            r.eigs_below.push_back(e);
        } else if (e > band.e_max + delta) {
            r.eigs_above.push_back(e);
        } else if (e < band.e_min || e > band.e_max) {
            ++r.n_indeterminate;
        }
    }
    std::sort(r.eigs_below.begin(), r.eigs_below.end());
    std::sort(r.eigs_above.begin(), r.eigs_above.end());
    r.n_below = static_cast<int>(r.eigs_below.size());
    r.n_above = static_cast<int>(r.eigs_above.size());
    return r;
}

OracleReport run_oracle(const CouplingParams& c, const Quasimomentum& K, const BoxSpec& b,
                        double delta) {
    const EssentialBand band = essential_band(K);
    OracleReport r = count_outside(eigensolve(build_matrix(c, K, b)), band, delta);
    BoxSpec bigger = b;
    bigger.l += 10;
    OracleReport r2 = count_outside(eigensolve(build_matrix(c, K, bigger)), band, delta);
    r.eigs_below_refined = r2.eigs_below;
    r.eigs_above_refined = r2.eigs_above;
    r.converged = (r.n_below == r2.n_below) && (r.n_above == r2.n_above);
    r.convergence_delta = 0.0;
    if (r.converged) {
        for (int i = 0; i < r.n_below; ++i)
            r.convergence_delta =
                std::max(r.convergence_delta, std::abs(r.eigs_below[i] - r2.eigs_below[i]));
        for (int i = 0; i < r.n_above; ++i)
            r.convergence_delta =
                std::max(r.convergence_delta, std::abs(r.eigs_above[i] - r2.eigs_above[i]));
        if (r.convergence_delta > 1e-6) r.converged = false;
    }
    return r;
}

}  // namespace boundstate
