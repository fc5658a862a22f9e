#ifndef BOUNDSTATE_LATTICE_ORACLE_HPP
#define BOUNDSTATE_LATTICE_ORACLE_HPP

#include <vector>

#include "boundstate/lattice_model.hpp"

// Independent ground truth: Dirichlet truncation of the fiber Hamiltonian in
// the relative coordinate, dense diagonalization, bound-state counting.
// In position space the fiber operator acts on even functions of x as
//   (H psi)(x) = (4 + vhat(x)) psi(x) - sum_i cos(K_i/2) [psi(x+e_i) + psi(x-e_i)]
// truncated to max(|x1|,|x2|) <= l with zero boundary conditions; compression
// keeps the free spectrum inside the band, so every outside eigenvalue is
// attributable to the potential.

namespace boundstate {

enum class Sector { full_even, swap_symmetric, swap_antisymmetric };

struct BoxSpec {
    int l = 30;  // half-width, >= 10
    Sector sector = Sector::full_even;
};

struct SymMatrix {
    int dim = 0;
    std::vector<double> a;  // row-major dim x dim
    double& at(int i, int j) { return a[static_cast<std::size_t>(i) * dim + j]; }
    double at(int i, int j) const { return a[static_cast<std::size_t>(i) * dim + j]; }
};

// Truncated fiber Hamiltonian in the requested symmetry sector. The basis is
// one vector per orbit of {x -> -x} (and x1 <-> x2 for swap sectors, which
// require K1 == K2), with 1/sqrt(orbit size) weights so the matrix stays
// symmetric. Throws std::invalid_argument on bad sector/K combinations.
SymMatrix build_matrix(const CouplingParams& c, const Quasimomentum& K, const BoxSpec& b);

// All eigenvalues, ascending (LAPACK dsyevd). Rejects non-symmetric input.
std::vector<double> eigensolve(const SymMatrix& m);

struct OracleReport {
    std::vector<double> eigs_below, eigs_above;  // box l, outside by margin delta
    std::vector<double> eigs_below_refined, eigs_above_refined;  // box l+10
    int n_below = 0, n_above = 0;
    int n_indeterminate = 0;        // within delta of an edge, not counted
    double convergence_delta = 0.0; // max movement of outside eigenvalues, l -> l+10
    bool converged = true;          // counts stable and movement <= 1e-6
};

// Pure counting: eigenvalues below e_min - delta / above e_max + delta.
OracleReport count_outside(const std::vector<double>& eigs, const EssentialBand& band,
                           double delta);

// Diagonalizes at b.l and b.l + 10 and fills the convergence fields.
OracleReport run_oracle(const CouplingParams& c, const Quasimomentum& K, const BoxSpec& b,
                        double delta = 1e-4);

}  // namespace boundstate

#endif
