#pragma once

#include <map>
#include <memory>
#include <span>
#include <vector>

#include "dicke/matrix.hpp"

namespace dicke {

// Interaction Hamiltonian restricted to the invariant subspace of fixed
// excitation number N for A atoms: real symmetric tridiagonal with zero
// diagonal, off-diagonal entries g*h_M, h_M = sqrt((M+1)(N-M)(A-M)),
// dimension D+1 with D = min(N, A).
struct SubspaceBlock {
    int atoms;        // A
    int excitation;   // N
    int dim;          // D+1
    double coupling;  // g
    std::vector<double> offdiag;       // h_M without the coupling, length D
    std::vector<double> eigenvalues;   // filled by eigendecompose, ascending
    RMat eigenvectors;                 // column J = eigenvector, sign-fixed
    bool diagonalized = false;
};

SubspaceBlock build_block(int atoms, int excitation, double coupling);

// Fills eigenvalues/eigenvectors; throws NumericalFailure carrying (A, N)
// if the QL iteration cap is exceeded.
void eigendecompose(SubspaceBlock& block);

// C^N_{M'M}(t) = sum_J U_{MJ} U_{M'J} exp(-i eps_J t). Symmetric unitary.
CMat evolution_coeffs(const SubspaceBlock& block, double t);

// Applies C^N(t) to an amplitude vector through the spectral factorization
// (two small real matvecs) without forming the matrix.
void apply_evolution(const SubspaceBlock& block, double t,
                     std::span<const cplx> in, std::span<cplx> out);

// Dispersive-limit diagonal evolution, from the effective Hamiltonian
//   H_eff = Delta*S3 + lambda*(2 a^dag a + 1)*S3 + lambda*(C - S3^2),
// lambda = g^2/Delta, C = (A/2)(A/2 + 1).
struct DispersiveBlock {
    int atoms;
    int excitation;
    double detuning;
    double coupling;
    double lambda;
    std::vector<cplx> diag;  // unit-modulus phases, length D+1
};

DispersiveBlock dispersive_coeffs(int atoms, int excitation, double detuning,
                                  double coupling, double t);

// Full H_eff phase of basis state M (the argument of the diagonal entry's
// exp(-i * t * phase)).
double dispersive_full_phase(int atoms, int excitation, double detuning,
                             double coupling, int m);

// Reduced phase f_M^N = 2NM*lambda + [Delta + lambda(2A+1)]M - 3*lambda*M^2,
// the full phase minus an M-independent offset per subspace.
double dispersive_reduced_phase(int atoms, int excitation, double detuning,
                                double coupling, int m);

// Lazily builds and diagonalizes blocks per N and memoizes evolution
// matrices per (N, t). Blocks for distinct N are independent.
class BlockCache {
public:
    explicit BlockCache(int atoms, double coupling = 1.0);

    int atoms() const { return atoms_; }
    double coupling() const { return coupling_; }

    const SubspaceBlock& block(int excitation) const;
    const CMat& coeffs(int excitation, double t) const;

private:
    int atoms_;
    double coupling_;
    mutable std::vector<std::unique_ptr<SubspaceBlock>> blocks_;
    mutable std::map<std::pair<int, double>, CMat> coeff_cache_;
};

}  // namespace dicke
