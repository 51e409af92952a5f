#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "dicke/blocks.hpp"
#include "dicke/matrix.hpp"

namespace dicke {

// Field amplitudes Q_n over n = 0..n_max. Coherent weights are the
// Poissonian square roots, evaluated in log space; `phase` optionally
// rotates Q_n by exp(i*n*phase) at assembly time (off by default).
struct FieldWeights {
    enum class Kind { Coherent, Number };
    Kind kind;
    double nbar = 0.0;   // coherent mean photon number
    int number = 0;      // Fock index for Kind::Number
    int n_max = 0;
    double phase = 0.0;
    double tail_residual = 0.0;  // 1 - sum Q_n^2 for the coherent truncation
    std::vector<double> q;
};

// n_max is the smallest integer whose Poisson tail is below 1 - coverage,
// floored at nbar + 10*sqrt(nbar+1) (the vacuum nbar = 0 is exact).
FieldWeights field_coherent(double nbar, double coverage = 1.0 - 1e-12);
FieldWeights field_number(int k);

// Atomic amplitudes A_M over M = 0..A.
struct AtomicAmplitudes {
    enum class Kind { Coherent, Dicke, Semiclassical };
    Kind kind;
    int atoms;
    double theta = 0.0, phi = 0.0;  // spherical angles for Kind::Coherent
    int index = 0;                  // K for Dicke, P for Semiclassical
    std::vector<cplx> amp;
};

// SU(2) coherent state, zeta = -tan(theta/2) exp(-i phi); binomials in log
// space. theta = 0 gives the all-unexcited Dicke state.
AtomicAmplitudes atomic_coherent(int atoms, double theta, double phi);
AtomicAmplitudes atomic_dicke(int atoms, int k);
// Normalized eigenvector of 2*S_x with eigenvalue Lambda_P = A - 2P, M = 0
// component real positive.
AtomicAmplitudes semiclassical_state(int atoms, int p);

// Amplitudes psi^N_M over the basis |N-M, M>, organized per invariant
// subspace N = 0..field_nmax + atoms; entries with M > min(N, A) are
// structurally absent.
struct JointState {
    int atoms = 0;
    int field_nmax = 0;
    std::vector<std::vector<cplx>> amplitudes;  // [N][M]
    double norm_residual = 0.0;                 // 1 - total norm at assembly

    int top_excitation() const { return static_cast<int>(amplitudes.size()) - 1; }
    double norm_squared() const;
};

// psi^N_M = Q_{N-M} exp(i (N-M) field_phase) A_M.
JointState assemble(const FieldWeights& field, const AtomicAmplitudes& atoms);

// Exact resonant evolution by tau = g*t using the cache's diagonalized
// blocks. Unitary per subspace.
JointState evolve(const JointState& state, double tau, const BlockCache& blocks);

struct DispersiveParams {
    double detuning;
    double coupling = 1.0;
    bool reduced_phases = false;  // use f_M^N instead of the full H_eff phase
};

// Diagonal dispersive evolution by absolute time t.
JointState evolve_dispersive(const JointState& state, double t,
                             const DispersiveParams& params);

// Snapshot serialization: '#'-prefixed key=value header lines followed by
// rows "N M re im" with 17 significant digits.
void save_snapshot(const JointState& state, std::ostream& out);
void save_snapshot(const JointState& state, const std::string& path);
JointState load_snapshot(std::istream& in);
JointState load_snapshot(const std::string& path);

}  // namespace dicke
