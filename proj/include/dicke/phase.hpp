#pragma once

#include <vector>

#include "dicke/matrix.hpp"
#include "dicke/states.hpp"

namespace dicke {

// Uniform grid over the 2*pi window [phi0 - pi, phi0 + pi).
struct PhaseGrid {
    double phi0 = 0.0;
    int size = 720;

    double step() const { return 2.0 * M_PI / size; }
    double at(int k) const { return phi0 - M_PI + k * step(); }
};

// Sampled relative-phase density with its quadrature residual.
struct PhaseDistribution {
    PhaseGrid grid;
    std::vector<double> p;
    double time = 0.0;
    double norm_residual = 0.0;  // |integral of p over 2*pi - 1|
};

// Relative-phase eigenbasis of the invariant subspace N: eigenvalues
// phi_r = phi0 + 2*pi*r/(D+1) and eigenvectors
// |phi_r> = (D+1)^{-1/2} sum_M e^{i M phi_r} |N-M, M>.
struct PhaseBasis {
    int excitation;
    int dim;  // D+1
    double phi0;
    std::vector<double> eigenvalues;
    CMat vectors;  // column r, rows M = 0..D
};

PhaseBasis phase_basis(int excitation, int atoms, double phi0 = 0.0);

// The shifter E: per subspace, |N-M, M> -> |N-(M+1), M+1> with cyclic
// wraparound of unit phase. Unitary; commutes with N.
JointState apply_shifter(const JointState& state);

// Continuous joint density P(N, phi) = (2*pi)^{-1} |sum_M psi^N_M e^{-iM phi}|^2.
// Returns 0 for N outside the state's support.
double joint_phase_density(const JointState& state, int excitation, double phi);

// Total density P(phi) = sum_N P(N, phi) on the grid, accumulated per
// subspace through the dispatched kernel with compensated summation.
PhaseDistribution phase_distribution(const JointState& state, const PhaseGrid& grid,
                                     double time_label = 0.0);

// P(N) = sum_M |psi^N_M|^2; invariant under evolution.
std::vector<double> excitation_distribution(const JointState& state);

// Circular moment <e^{i nu Phi}>, nu >= 1, in shift-overlap form.
// The default (continuum) form sum_{M <= D-nu} psi*_M psi_{M+nu} equals the
// quadrature of the continuous density exactly; lattice = true adds the
// cyclic wraparound terms of E^nu and is the discrete operator expectation.
cplx circular_moment(const JointState& state, int nu, bool lattice = false);
double sin_moment(const JointState& state);
double cos_moment(const JointState& state);

// Quadrature cross-check used by tests and Fig.-3-style traces.
double sin_moment_quadrature(const PhaseDistribution& dist);

// Relative-phase distribution obtained from the Susskind-Glogower absolute
// phases: builds the joint distribution P(theta_a, theta_f) from the field
// and atomic phase projectors and integrates out the phase sum numerically
// (theta_points = 0 picks an exact-bandwidth grid). Support above
// field_nmax = 64 is rejected with SupportTooLarge.
PhaseDistribution povm_crosscheck(const JointState& state, const PhaseGrid& grid,
                                  int theta_points = 0);

}  // namespace dicke
