#pragma once

#include <functional>
#include <string>
#include <vector>

#include "dicke/matrix.hpp"
#include "dicke/phase.hpp"
#include "dicke/states.hpp"

namespace dicke::approx {

// Weak-field limit (nbar ~ 1, atoms unexcited): P(phi, t) built from the
// exact N = 1 block coefficients,
//   (2 pi)^{-1} {1 + nbar [|C00|^2 + |C01|^2 + 2 Re(C00 C01* e^{i phi})]} e^{-nbar}.
double weak_field(double nbar, double phi, const CMat& n1_coeffs);

// Omega_N = 2 g sqrt(N - A/2 + 1/2); the radicand must be nonnegative.
double rabi_frequency(int excitation, int atoms, double coupling);

// Strong-field approximation C^N(t) ~ d^A(-Omega_N t).
CMat strong_field_coeffs(int atoms, int excitation, double coupling, double t);

// Strong-field distribution for initially unexcited atoms, evaluated in the
// pole-free sin/cos folding (tan^M cos^A = sin^M cos^{A-M}). Terms with
// N below the Omega_N validity floor carry exponentially small weight in
// this regime and are skipped.
double strong_field_distribution(int atoms, const FieldWeights& field,
                                 double coupling, double t, double phi);
std::vector<double> strong_field_profile(int atoms, const FieldWeights& field,
                                         double coupling, double t,
                                         const PhaseGrid& grid);

// Single-N Gaussian envelope sqrt(A/2pi) exp[-(A/2)(phi - pi/2 + delta_n)^2]
// with the argument wrapped into (-pi, pi].
double strong_field_gaussian(int atoms, double phi, double delta_n);

// Time-independent factorized-state distribution from the semiclassical
// amplitudes, normalized as a continuous density.
double factorized_distribution(int atoms, int p, double phi);
std::vector<double> factorized_profile(int atoms, int p, const PhaseGrid& grid);

// Large-A limit of the above: sqrt(A/2pi) exp(-A phi^2 / 2), wrapped.
double factorized_gaussian(int atoms, double phi);

// Dispersive-limit distribution evaluated directly from the reduced phases
// f_M^N (independent of the state-evolution code path).
PhaseDistribution dispersive_distribution(const FieldWeights& field,
                                          const AtomicAmplitudes& atoms_amp,
                                          int atoms, double detuning, double coupling,
                                          double t, const PhaseGrid& grid);

// Two-Gaussian catlike prediction at lambda*t = pi/6:
//   sqrt(A/8pi) { exp[-(phi - c)^2 A/2] + exp[-(phi - c + pi)^2 A/2] },
// c = -pi*phi_nbar/(3 lambda), phi_nbar = 2 nbar lambda + A + lambda(2A+1),
// reduced mod 2pi.
double cat_prediction(int atoms, double nbar, double lambda, double phi);
// The two hump centers, wrapped into (-pi, pi].
std::pair<double, double> cat_centers(int atoms, double nbar, double lambda);

enum class Regime { Weak, Strong, Factorized, Dispersive, Cat };

// A named analytic limit bound to its parameters, evaluable pointwise.
struct ApproxPrediction {
    Regime regime;
    std::string name;
    std::function<double(double phi, double t)> eval;
};

}  // namespace dicke::approx
