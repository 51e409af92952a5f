#include "dicke/approx.hpp"

#include <cmath>

#include "dicke/algebra.hpp"
#include "dicke/blocks.hpp"
#include "dicke/errors.hpp"

namespace dicke::approx {

namespace {

constexpr double kTwoPi = 2.0 * M_PI;

double log_binomial(int n, int k) {
    return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

// Wrap into (-pi, pi].
double wrap_angle(double x) {
    x = std::fmod(x, kTwoPi);
    if (x <= -M_PI) x += kTwoPi;
    if (x > M_PI) x -= kTwoPi;
    return x;
}

}  // namespace

double weak_field(double nbar, double phi, const CMat& n1_coeffs) {
    const cplx c00 = n1_coeffs(0, 0);
    const cplx c01 = n1_coeffs(0, 1);
    const double bracket = std::norm(c00) + std::norm(c01) +
        2.0 * (c00 * std::conj(c01) * std::polar(1.0, phi)).real();
    return (1.0 + nbar * bracket) * std::exp(-nbar) / kTwoPi;
}

double rabi_frequency(int excitation, int atoms, double coupling) {
    const double radicand = excitation - atoms / 2.0 + 0.5;
    if (radicand < 0.0)
        throw RegimeError("rabi_frequency: N < A/2 - 1/2 is outside the strong-field regime");
    return 2.0 * coupling * std::sqrt(radicand);
}

CMat strong_field_coeffs(int atoms, int excitation, double coupling, double t) {
    const double omega = rabi_frequency(excitation, atoms, coupling);
    return wigner_d(atoms, -omega * t).d;
}

namespace {

// Inner sum |sum_M sqrt(binom) sin^M cos^{A-M} e^{iM(phi + pi/2)}|^2 at a
// single Omega; shared by the point and grid evaluators.
void strong_field_block(int atoms, double half_angle, std::vector<cplx>& terms) {
    const double c = std::cos(half_angle);
    const double s = std::sin(half_angle);
    terms.resize(atoms + 1);
    for (int m = 0; m <= atoms; ++m) {
        const double mag = std::exp(0.5 * log_binomial(atoms, m)) *
                           std::pow(s, m) * std::pow(c, atoms - m);
        // e^{iM pi/2} = i^M folded into the coefficient
        terms[m] = mag * std::polar(1.0, m * M_PI / 2.0);
    }
}

}  // namespace

double strong_field_distribution(int atoms, const FieldWeights& field,
                                 double coupling, double t, double phi) {
    double total = 0.0;
    std::vector<cplx> terms;
    for (int n = 0; n <= field.n_max; ++n) {
        const double q = field.q[n];
        if (q == 0.0) continue;
        const double radicand = n - atoms / 2.0 + 0.5;
        if (radicand < 0.0) continue;
        const double omega = 2.0 * coupling * std::sqrt(radicand);
        strong_field_block(atoms, omega * t / 2.0, terms);
        cplx acc = 0.0;
        for (int m = 0; m <= atoms; ++m)
            acc += terms[m] * std::polar(1.0, m * phi);
        total += q * q * std::norm(acc);
    }
    return total / kTwoPi;
}

std::vector<double> strong_field_profile(int atoms, const FieldWeights& field,
                                         double coupling, double t,
                                         const PhaseGrid& grid) {
    std::vector<double> p(grid.size, 0.0);
    std::vector<cplx> terms;
    for (int n = 0; n <= field.n_max; ++n) {
        const double q = field.q[n];
        if (q == 0.0) continue;
        const double radicand = n - atoms / 2.0 + 0.5;
        if (radicand < 0.0) continue;
        const double omega = 2.0 * coupling * std::sqrt(radicand);
        strong_field_block(atoms, omega * t / 2.0, terms);
        for (int k = 0; k < grid.size; ++k) {
            const double phi = grid.at(k);
            cplx acc = 0.0;
            for (int m = 0; m <= atoms; ++m)
                acc += terms[m] * std::polar(1.0, m * phi);
            p[k] += q * q * std::norm(acc) / kTwoPi;
        }
    }
    return p;
}

double strong_field_gaussian(int atoms, double phi, double delta_n) {
    const double dx = wrap_angle(phi - M_PI / 2.0 + delta_n);
    return std::sqrt(atoms / kTwoPi) * std::exp(-0.5 * atoms * dx * dx);
}

double factorized_distribution(int atoms, int p, double phi) {
    const AtomicAmplitudes sc = semiclassical_state(atoms, p);
    cplx acc = 0.0;
    for (int m = 0; m <= atoms; ++m)
        acc += sc.amp[m] * std::polar(1.0, m * phi);
    return std::norm(acc) / kTwoPi;
}

std::vector<double> factorized_profile(int atoms, int p, const PhaseGrid& grid) {
    const AtomicAmplitudes sc = semiclassical_state(atoms, p);
    std::vector<double> out(grid.size);
    for (int k = 0; k < grid.size; ++k) {
        const double phi = grid.at(k);
        cplx acc = 0.0;
        for (int m = 0; m <= atoms; ++m)
            acc += sc.amp[m] * std::polar(1.0, m * phi);
        out[k] = std::norm(acc) / kTwoPi;
    }
    return out;
}

double factorized_gaussian(int atoms, double phi) {
    const double dx = wrap_angle(phi);
    return std::sqrt(atoms / kTwoPi) * std::exp(-0.5 * atoms * dx * dx);
}

PhaseDistribution dispersive_distribution(const FieldWeights& field,
                                          const AtomicAmplitudes& atoms_amp,
                                          int atoms, double detuning, double coupling,
                                          double t, const PhaseGrid& grid) {
    if (detuning == 0.0)
        throw InvalidParameter("dispersive_distribution: detuning must be nonzero");
    PhaseDistribution dist{grid, std::vector<double>(grid.size, 0.0), t, 0.0};
    const int n_top = field.n_max + atoms;
    std::vector<cplx> coef(atoms + 1);
    for (int n = 0; n <= n_top; ++n) {
        const int d = std::min(n, atoms);
        bool any = false;
        for (int m = 0; m <= d; ++m) {
            const int photons = n - m;
            if (photons > field.n_max) {
                coef[m] = 0.0;
                continue;
            }
            cplx qn = field.q[photons];
            if (field.phase != 0.0) qn *= std::polar(1.0, photons * field.phase);
            const double f = dispersive_reduced_phase(atoms, n, detuning, coupling, m);
            coef[m] = qn * atoms_amp.amp[m] * std::polar(1.0, -f * t);
            any = any || coef[m] != cplx(0.0);
        }
        if (!any) continue;
        for (int k = 0; k < grid.size; ++k) {
            const double phi = grid.at(k);
            cplx acc = 0.0;
            for (int m = 0; m <= d; ++m)
                acc += coef[m] * std::polar(1.0, -m * phi);
            dist.p[k] += std::norm(acc) / kTwoPi;
        }
    }
    double total = 0.0;
    for (double v : dist.p) total += v;
    dist.norm_residual = std::fabs(total * grid.step() - 1.0);
    return dist;
}

std::pair<double, double> cat_centers(int atoms, double nbar, double lambda) {
    const double phi_nbar = 2.0 * nbar * lambda + atoms + lambda * (2.0 * atoms + 1.0);
    const double c = wrap_angle(-M_PI * phi_nbar / (3.0 * lambda));
    return {c, wrap_angle(c + M_PI)};
}

double cat_prediction(int atoms, double nbar, double lambda, double phi) {
    const auto [c0, c1] = cat_centers(atoms, nbar, lambda);
    const double d0 = wrap_angle(phi - c0);
    const double d1 = wrap_angle(phi - c1);
    return std::sqrt(atoms / (8.0 * M_PI)) *
           (std::exp(-0.5 * atoms * d0 * d0) + std::exp(-0.5 * atoms * d1 * d1));
}

}  // namespace dicke::approx
