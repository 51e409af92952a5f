#include "dicke/phase.hpp"

#include <algorithm>
#include <cmath>

#include "dicke/errors.hpp"
#include "dicke/kernels.hpp"

namespace dicke {

namespace {

constexpr double kTwoPi = 2.0 * M_PI;
constexpr int kPovmSupportCap = 64;

// Kahan-compensated in-place accumulation dst += scale * src.
void accumulate(std::vector<double>& dst, std::vector<double>& comp,
                const std::vector<double>& src, double scale) {
    for (std::size_t k = 0; k < dst.size(); ++k) {
        const double term = scale * src[k] - comp[k];
        const double next = dst[k] + term;
        comp[k] = (next - dst[k]) - term;
        dst[k] = next;
    }
}

double quadrature_residual(const PhaseGrid& grid, const std::vector<double>& p) {
    double total = 0.0, comp = 0.0;
    for (double v : p) {
        const double term = v - comp;
        const double next = total + term;
        comp = (next - total) - term;
        total = next;
    }
    return std::fabs(total * grid.step() - 1.0);
}

}  // namespace

PhaseBasis phase_basis(int excitation, int atoms, double phi0) {
    if (excitation < 0) throw InvalidParameter("phase_basis: excitation must be >= 0");
    if (atoms < 1) throw InvalidParameter("phase_basis: atom count must be >= 1");
    const int d = std::min(excitation, atoms);
    PhaseBasis b{excitation, d + 1, phi0, {}, CMat(d + 1, d + 1)};
    b.eigenvalues.resize(d + 1);
    const double norm = 1.0 / std::sqrt(d + 1.0);
    for (int r = 0; r <= d; ++r) {
        b.eigenvalues[r] = phi0 + kTwoPi * r / (d + 1.0);
        for (int m = 0; m <= d; ++m)
            b.vectors(m, r) = norm * std::polar(1.0, m * b.eigenvalues[r]);
    }
    return b;
}

JointState apply_shifter(const JointState& state) {
    JointState out = state;
    for (auto& sub : out.amplitudes)
        if (sub.size() > 1) std::rotate(sub.rbegin(), sub.rbegin() + 1, sub.rend());
    return out;
}

double joint_phase_density(const JointState& state, int excitation, double phi) {
    if (excitation < 0 || excitation > state.top_excitation()) return 0.0;
    const auto& sub = state.amplitudes[excitation];
    cplx acc = 0.0;
    for (std::size_t m = 0; m < sub.size(); ++m)
        acc += sub[m] * std::polar(1.0, -static_cast<double>(m) * phi);
    return std::norm(acc) / kTwoPi;
}

PhaseDistribution phase_distribution(const JointState& state, const PhaseGrid& grid,
                                     double time_label) {
    const std::size_t g = static_cast<std::size_t>(grid.size);
    std::vector<double> cos_phi(g), sin_phi(g);
    for (std::size_t k = 0; k < g; ++k) {
        const double phi = grid.at(static_cast<int>(k));
        cos_phi[k] = std::cos(phi);
        sin_phi[k] = std::sin(phi);
    }

    PhaseDistribution dist{grid, std::vector<double>(g, 0.0), time_label, 0.0};
    std::vector<double> comp(g, 0.0), scratch(g), re, im;
    for (const auto& sub : state.amplitudes) {
        re.resize(sub.size());
        im.resize(sub.size());
        for (std::size_t m = 0; m < sub.size(); ++m) {
            re[m] = sub[m].real();
            im[m] = sub[m].imag();
        }
        kernels::phase_profile(re.data(), im.data(), sub.size(), cos_phi.data(),
                               sin_phi.data(), g, scratch.data());
        accumulate(dist.p, comp, scratch, 1.0 / kTwoPi);
    }
    dist.norm_residual = quadrature_residual(grid, dist.p);
    return dist;
}

std::vector<double> excitation_distribution(const JointState& state) {
    std::vector<double> p(state.amplitudes.size(), 0.0);
    for (std::size_t n = 0; n < state.amplitudes.size(); ++n)
        for (const cplx& z : state.amplitudes[n]) p[n] += std::norm(z);
    return p;
}

cplx circular_moment(const JointState& state, int nu, bool lattice) {
    if (nu < 1) throw InvalidParameter("circular_moment: nu must be >= 1");
    cplx total = 0.0;
    for (const auto& sub : state.amplitudes) {
        const int dim = static_cast<int>(sub.size());
        if (lattice) {
            for (int m = 0; m < dim; ++m)
                total += std::conj(sub[m]) * sub[(m + nu) % dim];
        } else {
            for (int m = 0; m + nu < dim; ++m)
                total += std::conj(sub[m]) * sub[m + nu];
        }
    }
    return total;
}

double sin_moment(const JointState& state) { return circular_moment(state, 1).imag(); }
double cos_moment(const JointState& state) { return circular_moment(state, 1).real(); }

double sin_moment_quadrature(const PhaseDistribution& dist) {
    double total = 0.0, comp = 0.0;
    for (int k = 0; k < dist.grid.size; ++k) {
        const double term = std::sin(dist.grid.at(k)) * dist.p[k] - comp;
        const double next = total + term;
        comp = (next - total) - term;
        total = next;
    }
    return total * dist.grid.step();
}

PhaseDistribution povm_crosscheck(const JointState& state, const PhaseGrid& grid,
                                  int theta_points) {
    if (state.field_nmax > kPovmSupportCap)
        throw SupportTooLarge("povm_crosscheck: field support n_max = " +
                              std::to_string(state.field_nmax) + " exceeds the cost bound " +
                              std::to_string(kPovmSupportCap));
    const int atoms = state.atoms;
    const int n_top = state.top_excitation();
    // Periodic rectangle quadrature is exact once the theta grid exceeds the
    // integrand bandwidth n_max + A.
    int gt = theta_points > 0 ? theta_points : 2 * (n_top + 1) + 9;

    const std::size_t g = static_cast<std::size_t>(grid.size);
    PhaseDistribution dist{grid, std::vector<double>(g, 0.0), 0.0, 0.0};

    // h_M(theta) = sum_N e^{-i N theta} psi^N_M  (field bra phased by the
    // photon number n = N - M, atomic bra contributing e^{-iM theta} more).
    std::vector<cplx> h(atoms + 1);
    const double dtheta = kTwoPi / gt;
    for (int it = 0; it < gt; ++it) {
        const double theta = it * dtheta;
        std::fill(h.begin(), h.end(), cplx(0.0));
        for (int n = 0; n <= n_top; ++n) {
            const cplx wn = std::polar(1.0, -n * theta);
            const auto& sub = state.amplitudes[n];
            for (std::size_t m = 0; m < sub.size(); ++m) h[m] += wn * sub[m];
        }
        for (std::size_t k = 0; k < g; ++k) {
            const double phi = grid.at(static_cast<int>(k));
            cplx amp = 0.0;
            for (int m = 0; m <= atoms; ++m)
                amp += h[m] * std::polar(1.0, -m * phi);
            // (2 pi)^{-2} from the two Susskind-Glogower kets, times dtheta.
            dist.p[k] += std::norm(amp) * dtheta / (kTwoPi * kTwoPi);
        }
    }
    dist.norm_residual = quadrature_residual(grid, dist.p);
    return dist;
}

}  // namespace dicke
