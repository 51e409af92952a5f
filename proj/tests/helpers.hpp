#pragma once

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "dicke/matrix.hpp"
#include "dicke/states.hpp"

namespace testutil {

using dicke::CMat;
using dicke::cplx;
using dicke::RMat;

inline CMat matmul(const CMat& a, const CMat& b) {
    CMat c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const cplx v = a(i, k);
            for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += v * b(k, j);
        }
    return c;
}

inline RMat matmul(const RMat& a, const RMat& b) {
    RMat c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const double v = a(i, k);
            for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += v * b(k, j);
        }
    return c;
}

template <typename M>
double max_abs_diff(const M& a, const M& b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            worst = std::max(worst, std::abs(a(i, j) - b(i, j)));
    return worst;
}

inline double max_diff_identity(const CMat& a) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            worst = std::max(worst, std::abs(a(i, j) - (i == j ? cplx(1.0) : cplx(0.0))));
    return worst;
}

inline CMat dagger(const CMat& a) {
    CMat out(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out(j, i) = std::conj(a(i, j));
    return out;
}

// Dense matrix exponential by scaling and squaring with a Taylor series;
// independent oracle for the eigendecomposition-based evolution.
inline CMat expm(const CMat& a) {
    const std::size_t n = a.rows();
    double norm1 = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        double col = 0.0;
        for (std::size_t i = 0; i < n; ++i) col += std::abs(a(i, j));
        norm1 = std::max(norm1, col);
    }
    int squarings = 0;
    double scale = 1.0;
    while (norm1 * scale > 0.5) {
        scale *= 0.5;
        ++squarings;
    }
    CMat t(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) t(i, j) = a(i, j) * scale;

    CMat result = CMat::identity(n);
    CMat term = CMat::identity(n);
    for (int k = 1; k < 60; ++k) {
        term = matmul(term, t);
        double mx = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                term(i, j) /= static_cast<double>(k);
                result(i, j) += term(i, j);
                mx = std::max(mx, std::abs(term(i, j)));
            }
        if (mx < 1e-18) break;
    }
    for (int s = 0; s < squarings; ++s) result = matmul(result, result);
    return result;
}

// Dense -i*H*t exponential for a subspace Hamiltonian given by its scaled
// off-diagonal (g*h_M).
inline CMat expm_tridiag(const std::vector<double>& off, double t) {
    const std::size_t n = off.size() + 1;
    CMat a(n, n);
    for (std::size_t m = 0; m + 1 < n; ++m) {
        a(m, m + 1) = cplx(0.0, -off[m] * t);
        a(m + 1, m) = cplx(0.0, -off[m] * t);
    }
    return expm(a);
}

// Normalized random state over the block structure of (atoms, n_max).
inline dicke::JointState random_state(int atoms, int n_max, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    dicke::JointState s;
    s.atoms = atoms;
    s.field_nmax = n_max;
    const int n_top = n_max + atoms;
    s.amplitudes.resize(n_top + 1);
    for (int n = 0; n <= n_top; ++n) {
        auto& sub = s.amplitudes[n];
        sub.resize(std::min(n, atoms) + 1);
        for (auto& z : sub) z = cplx(gauss(rng), gauss(rng));
    }
    const double nrm = std::sqrt(s.norm_squared());
    for (auto& sub : s.amplitudes)
        for (auto& z : sub) z /= nrm;
    s.norm_residual = 1.0 - s.norm_squared();
    return s;
}

}  // namespace testutil
