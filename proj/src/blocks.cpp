#include "dicke/blocks.hpp"

#include <cmath>
#include <string>

#include "dicke/errors.hpp"
#include "dicke/tridiag.hpp"

namespace dicke {

SubspaceBlock build_block(int atoms, int excitation, double coupling) {
    if (atoms < 1) throw InvalidParameter("build_block: atom count must be >= 1");
    if (excitation < 0) throw InvalidParameter("build_block: excitation number must be >= 0");
    if (coupling <= 0.0) throw InvalidParameter("build_block: coupling must be > 0");

    const int d = std::min(excitation, atoms);
    SubspaceBlock b{atoms, excitation, d + 1, coupling, {}, {}, {}, false};
    b.offdiag.resize(d);
    for (int m = 0; m < d; ++m)
        b.offdiag[m] = std::sqrt((m + 1.0) * (excitation - static_cast<double>(m)) *
                                 (atoms - static_cast<double>(m)));
    return b;
}

void eigendecompose(SubspaceBlock& block) {
    if (block.dim == 1) {
        block.eigenvalues = {0.0};
        block.eigenvectors = RMat::identity(1);
        block.diagonalized = true;
        return;
    }
    std::vector<double> off(block.offdiag.size());
    for (std::size_t i = 0; i < off.size(); ++i) off[i] = block.coupling * block.offdiag[i];
    try {
        tridiag_eig_zero_diag(off, block.eigenvalues, block.eigenvectors);
    } catch (const NumericalFailure& f) {
        throw NumericalFailure(std::string(f.what()) + " in subspace (A=" +
                                   std::to_string(block.atoms) + ", N=" +
                                   std::to_string(block.excitation) + ")",
                               block.atoms, block.excitation);
    }
    block.diagonalized = true;
}

CMat evolution_coeffs(const SubspaceBlock& block, double t) {
    const std::size_t n = static_cast<std::size_t>(block.dim);
    std::vector<cplx> ph(n);
    for (std::size_t j = 0; j < n; ++j)
        ph[j] = std::polar(1.0, -block.eigenvalues[j] * t);
    CMat c(n, n);
    const RMat& u = block.eigenvectors;
    for (std::size_t mp = 0; mp < n; ++mp) {
        for (std::size_t m = 0; m <= mp; ++m) {
            cplx s = 0.0;
            for (std::size_t j = 0; j < n; ++j) s += u(m, j) * u(mp, j) * ph[j];
            c(mp, m) = s;
            c(m, mp) = s;
        }
    }
    return c;
}

void apply_evolution(const SubspaceBlock& block, double t,
                     std::span<const cplx> in, std::span<cplx> out) {
    const std::size_t n = static_cast<std::size_t>(block.dim);
    const RMat& u = block.eigenvectors;
    std::vector<cplx> y(n);
    for (std::size_t j = 0; j < n; ++j) {
        cplx s = 0.0;
        for (std::size_t m = 0; m < n; ++m) s += u(m, j) * in[m];
        y[j] = s * std::polar(1.0, -block.eigenvalues[j] * t);
    }
    for (std::size_t m = 0; m < n; ++m) {
        cplx s = 0.0;
        for (std::size_t j = 0; j < n; ++j) s += u(m, j) * y[j];
        out[m] = s;
    }
}

double dispersive_full_phase(int atoms, int excitation, double detuning,
                             double coupling, int m) {
    const double lambda = coupling * coupling / detuning;
    const double casimir = (atoms / 2.0) * (atoms / 2.0 + 1.0);
    const double inv = m - atoms / 2.0;  // S3 eigenvalue
    return detuning * inv +
           lambda * (2.0 * (excitation - m) + 1.0) * inv +
           lambda * (casimir - inv * inv);
}

double dispersive_reduced_phase(int atoms, int excitation, double detuning,
                                double coupling, int m) {
    const double lambda = coupling * coupling / detuning;
    return 2.0 * excitation * m * lambda +
           (detuning + lambda * (2.0 * atoms + 1.0)) * m -
           3.0 * lambda * static_cast<double>(m) * m;
}

DispersiveBlock dispersive_coeffs(int atoms, int excitation, double detuning,
                                  double coupling, double t) {
    if (atoms < 1) throw InvalidParameter("dispersive_coeffs: atom count must be >= 1");
    if (excitation < 0) throw InvalidParameter("dispersive_coeffs: excitation must be >= 0");
    if (detuning == 0.0) throw InvalidParameter("dispersive_coeffs: detuning must be nonzero");

    const int d = std::min(excitation, atoms);
    DispersiveBlock b{atoms, excitation, detuning, coupling,
                      coupling * coupling / detuning, {}};
    b.diag.resize(d + 1);
    for (int m = 0; m <= d; ++m)
        b.diag[m] = std::polar(1.0, -t * dispersive_full_phase(atoms, excitation,
                                                               detuning, coupling, m));
    return b;
}

BlockCache::BlockCache(int atoms, double coupling) : atoms_(atoms), coupling_(coupling) {
    if (atoms < 1) throw InvalidParameter("BlockCache: atom count must be >= 1");
    if (coupling <= 0.0) throw InvalidParameter("BlockCache: coupling must be > 0");
}

const SubspaceBlock& BlockCache::block(int excitation) const {
    if (excitation < 0) throw InvalidParameter("BlockCache: excitation must be >= 0");
    if (static_cast<std::size_t>(excitation) >= blocks_.size())
        blocks_.resize(excitation + 1);
    auto& slot = blocks_[excitation];
    if (!slot) {
        auto b = std::make_unique<SubspaceBlock>(build_block(atoms_, excitation, coupling_));
        eigendecompose(*b);
        slot = std::move(b);
    }
    return *slot;
}

const CMat& BlockCache::coeffs(int excitation, double t) const {
    const auto key = std::make_pair(excitation, t);
    auto it = coeff_cache_.find(key);
    if (it == coeff_cache_.end())
        it = coeff_cache_.emplace(key, evolution_coeffs(block(excitation), t)).first;
    return it->second;
}

}  // namespace dicke
