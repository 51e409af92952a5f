#include "dicke/algebra.hpp"

#include <cmath>
#include <vector>

#include "dicke/errors.hpp"
#include "dicke/tridiag.hpp"

namespace dicke {

SpinRep spin_matrices(int atoms) {
    if (atoms < 1) throw InvalidParameter("spin_matrices: atom count must be >= 1");
    const std::size_t n = static_cast<std::size_t>(atoms) + 1;
    SpinRep rep{atoms, RMat(n, n), RMat(n, n), RMat(n, n), RMat(n, n)};
    for (std::size_t m = 0; m < n; ++m) {
        rep.s3(m, m) = static_cast<double>(m) - atoms / 2.0;
        if (m + 1 < n) {
            const double up = std::sqrt((m + 1.0) * (atoms - static_cast<double>(m)));
            rep.sp(m + 1, m) = up;      // S+|M> lands on row M+1
            rep.sm(m, m + 1) = up;      // S- is the transpose ladder
            rep.sx(m + 1, m) = up / 2.0;
            rep.sx(m, m + 1) = up / 2.0;
        }
    }
    return rep;
}

WignerDMatrix wigner_d(int atoms, double angle) {
    if (atoms < 1) throw InvalidParameter("wigner_d: atom count must be >= 1");
    const std::size_t n = static_cast<std::size_t>(atoms) + 1;

    // S_x is symmetric tridiagonal with zero diagonal.
    std::vector<double> off(n - 1);
    for (std::size_t m = 0; m + 1 < n; ++m)
        off[m] = std::sqrt((m + 1.0) * (atoms - static_cast<double>(m))) / 2.0;

    std::vector<double> lam;
    RMat v;
    tridiag_eig_zero_diag(off, lam, v);

    WignerDMatrix out{atoms, angle, CMat(n, n)};
    std::vector<cplx> ph(n);
    for (std::size_t j = 0; j < n; ++j) ph[j] = std::polar(1.0, angle * lam[j]);
    for (std::size_t mp = 0; mp < n; ++mp) {
        for (std::size_t m = 0; m <= mp; ++m) {
            cplx s = 0.0;
            for (std::size_t j = 0; j < n; ++j) s += v(mp, j) * v(m, j) * ph[j];
            out.d(mp, m) = s;
            out.d(m, mp) = s;  // symmetric in the indices
        }
    }
    return out;
}

}  // namespace dicke
