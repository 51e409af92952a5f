#include "dicke/tridiag.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "dicke/errors.hpp"

namespace dicke {

namespace {

constexpr double kRelTol = 1e-14;
constexpr int kSweepScale = 50;

double pythag(double a, double b) { return std::hypot(a, b); }

double sign_of(double a, double b) { return b >= 0.0 ? std::fabs(a) : -std::fabs(a); }

}  // namespace

// QL with implicit shifts, following the classic EISPACK tql2 scheme,
// specialized to a zero initial diagonal.
void tridiag_eig_zero_diag(std::span<const double> off,
                           std::vector<double>& eval, RMat& evec) {
    const std::size_t n = off.size() + 1;
    std::vector<double> d(n, 0.0);
    std::vector<double> e(n, 0.0);
    std::copy(off.begin(), off.end(), e.begin());  // e[0..n-2], e[n-1] = 0

    RMat z = RMat::identity(n);

    int budget = kSweepScale * static_cast<int>(n);
    for (std::size_t l = 0; l < n; ++l) {
        std::size_t m;
        do {
            for (m = l; m + 1 < n; ++m) {
                const double dd = std::fabs(d[m]) + std::fabs(d[m + 1]);
                if (std::fabs(e[m]) <= kRelTol * dd) break;
            }
            if (m != l) {
                if (--budget < 0)
                    throw NumericalFailure("tridiagonal QL failed to converge");
                double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
                double r = pythag(g, 1.0);
                g = d[m] - d[l] + e[l] / (g + sign_of(r, g));
                double s = 1.0, c = 1.0, p = 0.0;
                bool underflow = false;
                for (std::size_t i = m; i-- > l;) {
                    double f = s * e[i];
                    const double b = c * e[i];
                    r = pythag(f, g);
                    e[i + 1] = r;
                    if (r == 0.0) {
                        d[i + 1] -= p;
                        e[m] = 0.0;
                        underflow = true;
                        break;
                    }
                    s = f / r;
                    c = g / r;
                    g = d[i + 1] - p;
                    r = (d[i] - g) * s + 2.0 * c * b;
                    p = s * r;
                    d[i + 1] = g + p;
                    g = c * r - b;
                    for (std::size_t k = 0; k < n; ++k) {
                        f = z(k, i + 1);
                        z(k, i + 1) = s * z(k, i) + c * f;
                        z(k, i) = c * z(k, i) - s * f;
                    }
                }
                if (underflow) continue;
                d[l] -= p;
                e[l] = g;
                e[m] = 0.0;
            }
        } while (m != l);
    }

    // Sort ascending, permuting eigenvector columns along.
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&d](std::size_t a, std::size_t b) { return d[a] < d[b]; });

    eval.resize(n);
    evec = RMat(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        const std::size_t src = order[j];
        eval[j] = d[src];
        double flip = 1.0;
        for (std::size_t k = 0; k < n; ++k) {
            if (z(k, src) != 0.0) {
                flip = z(k, src) > 0.0 ? 1.0 : -1.0;
                break;
            }
        }
        for (std::size_t k = 0; k < n; ++k) evec(k, j) = flip * z(k, src);
    }
}

}  // namespace dicke
