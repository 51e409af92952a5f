#include "dicke/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

namespace dicke::kernels {

// Four grid points per iteration; same rotor recurrence as the scalar
// reference, FMA-fused. Tail goes through the scalar kernel.
void phase_profile_avx2(const double* re, const double* im, std::size_t m,
                        const double* cos_phi, const double* sin_phi,
                        std::size_t count, double* out) {
    std::size_t k = 0;
    for (; k + 4 <= count; k += 4) {
        const __m256d wr = _mm256_loadu_pd(cos_phi + k);
        const __m256d wi = _mm256_sub_pd(_mm256_setzero_pd(),
                                         _mm256_loadu_pd(sin_phi + k));
        __m256d ur = _mm256_set1_pd(1.0);
        __m256d ui = _mm256_setzero_pd();
        __m256d ar = _mm256_setzero_pd();
        __m256d ai = _mm256_setzero_pd();
        for (std::size_t j = 0; j < m; ++j) {
            const __m256d pr = _mm256_set1_pd(re[j]);
            const __m256d pi = _mm256_set1_pd(im[j]);
            ar = _mm256_fmadd_pd(pr, ur, ar);
            ar = _mm256_fnmadd_pd(pi, ui, ar);
            ai = _mm256_fmadd_pd(pr, ui, ai);
            ai = _mm256_fmadd_pd(pi, ur, ai);
            const __m256d tr = _mm256_fmsub_pd(ur, wr, _mm256_mul_pd(ui, wi));
            ui = _mm256_fmadd_pd(ur, wi, _mm256_mul_pd(ui, wr));
            ur = tr;
        }
        const __m256d p = _mm256_fmadd_pd(ar, ar, _mm256_mul_pd(ai, ai));
        _mm256_storeu_pd(out + k, p);
    }
    if (k < count)
        phase_profile_scalar(re, im, m, cos_phi + k, sin_phi + k, count - k, out + k);
}

}  // namespace dicke::kernels

#endif
