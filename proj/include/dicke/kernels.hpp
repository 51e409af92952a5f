#pragma once

#include <cstddef>
#include <string_view>

namespace dicke::kernels {

// out[k] = |sum_M (re[M] + i*im[M]) * exp(-i*M*phi_k)|^2 for k = 0..count-1,
// with cos_phi[k] = cos(phi_k), sin_phi[k] = sin(phi_k). The rotor
// exp(-i*phi_k) is applied incrementally over M; m is small (subspace
// dimension), count is the grid size, so the data-parallel axis is k.
void phase_profile_scalar(const double* re, const double* im, std::size_t m,
                          const double* cos_phi, const double* sin_phi,
                          std::size_t count, double* out);

#if defined(__x86_64__) || defined(_M_X64)
void phase_profile_avx2(const double* re, const double* im, std::size_t m,
                        const double* cos_phi, const double* sin_phi,
                        std::size_t count, double* out);
#endif

enum class Impl { Scalar, Avx2 };

// Active implementation: picked once from CPUID, overridable with
// DICKE_KERNEL=scalar|avx2|auto (checked at first use).
Impl active();
std::string_view active_name();

// Dispatched entry point used by the phase module.
void phase_profile(const double* re, const double* im, std::size_t m,
                   const double* cos_phi, const double* sin_phi,
                   std::size_t count, double* out);

}  // namespace dicke::kernels
