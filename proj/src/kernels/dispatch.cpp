#include "dicke/kernels.hpp"

#include <cstdlib>
#include <string>

namespace dicke::kernels {

namespace {

Impl pick() {
#if defined(__x86_64__) || defined(_M_X64)
    bool have_avx2 = __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    bool have_avx2 = false;
#endif
    if (const char* env = std::getenv("DICKE_KERNEL")) {
        const std::string v(env);
        if (v == "scalar") return Impl::Scalar;
        if (v == "avx2" && have_avx2) return Impl::Avx2;
        // "auto" or anything unrecognized falls through to detection
    }
    return have_avx2 ? Impl::Avx2 : Impl::Scalar;
}

}  // namespace

Impl active() {
    static const Impl impl = pick();
    return impl;
}

std::string_view active_name() {
    return active() == Impl::Avx2 ? "avx2" : "scalar";
}

void phase_profile(const double* re, const double* im, std::size_t m,
                   const double* cos_phi, const double* sin_phi,
                   std::size_t count, double* out) {
#if defined(__x86_64__) || defined(_M_X64)
    if (active() == Impl::Avx2) {
        phase_profile_avx2(re, im, m, cos_phi, sin_phi, count, out);
        return;
    }
#endif
    phase_profile_scalar(re, im, m, cos_phi, sin_phi, count, out);
}

}  // namespace dicke::kernels
