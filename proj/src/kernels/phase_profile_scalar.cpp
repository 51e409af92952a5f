#include "dicke/kernels.hpp"

namespace dicke::kernels {

void phase_profile_scalar(const double* re, const double* im, std::size_t m,
                          const double* cos_phi, const double* sin_phi,
                          std::size_t count, double* out) {
    for (std::size_t k = 0; k < count; ++k) {
        const double wr = cos_phi[k];
        const double wi = -sin_phi[k];  // rotor exp(-i*phi_k)
        double ur = 1.0, ui = 0.0;      // exp(-i*M*phi_k)
        double ar = 0.0, ai = 0.0;
        for (std::size_t j = 0; j < m; ++j) {
            ar += re[j] * ur - im[j] * ui;
            ai += re[j] * ui + im[j] * ur;
            const double tr = ur * wr - ui * wi;
            ui = ur * wi + ui * wr;
            ur = tr;
        }
        out[k] = ar * ar + ai * ai;
    }
}

}  // namespace dicke::kernels
