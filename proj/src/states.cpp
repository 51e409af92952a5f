#include "dicke/states.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "dicke/errors.hpp"
#include "dicke/tridiag.hpp"

namespace dicke {

namespace {

double log_binomial(int n, int k) {
    return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

}  // namespace

FieldWeights field_coherent(double nbar, double coverage) {
    if (nbar < 0.0) throw InvalidParameter("field_coherent: nbar must be >= 0");
    if (!(coverage > 0.0 && coverage < 1.0))
        throw InvalidParameter("field_coherent: coverage must lie in (0, 1)");

    FieldWeights w;
    w.kind = FieldWeights::Kind::Coherent;
    w.nbar = nbar;

    if (nbar == 0.0) {
        w.n_max = 0;
        w.q = {1.0};
        w.tail_residual = 0.0;
        return w;
    }

    const double residual = 1.0 - coverage;
    const double log_nbar = std::log(nbar);
    // Smallest n_max with Poisson tail below the residual target.
    long double cum = 0.0L;
    int n_tail = 0;
    for (int n = 0;; ++n) {
        const double logp = -nbar + n * log_nbar - std::lgamma(n + 1.0);
        cum += std::exp(static_cast<long double>(logp));
        if (1.0L - cum <= static_cast<long double>(residual)) {
            n_tail = n;
            break;
        }
    }
    const int n_floor = static_cast<int>(std::ceil(nbar + 10.0 * std::sqrt(nbar + 1.0)));
    w.n_max = std::max(n_tail, n_floor);

    w.q.resize(w.n_max + 1);
    long double total = 0.0L;
    for (int n = 0; n <= w.n_max; ++n) {
        const double logp = -nbar + n * log_nbar - std::lgamma(n + 1.0);
        w.q[n] = std::exp(0.5 * logp);
        total += static_cast<long double>(w.q[n]) * w.q[n];
    }
    w.tail_residual = static_cast<double>(1.0L - total);
    return w;
}

FieldWeights field_number(int k) {
    if (k < 0) throw InvalidParameter("field_number: Fock index must be >= 0");
    FieldWeights w;
    w.kind = FieldWeights::Kind::Number;
    w.number = k;
    w.n_max = k;
    w.q.assign(k + 1, 0.0);
    w.q[k] = 1.0;
    return w;
}

AtomicAmplitudes atomic_coherent(int atoms, double theta, double phi) {
    if (atoms < 1) throw InvalidParameter("atomic_coherent: atom count must be >= 1");
    AtomicAmplitudes a;
    a.kind = AtomicAmplitudes::Kind::Coherent;
    a.atoms = atoms;
    a.theta = theta;
    a.phi = phi;
    a.amp.assign(atoms + 1, cplx(0.0));

    // A_M = sqrt(binom(A,M)) (-1)^M sin^M(theta/2) cos^(A-M)(theta/2) e^{-iM phi},
    // the stable form of zeta^M / (1+|zeta|^2)^{A/2} with zeta = -tan(theta/2)e^{-i phi}.
    const double s = std::sin(theta / 2.0);
    const double c = std::cos(theta / 2.0);
    if (s == 0.0) {
        a.amp[0] = 1.0;
        return a;
    }
    if (c == 0.0) {
        a.amp[atoms] = std::polar(1.0, -atoms * phi) * ((atoms % 2 == 0) ? 1.0 : -1.0);
        return a;
    }
    const double ls = std::log(std::fabs(s));
    const double lc = std::log(std::fabs(c));
    const double ssign = s > 0.0 ? 1.0 : -1.0;
    const double csign = c > 0.0 ? 1.0 : -1.0;
    for (int m = 0; m <= atoms; ++m) {
        const double mag = std::exp(0.5 * log_binomial(atoms, m) + m * ls + (atoms - m) * lc);
        double sign = (m % 2 == 0) ? 1.0 : -1.0;
        if (m % 2 == 1 && ssign < 0.0) sign = -sign;
        if ((atoms - m) % 2 == 1 && csign < 0.0) sign = -sign;
        a.amp[m] = sign * mag * std::polar(1.0, -m * phi);
    }
    return a;
}

AtomicAmplitudes atomic_dicke(int atoms, int k) {
    if (atoms < 1) throw InvalidParameter("atomic_dicke: atom count must be >= 1");
    if (k < 0 || k > atoms) throw InvalidParameter("atomic_dicke: index out of range");
    AtomicAmplitudes a;
    a.kind = AtomicAmplitudes::Kind::Dicke;
    a.atoms = atoms;
    a.index = k;
    a.amp.assign(atoms + 1, cplx(0.0));
    a.amp[k] = 1.0;
    return a;
}

AtomicAmplitudes semiclassical_state(int atoms, int p) {
    if (atoms < 1) throw InvalidParameter("semiclassical_state: atom count must be >= 1");
    if (p < 0 || p > atoms) throw InvalidParameter("semiclassical_state: P out of range");

    // 2*S_x is tridiagonal with zero diagonal and off-diagonal sqrt((M+1)(A-M)).
    std::vector<double> off(atoms);
    for (int m = 0; m < atoms; ++m)
        off[m] = std::sqrt((m + 1.0) * (atoms - static_cast<double>(m)));
    std::vector<double> lam;
    RMat v;
    tridiag_eig_zero_diag(off, lam, v);

    // Ascending eigenvalues are -A..A step 2; Lambda_P = A - 2P sits at
    // column A - P.
    const int col = atoms - p;
    const double expected = atoms - 2.0 * p;
    if (std::fabs(lam[col] - expected) > 1e-10 * (atoms + 1))
        throw NumericalFailure("semiclassical_state: eigenvalue mismatch", atoms, -1);

    AtomicAmplitudes a;
    a.kind = AtomicAmplitudes::Kind::Semiclassical;
    a.atoms = atoms;
    a.index = p;
    a.amp.resize(atoms + 1);
    // Global phase: M = 0 component real positive (first nonzero otherwise);
    // the solver's sign convention already guarantees it.
    for (int m = 0; m <= atoms; ++m) a.amp[m] = v(m, col);
    return a;
}

double JointState::norm_squared() const {
    double total = 0.0, comp = 0.0;
    for (const auto& sub : amplitudes) {
        for (const cplx& z : sub) {
            const double term = std::norm(z) - comp;
            const double next = total + term;
            comp = (next - total) - term;
            total = next;
        }
    }
    return total;
}

JointState assemble(const FieldWeights& field, const AtomicAmplitudes& atoms) {
    JointState s;
    s.atoms = atoms.atoms;
    s.field_nmax = field.n_max;
    const int n_top = field.n_max + atoms.atoms;
    s.amplitudes.resize(n_top + 1);
    for (int n = 0; n <= n_top; ++n) {
        const int d = std::min(n, atoms.atoms);
        auto& sub = s.amplitudes[n];
        sub.assign(d + 1, cplx(0.0));
        for (int m = 0; m <= d; ++m) {
            const int photons = n - m;
            if (photons <= field.n_max) {
                cplx qn = field.q[photons];
                if (field.phase != 0.0) qn *= std::polar(1.0, photons * field.phase);
                sub[m] = qn * atoms.amp[m];
            }
        }
    }
    s.norm_residual = 1.0 - s.norm_squared();
    return s;
}

JointState evolve(const JointState& state, double tau, const BlockCache& blocks) {
    JointState out = state;
    for (int n = 0; n <= state.top_excitation(); ++n) {
        const auto& sub = state.amplitudes[n];
        if (sub.size() <= 1) continue;  // 1x1 zero Hamiltonian: phase-free
        apply_evolution(blocks.block(n), tau, sub, out.amplitudes[n]);
    }
    return out;
}

JointState evolve_dispersive(const JointState& state, double t,
                             const DispersiveParams& params) {
    if (params.detuning == 0.0)
        throw InvalidParameter("evolve_dispersive: detuning must be nonzero");
    JointState out = state;
    for (int n = 0; n <= state.top_excitation(); ++n) {
        auto& sub = out.amplitudes[n];
        for (std::size_t m = 0; m < sub.size(); ++m) {
            const double ph = params.reduced_phases
                ? dispersive_reduced_phase(state.atoms, n, params.detuning,
                                           params.coupling, static_cast<int>(m))
                : dispersive_full_phase(state.atoms, n, params.detuning,
                                        params.coupling, static_cast<int>(m));
            sub[m] *= std::polar(1.0, -ph * t);
        }
    }
    return out;
}

void save_snapshot(const JointState& state, std::ostream& out) {
    char buf[160];
    out << "# dicke-state-snapshot v1\n";
    out << "# atoms=" << state.atoms << "\n";
    out << "# field_nmax=" << state.field_nmax << "\n";
    std::snprintf(buf, sizeof buf, "# norm_residual=%.17g\n", state.norm_residual);
    out << buf;
    for (int n = 0; n <= state.top_excitation(); ++n) {
        const auto& sub = state.amplitudes[n];
        for (std::size_t m = 0; m < sub.size(); ++m) {
            std::snprintf(buf, sizeof buf, "%d %zu %.17g %.17g\n", n, m,
                          sub[m].real(), sub[m].imag());
            out << buf;
        }
    }
}

void save_snapshot(const JointState& state, const std::string& path) {
    std::ofstream f(path);
    if (!f) throw InvalidParameter("cannot open snapshot file for writing: " + path);
    save_snapshot(state, f);
}

JointState load_snapshot(std::istream& in) {
    JointState s;
    int atoms = -1, nmax = -1;
    double residual = 0.0;
    std::string line;
    std::vector<std::tuple<int, int, double, double>> rows;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (line[0] == '#') {
            const auto eq = line.find('=');
            if (eq == std::string::npos) continue;
            const std::string key = line.substr(2, eq - 2);
            const std::string val = line.substr(eq + 1);
            if (key == "atoms") atoms = std::stoi(val);
            else if (key == "field_nmax") nmax = std::stoi(val);
            else if (key == "norm_residual") residual = std::stod(val);
            continue;
        }
        std::istringstream row(line);
        int n, m;
        double re, im;
        if (!(row >> n >> m >> re >> im))
            throw InvalidParameter("malformed snapshot row: " + line);
        rows.emplace_back(n, m, re, im);
    }
    if (atoms < 1 || nmax < 0)
        throw InvalidParameter("snapshot is missing atoms/field_nmax header");

    s.atoms = atoms;
    s.field_nmax = nmax;
    s.norm_residual = residual;
    const int n_top = nmax + atoms;
    s.amplitudes.resize(n_top + 1);
    for (int n = 0; n <= n_top; ++n)
        s.amplitudes[n].assign(std::min(n, atoms) + 1, cplx(0.0));
    for (const auto& [n, m, re, im] : rows) {
        if (n < 0 || n > n_top || m < 0 ||
            m >= static_cast<int>(s.amplitudes[n].size()))
            throw InvalidParameter("snapshot row outside the block structure");
        s.amplitudes[n][m] = cplx(re, im);
    }
    return s;
}

JointState load_snapshot(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw InvalidParameter("cannot open snapshot file: " + path);
    return load_snapshot(f);
}

}  // namespace dicke
