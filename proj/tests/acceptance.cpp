// Acceptance suite: one pass/fail line per criterion, nonzero exit if any
// criterion fails. Each check pins its tolerance in code.

#include <sys/wait.h>
#include <unistd.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "dicke/approx.hpp"
#include "dicke/blocks.hpp"
#include "dicke/kernels.hpp"
#include "dicke/phase.hpp"
#include "dicke/states.hpp"
#include "helpers.hpp"

using namespace dicke;

namespace {

constexpr double kTwoPi = 2.0 * M_PI;

struct Outcome {
    bool pass;
    std::string detail;
};

int failures = 0;

void report(int index, const std::string& name, const std::function<Outcome()>& fn,
            double runtime_bound_s = 0.0) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = fn();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (runtime_bound_s > 0.0 && secs > runtime_bound_s) {
        o.pass = false;
        o.detail += " [runtime " + std::to_string(secs) + "s exceeds " +
                    std::to_string(runtime_bound_s) + "s]";
    }
    std::printf("[%s] %2d. %s (%s; %.2fs)\n", o.pass ? "PASS" : "FAIL", index,
                name.c_str(), o.detail.c_str(), secs);
    std::fflush(stdout);
    if (!o.pass) ++failures;
}

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

// --- 1. flat initial distribution --------------------------------------

Outcome flat_initial() {
    const PhaseGrid grid{0.0, 720};
    double worst = 0.0;
    for (double nbar : {1.0, 5.0, 50.0}) {
        const JointState s = assemble(field_coherent(nbar), atomic_dicke(5, 0));
        const PhaseDistribution d = phase_distribution(s, grid);
        for (double v : d.p) worst = std::max(worst, std::fabs(v - 1.0 / kTwoPi));
    }
    return {worst <= 1e-10, "max |P - 1/2pi| = " + num(worst)};
}

// --- 2. spectral symmetry ----------------------------------------------

Outcome spectral_symmetry() {
    double worst = 0.0;
    for (int a = 1; a <= 8; ++a) {
        for (int n = 0; n <= 120; ++n) {
            SubspaceBlock b = build_block(a, n, 1.0);
            eigendecompose(b);
            const int d = b.dim - 1;
            const double tol = 1e-9 * std::max(1.0, std::fabs(b.eigenvalues[d]));
            for (int j = 0; j <= d; ++j) {
                const double res = std::fabs(b.eigenvalues[j] + b.eigenvalues[d - j]);
                worst = std::max(worst, res / std::max(1.0, std::fabs(b.eigenvalues[d])));
                if (res > tol) return {false, "symmetry residual at A=" + std::to_string(a) +
                                                  " N=" + std::to_string(n)};
            }
            const bool has_zero = std::fabs(b.eigenvalues[d / 2]) <= tol ||
                                  std::fabs(b.eigenvalues[(d + 1) / 2]) <= tol;
            if (has_zero != (b.dim % 2 == 1))
                return {false, "zero-eigenvalue parity at A=" + std::to_string(a) +
                                   " N=" + std::to_string(n)};
        }
    }
    return {true, "max scaled residual " + num(worst)};
}

// --- 3. evolution-operator oracle ---------------------------------------

Outcome evolution_oracle() {
    std::mt19937_64 rng(12345);
    std::uniform_int_distribution<int> atoms(1, 6), excitation(0, 12);
    std::uniform_real_distribution<double> time(0.0, 5.0);
    double worst = 0.0;
    for (int rep = 0; rep < 50; ++rep) {
        const int a = atoms(rng), n = excitation(rng);
        const double t = time(rng);
        SubspaceBlock b = build_block(a, n, 1.0);
        eigendecompose(b);
        std::vector<double> scaled(b.offdiag);
        for (double& h : scaled) h *= b.coupling;
        const double err =
            testutil::max_abs_diff(evolution_coeffs(b, t), testutil::expm_tridiag(scaled, t));
        worst = std::max(worst, err);
    }
    return {worst <= 1e-8, "max elementwise gap " + num(worst)};
}

// --- 4. unitarity and conservation ---------------------------------------

Outcome unitarity_conservation() {
    const BlockCache cache(5);
    const JointState s = assemble(field_coherent(50.0), atomic_dicke(5, 0));
    const auto pn0 = excitation_distribution(s);
    double drift = 0.0, pdrift = 0.0;
    for (double tau : {1.0, 10.0, 100.0, 1000.0}) {
        const JointState e = evolve(s, tau, cache);
        drift = std::max(drift, std::fabs(e.norm_squared() - s.norm_squared()));
        const auto pn = excitation_distribution(e);
        for (std::size_t n = 0; n < pn.size(); ++n)
            pdrift = std::max(pdrift, std::fabs(pn[n] - pn0[n]));
    }
    const bool ok = drift <= 1e-9 && pdrift <= 1e-10;
    return {ok, "norm drift " + num(drift) + ", P(N) drift " + num(pdrift)};
}

// --- 5. POVM equivalence --------------------------------------------------

Outcome povm_equivalence() {
    std::mt19937_64 rng(777);
    std::uniform_int_distribution<int> atoms(1, 4), nmax(5, 40);
    const PhaseGrid grid{0.0, 360};
    double worst = 0.0;
    for (int rep = 0; rep < 20; ++rep) {
        const JointState s = testutil::random_state(atoms(rng), nmax(rng), rng);
        const PhaseDistribution direct = phase_distribution(s, grid);
        const PhaseDistribution povm = povm_crosscheck(s, grid);
        for (int k = 0; k < grid.size; ++k)
            worst = std::max(worst, std::fabs(direct.p[k] - povm.p[k]));
    }
    return {worst <= 1e-6, "max pointwise gap " + num(worst)};
}

// --- 6. JCM closed form ----------------------------------------------------

Outcome jcm_closed_form() {
    double worst_eig = 0.0, worst_c = 0.0;
    for (double g : {1.0, 2.3}) {
        for (int n = 0; n <= 200; ++n) {
            SubspaceBlock b = build_block(1, n, g);
            eigendecompose(b);
            if (n == 0) continue;
            const double ref = g * std::sqrt(static_cast<double>(n));
            worst_eig = std::max(worst_eig, std::fabs(b.eigenvalues[0] + ref));
            worst_eig = std::max(worst_eig, std::fabs(b.eigenvalues[1] - ref));
            if (n % 40 == 1) {
                for (double t : {0.37, 4.2}) {
                    const CMat c = evolution_coeffs(b, t);
                    const double w = ref * t;
                    worst_c = std::max({worst_c, std::abs(c(0, 0) - std::cos(w)),
                                        std::abs(c(0, 1) - cplx(0.0, -std::sin(w))),
                                        std::abs(c(1, 1) - std::cos(w))});
                }
            }
        }
    }
    const bool ok = worst_eig <= 1e-12 * 2.3 * std::sqrt(200.0) && worst_c <= 1e-10;
    return {ok, "eigenvalue gap " + num(worst_eig) + ", C gap " + num(worst_c)};
}

// --- 7. strong-field approximation scaling --------------------------------

Outcome strong_field_scaling() {
    const int a = 5;
    const PhaseGrid grid{0.0, 720};
    std::vector<double> errs;
    for (double nbar : {25.0, 100.0, 400.0}) {
        const FieldWeights field = field_coherent(nbar);
        const BlockCache cache(a);
        const JointState initial = assemble(field, atomic_dicke(a, 0));
        const double omega = approx::rabi_frequency(static_cast<int>(nbar), a, 1.0);
        const double tmax = 10.0 * kTwoPi / omega;
        double linf = 0.0;
        for (int step = 0; step <= 40; ++step) {
            const double tau = tmax * step / 40.0;
            const PhaseDistribution exact =
                phase_distribution(evolve(initial, tau, cache), grid, tau);
            const auto approx_p = approx::strong_field_profile(a, field, 1.0, tau, grid);
            for (int k = 0; k < grid.size; ++k)
                linf = std::max(linf, std::fabs(exact.p[k] - approx_p[k]));
        }
        errs.push_back(linf);
    }
    const bool ok = errs[0] > errs[1] && errs[1] > errs[2];
    return {ok, "L_inf " + num(errs[0]) + " -> " + num(errs[1]) + " -> " + num(errs[2])};
}

// --- 8. strong-field peaks --------------------------------------------------

Outcome strong_field_peaks() {
    const int a = 5;
    const PhaseGrid grid{0.0, 720};
    const BlockCache cache(a);
    const JointState initial = assemble(field_coherent(50.0), atomic_dicke(a, 0));
    for (double tau : {8.0, 10.0, 12.0}) {
        const PhaseDistribution d = phase_distribution(evolve(initial, tau, cache), grid, tau);
        // two largest local maxima
        int best = -1, second = -1;
        for (int k = 0; k < grid.size; ++k) {
            const double prev = d.p[(k + grid.size - 1) % grid.size];
            const double next = d.p[(k + 1) % grid.size];
            if (d.p[k] > prev && d.p[k] > next) {
                if (best < 0 || d.p[k] > d.p[best]) {
                    second = best;
                    best = k;
                } else if (second < 0 || d.p[k] > d.p[second]) {
                    second = k;
                }
            }
        }
        if (best < 0 || second < 0) return {false, "fewer than two maxima at gt=" + num(tau)};
        for (int k : {best, second}) {
            const double phi = grid.at(k);
            const double gap = std::min(std::fabs(phi - M_PI / 2.0), std::fabs(phi + M_PI / 2.0));
            if (gap > 3.0 * grid.step())
                return {false, "maximum at phi=" + num(phi) + " off +-pi/2 at gt=" + num(tau)};
        }
    }
    return {true, "both peaks within 3 cells of +-pi/2 at gt in {8,10,12}"};
}

// --- 9. factorized-state stationarity ---------------------------------------

Outcome factorized_stationarity() {
    const int a = 3;
    const double nbar = 20.0;
    const BlockCache cache(a);
    const JointState initial =
        assemble(field_coherent(nbar), atomic_coherent(a, M_PI / 2.0, 0.0));
    const PhaseGrid grid{0.0, 720};
    const PhaseDistribution d0 = phase_distribution(initial, grid);
    double peak = 0.0;
    for (double v : d0.p) peak = std::max(peak, v);
    double worst = 0.0;
    const double tmax = std::sqrt(nbar);
    for (int step = 0; step <= 80; ++step) {
        const double tau = tmax * step / 80.0;
        const PhaseDistribution d = phase_distribution(evolve(initial, tau, cache), grid, tau);
        for (int k = 0; k < grid.size; ++k)
            worst = std::max(worst, std::fabs(d.p[k] - d0.p[k]));
    }
    return {worst <= 0.05 * peak,
            "max L_inf deviation " + num(worst) + " vs threshold " + num(0.05 * peak)};
}

// --- 10. dispersive flatness -------------------------------------------------

Outcome dispersive_flatness() {
    const double delta = 77.0;
    double worst = 0.0;
    const PhaseGrid grid{0.0, 360};
    for (int a : {2, 5}) {
        for (int k : {0, a / 2, a}) {
            for (bool number_field : {false, true}) {
                const FieldWeights field =
                    number_field ? field_number(12) : field_coherent(7.0);
                const JointState s = assemble(field, atomic_dicke(a, k));
                for (int i = 1; i <= 20; ++i) {
                    const JointState e =
                        evolve_dispersive(s, 0.9 * i, DispersiveParams{delta, 1.0});
                    const PhaseDistribution d = phase_distribution(e, grid);
                    for (double v : d.p)
                        worst = std::max(worst, std::fabs(v - 1.0 / kTwoPi));
                }
            }
        }
    }
    return {worst <= 1e-10, "max |P - 1/2pi| = " + num(worst)};
}

// --- 11. cat-state formation -------------------------------------------------

Outcome cat_formation() {
    const int a = 5;
    const double nbar = 10.0, lambda = 0.01, delta = 100.0;
    const PhaseGrid grid{0.0, 720};
    const JointState initial =
        assemble(field_coherent(nbar), atomic_coherent(a, M_PI / 2.0, 0.0));
    const double t = (M_PI / 6.0) / lambda;
    const JointState e = evolve_dispersive(initial, t, DispersiveParams{delta, 1.0});
    const PhaseDistribution d = phase_distribution(e, grid, M_PI / 6.0);

    double global_max = 0.0;
    for (double v : d.p) global_max = std::max(global_max, v);
    std::vector<int> humps;
    for (int k = 0; k < grid.size; ++k) {
        const double prev = d.p[(k + grid.size - 1) % grid.size];
        const double next = d.p[(k + 1) % grid.size];
        if (d.p[k] > prev && d.p[k] > next && d.p[k] > 0.5 * global_max)
            humps.push_back(k);
    }
    if (humps.size() != 2)
        return {false, std::to_string(humps.size()) + " maxima above half max (P_max " +
                           num(global_max) + ", flat = " + num(1.0 / kTwoPi) + ")"};
    const int sep = std::abs(humps[0] - humps[1]);
    const int half = grid.size / 2;
    if (std::abs(sep - half) > 2 && std::abs((grid.size - sep) - half) > 2)
        return {false, "hump separation " + std::to_string(sep) + " cells, want " +
                           std::to_string(half) + " +- 2"};
    const auto centers = approx::cat_centers(a, nbar, lambda);
    for (int k : humps) {
        const double phi = grid.at(k);
        double best = 1e9;
        for (double c : {centers.first, centers.second}) {
            double gap = std::fabs(phi - c);
            gap = std::min(gap, kTwoPi - gap);
            best = std::min(best, gap);
        }
        if (best > 2.0 * grid.step())
            return {false, "hump at " + num(phi) + " misses the prediction by " + num(best)};
    }
    return {true, "two humps matching the prediction"};
}

// --- 12. moment consistency ---------------------------------------------------

Outcome moment_consistency() {
    const int a = 5;
    const PhaseGrid grid{0.0, 720};
    double worst = 0.0, at_zero = 0.0;
    for (double nbar : {1.0, 5.0, 50.0}) {
        const BlockCache cache(a);
        const JointState initial = assemble(field_coherent(nbar), atomic_dicke(a, 0));
        at_zero = std::max(at_zero, std::fabs(sin_moment(initial)));
        for (double tau : {0.0, 1.3, 7.9, 20.0}) {
            const JointState s = evolve(initial, tau, cache);
            const double direct = sin_moment(s);
            const double quad = sin_moment_quadrature(phase_distribution(s, grid, tau));
            worst = std::max(worst, std::fabs(direct - quad));
        }
    }
    const bool ok = worst <= 1e-8 && at_zero <= 1e-12;
    return {ok, "shift-overlap vs quadrature gap " + num(worst) + ", t=0 moment " + num(at_zero)};
}

// --- 13. determinism ------------------------------------------------------------

Outcome determinism() {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() /
                         ("dicke_acceptance_" + std::to_string(::getpid()));
    fs::create_directories(dir);
    const std::string out1 = (dir / "r1.csv").string();
    const std::string out2 = (dir / "r2.csv").string();
    const std::string flags =
        " fig1 --nbar 5 --steps 4 --grid 120 --tmax 3 --out ";
    const std::string base = "SOURCE_DATE_EPOCH=1700000000 " DICKE_CLI_PATH;
    auto runit = [&](const std::string& out) {
        const std::string cmd = base + flags + out + " >/dev/null 2>&1";
        const int rc = std::system(cmd.c_str());
        return WIFEXITED(rc) && WEXITSTATUS(rc) == 0;
    };
    auto slurp = [](const std::string& p) {
        std::ifstream f(p, std::ios::binary);
        std::stringstream ss;
        ss << f.rdbuf();
        return ss.str();
    };
    if (!runit(out1) || !runit(out2)) return {false, "CLI run failed"};
    const std::string a = slurp(out1), b = slurp(out2);
    const std::string ma = slurp(out1 + ".manifest.json"), mb = slurp(out2 + ".manifest.json");
    std::error_code ec;
    fs::remove_all(dir, ec);
    if (a.empty() || a != b) return {false, "data files differ"};
    if (ma != mb) return {false, "manifests differ"};
    return {true, "byte-identical rerun (" + std::to_string(a.size()) + " bytes)"};
}

}  // namespace

int main() {
    std::printf("acceptance suite (kernel: %s)\n",
                std::string(dicke::kernels::active_name()).c_str());
    report(1, "flat initial distribution", flat_initial, 1.0);
    report(2, "spectral symmetry", spectral_symmetry, 5.0);
    report(3, "evolution-operator oracle", evolution_oracle, 10.0);
    report(4, "unitarity and conservation", unitarity_conservation);
    report(5, "POVM equivalence", povm_equivalence, 60.0);
    report(6, "JCM closed form", jcm_closed_form);
    report(7, "strong-field approximation scaling", strong_field_scaling, 120.0);
    report(8, "strong-field peaks", strong_field_peaks);
    report(9, "factorized-state stationarity", factorized_stationarity);
    report(10, "dispersive flatness", dispersive_flatness);
    report(11, "cat-state formation", cat_formation);
    report(12, "moment consistency", moment_consistency);
    report(13, "determinism", determinism);
    if (failures) std::printf("%d of 13 criteria failed\n", failures);
    else std::printf("all 13 criteria passed\n");
    return failures == 0 ? 0 : 1;
}
