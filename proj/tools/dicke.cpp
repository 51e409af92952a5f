// Command-line driver: reproduces the paper-style scans as data files and
// exposes spectra, comparisons against the analytic limits, and state
// snapshots for checkpointing.

#include <cmath>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "dicke/approx.hpp"
#include "dicke/blocks.hpp"
#include "dicke/errors.hpp"
#include "dicke/kernels.hpp"
#include "dicke/phase.hpp"
#include "dicke/states.hpp"
#include "dicke/version.hpp"

using json = nlohmann::ordered_json;
using namespace dicke;

namespace {

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

// SOURCE_DATE_EPOCH (reproducible-builds convention) pins the manifest
// timestamp; otherwise the current UTC time is used.
std::string timestamp() {
    std::time_t t;
    if (const char* env = std::getenv("SOURCE_DATE_EPOCH"))
        t = static_cast<std::time_t>(std::strtoll(env, nullptr, 10));
    else
        t = std::time(nullptr);
    char buf[32];
    std::tm tm{};
    gmtime_r(&t, &tm);
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
    std::vector<std::pair<std::string, double>> summary;
};

void write_output(const std::string& path, const std::string& format,
                  const json& manifest, const Table& table) {
    if (format == "json") {
        json doc;
        doc["manifest"] = manifest;
        doc["columns"] = table.columns;
        json rows = json::array();
        for (const auto& r : table.rows) rows.push_back(r);
        doc["rows"] = std::move(rows);
        if (!table.summary.empty()) {
            json s;
            for (const auto& [k, v] : table.summary) s[k] = v;
            doc["summary"] = std::move(s);
        }
        std::ofstream f(path);
        if (!f) throw InvalidParameter("cannot open output file: " + path);
        f << doc.dump(2) << "\n";
        return;
    }
    std::ofstream f(path);
    if (!f) throw InvalidParameter("cannot open output file: " + path);
    for (std::size_t c = 0; c < table.columns.size(); ++c)
        f << (c ? "," : "") << table.columns[c];
    f << "\n";
    for (const auto& r : table.rows) {
        for (std::size_t c = 0; c < r.size(); ++c)
            f << (c ? "," : "") << fmt17(r[c]);
        f << "\n";
    }
    for (const auto& [k, v] : table.summary)
        f << "# " << k << "=" << fmt17(v) << "\n";
    const std::string mpath = path + ".manifest.json";
    std::ofstream mf(mpath);
    if (!mf) throw InvalidParameter("cannot open manifest file: " + mpath);
    mf << manifest.dump(2) << "\n";
}

// Options shared by every command.
struct Common {
    int atoms = 5;
    double coupling = 1.0;
    int grid = 720;
    double phi0 = 0.0;
    double tmax = 50.0;
    int steps = 250;
    std::string out;
    std::string format = "csv";
};

void add_common(CLI::App* cmd, Common& c, const std::string& default_out) {
    c.out = default_out;
    cmd->add_option("--atoms", c.atoms, "number of atoms A")->check(CLI::PositiveNumber);
    cmd->add_option("--coupling", c.coupling, "coupling constant g")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--grid", c.grid, "phi grid size")->check(CLI::PositiveNumber);
    cmd->add_option("--phi0", c.phi0, "fiducial phase (grid window center)");
    cmd->add_option("--tmax", c.tmax, "time grid end (in gt)");
    cmd->add_option("--steps", c.steps, "number of time intervals")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--out", c.out, "output path");
    cmd->add_option("--format", c.format, "output format")
        ->check(CLI::IsMember({"csv", "json"}));
}

json base_manifest(const std::string& command, const Common& c) {
    json m;
    m["command"] = command;
    m["version"] = kVersion;
    m["kernel"] = std::string(kernels::active_name());
    m["timestamp"] = timestamp();
    m["parameters"]["atoms"] = c.atoms;
    m["parameters"]["coupling"] = c.coupling;
    m["numeric"]["grid"] = c.grid;
    m["numeric"]["phi0"] = c.phi0;
    return m;
}

std::string suffixed(const std::string& path, const std::string& suffix) {
    const auto dot = path.rfind('.');
    if (dot == std::string::npos || path.find('/', dot) != std::string::npos)
        return path + suffix;
    return path.substr(0, dot) + suffix + path.substr(dot);
}

// ---------------------------------------------------------------------------

int cmd_fig1(const Common& c, const std::vector<double>& nbars) {
    const BlockCache cache(c.atoms);
    const PhaseGrid grid{c.phi0, c.grid};
    for (double nbar : nbars) {
        const FieldWeights field = field_coherent(nbar);
        const JointState initial = assemble(field, atomic_dicke(c.atoms, 0));
        Table t;
        t.columns = {"gt", "phi", "P"};
        t.rows.reserve(static_cast<std::size_t>(c.steps + 1) * c.grid);
        for (int s = 0; s <= c.steps; ++s) {
            const double tau = c.tmax * s / c.steps;
            const JointState st = evolve(initial, tau, cache);
            const PhaseDistribution d = phase_distribution(st, grid, tau);
            for (int k = 0; k < c.grid; ++k)
                t.rows.push_back({tau, grid.at(k), d.p[k]});
        }
        json m = base_manifest("fig1", c);
        m["parameters"]["field"] = {{"kind", "coherent"}, {"nbar", nbar}};
        m["parameters"]["atomic"] = {{"kind", "dicke"}, {"index", 0}};
        m["numeric"]["tmax"] = c.tmax;
        m["numeric"]["steps"] = c.steps;
        m["numeric"]["fock_nmax"] = field.n_max;
        m["numeric"]["truncation_residual"] = field.tail_residual;
        const std::string path = nbars.size() == 1
            ? c.out : suffixed(c.out, "_nbar" + fmt17(nbar));
        write_output(path, c.format, m, t);
        std::cout << "fig1: wrote " << path << " (nbar=" << nbar << ")\n";
    }
    return 0;
}

int cmd_fig2(const Common& c, double nbar, double theta, double phi_az,
             std::optional<int> p_index, double tmax_opt) {
    const BlockCache cache(c.atoms);
    const PhaseGrid grid{c.phi0, c.grid};
    const FieldWeights field = field_coherent(nbar);
    const AtomicAmplitudes amp = p_index
        ? semiclassical_state(c.atoms, *p_index)
        : atomic_coherent(c.atoms, theta, phi_az);
    const JointState initial = assemble(field, amp);
    const double tmax = tmax_opt > 0.0 ? tmax_opt : std::sqrt(nbar);

    Table t;
    t.columns = {"gt", "phi", "P"};
    std::vector<double> p0;
    double max_dev = 0.0;
    for (int s = 0; s <= c.steps; ++s) {
        const double tau = tmax * s / c.steps;
        const JointState st = evolve(initial, tau, cache);
        const PhaseDistribution d = phase_distribution(st, grid, tau);
        if (s == 0) p0 = d.p;
        for (int k = 0; k < c.grid; ++k) {
            t.rows.push_back({tau, grid.at(k), d.p[k]});
            max_dev = std::max(max_dev, std::fabs(d.p[k] - p0[k]));
        }
    }
    double peak = 0.0;
    for (double v : p0) peak = std::max(peak, v);
    t.summary = {{"max_deviation_from_t0", max_dev},
                 {"peak_t0", peak},
                 {"relative_deviation", max_dev / peak}};

    json m = base_manifest("fig2", c);
    m["parameters"]["field"] = {{"kind", "coherent"}, {"nbar", nbar}};
    if (p_index)
        m["parameters"]["atomic"] = {{"kind", "semiclassical"}, {"index", *p_index}};
    else
        m["parameters"]["atomic"] = {{"kind", "coherent"}, {"theta", theta}, {"phi", phi_az}};
    m["numeric"]["tmax"] = tmax;
    m["numeric"]["steps"] = c.steps;
    m["numeric"]["fock_nmax"] = field.n_max;
    m["numeric"]["truncation_residual"] = field.tail_residual;
    m["summary"]["max_deviation_from_t0"] = max_dev;
    m["summary"]["relative_deviation"] = max_dev / peak;
    write_output(c.out, c.format, m, t);
    std::cout << "fig2: wrote " << c.out << "; max deviation from t=0 profile = "
              << fmt17(max_dev) << " (" << fmt17(100.0 * max_dev / peak)
              << "% of peak)\n";
    return 0;
}

int cmd_fig3(const Common& c, const std::vector<double>& nbars) {
    const BlockCache cache(c.atoms);
    const PhaseGrid grid{c.phi0, c.grid};
    for (double nbar : nbars) {
        const FieldWeights field = field_coherent(nbar);
        const JointState initial = assemble(field, atomic_dicke(c.atoms, 0));
        Table t;
        t.columns = {"gt", "sin_phi"};
        double max_gap = 0.0;
        for (int s = 0; s <= c.steps; ++s) {
            const double tau = c.tmax * s / c.steps;
            const JointState st = evolve(initial, tau, cache);
            const double m = sin_moment(st);
            t.rows.push_back({tau, m});
            if (s % 25 == 0) {
                const double q = sin_moment_quadrature(phase_distribution(st, grid, tau));
                max_gap = std::max(max_gap, std::fabs(m - q));
            }
        }
        json m = base_manifest("fig3", c);
        m["parameters"]["field"] = {{"kind", "coherent"}, {"nbar", nbar}};
        m["parameters"]["atomic"] = {{"kind", "dicke"}, {"index", 0}};
        m["numeric"]["tmax"] = c.tmax;
        m["numeric"]["steps"] = c.steps;
        m["numeric"]["fock_nmax"] = field.n_max;
        m["numeric"]["quadrature_crosscheck_max_diff"] = max_gap;
        const std::string path = nbars.size() == 1
            ? c.out : suffixed(c.out, "_nbar" + fmt17(nbar));
        write_output(path, c.format, m, t);
        std::cout << "fig3: wrote " << path << " (nbar=" << nbar
                  << ", moment-vs-quadrature max diff " << fmt17(max_gap) << ")\n";
    }
    return 0;
}

int cmd_fig4(const Common& c, double nbar, double theta, double phi_az,
             std::optional<int> dicke_index, double detuning,
             std::optional<double> lambda_opt, double tau) {
    double lambda = lambda_opt ? *lambda_opt : c.coupling * c.coupling / detuning;
    if (lambda_opt) detuning = c.coupling * c.coupling / *lambda_opt;
    const PhaseGrid grid{c.phi0, c.grid};
    const FieldWeights field = field_coherent(nbar);
    const AtomicAmplitudes amp = dicke_index
        ? atomic_dicke(c.atoms, *dicke_index)
        : atomic_coherent(c.atoms, theta, phi_az);
    const JointState initial = assemble(field, amp);
    const double t = tau / lambda;
    const JointState st =
        evolve_dispersive(initial, t, DispersiveParams{detuning, c.coupling});
    const PhaseDistribution d = phase_distribution(st, grid, tau);

    Table tab;
    tab.columns = {"phi", "P", "P_cat"};
    for (int k = 0; k < c.grid; ++k)
        tab.rows.push_back({grid.at(k), d.p[k],
                            approx::cat_prediction(c.atoms, nbar, lambda, grid.at(k))});

    json m = base_manifest("fig4", c);
    m["parameters"]["field"] = {{"kind", "coherent"}, {"nbar", nbar}};
    if (dicke_index)
        m["parameters"]["atomic"] = {{"kind", "dicke"}, {"index", *dicke_index}};
    else
        m["parameters"]["atomic"] = {{"kind", "coherent"}, {"theta", theta}, {"phi", phi_az}};
    m["parameters"]["detuning"] = detuning;
    m["parameters"]["lambda"] = lambda;
    m["parameters"]["tau"] = tau;
    m["numeric"]["fock_nmax"] = field.n_max;
    m["numeric"]["truncation_residual"] = field.tail_residual;
    const auto centers = approx::cat_centers(c.atoms, nbar, lambda);
    m["numeric"]["cat_centers"] = {centers.first, centers.second};
    write_output(c.out, c.format, m, tab);
    std::cout << "fig4: wrote " << c.out << " (lambda*t=" << fmt17(tau) << ")\n";
    return 0;
}

int cmd_spectrum(const Common& c, int n_min, int n_max) {
    if (n_min < 0 || n_max < n_min)
        throw InvalidParameter("spectrum: need 0 <= n-min <= n-max");
    const BlockCache cache(c.atoms, c.coupling);
    Table t;
    t.columns = {"N", "J", "epsilon", "symmetry_residual"};
    for (int n = n_min; n <= n_max; ++n) {
        const SubspaceBlock& b = cache.block(n);
        const int d = b.dim - 1;
        for (int j = 0; j < b.dim; ++j)
            t.rows.push_back({static_cast<double>(n), static_cast<double>(j),
                              b.eigenvalues[j],
                              std::fabs(b.eigenvalues[j] + b.eigenvalues[d - j])});
    }
    json m = base_manifest("spectrum", c);
    m["parameters"]["n_min"] = n_min;
    m["parameters"]["n_max"] = n_max;
    write_output(c.out, c.format, m, t);
    std::cout << "spectrum: wrote " << c.out << "\n";
    return 0;
}

int cmd_compare(const Common& c, const std::string& regime, double nbar,
                double time, double tau, double theta, double phi_az, int p_index,
                double detuning, std::optional<double> lambda_opt) {
    double lambda = lambda_opt ? *lambda_opt : c.coupling * c.coupling / detuning;
    if (lambda_opt) detuning = c.coupling * c.coupling / *lambda_opt;
    const PhaseGrid grid{c.phi0, c.grid};
    const FieldWeights field = field_coherent(nbar);

    std::vector<double> exact(c.grid), approxv(c.grid);
    std::string warning;

    if (regime == "weak") {
        if (nbar > 1.0)
            warning = "weak-field regime intends nbar <~ 1";
        const BlockCache cache(c.atoms);
        const JointState st =
            evolve(assemble(field, atomic_dicke(c.atoms, 0)), time, cache);
        const PhaseDistribution d = phase_distribution(st, grid, time);
        exact = d.p;
        const CMat& c1 = cache.coeffs(1, time);
        for (int k = 0; k < c.grid; ++k)
            approxv[k] = approx::weak_field(nbar, grid.at(k), c1);
    } else if (regime == "strong") {
        if (nbar < 2.0 * c.atoms)
            warning = "strong-field regime intends nbar >> A";
        const BlockCache cache(c.atoms);
        const JointState st =
            evolve(assemble(field, atomic_dicke(c.atoms, 0)), time, cache);
        exact = phase_distribution(st, grid, time).p;
        approxv = approx::strong_field_profile(c.atoms, field, 1.0, time, grid);
    } else if (regime == "factorized") {
        if (time > std::sqrt(nbar))
            warning = "factorized-state regime holds up to gt ~ sqrt(nbar)";
        const BlockCache cache(c.atoms);
        const JointState st =
            evolve(assemble(field, semiclassical_state(c.atoms, p_index)), time, cache);
        exact = phase_distribution(st, grid, time).p;
        approxv = approx::factorized_profile(c.atoms, p_index, grid);
    } else if (regime == "dispersive" || regime == "cat") {
        if (std::fabs(detuning) < c.coupling * std::sqrt(nbar + 1.0) * c.atoms)
            warning = "dispersive regime intends Delta >> g sqrt(nbar+1) A";
        const AtomicAmplitudes amp = atomic_coherent(c.atoms, theta, phi_az);
        const JointState st = evolve_dispersive(
            assemble(field, amp), tau / lambda, DispersiveParams{detuning, c.coupling});
        exact = phase_distribution(st, grid, tau).p;
        if (regime == "dispersive") {
            approxv = approx::dispersive_distribution(field, amp, c.atoms, detuning,
                                                      c.coupling, tau / lambda, grid).p;
        } else {
            for (int k = 0; k < c.grid; ++k)
                approxv[k] = approx::cat_prediction(c.atoms, nbar, lambda, grid.at(k));
        }
    } else {
        throw InvalidParameter("compare: unknown regime " + regime);
    }

    if (!warning.empty()) std::cerr << "warning: " << warning << "\n";

    Table t;
    t.columns = {"phi", "P_exact", "P_approx", "abs_err"};
    double max_err = 0.0, sum_err = 0.0;
    for (int k = 0; k < c.grid; ++k) {
        const double err = std::fabs(exact[k] - approxv[k]);
        max_err = std::max(max_err, err);
        sum_err += err;
        t.rows.push_back({grid.at(k), exact[k], approxv[k], err});
    }
    t.summary = {{"max_abs_err", max_err}, {"mean_abs_err", sum_err / c.grid}};

    json m = base_manifest("compare", c);
    m["parameters"]["regime"] = regime;
    m["parameters"]["field"] = {{"kind", "coherent"}, {"nbar", nbar}};
    m["parameters"]["time"] = time;
    if (regime == "dispersive" || regime == "cat") {
        m["parameters"]["tau"] = tau;
        m["parameters"]["detuning"] = detuning;
        m["parameters"]["lambda"] = lambda;
    }
    if (regime == "factorized") m["parameters"]["p_index"] = p_index;
    if (!warning.empty()) m["parameters"]["regime_warning"] = warning;
    m["summary"]["max_abs_err"] = max_err;
    m["summary"]["mean_abs_err"] = sum_err / c.grid;
    write_output(c.out, c.format, m, t);
    std::cout << "compare(" << regime << "): max_abs_err=" << fmt17(max_err)
              << " mean_abs_err=" << fmt17(sum_err / c.grid) << " -> " << c.out << "\n";
    return 0;
}

int cmd_snapshot(const Common& c, const std::string& load, double nbar,
                 std::optional<int> fock, double theta, double phi_az,
                 std::optional<int> p_index, std::optional<int> dicke_index,
                 double time, const std::string& mode, double detuning) {
    JointState st;
    if (!load.empty()) {
        st = load_snapshot(load);
    } else {
        const FieldWeights field = fock ? field_number(*fock) : field_coherent(nbar);
        AtomicAmplitudes amp = p_index ? semiclassical_state(c.atoms, *p_index)
                               : dicke_index ? atomic_dicke(c.atoms, *dicke_index)
                                             : atomic_coherent(c.atoms, theta, phi_az);
        st = assemble(field, amp);
    }
    if (time != 0.0) {
        if (mode == "dispersive")
            st = evolve_dispersive(st, time, DispersiveParams{detuning, c.coupling});
        else
            st = evolve(st, time, BlockCache(st.atoms));
    }
    save_snapshot(st, c.out);
    std::cout << "snapshot: wrote " << c.out << " (norm " << fmt17(st.norm_squared())
              << ")\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Dicke-model relative-phase simulator"};
    app.require_subcommand(1);

    Common c_fig1, c_fig2, c_fig3, c_fig4, c_spec, c_cmp, c_snap;

    // fig1: P(phi, gt) contour data, atoms unexcited, coherent field.
    auto* fig1 = app.add_subcommand("fig1", "relative-phase distribution over time");
    std::vector<double> fig1_nbars{1.0, 50.0, 5.0};
    add_common(fig1, c_fig1, "fig1.csv");
    fig1->add_option("--nbar", fig1_nbars, "coherent field mean photon number(s)");

    // fig2: factorized state, nearly time-independent distribution.
    auto* fig2 = app.add_subcommand("fig2", "factorized-state distribution over time");
    c_fig2.atoms = 3;
    c_fig2.steps = 100;
    add_common(fig2, c_fig2, "fig2.csv");
    double fig2_nbar = 20.0, fig2_theta = M_PI / 2.0, fig2_phi = 0.0, fig2_tmax = -1.0;
    std::optional<int> fig2_p;
    fig2->add_option("--nbar", fig2_nbar, "coherent field mean photon number");
    fig2->add_option("--theta", fig2_theta, "atomic coherent polar angle");
    fig2->add_option("--phi-azimuth", fig2_phi, "atomic coherent azimuth");
    fig2->add_option("--p-index", fig2_p, "use semiclassical state |P> instead");
    fig2->add_option("--tmax-override", fig2_tmax,
                     "time grid end (defaults to sqrt(nbar))");

    // fig3: <sin Phi> traces.
    auto* fig3 = app.add_subcommand("fig3", "<sin Phi> versus gt");
    std::vector<double> fig3_nbars{1.0, 50.0, 5.0};
    c_fig3.steps = 1000;
    add_common(fig3, c_fig3, "fig3.csv");
    fig3->add_option("--nbar", fig3_nbars, "coherent field mean photon number(s)");

    // fig4: dispersive catlike profile with the two-Gaussian overlay.
    auto* fig4 = app.add_subcommand("fig4", "dispersive-limit profile at lambda*t");
    add_common(fig4, c_fig4, "fig4.csv");
    double fig4_nbar = 10.0, fig4_theta = M_PI / 2.0, fig4_phi = 0.0;
    double fig4_delta = 100.0, fig4_tau = M_PI / 6.0;
    std::optional<double> fig4_lambda;
    std::optional<int> fig4_dicke;
    fig4->add_option("--nbar", fig4_nbar, "coherent field mean photon number");
    fig4->add_option("--theta", fig4_theta, "atomic coherent polar angle");
    fig4->add_option("--phi-azimuth", fig4_phi, "atomic coherent azimuth");
    fig4->add_option("--dicke", fig4_dicke, "use Dicke state |K> instead");
    fig4->add_option("--detuning", fig4_delta, "detuning Delta");
    fig4->add_option("--lambda", fig4_lambda, "g^2/Delta (overrides --detuning)");
    fig4->add_option("--tau", fig4_tau, "evaluation time lambda*t");

    // spectrum: eigenvalue table.
    auto* spec = app.add_subcommand("spectrum", "subspace eigenvalue table");
    add_common(spec, c_spec, "spectrum.csv");
    int spec_nmin = 0, spec_nmax = 40;
    spec->add_option("--n-min", spec_nmin, "first excitation number");
    spec->add_option("--n-max", spec_nmax, "last excitation number");

    // compare: exact engine vs analytic limit.
    auto* cmp = app.add_subcommand("compare", "exact engine vs analytic limit");
    add_common(cmp, c_cmp, "compare.csv");
    std::string cmp_regime = "weak";
    double cmp_nbar = 1.0, cmp_time = 1.0, cmp_tau = M_PI / 6.0;
    double cmp_theta = M_PI / 2.0, cmp_phi = 0.0, cmp_delta = 100.0;
    int cmp_p = 0;
    std::optional<double> cmp_lambda;
    cmp->add_option("--regime", cmp_regime, "one of weak|strong|factorized|dispersive|cat")
        ->required()
        ->check(CLI::IsMember({"weak", "strong", "factorized", "dispersive", "cat"}));
    cmp->add_option("--nbar", cmp_nbar, "coherent field mean photon number");
    cmp->add_option("--time", cmp_time, "comparison time gt");
    cmp->add_option("--tau", cmp_tau, "comparison time lambda*t (dispersive/cat)");
    cmp->add_option("--theta", cmp_theta, "atomic coherent polar angle");
    cmp->add_option("--phi-azimuth", cmp_phi, "atomic coherent azimuth");
    cmp->add_option("--p-index", cmp_p, "semiclassical index (factorized)");
    cmp->add_option("--detuning", cmp_delta, "detuning Delta (dispersive/cat)");
    cmp->add_option("--lambda", cmp_lambda, "g^2/Delta (overrides --detuning)");

    // snapshot: build/load a state, evolve, write the text snapshot.
    auto* snap = app.add_subcommand("snapshot", "write an evolved state snapshot");
    add_common(snap, c_snap, "state.snap");
    std::string snap_load, snap_mode = "exact";
    double snap_nbar = 1.0, snap_theta = 0.0, snap_phi = 0.0, snap_time = 0.0;
    double snap_delta = 100.0;
    std::optional<int> snap_fock, snap_p, snap_dicke;
    snap->add_option("--load", snap_load, "resume from an existing snapshot");
    snap->add_option("--nbar", snap_nbar, "coherent field mean photon number");
    snap->add_option("--fock", snap_fock, "number-state field |k> instead");
    snap->add_option("--theta", snap_theta, "atomic coherent polar angle");
    snap->add_option("--phi-azimuth", snap_phi, "atomic coherent azimuth");
    snap->add_option("--p-index", snap_p, "semiclassical atomic state |P>");
    snap->add_option("--dicke", snap_dicke, "Dicke atomic state |K>");
    snap->add_option("--time", snap_time, "evolution time (gt, or t for dispersive)");
    snap->add_option("--mode", snap_mode, "evolution mode")
        ->check(CLI::IsMember({"exact", "dispersive"}));
    snap->add_option("--detuning", snap_delta, "detuning (dispersive mode)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;  // parameter error
    }

    try {
        if (fig1->parsed()) return cmd_fig1(c_fig1, fig1_nbars);
        if (fig2->parsed())
            return cmd_fig2(c_fig2, fig2_nbar, fig2_theta, fig2_phi, fig2_p, fig2_tmax);
        if (fig3->parsed()) return cmd_fig3(c_fig3, fig3_nbars);
        if (fig4->parsed())
            return cmd_fig4(c_fig4, fig4_nbar, fig4_theta, fig4_phi, fig4_dicke,
                            fig4_delta, fig4_lambda, fig4_tau);
        if (spec->parsed()) return cmd_spectrum(c_spec, spec_nmin, spec_nmax);
        if (cmp->parsed())
            return cmd_compare(c_cmp, cmp_regime, cmp_nbar, cmp_time, cmp_tau,
                               cmp_theta, cmp_phi, cmp_p, cmp_delta, cmp_lambda);
        if (snap->parsed())
            return cmd_snapshot(c_snap, snap_load, snap_nbar, snap_fock, snap_theta,
                                snap_phi, snap_p, snap_dicke, snap_time, snap_mode,
                                snap_delta);
    } catch (const NumericalFailure& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 3;
    } catch (const InvalidParameter& e) {
        std::cerr << "parameter error: " << e.what() << "\n";
        return 2;
    } catch (const RegimeError& e) {
        std::cerr << "regime error: " << e.what() << "\n";
        return 2;
    } catch (const SupportTooLarge& e) {
        std::cerr << "support error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
