// unruhkit: command-line front end for the two-frame rate toolkit.
//
// Commands mirror the library modules: rates / residual / fock / thermal /
// audit / bessel. Output is CSV or JSON with identical numeric payloads and
// byte-stable formatting; exit codes are 0 (ok), 1 (I/O), 2 (validation),
// 3 (numerical tolerance failure).

#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "unruh/audit.hpp"
#include "unruh/coordinates.hpp"
#include "unruh/errors.hpp"
#include "unruh/rates.hpp"
#include "unruh/specfun.hpp"
#include "unruh/thermal.hpp"
#include "unruh/wedge_fock.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitIo = 1;
constexpr int kExitValidation = 2;
constexpr int kExitTolerance = 3;

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.16e", v);
    return buf;
}

struct Table {
    std::string name;
    std::vector<std::string> columns;
    std::vector<std::string> row_labels;  // optional; empty when rows are purely numeric
    std::vector<std::vector<double>> rows;
    std::vector<std::pair<std::string, double>> meta;
    std::vector<std::pair<std::string, std::string>> notes;

    std::string to_csv() const {
        std::ostringstream os;
        os << "# table = " << name << "\n";
        for (const auto& [k, v] : meta) os << "# " << k << " = " << format_double(v) << "\n";
        for (const auto& [k, v] : notes) os << "# " << k << " = " << v << "\n";
        if (!row_labels.empty()) os << "label,";
        for (std::size_t i = 0; i < columns.size(); ++i)
            os << columns[i] << (i + 1 < columns.size() ? "," : "");
        os << "\n";
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (!row_labels.empty()) os << row_labels[r] << ",";
            for (std::size_t c = 0; c < rows[r].size(); ++c)
                os << format_double(rows[r][c]) << (c + 1 < rows[r].size() ? "," : "");
            os << "\n";
        }
        return os.str();
    }

    nlohmann::ordered_json to_json() const {
        nlohmann::ordered_json j;
        j["table"] = name;
        nlohmann::ordered_json m = nlohmann::ordered_json::object();
        for (const auto& [k, v] : meta) m[k] = v;
        j["meta"] = m;
        nlohmann::ordered_json n = nlohmann::ordered_json::object();
        for (const auto& [k, v] : notes) n[k] = v;
        j["notes"] = n;
        j["columns"] = columns;
        if (!row_labels.empty()) j["row_labels"] = row_labels;
        j["rows"] = rows;
        return j;
    }
};

struct OutputOptions {
    std::string format = "csv";
    std::string path;  // empty -> stdout
};

void emit(const std::vector<Table>& tables, const OutputOptions& out) {
    std::string payload;
    if (out.format == "json") {
        nlohmann::ordered_json j = nlohmann::ordered_json::array();
        for (const auto& t : tables) j.push_back(t.to_json());
        payload = j.dump(2);
        payload.push_back('\n');
    } else {
        std::ostringstream os;
        for (std::size_t i = 0; i < tables.size(); ++i) {
            if (i) os << "\n";
            os << tables[i].to_csv();
        }
        payload = os.str();
    }
    if (out.path.empty()) {
        std::cout << payload;
        return;
    }
    std::filesystem::path p(out.path);
    if (p.is_relative()) {
        if (const char* dir = std::getenv("UNRUHKIT_OUT_DIR")) p = std::filesystem::path(dir) / p;
    }
    std::ofstream f(p, std::ios::binary);
    if (!f) throw std::ios_base::failure("cannot open output path: " + p.string());
    f << payload;
    if (!f) throw std::ios_base::failure("write failed: " + p.string());
}

std::vector<double> parse_list(const std::string& csv) {
    std::vector<double> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        std::size_t pos = 0;
        const double v = std::stod(item, &pos);
        if (pos != item.size()) throw CLI::ValidationError("bad numeric list entry: " + item);
        out.push_back(v);
    }
    if (out.empty()) throw CLI::ValidationError("empty numeric list");
    return out;
}

// Loads a flat key=value config file and returns it as --key=value tokens,
// inserted ahead of the explicit flags so the command line wins.
std::vector<std::string> expand_config(const std::vector<std::string>& args) {
    std::string cfg_path;
    std::vector<std::string> rest;
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--config") {
            if (i + 1 >= args.size()) throw CLI::ValidationError("--config needs a path");
            cfg_path = args[++i];
        } else if (args[i].rfind("--config=", 0) == 0) {
            cfg_path = args[i].substr(9);
        } else {
            rest.push_back(args[i]);
        }
    }
    if (cfg_path.empty()) return rest;
    std::ifstream in(cfg_path);
    if (!in) throw std::ios_base::failure("cannot read config file: " + cfg_path);
    std::vector<std::string> cfg_tokens;
    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const auto eq = line.find('=');
        if (eq == std::string::npos) continue;
        auto trim = [](std::string s) {
            const auto b = s.find_first_not_of(" \t\r");
            const auto e = s.find_last_not_of(" \t\r");
            return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };
        const std::string key = trim(line.substr(0, eq));
        const std::string val = trim(line.substr(eq + 1));
        if (!key.empty()) cfg_tokens.push_back("--" + key + "=" + val);
    }
    // config tokens go after the subcommand name, before explicit flags
    std::vector<std::string> out;
    if (!rest.empty()) {
        out.push_back(rest.front());
        out.insert(out.end(), cfg_tokens.begin(), cfg_tokens.end());
        out.insert(out.end(), rest.begin() + 1, rest.end());
    } else {
        out = cfg_tokens;
    }
    return out;
}

struct QuadFlags {
    double tau_max = 30.0;
    std::string eps_ladder = "0.2,0.1,0.05,0.025";
    double kz_cut = 40.0;
    int max_intervals = 2000;
    double rel_tol = 1e-9;

    unruh::rates::QuadratureConfig config() const {
        unruh::rates::QuadratureConfig q;
        q.tau_max = tau_max;
        q.eps_ladder = parse_list(eps_ladder);
        q.kz_cut_factor = kz_cut;
        q.max_intervals = max_intervals;
        q.rel_tol = rel_tol;
        return q;
    }
};

void add_quad_flags(CLI::App* cmd, QuadFlags& q) {
    cmd->add_option("--tau-max", q.tau_max, "rapidity window cap (units of 1/a)");
    cmd->add_option("--eps-ladder", q.eps_ladder, "switching ladder, comma list");
    cmd->add_option("--kz-cut", q.kz_cut, "k_z window factor");
    cmd->add_option("--max-intervals", q.max_intervals, "adaptive node budget");
    cmd->add_option("--quad-tol", q.rel_tol, "per-quadrature relative tolerance");
}

void add_output_flags(CLI::App* cmd, OutputOptions& out) {
    cmd->add_option("--format", out.format, "output format (csv|json)")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--out", out.path,
                    "output path (default stdout; relative paths resolve under "
                    "$UNRUHKIT_OUT_DIR)");
}

Eigen::ArrayXd to_array(const std::vector<double>& v) {
    Eigen::ArrayXd a(static_cast<Eigen::Index>(v.size()));
    for (std::size_t i = 0; i < v.size(); ++i) a[static_cast<Eigen::Index>(i)] = v[i];
    return a;
}

// --- command handlers ------------------------------------------------------

int run_rates(double q, double a, const std::string& kperp, const QuadFlags& qf,
              const OutputOptions& out) {
    const auto sweep = unruh::rates::spectrum_sweep(q, a, to_array(parse_list(kperp)),
                                                    qf.config());
    Table t;
    t.name = "rate_spectra";
    t.columns = {"kperp", "channel_rate", "acc_total_rate", "inertial_rate", "inertial_err",
                 "residual", "residual_err"};
    t.meta = {{"q", q}, {"a", a}};
    if (sweep.deduplicated) t.notes.emplace_back("warning", "duplicate kperp entries dropped");
    for (Eigen::Index i = 0; i < sweep.accelerated.kperp.size(); ++i) {
        const double k = sweep.accelerated.kperp[i];
        t.rows.push_back({k, unruh::rates::channel_rate_accelerated(q, a, k),
                          sweep.accelerated.density[i], sweep.inertial.density[i],
                          sweep.inertial.error[i], sweep.residual[i], sweep.residual_error[i]});
    }
    emit({t}, out);
    return kExitOk;
}

int run_residual(double q, double a, const std::string& kperp, const QuadFlags& qf,
                 const OutputOptions& out) {
    const auto rep =
        unruh::audit::residual_report(q, a, to_array(parse_list(kperp)), qf.config());
    Table t;
    t.name = "residual_signal";
    t.columns = {"kperp", "acc_rate", "inertial_rate", "residual", "rel_err"};
    t.meta = {{"q", q}, {"a", a}, {"max_ratio", rep.max_ratio}, {"threshold", rep.threshold}};
    t.notes.emplace_back("verdict", rep.pass ? "PASS" : "FAIL");
    for (const auto& r : rep.rows)
        t.rows.push_back(
            {r.kperp, r.accelerated, r.inertial, r.residual, r.inertial_error / r.accelerated});
    emit({t}, out);
    std::cout << (rep.pass ? "PASS" : "FAIL") << " max|residual|/rate = "
              << format_double(rep.max_ratio) << "\n";
    return rep.pass ? kExitOk : kExitTolerance;
}

int run_thermal(double a, double omega, int nmax, const OutputOptions& out) {
    const unruh::thermal::ThermalBath bath(a);
    const unruh::thermal::OccupationLaw law(omega, bath);
    Table t;
    t.name = "occupation";
    t.columns = {"n", "p_n"};
    t.meta = {{"a", a},
              {"omega", omega},
              {"temperature", bath.temperature()},
              {"beta", bath.beta()},
              {"partition", law.partition()},
              {"mean_occupation", law.mean()}};
    for (int n = 0; n <= nmax; ++n)
        t.rows.push_back({static_cast<double>(n), law.probability(n)});
    emit({t}, out);
    return kExitOk;
}

int run_bessel(double nu, double mu, const std::string& xs, double tol,
               const OutputOptions& out) {
    unruh::specfun::Options opt;
    opt.rel_tol = tol;
    Table t;
    t.name = "bessel_k";
    t.columns = {"x", "k_re", "k_im", "err_est"};
    t.meta = {{"order_re", nu}, {"order_im", mu}};
    for (double x : parse_list(xs)) {
        const std::complex<double> v = unruh::specfun::bessel_k_complex({nu, mu}, x, opt);
        t.rows.push_back({x, v.real(), v.imag(), std::abs(v) * tol});
    }
    emit({t}, out);
    return kExitOk;
}

int run_fock(double omega, int cutoff, double mass, double kz, double kperp,
             const OutputOptions& out) {
    using namespace unruh::fock;
    const TwoWedgeState vac = squeezed_vacuum(omega, cutoff);

    Table inv;
    inv.name = "two_wedge_invariants";
    inv.columns = {"value"};
    inv.meta = {{"omega", omega}, {"cutoff", static_cast<double>(cutoff)}};
    auto push = [&](const std::string& label, double v) {
        inv.row_labels.push_back(label);
        inv.rows.push_back({v});
    };
    push("b_plus_residual_norm", unruh_annihilate(vac, Branch::PlusOmega).norm());
    push("b_minus_residual_norm", unruh_annihilate(vac, Branch::MinusOmega).norm());
    push("truncation_bound", truncation_bound(omega, cutoff));

    // canonical commutator on a deterministic low-occupation state
    TwoWedgeState probe = TwoWedgeState::zero(omega, cutoff);
    probe.amp(0, 0) = 0.6;
    probe.amp(1, 2) = {0.0, 0.8};
    probe = probe.normalized();
    const TwoWedgeState bbd = unruh_annihilate(unruh_create(probe, Branch::PlusOmega),
                                               Branch::PlusOmega);
    const TwoWedgeState bdb = unruh_create(unruh_annihilate(probe, Branch::PlusOmega),
                                           Branch::PlusOmega);
    TwoWedgeState comm = bbd;
    comm.amp = bbd.amp - bdb.amp - probe.amp;
    push("commutator_b_bdag_dev", comm.norm());

    const auto red = reduced_right_density(vac);
    const unruh::thermal::ThermalBath unit_bath(1.0);
    double max_dev = 0.0;
    for (Eigen::Index n = 0; n < red.occupation.size(); ++n) {
        const double expect = unruh::thermal::occupation_probability(n, omega, unit_bath);
        max_dev = std::max(max_dev, std::abs(red.occupation[n] - expect));
    }
    push("reduced_thermal_max_dev", max_dev);
    push("reduced_purity", red.purity);
    push("mean_occupation_dev",
         std::abs(red.occupation.dot(Eigen::VectorXd::LinSpaced(red.occupation.size(), 0.0,
                                                                red.occupation.size() - 1.0)) -
                  unruh::thermal::mean_occupation(omega, unit_bath)));

    // four-term decomposition of the Minkowski creation operator
    const Rapidity rap(mass, kz, kperp);
    const TwoWedgeState viaOp = minkowski_creation(vac, rap, OmegaGrid::single_node(omega));
    const double s = 1.0 / std::sqrt(2.0 * std::sinh(M_PI * omega));
    const double pref = 1.0 / std::sqrt(2.0 * M_PI * mass * std::cosh(rap.q));
    const std::complex<double> ph(std::cos(omega * rap.q), std::sin(omega * rap.q));
    TwoWedgeState four = TwoWedgeState::zero(omega, cutoff);
    four.amp = pref * s *
               (ph * std::exp(M_PI * omega / 2.0) * apply_ladder(vac, kCreateR).amp -
                ph * std::exp(-M_PI * omega / 2.0) * apply_ladder(vac, kAnnihilateL).amp +
                std::conj(ph) * std::exp(M_PI * omega / 2.0) * apply_ladder(vac, kCreateL).amp -
                std::conj(ph) * std::exp(-M_PI * omega / 2.0) *
                    apply_ladder(vac, kAnnihilateR).amp);
    TwoWedgeState diff = viaOp;
    diff.amp = viaOp.amp - four.amp;
    push("four_term_reconstruction_err", diff.norm());

    Table probes;
    probes.name = "pair_correlators";
    probes.columns = {"re", "im"};
    probes.meta = {{"omega", omega}, {"rapidity", rap.q}};
    auto put = [&](const std::string& label, std::complex<double> v) {
        probes.row_labels.push_back(label);
        probes.rows.push_back({v.real(), v.imag()});
    };
    const std::vector<LadderOp> NR{kCreateR, kAnnihilateR};
    const std::vector<LadderOp> NL{kCreateL, kAnnihilateL};
    const std::vector<LadderOp> aRaR{kAnnihilateR, kAnnihilateR};
    const std::vector<LadderOp> aLaL{kAnnihilateL, kAnnihilateL};
    const std::vector<LadderOp> aRaL{kAnnihilateR, kAnnihilateL};
    put("vac_N_R", pair_correlator(vac, NR));
    put("vac_N_L", pair_correlator(vac, NL));
    put("vac_aR_aR", pair_correlator(vac, aRaR));
    put("vac_aL_aL", pair_correlator(vac, aLaL));
    put("vac_aR_aL", pair_correlator(vac, aRaL));
    const TwoWedgeState one = minkowski_creation(vac, rap, OmegaGrid::single_node(omega));
    const TwoWedgeState two = minkowski_creation(one, rap, OmegaGrid::single_node(omega));
    const TwoWedgeState twoN = two.normalized();
    put("aMdag2_N_R", pair_correlator(twoN, NR));
    put("aMdag2_N_L", pair_correlator(twoN, NL));
    put("aMdag2_aR_aR", pair_correlator(twoN, aRaR));
    put("aMdag2_aL_aL", pair_correlator(twoN, aLaL));
    put("aMdag2_aR_aL", pair_correlator(twoN, aRaL));
    emit({inv, probes}, out);
    return kExitOk;
}

int run_audit(double accel_g, const std::string& constants_path, const OutputOptions& out) {
    using namespace unruh::audit;
    const PhysicalConstants k = constants_path.empty() ? PhysicalConstants::codata2018()
                                                       : PhysicalConstants::load(constants_path);
    Table t;
    t.name = "audit";
    t.columns = {"value", "err_est"};
    auto put = [&](const std::string& label, double v, double e = 0.0) {
        t.row_labels.push_back(label);
        t.rows.push_back({v, e});
    };
    const LaserScenario ls = laser_scenario(accel_g, k);
    put("accel_in_g", ls.accel_in_g);
    put("accel_si", ls.accel_si);
    put("unruh_temperature_K", ls.temperature_K);
    put("unruh_temperature_keV", ls.temperature_keV);
    put("sigma_thomson_si", thomson_cross_section(k));
    put("sigma_thomson_natural_route", thomson_cross_section_natural(k));

    DistributionSpec exp_spec;
    exp_spec.inertial_radial = [](double kk) { return std::exp(-kk); };
    exp_spec.rindler_modal = [](double w, double p) { return std::exp(-w) * std::exp(-p); };
    MeasureBounds mb;
    mb.k_hi = INFINITY;
    mb.omega_hi = INFINITY;
    mb.kperp_hi = INFINITY;
    const auto exp_rep = measure_mismatch(exp_spec, mb);
    put("measure_exp_inertial", exp_rep.inertial_value, exp_rep.inertial_error);
    put("measure_exp_rindler", exp_rep.rindler_value, exp_rep.rindler_error);

    DistributionSpec gauss;
    gauss.inertial_radial = [](double kk) { return std::exp(-kk * kk); };
    gauss.rindler_modal = [](double w, double p) { return std::exp(-w * w - p * p); };
    MeasureBounds unit;
    unit.k_hi = 1.0;
    unit.omega_hi = 1.0;
    unit.kperp_hi = 1.0;
    const auto gauss_rep = measure_mismatch(gauss, unit);
    put("measure_gauss_inertial", gauss_rep.inertial_value, gauss_rep.inertial_error);
    put("measure_gauss_rindler", gauss_rep.rindler_value, gauss_rep.rindler_error);
    put("measure_gauss_discrepancy", gauss_rep.discrepancy);

    // deviation of the quoted frequency map from the exact photon boost
    double max_dev = 0.0;
    const double phi_v = 0.3;
    for (double v : {0.3, 0.6, 0.9}) {
        for (double theta : {0.4, 1.0, 2.2}) {
            for (double phi : {0.0, 1.0, 2.5, 4.0}) {
                const double w = 1.0;
                const Eigen::Vector3d khat(std::sin(theta) * std::cos(phi),
                                           std::sin(theta) * std::sin(phi), std::cos(theta));
                const Eigen::Vector4d kr(w, w * khat.x(), w * khat.y(), w * khat.z());
                const Eigen::Vector3d vel =
                    -v * Eigen::Vector3d(std::cos(phi_v), std::sin(phi_v), 0.0);
                const double lab = lorentz_photon_energy(kr, vel)[0];
                const double quoted = brodin_frequency_map(w, v, theta, phi, phi_v);
                max_dev = std::max(max_dev, std::abs(quoted - lab) / lab);
            }
        }
    }
    put("brodin_map_max_rel_dev", max_dev);

    const auto disp_m = dispersion_audit(
        unruh::rates::MinkowskiMode::on_shell(1, Eigen::Vector3d(3.0, 4.0, 0.0)));
    put("dispersion_minkowski_residual", disp_m.residual);
    const auto disp_r = dispersion_audit(unruh::rates::RindlerMode{1, 1.0, 1.0, 0.0});
    put("dispersion_rindler_constrained", disp_r.constrained ? 1.0 : 0.0);
    t.notes.emplace_back("dispersion_rindler", disp_r.note);
    emit({t}, out);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"unruhkit: accelerated-frame vs inertial-frame photon rate toolkit"};
    app.require_subcommand(0, 1);

    OutputOptions out;
    QuadFlags qf;
    double q = 1.0, a = 1.0, omega = 1.0, nu = 1.0, mu = 0.0, tol = 1e-10;
    double accel_g = 2e25, mass = 1.0, kz = 0.0, kperp_rap = 0.0;
    int nmax = 10, cutoff = 16;
    std::string kperp = "0.25,0.5,1,2,4", xs = "1", constants_path;

    auto* c_rates = app.add_subcommand("rates", "two-frame rate spectrum tables");
    c_rates->add_option("--q", q, "charge (units of e)");
    c_rates->add_option("--a", a, "proper acceleration (natural units)");
    c_rates->add_option("--kperp", kperp, "transverse momentum grid, comma list");
    add_quad_flags(c_rates, qf);
    add_output_flags(c_rates, out);

    auto* c_res = app.add_subcommand("residual", "residual Unruh signal audit");
    c_res->add_option("--q", q, "charge (units of e)");
    c_res->add_option("--a", a, "proper acceleration (natural units)");
    c_res->add_option("--kperp", kperp, "transverse momentum grid, comma list");
    add_quad_flags(c_res, qf);
    add_output_flags(c_res, out);

    auto* c_th = app.add_subcommand("thermal", "Unruh bath occupation tables");
    c_th->add_option("--a", a, "proper acceleration (natural units)");
    c_th->add_option("--omega", omega, "mode Rindler energy");
    c_th->add_option("--nmax", nmax, "largest occupation listed");
    add_output_flags(c_th, out);

    auto* c_fock = app.add_subcommand("fock", "two-wedge Fock invariants and probes");
    c_fock->add_option("--omega", omega, "mode Rindler energy (a = 1 units)");
    c_fock->add_option("--cutoff", cutoff, "Fock-space cutoff N");
    c_fock->add_option("--mass", mass, "scalar field mass");
    c_fock->add_option("--kz", kz, "Minkowski label k_z");
    c_fock->add_option("--kperp-label", kperp_rap, "Minkowski label kperp");
    add_output_flags(c_fock, out);

    auto* c_audit = app.add_subcommand("audit", "laser scenario and measure audits");
    c_audit->add_option("--accel-g", accel_g, "electron acceleration in units of g");
    c_audit->add_option("--constants", constants_path, "constants file (key = value)");
    add_output_flags(c_audit, out);

    auto* c_bessel = app.add_subcommand("bessel", "modified Bessel function tables");
    c_bessel->add_option("--nu", nu, "real part of the order");
    c_bessel->add_option("--mu", mu, "imaginary part of the order");
    c_bessel->add_option("--x", xs, "arguments, comma list");
    c_bessel->add_option("--tol", tol, "relative tolerance");
    add_output_flags(c_bessel, out);

    std::vector<std::string> args(argv + 1, argv + argc);
    try {
        args = expand_config(args);
        std::vector<const char*> cargs{argv[0]};
        for (const auto& s : args) cargs.push_back(s.c_str());
        try {
            app.parse(static_cast<int>(cargs.size()), cargs.data());
        } catch (const CLI::CallForHelp& e) {
            std::cout << app.help();
            return kExitOk;
        } catch (const CLI::ParseError& e) {
            std::cerr << e.what() << "\n" << app.help();
            return kExitValidation;
        }
        if (app.get_subcommands().empty()) {
            std::cerr << app.help();
            return kExitValidation;
        }
        if (c_rates->parsed()) return run_rates(q, a, kperp, qf, out);
        if (c_res->parsed()) return run_residual(q, a, kperp, qf, out);
        if (c_th->parsed()) return run_thermal(a, omega, nmax, out);
        if (c_fock->parsed()) return run_fock(omega, cutoff, mass, kz, kperp_rap, out);
        if (c_audit->parsed()) return run_audit(accel_g, constants_path, out);
        if (c_bessel->parsed()) return run_bessel(nu, mu, xs, tol, out);
        std::cerr << app.help();
        return kExitValidation;
    } catch (const unruh::tolerance_error& e) {
        std::cerr << "numerical tolerance failure: " << e.what() << "\n";
        return kExitTolerance;
    } catch (const unruh::extrapolation_error& e) {
        std::cerr << "numerical tolerance failure: " << e.what() << "\n";
        return kExitTolerance;
    } catch (const unruh::integrability_error& e) {
        std::cerr << "numerical tolerance failure: " << e.what() << "\n";
        return kExitTolerance;
    } catch (const unruh::domain_error& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::ios_base::failure& e) {
        std::cerr << "i/o error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    }
}
