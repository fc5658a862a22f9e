// boundstate-atlas: bound-state counting and phase-plane classification for
// the lattice two-boson fiber Hamiltonian H_{gamma,lambda,mu}(K).

#include <CLI11.hpp>
#include <json.hpp>

#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "boundstate/determinant_spectrum.hpp"
#include "boundstate/lattice_model.hpp"
#include "boundstate/lattice_oracle.hpp"
#include "boundstate/phase_plane.hpp"
#include "boundstate/verification.hpp"

using json = nlohmann::ordered_json;
using namespace boundstate;

namespace {

std::string fmt17(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

// momentum component: plain number, or [factor]pi[/den], e.g. "pi", "-pi/2", "3pi/4", "0.5pi"
double parse_momentum_component(std::string s) {
    if (s.empty()) throw CLI::ValidationError("empty momentum component");
    double sign = 1.0;
    std::size_t i = 0;
    if (s[0] == '+' || s[0] == '-') {
        sign = (s[0] == '-') ? -1.0 : 1.0;
        i = 1;
    }
    const auto pi_pos = s.find("pi", i);
    if (pi_pos == std::string::npos) {
        std::size_t used = 0;
        const double v = std::stod(s.substr(i), &used);
        if (used != s.size() - i) throw CLI::ValidationError("bad momentum component: " + s);
        return sign * v;
    }
    double factor = 1.0;
    if (pi_pos > i) factor = std::stod(s.substr(i, pi_pos - i));
    double den = 1.0;
    std::size_t after = pi_pos + 2;
    if (after < s.size()) {
        if (s[after] != '/') throw CLI::ValidationError("bad momentum component: " + s);
        den = std::stod(s.substr(after + 1));
    }
    return sign * factor * M_PI / den;
}

Quasimomentum parse_momentum(const std::string& s) {
    const auto comma = s.find(',');
    if (comma == std::string::npos)
        throw CLI::ValidationError("expected K as 'k1,k2' (literals pi, pi/2 accepted)");
    return {parse_momentum_component(s.substr(0, comma)),
            parse_momentum_component(s.substr(comma + 1))};
}

int default_jobs() {
    if (const char* env = std::getenv("BOUNDSTATE_ATLAS_JOBS")) {
        const int j = std::atoi(env);
        if (j >= 1) return j;
    }
    return 1;
}

struct Output {
    std::string path = "-";
    std::ofstream file;
    std::ostream& stream() {
        if (path == "-") return std::cout;
        if (!file.is_open()) {
            file.open(path);
            if (!file) throw CLI::ValidationError("cannot open output file: " + path);
        }
        return file;
    }
};

std::string component_str(ComponentIndex k) {
    return k == ComponentIndex::boundary ? "boundary" : std::to_string(static_cast<int>(k));
}

json zero_report_json(const ZeroReport& zr) {
    json j;
    j["below"] = zr.below;
    j["above"] = zr.above;
    j["n_below"] = zr.below.size();
    j["n_above"] = zr.above.size();
    j["residual_below"] = zr.residual_below;
    j["residual_above"] = zr.residual_above;
    j["inconclusive"] = zr.inconclusive;
    j["z_minus"] = zr.z_minus;
    j["z_plus"] = zr.z_plus;
    j["expansion_converged"] = zr.expansion_converged;
    return j;
}

int cmd_band(const std::string& kstr, int kgrid, const std::string& format, Output& out) {
    std::vector<Quasimomentum> ks;
    if (kgrid > 0) {
        for (int i = 0; i < kgrid; ++i)
            for (int j = 0; j < kgrid; ++j)
                ks.emplace_back(-M_PI + two_pi * i / kgrid, -M_PI + two_pi * j / kgrid);
    } else {
        ks.push_back(parse_momentum(kstr));
    }
    std::ostream& os = out.stream();
    if (format == "json") {
        json rows = json::array();
        for (const auto& K : ks) {
            const EssentialBand b = essential_band(K);
            rows.push_back({{"k1", K.k1}, {"k2", K.k2}, {"e_min", b.e_min}, {"e_max", b.e_max}});
        }
        os << rows.dump(2) << "\n";
    } else {
        os << "k1,k2,e_min,e_max\n";
        for (const auto& K : ks) {
            const EssentialBand b = essential_band(K);
            os << fmt17(K.k1) << ',' << fmt17(K.k2) << ',' << fmt17(b.e_min) << ','
               << fmt17(b.e_max) << "\n";
        }
    }
    return 0;
}

int cmd_zeros(const CouplingParams& c, const std::string& kstr, const std::string& sector,
              int grid_n, const std::string& format, Output& out) {
    const Quasimomentum K = parse_momentum(kstr);
    const GridSpec grid(grid_n);
    ZeroReport zr;
    EssentialBand band;
    if (sector == "antisym2") {
        if (K.k1 != 0.0 || K.k2 != 0.0)
            throw CLI::ValidationError("sector antisym2 is defined only at K = 0,0");
        band = {0.0, 8.0};
        Gram2Evaluator gram(grid);
        zr = find_zeros([&](double z) { return det2(c.lambda, c.mu, gram(z)); }, band);
    } else if (sector == "full7") {
        band = essential_band(K);
        zr = bound_state_report(c, K, grid);
    } else {
        throw CLI::ValidationError("sector must be antisym2 or full7");
    }
    std::ostream& os = out.stream();
    if (format == "json") {
        json j = zero_report_json(zr);
        j["sector"] = sector;
        j["gamma"] = c.gamma;
        j["lambda"] = c.lambda;
        j["mu"] = c.mu;
        j["k1"] = K.k1;
        j["k2"] = K.k2;
        j["e_min"] = band.e_min;
        j["e_max"] = band.e_max;
        os << j.dump(2) << "\n";
    } else {
        os << "side,z,residual\n";
        for (std::size_t i = 0; i < zr.below.size(); ++i)
            os << "below," << fmt17(zr.below[i]) << ',' << fmt17(zr.residual_below[i]) << "\n";
        for (std::size_t i = 0; i < zr.above.size(); ++i)
            os << "above," << fmt17(zr.above[i]) << ',' << fmt17(zr.residual_above[i]) << "\n";
        for (double z : zr.inconclusive) os << "inconclusive," << fmt17(z) << ",\n";
    }
    return 0;
}

struct ScanConfig {
    double lambda_min = -30, lambda_max = 30, mu_min = -30, mu_max = 30;
    int nl = 41, nm = 41;
    bool with_det = false, with_oracle = false;
    int grid_n = 512, box_l = 30, jobs = 1;
    double gamma = 0.0;
    std::string kstr = "0,0";
};

int cmd_phase_scan(const ScanConfig& cfg, const std::string& format, Output& out) {
    const GridSpec grid(cfg.grid_n);
    const EdgeConstants e = edge_constants(grid);
    const Quasimomentum K = parse_momentum(cfg.kstr);

    struct Row {
        double lambda, mu, cm, cp;
        ComponentIndex km, kp;
        int det_nm = 0, det_np = 0;
        int or_nm = 0, or_np = 0;
    };
    const int npts = cfg.nl * cfg.nm;
    std::vector<Row> rows(npts);
    std::atomic<int> next{0};
    auto worker = [&]() {
        std::optional<Gram2Evaluator> gram;  // built lazily, one per worker
        for (;;) {
            const int idx = next.fetch_add(1);
            if (idx >= npts) break;
            const int i = idx / cfg.nm, j = idx % cfg.nm;
            Row r;
            r.lambda = cfg.nl == 1 ? cfg.lambda_min
                                   : cfg.lambda_min + (cfg.lambda_max - cfg.lambda_min) * i / (cfg.nl - 1);
            r.mu = cfg.nm == 1 ? cfg.mu_min : cfg.mu_min + (cfg.mu_max - cfg.mu_min) * j / (cfg.nm - 1);
            r.cm = c_minus(r.lambda, r.mu, e);
            r.cp = c_plus(r.lambda, r.mu, e);
            const RegionLabel lbl = classify(r.lambda, r.mu, e);
            r.km = lbl.k_minus;
            r.kp = lbl.k_plus;
            if (cfg.with_det) {
                if (!gram) gram.emplace(grid);
                const ZeroReport zr =
                    find_zeros([&](double z) { return det2(r.lambda, r.mu, (*gram)(z)); },
                               EssentialBand{0.0, 8.0});
                r.det_nm = static_cast<int>(zr.below.size());
                r.det_np = static_cast<int>(zr.above.size());
            }
            if (cfg.with_oracle) {
                const CouplingParams c{cfg.gamma, r.lambda, r.mu};
                const OracleReport orep = count_outside(
                    eigensolve(build_matrix(c, K, {cfg.box_l})), essential_band(K), 1e-4);
                r.or_nm = orep.n_below;
                r.or_np = orep.n_above;
            }
            rows[idx] = r;
        }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < std::max(1, cfg.jobs); ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();

    std::ostream& os = out.stream();
    if (format == "json") {
        json arr = json::array();
        for (const Row& r : rows) {
            json jr{{"lambda", r.lambda}, {"mu", r.mu},          {"c_minus", r.cm},
                    {"c_plus", r.cp},     {"k_minus", component_str(r.km)},
                    {"k_plus", component_str(r.kp)}};
            if (cfg.with_det) {
                jr["det_n_minus"] = r.det_nm;
                jr["det_n_plus"] = r.det_np;
            }
            if (cfg.with_oracle) {
                jr["oracle_n_minus"] = r.or_nm;
                jr["oracle_n_plus"] = r.or_np;
            }
            arr.push_back(jr);
        }
        os << arr.dump(2) << "\n";
    } else {
        os << "lambda,mu,c_minus,c_plus,k_minus,k_plus";
        if (cfg.with_det) os << ",det_n_minus,det_n_plus";
        if (cfg.with_oracle) os << ",oracle_n_minus,oracle_n_plus";
        os << "\n";
        for (const Row& r : rows) {
            os << fmt17(r.lambda) << ',' << fmt17(r.mu) << ',' << fmt17(r.cm) << ',' << fmt17(r.cp)
               << ',' << component_str(r.km) << ',' << component_str(r.kp);
            if (cfg.with_det) os << ',' << r.det_nm << ',' << r.det_np;
            if (cfg.with_oracle) os << ',' << r.or_nm << ',' << r.or_np;
            os << "\n";
        }
    }
    return 0;
}

int cmd_verify_constants(int grid_n, const std::string& format, Output& out) {
    const ConstantsReport r = verify_constants(GridSpec(grid_n));
    std::ostream& os = out.stream();
    if (format == "json") {
        json j{{"e11", r.computed.e11},
               {"e12", r.computed.e12},
               {"e22", r.computed.e22},
               {"d", r.computed.d},
               {"mu_star", r.computed.mu_star},
               {"lambda_star", r.computed.lambda_star},
               {"kappa", r.kappa},
               {"identities_ok", r.identities_ok},
               {"paper",
                {{"e11", r.paper_e11},
                 {"e12", r.paper_e12},
                 {"e22", r.paper_e22},
                 {"mu0", r.paper_mu0}}},
               {"paper_matches",
                {{"e11", r.paper_e11_matches},
                 {"e12", r.paper_e12_matches},
                 {"e22", r.paper_e22_matches},
                 {"mu0", r.paper_mu0_matches}}}};
        os << j.dump(2) << "\n";
    } else {
        os << format_constants_report(r);
    }
    return r.identities_ok ? 0 : 1;
}

int cmd_verify_theorems(int grid_n, int box_l, bool with_oracle, int jobs, Output& out) {
    const GridSpec grid(grid_n);
    std::ostream& os = out.stream();
    bool all_ok = true;

    {
        Gram2Evaluator gram(grid);
        const ZeroReport zr =
            find_zeros([&](double z) { return det2(0.0, 0.0, gram(z)); }, EssentialBand{0.0, 8.0});
        const bool ok = zr.below.empty() && zr.above.empty();
        all_ok = all_ok && ok;
        os << (ok ? "PASS" : "FAIL") << "  theorem-3.2a: (0,0) has no antisymmetric bound states\n";
    }
    {
        const ConstancyResult r = verify_region_constancy(grid);
        all_ok = all_ok && r.ok;
        os << (r.ok ? "PASS" : "FAIL") << "  region constancy along in-component paths\n";
        if (!r.ok) os << r.detail;
    }
    {
        const LowerBoundResult r = verify_lower_bounds(grid, 5, box_l, with_oracle, jobs);
        all_ok = all_ok && r.ok();
        os << (r.ok() ? "PASS" : "FAIL") << "  eigenvalue-count lower bounds over "
           << r.n_checked << " (region, K) pairs" << (with_oracle ? " (det7 + oracle)" : " (det7)")
           << "\n";
        for (const auto& f : r.failures)
            os << "    " << f.region << " K=(" << fmt17(f.K.k1) << "," << fmt17(f.K.k2)
               << ") need=(" << f.need_below << "," << f.need_above << ") det=(" << f.det_below
               << "," << f.det_above << ") oracle=(" << f.oracle_below << "," << f.oracle_above
               << ") via " << f.route << "\n";
    }
    return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Spectral atlas of the lattice two-boson fiber Hamiltonian: essential band, "
                 "Fredholm-determinant bound-state counts, (lambda,mu) phase plane, and a "
                 "truncated-lattice diagonalization oracle."};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format = "csv";
    Output out;
    app.add_option("--format", format, "output format: csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--out", out.path, "output file, or - for stdout");

    CouplingParams c;
    std::string kstr = "0,0";
    int grid_n = 512;
    int box_l = 30;
    int jobs = default_jobs();

    auto* band_cmd = app.add_subcommand("band", "essential band [E_min(K), E_max(K)]");
    int kgrid = 0;
    band_cmd->add_option("--K", kstr, "quasimomentum k1,k2 (accepts pi, pi/2, 3pi/4, ...)");
    band_cmd->add_option("--k-grid", kgrid, "sweep an NxN grid over [-pi,pi)^2 instead");

    auto* zeros_cmd = app.add_subcommand("zeros", "determinant zeros outside the band");
    std::string sector = "full7";
    zeros_cmd->add_option("--gamma", c.gamma, "on-site coupling");
    zeros_cmd->add_option("--lambda", c.lambda, "nearest-neighbour coupling");
    zeros_cmd->add_option("--mu", c.mu, "next-nearest-neighbour coupling");
    zeros_cmd->add_option("--K", kstr, "quasimomentum k1,k2");
    zeros_cmd->add_option("--sector", sector,
                          "antisym2 (rank-2 sector at K=0) or full7 (rank-7, any K)");
    zeros_cmd->add_option("--grid-n", grid_n, "quadrature points per axis (even, >= 16)");

    auto* scan_cmd = app.add_subcommand(
        "phase-scan", "classify a (lambda,mu) rectangle; CSV columns: lambda,mu,c_minus,c_plus,"
                      "k_minus,k_plus[,det_n_minus,det_n_plus][,oracle_n_minus,oracle_n_plus]; "
                      "rows are lambda-major");
    ScanConfig scfg;
    scan_cmd->add_option("--lambda-min", scfg.lambda_min);
    scan_cmd->add_option("--lambda-max", scfg.lambda_max);
    scan_cmd->add_option("--mu-min", scfg.mu_min);
    scan_cmd->add_option("--mu-max", scfg.mu_max);
    scan_cmd->add_option("--nl", scfg.nl, "lambda resolution")->check(CLI::PositiveNumber);
    scan_cmd->add_option("--nm", scfg.nm, "mu resolution")->check(CLI::PositiveNumber);
    scan_cmd->add_flag("--with-det", scfg.with_det, "add certified det2 zero counts");
    scan_cmd->add_flag("--with-oracle", scfg.with_oracle,
                       "add truncated-lattice counts at --box-l");
    scan_cmd->add_option("--gamma", scfg.gamma, "on-site coupling for the oracle columns");
    scan_cmd->add_option("--K", scfg.kstr, "quasimomentum for the oracle columns");
    scan_cmd->add_option("--grid-n", scfg.grid_n, "quadrature points per axis");
    scan_cmd->add_option("--box-l", scfg.box_l, "oracle box half-width (>= 10)");
    scan_cmd->add_option("--jobs", scfg.jobs, "worker threads (env BOUNDSTATE_ATLAS_JOBS)");

    auto* vc_cmd = app.add_subcommand("verify-constants",
                                      "computed edge constants, identities, and the printed-"
                                      "constant comparison table");
    vc_cmd->add_option("--grid-n", grid_n, "quadrature points per axis");

    auto* vt_cmd = app.add_subcommand("verify-theorems", "theorem-level verification suite");
    bool with_oracle = false;
    vt_cmd->add_option("--grid-n", grid_n, "quadrature points per axis");
    vt_cmd->add_option("--box-l", box_l, "oracle box half-width");
    vt_cmd->add_flag("--with-oracle", with_oracle, "also check bounds by diagonalization");
    vt_cmd->add_option("--jobs", jobs, "worker threads");

    CLI11_PARSE(app, argc, argv);

    try {
        if (band_cmd->parsed()) return cmd_band(kstr, kgrid, format, out);
        if (zeros_cmd->parsed()) return cmd_zeros(c, kstr, sector, grid_n, format, out);
        if (scan_cmd->parsed()) {
            scfg.jobs = scan_cmd->count("--jobs") ? scfg.jobs : jobs;
            return cmd_phase_scan(scfg, format, out);
        }
        if (vc_cmd->parsed()) return cmd_verify_constants(grid_n, format, out);
        if (vt_cmd->parsed()) return cmd_verify_theorems(grid_n, box_l, with_oracle, jobs, out);
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    }
    return 0;
}
