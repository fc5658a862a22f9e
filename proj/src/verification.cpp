#include "boundstate/verification.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>
#include <thread>

namespace boundstate {

ConstantsReport verify_constants(const GridSpec& g, double tol) {
    ConstantsReport r;
    r.computed = edge_constants(g);
    const EdgeConstants& e = r.computed;
    r.kappa = (e.e12 / e.d) * (e.e12 / e.d);
    r.err_e12_identity = e.e12 - (4 * e.e11 - 0.5);
    r.err_e22_identity = e.e22 - (16 * e.e11 - 2.0);
    r.err_e12_over_d = e.e12 / e.d - 2.0;
    r.err_lambda_star = e.lambda_star - 8.0;
    r.identities_ok = e.d > 0 && std::abs(r.err_e12_identity) < tol &&
                      std::abs(r.err_e22_identity) < tol && std::abs(r.err_e12_over_d) < tol &&
                      std::abs(r.err_lambda_star) < tol;
    r.paper_e11 = (4.0 - M_PI) / M_PI;
    r.paper_e12 = (32.0 - 9 * M_PI) / (4 * M_PI);
    r.paper_e22 = (32.0 - 9 * M_PI) / (2 * M_PI);
    r.paper_mu0 = 4 * (4.0 - M_PI) / (32.0 - 9 * M_PI);
    r.paper_e11_matches = std::abs(e.e11 - r.paper_e11) < tol;
    r.paper_e12_matches = std::abs(e.e12 - r.paper_e12) < tol;
    r.paper_e22_matches = std::abs(e.e22 - r.paper_e22) < tol;
    r.paper_mu0_matches = std::abs(e.mu_star - r.paper_mu0) < tol;
    return r;
}

std::string format_constants_report(const ConstantsReport& r) {
    std::ostringstream os;
    char buf[256];
    auto row = [&](const char* name, double computed, double printed, bool match) {
        std::snprintf(buf, sizeof buf, "  %-12s computed % .12f   printed % .12f   %s\n", name,
                      computed, printed, match ? "match" : "MISMATCH");
        os << buf;
    };
    os << "edge constants (band-edge limits of a_ij at K=0):\n";
    row("e11", r.computed.e11, r.paper_e11, r.paper_e11_matches);
    row("e12", r.computed.e12, r.paper_e12, r.paper_e12_matches);
    row("e22", r.computed.e22, r.paper_e22, r.paper_e22_matches);
    row("mu_star", r.computed.mu_star, r.paper_mu0, r.paper_mu0_matches);
    std::snprintf(buf, sizeof buf,
                  "  d = % .12f   lambda_star = % .12f   kappa = % .12f\n", r.computed.d,
                  r.computed.lambda_star, r.kappa);
    os << buf;
    os << "identity checks (computed side):\n";
    auto idrow = [&](const char* name, double err) {
        std::snprintf(buf, sizeof buf, "  %-22s residual % .3e   %s\n", name, err,
                      std::abs(err) < 1e-6 ? "ok" : "FAIL");
        os << buf;
    };
    idrow("e12 = 4 e11 - 1/2", r.err_e12_identity);
    idrow("e22 = 16 e11 - 2", r.err_e22_identity);
    idrow("e12 / d = 2", r.err_e12_over_d);
    idrow("lambda_star = 8", r.err_lambda_star);
    std::snprintf(buf, sizeof buf, "  %-22s %s\n", "d > 0",
                  r.computed.d > 0 ? "ok" : "FAIL");
    os << buf;
    os << (r.identities_ok ? "identities: PASS\n" : "identities: FAIL\n");
    return os.str();
}

GridAgreementResult phase_grid_agreement(const GridSpec& g, double lo, double hi, int res,
                                         double eps_b, int jobs) {
    GridAgreementResult out;
    const EdgeConstants e = edge_constants(g);
    out.points.resize(static_cast<std::size_t>(res) * res);
    std::atomic<int> next{0};
    auto worker = [&]() {
        Gram2Evaluator gram(g);  // per-thread cache
        for (;;) {
            const int idx = next.fetch_add(1);
            if (idx >= res * res) break;
            const int i = idx / res, j = idx % res;
            GridPointCheck pt;
            pt.lambda = lo + (hi - lo) * i / (res - 1);
            pt.mu = lo + (hi - lo) * j / (res - 1);
            pt.cm = c_minus(pt.lambda, pt.mu, e);
            pt.cp = c_plus(pt.lambda, pt.mu, e);
            pt.label = classify(pt.lambda, pt.mu, e, eps_b);
            if (pt.label.on_boundary()) {
                pt.skipped_boundary = true;
            } else {
                auto det = [&](double z) { return det2(pt.lambda, pt.mu, gram(z)); };
                const ZeroReport zr = find_zeros(det, EssentialBand{0.0, 8.0});
                pt.det_below = static_cast<int>(zr.below.size());
                pt.det_above = static_cast<int>(zr.above.size());
                pt.agrees = pt.det_below == static_cast<int>(pt.label.k_minus) &&
                            pt.det_above == static_cast<int>(pt.label.k_plus) &&
                            pt.det_below <= 2 && pt.det_above <= 2;
            }
            out.points[idx] = pt;
        }
    };
    std::vector<std::thread> pool;
    const int nthreads = std::max(1, jobs);
    for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();

    std::set<std::pair<int, int>> seen;
    for (const auto& pt : out.points) {
        if (pt.skipped_boundary) {
            ++out.n_boundary;
            continue;
        }
        ++out.n_checked;
        if (!pt.agrees) ++out.n_disagree;
        seen.insert({static_cast<int>(pt.label.k_minus), static_cast<int>(pt.label.k_plus)});
    }
    std::set<int> ks_minus, ks_plus;
    for (auto& [a, b] : seen) {
        ks_minus.insert(a);
        ks_plus.insert(b);
    }
    out.all_classes_realized = ks_minus == std::set<int>{0, 1, 2} &&
                               ks_plus == std::set<int>{0, 1, 2};
    return out;
}

const std::vector<RegionSample>& region_samples() {
    static const std::vector<RegionSample> samples = {
        {"G00", {0.0, 0.0, 0.0}, 0, 0},   {"G01", {0.0, 20.0, 0.0}, 0, 1},
        {"G02", {0.0, 20.0, 8.0}, 0, 2},  {"G10", {0.0, -20.0, 0.0}, 1, 0},
        {"G11", {0.0, 14.0, -10.0}, 1, 1}, {"G20", {0.0, -20.0, -8.0}, 2, 0},
    };
    return samples;
}

LowerBoundResult verify_lower_bounds(const GridSpec& g, int k_per_axis, int box_l,
                                     bool with_oracle, int jobs) {
    LowerBoundResult out;
    std::vector<Quasimomentum> ks;
    for (int i = 0; i < k_per_axis; ++i)
        for (int j = 0; j < k_per_axis; ++j)
            ks.emplace_back(M_PI * i / k_per_axis, M_PI * j / k_per_axis);

    struct Job {
        const RegionSample* s;
        Quasimomentum K;
    };
    std::vector<Job> jobs_list;
    for (const auto& s : region_samples())
        for (const auto& K : ks) jobs_list.push_back({&s, K});

    std::vector<LowerBoundFailure> failures(jobs_list.size());
    std::vector<char> failed(jobs_list.size(), 0);
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            const std::size_t idx = next.fetch_add(1);
            if (idx >= jobs_list.size()) break;
            const Job& job = jobs_list[idx];
            const auto [nb, na] = count_bound_states(job.s->c, job.K, g);
            LowerBoundFailure f;
            f.region = job.s->name;
            f.c = job.s->c;
            f.K = job.K;
            f.need_below = job.s->alpha;
            f.need_above = job.s->beta;
            f.det_below = nb;
            f.det_above = na;
            bool bad = nb < job.s->alpha || na < job.s->beta;
            if (bad) f.route = "det7";
            if (with_oracle && !bad) {
                const EssentialBand band = essential_band(job.K);
                const OracleReport r =
                    count_outside(eigensolve(build_matrix(job.s->c, job.K, {box_l})), band, 1e-4);
                f.oracle_below = r.n_below;
                f.oracle_above = r.n_above;
                if (r.n_below < job.s->alpha || r.n_above < job.s->beta) {
                    bad = true;
                    f.route = "oracle";
                }
            }
            if (bad) {
                failures[idx] = f;
                failed[idx] = 1;
            }
        }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < std::max(1, jobs); ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    out.n_checked = static_cast<int>(jobs_list.size());
    for (std::size_t i = 0; i < jobs_list.size(); ++i)
        if (failed[i]) out.failures.push_back(failures[i]);
    return out;
}

ConstancyResult verify_region_constancy(const GridSpec& g) {
    ConstancyResult out;
    Gram2Evaluator gram(g);
    const EssentialBand band{0.0, 8.0};
    const EdgeConstants e = edge_constants(g);
    struct Path {
        const char* name;
        bool above;           // which side the component constrains
        int expected;
        std::vector<std::pair<double, double>> pts;
    };
    std::vector<Path> paths;
    {
        Path p{"C1+ path (lambda=12, mu 0..5)", true, 1, {}};
        for (int i = 0; i <= 10; ++i) p.pts.emplace_back(12.0, 0.5 * i);
        paths.push_back(p);
        Path q{"C2+ path (mu=8, lambda 12..28)", true, 2, {}};
        for (int i = 0; i <= 8; ++i) q.pts.emplace_back(12.0 + 2.0 * i, 8.0);
        paths.push_back(q);
        Path r{"C1- path (lambda=-12, mu -5..0)", false, 1, {}};
        for (int i = 0; i <= 10; ++i) r.pts.emplace_back(-12.0, -5.0 + 0.5 * i);
        paths.push_back(r);
        Path s{"C2- path (mu=-8, lambda -28..-12)", false, 2, {}};
        for (int i = 0; i <= 8; ++i) s.pts.emplace_back(-28.0 + 2.0 * i, -8.0);
        paths.push_back(s);
        Path t{"C0+ path (lambda 0..6, mu=0)", true, 0, {}};
        for (int i = 0; i <= 6; ++i) t.pts.emplace_back(1.0 * i, 0.0);
        paths.push_back(t);
    }
    std::ostringstream detail;
    for (const auto& path : paths) {
        for (const auto& [lam, mu] : path.pts) {
            const RegionLabel lbl = classify(lam, mu, e);
            const ComponentIndex k = path.above ? lbl.k_plus : lbl.k_minus;
            if (static_cast<int>(k) != path.expected) {
                out.ok = false;
                detail << path.name << ": classification left the component at (" << lam << ", "
                       << mu << ")\n";
                continue;
            }
            auto det = [&](double z) { return det2(lam, mu, gram(z)); };
            const ZeroReport zr = find_zeros(det, band);
            const int count = path.above ? static_cast<int>(zr.above.size())
                                         : static_cast<int>(zr.below.size());
            if (count != path.expected) {
                out.ok = false;
                detail << path.name << ": count " << count << " != " << path.expected << " at ("
                       << lam << ", " << mu << ")\n";
            }
        }
    }
    out.detail = detail.str();
    return out;
}

}  // namespace boundstate
