#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>

#include <CLI11.hpp>

#include "rsmm/bounds.hpp"
#include "rsmm/experiments.hpp"
#include "rsmm/kernels.hpp"
#include "rsmm/matrix_io.hpp"
#include "rsmm/oracle.hpp"
#include "rsmm/rotate.hpp"

namespace {

// Exit codes: 0 ok, 1 criteria violated, 2 usage/config error, 3 I/O error.
constexpr int kExitOk = 0;
constexpr int kExitCriteria = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

void add_common_flags(CLI::App* cmd, rsmm::ExperimentConfig& cfg) {
    cmd->add_option("--a", cfg.matrix_a_path, "Path to matrix A (text format)");
    cmd->add_option("--b", cfg.matrix_b_path, "Path to matrix B (text format)");
    cmd->add_option("--gen", cfg.generator,
                    "Generator: gaussian, low-rank, spiky, coordinate");
    cmd->add_option("--da", cfg.da, "Rows of generated A");
    cmd->add_option("--db", cfg.db, "Rows of generated B");
    cmd->add_option("--m", cfg.m, "Columns of generated matrices");
    cmd->add_option("--rank", cfg.rank, "Rank parameter for low-rank/spiky");
    cmd->add_option("--n", cfg.n, "Sample count");
    cmd->add_option("--trials", cfg.trials, "Number of Monte Carlo trials");
    cmd->add_option("--delta", cfg.delta, "Failure probability delta");
    cmd->add_option("--eps", cfg.eps, "Target relative error");
    cmd->add_option("--seed", cfg.base_seed, "Base seed");
    cmd->add_option("--out", cfg.output_path, "Output path (matrix or CSV)");
    cmd->add_option("--t-grid", cfg.t_grid, "Tail parameters t (list of reals)")
        ->delimiter(',');
    cmd->add_option("--threads", cfg.threads, "Worker threads for trials");
}

void save_csv(const std::string& path, const std::function<void(std::ostream&)>& fn) {
    if (path.empty()) return;
    std::ofstream out(path);
    if (!out) throw rsmm::ParseError(path + ": cannot open for writing");
    fn(out);
    if (!out) throw rsmm::ParseError(path + ": write failed");
}

int cmd_sketch(const rsmm::ExperimentConfig& cfg) {
    rsmm::DenseMatrix out(1, 1);
    rsmm::SketchTiming timing = rsmm::run_sketch(cfg, out);
    if (!cfg.output_path.empty()) rsmm::save_matrix(cfg.output_path, out);
    std::printf("sketch: %zux%zu estimate, n=%zu\n", out.rows(), out.cols(), cfg.n);
    std::printf("  rotation    %.6f s\n", timing.rotate_seconds);
    std::printf("  accumulate  %.6f s\n", timing.accumulate_seconds);
    return kExitOk;
}

int cmd_bound(const rsmm::ExperimentConfig& cfg) {
    double k = cfg.k_override;
    std::size_t m = cfg.m;
    if (k <= 0.0) {
        rsmm::DenseMatrix a = rsmm::resolve_matrix_a(cfg);
        rsmm::DenseMatrix b = rsmm::resolve_matrix_b(cfg);
        k = rsmm::stable_rank_k(a, b);
        m = a.cols();
    }
    const std::size_t m_padded = rsmm::next_power_of_two(m);
    std::printf("k        = %.6g\n", k);
    std::printf("m_padded = %zu\n", m_padded);
    if (cfg.n > 0) {
        auto res = rsmm::theorem1_bound(k, m_padded, cfg.n, cfg.delta);
        std::printf("relative error bound (n=%zu, delta=%g): %.6g\n", cfg.n,
                    cfg.delta, res.relative_error_bound);
    }
    if (cfg.eps > 0.0) {
        std::size_t n_star = rsmm::required_n(k, m_padded, cfg.delta, cfg.eps);
        std::printf("required n for eps=%g at delta=%g: %zu\n", cfg.eps,
                    cfg.delta, n_star);
    }
    if (cfg.n == 0 && cfg.eps <= 0.0) {
        std::fprintf(stderr, "bound: need --n and/or --eps\n");
        return kExitUsage;
    }
    return kExitOk;
}

int cmd_verify_theorem1(const rsmm::ExperimentConfig& cfg) {
    rsmm::Theorem1Summary s = rsmm::run_verify_theorem1(cfg);
    save_csv(cfg.output_path,
             [&](std::ostream& o) { rsmm::write_trial_csv(o, s.records); });
    std::printf("verify-theorem1: trials=%zu n=%zu k=%.6g m_padded=%zu\n",
                s.records.size(), s.n, s.k, s.m_padded);
    std::printf("  bound            %.6g\n", s.bound);
    std::printf("  mean error       %.6g\n", s.mean_error);
    std::printf("  error quantiles  50%%=%.6g 90%%=%.6g 99%%=%.6g\n", s.q50,
                s.q90, s.q99);
    std::printf("  exceedance       %.6g (delta %.6g)\n", s.exceedance_fraction,
                cfg.delta);
    return s.criteria_met ? kExitOk : kExitCriteria;
}

int cmd_verify_lemma2(const rsmm::ExperimentConfig& cfg) {
    rsmm::Lemma2Summary s = rsmm::run_verify_lemma2(cfg);
    save_csv(cfg.output_path,
             [&](std::ostream& o) { rsmm::write_lemma2_csv(o, s); });
    std::printf("verify-lemma2: trials=%zu k_Z=%.6g m_padded=%zu\n",
                s.observed.size(), s.k_z, s.m_padded);
    std::printf("  %12s %12s %12s %12s\n", "t", "threshold", "exceedance",
                "e^-t");
    for (const auto& p : s.points)
        std::printf("  %12.6g %12.6g %12.6g %12.6g\n", p.t, p.bound,
                    p.exceedance_fraction, p.target);
    return s.criteria_met ? kExitOk : kExitCriteria;
}

int cmd_coherence(const rsmm::ExperimentConfig& cfg) {
    rsmm::CoherenceSummary s = rsmm::run_coherence(cfg);
    std::printf("coherence: k=%.6g m_padded=%zu threshold(delta=%g)=%.6g\n",
                s.k, s.m_padded, cfg.delta, s.threshold);
    std::printf("  baseline  mu=%.6g k_a=%.6g k_b=%.6g\n", s.baseline.mu,
                s.baseline.k_a, s.baseline.k_b);
    if (!s.rotated_mu.empty()) {
        const auto& v = s.rotated_mu;
        std::printf("  rotated mu over %zu draws: min=%.6g median=%.6g max=%.6g\n",
                    v.size(), v.front(), v[v.size() / 2], v.back());
    }
    return kExitOk;
}

int cmd_moments(const rsmm::ExperimentConfig& cfg) {
    rsmm::DenseMatrix a = rsmm::resolve_matrix_a(cfg);
    rsmm::DenseMatrix b = rsmm::resolve_matrix_b(cfg);
    rsmm::DenseMatrix q = rsmm::scaled(a, 1.0 / rsmm::spectral_norm(a));
    rsmm::DenseMatrix r = rsmm::scaled(b, 1.0 / rsmm::spectral_norm(b));
    auto report = rsmm::oracle::exact_moments(q, r);
    auto checks = rsmm::oracle::verify_lemma1_inequalities(report);
    std::printf("moments: m=%zu mu=%.6g k_a=%.6g k_b=%.6g\n", q.cols(),
                report.mu, report.k_a, report.k_b);
    bool all = true;
    for (const auto& c : checks) {
        std::printf("  [%s] %-36s lhs=%.9g rhs=%.9g\n",
                    c.holds ? "PASS" : "FAIL", c.name.c_str(), c.lhs, c.rhs);
        all = all && c.holds;
    }
    return all ? kExitOk : kExitCriteria;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Randomized approximate matrix multiplication via sign-flipped "
                 "Hadamard rotation and uniform column sampling"};
    app.require_subcommand(1);

    rsmm::ExperimentConfig cfg;
    std::string backend = "auto";
    app.add_option("--backend", backend, "Kernel backend: auto, scalar, avx2, neon");
    app.set_config("--config", "", "Read key=value defaults from a file; flags override");

    auto* sketch = app.add_subcommand("sketch", "Compute the sketched product");
    auto* bound = app.add_subcommand("bound", "Evaluate the error bound / invert to n");
    bound->add_option("--k", cfg.k_override, "Stable-rank proxy k (skips matrices)");
    auto* vt1 = app.add_subcommand("verify-theorem1",
                                   "Monte Carlo check of the error bound");
    auto* vl2 = app.add_subcommand("verify-lemma2",
                                   "Monte Carlo check of the coherence tail bound");
    auto* coh = app.add_subcommand("coherence", "Coherence before/after rotation");
    coh->add_flag("--identity-rotation", cfg.identity_rotation,
                  "Report the unrotated baseline only");
    auto* mom = app.add_subcommand("moments",
                                   "Exact moment report and inequality table");
    for (auto* cmd : {sketch, bound, vt1, vl2, coh, mom})
        add_common_flags(cmd, cfg);

    CLI11_PARSE(app, argc, argv);

    try {
        if (backend == "auto")
            rsmm::kernels::select_backend(rsmm::kernels::Backend::Auto);
        else if (backend == "scalar")
            rsmm::kernels::select_backend(rsmm::kernels::Backend::Scalar);
        else if (backend == "avx2")
            rsmm::kernels::select_backend(rsmm::kernels::Backend::Avx2);
        else if (backend == "neon")
            rsmm::kernels::select_backend(rsmm::kernels::Backend::Neon);
        else {
            std::fprintf(stderr, "unknown backend '%s'\n", backend.c_str());
            return kExitUsage;
        }

        if (sketch->parsed()) return cmd_sketch(cfg);
        if (bound->parsed()) return cmd_bound(cfg);
        if (vt1->parsed()) return cmd_verify_theorem1(cfg);
        if (vl2->parsed()) return cmd_verify_lemma2(cfg);
        if (coh->parsed()) return cmd_coherence(cfg);
        if (mom->parsed()) return cmd_moments(cfg);
        return kExitUsage;
    } catch (const rsmm::ParseError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitIo;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitUsage;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitIo;
    }
}
