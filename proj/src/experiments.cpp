#include "rsmm/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <ostream>
#include <thread>

#include "rsmm/bounds.hpp"
#include "rsmm/generators.hpp"
#include "rsmm/matrix_io.hpp"
#include "rsmm/sketch.hpp"

namespace rsmm {
namespace {

// Trials are split into contiguous chunks; each writes its own slots, so the
// result is independent of the thread count.
void parallel_trials(std::size_t trials, std::size_t threads,
                     const std::function<void(std::size_t)>& body) {
    threads = std::max<std::size_t>(1, std::min(threads, trials));
    if (threads == 1) {
        for (std::size_t i = 0; i < trials; ++i) body(i);
        return;
    }
    std::vector<std::thread> pool;
    const std::size_t chunk = (trials + threads - 1) / threads;
    for (std::size_t w = 0; w < threads; ++w) {
        std::size_t lo = w * chunk, hi = std::min(trials, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([lo, hi, &body] {
            for (std::size_t i = lo; i < hi; ++i) body(i);
        });
    }
    for (auto& t : pool) t.join();
}

double quantile(std::vector<double> v, double p) {
    std::sort(v.begin(), v.end());
    const double pos = p * static_cast<double>(v.size() - 1);
    const std::size_t lo = static_cast<std::size_t>(pos);
    const std::size_t hi = std::min(lo + 1, v.size() - 1);
    const double frac = pos - static_cast<double>(lo);
    return v[lo] * (1.0 - frac) + v[hi] * frac;
}

void fmt17(std::ostream& out, double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    out << buf;
}

}  // namespace

DenseMatrix resolve_matrix_a(const ExperimentConfig& cfg) {
    if (!cfg.matrix_a_path.empty()) return load_matrix(cfg.matrix_a_path);
    return generate(cfg.generator, cfg.da, cfg.m, cfg.rank,
                    cfg.base_seed ^ kSeedSaltA);
}

DenseMatrix resolve_matrix_b(const ExperimentConfig& cfg) {
    if (!cfg.matrix_b_path.empty()) return load_matrix(cfg.matrix_b_path);
    return generate(cfg.generator, cfg.db, cfg.m, cfg.rank,
                    cfg.base_seed ^ kSeedSaltB);
}

Theorem1Summary run_verify_theorem1(const ExperimentConfig& cfg) {
    if (cfg.trials == 0) throw std::invalid_argument("verify-theorem1: trials must be >= 1");
    const DenseMatrix a = resolve_matrix_a(cfg);
    const DenseMatrix b = resolve_matrix_b(cfg);
    if (a.cols() != b.cols())
        throw std::invalid_argument("verify-theorem1: A and B column counts differ");

    const double k = stable_rank_k(a, b);
    const std::size_t m_padded = next_power_of_two(a.cols());
    std::size_t n = cfg.n;
    if (n == 0) {
        if (cfg.eps <= 0.0)
            throw std::invalid_argument("verify-theorem1: need --n or --eps");
        n = required_n(k, m_padded, cfg.delta, cfg.eps);
    }
    const double bound = theorem1_bound(k, m_padded, n, cfg.delta).relative_error_bound;

    const double norm_a = spectral_norm(a), norm_b = spectral_norm(b);
    const DenseMatrix exact = matmul_exact(a, b);
    const double exact_fro = frobenius_norm(a) * frobenius_norm(b);
    const DenseMatrix a_unit = scaled(a, 1.0 / norm_a);
    const DenseMatrix b_unit = scaled(b, 1.0 / norm_b);

    std::vector<TrialRecord> records(cfg.trials);
    parallel_trials(cfg.trials, cfg.threads, [&](std::size_t i) {
        const std::uint64_t seed = cfg.base_seed + i;
        auto [est, plan] = approx_matmul(a, b, n, seed);
        const DenseMatrix err = subtract(est, exact);
        const CoherenceReport coh =
            coherence(apply_rotation(a_unit, plan.rotation),
                      apply_rotation(b_unit, plan.rotation));
        TrialRecord rec;
        rec.trial_index = i;
        rec.seed = seed;
        rec.rel_spectral_error = spectral_norm(err) / (norm_a * norm_b);
        rec.rel_frobenius_error = frobenius_norm(err) / exact_fro;
        rec.bound_value = bound;
        rec.exceeded = rec.rel_spectral_error > bound;
        rec.mu_observed = coh.mu;
        records[i] = rec;
    });

    Theorem1Summary s;
    s.k = k;
    s.m_padded = m_padded;
    s.n = n;
    s.bound = bound;
    std::vector<double> errs(cfg.trials);
    std::size_t exceeded = 0;
    double sum = 0.0;
    for (std::size_t i = 0; i < cfg.trials; ++i) {
        errs[i] = records[i].rel_spectral_error;
        sum += errs[i];
        if (records[i].exceeded) ++exceeded;
    }
    s.exceedance_fraction =
        static_cast<double>(exceeded) / static_cast<double>(cfg.trials);
    s.mean_error = sum / static_cast<double>(cfg.trials);
    s.q50 = quantile(errs, 0.50);
    s.q90 = quantile(errs, 0.90);
    s.q99 = quantile(errs, 0.99);
    s.criteria_met = s.exceedance_fraction <= cfg.delta;
    s.records = std::move(records);
    return s;
}

Lemma2Summary run_verify_lemma2(const ExperimentConfig& cfg) {
    if (cfg.trials == 0) throw std::invalid_argument("verify-lemma2: trials must be >= 1");
    DenseMatrix z = resolve_matrix_a(cfg);
    const double norm_z = spectral_norm(z);
    if (norm_z == 0.0) throw std::domain_error("verify-lemma2: Z is the zero matrix");
    z = scaled(z, 1.0 / norm_z);
    const double fro = frobenius_norm(z);
    const double k_z = fro * fro;
    const std::size_t m_padded = next_power_of_two(z.cols());

    std::vector<double> observed(cfg.trials);
    parallel_trials(cfg.trials, cfg.threads, [&](std::size_t i) {
        RotationSpec rot = make_rotation(z.cols(), cfg.base_seed + i);
        DenseMatrix zt = apply_rotation(z, rot);
        double mx = 0.0;
        for (std::size_t c = 0; c < zt.cols(); ++c) {
            double s = 0.0;
            for (std::size_t r = 0; r < zt.rows(); ++r) s += zt(r, c) * zt(r, c);
            mx = std::max(mx, s);
        }
        observed[i] = mx;
    });

    Lemma2Summary s;
    s.k_z = k_z;
    s.m_padded = m_padded;
    s.observed = std::move(observed);
    std::vector<double> grid = cfg.t_grid;
    if (grid.empty()) grid = {std::log(20.0), std::log(100.0)};
    s.criteria_met = true;
    for (double t : grid) {
        Lemma2Point p;
        p.t = t;
        p.bound = lemma2_bound(k_z, m_padded, t);
        std::size_t exceeded = 0;
        for (double v : s.observed)
            if (v > p.bound) ++exceeded;
        p.exceedance_fraction =
            static_cast<double>(exceeded) / static_cast<double>(cfg.trials);
        p.target = std::exp(-t);
        if (p.exceedance_fraction > p.target) s.criteria_met = false;
        s.points.push_back(p);
    }
    return s;
}

CoherenceSummary run_coherence(const ExperimentConfig& cfg) {
    const DenseMatrix a = resolve_matrix_a(cfg);
    const DenseMatrix b = resolve_matrix_b(cfg);
    const double norm_a = spectral_norm(a), norm_b = spectral_norm(b);
    if (norm_a == 0.0 || norm_b == 0.0)
        throw std::domain_error("coherence: zero matrix input");
    const DenseMatrix a_unit = scaled(a, 1.0 / norm_a);
    const DenseMatrix b_unit = scaled(b, 1.0 / norm_b);

    CoherenceSummary s;
    s.baseline = coherence(a_unit, b_unit);
    s.k = stable_rank_k(a, b);
    s.m_padded = next_power_of_two(a.cols());
    s.threshold = coherence_threshold(s.k, s.m_padded, cfg.delta);
    if (!cfg.identity_rotation) {
        s.rotated_mu.resize(cfg.trials);
        parallel_trials(cfg.trials, cfg.threads, [&](std::size_t i) {
            RotationSpec rot = make_rotation(a.cols(), cfg.base_seed + i);
            s.rotated_mu[i] = coherence(apply_rotation(a_unit, rot),
                                        apply_rotation(b_unit, rot)).mu;
        });
        std::sort(s.rotated_mu.begin(), s.rotated_mu.end());
    }
    return s;
}

SketchTiming run_sketch(const ExperimentConfig& cfg, DenseMatrix& out) {
    const DenseMatrix a = resolve_matrix_a(cfg);
    const DenseMatrix b = resolve_matrix_b(cfg);
    if (cfg.n == 0) throw std::invalid_argument("sketch: n must be >= 1");
    using clock = std::chrono::steady_clock;

    const auto t0 = clock::now();
    RotationSpec rot = make_rotation(a.cols(), cfg.base_seed);
    DenseMatrix a_rot = apply_rotation(a, rot);
    DenseMatrix b_rot = apply_rotation(b, rot);
    const auto t1 = clock::now();
    SketchPlan plan = draw_plan(rot, cfg.n, cfg.base_seed ^ kSampleSeedSalt);
    out = sample_product(a_rot, b_rot, plan);
    const auto t2 = clock::now();

    SketchTiming timing;
    timing.rotate_seconds = std::chrono::duration<double>(t1 - t0).count();
    timing.accumulate_seconds = std::chrono::duration<double>(t2 - t1).count();
    return timing;
}

void write_trial_csv(std::ostream& out, const std::vector<TrialRecord>& records) {
    out << "trial_index,seed,rel_spectral_error,rel_frobenius_error,"
           "bound_value,exceeded,mu_observed\n";
    for (const auto& r : records) {
        out << r.trial_index << ',' << r.seed << ',';
        fmt17(out, r.rel_spectral_error);
        out << ',';
        fmt17(out, r.rel_frobenius_error);
        out << ',';
        fmt17(out, r.bound_value);
        out << ',' << (r.exceeded ? "true" : "false") << ',';
        fmt17(out, r.mu_observed);
        out << '\n';
    }
}

void write_lemma2_csv(std::ostream& out, const Lemma2Summary& summary) {
    out << "trial_index,max_col_sqnorm\n";
    for (std::size_t i = 0; i < summary.observed.size(); ++i) {
        out << i << ',';
        fmt17(out, summary.observed[i]);
        out << '\n';
    }
}

}  // namespace rsmm
