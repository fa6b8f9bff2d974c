#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "rsmm/matrix.hpp"

namespace rsmm {

struct ExperimentConfig {
    std::string matrix_a_path;
    std::string matrix_b_path;
    std::string generator = "gaussian";
    std::size_t da = 16;
    std::size_t db = 16;
    std::size_t m = 256;
    std::size_t rank = 1;
    std::size_t n = 0;          // 0: derive from eps via required_n
    std::size_t trials = 100;
    double delta = 0.1;
    double eps = 0.0;
    double k_override = 0.0;    // bound mode: use this k instead of matrices
    std::uint64_t base_seed = 0;
    std::string output_path;
    std::vector<double> t_grid;
    std::size_t threads = 1;
    bool identity_rotation = false;  // coherence: baseline only
};

struct TrialRecord {
    std::size_t trial_index;
    std::uint64_t seed;
    double rel_spectral_error;
    double rel_frobenius_error;
    double bound_value;
    bool exceeded;
    double mu_observed;
};

struct Theorem1Summary {
    double k;
    std::size_t m_padded;
    std::size_t n;
    double bound;
    double exceedance_fraction;
    double mean_error;
    double q50, q90, q99;
    bool criteria_met;  // exceedance_fraction <= delta
    std::vector<TrialRecord> records;
};

struct Lemma2Point {
    double t;
    double bound;
    double exceedance_fraction;
    double target;  // e^{-t}
};

struct Lemma2Summary {
    double k_z;
    std::size_t m_padded;
    std::vector<double> observed;  // per-trial max column sqnorm
    std::vector<Lemma2Point> points;
    bool criteria_met;
};

struct CoherenceSummary {
    CoherenceReport baseline;
    std::vector<double> rotated_mu;  // one per draw, sorted ascending
    double threshold;                // coherence threshold at config delta
    double k;
    std::size_t m_padded;
};

struct SketchTiming {
    double rotate_seconds;
    double accumulate_seconds;
};

// Derived seeds, documented so partial reruns reproduce individual pieces:
// matrix A uses base_seed ^ kSeedSaltA, matrix B uses base_seed ^ kSeedSaltB,
// trial i uses base_seed + i.
inline constexpr std::uint64_t kSeedSaltA = 0xa5a5a5a5a5a5a5a5ull;
inline constexpr std::uint64_t kSeedSaltB = 0x5a5a5a5a5a5a5a5aull;

// Inputs per config: file paths win over the generator.
DenseMatrix resolve_matrix_a(const ExperimentConfig& cfg);
DenseMatrix resolve_matrix_b(const ExperimentConfig& cfg);

Theorem1Summary run_verify_theorem1(const ExperimentConfig& cfg);
Lemma2Summary run_verify_lemma2(const ExperimentConfig& cfg);
CoherenceSummary run_coherence(const ExperimentConfig& cfg);
SketchTiming run_sketch(const ExperimentConfig& cfg, DenseMatrix& out);

void write_trial_csv(std::ostream& out, const std::vector<TrialRecord>& records);
void write_lemma2_csv(std::ostream& out, const Lemma2Summary& summary);

}  // namespace rsmm
