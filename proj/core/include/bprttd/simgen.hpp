#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "bprttd/sampler.hpp"
#include "bprttd/tensor.hpp"

namespace bprttd {

// Synthetic-study design.  Truth (beta and cores) is drawn once per seed and
// shared by every replication; covariates, offsets and counts are redrawn per
// replication on independent streams.
struct SimDesign {
    Dims dims{20, 20, 20};
    Ranks ranks{5, 5};
    int covariates = 5;        // regressors excluding the intercept
    bool intercept = true;
    double beta_mean = 0.0;
    double beta_var = 0.1;
    double core_shape = 1.0;   // all three families share one generator law
    double core_rate = 2.8;
    double offset_shape = 5.0;
    double offset_rate = 1.0;
    bool unit_cores = false;   // pins the truth cores at 1 (plain-regression data)
    int replications = 1;
    std::uint64_t seed = 1;

    int total_p() const { return covariates + (intercept ? 1 : 0); }
    void validate() const;
};

struct SimData {
    Eigen::VectorXd beta;   // truth
    TTCores cores;          // truth
    DesignData data;
    CountTensor counts;
};

/// One replication's dataset; deterministic in (design.seed, replication).
SimData generate(const SimDesign& design, int replication = 0);

// Absolute-percentage-error summary over one parameter family.  Elements with
// |truth| < 1e-12 are excluded from the summary and counted instead.
struct ApeSummary {
    double min = 0, q1 = 0, median = 0, mean = 0, q3 = 0, max = 0;
    std::int64_t excluded = 0;
    std::int64_t n = 0;
};

ApeSummary score_ape(std::span<const double> truth,
                     std::span<const double> estimate);

struct ApeTable {
    ApeSummary beta;
    ApeSummary core1;
    ApeSummary core2;
    ApeSummary core3;
};

struct RecoveryReport {
    SimDesign design;
    std::vector<ApeTable> per_replication;
    // cross-replication mean and sd of the posterior means, elementwise
    std::vector<double> beta_post_mean, beta_post_sd;
    std::vector<double> core1_post_mean, core1_post_sd;
    std::vector<double> core2_post_mean, core2_post_sd;
    std::vector<double> core3_post_mean, core3_post_sd;
    Eigen::VectorXd beta_truth;
    TTCores cores_truth;
};

/// generate -> run_chain -> score_ape for every replication, then aggregates
/// posterior means across replications.
RecoveryReport recovery_report(const SimDesign& design, const PriorConfig& prior,
                               const McmcConfig& cfg);

} // namespace bprttd
