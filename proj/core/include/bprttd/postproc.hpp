#pragma once

#include <utility>
#include <vector>

#include <Eigen/Core>

#include "bprttd/sampler.hpp"

namespace bprttd {

/// Type-7 quantile (linear interpolation of order statistics) of a sorted
/// sample.
double quantile_type7(const std::vector<double>& sorted, double prob);

/// Two-sided normal critical value for the given interval level, e.g.
/// 0.95 -> 1.95996.
double normal_critical(double level);

struct ParamSummary {
    double mean = 0, sd = 0, lo = 0, hi = 0;
};

// -1 / 0 / +1: credible interval below zero, covering zero, above zero
enum class EffectSign : int { negative = -1, null_effect = 0, positive = 1 };

struct PosteriorSummary {
    double level = 0.95;
    std::vector<ParamSummary> beta;
    std::vector<EffectSign> beta_sign;
    std::vector<ParamSummary> core1, core2, core3;
    // prior means shape/rate, carried so summaries can be read against them
    double prior_mean_core1 = 0, prior_mean_core2 = 0, prior_mean_core3 = 0;
    double loglik_glm = 0;    // maximized baseline log-likelihood
    double loglik_bprttd = 0; // model log-likelihood at the posterior mean
};

/// Equal-tailed posterior summaries from the retained draws; needs at least
/// two of them.  When data are supplied the two comparison log-likelihoods
/// are filled in (baseline at its MLE, model at the posterior means).
PosteriorSummary summarize(const ChainOutput& chain, double level = 0.95,
                           const PriorConfig* prior = nullptr,
                           const CountTensor* counts = nullptr,
                           const DesignData* data = nullptr);

struct TrajectoryPoint {
    int i = 0, k = 0, t = 0;
    double observed = 0;
    double bprttd_mean = 0, bprttd_lo = 0, bprttd_hi = 0;
    double glm_mean = 0, glm_lo = 0, glm_hi = 0;
};

/// Fitted rate over t for selected (i, k) cells: pointwise posterior mean and
/// equal-tailed band from the draws, next to the baseline fit with its
/// delta-method band on the log scale.
std::vector<TrajectoryPoint> fitted_trajectories(
    const ChainOutput& chain, const CountTensor& counts, const DesignData& data,
    const std::vector<std::pair<int, int>>& cells, double level = 0.95);

struct PamResult {
    int k = 0;                      // cluster count of the reported fit
    std::vector<int> medoids;       // indices into the point list
    std::vector<int> assignment;    // per-point medoid position in medoids
    double objective = 0;           // total dissimilarity of the reported fit
    std::vector<int> k_candidates;
    std::vector<double> elbow;      // objective per candidate k
    int suggested_k = 0;            // knee of the elbow curve (advisory)
};

/// Classic PAM (BUILD then SWAP to a local optimum) for every candidate k
/// under Euclidean distance.  Reports the fit at chosen_k, or at the knee
/// suggestion when chosen_k <= 0; the user picks, the suggestion is advisory.
PamResult pam_cluster(const std::vector<std::vector<double>>& points,
                      const std::vector<int>& k_candidates, int chosen_k = -1);

/// Rearranges core-1 posterior means (n x h1, n = regions x genders x ages
/// with age fastest) into one row per region, features ordered (gender, age,
/// h1) with h1 fastest.
Eigen::MatrixXd core1_feature_matrix(const std::vector<double>& core1_mean,
                                     int n, int h1, int n_regions,
                                     int n_genders, int n_ages);

} // namespace bprttd
