#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Core>

#include "bprttd/glm.hpp"
#include "bprttd/rng.hpp"
#include "bprttd/tensor.hpp"

namespace bprttd {

// Gamma priors on the three core families (shape-rate, mean = shape/rate)
// and the variance of the zero-mean normal prior on each regression
// coefficient.
struct PriorConfig {
    double alpha_a = 1.0, alpha_b = 1.0; // core1
    double beta_a = 1.0, beta_b = 2.0;   // core2
    double eps_a = 1.0, eps_b = 1.0;     // core3
    double sigma2 = 0.1;                 // prior variance of each beta_p

    void validate() const;
};

// Marginal statistics of the latent component counts.  The full five-way
// latent array is never materialized; these three reductions are all the
// gamma full conditionals need.
struct LatentStats {
    Dims dims;
    Ranks ranks;
    std::vector<std::int64_t> s1; // n x h1        sum over (t, k, h2)
    std::vector<std::int64_t> s2; // t x h1 x h2   sum over (i, k)
    std::vector<std::int64_t> s3; // k x h2        sum over (i, t, h1)

    LatentStats() = default;
    LatentStats(Dims d, Ranks r)
        : dims(d), ranks(r),
          s1(std::size_t(d.n) * r.h1, 0),
          s2(std::size_t(d.t) * r.h1 * r.h2, 0),
          s3(std::size_t(d.k) * r.h2, 0) {}

    std::int64_t total1() const;
    std::int64_t total2() const;
    std::int64_t total3() const;
};

// Exposure sums that enter the gamma full-conditional rates.  The cell factor
// u * exp(x.beta) varies per cell and sits inside every sum.
struct Exposures {
    std::vector<double> e1; // n x h1
    std::vector<double> e2; // t x h1 x h2
    std::vector<double> e3; // k x h2
};

// Running state of the adaptive proposal for beta.
struct AdaptState {
    Eigen::VectorXd mean_run;   // running mean of all beta samples
    Eigen::MatrixXd cov_run;    // running sample covariance (n-1 denominator)
    Eigen::MatrixXd sigma_fixed;// fixed covariance from the GLM fit
    double p_mix = 0.05;        // probability of proposing from the fixed component
    std::int64_t n = 0;         // samples absorbed so far
    std::int64_t accepts = 0;
    std::int64_t fixed_fallbacks = 0; // times cov_run was unusable and the fixed component stood in

    AdaptState() = default;
    AdaptState(int p, const Eigen::MatrixXd& sigma, double pmix)
        : mean_run(Eigen::VectorXd::Zero(p)),
          cov_run(Eigen::MatrixXd::Zero(p, p)),
          sigma_fixed(sigma), p_mix(pmix),
          m2_(Eigen::MatrixXd::Zero(p, p)) {}

    Eigen::MatrixXd m2_; // Welford accumulator behind cov_run
};

struct McmcConfig {
    std::int64_t iterations = 10000;
    std::int64_t burnin = 3000;
    std::int64_t thin = 1;
    double p_mix = 0.05;
    std::int64_t adapt_warmup = -1; // -1: 2 * P
    int nthreads = 1;
    bool fix_cores_at_unit = false; // pins every core entry at 1 (plain regression chain)

    void validate() const;
};

struct ChainState {
    Eigen::VectorXd beta;
    TTCores cores;
    AdaptState adapt;
    std::uint64_t master_seed = 0;
    std::int64_t iter = 0;
};

struct ChainOutput {
    Dims dims;
    Ranks ranks;
    int p = 0;
    std::uint64_t seed = 0;
    std::int64_t iterations = 0, burnin = 0, thin = 1;

    Eigen::MatrixXd beta_draws;              // retained x p
    std::vector<std::vector<double>> core1_draws;
    std::vector<std::vector<double>> core2_draws;
    std::vector<std::vector<double>> core3_draws;
    std::vector<double> loglik_trace;        // model log-likelihood at each retained draw
    std::vector<std::int64_t> draw_iters;    // iteration number of each retained draw

    double accept_rate = 0.0;                // post-warmup acceptance for beta
    std::int64_t accepts = 0, proposals = 0; // over the whole run
    std::int64_t fixed_fallbacks = 0;
    GlmFit glm;                              // baseline fit used for init and Sigma

    std::int64_t retained() const { return std::int64_t(beta_draws.rows()); }
    Eigen::VectorXd beta_mean() const;
    std::vector<double> core1_mean() const;
    std::vector<double> core2_mean() const;
    std::vector<double> core3_mean() const;
};

// Identifies the stream family a keyed Rng draws from; see Rng::keyed.
namespace stream {
inline constexpr std::uint64_t init_cores = 1;
inline constexpr std::uint64_t allocate = 2;
inline constexpr std::uint64_t core_updates = 3;
inline constexpr std::uint64_t mh = 4;
inline constexpr std::uint64_t sim_truth = 10;
inline constexpr std::uint64_t sim_data = 11;
} // namespace stream

/// Latent component probabilities of one cell, flattened (h1, h2) with h2
/// fastest.  Entries sum to 1; numerators are max-normalized before the
/// division, with a log-space fallback if a product underflows.
std::vector<double> compute_pi(const TTCores& cores, int i, int t, int k);

/// One multinomial thinning sweep: splits every positive count into latent
/// components and accumulates the three marginal statistics.  Per-cell
/// streams are keyed by (seed, iter, cell), so the result does not depend on
/// nthreads.
LatentStats allocate_latent(const CountTensor& counts, const TTCores& cores,
                            std::uint64_t seed, std::uint64_t iter,
                            int nthreads = 1);

/// Cell weights u * exp(x.beta) for every cell.  Throws numeric_error on a
/// non-finite weight when strict, otherwise reports it through ok.
std::vector<double> cell_weights(const Eigen::VectorXd& beta,
                                 const DesignData& data, int nthreads,
                                 bool strict, bool* ok = nullptr);

/// All three exposure sums at the supplied beta and cores.
Exposures exposure_sums(const Eigen::VectorXd& beta, const TTCores& cores,
                        const DesignData& data, int nthreads = 1);

// Per-family exposure sums against precomputed cell weights; used by the
// sweep so each family sees the freshest cores.
void exposure_core1(const std::vector<double>& w, const TTCores& cores,
                    std::vector<double>& e1, int nthreads);
void exposure_core2(const std::vector<double>& w, const TTCores& cores,
                    std::vector<double>& e2, int nthreads);
void exposure_core3(const std::vector<double>& w, const TTCores& cores,
                    std::vector<double>& e3, int nthreads);

/// Gamma full-conditional draws, entry (i,h1) ~ Ga(alpha_a + s1, alpha_b + e1).
void update_core1(TTCores& cores, const LatentStats& stats,
                  const std::vector<double>& e1, const PriorConfig& prior, Rng& rng);
void update_core2(TTCores& cores, const LatentStats& stats,
                  const std::vector<double>& e2, const PriorConfig& prior, Rng& rng);
void update_core3(TTCores& cores, const LatentStats& stats,
                  const std::vector<double>& e3, const PriorConfig& prior, Rng& rng);

/// Draw from the two-component Gaussian mixture proposal centered at beta:
/// (1-p) N(beta, 2.38^2 cov_run / d) + p N(beta, 0.1^2 sigma_fixed / d).
/// Only the fixed component is used while n <= warmup or when cov_run has no
/// Cholesky factor (counted in fixed_fallbacks).
Eigen::VectorXd propose_beta(const Eigen::VectorXd& beta, AdaptState& adapt,
                             std::int64_t warmup, Rng& rng);

/// Metropolis step for beta under the zero-mean normal prior.  The proposal
/// is symmetric so only likelihood and prior terms enter the ratio; a
/// non-finite proposal log-likelihood is auto-rejected.
struct MhResult {
    bool accepted = false;
    double loglik = 0.0; // log-likelihood of the returned state
};
MhResult mh_accept_beta(Eigen::VectorXd& beta, const Eigen::VectorXd& proposal,
                        const CountTensor& counts, const DesignData& data,
                        const TTCores& cores, const PriorConfig& prior,
                        double loglik_current, Rng& rng, int nthreads = 1);

/// Rank-1 update of the running mean and covariance with one more sample.
void update_adaptation(AdaptState& adapt, const Eigen::VectorXd& new_beta);

/// Full Metropolis-within-Gibbs run.  Per iteration: latent allocation, the
/// three core family updates (exposures recomputed with the freshest values),
/// one MH step for beta, then adaptation.  Byte-reproducible from the seed
/// for any nthreads.  Pass a prefit GLM to skip the internal baseline fit.
ChainOutput run_chain(const CountTensor& counts, const DesignData& data,
                      Ranks ranks, const PriorConfig& prior,
                      const McmcConfig& cfg, std::uint64_t seed,
                      const GlmFit* prefit = nullptr);

} // namespace bprttd
