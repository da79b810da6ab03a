#pragma once

#include <Eigen/Core>

#include "bprttd/tensor.hpp"

namespace bprttd {

struct GlmOptions {
    int max_iterations = 100;
    double score_tol = 1e-8;   // max |score component|
    double rel_tol = 1e-10;    // relative log-likelihood change
};

struct GlmFit {
    Eigen::VectorXd beta_hat;
    Eigen::MatrixXd covariance; // (X'WX)^-1 at beta_hat, W = diag(mu)
    double loglik = 0.0;
    bool converged = false;
    int iterations = 0;
    double score_norm = 0.0;    // max |score component| at exit
    std::string message;        // diagnostics when converged is false
};

/// Poisson regression by iteratively reweighted least squares with the log
/// link and log-offset.  Cells with offset 0 and count 0 are skipped; offset 0
/// with a positive count is rejected.  The covariance is returned even on
/// non-convergence so callers can still build a proposal from it.
GlmFit fit_glm(const CountTensor& counts, const DesignData& data,
               const GlmOptions& options = {});

struct LogLik {
    double value = 0.0;
    bool finite = true; // false iff some cell has rate 0 with a positive count
};

/// Poisson log-likelihood including the log(y!) term, so values are
/// comparable across models.  Pass cores = nullptr for the unit residual rate
/// (plain regression).  Never throws on overflow; a non-finite rate is
/// reported through the finite flag.
LogLik loglik_poisson(const Eigen::VectorXd& beta, const TTCores* cores,
                      const CountTensor& counts, const DesignData& data,
                      int nthreads = 1);

} // namespace bprttd
