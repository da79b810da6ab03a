#pragma once

#include <string>
#include <vector>

#include "bprttd/postproc.hpp"
#include "bprttd/sampler.hpp"
#include "bprttd/simgen.hpp"
#include "bprttd/tensor.hpp"

namespace bprttd {

// Everything a run needs, assembled from a flat key=value config file plus
// command-line overrides.
struct RunConfig {
    int h1 = 6, h2 = 6;
    // prior defaults follow the data-scale configuration: shape
    // sqrt(1/(h1*h2)) * 20 with rate 20 for the first two families, (200, 200)
    // for the third, and prior variance 2 for the coefficients.  Negative
    // alpha_a / beta_a mean "derive from h1, h2".
    double alpha_a = -1, alpha_b = 20;
    double beta_a = -1, beta_b = 20;
    double eps_a = 200, eps_b = 200;
    double sigma2 = 2.0;
    std::int64_t iterations = 40000;
    std::int64_t burnin = 3000;
    std::int64_t thin = 1;
    double p_mix = 0.05;
    std::int64_t adapt_warmup = -1;
    std::uint64_t seed = 0;
    bool seed_set = false;
    int threads = 1;
    std::string data_path;
    std::string out_dir = ".";
    std::string mode; // fit | glm | simulate | score | cluster

    PriorConfig prior() const;   // resolves the derived shapes
    McmcConfig mcmc() const;
    // canonical key=value listing (stable order, no execution-environment
    // keys such as threads) and its FNV-1a hash, stamped into outputs
    std::string canonical() const;
    std::string config_hash() const;
};

struct LongData {
    CountTensor counts;
    DesignData data;
    std::vector<std::string> labels_i, labels_t, labels_k;
    std::vector<std::string> covariate_names;
};

/// Loads a long-format CSV, one row per cell: columns i,t,k,count, one or
/// more offset* columns (multiplied together), then covariates x1..xP.
/// Labels for i, t, k may be arbitrary strings; they map to dense indices in
/// first-appearance order and the mapping is preserved.  Every (i,t,k) cell
/// must be present exactly once.
LongData load_long_csv(const std::string& path);

/// Inverse of load_long_csv for simulated data; numbers are written with 17
/// significant digits so a round trip reproduces the tensors exactly.
void save_long_csv(const std::string& path, const CountTensor& counts,
                   const DesignData& data,
                   const std::vector<std::string>& meta_lines);

// metadata comment lines ("# key=value") shared by all output writers
std::vector<std::string> meta_lines(const RunConfig& cfg);

void write_summary_csv(const std::string& path, const PosteriorSummary& s,
                       const std::vector<std::string>& meta);
void write_samples_beta_csv(const std::string& path, const ChainOutput& chain,
                            const std::vector<std::string>& meta);
void write_samples_cores_csv(const std::string& path, const ChainOutput& chain,
                             const std::vector<std::string>& meta);
void write_loglik_csv(const std::string& path, const ChainOutput& chain,
                      double loglik_glm, double loglik_bprttd,
                      const std::vector<std::string>& meta);
void write_trajectories_csv(const std::string& path,
                            const std::vector<TrajectoryPoint>& rows,
                            const std::vector<std::string>& meta);
void write_truth_beta_csv(const std::string& path, const Eigen::VectorXd& beta,
                          const std::vector<std::string>& meta);
void write_truth_cores_csv(const std::string& path, const TTCores& cores,
                           const std::vector<std::string>& meta);
void write_ape_csv(const std::string& path, const ApeTable& table,
                   const std::vector<std::string>& meta);
void write_glm_csv(const std::string& path, const GlmFit& fit,
                   const std::vector<std::string>& covariate_names,
                   const std::vector<std::string>& meta);
void write_cluster_csv(const std::string& path, const PamResult& result,
                       const std::vector<std::string>& region_labels,
                       const std::vector<std::string>& meta);

// reads back files written by the writers above (comment lines skipped)
Eigen::VectorXd read_truth_beta_csv(const std::string& path);
TTCores read_truth_cores_csv(const std::string& path);
struct SummaryTable {
    std::vector<double> beta_mean;
    std::vector<double> core1_mean, core2_mean, core3_mean;
    Ranks ranks;
    int n = 0, t = 0, k = 0;
};
SummaryTable read_summary_means(const std::string& path);

} // namespace bprttd
