#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Core>

#include "bprttd/errors.hpp"

namespace bprttd {

struct Dims {
    int n = 0; // first mode (e.g. demographic groups)
    int t = 0; // second mode (e.g. months)
    int k = 0; // third mode (e.g. outcome categories)

    std::int64_t cells() const { return std::int64_t(n) * t * k; }
    bool operator==(const Dims&) const = default;
};

struct Ranks {
    int h1 = 0;
    int h2 = 0;

    int components() const { return h1 * h2; }
    bool operator==(const Ranks&) const = default;
};

// Tensor-train cores of the residual rate.  Layouts, all row-major with the
// last listed index fastest:
//   core1: n x h1            entry (i, h1)
//   core2: t x h1 x h2       entry (t, h1, h2)  -- h2 fastest, so the row
//                            (t, h1, :) dots contiguously with core3 row k
//   core3: k x h2            entry (k, h2)
// Every entry must stay strictly positive and finite.
struct TTCores {
    int n = 0, t = 0, k = 0;
    Ranks ranks;
    std::vector<double> core1;
    std::vector<double> core2;
    std::vector<double> core3;

    TTCores() = default;
    TTCores(Dims dims, Ranks r)
        : n(dims.n), t(dims.t), k(dims.k), ranks(r),
          core1(std::size_t(dims.n) * r.h1, 1.0),
          core2(std::size_t(dims.t) * r.h1 * r.h2, 1.0),
          core3(std::size_t(dims.k) * r.h2, 1.0) {}

    double& c1(int i, int h1) { return core1[std::size_t(i) * ranks.h1 + h1]; }
    double c1(int i, int h1) const { return core1[std::size_t(i) * ranks.h1 + h1]; }
    double& c2(int ti, int h1, int h2) {
        return core2[(std::size_t(ti) * ranks.h1 + h1) * ranks.h2 + h2];
    }
    double c2(int ti, int h1, int h2) const {
        return core2[(std::size_t(ti) * ranks.h1 + h1) * ranks.h2 + h2];
    }
    double& c3(int ki, int h2) { return core3[std::size_t(ki) * ranks.h2 + h2]; }
    double c3(int ki, int h2) const { return core3[std::size_t(ki) * ranks.h2 + h2]; }

    Dims dims() const { return {n, t, k}; }

    // throws data_error on a non-positive or non-finite entry or a shape mismatch
    void validate() const;
};

// Observed counts, dense n x t x k, k fastest.
struct CountTensor {
    Dims dims;
    std::vector<std::int64_t> counts;

    CountTensor() = default;
    explicit CountTensor(Dims d) : dims(d), counts(std::size_t(d.cells()), 0) {}

    std::int64_t cell_index(int i, int ti, int ki) const {
        return (std::int64_t(i) * dims.t + ti) * dims.k + ki;
    }
    std::int64_t& y(int i, int ti, int ki) { return counts[cell_index(i, ti, ki)]; }
    std::int64_t y(int i, int ti, int ki) const { return counts[cell_index(i, ti, ki)]; }

    std::int64_t total() const;
    void validate() const;
};

// Per-cell covariate vectors and multiplicative offsets.  A zero offset marks
// a structural zero; the likelihood and all Gibbs sums absorb it by
// multiplication, no mask is kept.
struct DesignData {
    Dims dims;
    int p = 0;                      // covariate dimension
    std::vector<double> covariates; // n x t x k x p, p fastest
    std::vector<double> offsets;    // n x t x k, k fastest

    DesignData() = default;
    DesignData(Dims d, int p_)
        : dims(d), p(p_),
          covariates(std::size_t(d.cells()) * p_, 0.0),
          offsets(std::size_t(d.cells()), 1.0) {}

    std::int64_t cell_index(int i, int ti, int ki) const {
        return (std::int64_t(i) * dims.t + ti) * dims.k + ki;
    }
    const double* x(int i, int ti, int ki) const {
        return covariates.data() + std::size_t(cell_index(i, ti, ki)) * p;
    }
    double* x(int i, int ti, int ki) {
        return covariates.data() + std::size_t(cell_index(i, ti, ki)) * p;
    }
    double& u(int i, int ti, int ki) { return offsets[cell_index(i, ti, ki)]; }
    double u(int i, int ti, int ki) const { return offsets[cell_index(i, ti, ki)]; }

    void validate() const;
};

/// Residual rate of one cell: the bilinear form lambda1_i' Lambda2_t lambda3_k.
double rate_at(const TTCores& cores, int i, int t, int k);

/// Residual rates of every cell (n x t x k, k fastest).  Contracts core2 with
/// core3 once and reuses the t x k x h1 intermediate for all i.
std::vector<double> residual_rates(const TTCores& cores);

/// Linear predictor x_{itk} . beta.
double linear_predictor(const DesignData& data, const Eigen::VectorXd& beta,
                        int i, int t, int k);

/// Full Poisson rate u * exp(x.beta) * rate_at.  Exactly 0 when the offset is
/// 0.  Throws numeric_error when exp overflows, naming the cell and the
/// offending linear predictor.
double full_rate(const TTCores& cores, const Eigen::VectorXd& beta,
                 const DesignData& data, int i, int t, int k);

/// Number of free parameters of the tensor-train representation:
/// n*h1 + t*h1*h2 + k*h2.
std::int64_t param_count(Dims dims, Ranks ranks);

} // namespace bprttd
