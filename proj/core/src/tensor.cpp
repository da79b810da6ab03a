#include "bprttd/tensor.hpp"

#include <cmath>
#include <string>

namespace bprttd {

namespace {

void check_index(const char* what, int v, int bound) {
    if (v < 0 || v >= bound) {
        throw data_error(std::string(what) + " index " + std::to_string(v) +
                         " out of range [0, " + std::to_string(bound) + ")");
    }
}

} // namespace

void TTCores::validate() const {
    if (n <= 0 || t <= 0 || k <= 0 || ranks.h1 <= 0 || ranks.h2 <= 0)
        throw data_error("TTCores: dimensions and ranks must be positive");
    if (core1.size() != std::size_t(n) * ranks.h1 ||
        core2.size() != std::size_t(t) * ranks.h1 * ranks.h2 ||
        core3.size() != std::size_t(k) * ranks.h2)
        throw data_error("TTCores: core shapes inconsistent with dims and ranks");
    auto check = [](const std::vector<double>& c, const char* name) {
        for (double v : c)
            if (!(v > 0.0) || !std::isfinite(v))
                throw data_error(std::string("TTCores: ") + name +
                                 " entry not strictly positive and finite");
    };
    check(core1, "core1");
    check(core2, "core2");
    check(core3, "core3");
}

std::int64_t CountTensor::total() const {
    std::int64_t s = 0;
    for (std::int64_t y : counts) s += y;
    return s;
}

void CountTensor::validate() const {
    if (dims.n <= 0 || dims.t <= 0 || dims.k <= 0)
        throw data_error("CountTensor: dimensions must be positive");
    if (std::int64_t(counts.size()) != dims.cells())
        throw data_error("CountTensor: count array size inconsistent with dims");
    for (std::int64_t y : counts)
        if (y < 0) throw data_error("CountTensor: negative count");
}

void DesignData::validate() const {
    if (dims.n <= 0 || dims.t <= 0 || dims.k <= 0 || p <= 0)
        throw data_error("DesignData: dimensions and covariate count must be positive");
    if (std::int64_t(offsets.size()) != dims.cells() ||
        std::int64_t(covariates.size()) != dims.cells() * p)
        throw data_error("DesignData: array sizes inconsistent with dims");
    for (double v : offsets)
        if (!(v >= 0.0) || !std::isfinite(v))
            throw data_error("DesignData: offsets must be nonnegative and finite");
    for (double v : covariates)
        if (!std::isfinite(v))
            throw data_error("DesignData: covariates must be finite");
}

double rate_at(const TTCores& cores, int i, int t, int k) {
    check_index("i", i, cores.n);
    check_index("t", t, cores.t);
    check_index("k", k, cores.k);
    const int h1n = cores.ranks.h1, h2n = cores.ranks.h2;
    const double* c2 = cores.core2.data() + std::size_t(t) * h1n * h2n;
    const double* c3 = cores.core3.data() + std::size_t(k) * h2n;
    const double* c1 = cores.core1.data() + std::size_t(i) * h1n;
    double acc = 0.0;
    for (int h1 = 0; h1 < h1n; ++h1) {
        double inner = 0.0;
        const double* row = c2 + std::size_t(h1) * h2n;
        for (int h2 = 0; h2 < h2n; ++h2) inner += row[h2] * c3[h2];
        acc += c1[h1] * inner;
    }
    return acc;
}

std::vector<double> residual_rates(const TTCores& cores) {
    const int n = cores.n, t = cores.t, k = cores.k;
    const int h1n = cores.ranks.h1, h2n = cores.ranks.h2;
    // v[(t*k + k)*h1] = sum_h2 core2(t,h1,h2) * core3(k,h2)
    std::vector<double> v(std::size_t(t) * k * h1n);
    for (int ti = 0; ti < t; ++ti) {
        const double* c2 = cores.core2.data() + std::size_t(ti) * h1n * h2n;
        for (int ki = 0; ki < k; ++ki) {
            const double* c3 = cores.core3.data() + std::size_t(ki) * h2n;
            double* out = v.data() + (std::size_t(ti) * k + ki) * h1n;
            for (int h1 = 0; h1 < h1n; ++h1) {
                double inner = 0.0;
                const double* row = c2 + std::size_t(h1) * h2n;
                for (int h2 = 0; h2 < h2n; ++h2) inner += row[h2] * c3[h2];
                out[h1] = inner;
            }
        }
    }
    std::vector<double> rates(std::size_t(n) * t * k);
    for (int i = 0; i < n; ++i) {
        const double* c1 = cores.core1.data() + std::size_t(i) * h1n;
        for (std::int64_t tk = 0; tk < std::int64_t(t) * k; ++tk) {
            const double* vv = v.data() + std::size_t(tk) * h1n;
            double acc = 0.0;
            for (int h1 = 0; h1 < h1n; ++h1) acc += c1[h1] * vv[h1];
            rates[std::size_t(i) * t * k + tk] = acc;
        }
    }
    return rates;
}

double linear_predictor(const DesignData& data, const Eigen::VectorXd& beta,
                        int i, int t, int k) {
    const double* x = data.x(i, t, k);
    double eta = 0.0;
    for (int p = 0; p < data.p; ++p) eta += x[p] * beta[p];
    return eta;
}

double full_rate(const TTCores& cores, const Eigen::VectorXd& beta,
                 const DesignData& data, int i, int t, int k) {
    if (beta.size() != data.p)
        throw data_error("full_rate: beta length does not match covariate dimension");
    const double u = data.u(i, t, k);
    if (u == 0.0) return 0.0; // structural zero
    const double eta = linear_predictor(data, beta, i, t, k);
    const double mu = u * std::exp(eta) * rate_at(cores, i, t, k);
    if (!std::isfinite(mu)) {
        throw numeric_error("full_rate: non-finite rate at cell (" +
                            std::to_string(i) + ", " + std::to_string(t) + ", " +
                            std::to_string(k) + "), linear predictor " +
                            std::to_string(eta));
    }
    return mu;
}

std::int64_t param_count(Dims dims, Ranks ranks) {
    return std::int64_t(dims.n) * ranks.h1 +
           std::int64_t(dims.t) * ranks.h1 * ranks.h2 +
           std::int64_t(dims.k) * ranks.h2;
}

} // namespace bprttd
