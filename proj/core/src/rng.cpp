#include "bprttd/rng.hpp"

#include <cassert>
#include <cmath>
#include <numbers>

namespace bprttd {

std::uint64_t Rng::mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

Rng Rng::keyed(std::uint64_t master, std::uint64_t a, std::uint64_t b,
               std::uint64_t c) {
    constexpr std::uint64_t golden = 0x9E3779B97F4A7C15ull;
    std::uint64_t s = mix(master + golden);
    s = mix(s ^ (a + golden));
    s = mix(s ^ (b + 0xD1B54A32D192ED03ull));
    s = mix(s ^ (c + 0x8CB92BA72F3D8DD7ull));
    Rng r(0);
    r.state_ = s;
    return r;
}

std::uint64_t Rng::next_u64() {
    state_ += 0x9E3779B97F4A7C15ull;
    return mix(state_);
}

double Rng::uniform() {
    // 53 random bits shifted into (0, 1)
    return (double(next_u64() >> 11) + 0.5) * 0x1.0p-53;
}

double Rng::normal() {
    const double u1 = uniform();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) *
           std::cos(2.0 * std::numbers::pi * u2);
}

double Rng::gamma(double shape, double rate) {
    assert(shape > 0.0 && rate > 0.0);
    if (shape < 1.0) {
        // boost: Ga(a) = Ga(a+1) * U^{1/a}
        const double u = uniform();
        return gamma(shape + 1.0, rate) * std::pow(u, 1.0 / shape);
    }
    const double d = shape - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
        double x, t;
        do {
            x = normal();
            t = 1.0 + c * x;
        } while (t <= 0.0);
        const double v = t * t * t;
        const double u = uniform();
        const double x2 = x * x;
        if (u < 1.0 - 0.0331 * x2 * x2) return d * v / rate;
        if (std::log(u) < 0.5 * x2 + d * (1.0 - v + std::log(v))) return d * v / rate;
    }
}

std::int64_t Rng::poisson_knuth(double mean) {
    const double limit = std::exp(-mean);
    std::int64_t k = 0;
    double prod = 1.0;
    do {
        ++k;
        prod *= uniform();
    } while (prod > limit);
    return k - 1;
}

std::int64_t Rng::poisson_ptrs(double mean) {
    // transformed rejection with squeeze (Hormann 1993)
    const double b = 0.931 + 2.53 * std::sqrt(mean);
    const double a = -0.059 + 0.02483 * b;
    const double inv_alpha = 1.1239 + 1.1328 / (b - 3.4);
    const double vr = 0.9277 - 3.6224 / (b - 2.0);
    const double lmu = std::log(mean);
    for (;;) {
        const double u = uniform() - 0.5;
        const double v = uniform();
        const double us = 0.5 - std::fabs(u);
        const double kf = std::floor((2.0 * a / us + b) * u + mean + 0.43);
        if (us >= 0.07 && v <= vr) return std::int64_t(kf);
        if (kf < 0.0 || (us < 0.013 && v > us)) continue;
        if (std::log(v * inv_alpha / (a / (us * us) + b)) <=
            kf * lmu - mean - std::lgamma(kf + 1.0))
            return std::int64_t(kf);
    }
}

std::int64_t Rng::poisson(double mean) {
    assert(mean >= 0.0);
    if (mean <= 0.0) return 0;
    if (mean < 10.0) return poisson_knuth(mean);
    return poisson_ptrs(mean);
}

std::int64_t Rng::binomial_inversion(std::int64_t n, double p) {
    const double q = 1.0 - p;
    const double s = p / q;
    const double a = double(n + 1) * s;
    double r = std::exp(double(n) * std::log(q)); // q^n, safe while n p is small
    std::int64_t x = 0;
    double u = uniform();
    for (;;) {
        if (u <= r) return x;
        u -= r;
        ++x;
        if (x > n) return n; // guards accumulated round-off in the tail
        r *= a / double(x) - s;
    }
}

std::int64_t Rng::binomial_btrs(std::int64_t n, double p) {
    // transformed rejection (Hormann 1993), valid for n*p >= 10, p <= 0.5
    const double q = 1.0 - p;
    const double spq = std::sqrt(double(n) * p * q);
    const double b = 1.15 + 2.53 * spq;
    const double a = -0.0873 + 0.0248 * b + 0.01 * p;
    const double c = double(n) * p + 0.5;
    const double vr = 0.92 - 4.2 / b;
    const double alpha = (2.83 + 5.1 / b) * spq;
    const double lpq = std::log(p / q);
    const double m = std::floor(double(n + 1) * p);
    const double h = std::lgamma(m + 1.0) + std::lgamma(double(n) - m + 1.0);
    for (;;) {
        const double u = uniform() - 0.5;
        const double v = uniform();
        const double us = 0.5 - std::fabs(u);
        const double kf = std::floor((2.0 * a / us + b) * u + c);
        if (kf < 0.0 || kf > double(n)) continue;
        if (us >= 0.07 && v <= vr) return std::int64_t(kf);
        if (std::log(v * alpha / (a / (us * us) + b)) <=
            h - std::lgamma(kf + 1.0) - std::lgamma(double(n) - kf + 1.0) +
                (kf - m) * lpq)
            return std::int64_t(kf);
    }
}

std::int64_t Rng::binomial(std::int64_t n, double p) {
    if (n <= 0 || p <= 0.0) return 0;
    if (p >= 1.0) return n;
    if (p > 0.5) return n - binomial(n, 1.0 - p);
    if (double(n) * p < 10.0) return binomial_inversion(n, p);
    return binomial_btrs(n, p);
}

void Rng::multinomial(std::int64_t n, std::span<const double> weights,
                      std::span<std::int64_t> out) {
    assert(weights.size() == out.size());
    const int m = int(weights.size());
    for (int j = 0; j < m; ++j) out[j] = 0;
    if (n <= 0 || m == 0) return;
    double rest = 0.0;
    for (double w : weights) rest += w;
    std::int64_t remaining = n;
    for (int j = 0; j + 1 < m; ++j) {
        if (remaining == 0) return;
        if (!(rest > weights[j])) { // all remaining mass sits here
            out[j] = remaining;
            return;
        }
        const double pj = weights[j] / rest;
        out[j] = binomial(remaining, pj);
        remaining -= out[j];
        rest -= weights[j];
    }
    out[m - 1] = remaining;
}

} // namespace bprttd
