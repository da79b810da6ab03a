#pragma once

#include <cstdint>
#include <span>

namespace bprttd {

// Counter-style pseudo-random stream (splitmix64).  Streams are derived from
// a master seed plus up to three key words, which keeps every draw
// addressable: the allocation of cell c at iteration n always sees the same
// stream no matter how work is split across threads.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(mix(seed)) {}

    // stream keyed by (master, a, b, c); identical keys give identical streams
    static Rng keyed(std::uint64_t master, std::uint64_t a, std::uint64_t b = 0,
                     std::uint64_t c = 0);

    std::uint64_t next_u64();

    /// uniform on the open interval (0, 1)
    double uniform();

    /// standard normal (Box-Muller, two uniforms per draw)
    double normal();

    /// gamma in shape-rate parameterization, mean = shape/rate
    /// (Marsaglia-Tsang squeeze; shape < 1 boosted through shape + 1)
    double gamma(double shape, double rate);

    std::int64_t poisson(double mean);

    std::int64_t binomial(std::int64_t n, double p);

    /// exact multinomial split of n over weights (need not be normalized);
    /// the components always sum to n
    void multinomial(std::int64_t n, std::span<const double> weights,
                     std::span<std::int64_t> out);

private:
    static std::uint64_t mix(std::uint64_t z);
    std::int64_t binomial_inversion(std::int64_t n, double p);
    std::int64_t binomial_btrs(std::int64_t n, double p);
    std::int64_t poisson_knuth(double mean);
    std::int64_t poisson_ptrs(double mean);

    std::uint64_t state_;
};

} // namespace bprttd
