#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace fibereit {

/// Counter-based deterministic random source. A stream is fully specified by
/// its 64-bit seed; draws are fixed-width integer mixes of (seed, counter),
/// so two instances with the same seed produce identical sequences on every
/// platform. Distributions are implemented here rather than with <random>
/// because the standard distributions are implementation-defined.
class CounterRng {
  public:
    explicit CounterRng(std::uint64_t seed) : seed_(seed) {}

    /// Independent child stream; used to give parallel runs their own
    /// deterministic sources.
    CounterRng derive(std::uint64_t index) const {
        return CounterRng(mix(seed_ ^ 0x94d049bb133111ebULL, index + 1));
    }

    std::uint64_t next_u64() { return mix(seed_, counter_++); }

    /// Uniform in [0, 1) with 53-bit resolution.
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Standard normal via Box-Muller (no caching so the draw count stays
    /// a pure function of call count).
    double normal() {
        double u1 = uniform();
        while (u1 == 0.0) u1 = uniform();
        double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * 3.14159265358979323846 * u2);
    }

    /// Exact Poisson sample. Knuth multiplication below lambda = 30,
    /// recursive halving above (sum of Poissons is Poisson).
    std::uint64_t poisson(double lambda) {
        if (lambda < 0.0) throw std::invalid_argument("poisson: negative rate");
        if (lambda == 0.0) return 0;
        std::uint64_t total = 0;
        while (lambda > 30.0) {
            double half = lambda / 2.0;
            total += poisson_knuth(half);
            lambda -= half;
        }
        return total + poisson_knuth(lambda);
    }

    std::uint64_t seed() const { return seed_; }

  private:
    std::uint64_t poisson_knuth(double lambda) {
        const double limit = std::exp(-lambda);
        std::uint64_t k = 0;
        double p = 1.0;
        do {
            ++k;
            p *= uniform();
        } while (p > limit);
        return k - 1;
    }

    static std::uint64_t mix(std::uint64_t seed, std::uint64_t ctr) {
        std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (ctr + 1);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    std::uint64_t seed_;
    std::uint64_t counter_ = 0;
};

}  // namespace fibereit
