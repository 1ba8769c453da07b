#ifndef PUFKIT_RNG_HPP
#define PUFKIT_RNG_HPP

#include <cstdint>
#include <random>
#include <span>
#include <string_view>

namespace pufkit {

/**
 * Deterministic seeded random source. Every stochastic operation in the
 * library takes an explicit Rng; there is no hidden entropy.
 *
 * The engine is std::mt19937_64, whose output sequence is fixed by the
 * C++ standard, so identical seeds give identical streams on every
 * platform. Distributions are implemented by hand below for the same
 * reason (the standard does not pin down <random> distribution
 * algorithms).
 *
 * Streams are splittable: fork(label) derives a child seed as the first
 * 8 bytes of SHA-256(parent seed || label), a pure function of the parent
 * seed and the label. Not shareable across threads; fork one per worker.
 */
class Rng {
public:
    explicit Rng(std::uint64_t seed) : seed_(seed), engine_(seed) {}

    std::uint64_t seed() const { return seed_; }

    // Child stream derived from (parent seed, label); independent of how
    // much of the parent stream has been consumed.
    Rng fork(std::string_view label) const;

    std::uint64_t next_u64() { return engine_(); }

    int bit() { return static_cast<int>(engine_() >> 63); }

    // Uniform in [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) { return uniform() < p; }

    // Uniform integer in [0, bound) without modulo bias.
    std::uint64_t uniform_index(std::uint64_t bound);

    // Standard normal via Box-Muller.
    double normal();

    void fill_bytes(std::span<std::uint8_t> out);

private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
};

} // namespace pufkit

#endif // PUFKIT_RNG_HPP
