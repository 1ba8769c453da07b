#include "pufkit/rng.hpp"

#include "pufkit/errors.hpp"
#include "pufkit/hashing.hpp"

#include <cmath>
#include <numbers>
#include <vector>

namespace pufkit {

Rng Rng::fork(std::string_view label) const {
    std::vector<std::uint8_t> input;
    input.reserve(8 + label.size());
    for (int i = 7; i >= 0; --i) {
        input.push_back(static_cast<std::uint8_t>(seed_ >> (8 * i)));
    }
    input.insert(input.end(), label.begin(), label.end());
    const Digest256 d = sha256(input);
    std::uint64_t child = 0;
    for (int i = 0; i < 8; ++i) {
        child = (child << 8) | d[static_cast<std::size_t>(i)];
    }
    return Rng(child);
}

std::uint64_t Rng::uniform_index(std::uint64_t bound) {
    if (bound == 0) {
        throw InvalidParams("uniform_index bound must be positive");
    }
    // Rejection sampling: drop the incomplete top chunk of the 2^64 range.
    const std::uint64_t rem = (0 - bound) % bound; // == 2^64 mod bound
    if (rem == 0) {
        return engine_() % bound;
    }
    const std::uint64_t threshold = 0 - rem; // == 2^64 - rem
    std::uint64_t r;
    do {
        r = engine_();
    } while (r >= threshold);
    return r % bound;
}

double Rng::normal() {
    double u1 = uniform();
    const double u2 = uniform();
    if (u1 <= 0.0) u1 = 0x1.0p-53;
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

void Rng::fill_bytes(std::span<std::uint8_t> out) {
    std::size_t i = 0;
    while (i < out.size()) {
        std::uint64_t block = engine_();
        for (int b = 0; b < 8 && i < out.size(); ++b, ++i) {
            out[i] = static_cast<std::uint8_t>(block >> (8 * (7 - b)));
        }
    }
}

} // namespace pufkit
