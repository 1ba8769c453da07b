#ifndef PUFKIT_HASHING_HPP
#define PUFKIT_HASHING_HPP

#include <array>
#include <cstdint>
#include <span>
#include <vector>

namespace pufkit {

// Thin wrappers over the libcrypto one-shot primitives. All wire-visible
// constructions in this library (privacy amplification, PF3, keyed-hash
// family) are pinned bit-exactly to SHA-256 / HMAC-SHA-256.

using Digest256 = std::array<std::uint8_t, 32>;

Digest256 sha256(std::span<const std::uint8_t> data);

Digest256 hmac_sha256(std::span<const std::uint8_t> key,
                      std::span<const std::uint8_t> message);

} // namespace pufkit

#endif // PUFKIT_HASHING_HPP
