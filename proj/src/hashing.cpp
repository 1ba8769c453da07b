#include "pufkit/hashing.hpp"

#include <openssl/hmac.h>
#include <openssl/sha.h>

#include <stdexcept>

namespace pufkit {

Digest256 sha256(std::span<const std::uint8_t> data) {
    Digest256 out{};
    SHA256(data.data(), data.size(), out.data());
    return out;
}

Digest256 hmac_sha256(std::span<const std::uint8_t> key,
                      std::span<const std::uint8_t> message) {
    Digest256 out{};
    unsigned int len = 0;
    if (HMAC(EVP_sha256(), key.data(), static_cast<int>(key.size()),
             message.data(), message.size(), out.data(), &len) == nullptr ||
        len != out.size()) {
        throw std::runtime_error("HMAC-SHA-256 failed");
    }
    return out;
}

} // namespace pufkit
