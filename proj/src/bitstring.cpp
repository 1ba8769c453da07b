#include "pufkit/bitstring.hpp"

#include "pufkit/errors.hpp"
#include "pufkit/rng.hpp"

#include <sstream>

namespace pufkit {

BitString BitString::from_string(std::string_view s) {
    BitString out;
    out.bits_.reserve(s.size());
    for (char c : s) {
        if (c != '0' && c != '1') {
            throw ParseError("bit string may contain only '0' and '1'");
        }
        out.bits_.push_back(c == '1' ? 1 : 0);
    }
    return out;
}

BitString BitString::from_bytes(std::span<const std::uint8_t> bytes, std::size_t bit_length) {
    const std::size_t need = (bit_length + 7) / 8;
    if (bytes.size() != need) {
        throw ParseError("byte buffer does not match bit length");
    }
    BitString out;
    out.bits_.resize(bit_length);
    for (std::size_t i = 0; i < bit_length; ++i) {
        out.bits_[i] = (bytes[i / 8] >> (7 - i % 8)) & 1;
    }
    // Pad bits beyond bit_length must be zero so the encoding is canonical.
    for (std::size_t i = bit_length; i < need * 8; ++i) {
        if ((bytes[i / 8] >> (7 - i % 8)) & 1) {
            throw ParseError("nonzero padding bits in packed bit string");
        }
    }
    return out;
}

BitString BitString::from_hex(std::string_view hex, std::size_t bit_length) {
    const std::size_t need = (bit_length + 7) / 8;
    if (hex.size() != need * 2) {
        throw ParseError("hex string does not match bit length");
    }
    std::vector<std::uint8_t> bytes(need, 0);
    auto nibble = [](char c) -> int {
        if (c >= '0' && c <= '9') return c - '0';
        if (c >= 'a' && c <= 'f') return c - 'a' + 10;
        if (c >= 'A' && c <= 'F') return c - 'A' + 10;
        throw ParseError("invalid hex digit");
    };
    for (std::size_t i = 0; i < need; ++i) {
        bytes[i] = static_cast<std::uint8_t>((nibble(hex[2 * i]) << 4) | nibble(hex[2 * i + 1]));
    }
    return from_bytes(bytes, bit_length);
}

BitString BitString::from_uint(std::uint64_t value, std::size_t length) {
    if (length > 64) {
        throw InvalidParams("from_uint supports at most 64 bits");
    }
    BitString out;
    out.bits_.resize(length);
    for (std::size_t i = 0; i < length; ++i) {
        out.bits_[i] = (value >> (length - 1 - i)) & 1;
    }
    return out;
}

BitString BitString::random(std::size_t length, Rng& rng) {
    BitString out;
    out.bits_.resize(length);
    for (std::size_t i = 0; i < length; ++i) {
        out.bits_[i] = static_cast<std::uint8_t>(rng.bit());
    }
    return out;
}

std::size_t BitString::popcount() const {
    std::size_t n = 0;
    for (auto b : bits_) n += b;
    return n;
}

std::size_t BitString::hamming_distance(const BitString& other) const {
    if (size() != other.size()) {
        throw LengthMismatch("hamming_distance requires equal lengths");
    }
    std::size_t n = 0;
    for (std::size_t i = 0; i < bits_.size(); ++i) {
        n += bits_[i] ^ other.bits_[i];
    }
    return n;
}

BitString BitString::operator^(const BitString& other) const {
    if (size() != other.size()) {
        throw LengthMismatch("xor requires equal lengths");
    }
    BitString out;
    out.bits_.resize(size());
    for (std::size_t i = 0; i < bits_.size(); ++i) {
        out.bits_[i] = bits_[i] ^ other.bits_[i];
    }
    return out;
}

BitString BitString::concat(const BitString& other) const {
    BitString out = *this;
    out.bits_.insert(out.bits_.end(), other.bits_.begin(), other.bits_.end());
    return out;
}

BitString BitString::slice(std::size_t offset, std::size_t length) const {
    if (offset + length > size()) {
        throw InvalidParams("slice out of range");
    }
    BitString out;
    out.bits_.assign(bits_.begin() + static_cast<std::ptrdiff_t>(offset),
                     bits_.begin() + static_cast<std::ptrdiff_t>(offset + length));
    return out;
}

std::uint64_t BitString::to_uint() const {
    if (size() > 64) {
        throw InvalidParams("to_uint supports at most 64 bits");
    }
    std::uint64_t v = 0;
    for (auto b : bits_) v = (v << 1) | b;
    return v;
}

std::vector<std::uint8_t> BitString::to_bytes() const {
    std::vector<std::uint8_t> bytes((size() + 7) / 8, 0);
    for (std::size_t i = 0; i < bits_.size(); ++i) {
        if (bits_[i]) bytes[i / 8] |= static_cast<std::uint8_t>(1u << (7 - i % 8));
    }
    return bytes;
}

std::string BitString::to_string() const {
    std::string s;
    s.reserve(size());
    for (auto b : bits_) s.push_back(b ? '1' : '0');
    return s;
}

std::string BitString::to_hex() const {
    static const char* digits = "0123456789abcdef";
    std::string s;
    for (std::uint8_t byte : to_bytes()) {
        s.push_back(digits[byte >> 4]);
        s.push_back(digits[byte & 0xf]);
    }
    return s;
}

std::size_t BitStringHash::operator()(const BitString& b) const {
    // FNV-1a over the packed bytes, mixed with the bit length so "01" and
    // "010" hash apart.
    std::uint64_t h = 14695981039346656037ull;
    auto mix = [&h](std::uint8_t byte) {
        h ^= byte;
        h *= 1099511628211ull;
    };
    for (std::uint8_t byte : b.to_bytes()) mix(byte);
    std::uint64_t len = b.size();
    for (int i = 0; i < 8; ++i) mix(static_cast<std::uint8_t>(len >> (8 * i)));
    return static_cast<std::size_t>(h);
}

} // namespace pufkit
