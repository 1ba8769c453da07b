#ifndef PUFKIT_BITSTRING_HPP
#define PUFKIT_BITSTRING_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pufkit {

class Rng;

/**
 * Fixed-length bit vector. Holds challenges C, raw secrets S_r, secrets S
 * and responses R.
 *
 * Bit 0 is the most significant bit: "1101" has bit(0) == 1 and bit(3) == 1.
 * Byte packing (to_bytes / from_bytes / hex) is MSB-first with the last byte
 * zero-padded on the low-order side, which is also the wire convention.
 *
 * Equality is bitwise and length-sensitive. A default-constructed BitString
 * is empty and only useful as a builder; all device and protocol surfaces
 * validate length >= 1.
 */
class BitString {
public:
    BitString() = default;
    explicit BitString(std::size_t length) : bits_(length, 0) {}

    // Parses "0101..." text.
    static BitString from_string(std::string_view s);
    // Unpacks bit_length bits from MSB-first bytes; trailing pad bits must be 0.
    static BitString from_bytes(std::span<const std::uint8_t> bytes, std::size_t bit_length);
    static BitString from_hex(std::string_view hex, std::size_t bit_length);
    // Low `length` bits of `value`, MSB-first.
    static BitString from_uint(std::uint64_t value, std::size_t length);
    static BitString random(std::size_t length, Rng& rng);

    std::size_t size() const { return bits_.size(); }
    bool empty() const { return bits_.empty(); }

    int bit(std::size_t i) const { return bits_[i]; }
    void set_bit(std::size_t i, int value) { bits_[i] = value ? 1 : 0; }
    void flip_bit(std::size_t i) { bits_[i] ^= 1; }
    void append_bit(int value) { bits_.push_back(value ? 1 : 0); }

    std::size_t popcount() const;
    std::size_t hamming_distance(const BitString& other) const;
    BitString operator^(const BitString& other) const;
    bool operator==(const BitString& other) const = default;

    BitString concat(const BitString& other) const;
    BitString slice(std::size_t offset, std::size_t length) const;

    // Value of the bits read MSB-first; length must be <= 64.
    std::uint64_t to_uint() const;

    std::vector<std::uint8_t> to_bytes() const;
    std::string to_string() const;
    std::string to_hex() const;

private:
    std::vector<std::uint8_t> bits_; // one bit per element, each 0 or 1
};

// Hash functor so BitString can key unordered containers.
struct BitStringHash {
    std::size_t operator()(const BitString& b) const;
};

} // namespace pufkit

#endif // PUFKIT_BITSTRING_HPP
