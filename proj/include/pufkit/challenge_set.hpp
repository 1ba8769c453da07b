#ifndef PUFKIT_CHALLENGE_SET_HPP
#define PUFKIT_CHALLENGE_SET_HPP

#include "pufkit/bitstring.hpp"

#include <cstddef>
#include <unordered_set>
#include <vector>

namespace pufkit {

class Rng;

/**
 * Descriptor of a device's foreseen challenge set M: either an explicit
 * list of challenges or "all bit strings of a given length". The
 * descriptor is public structure (attackers may enumerate and sample
 * from it); the secrets behind the challenges are not.
 */
class ChallengeSet {
public:
    static ChallengeSet all_strings(std::size_t bit_length);
    static ChallengeSet explicit_list(std::vector<BitString> challenges);

    std::size_t bit_length() const { return bit_length_; }
    bool is_exhaustive() const { return exhaustive_; }

    bool contains(const BitString& c) const;

    // Number of foreseen challenges; 2^l can exceed any integer type, so
    // the count is a real number.
    double count() const;

    // Uniformly random member.
    BitString sample(Rng& rng) const;

    // n distinct members, uniformly without replacement.
    // Throws NotEnoughChallenges if the set holds fewer than n.
    std::vector<BitString> sample_distinct(std::size_t n, Rng& rng) const;

    // Explicit lists only; in generation order (deterministic under the
    // originating seed).
    const std::vector<BitString>& items() const;

private:
    ChallengeSet() = default;

    bool exhaustive_ = false;
    std::size_t bit_length_ = 0;
    std::vector<BitString> items_;
    std::unordered_set<BitString, BitStringHash> index_;
};

} // namespace pufkit

#endif // PUFKIT_CHALLENGE_SET_HPP
