#include "pufkit/challenge_set.hpp"

#include "pufkit/errors.hpp"
#include "pufkit/rng.hpp"

#include <cmath>

namespace pufkit {

ChallengeSet ChallengeSet::all_strings(std::size_t bit_length) {
    if (bit_length == 0) {
        throw InvalidParams("challenge length must be >= 1");
    }
    ChallengeSet s;
    s.exhaustive_ = true;
    s.bit_length_ = bit_length;
    return s;
}

ChallengeSet ChallengeSet::explicit_list(std::vector<BitString> challenges) {
    if (challenges.empty()) {
        throw InvalidParams("explicit challenge set must be non-empty");
    }
    ChallengeSet s;
    s.exhaustive_ = false;
    s.bit_length_ = challenges.front().size();
    for (const auto& c : challenges) {
        if (c.size() != s.bit_length_ || c.empty()) {
            throw InvalidParams("challenges must share one nonzero length");
        }
        if (!s.index_.insert(c).second) {
            throw InvalidParams("challenges must be distinct");
        }
    }
    s.items_ = std::move(challenges);
    return s;
}

bool ChallengeSet::contains(const BitString& c) const {
    if (c.size() != bit_length_) return false;
    if (exhaustive_) return true;
    return index_.count(c) > 0;
}

double ChallengeSet::count() const {
    if (exhaustive_) return std::ldexp(1.0, static_cast<int>(bit_length_));
    return static_cast<double>(items_.size());
}

BitString ChallengeSet::sample(Rng& rng) const {
    if (exhaustive_) return BitString::random(bit_length_, rng);
    return items_[rng.uniform_index(items_.size())];
}

std::vector<BitString> ChallengeSet::sample_distinct(std::size_t n, Rng& rng) const {
    std::vector<BitString> out;
    out.reserve(n);
    if (!exhaustive_) {
        if (n > items_.size()) {
            throw NotEnoughChallenges("asked for more challenges than the set holds");
        }
        // Partial Fisher-Yates over an index vector.
        std::vector<std::size_t> idx(items_.size());
        for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
        for (std::size_t i = 0; i < n; ++i) {
            const std::size_t j = i + rng.uniform_index(idx.size() - i);
            std::swap(idx[i], idx[j]);
            out.push_back(items_[idx[i]]);
        }
        return out;
    }
    if (bit_length_ < 64 && n > (1ull << bit_length_)) {
        throw NotEnoughChallenges("asked for more challenges than 2^l");
    }
    std::unordered_set<BitString, BitStringHash> seen;
    while (out.size() < n) {
        BitString c = BitString::random(bit_length_, rng);
        if (seen.insert(c).second) out.push_back(std::move(c));
    }
    return out;
}

const std::vector<BitString>& ChallengeSet::items() const {
    if (exhaustive_) {
        throw InvalidParams("exhaustive challenge set has no explicit item list");
    }
    return items_;
}

} // namespace pufkit
