#ifndef PUFKIT_DEVICE_HPP
#define PUFKIT_DEVICE_HPP

#include "pufkit/bitstring.hpp"
#include "pufkit/challenge_set.hpp"

#include <cstdint>
#include <memory>
#include <string_view>

namespace pufkit {

enum class FamilyId {
    ToyMajority,
    TableMrt,
    Arbiter,
    KeyedHash,
    QuantumEur,
    ConstantCuf, // non-PUF fixture: constant raw read-out
};

std::string_view family_name(FamilyId id);

/**
 * Abstract simulated physical-function device. evaluate() is the raw
 * physical read-out stage PF1 and is the only surface attack code may
 * touch. Families with measurement collapse or read-out noise mutate
 * internal state on evaluate, so a device requires exclusive access;
 * run independent instances in parallel instead.
 *
 * god_mode_snapshot() deep-copies the device, hidden state included.
 * It exists for tests and the evaluator (stateful quantum devices are
 * consumed by measurement, so checks run on copies); attack strategies
 * must never call it, which the instrumentation counters below let
 * tests enforce.
 */
class PufDevice {
public:
    virtual ~PufDevice() = default;

    virtual FamilyId family() const = 0;
    virtual std::size_t challenge_length() const = 0;
    virtual std::size_t raw_secret_length() const = 0;
    virtual const ChallengeSet& foreseen_challenges() const = 0;

    BitString evaluate(const BitString& challenge) {
        ++eval_count_;
        return do_evaluate(challenge);
    }

    std::unique_ptr<PufDevice> god_mode_snapshot() const {
        ++god_access_count_;
        return clone();
    }

    // Instrumentation: how often the public read-out and the god-mode
    // surfaces were used on this instance.
    std::uint64_t evaluate_count() const { return eval_count_; }
    std::uint64_t god_access_count() const { return god_access_count_; }

protected:
    PufDevice() = default;
    // Copies (snapshots) start with fresh counters.
    PufDevice(const PufDevice&) : PufDevice() {}
    PufDevice& operator=(const PufDevice&) = delete;

    virtual BitString do_evaluate(const BitString& challenge) = 0;
    // Deep copy with fresh instrumentation counters.
    virtual std::unique_ptr<PufDevice> clone() const = 0;

    // Families call this from their god-mode state accessors.
    void note_god_access() const { ++god_access_count_; }

private:
    std::uint64_t eval_count_ = 0;
    mutable std::uint64_t god_access_count_ = 0;
};

} // namespace pufkit

#endif // PUFKIT_DEVICE_HPP
