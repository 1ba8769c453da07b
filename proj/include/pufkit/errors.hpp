#ifndef PUFKIT_ERRORS_HPP
#define PUFKIT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace pufkit {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Two bit strings that must have equal length do not.
class LengthMismatch : public Error {
public:
    using Error::Error;
};

// A challenge was submitted that is not in the device's foreseen set.
class ChallengeNotForeseen : public Error {
public:
    using Error::Error;
};

// A quantum challenge addressed a register index >= N.
class IndexOutOfRange : public Error {
public:
    using Error::Error;
};

// Definition-1 check needs at least two sampled challenges.
class SampleTooSmall : public Error {
public:
    using Error::Error;
};

// Raw secret length is not divisible by the repetition factor.
class LengthNotDivisible : public Error {
public:
    using Error::Error;
};

// Requested amplification output exceeds the digest capacity.
class OutLenTooLarge : public Error {
public:
    using Error::Error;
};

// A parameter violates its documented invariant (zero lengths, even
// repetition factor, ...).
class InvalidParams : public Error {
public:
    using Error::Error;
};

// Training set smaller than the model dimension.
class InsufficientData : public Error {
public:
    using Error::Error;
};

// Evaluation parameters do not match the device family.
class ParamsMismatch : public Error {
public:
    using Error::Error;
};

// Enrollment asked for more distinct challenges than the foreseen set holds.
class NotEnoughChallenges : public Error {
public:
    using Error::Error;
};

// Every record of a CRP store has already been issued.
class StoreExhausted : public Error {
public:
    using Error::Error;
};

// Challenge is not present in the verifier's store.
class UnknownChallenge : public Error {
public:
    using Error::Error;
};

// Challenge exists but was never issued (or was already consumed).
class NotIssued : public Error {
public:
    using Error::Error;
};

// Wire frame violates the framing rules.
class MalformedFrame : public Error {
public:
    using Error::Error;
};

// Transport read/write did not complete within the deadline.
class Timeout : public Error {
public:
    using Error::Error;
};

// File or stream contents could not be parsed.
class ParseError : public Error {
public:
    using Error::Error;
};

} // namespace pufkit

#endif // PUFKIT_ERRORS_HPP
