#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>

#include "carrymul/digits.hpp"

namespace carrymul {

/// Elementary digit-operation tallies for one computation. Not thread-safe;
/// give each in-flight multiplication its own instance.
///
/// Counting convention:
///  - digit_mults: one per single-digit by single-digit product.
///  - digit_adds: one per digit position at which an addition (including
///    absorption of an incoming carry) is performed.
struct OpCounters {
    std::uint64_t digit_mults = 0;
    std::uint64_t digit_adds = 0;

    friend bool operator==(const OpCounters&, const OpCounters&) = default;
};

/// a + b. digit_adds grows by max(len a, len b), plus one if a final carry
/// digit is emitted.
Natural add(const Natural& a, const Natural& b, OpCounters& counters);

/// a * d. Every digit of `a` is multiplied, zeros included, so digit_mults
/// grows by exactly len(a). Positions 1..len(a)-1 absorb the running carry
/// and each count one digit_add. Throws DigitOutOfRange if d >= base.
Natural mul_by_digit(const Natural& a, Digit d, OpCounters& counters);

/// (n div base, n mod base): drops the units digit.
std::pair<Natural, Digit> divmod_base(const Natural& n);

/// n * base^k.
Natural shift(const Natural& n, std::size_t k);

/// value * factor using add() alone: binary double-and-add over the bits of
/// the machine-sized factor. Shares no code path with mul_by_digit.
Natural scale_by_small(const Natural& value, unsigned factor, OpCounters& counters);

}  // namespace carrymul
