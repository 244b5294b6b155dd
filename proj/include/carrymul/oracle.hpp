#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "carrymul/digits.hpp"

namespace carrymul {

/// a * b by Horner's rule over b's digits, where every scaling (by the base
/// and by a digit) is binary double-and-add built on add() alone. Never calls
/// mul_by_digit, divmod_base or either multiplication algorithm.
Natural oracle_multiply(const Natural& a, const Natural& b);

/// SplitMix64 (Steele, Lea, Flood 2014). State advances by
/// 0x9E3779B97F4A7C15; output mix uses multipliers 0xBF58476D1CE4E5B9 and
/// 0x94D049BB133111EB with shifts 30, 27, 31. Every draw in random_check goes
/// through next() so sampled pairs depend only on the seed.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

    std::uint64_t next() noexcept {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    /// next() % bound. The modulo bias is below 2^-58 for bound <= 64 and is
    /// part of the reproducibility contract.
    std::uint64_t below(std::uint64_t bound) noexcept { return next() % bound; }

private:
    std::uint64_t state_;
};

struct Mismatch {
    int base = 10;
    std::string a, b, expected, incremental, schoolbook, oracle;

    friend bool operator==(const Mismatch&, const Mismatch&) = default;
};

struct InvariantFailure {
    int base = 10;
    std::string a, b;
    std::size_t step = 0;

    friend bool operator==(const InvariantFailure&, const InvariantFailure&) = default;
};

struct SampledPair {
    int base = 10;
    std::string a, b;

    friend bool operator==(const SampledPair&, const SampledPair&) = default;
};

struct VerifyReport {
    std::uint64_t pairs_checked = 0;
    std::vector<Mismatch> mismatches;              // sorted by (base, a, b) numerically
    std::vector<InvariantFailure> invariant_failures;
    std::vector<SampledPair> pairs;                // random_check only, in draw order
    std::chrono::nanoseconds elapsed{0};

    bool passed() const noexcept { return mismatches.empty() && invariant_failures.empty(); }

    /// FNV-1a 64 over "base:a:b\n" for each sampled pair; 0 when none.
    std::uint64_t pair_digest() const noexcept;
};

/// Every (x, y) with 0 <= x, y < limit: incremental, schoolbook and oracle
/// must equal the machine product and the invariant must hold at every step.
/// Throws std::invalid_argument for limit == 0 or limit > 2^32.
///
/// `threads` = 0 uses one worker per hardware thread. The report does not
/// depend on the worker count.
VerifyReport exhaustive_check(std::uint64_t limit, Base base, unsigned threads = 0);

/// Seeded random operands: base drawn from `bases`, lengths uniform in
/// 1..max_digits, top digit in 1..base-1, other digits in 0..base-1.
/// Draw order per trial: base, len(a), digits of a low to high, len(b),
/// digits of b low to high.
VerifyReport random_check(std::uint64_t trials, std::size_t max_digits,
                          const std::vector<Base>& bases, std::uint64_t seed, unsigned threads = 0);

/// The draws random_check makes for (trials, max_digits, bases, seed).
std::vector<std::pair<Natural, Natural>> sample_pairs(std::uint64_t trials, std::size_t max_digits,
                                                      const std::vector<Base>& bases,
                                                      std::uint64_t seed);

}  // namespace carrymul
