#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "carrymul/error.hpp"

namespace carrymul {

/// Radix of a positional numeral system, 2..36.
class Base {
public:
    static constexpr int kMin = 2;
    static constexpr int kMax = 36;

    /// Throws Error(BaseOutOfRange) outside [kMin, kMax].
    explicit Base(int value);

    constexpr int value() const noexcept { return value_; }

    friend constexpr bool operator==(Base, Base) noexcept = default;

private:
    int value_;
};

/// One digit. Whether it fits a given base is checked where it meets that base.
class Digit {
public:
    constexpr Digit() noexcept = default;
    constexpr explicit Digit(std::uint8_t value) noexcept : value_(value) {}

    constexpr std::uint8_t value() const noexcept { return value_; }

    friend constexpr auto operator<=>(Digit, Digit) noexcept = default;

private:
    std::uint8_t value_ = 0;
};

/// Natural number as a canonical little-endian digit vector: digits()[i] is the
/// coefficient of base^i, the top digit is never zero, and zero has no digits.
class Natural {
public:
    /// Zero in `base`.
    explicit Natural(Base base) noexcept : base_(base) {}

    /// Validates every digit against `base` and strips high-order zeros.
    Natural(std::vector<std::uint8_t> digits, Base base);

    Base base() const noexcept { return base_; }
    std::span<const std::uint8_t> digits() const noexcept { return digits_; }
    std::size_t size() const noexcept { return digits_.size(); }
    bool is_zero() const noexcept { return digits_.empty(); }

    /// Coefficient of base^i; zero past the top digit.
    Digit digit(std::size_t i) const noexcept {
        return Digit(i < digits_.size() ? digits_[i] : std::uint8_t{0});
    }

    friend bool operator==(const Natural&, const Natural&) = default;

private:
    std::vector<std::uint8_t> digits_;
    Base base_;
};

char digit_glyph(Digit d) noexcept;

Natural parse_natural(std::string_view text, Base base);
std::string render_natural(const Natural& n);

/// Builds a canonical Natural from carry-free digit values (little-endian).
Natural normalize(std::span<const int> raw, Base base);

/// Orders by value. Throws Error(BaseMismatch) across bases.
std::strong_ordering compare(const Natural& a, const Natural& b);

/// Test-support conversions. to_machine_integer throws Error(Overflow).
std::uintmax_t to_machine_integer(const Natural& n);
Natural from_machine_integer(std::uintmax_t value, Base base);

void require_same_base(const Natural& a, const Natural& b);

}  // namespace carrymul
