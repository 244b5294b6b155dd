#include "carrymul/digits.hpp"

#include <algorithm>
#include <limits>
#include <utility>

namespace carrymul {

const char* to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::EmptyInput: return "EmptyInput";
        case ErrorCode::InvalidDigitGlyph: return "InvalidDigitGlyph";
        case ErrorCode::BaseOutOfRange: return "BaseOutOfRange";
        case ErrorCode::DigitOutOfRange: return "DigitOutOfRange";
        case ErrorCode::BaseMismatch: return "BaseMismatch";
        case ErrorCode::Overflow: return "Overflow";
        case ErrorCode::WrongAlgorithm: return "WrongAlgorithm";
        case ErrorCode::MalformedDocument: return "MalformedDocument";
    }
    return "Unknown";
}

InvalidDigitGlyph::InvalidDigitGlyph(std::size_t position, char glyph)
    : Error(ErrorCode::InvalidDigitGlyph,
            "invalid digit '" + std::string(1, glyph) + "' at position " + std::to_string(position)),
      position_(position),
      glyph_(glyph) {}

DigitOutOfRange::DigitOutOfRange(std::size_t index, long long value, int base)
    : Error(ErrorCode::DigitOutOfRange, "digit " + std::to_string(value) + " at index " +
                                            std::to_string(index) + " is not a base-" +
                                            std::to_string(base) + " digit"),
      index_(index) {}

Base::Base(int value) : value_(value) {
    if (value < kMin || value > kMax) {
        throw Error(ErrorCode::BaseOutOfRange,
                    "base " + std::to_string(value) + " outside 2..36");
    }
}

Natural::Natural(std::vector<std::uint8_t> digits, Base base) : digits_(std::move(digits)), base_(base) {
    for (std::size_t i = 0; i < digits_.size(); ++i) {
        if (digits_[i] >= base.value()) {
            throw DigitOutOfRange(i, digits_[i], base.value());
        }
    }
    while (!digits_.empty() && digits_.back() == 0) {
        digits_.pop_back();
    }
}

char digit_glyph(Digit d) noexcept {
    const int v = d.value();
    return static_cast<char>(v <= 9 ? '0' + v : 'a' + (v - 10));
}

namespace {

// -1 for anything outside 0-9, a-z, A-Z.
int glyph_value(char c) noexcept {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'z') return c - 'a' + 10;
    if (c >= 'A' && c <= 'Z') return c - 'A' + 10;
    return -1;
}

}  // namespace

Natural parse_natural(std::string_view text, Base base) {
    if (text.empty()) {
        throw Error(ErrorCode::EmptyInput, "empty numeral");
    }
    std::vector<std::uint8_t> digits(text.size());
    for (std::size_t pos = 0; pos < text.size(); ++pos) {
        const int v = glyph_value(text[pos]);
        if (v < 0 || v >= base.value()) {
            throw InvalidDigitGlyph(pos, text[pos]);
        }
        digits[text.size() - 1 - pos] = static_cast<std::uint8_t>(v);
    }
    return Natural(std::move(digits), base);
}

std::string render_natural(const Natural& n) {
    if (n.is_zero()) {
        return "0";
    }
    std::string out;
    out.reserve(n.size());
    const auto digits = n.digits();
    for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
        out.push_back(digit_glyph(Digit(*it)));
    }
    return out;
}

Natural normalize(std::span<const int> raw, Base base) {
    std::vector<std::uint8_t> digits(raw.size());
    for (std::size_t i = 0; i < raw.size(); ++i) {
        if (raw[i] < 0 || raw[i] >= base.value()) {
            throw DigitOutOfRange(i, raw[i], base.value());
        }
        digits[i] = static_cast<std::uint8_t>(raw[i]);
    }
    return Natural(std::move(digits), base);
}

void require_same_base(const Natural& a, const Natural& b) {
    if (a.base() != b.base()) {
        throw Error(ErrorCode::BaseMismatch, "operands in base " + std::to_string(a.base().value()) +
                                                 " and base " + std::to_string(b.base().value()));
    }
}

std::strong_ordering compare(const Natural& a, const Natural& b) {
    require_same_base(a, b);
    if (a.size() != b.size()) {
        return a.size() <=> b.size();
    }
    const auto da = a.digits();
    const auto db = b.digits();
    for (std::size_t i = da.size(); i-- > 0;) {
        if (da[i] != db[i]) {
            return da[i] <=> db[i];
        }
    }
    return std::strong_ordering::equal;
}

std::uintmax_t to_machine_integer(const Natural& n) {
    constexpr auto kMax = std::numeric_limits<std::uintmax_t>::max();
    const auto b = static_cast<std::uintmax_t>(n.base().value());
    std::uintmax_t value = 0;
    const auto digits = n.digits();
    for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
        if (value > (kMax - *it) / b) {
            throw Error(ErrorCode::Overflow, render_natural(n) + " does not fit a machine integer");
        }
        value = value * b + *it;
    }
    return value;
}

Natural from_machine_integer(std::uintmax_t value, Base base) {
    const auto b = static_cast<std::uintmax_t>(base.value());
    std::vector<std::uint8_t> digits;
    while (value != 0) {
        digits.push_back(static_cast<std::uint8_t>(value % b));
        value /= b;
    }
    return Natural(std::move(digits), base);
}

}  // namespace carrymul
