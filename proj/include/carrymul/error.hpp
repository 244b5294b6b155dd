#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace carrymul {

enum class ErrorCode {
    EmptyInput,
    InvalidDigitGlyph,
    BaseOutOfRange,
    DigitOutOfRange,
    BaseMismatch,
    Overflow,
    WrongAlgorithm,
    MalformedDocument,
};

const char* to_string(ErrorCode code) noexcept;

/// Single exception type for every library failure; `code()` discriminates.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

/// Raised by parse_natural; carries the offending glyph and its index in the input.
class InvalidDigitGlyph : public Error {
public:
    InvalidDigitGlyph(std::size_t position, char glyph);

    std::size_t position() const noexcept { return position_; }
    char glyph() const noexcept { return glyph_; }

private:
    std::size_t position_;
    char glyph_;
};

/// Raised by normalize when a raw entry is not a digit of the base.
class DigitOutOfRange : public Error {
public:
    DigitOutOfRange(std::size_t index, long long value, int base);

    std::size_t index() const noexcept { return index_; }

private:
    std::size_t index_;
};

}  // namespace carrymul
