#include "carrymul/arith.hpp"

#include <algorithm>
#include <vector>

namespace carrymul {

Natural add(const Natural& a, const Natural& b, OpCounters& counters) {
    require_same_base(a, b);
    const int base = a.base().value();
    const std::size_t len = std::max(a.size(), b.size());
    std::vector<std::uint8_t> out;
    out.reserve(len + 1);
    int carry = 0;
    for (std::size_t i = 0; i < len; ++i) {
        const int sum = a.digit(i).value() + b.digit(i).value() + carry;
        out.push_back(static_cast<std::uint8_t>(sum % base));
        carry = sum / base;
    }
    counters.digit_adds += len;
    if (carry != 0) {
        out.push_back(static_cast<std::uint8_t>(carry));
        ++counters.digit_adds;
    }
    return Natural(std::move(out), a.base());
}

Natural mul_by_digit(const Natural& a, Digit d, OpCounters& counters) {
    const int base = a.base().value();
    if (d.value() >= base) {
        throw DigitOutOfRange(0, d.value(), base);
    }
    const auto digits = a.digits();
    std::vector<std::uint8_t> out;
    out.reserve(digits.size() + 1);
    // a_i * d + carry <= (b-1)^2 + (b-1) < b^2, so every carry is one digit.
    int carry = 0;
    for (const std::uint8_t ai : digits) {
        const int product = ai * d.value() + carry;
        out.push_back(static_cast<std::uint8_t>(product % base));
        carry = product / base;
    }
    if (carry != 0) {
        out.push_back(static_cast<std::uint8_t>(carry));
    }
    counters.digit_mults += digits.size();
    if (!digits.empty()) {
        counters.digit_adds += digits.size() - 1;
    }
    return Natural(std::move(out), a.base());
}

std::pair<Natural, Digit> divmod_base(const Natural& n) {
    if (n.is_zero()) {
        return {n, Digit(0)};
    }
    const auto digits = n.digits();
    return {Natural(std::vector<std::uint8_t>(digits.begin() + 1, digits.end()), n.base()),
            Digit(digits.front())};
}

Natural shift(const Natural& n, std::size_t k) {
    if (n.is_zero() || k == 0) {
        return n;
    }
    std::vector<std::uint8_t> out(k, 0);
    out.insert(out.end(), n.digits().begin(), n.digits().end());
    return Natural(std::move(out), n.base());
}

Natural scale_by_small(const Natural& value, unsigned factor, OpCounters& counters) {
    Natural result(value.base());
    Natural power = value;
    while (factor != 0) {
        if (factor & 1u) {
            result = add(result, power, counters);
        }
        factor >>= 1;
        if (factor != 0) {
            power = add(power, power, counters);
        }
    }
    return result;
}

}  // namespace carrymul
