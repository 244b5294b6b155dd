#include "carrymul/oracle.hpp"

#include "carrymul/arith.hpp"

namespace carrymul {

Natural oracle_multiply(const Natural& a, const Natural& b) {
    require_same_base(a, b);
    const auto radix = static_cast<unsigned>(a.base().value());
    OpCounters unused;
    Natural acc(a.base());
    const auto digits = b.digits();
    for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
        acc = add(scale_by_small(acc, radix, unused), scale_by_small(a, *it, unused), unused);
    }
    return acc;
}

}  // namespace carrymul
