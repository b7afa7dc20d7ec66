#pragma once

#include <cstdint>
#include <stdexcept>

namespace fusionobs {

// All multiplicity arithmetic runs in 64-bit signed integers; overflow is a hard error.
class ArithmeticOverflow : public std::overflow_error {
public:
    using std::overflow_error::overflow_error;
};

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw ArithmeticOverflow("int64 overflow in addition");
    return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw ArithmeticOverflow("int64 overflow in multiplication");
    return r;
}

inline std::int64_t checked_pow(std::int64_t base, unsigned exp) {
    std::int64_t r = 1;
    for (unsigned i = 0; i < exp; ++i) r = checked_mul(r, base);
    return r;
}

// C(n, 2)
inline std::int64_t choose2(std::int64_t n) {
    return n < 2 ? 0 : checked_mul(n, n - 1) / 2;
}

} // namespace fusionobs
