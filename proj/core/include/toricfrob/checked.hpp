#pragma once

#include <cstdint>

#include "toricfrob/errors.hpp"

namespace toricfrob {

// Overflow-checked machine arithmetic. Coordinates and counters stay in
// int64/uint64 for speed; anything that could grow past that throws
// ArithmeticOverflow instead of wrapping.

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw ArithmeticOverflow("int64 add overflow");
    return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) throw ArithmeticOverflow("int64 sub overflow");
    return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw ArithmeticOverflow("int64 mul overflow");
    return r;
}

inline std::uint64_t checked_uadd(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw ArithmeticOverflow("uint64 add overflow");
    return r;
}

inline std::uint64_t checked_umul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw ArithmeticOverflow("uint64 mul overflow");
    return r;
}

/// base^exp with overflow detection.
inline std::uint64_t checked_upow(std::uint64_t base, unsigned exp) {
    std::uint64_t r = 1;
    for (unsigned i = 0; i < exp; ++i) r = checked_umul(r, base);
    return r;
}

} // namespace toricfrob
