#pragma once

#include <cstdint>

#include "cremona/errors.hpp"

// Overflow-checked 64-bit integer arithmetic. Every lattice and matrix
// computation goes through these helpers; nothing is allowed to wrap.
namespace cremona::checked {

using Int = std::int64_t;

inline Int add(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in addition");
    return r;
}

inline Int sub(Int a, Int b) {
    Int r;
    if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer overflow in subtraction");
    return r;
}

inline Int mul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in multiplication");
    return r;
}

inline Int neg(Int a) { return sub(0, a); }

inline Int square(Int a) { return mul(a, a); }

/// a + b * c
inline Int fma(Int a, Int b, Int c) { return add(a, mul(b, c)); }

}  // namespace cremona::checked
