#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace pct {

using Int = std::int64_t;

/// Thrown when an exact 64-bit computation would overflow.
class RangeError : public std::range_error {
 public:
  using std::range_error::range_error;
};

inline Int checked_add(Int a, Int b) {
  Int out;
  if (__builtin_add_overflow(a, b, &out)) throw RangeError("integer overflow in addition");
  return out;
}

inline Int checked_sub(Int a, Int b) {
  Int out;
  if (__builtin_sub_overflow(a, b, &out)) throw RangeError("integer overflow in subtraction");
  return out;
}

inline Int checked_mul(Int a, Int b) {
  Int out;
  if (__builtin_mul_overflow(a, b, &out)) throw RangeError("integer overflow in multiplication");
  return out;
}

inline Int checked_neg(Int a) { return checked_sub(0, a); }

// Mathematical floor/ceil of num/den on exact rationals. Machine division
// truncates toward zero, so the sign cases are handled explicitly.
inline Int floor_div(Int num, Int den) {
  if (den == 0) throw std::domain_error("floor_div: zero denominator");
  Int q = num / den;
  Int r = num % den;
  if (r != 0 && ((r < 0) != (den < 0))) --q;
  return q;
}

inline Int ceil_div(Int num, Int den) {
  if (den == 0) throw std::domain_error("ceil_div: zero denominator");
  Int q = num / den;
  Int r = num % den;
  if (r != 0 && ((r < 0) == (den < 0))) ++q;
  return q;
}

/// Exact division; a non-zero remainder is an invariant violation.
inline Int exact_div(Int num, Int den, const char* what) {
  if (den == 0 || num % den != 0) {
    throw std::logic_error(std::string("non-exact division in ") + what);
  }
  return num / den;
}

}  // namespace pct
