#pragma once

// Exact integer and rational arithmetic shared by every module.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace braidcert {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Raised when a computation contradicts a mathematical fact the library
/// relies on (a singular system that should be regular, a theorem whose
/// finite instance fails). Never raised for bad user input.
class invariant_violation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Binomial coefficient read as the polynomial x(x-1)...(x-k+1)/k!, so that
/// negative x is allowed: binom_poly(-1, 3) == -1.
inline BigInt binom_poly(std::int64_t x, int k) {
  if (k < 0) return 0;
  BigInt num = 1;
  BigInt den = 1;
  for (int i = 0; i < k; ++i) {
    num *= BigInt(x - i);
    den *= BigInt(i + 1);
  }
  return num / den;
}

inline BigInt factorial(int n) {
  BigInt r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

inline std::int64_t to_int64(const BigInt& v) {
  if (v > BigInt(std::numeric_limits<std::int64_t>::max()) ||
      v < BigInt(std::numeric_limits<std::int64_t>::min()))
    throw std::overflow_error("value does not fit in 64 bits: " + v.str());
  return v.convert_to<std::int64_t>();
}

/// Non-negative residue of v modulo m (m > 0).
constexpr std::int64_t mod_floor(std::int64_t v, std::int64_t m) {
  std::int64_t r = v % m;
  return r < 0 ? r + m : r;
}

}  // namespace braidcert
