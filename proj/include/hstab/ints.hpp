#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace hstab {

// All arithmetic in the library is exact. Int never wraps.
using Int = boost::multiprecision::cpp_int;

// Base class for errors that represent a rejected input or a failed
// search rather than a bug; the CLI maps these to exit code 1.
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SearchExhausted : DomainError {
  int bound;
  explicit SearchExhausted(int b)
      : DomainError("search exhausted at coefficient bound " + std::to_string(b)),
        bound(b) {}
};

struct OracleFailure : DomainError {
  using DomainError::DomainError;
};

struct StepBudgetExceeded : DomainError {
  using DomainError::DomainError;
};

inline Int abs_int(const Int& a) { return a < 0 ? Int(-a) : a; }

inline int sign_int(const Int& a) { return a < 0 ? -1 : (a > 0 ? 1 : 0); }

// Floor division (cpp_int's operator/ truncates toward zero).
inline Int floor_div(const Int& a, const Int& b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

inline Int mod_floor(const Int& a, const Int& b) { return a - floor_div(a, b) * b; }

// Quotient minimizing |a - q*b|; used for remainder control in SNF.
inline Int round_div(const Int& a, const Int& b) {
  Int q = a / b;
  Int r = a - q * b;
  if (r == 0) return q;
  Int best = q;
  Int best_abs = abs_int(r);
  for (int d : {-1, 1}) {
    Int q2 = q + d;
    Int r2 = abs_int(a - q2 * b);
    if (r2 < best_abs) {
      best = q2;
      best_abs = r2;
    }
  }
  return best;
}

inline Int gcd_int(Int a, Int b) {
  a = abs_int(a);
  b = abs_int(b);
  while (b != 0) {
    Int t = a % b;
    a = b;
    b = t;
  }
  return a;
}

inline long long to_ll(const Int& a) {
  if (a > std::numeric_limits<long long>::max() || a < std::numeric_limits<long long>::min())
    throw std::overflow_error("integer does not fit in 64 bits: " + a.str());
  return static_cast<long long>(a);
}

}  // namespace hstab
