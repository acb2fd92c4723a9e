#pragma once

#include <gmpxx.h>

#include <string>

namespace lcf {

// All core arithmetic is exact: arbitrary-precision integers and rationals,
// no floating point anywhere.
using Int = mpz_class;
using Rat = mpq_class;

/// num/den in lowest terms with positive denominator.
Rat make_rat(const Int& num, const Int& den);

inline bool rat_is_integer(const Rat& q) { return q.get_den() == 1; }

/// Exact conversion; the caller must know q is an integer.
Int rat_to_int(const Rat& q);

/// base^e for e >= 0.
Int pow_int(const Int& base, unsigned long e);

bool is_perfect_square(const Int& n);

struct IsqrtResult {
  Int root;
  bool exact;
};

/// Floor of sqrt(n) plus an exactness flag. n must be >= 0.
IsqrtResult isqrt(const Int& n);

enum class SquareFreeKind { SquareFree, HasSquareFactor, Unknown };

struct SquareFreeStatus {
  SquareFreeKind kind = SquareFreeKind::Unknown;
  Int factor;  // prime p with p^2 | n, when kind == HasSquareFactor
  Int bound;   // the probed bound, when kind == Unknown

  static SquareFreeStatus square_free() { return {SquareFreeKind::SquareFree, 0, 0}; }
  static SquareFreeStatus has_square_factor(Int p) {
    return {SquareFreeKind::HasSquareFactor, std::move(p), 0};
  }
  static SquareFreeStatus unknown(Int b) { return {SquareFreeKind::Unknown, 0, std::move(b)}; }

  bool operator==(const SquareFreeStatus&) const = default;
  std::string str() const;
};

inline constexpr unsigned long kDefaultSquareFreeBound = 100000;

/// Trial division of n (>= 2) by all primes p <= bound.
/// Returns the first square factor found; SquareFree when the factorization
/// completes below the bound; Unknown(bound) otherwise.
SquareFreeStatus square_free_probe(const Int& n, const Int& bound);

}  // namespace lcf
