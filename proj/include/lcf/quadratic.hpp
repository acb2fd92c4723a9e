#pragma once

#include <string>

#include "lcf/int.hpp"

namespace lcf {

/// An element a + b*sqrt(d) of Q(sqrt(d)) with exact rational coordinates.
/// d is a fixed positive non-square integer; values are immutable.
class QuadRat {
 public:
  QuadRat(Int d, Rat a, Rat b);

  static QuadRat rational(Int d, Rat a) { return QuadRat(std::move(d), std::move(a), Rat(0)); }
  static QuadRat sqrt_of(Int d) { return QuadRat(std::move(d), Rat(0), Rat(1)); }

  const Int& d() const { return d_; }
  const Rat& a() const { return a_; }
  const Rat& b() const { return b_; }

  QuadRat operator+(const QuadRat& o) const;
  QuadRat operator-(const QuadRat& o) const;
  QuadRat operator*(const QuadRat& o) const;
  QuadRat operator-() const;

  QuadRat operator+(const Rat& t) const;
  QuadRat operator-(const Rat& t) const;
  QuadRat operator*(const Rat& t) const;

  QuadRat conjugate() const;  // a - b*sqrt(d)
  Rat norm() const;           // a^2 - d*b^2

  /// Multiplicative inverse; throws ZeroDivisorError on zero.
  QuadRat inverse() const;

  /// e-th power, e >= 0; pow(x, 0) == 1.
  QuadRat pow(unsigned long e) const;

  bool is_zero() const { return a_ == 0 && b_ == 0; }
  bool is_rational() const { return b_ == 0; }
  /// Both coordinates are integers.
  bool integral() const { return rat_is_integer(a_) && rat_is_integer(b_); }

  /// Sign of (a + b*sqrt(d)) - t, computed exactly.
  int cmp_rational(const Rat& t) const;
  bool exceeds_one() const { return cmp_rational(Rat(1)) > 0; }

  bool operator==(const QuadRat& o) const { return d_ == o.d_ && a_ == o.a_ && b_ == o.b_; }

  /// "197 + 42*sqrt(22)" style rendering.
  std::string str() const;

 private:
  struct unchecked_t {};
  QuadRat(unchecked_t, Int d, Rat a, Rat b)
      : d_(std::move(d)), a_(std::move(a)), b_(std::move(b)) {}
  const Int& check_same_d(const QuadRat& o) const;

  Int d_;
  Rat a_;
  Rat b_;
};

inline QuadRat operator*(const Rat& t, const QuadRat& x) { return x * t; }
inline QuadRat operator+(const Rat& t, const QuadRat& x) { return x + t; }

}  // namespace lcf
