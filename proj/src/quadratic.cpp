#include "lcf/quadratic.hpp"

#include "lcf/error.hpp"

namespace lcf {

QuadRat::QuadRat(Int d, Rat a, Rat b) : d_(std::move(d)), a_(std::move(a)), b_(std::move(b)) {
  if (d_ <= 0) throw std::domain_error("QuadRat: radicand must be positive");
  if (is_perfect_square(d_)) throw std::domain_error("QuadRat: radicand must not be a square");
}

const Int& QuadRat::check_same_d(const QuadRat& o) const {
  if (d_ != o.d_)
    throw MismatchedRadicandError("QuadRat: mixed radicands " + d_.get_str() + " and " +
                                  o.d_.get_str());
  return d_;
}

QuadRat QuadRat::operator+(const QuadRat& o) const {
  check_same_d(o);
  return QuadRat(unchecked_t{}, d_, a_ + o.a_, b_ + o.b_);
}

QuadRat QuadRat::operator-(const QuadRat& o) const {
  check_same_d(o);
  return QuadRat(unchecked_t{}, d_, a_ - o.a_, b_ - o.b_);
}

QuadRat QuadRat::operator*(const QuadRat& o) const {
  check_same_d(o);
  return QuadRat(unchecked_t{}, d_, a_ * o.a_ + Rat(d_) * b_ * o.b_, a_ * o.b_ + b_ * o.a_);
}

QuadRat QuadRat::operator-() const { return QuadRat(unchecked_t{}, d_, -a_, -b_); }

QuadRat QuadRat::operator+(const Rat& t) const { return QuadRat(unchecked_t{}, d_, a_ + t, b_); }
QuadRat QuadRat::operator-(const Rat& t) const { return QuadRat(unchecked_t{}, d_, a_ - t, b_); }
QuadRat QuadRat::operator*(const Rat& t) const {
  return QuadRat(unchecked_t{}, d_, a_ * t, b_ * t);
}

QuadRat QuadRat::conjugate() const { return QuadRat(unchecked_t{}, d_, a_, -b_); }

Rat QuadRat::norm() const { return a_ * a_ - Rat(d_) * b_ * b_; }

QuadRat QuadRat::inverse() const {
  Rat n = norm();
  // n == 0 iff the value is 0, because d is not a square.
  if (n == 0) throw ZeroDivisorError("QuadRat: inverse of zero");
  return QuadRat(unchecked_t{}, d_, a_ / n, -b_ / n);
}

QuadRat QuadRat::pow(unsigned long e) const {
  QuadRat acc(unchecked_t{}, d_, Rat(1), Rat(0));
  QuadRat base = *this;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

int QuadRat::cmp_rational(const Rat& t) const {
  Rat da = a_ - t;
  int sa = sgn(da);
  int sb = sgn(b_);
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // Opposite signs: decide |da| vs |b|*sqrt(d) by squaring.
  int c = cmp(da * da, b_ * b_ * Rat(d_));
  if (c == 0) return 0;  // unreachable: would force sqrt(d) rational
  return sa > 0 ? c : -c;
}

std::string QuadRat::str() const {
  auto rat_str = [](const Rat& q) { return q.get_str(); };
  if (b_ == 0) return rat_str(a_);
  std::string bpart =
      (abs(b_) == 1 ? std::string() : rat_str(abs(b_)) + "*") + "sqrt(" + d_.get_str() + ")";
  if (a_ == 0) return (b_ < 0 ? "-" : "") + bpart;
  return rat_str(a_) + (b_ < 0 ? " - " : " + ") + bpart;
}

}  // namespace lcf
