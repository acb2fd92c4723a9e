#include "lcf/int.hpp"

#include <stdexcept>

namespace lcf {

Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw std::domain_error("make_rat: zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

Int rat_to_int(const Rat& q) {
  if (!rat_is_integer(q)) throw std::domain_error("rat_to_int: not an integer");
  return q.get_num();
}

Int pow_int(const Int& base, unsigned long e) {
  Int out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
  return out;
}

bool is_perfect_square(const Int& n) {
  if (n < 0) return false;
  return mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

IsqrtResult isqrt(const Int& n) {
  if (n < 0) throw std::domain_error("isqrt: negative argument");
  IsqrtResult r;
  Int rem;
  mpz_sqrtrem(r.root.get_mpz_t(), rem.get_mpz_t(), n.get_mpz_t());
  r.exact = (rem == 0);
  return r;
}

std::string SquareFreeStatus::str() const {
  switch (kind) {
    case SquareFreeKind::SquareFree:
      return "square-free";
    case SquareFreeKind::HasSquareFactor:
      return "square-factor:" + factor.get_str();
    case SquareFreeKind::Unknown:
      return "unknown:" + bound.get_str();
  }
  return "?";
}

SquareFreeStatus square_free_probe(const Int& n, const Int& bound) {
  if (n < 2) throw std::domain_error("square_free_probe: n must be >= 2");
  if (bound < 2) throw std::domain_error("square_free_probe: bound must be >= 2");

  Int rest = n;
  auto divides = [&](unsigned long p) { return mpz_divisible_ui_p(rest.get_mpz_t(), p) != 0; };

  // Trial candidates 2, 3, 5, 7, ...: composites never divide `rest` because
  // their prime factors were already removed.
  for (unsigned long p = 2; Int(p) <= bound; p = (p == 2 ? 3 : p + 2)) {
    if (Int(p) * p > rest) return SquareFreeStatus::square_free();  // rest is 1 or prime
    if (!divides(p)) continue;
    mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
    if (divides(p)) return SquareFreeStatus::has_square_factor(Int(p));
  }

  if (rest == 1) return SquareFreeStatus::square_free();
  // Every prime factor of `rest` now exceeds bound.
  if (rest <= bound * bound) return SquareFreeStatus::square_free();  // rest is prime
  IsqrtResult root = isqrt(rest);
  if (root.exact && root.root <= bound * bound) {
    // rest = t^2 with t prime (a composite t would exceed bound^2).
    return SquareFreeStatus::has_square_factor(root.root);
  }
  return SquareFreeStatus::unknown(bound);
}

}  // namespace lcf
