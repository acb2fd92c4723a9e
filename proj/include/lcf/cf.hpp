#pragma once

#include <cstddef>
#include <vector>

#include "lcf/int.hpp"
#include "lcf/quadratic.hpp"
#include "lcf/word.hpp"

namespace lcf {

inline constexpr std::size_t kDefaultMaxPeriod = 1000000;

/// sqrt(d) = [a0; period repeated], with period the fundamental period.
struct PeriodicCF {
  Int d;
  Int a0;
  Word period;

  std::size_t period_len() const { return period.size(); }
};

/// Expands sqrt(d) by the classical (P,Q) state iteration; the period ends
/// at the first repetition of the internal state. Throws PerfectSquareError
/// when d is a square and PeriodTooLongError past max_period entries.
PeriodicCF expand_sqrt(const Int& d, std::size_t max_period = kDefaultMaxPeriod);

struct Convergent {
  Int A;
  Int B;
  std::size_t index;
};

/// Convergents A_i/B_i of [a0; word...] for i = 0..upto, seeded with
/// A_{-1} = 1, A_{-2} = 0, B_{-1} = 0, B_{-2} = 1 (so A_0/B_0 = a0/1).
/// Requires upto < 1 + word length.
std::vector<Convergent> convergents(const Int& a0, const Word& word, std::size_t upto);

struct ExpansionUnit {
  QuadRat eps;    // A_{s-1} + B_{s-1} sqrt(d), s the period length
  int norm_sign;  // (-1)^s
};

/// The (s-1)-th approximant of sqrt(d) as a unit of Z[sqrt(d)].
ExpansionUnit unit_from_cf(const PeriodicCF& cf);
ExpansionUnit unit_from_expansion(const Int& d, std::size_t max_period = kDefaultMaxPeriod);

/// Certifies the claim sqrt(w/v) = [a0; period repeated]: forms the word
/// matrix of (a0, period-without-final, a0), reads (w,u,v), and checks the
/// Moebius fixed-point identity for alpha = sqrt(w/v) exactly in Q(sqrt(wv)).
/// A false result is a value, not an error.
bool eval_periodic_fixed_point(const Int& a0, const Word& period);

}  // namespace lcf
