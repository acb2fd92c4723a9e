#include "lcf/cf.hpp"

#include <cassert>
#include <map>
#include <stdexcept>
#include <utility>

#include "lcf/error.hpp"

namespace lcf {

PeriodicCF expand_sqrt(const Int& d, std::size_t max_period) {
  if (d < 0) throw std::invalid_argument("expand_sqrt: negative radicand");
  IsqrtResult r = isqrt(d);
  if (r.exact) throw PerfectSquareError("expand_sqrt: " + d.get_str() + " is a perfect square");

  PeriodicCF cf{d, r.root, {}};
  const Int& a0 = cf.a0;
  // State after the integer part: the complete quotient (sqrt(d)+P)/Q.
  Int P = a0;
  Int Q = d - a0 * a0;
  std::map<std::pair<Int, Int>, std::size_t> seen;
  for (;;) {
    auto [it, fresh] = seen.emplace(std::pair<Int, Int>(P, Q), cf.period.size());
    if (!fresh) {
      // For pure sqrt(d) the expansion is purely periodic after a0, so the
      // first state is the one that recurs.
      assert(it->second == 0);
      cf.period.assign(cf.period.begin() + static_cast<std::ptrdiff_t>(it->second),
                       cf.period.end());
      assert(cf.period.back() == 2 * a0);
      return cf;
    }
    if (cf.period.size() >= max_period)
      throw PeriodTooLongError("expand_sqrt: period of sqrt(" + d.get_str() + ") exceeds " +
                               std::to_string(max_period));
    Int a = (P + a0) / Q;
    cf.period.push_back(a);
    P = a * Q - P;
    Q = (d - P * P) / Q;
  }
}

std::vector<Convergent> convergents(const Int& a0, const Word& word, std::size_t upto) {
  if (upto >= 1 + word.size())
    throw std::out_of_range("convergents: index " + std::to_string(upto) + " out of range");
  std::vector<Convergent> out;
  out.reserve(upto + 1);
  Int Am2 = 0, Am1 = 1, Bm2 = 1, Bm1 = 0;
  for (std::size_t i = 0; i <= upto; ++i) {
    const Int& ai = (i == 0) ? a0 : word[i - 1];
    Int A = ai * Am1 + Am2;
    Int B = ai * Bm1 + Bm2;
    out.push_back({A, B, i});
    Am2 = std::move(Am1);
    Am1 = std::move(A);
    Bm2 = std::move(Bm1);
    Bm1 = std::move(B);
  }
  return out;
}

ExpansionUnit unit_from_cf(const PeriodicCF& cf) {
  const std::size_t s = cf.period_len();
  std::vector<Convergent> cs = convergents(cf.a0, cf.period, s - 1);
  const Convergent& last = cs.back();
  ExpansionUnit u{QuadRat(cf.d, Rat(last.A), Rat(last.B)), s % 2 == 0 ? 1 : -1};
  assert(u.eps.norm() == u.norm_sign);
  return u;
}

ExpansionUnit unit_from_expansion(const Int& d, std::size_t max_period) {
  return unit_from_cf(expand_sqrt(d, max_period));
}

bool eval_periodic_fixed_point(const Int& a0, const Word& period) {
  if (period.empty()) throw std::invalid_argument("eval_periodic_fixed_point: empty period");
  if (!all_positive(period))
    throw std::invalid_argument("eval_periodic_fixed_point: period entries must be positive");
  if (a0 < 1) throw std::invalid_argument("eval_periodic_fixed_point: a0 must be positive");

  // Lemma-1 word (a0, p_1, ..., p_{s-1}, a0) and its symmetric matrix.
  Word head;
  head.reserve(period.size());
  head.push_back(a0);
  head.insert(head.end(), period.begin(), period.end() - 1);
  Mat2 g = matrix_of_word(head);
  Mat2 full = g * Mat2::cf_digit(a0);
  if (!full.symmetric()) return false;
  const Int& w = full.m11;
  const Int& v = full.m22;
  Int n = w * v;
  if (n <= 0 || is_perfect_square(n)) return false;  // alpha would be rational

  // alpha = sqrt(w/v) = sqrt(wv)/v. Unfold one period:
  // alpha = [a0; p_1, ..., p_{s-1}, p_s + alpha - a0], i.e. with t = p_s - a0 + alpha,
  // alpha (g21 t + g22) = g11 t + g12. For p_s = 2 a0 this is Lemma 1's
  // alpha = (w + alpha u) / (u + alpha v).
  QuadRat alpha(n, Rat(0), make_rat(1, v));
  QuadRat t = alpha + Rat(period.back() - a0);
  QuadRat lhs = alpha * (t * Rat(g.m21) + Rat(g.m22));
  QuadRat rhs = t * Rat(g.m11) + Rat(g.m12);
  return lhs == rhs;
}

}  // namespace lcf
