#include "lcf/props.hpp"

#include <string>

#include "lcf/error.hpp"

namespace lcf {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw HypothesisViolatedError("hypothesis violated: " + what);
}

void check_positive(const Int& value, const char* name) {
  require(value >= 1, std::string(name) + " must be a positive integer");
}

void validate(const Prop1Params& p) {
  require(p.k >= 1, "k must be >= 1");
  check_positive(p.u, "u");
  check_positive(p.v, "v");
  check_positive(p.w, "w");
  check_positive(p.r, "r");
  require(p.x > 0, "x must be positive");
  require(mpz_divisible_p(Int(p.r * p.w).get_mpz_t(), p.v.get_mpz_t()), "r*w/v must be an integer");
  require(rat_is_integer(Rat(p.w) * p.x), "w*x must be an integer");
  require(rat_is_integer(Rat(2 * p.v) * p.x), "2*v*x must be an integer");
}

void validate(const Prop2Params& p) {
  require(p.k >= 1, "k must be >= 1");
  check_positive(p.u, "u");
  check_positive(p.v, "v");
  check_positive(p.x, "x");
  check_positive(p.r, "r");
}

void validate(const Prop3Params& p) {
  require(p.k >= 1, "k must be >= 1");
  check_positive(p.u, "u");
  check_positive(p.v, "v");
  check_positive(p.w, "w");
  check_positive(p.q, "q");
  check_positive(p.r, "r");
}

template <typename MatrixOf>
void check_n_words(const std::vector<Word>& n_words, unsigned long k, MatrixOf&& target) {
  require(n_words.size() == k, "expected exactly k words");
  for (unsigned long n = 0; n < k; ++n) {
    require(!n_words[n].empty(), "word " + std::to_string(n) + " is empty");
    require(all_positive(n_words[n]),
            "word " + std::to_string(n) + " must have positive entries");
    require(matrix_of_word(n_words[n]) == target(n),
            "word " + std::to_string(n) + " does not expand N_" + std::to_string(n));
  }
}

Word flatten_period(const std::vector<Word>& n_words, const Word& centre, const Word& tail) {
  Word period;
  for (auto it = n_words.rbegin(); it != n_words.rend(); ++it)
    period.insert(period.end(), it->begin(), it->end());
  period.insert(period.end(), centre.begin(), centre.end());
  for (const Word& w : n_words) {
    Word rev = reversed(w);
    period.insert(period.end(), rev.begin(), rev.end());
  }
  period.insert(period.end(), tail.begin(), tail.end());
  return period;
}

void certify_by_lemma1(const Int& d, const Int& a0, const Word& period) {
  Word palin;
  palin.push_back(a0);
  palin.insert(palin.end(), period.begin(), period.end() - 1);
  palin.push_back(a0);
  Lemma1Result l = lemma1_check(palin);
  require(l.ratio_ok && l.w == d * l.v, "assembled period does not satisfy sqrt(d) = w/v ratio");
}

void check_unit_result(const QuadRat& u) {
  if (!u.integral()) throw NonUnitError("closed-form unit has non-integer coordinates: " + u.str());
  Rat n = u.norm();
  if (n != 1 && n != -1) throw NonUnitError("closed-form value has norm " + n.get_str());
}

Int nonsquare_or_throw(const Int& d) {
  if (is_perfect_square(d)) throw NonUnitError("radicand " + d.get_str() + " is a perfect square");
  return d;
}

}  // namespace

Mat2 prop1_matrix(const Prop1Params& p, unsigned long n) {
  Int twovx = rat_to_int(Rat(2 * p.v) * p.x);
  return {p.u, pow_int(p.r, p.k - 1 - n) * p.v, pow_int(p.r, n) * p.w, p.r * p.u - p.w * twovx};
}

Mat2 prop2_matrix(const Prop2Params& p, unsigned long n) {
  return {p.u, pow_int(p.r, p.k - 1 - n) * p.v, pow_int(p.r, p.k + n) * p.v,
          p.r * p.u - 2 * p.v * p.x};
}

Mat2 prop3_matrix(const Prop3Params& p, unsigned long n) {
  Int big = pow_int(p.r, p.k) + 4 * p.q * p.w;
  return {p.u, pow_int(p.r, p.k - 1 - n) * p.v, pow_int(p.r, n) * p.v * big,
          p.r * p.u - 2 * p.q * pow_int(p.r, p.k) * p.v - 2 * (1 + 4 * p.q * p.q) * p.v * p.w};
}

AssembledCF prop1_assemble(const Prop1Params& p, const std::vector<Word>& n_words) {
  validate(p);
  check_n_words(n_words, p.k, [&](unsigned long n) { return prop1_matrix(p, n); });

  Int wx = rat_to_int(Rat(p.w) * p.x);
  Int twovx = rat_to_int(Rat(2 * p.v) * p.x);
  Int d = (p.w * pow_int(p.r, p.k)) / p.v + wx * wx;
  require(!is_perfect_square(d), "d is a perfect square");

  Word period = flatten_period(n_words, {twovx}, {2 * wx});
  certify_by_lemma1(d, wx, period);
  return {d, wx, period};
}

AssembledCF prop2_assemble(const Prop2Params& p, const std::vector<Word>& n_words) {
  validate(p);
  check_n_words(n_words, p.k, [&](unsigned long n) { return prop2_matrix(p, n); });

  Int d = pow_int(p.r, 2 * p.k) + p.x * p.x;
  require(!is_perfect_square(d), "d is a perfect square");

  Word period = flatten_period(n_words, {}, {2 * p.x});
  certify_by_lemma1(d, p.x, period);
  return {d, p.x, period};
}

AssembledCF prop3_assemble(const Prop3Params& p, const std::vector<Word>& n_words) {
  validate(p);
  check_n_words(n_words, p.k, [&](unsigned long n) { return prop3_matrix(p, n); });

  Int big = pow_int(p.r, p.k) + 4 * p.q * p.w;
  Int a0 = p.w + p.q * big;
  Int d = pow_int(p.r, p.k) * big + a0 * a0;
  require(!is_perfect_square(d), "d is a perfect square");

  Word period = flatten_period(n_words, {2 * p.q, 2 * p.q}, {2 * a0});
  certify_by_lemma1(d, a0, period);
  return {d, a0, period};
}

QuadRat prop1_unit(const Prop1Params& p) {
  validate(p);
  Int wx = rat_to_int(Rat(p.w) * p.x);
  Int d = nonsquare_or_throw((p.w * pow_int(p.r, p.k)) / p.v + wx * wx);

  // w (r u + v(-w x + sqrt(d)))^(2k) / (v (-w x + sqrt(d))^2)
  QuadRat alpha(d, Rat(-wx), Rat(1));
  QuadRat base = alpha * Rat(p.v) + Rat(p.r * p.u);
  QuadRat numer = base.pow(2 * p.k) * Rat(p.w);
  QuadRat denom = alpha * alpha * Rat(p.v);
  QuadRat unit = numer * denom.inverse();
  check_unit_result(unit);
  return unit;
}

QuadRat prop2_unit(const Prop2Params& p) {
  validate(p);
  Int d = nonsquare_or_throw(pow_int(p.r, 2 * p.k) + p.x * p.x);

  // (x + sqrt(d)) (u + v(-x + sqrt(d))/r)^(2k)
  QuadRat base(d, Rat(p.u) - make_rat(p.v * p.x, p.r), make_rat(p.v, p.r));
  QuadRat unit = QuadRat(d, Rat(p.x), Rat(1)) * base.pow(2 * p.k);
  check_unit_result(unit);
  return unit;
}

QuadRat prop3_unit_value(unsigned long k, const Int& u, const Int& v, const Int& w, const Int& q,
                         const Int& r) {
  Int big = pow_int(r, k) + 4 * q * w;
  Int gamma = q * big;
  Int d = nonsquare_or_throw(pow_int(r, k) * big + (w + gamma) * (w + gamma));

  // (u + v(sqrt(d)-w-gamma)/r)^(2k) (sqrt(d)-w+gamma) (sqrt(d)+w+gamma)^2 / (r^k + 4qw)^2
  //
  // The denominator is (gamma/q)^2, not gamma^2: expanding the diagonalized
  // matrix product gives the unit as 2 sqrt(d) beta with an extra q^2 over the
  // displayed expression, and only this scaling reproduces the approximant
  // unit A_{s-1} + B_{s-1} sqrt(d) (checked against the expansion oracle).
  QuadRat base(d, Rat(u) - make_rat(v * (w + gamma), r), make_rat(v, r));
  QuadRat unit = base.pow(2 * k) * QuadRat(d, Rat(gamma - w), Rat(1)) *
                 QuadRat(d, Rat(w + gamma), Rat(1)).pow(2) * make_rat(q * q, gamma * gamma);
  check_unit_result(unit);
  return unit;
}

QuadRat prop3_unit(const Prop3Params& p) {
  validate(p);
  return prop3_unit_value(p.k, p.u, p.v, p.w, p.q, p.r);
}

}  // namespace lcf
