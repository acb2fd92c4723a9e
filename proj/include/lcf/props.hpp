#pragma once

#include <vector>

#include "lcf/int.hpp"
#include "lcf/quadratic.hpp"
#include "lcf/word.hpp"

namespace lcf {

// Parameter tuples for the three period-assembly schemes. Hypotheses are
// validated by the operations and violations raise HypothesisViolatedError.

struct Prop1Params {
  unsigned long k = 1;
  Int u, v, w, r;
  Rat x;  // rational with w*x and 2*v*x integers; r*w/v must be an integer
};

struct Prop2Params {
  unsigned long k = 1;
  Int u, v, x, r;
};

struct Prop3Params {
  unsigned long k = 1;
  Int u, v, w, q, r;
};

struct AssembledCF {
  Int d;
  Int a0;
  Word period;
};

/// The target matrix N_n each supplied word must multiply out to.
Mat2 prop1_matrix(const Prop1Params& p, unsigned long n);
Mat2 prop2_matrix(const Prop2Params& p, unsigned long n);
Mat2 prop3_matrix(const Prop3Params& p, unsigned long n);

/// Builds the full predicted period of sqrt(d) out of the k supplied words
/// (n_words[n] must expand N_n with positive entries):
///   prop1: words k-1..0, 2vx, mirrored words 0..k-1, 2wx  (d = w r^k / v + w^2 x^2)
///   prop2: words k-1..0,      mirrored words 0..k-1, 2x   (d = r^2k + x^2)
///   prop3: words k-1..0, 2q, 2q, mirrored words, 2 a0     (d = r^k L + (w + q L)^2,
///                                                          L = r^k + 4 q w)
/// Each assembly also certifies the implied palindromic word via lemma1_check.
AssembledCF prop1_assemble(const Prop1Params& p, const std::vector<Word>& n_words);
AssembledCF prop2_assemble(const Prop2Params& p, const std::vector<Word>& n_words);
AssembledCF prop3_assemble(const Prop3Params& p, const std::vector<Word>& n_words);

/// Closed-form fundamental units, evaluated exactly in Q(sqrt(d)). The result
/// must come out with integer coordinates and norm +-1, else NonUnitError.
QuadRat prop1_unit(const Prop1Params& p);
QuadRat prop2_unit(const Prop2Params& p);
QuadRat prop3_unit(const Prop3Params& p);

/// prop3's unit expression with the power term (u + v(sqrt(d)-w-gamma)/r)^(2k);
/// exposed separately because the k = 0 specialization is still a valid unit
/// (used by the 2k+1 = 1 instances of the t2 family).
QuadRat prop3_unit_value(unsigned long k, const Int& u, const Int& v, const Int& w, const Int& q,
                         const Int& r);

}  // namespace lcf
