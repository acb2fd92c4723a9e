#pragma once

#include <stdexcept>
#include <string>

namespace lcf {

/// Base class for all domain errors raised by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// expand_sqrt: the radicand is a perfect square, so sqrt(d) is rational.
struct PerfectSquareError : Error {
  using Error::Error;
};

/// expand_sqrt: the fundamental period exceeds the configured bound.
struct PeriodTooLongError : Error {
  using Error::Error;
};

/// Arithmetic between elements of Q(sqrt(d1)) and Q(sqrt(d2)) with d1 != d2.
struct MismatchedRadicandError : Error {
  using Error::Error;
};

/// Inversion of zero in Q(sqrt(d)).
struct ZeroDivisorError : Error {
  using Error::Error;
};

/// lemma1_check: the supplied word is not a palindrome.
struct NotPalindromicError : Error {
  using Error::Error;
};

/// eval_finite: a tail of the word evaluates to 0 where an inverse is needed.
struct EvalUndefinedError : Error {
  using Error::Error;
};

/// normalize: the rewrite budget was exhausted (malformed input).
struct NonTerminatingError : Error {
  using Error::Error;
};

/// props: a stated hypothesis (positivity, integrality, matrix identity) fails.
struct HypothesisViolatedError : Error {
  using Error::Error;
};

/// props: a closed-form unit expression did not evaluate to an algebraic
/// integer of norm +-1.
struct NonUnitError : Error {
  using Error::Error;
};

/// families: parameters violate the family's hypotheses.
struct InadmissibleError : Error {
  using Error::Error;
};

/// families: the sign-flip derivation did not settle into the expected period.
struct NormalizationMismatchError : Error {
  using Error::Error;
};

}  // namespace lcf
