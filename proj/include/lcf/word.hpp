#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "lcf/int.hpp"

namespace lcf {

/// A word of partial quotients. Formal words may contain zero or negative
/// entries; a regular word has entries >= 1 beyond index 0.
using Word = std::vector<Int>;

struct Mat2 {
  Int m11{1}, m12{0}, m21{0}, m22{1};

  static Mat2 identity() { return {}; }
  /// [[a,1],[1,0]], the matrix of a single partial quotient.
  static Mat2 cf_digit(const Int& a) { return {a, 1, 1, 0}; }

  Mat2 operator*(const Mat2& o) const;
  Mat2 transposed() const { return {m11, m21, m12, m22}; }
  Int det() const { return m11 * m22 - m12 * m21; }
  bool symmetric() const { return m12 == m21; }
  bool operator==(const Mat2&) const = default;
};

/// Left-to-right product of [[a_i,1],[1,0]]; the empty word maps to identity.
Mat2 matrix_of_word(const Word& w);

Word reversed(Word w);
bool is_palindrome(const Word& w);
/// Entries >= 1 beyond index 0 (index 0 arbitrary).
bool is_regular(const Word& w);
bool all_positive(const Word& w);

/// Exact value of the finite continued fraction [w0; w1, ...].
/// Throws EvalUndefinedError when a tail evaluates to 0 where an inverse is
/// required (or on the empty word).
Rat eval_finite(const Word& w);

inline constexpr std::size_t kDefaultRewriteBudget = 10000;

/// Removes zero and negative interior entries by the rewrites
///   [m, n, 0, p, t] -> [m, n+p, t]
///   [m, -n, t]      -> [m-1, 1, n-1, -t]
/// applied left to right at the first offending entry, plus collapsing of a
/// trailing zero. Value-preserving wherever eval_finite is defined on both
/// sides. Throws NonTerminatingError past `budget` rewrites.
Word normalize(Word w, std::size_t budget = kDefaultRewriteBudget);

struct Lemma1Result {
  Int w, u, v;    // the symmetric word matrix [[w,u],[u,v]]
  bool ratio_ok;  // sqrt(w/v) satisfies the periodic fixed-point identity
};

/// For a palindromic word (q0, q1, ..., q1, q0) of positive entries, reads
/// off the symmetric matrix and certifies that sqrt(w/v) has the periodic
/// expansion [q0; q1, ..., q1, 2*q0 repeated]. Throws NotPalindromicError.
Lemma1Result lemma1_check(const Word& word);

/// "1,2,4,2,1,8"
std::string word_str(const Word& w);
/// Parses a comma-separated list of integers; throws std::invalid_argument.
Word parse_word(const std::string& csv);

}  // namespace lcf
