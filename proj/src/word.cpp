#include "lcf/word.hpp"

#include <algorithm>
#include <sstream>

#include "lcf/cf.hpp"
#include "lcf/error.hpp"

namespace lcf {

Mat2 Mat2::operator*(const Mat2& o) const {
  return {m11 * o.m11 + m12 * o.m21, m11 * o.m12 + m12 * o.m22, m21 * o.m11 + m22 * o.m21,
          m21 * o.m12 + m22 * o.m22};
}

Mat2 matrix_of_word(const Word& w) {
  Mat2 m;
  for (const Int& a : w) m = m * Mat2::cf_digit(a);
  return m;
}

Word reversed(Word w) {
  std::reverse(w.begin(), w.end());
  return w;
}

bool is_palindrome(const Word& w) { return std::equal(w.begin(), w.end(), w.rbegin()); }

bool is_regular(const Word& w) {
  for (std::size_t i = 1; i < w.size(); ++i)
    if (w[i] < 1) return false;
  return true;
}

bool all_positive(const Word& w) {
  return std::all_of(w.begin(), w.end(), [](const Int& a) { return a >= 1; });
}

Rat eval_finite(const Word& w) {
  if (w.empty()) throw EvalUndefinedError("eval_finite: empty word");
  Rat t(w.back());
  for (std::size_t i = w.size() - 1; i-- > 0;) {
    if (t == 0) throw EvalUndefinedError("eval_finite: zero tail at index " + std::to_string(i + 1));
    t = Rat(w[i]) + Rat(1) / t;
  }
  return t;
}

Word normalize(Word w, std::size_t budget) {
  std::size_t steps = 0;
  auto charge = [&] {
    if (++steps > budget) throw NonTerminatingError("normalize: rewrite budget exceeded");
  };
  for (;;) {
    if (w.size() >= 2 && w.back() == 0) {  // trailing (x, 0) collapses
      charge();
      w.pop_back();
      continue;
    }
    std::size_t i = 1;
    while (i < w.size() && w[i] >= 1) ++i;
    if (i >= w.size()) return w;
    charge();
    if (w[i] == 0) {
      // interior zero, both neighbours exist: [n, 0, p] -> [n + p]
      w[i - 1] += w[i + 1];
      w.erase(w.begin() + i, w.begin() + i + 2);
    } else {
      Int n = -w[i];
      w[i - 1] -= 1;
      w[i] = 1;
      w.insert(w.begin() + i + 1, n - 1);
      for (std::size_t j = i + 2; j < w.size(); ++j) w[j] = -w[j];
    }
  }
}

Lemma1Result lemma1_check(const Word& word) {
  if (word.size() < 2)
    throw std::invalid_argument("lemma1_check: need at least two partial quotients");
  if (!all_positive(word))
    throw std::invalid_argument("lemma1_check: entries must be positive");
  if (!is_palindrome(word)) throw NotPalindromicError("lemma1_check: word is not a palindrome");

  Mat2 m = matrix_of_word(word);  // symmetric: palindromic product of symmetric matrices
  Lemma1Result r{m.m11, m.m12, m.m22, false};
  Word period(word.begin() + 1, word.end() - 1);
  period.push_back(2 * word.front());
  r.ratio_ok = eval_periodic_fixed_point(word.front(), period);
  return r;
}

std::string word_str(const Word& w) {
  std::ostringstream os;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) os << ',';
    os << w[i];
  }
  return os.str();
}

Word parse_word(const std::string& csv) {
  Word out;
  std::size_t pos = 0;
  while (pos <= csv.size()) {
    std::size_t comma = csv.find(',', pos);
    std::string tok = csv.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    // trim spaces
    std::size_t b = tok.find_first_not_of(" \t");
    std::size_t e = tok.find_last_not_of(" \t");
    if (b == std::string::npos) throw std::invalid_argument("parse_word: empty entry");
    out.emplace_back(tok.substr(b, e - b + 1), 10);  // throws std::invalid_argument on junk
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (out.empty()) throw std::invalid_argument("parse_word: empty word");
  return out;
}

}  // namespace lcf
