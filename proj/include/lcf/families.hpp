#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lcf/int.hpp"
#include "lcf/quadratic.hpp"
#include "lcf/word.hpp"

namespace lcf {

/// The generated families, named by their CLI identifiers. The period length
/// of each family is a fixed linear function of the exponent parameter k.
enum class FamilyId {
  T1,           // l = 4k+2, params a,m,s,k
  T1A,          // l = 6k+2, params a>1,m,s,k
  C_6KM2,       // l = 6k-2, params m,s,k with ms>1
  T1B,          // l = 6k+4, params a>1,m,s,k
  C_6K,         // l = 6k,   params m,s,k with ms>1
  T1C,          // l = 8k+4, params a>2,m,s,k
  C1_8K,        // l = 8k,   params m>1,s,k>1
  C2_8KM4,      // l = 8k-4, params s,k>2
  C3_8K,        // l = 8k,   params m,s,k>1
  T2,           // l = 2k+1, params b,s,k
  C6_6KP1,      // l = 6k+1, params b,s,k
  C7_6KP5,      // l = 6k+5, params b,s,k
  MADDEN_INTRO  // l = 4k+2, params b,n,k
};

const char* family_name(FamilyId id);
std::optional<FamilyId> family_from_name(std::string_view name);
/// All thirteen families, sorted by name (the canonical report order).
const std::vector<FamilyId>& all_families();

/// Named positive integer parameters (a subset of a, b, m, n, s plus k).
using ParamMap = std::map<std::string, Int>;

/// The family's parameter names in canonical order, k last.
const std::vector<std::string>& family_param_names(FamilyId id);
/// Smallest k admitted by the family's hypotheses.
unsigned long family_k_min(FamilyId id);
/// Period length as a function of k.
std::size_t predicted_length_formula(FamilyId id, unsigned long k);
/// True for the families obtained by sign-flip substitution into t1/t2.
bool has_signflip_derivation(FamilyId id);

struct FamilyInstance {
  FamilyId id;
  ParamMap params;
  Int d;
  Int a0;
  Word predicted_period;
  std::size_t predicted_len = 0;
  std::optional<QuadRat> predicted_unit;
  std::vector<std::string> notes;
};

struct Admissibility {
  bool ok = false;
  std::string reason;  // empty when ok
};

/// Checks the family's printed hypotheses (positivity, a>1, a>2, ms>1, k
/// bounds). Unknown or missing parameter names are inadmissible with reason.
Admissibility admissible(FamilyId id, const ParamMap& params);

/// Emits d, a0, the predicted period word, the predicted length, and (for t1
/// and t2) the closed-form unit. Throws InadmissibleError.
FamilyInstance generate(FamilyId id, const ParamMap& params);

/// Second, independent derivation for the sign-flip families: substitutes
/// negative parameter values into the t1/t2 template and normalizes the
/// resulting formal period. Throws InadmissibleError for non-sign-flip
/// families and NormalizationMismatchError when the rewrite stream does not
/// settle into the predicted period length.
FamilyInstance derive_by_signflip(FamilyId id, const ParamMap& params);

}  // namespace lcf
