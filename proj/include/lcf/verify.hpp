#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lcf/cf.hpp"
#include "lcf/families.hpp"
#include "lcf/int.hpp"

namespace lcf {

struct VerifyOptions {
  std::size_t max_period = kDefaultMaxPeriod;
  Int square_free_bound = Int(kDefaultSquareFreeBound);
};

/// Outcome of checking one family instance against the expansion oracle.
struct VerifyReport {
  FamilyInstance instance;
  Int oracle_a0;
  Word oracle_period;
  bool word_match = false;
  bool len_match = false;
  std::optional<bool> unit_match;  // present iff the family predicts a unit
  int pell_sign = 0;               // (-1)^(oracle period length)
  int d_mod8 = 0;
  SquareFreeStatus square_free;
  std::vector<std::string> notes;

  bool passed() const;
};

VerifyReport verify_instance(const FamilyInstance& inst, const VerifyOptions& opts = {});

/// generate + derive_by_signflip (where applicable) + oracle comparison.
VerifyReport verify_family(FamilyId id, const ParamMap& params, const VerifyOptions& opts = {});

/// One JSON object per report; all big integers as decimal strings.
std::string report_json_line(const VerifyReport& r);
std::string report_text(const VerifyReport& r);

struct SweepOptions {
  std::vector<FamilyId> families;  // empty means all
  unsigned long param_bound = 3;
  unsigned long k_bound = 4;
  unsigned jobs = 1;
  VerifyOptions verify;
};

struct SweepResult {
  std::vector<VerifyReport> reports;  // canonical order: family name, then parameter tuple
  std::size_t pass = 0;
  std::size_t fail = 0;
};

/// All admissible (family, params) tuples with parameters in 1..param_bound
/// and k in k_min..k_bound, in canonical order.
std::vector<std::pair<FamilyId, ParamMap>> enumerate_instances(std::vector<FamilyId> families,
                                                               unsigned long param_bound,
                                                               unsigned long k_bound);

/// Runs every instance (a work queue across `jobs` threads); results are
/// buffered and kept in canonical order regardless of parallelism.
SweepResult run_sweep(const SweepOptions& opts);

}  // namespace lcf
