#include "lcf/families.hpp"

#include <algorithm>
#include <stdexcept>

#include "lcf/error.hpp"
#include "lcf/props.hpp"

namespace lcf {

namespace {

struct FamilyMeta {
  FamilyId id;
  const char* name;
  std::vector<std::string> params;  // canonical order, k last
  unsigned long k_min;
  bool signflip;
};

const std::vector<FamilyMeta>& metas() {
  static const std::vector<FamilyMeta> m = {
      {FamilyId::T1, "t1", {"a", "m", "s", "k"}, 1, false},
      {FamilyId::T1A, "t1a", {"a", "m", "s", "k"}, 1, true},
      {FamilyId::C_6KM2, "c_6km2", {"m", "s", "k"}, 1, false},
      {FamilyId::T1B, "t1b", {"a", "m", "s", "k"}, 1, true},
      {FamilyId::C_6K, "c_6k", {"m", "s", "k"}, 1, false},
      {FamilyId::T1C, "t1c", {"a", "m", "s", "k"}, 1, true},
      {FamilyId::C1_8K, "c1_8k", {"m", "s", "k"}, 2, false},
      {FamilyId::C2_8KM4, "c2_8km4", {"s", "k"}, 3, false},
      {FamilyId::C3_8K, "c3_8k", {"m", "s", "k"}, 2, false},
      {FamilyId::T2, "t2", {"b", "s", "k"}, 1, false},
      {FamilyId::C6_6KP1, "c6_6kp1", {"b", "s", "k"}, 1, true},
      {FamilyId::C7_6KP5, "c7_6kp5", {"b", "s", "k"}, 1, true},
      {FamilyId::MADDEN_INTRO, "madden_intro", {"b", "n", "k"}, 1, false},
  };
  return m;
}

const FamilyMeta& meta(FamilyId id) {
  for (const FamilyMeta& m : metas())
    if (m.id == id) return m;
  throw std::logic_error("unknown family id");
}

std::vector<Int> powers(const Int& base, unsigned long upto) {
  std::vector<Int> p(upto + 1);
  p[0] = 1;
  for (unsigned long i = 1; i <= upto; ++i) p[i] = p[i - 1] * base;
  return p;
}

unsigned long k_of(const ParamMap& pm) {
  const Int& k = pm.at("k");
  if (!k.fits_ulong_p()) throw InadmissibleError("k too large");
  return k.get_ui();
}

FamilyInstance start(FamilyId id, const ParamMap& pm) {
  FamilyInstance inst;
  inst.id = id;
  inst.params = pm;
  return inst;
}

void finalize(FamilyInstance& inst, unsigned long k) {
  inst.predicted_len = inst.predicted_period.size();
  if (inst.predicted_len != predicted_length_formula(inst.id, k))
    throw std::logic_error("family transcription bug: wrong period length");
  if (!all_positive(inst.predicted_period))
    throw std::logic_error("family transcription bug: nonpositive entry");
  if (inst.predicted_period.back() != 2 * inst.a0)
    throw std::logic_error("family transcription bug: last entry != 2*a0");
}

// ---- generators: one per family, transcribed from the displayed expansions
// and validated against the expansion oracle (mismatching displays carry a
// display-mismatch note).

FamilyInstance gen_t1(const ParamMap& pm) {
  Int a = pm.at("a"), m = pm.at("m"), s = pm.at("s");
  unsigned long k = k_of(pm);
  Int r = 1 + 2 * a * m * s;
  auto rp = powers(r, k);
  Int A = s + a * rp[k];

  FamilyInstance inst = start(FamilyId::T1, pm);
  inst.a0 = m * A;
  inst.d = m * (2 * rp[k] + m * A * A);
  Word& w = inst.predicted_period;
  for (unsigned long n = k; n-- > 0;) {
    w.push_back(a * rp[k - 1 - n]);
    w.push_back(2 * a * m * rp[n]);
  }
  w.push_back(A);
  for (unsigned long n = 0; n < k; ++n) {
    w.push_back(2 * a * m * rp[n]);
    w.push_back(a * rp[k - 1 - n]);
  }
  w.push_back(2 * inst.a0);
  finalize(inst, k);
  inst.predicted_unit =
      prop1_unit({k, 1 + 2 * a * a * m * rp[k - 1], a, 2 * a * m, r, make_rat(A, 2 * a)});
  return inst;
}

FamilyInstance gen_t1a(const ParamMap& pm) {
  Int a = pm.at("a"), m = pm.at("m"), s = pm.at("s");
  unsigned long k = k_of(pm);
  Int rho = 2 * a * m * s - 1;
  auto rp = powers(rho, k);
  Int A = a * rp[k] - s;

  FamilyInstance inst = start(FamilyId::T1A, pm);
  inst.a0 = m * A;
  inst.d = m * (2 * rp[k] + m * A * A);
  Word& w = inst.predicted_period;
  for (unsigned long n = k; n-- > 0;) {
    w.push_back(a * rp[k - 1 - n] - 1);
    w.push_back(1);
    w.push_back(2 * a * m * rp[n] - 1);
  }
  w.push_back(A);
  for (unsigned long n = 0; n < k; ++n) {
    w.push_back(2 * a * m * rp[n] - 1);
    w.push_back(1);
    w.push_back(a * rp[k - 1 - n] - 1);
  }
  w.push_back(2 * inst.a0);
  finalize(inst, k);
  inst.notes.push_back("display-mismatch: mirror side uses base 2ams-1, not 1+2ams");
  return inst;
}

FamilyInstance gen_c_6km2(const ParamMap& pm) {
  Int m = pm.at("m"), s = pm.at("s");
  unsigned long k = k_of(pm);
  Int rho = 2 * m * s - 1;
  auto rp = powers(rho, k);
  Int A = rp[k] - s;

  FamilyInstance inst = start(FamilyId::C_6KM2, pm);
  inst.a0 = m * A + 1;
  inst.d = m * (2 * rp[k] + m * A * A);
  Word& w = inst.predicted_period;
  w.push_back(2 * m * rp[k - 1] - 1);
  for (unsigned long n = k - 1; n-- > 0;) {
    w.push_back(rp[k - 1 - n] - 1);
    w.push_back(1);
    w.push_back(2 * m * rp[n] - 1);
  }
  w.push_back(A);
  for (unsigned long n = 0; n + 1 < k; ++n) {
    w.push_back(2 * m * rp[n] - 1);
    w.push_back(1);
    w.push_back(rp[k - 1 - n] - 1);
  }
  w.push_back(2 * m * rp[k - 1] - 1);
  w.push_back(2 * m * A + 2);
  finalize(inst, k);
  inst.notes.push_back("display-mismatch: mirror side uses base 2ms-1, not 1+2ms");
  return inst;
}

FamilyInstance gen_t1b(const ParamMap& pm) {
  Int a = pm.at("a"), m = pm.at("m"), s = pm.at("s");
  unsigned long k = k_of(pm);
  Int rho = 2 * a * m * s - 1;
  auto rp = powers(rho, k);
  Int A = s + a * rp[k];

  FamilyInstance inst = start(FamilyId::T1B, pm);
  inst.a0 = m * A - 1;
  inst.d = m * (m * A * A - 2 * rp[k]);
  Word& w = inst.predicted_period;
  for (unsigned long n = k; n-- > 0;) {
    w.push_back(1);
    w.push_back(a * rp[k - 1 - n] - 1);
    w.push_back(2 * a * m * rp[n] - 1);
  }
  w.push_back(1);
  w.push_back(A - 2);
  w.push_back(1);
  for (unsigned long n = 0; n < k; ++n) {
    w.push_back(2 * a * m * rp[n] - 1);
    w.push_back(a * rp[k - 1 - n] - 1);
    w.push_back(1);
  }
  w.push_back(2 * m * A - 2);
  finalize(inst, k);
  return inst;
}

FamilyInstance gen_c_6k(const ParamMap& pm) {
  Int m = pm.at("m"), s = pm.at("s");
  unsigned long k = k_of(pm);
  Int rho = 2 * m * s - 1;
  auto rp = powers(rho, k);
  Int A = s + rp[k];

  FamilyInstance inst = start(FamilyId::C_6K, pm);
  inst.a0 = m * A - 1;
  inst.d = m * (m * A * A - 2 * rp[k]);
  Word& w = inst.predicted_period;
  w.push_back(2 * m * rp[k - 1]);
  for (unsigned long n = k - 1; n-- > 0;) {
    w.push_back(1);
    w.push_back(rp[k - 1 - n] - 1);
    w.push_back(2 * m * rp[n] - 1);
  }
  w.push_back(1);
  w.push_back(A - 2);
  w.push_back(1);
  for (unsigned long n = 0; n + 1 < k; ++n) {
    w.push_back(2 * m * rp[n] - 1);
    w.push_back(rp[k - 1 - n] - 1);
    w.push_back(1);
  }
  w.push_back(2 * m * rp[k - 1]);
  w.push_back(2 * m * A - 2);
  finalize(inst, k);
  return inst;
}

FamilyInstance gen_t1c(const ParamMap& pm) {
  Int a = pm.at("a"), m = pm.at("m"), s = pm.at("s");
  unsigned long k = k_of(pm);
  Int r = 1 + 2 * a * m * s;
  auto rp = powers(r, k);
  Int A = a * rp[k] - s;

  FamilyInstance inst = start(FamilyId::T1C, pm);
  inst.a0 = m * A - 1;
  inst.d = m * (m * A * A - 2 * rp[k]);
  Word& w = inst.predicted_period;
  for (unsigned long n = k; n-- > 0;) {
    w.push_back(1);
    w.push_back(a * rp[k - 1 - n] - 2);
    w.push_back(1);
    w.push_back(2 * a * m * rp[n] - 2);
  }
  w.push_back(1);
  w.push_back(A - 2);
  w.push_back(1);
  for (unsigned long n = 0; n < k; ++n) {
    w.push_back(2 * a * m * rp[n] - 2);
    w.push_back(1);
    w.push_back(a * rp[k - 1 - n] - 2);
    w.push_back(1);
  }
  w.push_back(2 * m * A - 2);
  finalize(inst, k);
  return inst;
}

FamilyInstance gen_c1_8k(const ParamMap& pm) {
  Int m = pm.at("m"), s = pm.at("s");
  unsigned long k = k_of(pm);
  Int r = 1 + 2 * m * s;
  auto rp = powers(r, k);
  Int A = rp[k] - s;

  FamilyInstance inst = start(FamilyId::C1_8K, pm);
  inst.a0 = m * A - 2;
  inst.d = m * (m * A * A - 2 * rp[k]);
  Word& w = inst.predicted_period;
  w.push_back(1);
  w.push_back(2 * m * rp[k - 1] - 3);
  for (unsigned long n = k - 1; n-- > 0;) {
    w.push_back(1);
    w.push_back(rp[k - 1 - n] - 2);
    w.push_back(1);
    w.push_back(2 * m * rp[n] - 2);
  }
  w.push_back(1);
  w.push_back(A - 2);
  w.push_back(1);
  for (unsigned long n = 0; n + 1 < k; ++n) {
    w.push_back(2 * m * rp[n] - 2);
    w.push_back(1);
    w.push_back(rp[k - 1 - n] - 2);
    w.push_back(1);
  }
  w.push_back(2 * m * rp[k - 1] - 3);
  w.push_back(1);
  w.push_back(2 * m * A - 4);
  finalize(inst, k);
  return inst;
}

FamilyInstance gen_c2_8km4(const ParamMap& pm) {
  Int s = pm.at("s");
  unsigned long k = k_of(pm);
  Int r = 1 + 2 * s;
  auto rp = powers(r, k);
  Int A = rp[k] - s;

  FamilyInstance inst = start(FamilyId::C2_8KM4, pm);
  inst.a0 = A - 2;
  inst.d = A * A - 2 * rp[k];
  Word& w = inst.predicted_period;
  w.push_back(1);
  w.push_back(2 * rp[k - 1] - 3);
  for (unsigned long n = k - 1; n-- > 1;) {
    w.push_back(1);
    w.push_back(rp[k - 1 - n] - 2);
    w.push_back(1);
    w.push_back(2 * rp[n] - 2);
  }
  w.push_back(1);
  w.push_back(rp[k - 1] - 2);
  w.push_back(2);
  w.push_back(A - 2);
  w.push_back(2);
  w.push_back(rp[k - 1] - 2);
  w.push_back(1);
  for (unsigned long n = 1; n + 1 < k; ++n) {
    w.push_back(2 * rp[n] - 2);
    w.push_back(1);
    w.push_back(rp[k - 1 - n] - 2);
    w.push_back(1);
  }
  w.push_back(2 * rp[k - 1] - 3);
  w.push_back(1);
  w.push_back(2 * A - 4);
  finalize(inst, k);
  inst.notes.push_back(
      "display-mismatch: mirror block exponent is k-2 and final entry is 2((1+2s)^k-s)-4");
  return inst;
}

FamilyInstance gen_c3_8k(const ParamMap& pm) {
  Int m = pm.at("m"), s = pm.at("s");
  unsigned long k = k_of(pm);
  Int r = 1 + 4 * m * s;
  auto rp = powers(r, k);
  Int A = 2 * rp[k] - s;

  FamilyInstance inst = start(FamilyId::C3_8K, pm);
  inst.a0 = m * A - 1;
  inst.d = m * (m * A * A - 2 * rp[k]);
  Word& w = inst.predicted_period;
  w.push_back(2);
  w.push_back(4 * m * rp[k - 1] - 2);
  for (unsigned long n = k - 1; n-- > 0;) {
    w.push_back(1);
    w.push_back(2 * rp[k - 1 - n] - 2);
    w.push_back(1);
    w.push_back(4 * m * rp[n] - 2);
  }
  w.push_back(1);
  w.push_back(A - 2);
  w.push_back(1);
  for (unsigned long n = 0; n + 1 < k; ++n) {
    w.push_back(4 * m * rp[n] - 2);
    w.push_back(1);
    w.push_back(2 * rp[k - 1 - n] - 2);
    w.push_back(1);
  }
  w.push_back(4 * m * rp[k - 1] - 2);
  w.push_back(2);
  w.push_back(2 * m * A - 2);
  finalize(inst, k);
  return inst;
}

FamilyInstance gen_t2(const ParamMap& pm) {
  Int b = pm.at("b"), s = pm.at("s");
  unsigned long k = k_of(pm);
  Int r = 4 * b * s + 1;
  auto rp = powers(r, k);

  FamilyInstance inst = start(FamilyId::T2, pm);
  inst.a0 = b * rp[k] + s;
  inst.d = rp[k] + inst.a0 * inst.a0;
  Word& w = inst.predicted_period;
  for (unsigned long i = 1; i <= 2 * k; ++i)
    w.push_back(i % 2 == 1 ? 2 * b * rp[(i - 1) / 2] : 2 * b * rp[k - i / 2]);
  w.push_back(2 * inst.a0);
  finalize(inst, k);

  if (k % 2 == 0) {
    inst.predicted_unit =
        prop2_unit({k / 2, 1 + 4 * b * b * rp[k - 1], 2 * b, inst.a0, r});
  } else {
    // odd exponent k = 2K+1; K = 0 is still a valid unit expression
    unsigned long K = (k - 1) / 2;
    inst.predicted_unit =
        prop3_unit_value(K, 1 + 4 * b * b * rp[k - 1], 2 * b, s, b * rp[K], r);
  }
  return inst;
}

FamilyInstance gen_c6_6kp1(const ParamMap& pm) {
  Int b = pm.at("b"), s = pm.at("s");
  unsigned long k = k_of(pm);
  Int rho = 4 * b * s - 1;
  auto rp = powers(rho, 2 * k);

  FamilyInstance inst = start(FamilyId::C6_6KP1, pm);
  inst.a0 = b * rp[2 * k] - s;
  inst.d = rp[2 * k] + inst.a0 * inst.a0;
  Word& w = inst.predicted_period;
  for (unsigned long j = 0; j < k; ++j) {
    w.push_back(2 * b * rp[j] - 1);
    w.push_back(1);
    w.push_back(2 * b * rp[2 * k - 1 - j] - 1);
  }
  for (unsigned long j = k; j-- > 0;) {
    w.push_back(2 * b * rp[2 * k - 1 - j] - 1);
    w.push_back(1);
    w.push_back(2 * b * rp[j] - 1);
  }
  w.push_back(2 * inst.a0);
  finalize(inst, k);
  inst.notes.push_back("display-mismatch: a separator 1 is required in every mirrored triple");
  return inst;
}

FamilyInstance gen_c7_6kp5(const ParamMap& pm) {
  Int b = pm.at("b"), s = pm.at("s");
  unsigned long k = k_of(pm);
  Int rho = 4 * b * s - 1;
  auto rp = powers(rho, 2 * k + 1);

  FamilyInstance inst = start(FamilyId::C7_6KP5, pm);
  inst.a0 = b * rp[2 * k + 1] + s - 1;
  inst.d = (inst.a0 + 1) * (inst.a0 + 1) - rp[2 * k + 1];
  Word& w = inst.predicted_period;
  for (unsigned long j = 0; j < k; ++j) {
    w.push_back(1);
    w.push_back(2 * b * rp[j] - 1);
    w.push_back(2 * b * rp[2 * k - j] - 1);
  }
  w.push_back(1);
  w.push_back(2 * b * rp[k] - 1);
  w.push_back(2 * b * rp[k] - 1);
  w.push_back(1);
  for (unsigned long j = k; j-- > 0;) {
    w.push_back(2 * b * rp[2 * k - j] - 1);
    w.push_back(2 * b * rp[j] - 1);
    w.push_back(1);
  }
  w.push_back(2 * inst.a0);
  finalize(inst, k);
  inst.notes.push_back("display-mismatch: final entry is 2*a0, not 2*a0-2");
  return inst;
}

FamilyInstance gen_madden(const ParamMap& pm) {
  Int b = pm.at("b"), n = pm.at("n");
  unsigned long k = k_of(pm);
  Int R = 1 + 2 * b * n;
  auto rp = powers(R, k);

  FamilyInstance inst = start(FamilyId::MADDEN_INTRO, pm);
  inst.a0 = b * rp[k] + n;
  inst.d = inst.a0 * inst.a0 + 2 * rp[k];
  Word& w = inst.predicted_period;
  for (unsigned long j = 0; j < k; ++j) {
    w.push_back(b * rp[j]);
    w.push_back(2 * b * rp[k - 1 - j]);
  }
  w.push_back(inst.a0);
  for (unsigned long j = k; j-- > 0;) {
    w.push_back(2 * b * rp[k - 1 - j]);
    w.push_back(b * rp[j]);
  }
  w.push_back(2 * inst.a0);
  finalize(inst, k);
  return inst;
}

// ---- sign-flip templates: the t1/t2 words evaluated with signed parameters.

struct FormalCF {
  Int d;
  Int a0;
  Word period;
};

FormalCF t1_formal(const Int& a, const Int& m, const Int& s, unsigned long k) {
  Int r = 1 + 2 * a * m * s;
  auto rp = powers(r, k);
  Int A = s + a * rp[k];
  FormalCF f;
  f.a0 = m * A;
  f.d = m * (2 * rp[k] + m * A * A);
  for (unsigned long n = k; n-- > 0;) {
    f.period.push_back(a * rp[k - 1 - n]);
    f.period.push_back(2 * a * m * rp[n]);
  }
  f.period.push_back(A);
  for (unsigned long n = 0; n < k; ++n) {
    f.period.push_back(2 * a * m * rp[n]);
    f.period.push_back(a * rp[k - 1 - n]);
  }
  f.period.push_back(2 * f.a0);
  return f;
}

FormalCF t2_formal(const Int& b, const Int& s, unsigned long k) {
  Int r = 1 + 4 * b * s;
  auto rp = powers(r, k);
  FormalCF f;
  f.a0 = b * rp[k] + s;
  f.d = rp[k] + f.a0 * f.a0;
  for (unsigned long i = 1; i <= 2 * k; ++i)
    f.period.push_back(i % 2 == 1 ? 2 * b * rp[(i - 1) / 2] : 2 * b * rp[k - i / 2]);
  f.period.push_back(2 * f.a0);
  return f;
}

}  // namespace

const char* family_name(FamilyId id) { return meta(id).name; }

std::optional<FamilyId> family_from_name(std::string_view name) {
  for (const FamilyMeta& m : metas())
    if (name == m.name) return m.id;
  return std::nullopt;
}

const std::vector<FamilyId>& all_families() {
  static const std::vector<FamilyId> ids = [] {
    std::vector<FamilyId> v;
    for (const FamilyMeta& m : metas()) v.push_back(m.id);
    std::sort(v.begin(), v.end(), [](FamilyId x, FamilyId y) {
      return std::string_view(family_name(x)) < std::string_view(family_name(y));
    });
    return v;
  }();
  return ids;
}

const std::vector<std::string>& family_param_names(FamilyId id) { return meta(id).params; }

unsigned long family_k_min(FamilyId id) { return meta(id).k_min; }

bool has_signflip_derivation(FamilyId id) { return meta(id).signflip; }

std::size_t predicted_length_formula(FamilyId id, unsigned long k) {
  switch (id) {
    case FamilyId::T1: return 4 * k + 2;
    case FamilyId::T1A: return 6 * k + 2;
    case FamilyId::C_6KM2: return 6 * k - 2;
    case FamilyId::T1B: return 6 * k + 4;
    case FamilyId::C_6K: return 6 * k;
    case FamilyId::T1C: return 8 * k + 4;
    case FamilyId::C1_8K: return 8 * k;
    case FamilyId::C2_8KM4: return 8 * k - 4;
    case FamilyId::C3_8K: return 8 * k;
    case FamilyId::T2: return 2 * k + 1;
    case FamilyId::C6_6KP1: return 6 * k + 1;
    case FamilyId::C7_6KP5: return 6 * k + 5;
    case FamilyId::MADDEN_INTRO: return 4 * k + 2;
  }
  throw std::logic_error("unknown family id");
}

Admissibility admissible(FamilyId id, const ParamMap& params) {
  const std::vector<std::string>& names = family_param_names(id);
  for (const auto& [key, value] : params)
    if (std::find(names.begin(), names.end(), key) == names.end())
      return {false, "unexpected parameter '" + key + "'"};
  for (const std::string& name : names) {
    auto it = params.find(name);
    if (it == params.end()) return {false, "missing parameter '" + name + "'"};
    if (it->second < 1) return {false, name + ">=1 required"};
  }
  const Int& k = params.at("k");
  switch (id) {
    case FamilyId::T1A:
    case FamilyId::T1B:
      if (params.at("a") < 2) return {false, "a>1 required"};
      break;
    case FamilyId::T1C:
      if (params.at("a") < 3) return {false, "a>2 required"};
      break;
    case FamilyId::C_6KM2:
    case FamilyId::C_6K:
      if (params.at("m") * params.at("s") < 2) return {false, "ms>1 required"};
      break;
    case FamilyId::C1_8K:
      // m = 1 is the c2_8km4 shape; the displayed word needs 2m-2 >= 1
      if (params.at("m") < 2) return {false, "m>1 required"};
      if (k < 2) return {false, "k>1 required"};
      break;
    case FamilyId::C2_8KM4:
      if (k < 3) return {false, "k>2 required"};
      break;
    case FamilyId::C3_8K:
      if (k < 2) return {false, "k>1 required"};
      break;
    default:
      break;
  }
  return {true, ""};
}

FamilyInstance generate(FamilyId id, const ParamMap& params) {
  Admissibility adm = admissible(id, params);
  if (!adm.ok)
    throw InadmissibleError(std::string(family_name(id)) + ": " + adm.reason);
  switch (id) {
    case FamilyId::T1: return gen_t1(params);
    case FamilyId::T1A: return gen_t1a(params);
    case FamilyId::C_6KM2: return gen_c_6km2(params);
    case FamilyId::T1B: return gen_t1b(params);
    case FamilyId::C_6K: return gen_c_6k(params);
    case FamilyId::T1C: return gen_t1c(params);
    case FamilyId::C1_8K: return gen_c1_8k(params);
    case FamilyId::C2_8KM4: return gen_c2_8km4(params);
    case FamilyId::C3_8K: return gen_c3_8k(params);
    case FamilyId::T2: return gen_t2(params);
    case FamilyId::C6_6KP1: return gen_c6_6kp1(params);
    case FamilyId::C7_6KP5: return gen_c7_6kp5(params);
    case FamilyId::MADDEN_INTRO: return gen_madden(params);
  }
  throw std::logic_error("unknown family id");
}

FamilyInstance derive_by_signflip(FamilyId id, const ParamMap& params) {
  if (!has_signflip_derivation(id))
    throw InadmissibleError(std::string(family_name(id)) + ": no sign-flip derivation");
  Admissibility adm = admissible(id, params);
  if (!adm.ok)
    throw InadmissibleError(std::string(family_name(id)) + ": " + adm.reason);

  unsigned long k = k_of(params);
  FormalCF f;
  switch (id) {
    case FamilyId::T1A: {
      const Int &a = params.at("a"), &m = params.at("m"), &s = params.at("s");
      f = (k % 2 == 0) ? t1_formal(a, m, -s, k) : t1_formal(a, -m, s, k);
      break;
    }
    case FamilyId::T1B: {
      const Int &a = params.at("a"), &m = params.at("m"), &s = params.at("s");
      f = (k % 2 == 1) ? t1_formal(-a, m, s, k) : t1_formal(-a, -m, -s, k);
      break;
    }
    case FamilyId::T1C: {
      const Int &a = params.at("a"), &m = params.at("m"), &s = params.at("s");
      f = t1_formal(-a, -m, s, k);
      break;
    }
    case FamilyId::C6_6KP1:
      f = t2_formal(params.at("b"), -params.at("s"), 2 * k);
      break;
    case FamilyId::C7_6KP5:
      f = t2_formal(-params.at("b"), params.at("s"), 2 * k + 1);
      break;
    default:
      throw std::logic_error("unreachable");
  }

  // Normalize three period copies; rewrites at a copy boundary borrow from the
  // next copy, so the mangling is confined to the final copy and the first two
  // must agree entry-for-entry.
  std::size_t ell = predicted_length_formula(id, k);
  Word full;
  full.reserve(1 + 3 * f.period.size());
  full.push_back(f.a0);
  for (int copy = 0; copy < 3; ++copy)
    full.insert(full.end(), f.period.begin(), f.period.end());
  Word norm = normalize(std::move(full),
                        std::max<std::size_t>(kDefaultRewriteBudget, 64 * (3 * f.period.size() + 1)));
  if (norm.size() < 1 + 2 * ell)
    throw NormalizationMismatchError(std::string(family_name(id)) +
                                     ": normalized stream shorter than two predicted periods");
  if (!std::equal(norm.begin() + 1, norm.begin() + 1 + ell, norm.begin() + 1 + ell))
    throw NormalizationMismatchError(std::string(family_name(id)) +
                                     ": normalized stream is not periodic with the predicted length");

  FamilyInstance inst = start(id, params);
  inst.d = f.d;
  inst.a0 = norm[0];
  inst.predicted_period.assign(norm.begin() + 1, norm.begin() + 1 + ell);
  inst.predicted_len = ell;
  return inst;
}

}  // namespace lcf
