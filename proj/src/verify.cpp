#include "lcf/verify.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <string_view>
#include <thread>

#include <json.hpp>

#include "lcf/error.hpp"

namespace lcf {

bool VerifyReport::passed() const {
  if (!word_match || !len_match) return false;
  if (unit_match.has_value() && !*unit_match) return false;
  for (const std::string& n : notes)
    if (n.rfind("signflip-mismatch", 0) == 0 || n.rfind("error:", 0) == 0) return false;
  return true;
}

VerifyReport verify_instance(const FamilyInstance& inst, const VerifyOptions& opts) {
  VerifyReport r;
  r.instance = inst;
  r.notes = inst.notes;

  PeriodicCF oracle = expand_sqrt(inst.d, opts.max_period);
  r.oracle_a0 = oracle.a0;
  r.oracle_period = oracle.period;
  r.word_match = oracle.a0 == inst.a0 && oracle.period == inst.predicted_period;
  r.len_match = oracle.period_len() == inst.predicted_len;

  ExpansionUnit unit = unit_from_cf(oracle);
  r.pell_sign = unit.norm_sign;
  r.d_mod8 = static_cast<int>(mpz_fdiv_ui(inst.d.get_mpz_t(), 8));
  r.square_free = square_free_probe(inst.d, opts.square_free_bound);

  if (inst.predicted_unit.has_value()) {
    r.unit_match = (*inst.predicted_unit == unit.eps);
    if (r.d_mod8 == 5)
      r.notes.push_back(
          "unit-caveat: d = 5 (mod 8), the approximant unit may be a cube in the maximal order");
    if (r.square_free.kind == SquareFreeKind::HasSquareFactor)
      r.notes.push_back("unit-caveat: d has square factor " + r.square_free.factor.get_str() +
                        ", the unit is fundamental only for the order Z[sqrt(d)]");
  }
  return r;
}

VerifyReport verify_family(FamilyId id, const ParamMap& params, const VerifyOptions& opts) {
  FamilyInstance inst = generate(id, params);
  VerifyReport r = verify_instance(inst, opts);
  if (has_signflip_derivation(id)) {
    try {
      FamilyInstance flip = derive_by_signflip(id, params);
      if (flip.d != inst.d || flip.a0 != inst.a0 ||
          flip.predicted_period != inst.predicted_period)
        r.notes.push_back("signflip-mismatch: derivation paths disagree");
    } catch (const NormalizationMismatchError& e) {
      r.notes.push_back(std::string("signflip-mismatch: ") + e.what());
    }
  }
  return r;
}

namespace {

nlohmann::ordered_json word_json(const Word& w) {
  nlohmann::ordered_json a = nlohmann::ordered_json::array();
  for (const Int& e : w) a.push_back(e.get_str());
  return a;
}

}  // namespace

std::string report_json_line(const VerifyReport& r) {
  nlohmann::ordered_json j;
  j["family"] = family_name(r.instance.id);
  nlohmann::ordered_json pj;
  for (const std::string& name : family_param_names(r.instance.id)) {
    auto it = r.instance.params.find(name);
    pj[name] = it == r.instance.params.end() ? "?" : it->second.get_str();
  }
  j["params"] = pj;
  j["d"] = r.instance.d.get_str();
  j["a0"] = r.instance.a0.get_str();
  j["predicted_period"] = word_json(r.instance.predicted_period);
  j["oracle_period"] = word_json(r.oracle_period);
  j["word_match"] = r.word_match;
  j["len_match"] = r.len_match;
  if (r.unit_match.has_value())
    j["unit_match"] = *r.unit_match;
  else
    j["unit_match"] = nullptr;
  j["pell_sign"] = r.pell_sign;
  j["d_mod8"] = r.d_mod8;
  j["square_free"] = r.square_free.str();
  j["notes"] = r.notes;
  return j.dump();
}

std::string report_text(const VerifyReport& r) {
  std::ostringstream os;
  os << "family: " << family_name(r.instance.id) << "\n";
  os << "params:";
  for (const std::string& name : family_param_names(r.instance.id)) {
    auto it = r.instance.params.find(name);
    if (it != r.instance.params.end()) os << ' ' << name << '=' << it->second;
  }
  os << "\n";
  os << "d = " << r.instance.d << "  (d mod 8 = " << r.d_mod8 << ", " << r.square_free.str()
     << ")\n";
  os << "predicted: [" << r.instance.a0 << "; " << word_str(r.instance.predicted_period)
     << "]  l=" << r.instance.predicted_len << "\n";
  os << "oracle:    [" << r.oracle_a0 << "; " << word_str(r.oracle_period)
     << "]  l=" << r.oracle_period.size() << "\n";
  os << "word match: " << (r.word_match ? "yes" : "NO")
     << "  length match: " << (r.len_match ? "yes" : "NO") << "\n";
  os << "pell sign: " << (r.pell_sign > 0 ? "+1" : "-1") << "\n";
  if (r.unit_match.has_value())
    os << "unit match: " << (*r.unit_match ? "yes" : "NO") << "\n";
  if (r.instance.predicted_unit.has_value())
    os << "unit: " << r.instance.predicted_unit->str() << "\n";
  for (const std::string& n : r.notes) os << "note: " << n << "\n";
  os << (r.passed() ? "PASS" : "FAIL") << "\n";
  return os.str();
}

std::vector<std::pair<FamilyId, ParamMap>> enumerate_instances(std::vector<FamilyId> families,
                                                               unsigned long param_bound,
                                                               unsigned long k_bound) {
  if (param_bound < 1) throw std::invalid_argument("param bound must be >= 1");
  if (k_bound < 1) throw std::invalid_argument("k bound must be >= 1");
  if (families.empty()) families = all_families();
  std::sort(families.begin(), families.end(), [](FamilyId x, FamilyId y) {
    return std::string_view(family_name(x)) < std::string_view(family_name(y));
  });
  families.erase(std::unique(families.begin(), families.end()), families.end());

  std::vector<std::pair<FamilyId, ParamMap>> out;
  for (FamilyId id : families) {
    const std::vector<std::string>& names = family_param_names(id);
    const std::size_t np = names.size() - 1;  // all but k
    std::vector<unsigned long> vals(np, 1);
    for (;;) {
      for (unsigned long k = family_k_min(id); k <= k_bound; ++k) {
        ParamMap pm;
        for (std::size_t i = 0; i < np; ++i) pm[names[i]] = Int(vals[i]);
        pm["k"] = Int(k);
        if (admissible(id, pm).ok) out.emplace_back(id, std::move(pm));
      }
      // odometer: rightmost parameter varies fastest (lexicographic tuples)
      std::size_t pos = np;
      bool carry = true;
      while (pos > 0 && carry) {
        --pos;
        if (++vals[pos] <= param_bound) {
          carry = false;
          std::fill(vals.begin() + pos + 1, vals.end(), 1ul);
        } else {
          vals[pos] = 1;
        }
      }
      if (carry) break;
    }
  }
  return out;
}

SweepResult run_sweep(const SweepOptions& opts) {
  auto items = enumerate_instances(opts.families, opts.param_bound, opts.k_bound);
  SweepResult res;
  res.reports.resize(items.size());

  auto work = [&](std::size_t i) {
    try {
      res.reports[i] = verify_family(items[i].first, items[i].second, opts.verify);
    } catch (const std::exception& e) {
      VerifyReport r;
      r.instance.id = items[i].first;
      r.instance.params = items[i].second;
      r.notes.push_back(std::string("error: ") + e.what());
      res.reports[i] = std::move(r);
    }
  };

  unsigned jobs = std::max(1u, opts.jobs);
  if (jobs == 1 || items.size() <= 1) {
    for (std::size_t i = 0; i < items.size(); ++i) work(i);
  } else {
    std::atomic<std::size_t> next{0};
    auto runner = [&] {
      for (;;) {
        std::size_t i = next.fetch_add(1);
        if (i >= items.size()) return;
        work(i);
      }
    };
    std::vector<std::thread> threads;
    threads.reserve(jobs);
    for (unsigned t = 0; t < jobs; ++t) threads.emplace_back(runner);
    for (std::thread& t : threads) t.join();
  }

  for (const VerifyReport& r : res.reports) (r.passed() ? ++res.pass : ++res.fail);
  return res;
}

}  // namespace lcf
