#include "arflab/duplication.hpp"

#include <algorithm>
#include <cstddef>
#include <stdexcept>

#include "arflab/arf.hpp"
#include "arflab/enumerate.hpp"
#include "arflab/errors.hpp"
#include "arflab/parallel.hpp"

namespace arflab {

const char* arf_reason_name(ArfReason reason) {
  switch (reason) {
    case ArfReason::none: return "none";
    case ArfReason::not_arf_base: return "not-arf-base";
    case ArfReason::ideal_not_closed: return "ideal-not-closed";
    case ArfReason::multiplicity_clause: return "multiplicity-clause";
  }
  return "unknown";
}

namespace {

void validate_inputs(const NumericalSemigroup& s, const SemigroupIdeal& e, int m) {
  if (e.ambient() != s)
    fail(errc::ideal_ambient_mismatch, "the ideal lives over a different semigroup");
  if (m % 2 == 0) fail(errc::even_m, "m must be odd, got " + std::to_string(m));
  if (!s.contains(m))
    fail(errc::m_not_in_semigroup, std::to_string(m) + " is not an element of " + s.to_string());
}

}  // namespace

DuplicationInstance duplicate(const NumericalSemigroup& s, const SemigroupIdeal& e, int m) {
  validate_inputs(s, e, m);
  // Everything at or past 2*(min(E) + c(S)) + m is a member: even values
  // halve into the conductor tail of S, odd ones shift into the forced tail
  // of E.
  const int limit = 2 * (e.min_element() + s.conductor()) + m + 1;
  std::vector<bool> member(limit, false);
  for (int x = 0; x < limit; ++x) {
    if (x % 2 == 0)
      member[x] = s.contains(x / 2);
    else
      member[x] = x >= m && e.contains((x - m) / 2);
  }
  return DuplicationInstance{s, e, m, NumericalSemigroup::from_membership(member, limit)};
}

PredicateResult duplication_arf_predicate(const NumericalSemigroup& s, const SemigroupIdeal& e,
                                          int m) {
  validate_inputs(s, e, m);
  if (!is_arf(s)) return {false, ArfReason::not_arf_base};
  if (!e.is_integrally_closed()) return {false, ArfReason::ideal_not_closed};
  if (e.min_element() >= s.conductor()) return {true, ArfReason::none};
  for (int entry : multiplicity_sequence(s).prefix)
    if (entry != m) return {false, ArfReason::multiplicity_clause};
  return {true, ArfReason::none};
}

std::vector<int> predicted_distance_sequence(int e0, int n, int i) {
  if (e0 % 2 == 0 || e0 < 3)
    fail(errc::even_e0, "e0 must be an odd integer >= 3, got " + std::to_string(e0));
  if (n < 0 || i < 0 || i > n)
    fail(errc::index_out_of_range,
         "need 0 <= i <= n, got i=" + std::to_string(i) + ", n=" + std::to_string(n));
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(i + 2 * (n - i) + (e0 - 1) / 2));
  out.insert(out.end(), i, 2 * e0);
  out.insert(out.end(), 2 * (n - i), e0);
  out.insert(out.end(), (e0 - 1) / 2, 2);
  return out;
}

bool multiples_of_m_check(const DuplicationInstance& instance) {
  const PredicateResult pred =
      duplication_arf_predicate(instance.base, instance.ideal, instance.m);
  if (!pred.value || instance.ideal.min_element() >= instance.base.conductor())
    fail(errc::precondition_not_met,
         "defined only when the predicate holds with min(E) below the conductor");
  for (int d : instance.result.small_elements())
    if (d % instance.m != 0) return false;
  return true;
}

ClosureInclusionReport closure_inclusion_report(const NumericalSemigroup& s,
                                                const SemigroupIdeal& e, int m) {
  const NumericalSemigroup closed_base = arf_closure(s);
  const SemigroupIdeal transported = e.induced_in(closed_base);
  ClosureInclusionReport report;
  report.lhs = duplicate(closed_base, transported, m).result;
  report.rhs = arf_closure(duplicate(s, e, m).result);
  report.inclusion_holds = report.lhs.subset_of(report.rhs);
  report.equality_holds = report.inclusion_holds && report.rhs.subset_of(report.lhs);
  if (report.inclusion_holds && !report.equality_holds) {
    const int top = std::max(report.lhs.conductor(), report.rhs.conductor());
    for (int x = 0; x <= top; ++x) {
      if (report.rhs.contains(x) && !report.lhs.contains(x)) {
        report.witness = x;
        break;
      }
    }
  }
  return report;
}

namespace {

std::vector<ExploreRecord> explore_one(const NumericalSemigroup& s, const ExploreConfig& config,
                                       bool& violation) {
  std::vector<ExploreRecord> records;
  const int budget = config.ideal_budget < 0 ? s.conductor() + 2 : config.ideal_budget;
  const std::vector<SemigroupIdeal> ideals = ideals_of(s, budget);
  const std::vector<int> ms = odd_members(s, config.max_m);
  for (const SemigroupIdeal& e : ideals) {
    for (int m : ms) {
      const DuplicationInstance instance = duplicate(s, e, m);
      const PredicateResult pred = duplication_arf_predicate(s, e, m);
      const ClosureInclusionReport report = closure_inclusion_report(s, e, m);
      if (!report.inclusion_holds) violation = true;
      ExploreRecord rec;
      rec.sgens = s.minimal_generators();
      rec.ideal_small = e.small_part();
      rec.m = m;
      rec.dup_small = instance.result.small_elements();
      rec.dup_conductor = instance.result.conductor();
      rec.predicate = pred.value;
      rec.oracle = is_arf(instance.result);
      rec.equality = report.equality_holds;
      rec.witness = report.witness;
      if (!pred.value) rec.reason = arf_reason_name(pred.reason);
      records.push_back(std::move(rec));
    }
  }
  return records;
}

}  // namespace

void explore_open_question(const ExploreConfig& config,
                           const std::function<void(const ExploreRecord&)>& emit) {
  if (config.max_genus < 0 || config.max_m < 0)
    fail(errc::invalid_input, "explorer bounds must be non-negative");
  const std::vector<NumericalSemigroup> semis = semigroups_up_to_genus(config.max_genus);
  std::vector<std::vector<ExploreRecord>> slabs(semis.size());
  std::vector<char> violations(semis.size(), 0);
  std::vector<std::string> errors(semis.size());

  const int threads = configured_thread_count();
  (void)threads;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(threads)
#endif
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(semis.size()); ++i) {
    try {
      bool violated = false;
      slabs[i] = explore_one(semis[i], config, violated);
      violations[i] = violated ? 1 : 0;
    } catch (const std::exception& ex) {
      errors[i] = ex.what();
    }
  }

  for (const std::string& err : errors)
    if (!err.empty()) throw std::runtime_error(err);
  for (std::size_t i = 0; i < slabs.size(); ++i)
    if (violations[i])
      fail(errc::inclusion_violation,
           "closure inclusion failed over " + semis[i].to_string() +
               "; this contradicts a proved statement and signals a bug");
  for (const std::vector<ExploreRecord>& slab : slabs)
    for (const ExploreRecord& rec : slab) emit(rec);
}

}  // namespace arflab
