#include "arflab/sweep.hpp"

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>

#include "arflab/arf.hpp"
#include "arflab/duplication.hpp"
#include "arflab/enumerate.hpp"
#include "arflab/parallel.hpp"

namespace arflab {

void SweepChecks::merge(const SweepChecks& other) {
  instances += other.instances;
  predicate_true_count += other.predicate_true_count;
  oracle_mismatches += other.oracle_mismatches;
  base_necessity_failures += other.base_necessity_failures;
  ideal_necessity_failures += other.ideal_necessity_failures;
  multiples_checked += other.multiples_checked;
  multiples_failures += other.multiples_failures;
  distance_checked += other.distance_checked;
  distance_failures += other.distance_failures;
  conductor_checked += other.conductor_checked;
  conductor_failures += other.conductor_failures;
  closure_instances += other.closure_instances;
  inclusion_failures += other.inclusion_failures;
  condition1_equality_failures += other.condition1_equality_failures;
  condition2_equality_failures += other.condition2_equality_failures;
  equality_count += other.equality_count;
  strict_count += other.strict_count;
  if (other.spotlight_seen) {
    spotlight_seen = true;
    spotlight_strict = other.spotlight_strict;
    spotlight_witness = other.spotlight_witness;
  }
}

bool SweepChecks::operator==(const SweepChecks& other) const {
  return instances == other.instances && predicate_true_count == other.predicate_true_count &&
         oracle_mismatches == other.oracle_mismatches &&
         base_necessity_failures == other.base_necessity_failures &&
         ideal_necessity_failures == other.ideal_necessity_failures &&
         multiples_checked == other.multiples_checked &&
         multiples_failures == other.multiples_failures &&
         distance_checked == other.distance_checked &&
         distance_failures == other.distance_failures &&
         conductor_checked == other.conductor_checked &&
         conductor_failures == other.conductor_failures &&
         closure_instances == other.closure_instances &&
         inclusion_failures == other.inclusion_failures &&
         condition1_equality_failures == other.condition1_equality_failures &&
         condition2_equality_failures == other.condition2_equality_failures &&
         equality_count == other.equality_count && strict_count == other.strict_count &&
         spotlight_seen == other.spotlight_seen && spotlight_strict == other.spotlight_strict &&
         spotlight_witness == other.spotlight_witness;
}

std::vector<SemigroupIdeal> grid_ideals(const NumericalSemigroup& s, const GridConfig& config) {
  const int max_min = s.conductor() + config.min_margin;
  if (s.conductor() <= config.window_conductor_cap) return ideals_of(s, max_min);
  std::vector<SemigroupIdeal> out;
  for (int mn : s.elements_up_to(max_min)) out.push_back(SemigroupIdeal::integrally_closed(s, mn));
  return out;
}

std::vector<int> grid_odd_m(const NumericalSemigroup& s) {
  return odd_members(s, 2 * s.frobenius() + 3);
}

namespace {

bool spotlight_instance(const NumericalSemigroup& s, const SemigroupIdeal& e, int m) {
  static const std::vector<int> gens = {5, 8, 11, 12, 14};
  return m == 5 && e.min_element() == 5 && s.minimal_generators() == gens &&
         e.is_integrally_closed();
}

void check_instance(const NumericalSemigroup& s, const NumericalSemigroup* closed_base,
                    const SemigroupIdeal& e, int m, const GridConfig& config, SweepChecks& out) {
  const DuplicationInstance instance = duplicate(s, e, m);
  const NumericalSemigroup& d = instance.result;
  const PredicateResult pred = duplication_arf_predicate(s, e, m);
  const bool oracle = is_arf(d);

  ++out.instances;
  if (pred.value) ++out.predicate_true_count;
  if (pred.value != oracle) ++out.oracle_mismatches;
  if (oracle && !is_arf(s)) ++out.base_necessity_failures;
  if (oracle && !e.is_integrally_closed()) ++out.ideal_necessity_failures;

  const bool below_conductor = e.min_element() < s.conductor();
  if (pred.value && below_conductor) {
    ++out.multiples_checked;
    bool divisible = true;
    for (int x : d.small_elements())
      if (x % m != 0) divisible = false;
    if (!divisible) ++out.multiples_failures;

    ++out.distance_checked;
    const MultiplicitySequence base_seq = multiplicity_sequence(s);
    bool distance_ok = e.min_element() % m == 0;
    if (distance_ok) {
      const std::vector<int> predicted =
          predicted_distance_sequence(m, base_seq.length(), e.min_element() / m);
      distance_ok = multiplicity_sequence(d).prefix == predicted;
    }
    if (!distance_ok) ++out.distance_failures;
  }

  if (!below_conductor && e.is_integrally_closed()) {
    ++out.conductor_checked;
    if (d.conductor() != 2 * e.min_element() + m - 1) ++out.conductor_failures;
  }

  if (config.closure_checks) {
    ++out.closure_instances;
    const SemigroupIdeal transported = e.induced_in(*closed_base);
    const NumericalSemigroup lhs = duplicate(*closed_base, transported, m).result;
    const NumericalSemigroup rhs = arf_closure(d);
    const bool inclusion = lhs.subset_of(rhs);
    const bool equality = inclusion && rhs.subset_of(lhs);
    if (!inclusion) ++out.inclusion_failures;
    if (equality)
      ++out.equality_count;
    else
      ++out.strict_count;
    if (!below_conductor && !equality) ++out.condition1_equality_failures;
    if (!equality && is_arf(s)) {
      bool constant_m = true;
      for (int entry : multiplicity_sequence(s).prefix)
        if (entry != m) constant_m = false;
      if (constant_m) ++out.condition2_equality_failures;
    }
    if (spotlight_instance(s, e, m)) {
      out.spotlight_seen = true;
      out.spotlight_strict = inclusion && !equality;
      const int top = std::max(lhs.conductor(), rhs.conductor());
      for (int x = 0; x <= top; ++x) {
        if (rhs.contains(x) && !lhs.contains(x)) {
          out.spotlight_witness = x;
          break;
        }
      }
    }
  }
}

}  // namespace

SweepChecks check_one_semigroup(const NumericalSemigroup& s, const GridConfig& config) {
  SweepChecks out;
  const std::vector<SemigroupIdeal> ideals = grid_ideals(s, config);
  const std::vector<int> ms = grid_odd_m(s);
  NumericalSemigroup closed_base;
  const NumericalSemigroup* closed_ptr = nullptr;
  if (config.closure_checks) {
    closed_base = arf_closure(s);
    closed_ptr = &closed_base;
  }
  for (const SemigroupIdeal& e : ideals)
    for (int m : ms) check_instance(s, closed_ptr, e, m, config, out);
  return out;
}

SweepChecks run_grid_checks_serial(const GridConfig& config) {
  SweepChecks total;
  for (const NumericalSemigroup& s : semigroups_up_to_genus(config.max_genus))
    total.merge(check_one_semigroup(s, config));
  return total;
}

SweepChecks run_grid_checks_parallel(const GridConfig& config) {
  const std::vector<NumericalSemigroup> semis = semigroups_up_to_genus(config.max_genus);
  std::vector<SweepChecks> per(semis.size());
  std::vector<std::string> errors(semis.size());
  const int threads = configured_thread_count();
  (void)threads;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(threads)
#endif
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(semis.size()); ++i) {
    try {
      per[i] = check_one_semigroup(semis[i], config);
    } catch (const std::exception& ex) {
      errors[i] = ex.what();
    }
  }
  for (const std::string& err : errors)
    if (!err.empty()) throw std::runtime_error(err);
  SweepChecks total;
  for (const SweepChecks& chunk : per) total.merge(chunk);
  return total;
}

}  // namespace arflab
