#pragma once

#include <optional>
#include <vector>

#include "arflab/numerical_semigroup.hpp"
#include "arflab/semigroup_ideal.hpp"

namespace arflab {

// The exhaustive (S, E, m) grid: semigroups up to a genus bound; for each,
// all window-enumerated ideals with small minimum when the conductor is
// small enough, otherwise only the integrally closed ones; all odd members
// m <= 2*Frobenius + 3.
struct GridConfig {
  int max_genus = 10;
  int min_margin = 2;             // ideal minima up to conductor + margin
  int window_conductor_cap = 12;  // full window enumeration when c(S) <= cap
  bool closure_checks = false;    // also run the Arf-closure inclusion pass
};

std::vector<SemigroupIdeal> grid_ideals(const NumericalSemigroup& s, const GridConfig& config);
std::vector<int> grid_odd_m(const NumericalSemigroup& s);

// Tallies of every per-instance check the sweep performs. All fields are
// deterministic, so the serial and parallel drivers must produce identical
// values.
struct SweepChecks {
  long long instances = 0;
  long long predicate_true_count = 0;

  // predicate vs brute-force Arf check on the duplication
  long long oracle_mismatches = 0;

  // Arf duplication forces an Arf base and an integrally closed ideal
  long long base_necessity_failures = 0;
  long long ideal_necessity_failures = 0;

  // below-conductor elements divisible by m in the small-minimum Arf branch
  long long multiples_checked = 0;
  long long multiples_failures = 0;

  // predicted distance sequence against the computed one, same branch
  long long distance_checked = 0;
  long long distance_failures = 0;

  // conductor identity 2*min(E) + m - 1 for closed ideals past the conductor
  long long conductor_checked = 0;
  long long conductor_failures = 0;

  // closure pass
  long long closure_instances = 0;
  long long inclusion_failures = 0;
  long long condition1_equality_failures = 0;
  long long condition2_equality_failures = 0;
  long long equality_count = 0;
  long long strict_count = 0;
  bool spotlight_seen = false;   // the <5,8,11,12,14> instance with E = S\{0}, m = 5
  bool spotlight_strict = false;
  std::optional<int> spotlight_witness;

  void merge(const SweepChecks& other);
  bool operator==(const SweepChecks& other) const;
};

SweepChecks check_one_semigroup(const NumericalSemigroup& s, const GridConfig& config);

// Reference driver: plain loop over the enumerated semigroups.
SweepChecks run_grid_checks_serial(const GridConfig& config);

// OpenMP driver: one semigroup per task, merged afterwards. Falls back to
// the serial loop in builds without OpenMP.
SweepChecks run_grid_checks_parallel(const GridConfig& config);

}  // namespace arflab
