#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "arflab/numerical_semigroup.hpp"
#include "arflab/semigroup_ideal.hpp"

namespace arflab {

// The numerical duplication 2·S ∪ (2·E + m) of S along an ideal E and an
// odd member m; x lies in it iff x is even with x/2 in S, or x is odd,
// x >= m, and (x - m)/2 lies in E.
struct DuplicationInstance {
  NumericalSemigroup base;
  SemigroupIdeal ideal;
  int m = 1;
  NumericalSemigroup result;
};

DuplicationInstance duplicate(const NumericalSemigroup& s, const SemigroupIdeal& e, int m);

enum class ArfReason { none, not_arf_base, ideal_not_closed, multiplicity_clause };

const char* arf_reason_name(ArfReason reason);

struct PredicateResult {
  bool value = false;
  ArfReason reason = ArfReason::none;
};

// Decides whether the duplication is Arf from the inputs alone: the base
// must be Arf, the ideal integrally closed, and either min(E) reaches the
// conductor or every multiplicity-sequence entry equals m. Never inspects
// the duplication itself; the brute-force check on it is the test oracle.
PredicateResult duplication_arf_predicate(const NumericalSemigroup& s, const SemigroupIdeal& e,
                                          int m);

// Consecutive differences of the duplication in the min(E) < c(S) branch,
// predicted from e0 (= m), the prefix length n, and i with min(E) = i*e0:
// 2*e0 repeated i times, e0 repeated 2*(n-i) times, then (e0-1)/2 twos.
std::vector<int> predicted_distance_sequence(int e0, int n, int i);

// In that same branch every element of the duplication below its conductor
// is a multiple of m.
bool multiples_of_m_check(const DuplicationInstance& instance);

struct ClosureInclusionReport {
  NumericalSemigroup lhs;  // Arf(S) duplicated along the transported ideal
  NumericalSemigroup rhs;  // Arf closure of the duplication
  bool inclusion_holds = false;
  bool equality_holds = false;
  std::optional<int> witness;  // least element of rhs \ lhs when strict
};

ClosureInclusionReport closure_inclusion_report(const NumericalSemigroup& s,
                                                const SemigroupIdeal& e, int m);

struct ExploreConfig {
  int max_genus = 4;
  int max_m = 9;
  int ideal_budget = -1;  // bound on ideal minima; < 0 means conductor + 2 per semigroup
};

struct ExploreRecord {
  std::vector<int> sgens;
  std::vector<int> ideal_small;
  int m = 1;
  std::vector<int> dup_small;
  int dup_conductor = 0;
  bool predicate = false;
  bool oracle = false;
  bool equality = false;
  std::optional<int> witness;
  std::optional<std::string> reason;
};

// Sweeps the enumerated (S, E, m) instances and emits one record apiece, in
// deterministic order. Throws an InclusionViolation error if the closure
// inclusion ever fails, which would mean an implementation bug.
void explore_open_question(const ExploreConfig& config,
                           const std::function<void(const ExploreRecord&)>& emit);

}  // namespace arflab
