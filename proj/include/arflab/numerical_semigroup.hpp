#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace arflab {

// A numerical semigroup: an additive submonoid of the naturals with finite
// complement. Canonical data are the elements below the conductor, the
// conductor itself and the recomputed minimal generating set; membership at
// or above the conductor is implicit. Values are immutable after
// construction and freely shareable across threads.
class NumericalSemigroup {
 public:
  // Default-constructs the naturals.
  NumericalSemigroup() : small_elements_{0}, minimal_generators_{1} {}

  // Canonicalizes an arbitrary (possibly redundant) generating set.
  static NumericalSemigroup from_generators(const std::vector<int>& generators);

  static NumericalSemigroup naturals();

  // Builds from a membership table on [0, limit); every x >= limit is
  // treated as a member. The table must describe a semigroup.
  static NumericalSemigroup from_membership(const std::vector<bool>& member, int limit);

  bool contains(long long x) const {
    if (x < 0) return false;
    if (x >= conductor_) return true;
    return member_[static_cast<std::size_t>(x)];
  }

  int conductor() const { return conductor_; }
  int frobenius() const { return conductor_ - 1; }
  int multiplicity() const { return multiplicity_; }
  int genus() const { return genus_; }
  bool is_naturals() const { return conductor_ == 0; }

  // All elements below the conductor ({0} for the naturals).
  const std::vector<int>& small_elements() const { return small_elements_; }
  const std::vector<int>& minimal_generators() const { return minimal_generators_; }

  std::vector<int> elements_up_to(int bound) const;

  // Least member in each residue class mod k, indexed by residue.
  std::vector<int> apery_set(int k) const;

  // {x in N : d*x in S}.
  NumericalSemigroup quotient(int d) const;

  bool subset_of(const NumericalSemigroup& other) const;

  bool operator==(const NumericalSemigroup& other) const {
    return conductor_ == other.conductor_ && small_elements_ == other.small_elements_;
  }

  // Lexicographic by small-element vector, then by conductor; the
  // deterministic total order used by the enumeration streams.
  bool lex_less(const NumericalSemigroup& other) const;

  std::string to_string() const;  // e.g. "{0, 3, 6, →}"

  // Throws std::logic_error on violation; test helper.
  void check_invariants() const;

 private:
  std::vector<int> small_elements_;
  std::vector<bool> member_;  // size == conductor_
  std::vector<int> minimal_generators_;
  int conductor_ = 0;
  int multiplicity_ = 1;
  int genus_ = 0;
};

}  // namespace arflab
