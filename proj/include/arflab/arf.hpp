#pragma once

#include <string>
#include <vector>

#include "arflab/numerical_semigroup.hpp"

namespace arflab {

// The multiplicity sequence of an Arf semigroup, stored as its prefix of
// entries >= 2; everything after the prefix is 1.
struct MultiplicitySequence {
  std::vector<int> prefix;

  int length() const { return static_cast<int>(prefix.size()); }

  bool operator==(const MultiplicitySequence& other) const { return prefix == other.prefix; }

  std::string to_string() const;
};

// Closure under x + y - z for members x >= y >= z. Only triples below the
// conductor matter: with x at or past it the combination is never a gap.
bool is_arf(const NumericalSemigroup& s);

// Consecutive differences of the element sequence; requires an Arf input.
MultiplicitySequence multiplicity_sequence(const NumericalSemigroup& s);

// Non-increasing, and every entry is the sum of an initial run of its
// successors (entries beyond the given prefix read as 1).
bool is_arf_sequence(const std::vector<int>& prefix);

// Partial sums of a valid Arf sequence.
NumericalSemigroup semigroup_from_sequence(const std::vector<int>& prefix);
NumericalSemigroup semigroup_from_sequence(const MultiplicitySequence& seq);

// (S \ {0}) - multiplicity; defined on Arf semigroups, where the shifted set
// is itself a semigroup. Iterating reaches the naturals in length(seq) steps.
NumericalSemigroup blow_up(const NumericalSemigroup& s);

// The monoid generated by {s - multiplicity : s in S, s > 0}. Coincides with
// blow_up on Arf semigroups and extends the chain construction to all inputs.
NumericalSemigroup lipman_semigroup(const NumericalSemigroup& s);

// Smallest Arf oversemigroup, computed by fixpoint saturation of the
// x + y - z combinations inside [0, conductor).
NumericalSemigroup arf_closure(const NumericalSemigroup& s);

}  // namespace arflab
