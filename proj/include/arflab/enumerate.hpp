#pragma once

#include <vector>

#include "arflab/numerical_semigroup.hpp"
#include "arflab/semigroup_ideal.hpp"

namespace arflab {

// Every numerical semigroup of genus <= max_genus exactly once, produced by
// the generator-removal tree and returned in lexicographic order of the
// small-element vector.
std::vector<NumericalSemigroup> semigroups_up_to_genus(int max_genus);

// Every Arf semigroup with conductor <= max_conductor exactly once,
// generated through its multiplicity sequence.
std::vector<NumericalSemigroup> arf_semigroups_up_to_conductor(int max_conductor);

// Every ideal of s with minimum <= max_min exactly once: subsets of the
// determining window containing the minimum and closed under the ambient
// action. Ordered by minimum, then by window mask.
std::vector<SemigroupIdeal> ideals_of(const NumericalSemigroup& s, int max_min);

// Odd elements of s up to max_m.
std::vector<int> odd_members(const NumericalSemigroup& s, int max_m);

}  // namespace arflab
