#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "arflab/numerical_semigroup.hpp"

namespace arflab {

// A semigroup ideal E of a fixed ambient S: a subset of S with E + S ⊆ E.
// The ideal is determined by its elements in the window
// [min, min + window_length): any member of S beyond that window belongs to
// E automatically (it exceeds min by at least the conductor). The ambient
// semigroup is part of the ideal's identity.
class SemigroupIdeal {
 public:
  static SemigroupIdeal from_generators(const NumericalSemigroup& ambient,
                                        const std::vector<int>& generators);

  // E = S.
  static SemigroupIdeal unit_ideal(const NumericalSemigroup& ambient);

  // {s in S : s >= min_element}.
  static SemigroupIdeal integrally_closed(const NumericalSemigroup& ambient, int min_element);

  // Builds from the window membership table; validates the ideal laws and
  // throws std::logic_error when they fail (internal constructor, used by
  // the enumeration machinery).
  static SemigroupIdeal from_window(const NumericalSemigroup& ambient, int min_element,
                                    std::vector<bool> window);

  static int window_length(const NumericalSemigroup& ambient) {
    return std::max(ambient.conductor(), 1);
  }

  const NumericalSemigroup& ambient() const { return ambient_; }
  int min_element() const { return min_element_; }

  // Elements of E inside the determining window.
  const std::vector<int>& small_part() const { return small_part_; }

  bool contains(long long x) const {
    if (x < min_element_) return false;
    const long long off = x - min_element_;
    if (off < static_cast<long long>(window_.size()))
      return window_[static_cast<std::size_t>(off)];
    return ambient_.contains(x);
  }

  std::vector<int> elements_up_to(int bound) const;

  // Elements of E not of the form e + s with e in E and s a nonzero member
  // of the ambient semigroup.
  std::vector<int> minimal_generators() const;

  SemigroupIdeal integral_closure() const;
  bool is_integrally_closed() const;

  // E + E == E + min(E) as sets.
  bool is_stable() const;

  // Transport into an oversemigroup T: {t in T : t >= min(E)}.
  SemigroupIdeal induced_in(const NumericalSemigroup& oversemigroup) const;

  bool operator==(const SemigroupIdeal& other) const {
    return min_element_ == other.min_element_ && window_ == other.window_ &&
           ambient_ == other.ambient_;
  }

  std::string to_string() const;
  void check_invariants() const;

 private:
  SemigroupIdeal(NumericalSemigroup ambient, int min_element, std::vector<bool> window);

  NumericalSemigroup ambient_;
  int min_element_ = 0;
  std::vector<bool> window_;  // membership on [min, min + window_length)
  std::vector<int> small_part_;
};

}  // namespace arflab
