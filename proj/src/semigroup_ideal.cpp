#include "arflab/semigroup_ideal.hpp"

#include <stdexcept>
#include <utility>

#include "arflab/errors.hpp"

namespace arflab {

SemigroupIdeal::SemigroupIdeal(NumericalSemigroup ambient, int min_element,
                               std::vector<bool> window)
    : ambient_(std::move(ambient)), min_element_(min_element), window_(std::move(window)) {
  for (int off = 0; off < static_cast<int>(window_.size()); ++off)
    if (window_[off]) small_part_.push_back(min_element_ + off);
}

SemigroupIdeal SemigroupIdeal::from_window(const NumericalSemigroup& ambient, int min_element,
                                           std::vector<bool> window) {
  const int w = window_length(ambient);
  if (static_cast<int>(window.size()) != w) throw std::logic_error("ideal window has wrong length");
  if (min_element < 0 || !ambient.contains(min_element))
    throw std::logic_error("ideal minimum must be an ambient element");
  if (!window[0]) throw std::logic_error("ideal minimum must belong to the ideal");
  for (int off = 1; off < w; ++off)
    if (window[off] && !ambient.contains(min_element + off))
      throw std::logic_error("ideal element outside the ambient semigroup");
  SemigroupIdeal ideal(ambient, min_element, std::move(window));
  // E + S ⊆ E, checked against the minimal generators on the window; sums
  // leaving the window land in the forced tail.
  for (int e : ideal.small_part_)
    for (int g : ambient.minimal_generators())
      if (e + g < min_element + w && !ideal.contains(e + g))
        throw std::logic_error("window set is not closed under the ambient action");
  return ideal;
}

SemigroupIdeal SemigroupIdeal::from_generators(const NumericalSemigroup& ambient,
                                               const std::vector<int>& generators) {
  if (generators.empty()) fail(errc::empty_generators, "an ideal needs at least one generator");
  for (int g : generators)
    if (!ambient.contains(g))
      fail(errc::generator_not_in_semigroup,
           std::to_string(g) + " is not an element of " + ambient.to_string());
  const int mn = *std::min_element(generators.begin(), generators.end());
  const int w = window_length(ambient);
  std::vector<bool> window(w, false);
  for (int off = 0; off < w; ++off) {
    const int x = mn + off;
    for (int g : generators) {
      if (g <= x && ambient.contains(x - g)) {
        window[off] = true;
        break;
      }
    }
  }
  return from_window(ambient, mn, std::move(window));
}

SemigroupIdeal SemigroupIdeal::unit_ideal(const NumericalSemigroup& ambient) {
  return from_generators(ambient, {0});
}

SemigroupIdeal SemigroupIdeal::integrally_closed(const NumericalSemigroup& ambient,
                                                 int min_element) {
  if (min_element < 0 || !ambient.contains(min_element))
    fail(errc::generator_not_in_semigroup,
         std::to_string(min_element) + " is not an element of " + ambient.to_string());
  const int w = window_length(ambient);
  std::vector<bool> window(w, false);
  for (int off = 0; off < w; ++off) window[off] = ambient.contains(min_element + off);
  return from_window(ambient, min_element, std::move(window));
}

std::vector<int> SemigroupIdeal::elements_up_to(int bound) const {
  std::vector<int> out;
  for (int x = min_element_; x <= bound; ++x)
    if (contains(x)) out.push_back(x);
  return out;
}

std::vector<int> SemigroupIdeal::minimal_generators() const {
  std::vector<int> gens;
  for (int e : small_part_) {
    bool reducible = false;
    for (int s : ambient_.elements_up_to(e - min_element_)) {
      if (s == 0) continue;
      if (contains(static_cast<long long>(e) - s)) {
        reducible = true;
        break;
      }
    }
    if (!reducible) gens.push_back(e);
  }
  return gens;
}

SemigroupIdeal SemigroupIdeal::integral_closure() const {
  return integrally_closed(ambient_, min_element_);
}

bool SemigroupIdeal::is_integrally_closed() const {
  for (int off = 0; off < static_cast<int>(window_.size()); ++off)
    if (!window_[off] && ambient_.contains(min_element_ + off)) return false;
  return true;
}

bool SemigroupIdeal::is_stable() const {
  // E+E and E+min agree above 2*min + c(S); compare on a window past that.
  const int w = static_cast<int>(window_.size());
  const int hi = 2 * min_element_ + 2 * w + 2;
  const std::vector<int> elems = elements_up_to(hi - min_element_);
  for (int x = 2 * min_element_; x <= hi; ++x) {
    const bool in_shift = contains(static_cast<long long>(x) - min_element_);
    bool in_sum = false;
    for (int e : elems) {
      if (e > x - e) break;
      if (contains(static_cast<long long>(x) - e)) {
        in_sum = true;
        break;
      }
    }
    if (in_sum != in_shift) return false;
  }
  return true;
}

SemigroupIdeal SemigroupIdeal::induced_in(const NumericalSemigroup& oversemigroup) const {
  if (!ambient_.subset_of(oversemigroup))
    fail(errc::not_an_oversemigroup,
         oversemigroup.to_string() + " does not contain " + ambient_.to_string());
  return integrally_closed(oversemigroup, min_element_);
}

std::string SemigroupIdeal::to_string() const {
  const int tail = std::max(min_element_ + static_cast<int>(window_.size()),
                            ambient_.conductor());
  std::string out = "{";
  for (int x : elements_up_to(tail)) out += std::to_string(x) + ", ";
  out += "→}";
  return out;
}

void SemigroupIdeal::check_invariants() const {
  auto ensure = [](bool ok, const char* what) {
    if (!ok) throw std::logic_error(what);
  };
  ensure(!small_part_.empty() && small_part_.front() == min_element_,
         "the minimum belongs to the small part");
  for (int e : small_part_) ensure(ambient_.contains(e), "ideal is a subset of the ambient");
  for (int e : small_part_)
    for (int s : ambient_.elements_up_to(ambient_.conductor() + 2))
      ensure(contains(static_cast<long long>(e) + s), "closed under the ambient action");
  // Forced tail: ambient members past the window belong to the ideal.
  const int start = min_element_ + static_cast<int>(window_.size());
  for (int x = start; x <= start + 8; ++x)
    if (ambient_.contains(x)) ensure(contains(x), "tail rule");
}

}  // namespace arflab
