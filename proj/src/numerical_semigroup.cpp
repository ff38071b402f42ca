#include "arflab/numerical_semigroup.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "arflab/errors.hpp"

namespace arflab {

NumericalSemigroup NumericalSemigroup::naturals() {
  return NumericalSemigroup{};
}

NumericalSemigroup NumericalSemigroup::from_generators(const std::vector<int>& generators) {
  if (generators.empty()) fail(errc::empty_generators, "at least one generator is required");
  for (int g : generators)
    if (g <= 0) fail(errc::invalid_input, "generators must be positive");
  long long d = 0;
  for (int g : generators) d = std::gcd(d, static_cast<long long>(g));
  if (d != 1) fail(errc::gcd_not_one, "generators have gcd " + std::to_string(d));

  const int mu = *std::min_element(generators.begin(), generators.end());
  const int top = *std::max_element(generators.begin(), generators.end());

  // Sieve reachable sums; once mu consecutive members follow the last gap in
  // the window, everything beyond is a member too.
  int window = 2 * top + 2;
  for (;;) {
    std::vector<bool> member(window, false);
    member[0] = true;
    for (int x = 1; x < window; ++x) {
      for (int g : generators) {
        if (g <= x && member[x - g]) {
          member[x] = true;
          break;
        }
      }
    }
    int last_gap = -1;
    for (int x = window - 1; x >= 0; --x) {
      if (!member[x]) {
        last_gap = x;
        break;
      }
    }
    if (last_gap + 1 + mu <= window) {
      const int conductor = last_gap + 1;
      std::vector<bool> below(member.begin(), member.begin() + conductor);
      return from_membership(below, conductor);
    }
    window *= 2;
  }
}

NumericalSemigroup NumericalSemigroup::from_membership(const std::vector<bool>& member, int limit) {
  if (limit < 0 || static_cast<int>(member.size()) < limit)
    throw std::logic_error("membership window shorter than its limit");
  if (limit > 0 && !member[0]) throw std::logic_error("0 must be a member");

  int frob = -1;
  for (int x = limit - 1; x >= 0; --x) {
    if (!member[x]) {
      frob = x;
      break;
    }
  }

  if (frob < 0) return naturals();

  NumericalSemigroup s;
  s.conductor_ = frob + 1;
  s.small_elements_.clear();
  s.minimal_generators_.clear();
  s.member_.assign(member.begin(), member.begin() + s.conductor_);
  for (int x = 0; x < s.conductor_; ++x)
    if (s.member_[x]) s.small_elements_.push_back(x);

  s.multiplicity_ = s.conductor_;
  for (int x : s.small_elements_) {
    if (x > 0) {
      s.multiplicity_ = x;
      break;
    }
  }
  s.genus_ = s.conductor_ - static_cast<int>(s.small_elements_.size());

  // A member g is a minimal generator iff it is not a sum of two nonzero
  // members. Every candidate lies below conductor + multiplicity, and for
  // g < 2c the smaller part of any decomposition is below the conductor.
  const int hi = s.conductor_ + s.multiplicity_ - 1;
  for (int g = 1; g <= hi; ++g) {
    if (!s.contains(g)) continue;
    bool decomposable = false;
    for (int a : s.small_elements_) {
      if (a == 0) continue;
      if (a > g - a) break;
      if (s.contains(static_cast<long long>(g) - a)) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) s.minimal_generators_.push_back(g);
  }
  return s;
}

std::vector<int> NumericalSemigroup::elements_up_to(int bound) const {
  std::vector<int> out;
  for (int x : small_elements_) {
    if (x > bound) return out;
    out.push_back(x);
  }
  for (int x = std::max(conductor_, small_elements_.empty() ? 0 : small_elements_.back() + 1);
       x <= bound; ++x)
    out.push_back(x);
  return out;
}

std::vector<int> NumericalSemigroup::apery_set(int k) const {
  if (k <= 0 || !contains(k))
    fail(errc::not_a_member, std::to_string(k) + " is not a positive element of " + to_string());
  std::vector<int> least(k);
  for (int r = 0; r < k; ++r) {
    int x = r;
    while (!contains(x)) x += k;
    least[r] = x;
  }
  return least;
}

NumericalSemigroup NumericalSemigroup::quotient(int d) const {
  if (d <= 0) fail(errc::non_positive_divisor, "divisor must be positive, got " + std::to_string(d));
  const int limit = (conductor_ + d - 1) / d;
  std::vector<bool> member(limit);
  for (int x = 0; x < limit; ++x) member[x] = contains(static_cast<long long>(d) * x);
  return from_membership(member, limit);
}

bool NumericalSemigroup::subset_of(const NumericalSemigroup& other) const {
  for (int x : small_elements_)
    if (!other.contains(x)) return false;
  for (int x = conductor_; x < other.conductor_; ++x)
    if (!other.contains(x)) return false;
  return true;
}

bool NumericalSemigroup::lex_less(const NumericalSemigroup& other) const {
  if (small_elements_ != other.small_elements_)
    return std::lexicographical_compare(small_elements_.begin(), small_elements_.end(),
                                        other.small_elements_.begin(), other.small_elements_.end());
  return conductor_ < other.conductor_;
}

std::string NumericalSemigroup::to_string() const {
  if (conductor_ == 0) return "{0, →}";
  std::string out = "{";
  for (int x : small_elements_) out += std::to_string(x) + ", ";
  out += std::to_string(conductor_) + ", →}";
  return out;
}

void NumericalSemigroup::check_invariants() const {
  auto ensure = [](bool ok, const char* what) {
    if (!ok) throw std::logic_error(what);
  };
  ensure(conductor_ >= 0, "conductor must be non-negative");
  ensure(contains(0), "0 must be a member");
  ensure(!contains(-1), "negative integers are never members");
  if (conductor_ == 0) {
    ensure(small_elements_ == std::vector<int>{0}, "naturals store {0}");
    ensure(minimal_generators_ == std::vector<int>{1}, "naturals are generated by 1");
    ensure(genus_ == 0 && multiplicity_ == 1, "naturals have genus 0");
    return;
  }
  ensure(conductor_ >= 2, "a proper semigroup has conductor >= 2");
  ensure(!contains(conductor_ - 1), "the Frobenius number must be a gap");
  ensure(!small_elements_.empty() && small_elements_.front() == 0, "small elements start at 0");
  ensure(std::is_sorted(small_elements_.begin(), small_elements_.end()), "small elements sorted");
  for (int x : small_elements_) ensure(x < conductor_ && member_[x], "small elements match table");
  int count = 0;
  for (int x = 0; x < conductor_; ++x) count += member_[x] ? 1 : 0;
  ensure(count == static_cast<int>(small_elements_.size()), "no stray members in table");
  ensure(genus_ == conductor_ - count, "genus counts the gaps");
  for (int x = 1; x < multiplicity_ && x < conductor_; ++x)
    ensure(!member_[x], "multiplicity is the least positive member");
  ensure(contains(multiplicity_), "multiplicity is a member");
  for (int a : small_elements_)
    for (int b : small_elements_) ensure(contains(a + b), "closed under addition");

  // The minimal generators must regenerate exactly this membership table.
  long long d = 0;
  for (int g : minimal_generators_) d = std::gcd(d, static_cast<long long>(g));
  ensure(d == 1, "minimal generators have gcd 1");
  NumericalSemigroup regen = from_generators(minimal_generators_);
  ensure(regen == *this, "minimal generators regenerate the semigroup");
}

}  // namespace arflab
