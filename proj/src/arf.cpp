#include "arflab/arf.hpp"

#include <algorithm>

#include "arflab/errors.hpp"

namespace arflab {

std::string MultiplicitySequence::to_string() const {
  std::string out = "(";
  for (int e : prefix) out += std::to_string(e) + ", ";
  out += "1, …)";
  return out;
}

bool is_arf(const NumericalSemigroup& s) {
  const std::vector<int>& els = s.small_elements();
  const std::size_t n = els.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      for (std::size_t k = j; k < n; ++k)
        if (!s.contains(static_cast<long long>(els[k]) + els[j] - els[i])) return false;
  return true;
}

MultiplicitySequence multiplicity_sequence(const NumericalSemigroup& s) {
  if (!is_arf(s)) fail(errc::not_arf, s.to_string() + " is not an Arf semigroup");
  MultiplicitySequence seq;
  if (s.is_naturals()) return seq;
  const std::vector<int>& small = s.small_elements();
  for (std::size_t i = 0; i + 1 < small.size(); ++i) seq.prefix.push_back(small[i + 1] - small[i]);
  seq.prefix.push_back(s.conductor() - small.back());
  return seq;
}

bool is_arf_sequence(const std::vector<int>& prefix) {
  for (std::size_t i = 0; i < prefix.size(); ++i) {
    if (prefix[i] < 1) return false;
    if (i > 0 && prefix[i] > prefix[i - 1]) return false;
  }
  for (std::size_t i = 0; i < prefix.size(); ++i) {
    if (prefix[i] == 1) continue;
    // Accumulate successors; overshooting the target without hitting it
    // breaks the law. Once the explicit entries run out, the implied 1s
    // reach any larger target one step at a time.
    const long long target = prefix[i];
    long long sum = 0;
    for (std::size_t j = i + 1; j < prefix.size() && sum < target; ++j) {
      sum += prefix[j];
      if (sum > target) return false;
    }
  }
  return true;
}

NumericalSemigroup semigroup_from_sequence(const std::vector<int>& prefix) {
  if (!is_arf_sequence(prefix)) fail(errc::not_an_arf_sequence, "not a valid Arf sequence");
  int conductor = 0;
  for (int e : prefix) {
    if (e == 1) break;
    conductor += e;
  }
  std::vector<bool> member(conductor, false);
  int acc = 0;
  for (int e : prefix) {
    if (e == 1 || acc >= conductor) break;
    member[acc] = true;
    acc += e;
  }
  if (conductor == 0) return NumericalSemigroup::naturals();
  return NumericalSemigroup::from_membership(member, conductor);
}

NumericalSemigroup semigroup_from_sequence(const MultiplicitySequence& seq) {
  return semigroup_from_sequence(seq.prefix);
}

NumericalSemigroup blow_up(const NumericalSemigroup& s) {
  if (!is_arf(s))
    fail(errc::not_arf, "blow-up chain needs an Arf input; see lipman_semigroup for general ones");
  const int mu = s.multiplicity();
  const int limit = std::max(s.conductor() - mu, 0);
  std::vector<bool> member(limit);
  for (int y = 0; y < limit; ++y) member[y] = s.contains(y + mu);
  return NumericalSemigroup::from_membership(member, limit);
}

NumericalSemigroup lipman_semigroup(const NumericalSemigroup& s) {
  const int mu = s.multiplicity();
  std::vector<int> gens;
  for (int x : s.elements_up_to(s.conductor() + 2 * mu))
    if (x > mu) gens.push_back(x - mu);
  gens.push_back(mu);  // 2*mu is always a member
  return NumericalSemigroup::from_generators(gens);
}

NumericalSemigroup arf_closure(const NumericalSemigroup& s) {
  const int c = s.conductor();
  if (c == 0) return s;
  std::vector<bool> in(c, false);
  for (int x : s.small_elements()) in[x] = true;
  std::vector<int> els;
  bool changed = true;
  while (changed) {
    changed = false;
    els.clear();
    for (int x = 0; x < c; ++x)
      if (in[x]) els.push_back(x);
    const std::size_t n = els.size();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j)
        for (std::size_t k = j; k < n; ++k) {
          const int t = els[k] + els[j] - els[i];
          if (t < c && !in[t]) {
            in[t] = true;
            changed = true;
          }
        }
  }
  return NumericalSemigroup::from_membership(in, c);
}

}  // namespace arflab
