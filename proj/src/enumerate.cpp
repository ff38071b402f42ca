#include "arflab/enumerate.hpp"

#include <algorithm>
#include <cstdint>

#include "arflab/arf.hpp"
#include "arflab/errors.hpp"

namespace arflab {

namespace {

void descend(const NumericalSemigroup& s, int max_genus, std::vector<NumericalSemigroup>& out) {
  out.push_back(s);
  if (s.genus() >= max_genus) return;
  for (int g : s.minimal_generators()) {
    if (g <= s.frobenius()) continue;
    const int limit = g + 1;
    std::vector<bool> member(limit);
    for (int x = 0; x < limit; ++x) member[x] = x != g && s.contains(x);
    descend(NumericalSemigroup::from_membership(member, limit), max_genus, out);
  }
}

void grow_arf(const std::vector<int>& suffix, int total, int max_conductor,
              std::vector<NumericalSemigroup>& out) {
  out.push_back(semigroup_from_sequence(suffix));
  // A value can be prepended iff it is a partial sum of the suffix extended
  // by its implied tail of 1s; entries of the stored prefix are >= 2.
  std::vector<int> candidates;
  long long acc = 0;
  for (int e : suffix) {
    acc += e;
    if (total + acc > max_conductor) break;
    candidates.push_back(static_cast<int>(acc));
  }
  for (int v = total + 1; total + v <= max_conductor; ++v) candidates.push_back(v);
  for (int e : candidates) {
    if (e < 2) continue;
    std::vector<int> next;
    next.reserve(suffix.size() + 1);
    next.push_back(e);
    next.insert(next.end(), suffix.begin(), suffix.end());
    grow_arf(next, total + e, max_conductor, out);
  }
}

}  // namespace

std::vector<NumericalSemigroup> semigroups_up_to_genus(int max_genus) {
  if (max_genus < 0) fail(errc::invalid_input, "genus bound must be non-negative");
  std::vector<NumericalSemigroup> out;
  descend(NumericalSemigroup::naturals(), max_genus, out);
  std::sort(out.begin(), out.end(),
            [](const NumericalSemigroup& a, const NumericalSemigroup& b) { return a.lex_less(b); });
  return out;
}

std::vector<NumericalSemigroup> arf_semigroups_up_to_conductor(int max_conductor) {
  if (max_conductor < 0) fail(errc::invalid_input, "conductor bound must be non-negative");
  std::vector<NumericalSemigroup> out;
  grow_arf({}, 0, max_conductor, out);
  std::sort(out.begin(), out.end(),
            [](const NumericalSemigroup& a, const NumericalSemigroup& b) { return a.lex_less(b); });
  return out;
}

std::vector<SemigroupIdeal> ideals_of(const NumericalSemigroup& s, int max_min) {
  if (max_min < 0) fail(errc::invalid_input, "minimum bound must be non-negative");
  std::vector<SemigroupIdeal> out;
  const int w = SemigroupIdeal::window_length(s);
  const std::vector<int>& gens = s.minimal_generators();
  for (int mn : s.elements_up_to(max_min)) {
    // Window positions strictly above the minimum that hold ambient elements.
    std::vector<int> pos;
    for (int off = 1; off < w; ++off)
      if (s.contains(mn + off)) pos.push_back(off);
    const int nbits = static_cast<int>(pos.size());
    if (nbits > 24) fail(errc::invalid_input, "ideal window too large to enumerate");
    std::vector<int> bit_of(w, -1);
    for (int t = 0; t < nbits; ++t) bit_of[pos[t]] = t;

    for (std::uint32_t mask = 0; mask < (1u << nbits); ++mask) {
      const auto has = [&](int off) {
        if (off == 0) return true;
        const int t = bit_of[off];
        return t >= 0 && ((mask >> t) & 1u) != 0;
      };
      bool ok = true;
      for (int t = -1; t < nbits && ok; ++t) {
        if (t >= 0 && ((mask >> t) & 1u) == 0) continue;
        const int e_off = t < 0 ? 0 : pos[t];
        for (int g : gens) {
          const int sum = e_off + g;
          if (sum < w && !has(sum)) {
            ok = false;
            break;
          }
        }
      }
      if (!ok) continue;
      std::vector<bool> window(w, false);
      window[0] = true;
      for (int t = 0; t < nbits; ++t)
        if ((mask >> t) & 1u) window[pos[t]] = true;
      out.push_back(SemigroupIdeal::from_window(s, mn, std::move(window)));
    }
  }
  return out;
}

std::vector<int> odd_members(const NumericalSemigroup& s, int max_m) {
  std::vector<int> out;
  for (int x : s.elements_up_to(max_m))
    if (x % 2 == 1) out.push_back(x);
  return out;
}

}  // namespace arflab
