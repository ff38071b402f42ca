#include "arflab/valuation.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "arflab/arf.hpp"
#include "arflab/duplication.hpp"
#include "arflab/errors.hpp"

namespace arflab {

bool BranchRing::contains(const TruncatedSeries& series) const {
  for (const auto& [e, c] : series.coefficients()) {
    (void)c;
    if (!value_semigroup.contains(e)) return false;
  }
  return true;
}

QuadContext::QuadContext(BranchRing ring_in, SemigroupIdeal ideal_in, TruncatedSeries b_in)
    : ring(std::move(ring_in)), ideal_values(std::move(ideal_in)), b(std::move(b_in)) {
  if (ideal_values.ambient() != ring.value_semigroup)
    fail(errc::ideal_ambient_mismatch, "ideal exponents live over a different value semigroup");
  if (b.truncation() != ring.truncation)
    fail(errc::truncation_mismatch, "b must share the ring truncation");
  if (!ring.contains(b)) fail(errc::invalid_input, "b must lie in the branch ring");
  const auto ord = b.order();
  if (!ord) fail(errc::zero_element, "b must be nonzero mod the truncation");
  m = *ord;
  if (m % 2 == 0) fail(errc::even_m, "the order of b must be odd, got " + std::to_string(m));
  if (!ring.value_semigroup.contains(m))
    fail(errc::m_not_in_semigroup, "the order of b must be a value of the ring");
}

QuadElement::QuadElement(std::shared_ptr<const QuadContext> context, TruncatedSeries p,
                         TruncatedSeries q)
    : context_(std::move(context)), p_(std::move(p)), q_(std::move(q)) {
  if (!context_) fail(errc::invalid_input, "missing context");
  if (p_.truncation() != context_->ring.truncation || q_.truncation() != context_->ring.truncation)
    fail(errc::truncation_mismatch, "components must share the ring truncation");
  if (!context_->ring.contains(p_)) fail(errc::invalid_input, "p must lie in the branch ring");
  for (const auto& [e, c] : q_.coefficients()) {
    (void)c;
    if (!context_->ideal_values.contains(e))
      fail(errc::invalid_input, "q must be supported on the ideal exponents");
  }
}

QuadElement QuadElement::one(std::shared_ptr<const QuadContext> context) {
  if (!context) fail(errc::invalid_input, "missing context");
  const int n = context->ring.truncation;
  return QuadElement(std::move(context), TruncatedSeries::monomial(0, n), TruncatedSeries(n));
}

QuadElement QuadElement::operator*(const QuadElement& other) const {
  if (context_ != other.context_ && !(*context_ == *other.context_))
    fail(errc::context_mismatch, "operands come from different quadratic extensions");
  TruncatedSeries p = p_ * other.p_ + q_ * other.q_ * context_->b;
  TruncatedSeries q = p_ * other.q_ + q_ * other.p_;
  return QuadElement(context_, std::move(p), std::move(q));
}

int quad_valuation(const QuadElement& z) {
  const auto vp = z.p().order();
  const auto vq = z.q().order();
  if (!vp && !vq) fail(errc::zero_element, "the zero element has no valuation");
  long long value = -1;
  if (vp) value = 2LL * *vp;
  if (vq) {
    const long long candidate = 2LL * *vq + z.context().m;
    if (value < 0 || candidate < value) value = candidate;
  }
  // A component that vanishes mod t^N may hide a true order >= N, i.e. a
  // candidate >= 2N; any certified value must undercut that.
  if (value >= 2LL * z.context().ring.truncation)
    fail(errc::truncation_overflow,
         "valuation " + std::to_string(value) + " cannot be certified; increase the truncation");
  return static_cast<int>(value);
}

NumericalSemigroup value_semigroup_of_quotient(const BranchRing& ring,
                                               const SemigroupIdeal& ideal_values,
                                               const TruncatedSeries& b, int bound) {
  auto context = std::make_shared<const QuadContext>(ring, ideal_values, b);
  const int n = ring.truncation;
  const int m = context->m;
  if (bound < 0 || bound > 2 * n - 2 * m)
    fail(errc::bound_exceeds_truncation,
         "bound " + std::to_string(bound) + " needs truncation above " +
             std::to_string((bound + 2 * m + 1) / 2));

  // Monomial generators: t^g for the semigroup generators, t^e·α for the
  // ideal generators.
  std::vector<std::pair<QuadElement, int>> seeds;
  for (int g : ring.value_semigroup.minimal_generators()) {
    QuadElement z(context, TruncatedSeries::monomial(g, n), TruncatedSeries(n));
    const int v = quad_valuation(z);
    if (v <= bound && v > 0) seeds.emplace_back(std::move(z), v);
  }
  for (int e : ideal_values.minimal_generators()) {
    QuadElement z(context, TruncatedSeries(n), TruncatedSeries::monomial(e, n));
    const int v = quad_valuation(z);
    if (v <= bound && v > 0) seeds.emplace_back(std::move(z), v);
  }

  std::vector<bool> reached(bound + 1, false);
  reached[0] = true;
  std::vector<std::pair<QuadElement, int>> frontier;
  frontier.emplace_back(QuadElement::one(context), 0);
  while (!frontier.empty()) {
    std::vector<std::pair<QuadElement, int>> next;
    for (const auto& [z, v] : frontier) {
      for (const auto& [seed, sv] : seeds) {
        if (v + sv > bound) continue;
        QuadElement product = z * seed;
        const int pv = quad_valuation(product);
        if (pv != v + sv)
          throw std::logic_error("valuation failed to add along a product");
        if (!reached[pv]) {
          reached[pv] = true;
          next.emplace_back(std::move(product), pv);
        }
      }
    }
    frontier = std::move(next);
  }
  return NumericalSemigroup::from_membership(reached, bound + 1);
}

bool verify_double_valuation(const BranchRing& ring, const SemigroupIdeal& ideal_values,
                             const TruncatedSeries& b, int bound) {
  const NumericalSemigroup computed = value_semigroup_of_quotient(ring, ideal_values, b, bound);
  const auto ord = b.order();
  const NumericalSemigroup expected =
      duplicate(ring.value_semigroup, ideal_values, ord ? *ord : 0).result;
  for (int x = 0; x <= bound; ++x)
    if (computed.contains(x) != expected.contains(x)) return false;
  return true;
}

bool ring_arf_check(const BranchRing& ring, const SemigroupIdeal& ideal_values,
                    const TruncatedSeries& b) {
  const auto ord = b.order();
  if (!ord) fail(errc::zero_element, "b must be nonzero mod the truncation");
  const int m = *ord;
  const DuplicationInstance instance = duplicate(ring.value_semigroup, ideal_values, m);
  const int bound = instance.result.conductor() + m;
  const NumericalSemigroup values = value_semigroup_of_quotient(ring, ideal_values, b, bound);
  const bool ring_side = is_arf(values);
  const bool semigroup_side =
      duplication_arf_predicate(ring.value_semigroup, ideal_values, m).value;
  if (ring_side != semigroup_side)
    throw std::logic_error("ring-level Arf check disagrees with the duplication predicate");
  return ring_side;
}

BranchRing make_branch_ring(const NumericalSemigroup& value_semigroup, int bound, int m) {
  if (bound < 0 || m <= 0) fail(errc::invalid_input, "bound and m must be positive");
  return BranchRing{value_semigroup, 2 * bound + 2 * m + 4};
}

}  // namespace arflab
