#pragma once

#include <memory>
#include <vector>

#include "arflab/numerical_semigroup.hpp"
#include "arflab/semigroup_ideal.hpp"
#include "arflab/series.hpp"

namespace arflab {

// The semigroup ring k[[t^S]] truncated at t^N: a series belongs to it iff
// its support lies in the value semigroup. The order function on series is
// the valuation.
struct BranchRing {
  NumericalSemigroup value_semigroup;
  int truncation = 1;

  bool contains(const TruncatedSeries& series) const;
  bool operator==(const BranchRing& other) const {
    return truncation == other.truncation && value_semigroup == other.value_semigroup;
  }
};

// Shared data of the quadratic extension R + I·α with α² = b: the branch
// ring, the monomial ideal's exponent set, and b of odd order m.
struct QuadContext {
  BranchRing ring;
  SemigroupIdeal ideal_values;
  TruncatedSeries b;
  int m = 1;

  QuadContext(BranchRing ring_in, SemigroupIdeal ideal_in, TruncatedSeries b_in);

  bool operator==(const QuadContext& other) const {
    return m == other.m && ring == other.ring && b == other.b &&
           ideal_values == other.ideal_values;
  }
};

// p + q·α with p in the ring and q supported on the ideal's exponents.
class QuadElement {
 public:
  QuadElement(std::shared_ptr<const QuadContext> context, TruncatedSeries p, TruncatedSeries q);

  static QuadElement one(std::shared_ptr<const QuadContext> context);

  const QuadContext& context() const { return *context_; }
  const std::shared_ptr<const QuadContext>& context_ptr() const { return context_; }
  const TruncatedSeries& p() const { return p_; }
  const TruncatedSeries& q() const { return q_; }

  // (p1 p2 + q1 q2 b, p1 q2 + q1 p2).
  QuadElement operator*(const QuadElement& other) const;

 private:
  std::shared_ptr<const QuadContext> context_;
  TruncatedSeries p_;
  TruncatedSeries q_;
};

// v'(p + q·α) = min(2·ord(p), 2·ord(q) + m). The two candidates have
// opposite parity, so they never tie. Values at or past twice the
// truncation cannot be certified and raise TruncationOverflow.
int quad_valuation(const QuadElement& z);

// Every valuation <= bound attained by the quadratic extension, computed by
// closing the monomial generators under ring multiplication and collecting
// v' along the way. Independent of the duplication construction.
NumericalSemigroup value_semigroup_of_quotient(const BranchRing& ring,
                                               const SemigroupIdeal& ideal_values,
                                               const TruncatedSeries& b, int bound);

// Compares the value set above with the numerical duplication on [0, bound].
bool verify_double_valuation(const BranchRing& ring, const SemigroupIdeal& ideal_values,
                             const TruncatedSeries& b, int bound);

// Arf property of the quadratic extension, read off its value semigroup.
// Cross-checks the duplication predicate internally and throws
// std::logic_error if the two ever disagree.
bool ring_arf_check(const BranchRing& ring, const SemigroupIdeal& ideal_values,
                    const TruncatedSeries& b);

// Truncation wide enough for every valuation read up to `bound`.
BranchRing make_branch_ring(const NumericalSemigroup& value_semigroup, int bound, int m);

}  // namespace arflab
