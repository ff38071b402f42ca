#pragma once

#include <stdexcept>
#include <string>

namespace arflab {

// Failure classes shared across the library. Input and precondition
// violations throw `error`; internal consistency canaries use
// std::logic_error instead.
enum class errc {
  invalid_input,
  empty_generators,
  gcd_not_one,
  not_a_member,
  non_positive_divisor,
  generator_not_in_semigroup,
  not_an_oversemigroup,
  not_arf,
  not_an_arf_sequence,
  even_m,
  m_not_in_semigroup,
  ideal_ambient_mismatch,
  even_e0,
  index_out_of_range,
  precondition_not_met,
  truncation_mismatch,
  context_mismatch,
  zero_element,
  truncation_overflow,
  bound_exceeds_truncation,
  inclusion_violation,
};

inline const char* errc_name(errc code) {
  switch (code) {
    case errc::invalid_input: return "InvalidInput";
    case errc::empty_generators: return "EmptyGenerators";
    case errc::gcd_not_one: return "GcdNotOne";
    case errc::not_a_member: return "NotAMember";
    case errc::non_positive_divisor: return "NonPositiveDivisor";
    case errc::generator_not_in_semigroup: return "GeneratorNotInSemigroup";
    case errc::not_an_oversemigroup: return "NotAnOversemigroup";
    case errc::not_arf: return "NotArf";
    case errc::not_an_arf_sequence: return "NotAnArfSequence";
    case errc::even_m: return "EvenM";
    case errc::m_not_in_semigroup: return "MNotInSemigroup";
    case errc::ideal_ambient_mismatch: return "IdealAmbientMismatch";
    case errc::even_e0: return "EvenE0";
    case errc::index_out_of_range: return "IndexOutOfRange";
    case errc::precondition_not_met: return "PreconditionNotMet";
    case errc::truncation_mismatch: return "TruncationMismatch";
    case errc::context_mismatch: return "ContextMismatch";
    case errc::zero_element: return "ZeroElement";
    case errc::truncation_overflow: return "TruncationOverflow";
    case errc::bound_exceeds_truncation: return "BoundExceedsTruncation";
    case errc::inclusion_violation: return "InclusionViolation";
  }
  return "UnknownError";
}

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message),
        code_(code) {}

  errc code() const { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& message) {
  throw error(code, message);
}

}  // namespace arflab
