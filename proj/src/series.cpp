#include "arflab/series.hpp"

#include <numeric>

#include "arflab/errors.hpp"

namespace arflab {

Rational::Rational(long long n, long long d) : num(n), den(d) {
  if (den == 0) fail(errc::invalid_input, "zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  if (num == 0) {
    den = 1;
    return;
  }
  const long long g = std::gcd(num < 0 ? -num : num, den);
  num /= g;
  den /= g;
}

Rational operator+(const Rational& a, const Rational& b) {
  return Rational(a.num * b.den + b.num * a.den, a.den * b.den);
}

Rational operator-(const Rational& a, const Rational& b) {
  return Rational(a.num * b.den - b.num * a.den, a.den * b.den);
}

Rational operator*(const Rational& a, const Rational& b) {
  return Rational(a.num * b.num, a.den * b.den);
}

std::string Rational::to_string() const {
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

TruncatedSeries::TruncatedSeries(int truncation) : truncation_(truncation) {
  if (truncation <= 0) fail(errc::invalid_input, "truncation must be positive");
}

TruncatedSeries TruncatedSeries::monomial(int exponent, int truncation, Rational coefficient) {
  TruncatedSeries s(truncation);
  s.set_coefficient(exponent, coefficient);
  return s;
}

std::optional<int> TruncatedSeries::order() const {
  if (coefficients_.empty()) return std::nullopt;
  return coefficients_.begin()->first;
}

void TruncatedSeries::set_coefficient(int exponent, Rational value) {
  if (exponent < 0) fail(errc::invalid_input, "exponents must be non-negative");
  if (exponent >= truncation_) return;  // beyond the window
  if (value.is_zero())
    coefficients_.erase(exponent);
  else
    coefficients_[exponent] = value;
}

void TruncatedSeries::require_same_truncation(const TruncatedSeries& other) const {
  if (truncation_ != other.truncation_)
    fail(errc::truncation_mismatch, "series truncated at " + std::to_string(truncation_) +
                                        " and " + std::to_string(other.truncation_));
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& other) const {
  require_same_truncation(other);
  TruncatedSeries out = *this;
  for (const auto& [e, c] : other.coefficients_) {
    auto it = out.coefficients_.find(e);
    if (it == out.coefficients_.end()) {
      out.coefficients_.emplace(e, c);
    } else {
      it->second = it->second + c;
      if (it->second.is_zero()) out.coefficients_.erase(it);
    }
  }
  return out;
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries& other) const {
  require_same_truncation(other);
  TruncatedSeries negated(other.truncation_);
  for (const auto& [e, c] : other.coefficients_) negated.coefficients_.emplace(e, Rational(0) - c);
  return *this + negated;
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& other) const {
  require_same_truncation(other);
  TruncatedSeries out(truncation_);
  for (const auto& [e1, c1] : coefficients_) {
    if (e1 >= truncation_) break;
    for (const auto& [e2, c2] : other.coefficients_) {
      if (e1 + e2 >= truncation_) break;
      auto it = out.coefficients_.find(e1 + e2);
      if (it == out.coefficients_.end()) {
        out.coefficients_.emplace(e1 + e2, c1 * c2);
      } else {
        it->second = it->second + c1 * c2;
        if (it->second.is_zero()) out.coefficients_.erase(it);
      }
    }
  }
  return out;
}

std::string TruncatedSeries::to_string() const {
  if (coefficients_.empty()) return "0";
  std::string out;
  for (const auto& [e, c] : coefficients_) {
    if (!out.empty()) out += " + ";
    if (e == 0) {
      out += c.to_string();
    } else {
      if (!(c.num == 1 && c.den == 1)) out += c.to_string() + "*";
      out += "t^" + std::to_string(e);
    }
  }
  return out;
}

}  // namespace arflab
