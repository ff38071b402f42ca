#pragma once

#include <map>
#include <optional>
#include <string>

namespace arflab {

// Exact rational coefficients, normalized with positive denominator.
struct Rational {
  long long num = 0;
  long long den = 1;

  Rational() = default;
  Rational(long long n) : num(n) {}  // NOLINT: implicit from integers is intended
  Rational(long long n, long long d);

  bool is_zero() const { return num == 0; }

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num == b.num && a.den == b.den;
  }

  std::string to_string() const;
};

// A formal power series mod t^N with exact coefficients; only nonzero
// coefficients are stored and arithmetic never reads past the truncation.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(int truncation);

  static TruncatedSeries monomial(int exponent, int truncation, Rational coefficient = 1);

  int truncation() const { return truncation_; }
  const std::map<int, Rational>& coefficients() const { return coefficients_; }

  // Least exponent with a nonzero coefficient; nullopt for the series that
  // vanishes mod t^N.
  std::optional<int> order() const;
  bool is_zero() const { return coefficients_.empty(); }

  void set_coefficient(int exponent, Rational value);

  TruncatedSeries operator+(const TruncatedSeries& other) const;
  TruncatedSeries operator-(const TruncatedSeries& other) const;
  TruncatedSeries operator*(const TruncatedSeries& other) const;
  bool operator==(const TruncatedSeries& other) const {
    return truncation_ == other.truncation_ && coefficients_ == other.coefficients_;
  }

  std::string to_string() const;

 private:
  void require_same_truncation(const TruncatedSeries& other) const;

  std::map<int, Rational> coefficients_;
  int truncation_;
};

}  // namespace arflab
