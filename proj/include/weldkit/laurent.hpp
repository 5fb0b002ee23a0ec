#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace weld {

/// Integer Laurent polynomial in one variable t.
///
/// Stored as a lowest exponent plus a dense coefficient vector without
/// leading or trailing zeros; the zero polynomial has no coefficients.
/// Arithmetic throws std::overflow_error rather than wrapping.
class LaurentPolynomial {
 public:
  LaurentPolynomial() = default;
  LaurentPolynomial(std::int64_t constant);  // NOLINT: implicit on purpose
  LaurentPolynomial(int low, std::vector<std::int64_t> coeffs);

  static LaurentPolynomial monomial(std::int64_t coeff, int exponent);

  bool is_zero() const { return coeffs_.empty(); }
  int low() const { return low_; }
  int high() const { return low_ + static_cast<int>(coeffs_.size()) - 1; }
  std::int64_t coeff(int exponent) const;
  const std::vector<std::int64_t>& coeffs() const { return coeffs_; }

  LaurentPolynomial operator-() const;
  friend LaurentPolynomial operator+(const LaurentPolynomial& a, const LaurentPolynomial& b);
  friend LaurentPolynomial operator-(const LaurentPolynomial& a, const LaurentPolynomial& b);
  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);
  friend bool operator==(const LaurentPolynomial&, const LaurentPolynomial&) = default;

  /// Exact quotient; throws std::domain_error if b does not divide a.
  friend LaurentPolynomial exact_div(const LaurentPolynomial& a, const LaurentPolynomial& b);

  /// t -> 1/t.
  LaurentPolynomial inverted_variable() const;

  /// Representative up to units ±t^k: lowest degree 0, positive leading coefficient.
  LaurentPolynomial normalized() const;

  /// e.g. "t^2 - t + 1"; zero prints as "0".
  std::string to_string() const;

 private:
  void trim();

  int low_ = 0;
  std::vector<std::int64_t> coeffs_;
};

/// Greatest common divisor in Z[t, 1/t], normalized.
LaurentPolynomial gcd(const LaurentPolynomial& a, const LaurentPolynomial& b);

using PolyMatrix = std::vector<std::vector<LaurentPolynomial>>;

/// Determinant by fraction-free elimination; exact up to a unit ±t^k.
LaurentPolynomial determinant(PolyMatrix m);

}  // namespace weld
