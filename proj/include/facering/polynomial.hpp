#pragma once

#include <string>
#include <utility>
#include <vector>

#include "facering/arith.hpp"

namespace facering {

/// Univariate polynomial with exact rational coefficients, constant term
/// first. Trailing zeros are always trimmed, so the zero polynomial has no
/// coefficients and degree -1.
class RationalPolynomial {
 public:
  RationalPolynomial() = default;
  explicit RationalPolynomial(std::vector<Rational> coefficients);

  static RationalPolynomial constant(const Rational& c);
  static RationalPolynomial monomial(const Rational& c, std::size_t degree);
  static RationalPolynomial from_integers(const std::vector<long>& coefficients);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  Rational coefficient(std::size_t k) const;
  Rational leading_coefficient() const;

  Rational evaluate(const Rational& x) const;
  RationalPolynomial derivative() const;
  /// Value of the i-th derivative at 1.
  Rational derivative_at_one(std::size_t i) const;

  RationalPolynomial& operator+=(const RationalPolynomial& other);
  RationalPolynomial& operator-=(const RationalPolynomial& other);
  RationalPolynomial& operator*=(const Rational& scalar);
  friend RationalPolynomial operator+(RationalPolynomial a, const RationalPolynomial& b) {
    return a += b;
  }
  friend RationalPolynomial operator-(RationalPolynomial a, const RationalPolynomial& b) {
    return a -= b;
  }
  friend RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b);
  friend RationalPolynomial operator*(RationalPolynomial a, const Rational& c) { return a *= c; }
  friend bool operator==(const RationalPolynomial& a, const RationalPolynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

  /// e.g. "8/3*s^3 - 2/3*s - 1"; "0" for the zero polynomial.
  std::string to_string(const std::string& variable = "s") const;

 private:
  void trim();

  std::vector<Rational> coeffs_;
};

/// Newton divided differences through (x, y) pairs with distinct x.
RationalPolynomial interpolate(const std::vector<std::pair<Rational, Rational>>& points);

/// B_k(s) = binom(s + k - 1, k) as a polynomial in s.
RationalPolynomial binomial_basis_polynomial(std::size_t k);

/// p = sum_k c_k B_k(s).
struct BinomialBasisForm {
  std::vector<Rational> coefficients;  // c_0, c_1, ..., c_deg

  RationalPolynomial expand() const;
  Rational evaluate(const Rational& s) const;
  bool is_integral() const;
  /// e.g. "16*B3 - 16*B2 + 2*B1 - 1*B0", highest term first, zero terms
  /// omitted.
  std::string to_string() const;
};

BinomialBasisForm to_binomial_basis(const RationalPolynomial& p);

}  // namespace facering
