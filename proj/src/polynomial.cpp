#include "facering/polynomial.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "facering/errors.hpp"

namespace facering {

RationalPolynomial::RationalPolynomial(std::vector<Rational> coefficients)
    : coeffs_(std::move(coefficients)) {
  for (auto& c : coeffs_) c.canonicalize();
  trim();
}

RationalPolynomial RationalPolynomial::constant(const Rational& c) {
  return RationalPolynomial({c});
}

RationalPolynomial RationalPolynomial::monomial(const Rational& c, std::size_t degree) {
  std::vector<Rational> coeffs(degree + 1);
  coeffs[degree] = c;
  return RationalPolynomial(std::move(coeffs));
}

RationalPolynomial RationalPolynomial::from_integers(const std::vector<long>& coefficients) {
  std::vector<Rational> coeffs;
  for (long c : coefficients) coeffs.emplace_back(c);
  return RationalPolynomial(std::move(coeffs));
}

void RationalPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational RationalPolynomial::coefficient(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : Rational(0);
}

Rational RationalPolynomial::leading_coefficient() const {
  return coeffs_.empty() ? Rational(0) : coeffs_.back();
}

Rational RationalPolynomial::evaluate(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

RationalPolynomial RationalPolynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> out(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) out[k - 1] = coeffs_[k] * static_cast<long>(k);
  return RationalPolynomial(std::move(out));
}

Rational RationalPolynomial::derivative_at_one(std::size_t i) const {
  RationalPolynomial p = *this;
  for (std::size_t k = 0; k < i && !p.is_zero(); ++k) p = p.derivative();
  return p.evaluate(1);
}

RationalPolynomial& RationalPolynomial::operator+=(const RationalPolynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
  trim();
  return *this;
}

RationalPolynomial& RationalPolynomial::operator-=(const RationalPolynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] -= other.coeffs_[k];
  trim();
  return *this;
}

RationalPolynomial& RationalPolynomial::operator*=(const Rational& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  trim();
  return *this;
}

RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return RationalPolynomial(std::move(out));
}

std::string RationalPolynomial::to_string(const std::string& variable) const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Rational& c = coeffs_[k];
    if (c == 0) continue;
    const Rational magnitude = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      os << magnitude.get_str();
      continue;
    }
    if (magnitude != 1) os << magnitude.get_str() << "*";
    os << variable;
    if (k > 1) os << "^" << k;
  }
  return os.str();
}

RationalPolynomial interpolate(const std::vector<std::pair<Rational, Rational>>& points) {
  if (points.empty()) throw Error(ErrorCode::InvalidArgument, "interpolation needs a point");
  std::set<Rational> xs;
  for (const auto& [x, y] : points) {
    if (!xs.insert(x).second) {
      throw Error(ErrorCode::DuplicateAbscissa, "duplicate abscissa " + x.get_str());
    }
  }
  const std::size_t n = points.size();
  std::vector<Rational> table(n);
  for (std::size_t i = 0; i < n; ++i) table[i] = points[i].second;
  // In-place divided differences: table[i] becomes f[x_0..x_i].
  for (std::size_t level = 1; level < n; ++level) {
    for (std::size_t i = n - 1; i >= level; --i) {
      table[i] = (table[i] - table[i - 1]) / (points[i].first - points[i - level].first);
    }
  }
  // Horner over the Newton basis.
  RationalPolynomial result = RationalPolynomial::constant(table[n - 1]);
  for (std::size_t i = n - 1; i-- > 0;) {
    result = result * RationalPolynomial({-points[i].first, Rational(1)});
    result += RationalPolynomial::constant(table[i]);
  }
  return result;
}

RationalPolynomial binomial_basis_polynomial(std::size_t k) {
  RationalPolynomial p = RationalPolynomial::constant(1);
  for (std::size_t j = 0; j < k; ++j) {
    p = p * RationalPolynomial({Rational(static_cast<long>(j)), Rational(1)});
  }
  Rational scale(1);
  scale /= Rational(factorial(static_cast<std::int64_t>(k)));
  return p * scale;
}

RationalPolynomial BinomialBasisForm::expand() const {
  RationalPolynomial p;
  for (std::size_t k = 0; k < coefficients.size(); ++k) {
    if (coefficients[k] != 0) p += binomial_basis_polynomial(k) * coefficients[k];
  }
  return p;
}

Rational BinomialBasisForm::evaluate(const Rational& s) const {
  return expand().evaluate(s);
}

bool BinomialBasisForm::is_integral() const {
  return std::all_of(coefficients.begin(), coefficients.end(),
                     [](const Rational& c) { return c.get_den() == 1; });
}

std::string BinomialBasisForm::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = coefficients.size(); k-- > 0;) {
    const Rational& c = coefficients[k];
    if (c == 0) continue;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    os << Rational(abs(c)).get_str() << "*B" << k;
  }
  return first ? "0" : os.str();
}

BinomialBasisForm to_binomial_basis(const RationalPolynomial& p) {
  BinomialBasisForm form;
  if (p.is_zero()) return form;
  form.coefficients.assign(p.degree() + 1, Rational(0));
  RationalPolynomial rest = p;
  while (!rest.is_zero()) {
    const auto k = static_cast<std::size_t>(rest.degree());
    // B_k has leading coefficient 1/k!.
    Rational c = rest.leading_coefficient() * Rational(factorial(static_cast<std::int64_t>(k)));
    form.coefficients[k] = c;
    rest -= binomial_basis_polynomial(k) * c;
  }
  return form;
}

}  // namespace facering
