#include "facering/arith.hpp"

#include <stdexcept>

namespace facering {

Integer binom(std::int64_t a, std::int64_t b) {
  if (a < 0 || b < 0 || b > a) return 0;
  Integer result;
  mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(a),
               static_cast<unsigned long>(b));
  return result;
}

Integer factorial(std::int64_t n) {
  if (n < 0) throw std::invalid_argument("factorial of a negative number");
  Integer result;
  mpz_fac_ui(result.get_mpz_t(), static_cast<unsigned long>(n));
  return result;
}

Integer ipow(std::int64_t base, std::int64_t exponent) {
  if (exponent < 0) throw std::invalid_argument("negative exponent");
  Integer result;
  Integer b = static_cast<long>(base);
  mpz_pow_ui(result.get_mpz_t(), b.get_mpz_t(),
             static_cast<unsigned long>(exponent));
  return result;
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::string to_string(const Integer& value) { return value.get_str(); }

std::string to_string(const Rational& value) { return value.get_str(); }

}  // namespace facering
