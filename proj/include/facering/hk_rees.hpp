#pragma once

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "facering/arith.hpp"
#include "facering/lengths.hpp"
#include "facering/polynomial.hpp"
#include "facering/simplicial.hpp"

namespace facering {

enum class ADSign { Negative, Zero };

struct CohenMacaulayMode {
  std::int64_t postulation = 0;  // n(𝔫)
};

/// Non-Cohen–Macaulay data supplied by the caller: δ = max |a_i(R)| over the
/// finite a-invariants and the sign of a_d(R).
struct NonCohenMacaulayMode {
  std::int64_t delta = 0;
  ADSign ad_sign = ADSign::Negative;
};

class HKMode {
 public:
  using Variant = std::variant<CohenMacaulayMode, NonCohenMacaulayMode>;

  HKMode(CohenMacaulayMode cm) : variant_(cm) {}
  HKMode(NonCohenMacaulayMode non_cm) : variant_(non_cm) {}

  bool is_cohen_macaulay() const {
    return std::holds_alternative<CohenMacaulayMode>(variant_);
  }
  const Variant& variant() const { return variant_; }

  /// r(𝔫^s) = d - j(s): j = -floor(n(𝔫)/s) for CM, 1 or 0 by the sign of
  /// a_d otherwise.
  std::int64_t j(std::int64_t s) const;

  /// Smallest s at which the formula holds without the experimental flag:
  /// max(1, |n(𝔫)|) for CM, δ + 1 otherwise.
  std::int64_t validity_threshold() const;

  /// First sample used for interpolation; j is constant from here on.
  std::int64_t sampling_start() const;

  /// Throws InvalidArgument if the mode is inconsistent with dimension d.
  void validate(int d) const;

 private:
  Variant variant_;
};

struct ModeOverrides {
  std::optional<std::int64_t> delta;
  std::optional<ADSign> ad_sign;
};

/// CM mode from the postulation number when Reisner's criterion holds and no
/// override is given; otherwise NonCM built from the overrides.
HKMode determine_mode(const SimplicialComplex& complex, std::int64_t characteristic,
                      const ModeOverrides& overrides = {});

/// c(d) = d/2 + d/(d+1)!.
Rational eto_yoshida_constant(int d);

struct EtoYoshidaVerdict {
  Rational leading;
  Rational bound;  // c(d) * e(𝔫)
  bool equal = false;
  bool within_bound = false;
};

struct OracleAgreement {
  bool checked = false;
  bool agree = true;
  std::vector<std::int64_t> s_checked;
};

struct HKReport {
  std::size_t num_vertices = 0;
  int d = 0;
  std::vector<std::int64_t> f;
  std::vector<std::int64_t> h;
  HKMode mode = CohenMacaulayMode{};
  std::int64_t s_min = 1;
  std::vector<std::pair<std::int64_t, Integer>> samples;       // used for the fit
  std::vector<std::pair<std::int64_t, Integer>> verification;  // checked afterwards
  RationalPolynomial polynomial;
  BinomialBasisForm binomial;
  Rational multiplicity;  // leading coefficient, degree d + 1
  EtoYoshidaVerdict bound_check;
  OracleAgreement oracle;
};

EtoYoshidaVerdict eto_yoshida_check(const HKReport& report);

struct HKOptions {
  bool experimental = false;
  LengthOptions lengths{};
  /// When > 0, hk_rees_polynomial also checks the closed form against the
  /// brute-force oracle for every valid s up to this bound.
  std::int64_t oracle_s_max = 0;
};

/// Generalized Hilbert–Kunz function of (𝔫, 𝔫t) in the Rees algebra of 𝔫.
class HilbertKunzRees {
 public:
  HilbertKunzRees(const SimplicialComplex& complex, HKMode mode, HKOptions options = {});

  const FaceRingLengths& lengths() const { return lengths_; }
  const HKMode& mode() const { return mode_; }

  /// HK(s). Below the validity threshold requires options.experimental.
  Integer value_at(std::int64_t s) const;
  /// Same, bypassing the threshold check.
  Integer value_at_unchecked(std::int64_t s) const;

  HKReport polynomial() const;

 private:
  FaceRingLengths lengths_;
  HKMode mode_;
  HKOptions options_;
};

Integer hk_rees_at(const SimplicialComplex& complex, std::int64_t s, const HKMode& mode,
                   HKOptions options = {});

HKReport hk_rees_polynomial(const SimplicialComplex& complex, const HKMode& mode,
                            HKOptions options = {});

}  // namespace facering
