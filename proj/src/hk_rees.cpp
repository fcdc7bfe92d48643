#include "facering/hk_rees.hpp"

#include <algorithm>
#include <cstdlib>

#include "facering/errors.hpp"
#include "facering/homology.hpp"
#include "facering/oracle.hpp"

namespace facering {

std::int64_t HKMode::j(std::int64_t s) const {
  if (const auto* cm = std::get_if<CohenMacaulayMode>(&variant_)) {
    return -floor_div(cm->postulation, s);
  }
  return std::get<NonCohenMacaulayMode>(variant_).ad_sign == ADSign::Negative ? 1 : 0;
}

std::int64_t HKMode::validity_threshold() const {
  if (const auto* cm = std::get_if<CohenMacaulayMode>(&variant_)) {
    return std::max<std::int64_t>(1, std::llabs(cm->postulation));
  }
  return std::get<NonCohenMacaulayMode>(variant_).delta + 1;
}

std::int64_t HKMode::sampling_start() const {
  if (const auto* cm = std::get_if<CohenMacaulayMode>(&variant_)) {
    return 1 + std::llabs(cm->postulation);
  }
  return validity_threshold();
}

void HKMode::validate(int d) const {
  if (const auto* cm = std::get_if<CohenMacaulayMode>(&variant_)) {
    if (cm->postulation > 0 || cm->postulation < -d) {
      throw Error(ErrorCode::InvalidArgument,
                  "postulation number " + std::to_string(cm->postulation) +
                      " outside [-d, 0] for d = " + std::to_string(d));
    }
    return;
  }
  if (std::get<NonCohenMacaulayMode>(variant_).delta < 0) {
    throw Error(ErrorCode::InvalidArgument, "delta must be non-negative");
  }
}

HKMode determine_mode(const SimplicialComplex& complex, std::int64_t characteristic,
                      const ModeOverrides& overrides) {
  if (overrides.delta && overrides.ad_sign) {
    HKMode mode = NonCohenMacaulayMode{*overrides.delta, *overrides.ad_sign};
    mode.validate(complex.krull_dimension());
    return mode;
  }
  if (is_cohen_macaulay(complex, characteristic)) {
    return CohenMacaulayMode{FaceRingLengths(complex).postulation_number_unchecked()};
  }
  throw Error(ErrorCode::MissingAInvariantData,
              "face ring is not Cohen-Macaulay in characteristic " +
                  std::to_string(characteristic) + "; supply delta and the sign of a_d");
}

Rational eto_yoshida_constant(int d) {
  Rational c(d, 2);
  c += Rational(Integer(d), factorial(d + 1));
  c.canonicalize();
  return c;
}

EtoYoshidaVerdict eto_yoshida_check(const HKReport& report) {
  EtoYoshidaVerdict verdict;
  verdict.leading = report.polynomial.leading_coefficient();
  verdict.bound = eto_yoshida_constant(report.d) * Rational(static_cast<long>(report.f.back()));
  verdict.equal = verdict.leading == verdict.bound;
  verdict.within_bound = verdict.leading <= verdict.bound;
  return verdict;
}

HilbertKunzRees::HilbertKunzRees(const SimplicialComplex& complex, HKMode mode,
                                 HKOptions options)
    : lengths_(complex, options.lengths), mode_(mode), options_(options) {
  mode_.validate(lengths_.dimension());
}

Integer HilbertKunzRees::value_at(std::int64_t s) const {
  if (s < 1) throw Error(ErrorCode::InvalidQuery, "HK(s) needs s >= 1");
  if (s < mode_.validity_threshold() && !options_.experimental) {
    throw Error(ErrorCode::BelowValidityThreshold,
                "s = " + std::to_string(s) + " is below the validity threshold " +
                    std::to_string(mode_.validity_threshold()) + " (use experimental mode)");
  }
  return value_at_unchecked(s);
}

Integer HilbertKunzRees::value_at_unchecked(std::int64_t s) const {
  if (s < 1) throw Error(ErrorCode::InvalidQuery, "HK(s) needs s >= 1");
  const std::int64_t d = lengths_.dimension();
  const std::int64_t reduction = d - mode_.j(s);  // r(𝔫^s)

  // Colength terms n = 1 .. max(s, R s) - 1, weighted 2 below s (once more
  // for the n + s piece) unless R = 0; Hilbert–Samuel terms
  // n = 1 .. (R + 1) s - 1 weighted -1.
  const std::int64_t colength_top = std::max(s, reduction * s) - 1;
  const std::int64_t samuel_top = (reduction + 1) * s - 1;
  const std::int64_t count = colength_top + samuel_top;
  std::vector<Integer> terms(static_cast<std::size_t>(std::max<std::int64_t>(count, 0)));

#pragma omp parallel for schedule(dynamic, 4)
  for (std::int64_t idx = 0; idx < count; ++idx) {
    if (idx < colength_top) {
      const std::int64_t n = idx + 1;
      terms[idx] = lengths_.sr_colength(s, n) * (n < s && reduction >= 1 ? 2 : 1);
    } else {
      const std::int64_t n = idx - colength_top + 1;
      terms[idx] = -lengths_.hilbert_samuel(n);
    }
  }

  Integer total = 0;
  for (const auto& t : terms) total += t;
  // The n = 0 piece contributes ℓ(R/𝔫^[s]) once; the n = s piece, present only
  // when r(𝔫^s) >= 1, contributes it again.
  total += lengths_.conca_hk(s) * (reduction >= 1 ? 2 : 1);
  return total;
}

HKReport HilbertKunzRees::polynomial() const {
  const FHData& data = lengths_.face_data();
  HKReport report;
  report.num_vertices = lengths_.complex().num_vertices();
  report.d = data.d;
  report.f = data.f;
  report.h = data.h;
  report.mode = mode_;
  report.s_min = mode_.validity_threshold();

  const std::int64_t start = mode_.sampling_start();
  const std::int64_t fit_points = data.d + 2;
  std::vector<std::pair<Rational, Rational>> points;
  for (std::int64_t s = start; s < start + fit_points; ++s) {
    Integer v = value_at_unchecked(s);
    report.samples.emplace_back(s, v);
    points.emplace_back(Rational(static_cast<long>(s)), Rational(v));
  }
  report.polynomial = interpolate(points);
  for (std::int64_t s = start + fit_points; s < start + fit_points + 2; ++s) {
    Integer v = value_at_unchecked(s);
    report.verification.emplace_back(s, v);
    if (report.polynomial.evaluate(Rational(static_cast<long>(s))) != Rational(v)) {
      throw Error(ErrorCode::FitMismatch,
                  "fitted polynomial disagrees with HK(" + std::to_string(s) + ")");
    }
  }
  if (report.polynomial.degree() != data.d + 1) {
    throw Error(ErrorCode::FitMismatch,
                "fitted polynomial has degree " + std::to_string(report.polynomial.degree()) +
                    ", expected " + std::to_string(data.d + 1));
  }
  report.binomial = to_binomial_basis(report.polynomial);
  report.multiplicity = report.polynomial.leading_coefficient();
  report.bound_check = eto_yoshida_check(report);

  if (options_.oracle_s_max > 0) {
    report.oracle.checked = true;
    for (std::int64_t s = report.s_min; s <= options_.oracle_s_max; ++s) {
      Integer expected;
      try {
        expected = oracle_hk_rees(lengths_.complex(), s);
      } catch (const Error& e) {
        if (e.code() == ErrorCode::BudgetExceeded) break;
        throw;
      }
      report.oracle.s_checked.push_back(s);
      if (expected != value_at_unchecked(s)) report.oracle.agree = false;
    }
  }
  return report;
}

Integer hk_rees_at(const SimplicialComplex& complex, std::int64_t s, const HKMode& mode,
                   HKOptions options) {
  return HilbertKunzRees(complex, mode, options).value_at(s);
}

HKReport hk_rees_polynomial(const SimplicialComplex& complex, const HKMode& mode,
                            HKOptions options) {
  return HilbertKunzRees(complex, mode, options).polynomial();
}

}  // namespace facering
