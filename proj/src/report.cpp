#include "facering/report.hpp"

#include <sstream>

#include "json.hpp"

namespace facering {
namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json integer_json(const Integer& v) {
  if (v.fits_slong_p()) return ordered_json(v.get_si());
  return ordered_json(v.get_str());
}

ordered_json rationals_json(const std::vector<Rational>& values) {
  ordered_json out = ordered_json::array();
  for (const auto& v : values) out.push_back(v.get_str());
  return out;
}

ordered_json samples_json(const std::vector<std::pair<std::int64_t, Integer>>& samples) {
  ordered_json out = ordered_json::array();
  for (const auto& [s, v] : samples) out.push_back({{"s", s}, {"value", integer_json(v)}});
  return out;
}

ordered_json mode_json(const HKMode& mode) {
  if (const auto* cm = std::get_if<CohenMacaulayMode>(&mode.variant())) {
    return {{"kind", "cohen-macaulay"}, {"postulation", cm->postulation}};
  }
  const auto& non_cm = std::get<NonCohenMacaulayMode>(mode.variant());
  return {{"kind", "non-cohen-macaulay"},
          {"delta", non_cm.delta},
          {"ad_sign", non_cm.ad_sign == ADSign::Negative ? "negative" : "zero"}};
}

}  // namespace

std::string mode_to_string(const HKMode& mode) {
  if (const auto* cm = std::get_if<CohenMacaulayMode>(&mode.variant())) {
    return "CM (postulation number " + std::to_string(cm->postulation) + ")";
  }
  const auto& non_cm = std::get<NonCohenMacaulayMode>(mode.variant());
  return "non-CM (delta " + std::to_string(non_cm.delta) + ", a_d " +
         (non_cm.ad_sign == ADSign::Negative ? "negative" : "zero") + ")";
}

std::string report_to_json(const HKReport& report, const std::optional<std::string>& name) {
  ordered_json j;
  j["schema"] = "facering.hk-report";
  j["schema_version"] = kReportSchemaVersion;
  ordered_json inputs;
  if (name) inputs["name"] = *name;
  inputs["vertices"] = report.num_vertices;
  inputs["d"] = report.d;
  inputs["f"] = report.f;
  inputs["h"] = report.h;
  j["inputs"] = inputs;
  j["mode"] = mode_json(report.mode);
  j["s_min"] = report.s_min;
  j["samples"] = samples_json(report.samples);
  j["verification"] = samples_json(report.verification);
  j["polynomial"] = {
      {"monomial",
       {{"coefficients", rationals_json(report.polynomial.coefficients())},
        {"text", report.polynomial.to_string("s")}}},
      {"binomial",
       {{"coefficients", rationals_json(report.binomial.coefficients)},
        {"text", report.binomial.to_string()}}}};
  j["multiplicity"] = report.multiplicity.get_str();
  j["bound_check"] = {{"c_d", eto_yoshida_constant(report.d).get_str()},
                      {"e", report.f.back()},
                      {"bound", report.bound_check.bound.get_str()},
                      {"leading", report.bound_check.leading.get_str()},
                      {"equal", report.bound_check.equal},
                      {"within_bound", report.bound_check.within_bound}};
  j["oracle"] = {{"checked", report.oracle.checked},
                 {"agree", report.oracle.agree},
                 {"s_checked", report.oracle.s_checked}};
  return j.dump(2) + "\n";
}

std::string report_to_text(const HKReport& report) {
  std::ostringstream os;
  auto vec = [&](const std::vector<std::int64_t>& v) {
    os << "(";
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << ")";
  };
  os << "vertices: " << report.num_vertices << "  d: " << report.d << "\n";
  os << "f: ";
  vec(report.f);
  os << "\nh: ";
  vec(report.h);
  os << "\nmode: " << mode_to_string(report.mode) << "\n";
  os << "valid for s >= " << report.s_min << "\n";
  os << "samples:";
  for (const auto& [s, v] : report.samples) os << " HK(" << s << ")=" << v.get_str();
  os << "\n";
  os << "HK(s) = " << report.polynomial.to_string("s") << "\n";
  os << "binomial: " << report.binomial.to_string() << "\n";
  os << "multiplicity: " << report.multiplicity.get_str() << "\n";
  os << "Eto-Yoshida: leading " << report.bound_check.leading.get_str() << " vs c(d)*e "
     << report.bound_check.bound.get_str() << " -> "
     << (report.bound_check.equal ? "equal" : (report.bound_check.within_bound ? "below" : "VIOLATED"))
     << "\n";
  if (report.oracle.checked) {
    os << "oracle: " << (report.oracle.agree ? "agree" : "DISAGREE") << " on s =";
    for (auto s : report.oracle.s_checked) os << " " << s;
    os << "\n";
  }
  return os.str();
}

}  // namespace facering
