// Command-line front end for the face-ring / Hilbert–Kunz library.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "facering/complex_io.hpp"
#include "facering/errors.hpp"
#include "facering/hk_rees.hpp"
#include "facering/homology.hpp"
#include "facering/lengths.hpp"
#include "facering/oracle.hpp"
#include "facering/report.hpp"

namespace {

using namespace facering;

constexpr int kExitUsage = 2;
constexpr int kExitValidation = 3;
constexpr int kExitMode = 4;
constexpr int kExitOracle = 5;

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError:
    case ErrorCode::ValidationError:
    case ErrorCode::EmptyComplex:
    case ErrorCode::GhostVertex:
    case ErrorCode::DuplicateLabel:
    case ErrorCode::TooManyVertices:
    case ErrorCode::InvalidGraph:
    case ErrorCode::NotAFace:
      return kExitValidation;
    case ErrorCode::InvalidArgument:
    case ErrorCode::InvalidQuery:
    case ErrorCode::SizeOutOfRange:
    case ErrorCode::DuplicateAbscissa:
      return kExitUsage;
    case ErrorCode::FitMismatch:
      return kExitOracle;
    default:
      return kExitMode;
  }
}

std::int64_t oracle_budget() {
  if (const char* env = std::getenv("HKREES_ORACLE_BUDGET")) {
    try {
      return std::stoll(env);
    } catch (const std::exception&) {
      throw Error(ErrorCode::InvalidArgument, "HKREES_ORACLE_BUDGET must be an integer");
    }
  }
  return kDefaultOracleBudget;
}

ParsedComplex load(const std::string& file) {
  ParsedComplex parsed = parse_complex(file);
  for (const auto& w : parsed.warnings) std::cerr << "warning: " << w << "\n";
  return parsed;
}

void print_vector(const std::vector<std::int64_t>& v) {
  std::cout << "(";
  for (std::size_t i = 0; i < v.size(); ++i) std::cout << (i ? "," : "") << v[i];
  std::cout << ")\n";
}

struct ModeFlags {
  std::optional<std::int64_t> delta;
  std::string ad_sign;
  std::int64_t characteristic = 0;

  void attach(CLI::App* cmd) {
    cmd->add_option("--delta", delta, "max |a_i(R)| over finite a-invariants (non-CM mode)");
    cmd->add_option("--ad-sign", ad_sign, "sign of a_d(R) in non-CM mode")
        ->check(CLI::IsMember({"neg", "negative", "zero"}));
    cmd->add_option("--char", characteristic, "field characteristic (0 or a prime)");
  }

  HKMode resolve(const SimplicialComplex& complex) const {
    ModeOverrides overrides;
    if (delta.has_value() != !ad_sign.empty()) {
      throw Error(ErrorCode::InvalidArgument, "--delta and --ad-sign must be given together");
    }
    if (delta) {
      overrides.delta = *delta;
      overrides.ad_sign = ad_sign == "zero" ? ADSign::Zero : ADSign::Negative;
    }
    return determine_mode(complex, characteristic, overrides);
  }
};

struct Tally {
  std::size_t total = 0;
  std::size_t failed = 0;
};

int run_verify(const SimplicialComplex& complex, std::int64_t s_max, std::int64_t n_max,
               const ModeFlags& flags) {
  OracleOptions oracle{oracle_budget()};
  FaceRingLengths lengths(complex);
  bool all_ok = true;
  auto check = [&](Tally& tally, const std::string& what, const Integer& closed,
                   const Integer& brute) {
    ++tally.total;
    if (closed != brute) {
      ++tally.failed;
      all_ok = false;
      std::cout << "MISMATCH " << what << ": closed form " << closed.get_str() << ", oracle "
                << brute.get_str() << "\n";
    }
  };
  auto summary = [](const std::string& name, const Tally& t) {
    std::cout << name << ": " << (t.total - t.failed) << "/" << t.total << " "
              << (t.failed == 0 ? "pass" : "FAIL") << "\n";
  };

  Tally sr, hs, conca, hk;
  for (std::int64_t s = 1; s <= s_max; ++s) {
    for (std::int64_t n = 0; n <= n_max; ++n) {
      check(sr, "sr_colength(s=" + std::to_string(s) + ", n=" + std::to_string(n) + ")",
            lengths.sr_colength(s, n), oracle_sr_colength(complex, s, n, oracle));
    }
    check(conca, "conca_hk(s=" + std::to_string(s) + ")", lengths.conca_hk(s),
          oracle_conca(complex, s, oracle));
  }
  for (std::int64_t n = 0; n <= n_max; ++n) {
    check(hs, "hilbert_samuel(n=" + std::to_string(n) + ")", lengths.hilbert_samuel(n),
          oracle_hilbert_samuel(complex, n, oracle));
  }
  summary("sr_colength", sr);
  summary("hilbert_samuel", hs);
  summary("conca_hk", conca);

  std::optional<HKMode> mode;
  try {
    mode = flags.resolve(complex);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::MissingAInvariantData) throw;
    std::cout << "hk_rees: skipped (" << e.what() << ")\n";
  }
  if (mode) {
    HilbertKunzRees hk_rees(complex, *mode);
    for (std::int64_t s = mode->validity_threshold(); s <= s_max; ++s) {
      check(hk, "hk_rees(s=" + std::to_string(s) + ")", hk_rees.value_at(s),
            oracle_hk_rees(complex, s, oracle));
    }
    summary("hk_rees", hk);
  }
  return all_ok ? 0 : kExitOracle;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hkrees: face-ring invariants and the generalized Hilbert-Kunz function of the "
               "Rees algebra of the maximal ideal"};
  app.require_subcommand(1);

  std::string file;
  std::int64_t characteristic = 0;
  std::int64_t n_value = 0;
  std::int64_t s_value = 1;
  bool experimental = false;
  bool as_json = false;
  std::int64_t oracle_s_max = 0;
  std::int64_t s_max = 4;
  std::int64_t n_max = 12;
  ModeFlags mode_flags;

  auto* fvector = app.add_subcommand("fvector", "print the f-vector");
  auto* hvector = app.add_subcommand("hvector", "print the h-vector");
  auto* hseries = app.add_subcommand("hseries", "print the Hilbert series");
  for (auto* cmd : {fvector, hvector, hseries}) cmd->add_option("FILE", file)->required();

  auto* cm = app.add_subcommand("cm", "Reisner's Cohen-Macaulay test");
  cm->add_option("FILE", file)->required();
  cm->add_option("--char", characteristic, "field characteristic (0 or a prime)");

  auto* postulation = app.add_subcommand("postulation", "postulation number n(m) (CM only)");
  postulation->add_option("FILE", file)->required();
  postulation->add_option("--char", characteristic, "field characteristic (0 or a prime)");

  auto* hs = app.add_subcommand("hs", "Hilbert-Samuel length l(R/m^n)");
  hs->add_option("FILE", file)->required();
  hs->add_option("--n", n_value)->required()->check(CLI::NonNegativeNumber);

  auto* conca = app.add_subcommand("conca", "generalized HK length l(R/m^[s])");
  conca->add_option("FILE", file)->required();
  conca->add_option("--s", s_value)->required()->check(CLI::PositiveNumber);

  auto* colength = app.add_subcommand("colength", "l(S/(I + m^[s] m^n))");
  colength->add_option("FILE", file)->required();
  colength->add_option("--s", s_value)->required()->check(CLI::PositiveNumber);
  colength->add_option("--n", n_value)->required()->check(CLI::NonNegativeNumber);

  auto* hk_at = app.add_subcommand("hk-at", "HK(s) of the Rees algebra");
  hk_at->add_option("FILE", file)->required();
  hk_at->add_option("--s", s_value)->required()->check(CLI::PositiveNumber);
  hk_at->add_flag("--experimental", experimental, "allow s below the validity threshold");
  mode_flags.attach(hk_at);

  auto* hk_poly = app.add_subcommand("hk-poly", "fit the HK polynomial and report");
  hk_poly->add_option("FILE", file)->required();
  hk_poly->add_flag("--json", as_json, "emit the structured report");
  hk_poly->add_option("--oracle", oracle_s_max, "cross-check against the oracle up to this s");
  mode_flags.attach(hk_poly);

  auto* verify = app.add_subcommand("verify", "oracle vs closed-form matrix");
  verify->add_option("FILE", file)->required();
  verify->add_option("--s-max", s_max)->check(CLI::PositiveNumber);
  verify->add_option("--n-max", n_max)->check(CLI::NonNegativeNumber);
  mode_flags.attach(verify);

  std::string family;
  std::size_t r = 0, alpha = 0, beta = 0;
  std::string output;
  std::string name;
  auto* gen = app.add_subcommand("gen", "write a generated complex");
  gen->add_option("FAMILY", family, "path|cycle|circle|bipartite|rp2|simplex")
      ->required()
      ->check(CLI::IsMember({"path", "cycle", "circle", "bipartite", "rp2", "simplex"}));
  gen->add_option("--r", r, "number of vertices");
  gen->add_option("--alpha", alpha);
  gen->add_option("--beta", beta);
  gen->add_option("-o,--output", output)->required();
  gen->add_option("--name", name);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int status = app.exit(e);
    return status == 0 ? 0 : kExitUsage;
  }

  try {
    if (*gen) {
      auto need_r = [&] {
        if (r == 0) throw Error(ErrorCode::InvalidArgument, "--r is required for " + family);
        return r;
      };
      SimplicialComplex complex = [&] {
        if (family == "path") return path_complex(need_r());
        if (family == "cycle") return independence_complex(cycle_graph(need_r()));
        if (family == "circle") return cycle_complex(need_r());
        if (family == "simplex") return simplex(need_r());
        if (family == "bipartite") return independence_complex(complete_bipartite(alpha, beta));
        return rp2();
      }();
      std::optional<std::string> doc_name;
      if (!name.empty()) doc_name = name;
      write_complex(to_document(complex, format_for_path(output), doc_name), output);
      return 0;
    }

    const ParsedComplex parsed = load(file);
    const SimplicialComplex& complex = parsed.complex;

    if (*fvector) {
      print_vector(f_vector(complex));
    } else if (*hvector) {
      print_vector(face_data(complex).h);
    } else if (*hseries) {
      const auto series = hilbert_series(complex);
      std::cout << "(" << RationalPolynomial::from_integers(
                              {series.numerator.begin(), series.numerator.end()})
                              .to_string("t")
                << ")/(1-t)^" << series.denominator_exponent << "\n";
    } else if (*cm) {
      const auto report = reisner_test(complex, characteristic);
      std::cout << (report.cohen_macaulay ? "Cohen-Macaulay" : "not Cohen-Macaulay")
                << " in characteristic " << characteristic << "\n";
      if (report.witness_face) {
        std::cout << "witness: link of {";
        const auto labels = complex.labels_of(*report.witness_face);
        for (std::size_t i = 0; i < labels.size(); ++i) std::cout << (i ? "," : "") << labels[i];
        std::cout << "} has reduced homology in degree " << report.witness_degree << "\n";
      }
      std::cout << "torsion primes:";
      if (report.torsion_primes.empty()) std::cout << " none";
      for (auto p : report.torsion_primes) std::cout << " " << p;
      std::cout << "\n";
    } else if (*postulation) {
      std::cout << postulation_number(complex, characteristic) << "\n";
    } else if (*hs) {
      std::cout << hilbert_samuel(complex, n_value).get_str() << "\n";
    } else if (*conca) {
      std::cout << conca_hk(complex, s_value).get_str() << "\n";
    } else if (*colength) {
      std::cout << sr_colength(complex, s_value, n_value).get_str() << "\n";
    } else if (*hk_at) {
      HKOptions options;
      options.experimental = experimental;
      const HKMode mode = mode_flags.resolve(complex);
      HilbertKunzRees hk_rees(complex, mode, options);
      const Integer value = hk_rees.value_at(s_value);
      if (s_value < mode.validity_threshold()) {
        std::cerr << "warning: s below the validity threshold " << mode.validity_threshold()
                  << "; value is experimental\n";
      }
      std::cout << value.get_str() << "\n";
    } else if (*hk_poly) {
      HKOptions options;
      options.oracle_s_max = oracle_s_max;
      const HKMode mode = mode_flags.resolve(complex);
      const HKReport report = hk_rees_polynomial(complex, mode, options);
      std::cout << (as_json ? report_to_json(report, parsed.document.name)
                            : report_to_text(report));
      if (report.oracle.checked && !report.oracle.agree) return kExitOracle;
    } else if (*verify) {
      return run_verify(complex, s_max, n_max, mode_flags);
    }
    return 0;
  } catch (const Error& e) {
    std::cerr << "error [" << to_string(e.code()) << "]: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
