// thetaq: exact q-expansions of half-integral-weight modular forms, Hecke
// operators, and the cusp geometry of Sigma_{4N,k}.
//
// Series I/O uses one canonical JSON schema (see serialize.hpp); the
// human-readable rendering is display-only.  Exit codes: 0 on success and
// all checks passing, 1 on a computation or check failure, 2 on usage errors.
#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "thetaq/cusps.hpp"
#include "thetaq/hecke.hpp"
#include "thetaq/intmath.hpp"
#include "thetaq/serialize.hpp"
#include "thetaq/suites.hpp"
#include "thetaq/theta.hpp"

namespace {

using namespace thetaq;
using nlohmann::json;

QSeries read_series(const std::string& path) {
  json j;
  if (path == "-") {
    std::cin >> j;
  } else {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open input file: " + path);
    in >> j;
  }
  return series_from_json(j);
}

void print_series(const QSeries& f, bool as_json) {
  if (as_json)
    std::cout << series_to_json(f).dump() << "\n";
  else
    std::cout << f.to_string() << "\n";
}

FourTorsionClass parse_cusp_name(const std::string& name) {
  if (name == "inf") return FourTorsionClass::inf();
  if (name == "half") return FourTorsionClass::half();
  if (name.rfind("zero-", 0) == 0)
    return FourTorsionClass::zero(std::stoll(name.substr(5)));
  throw CLI::ValidationError("--cusp", "expected inf, half, or zero-<k>");
}

int print_report(const Report& report, bool as_json) {
  if (as_json) {
    json cases = json::array();
    for (const auto& c : report.cases)
      cases.push_back(json{{"description", c.description},
                           {"pass", c.pass},
                           {"expected", c.expected},
                           {"actual", c.actual}});
    json out{{"suite", report.name},
             {"cases", cases},
             {"passed", report.passed()},
             {"failed", report.failed()}};
    std::cout << out.dump(2) << "\n";
  } else {
    for (const auto& c : report.cases)
      std::cout << (c.pass ? "[PASS] " : "[FAIL] ") << c.description
                << "  (expected " << c.expected << ", got " << c.actual
                << ")\n";
    std::cout << report.passed() << " passed, " << report.failed()
              << " failed\n";
  }
  return report.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact q-expansions of half-integral-weight modular forms"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "machine-readable JSON output");

  int64_t prec = 100;
  int64_t level = 4;
  int64_t k = 1;
  int64_t ell = 3;
  int64_t p = 5;
  int64_t max_level = 400;
  std::string input = "-";

  // theta
  auto* cmd_theta = app.add_subcommand("theta", "q-expansion of theta");
  cmd_theta->add_option("--prec", prec, "integer q-power precision");

  // unit
  auto* cmd_unit = app.add_subcommand("unit", "Theta_m unit expansions");
  std::string variant = "subgroup-zeta";
  int64_t m_param = 9;
  int64_t t_param = 0;
  int64_t j_param = 1;
  cmd_unit->add_option("--variant", variant,
                       "generic | subgroup-zeta | subgroup-zeta-q | prime-level");
  cmd_unit->add_option("--prec", prec, "integer q-power precision");
  cmd_unit->add_option("--l", ell, "odd prime l");
  cmd_unit->add_option("--m", m_param, "odd modulus m (generic variant)");
  cmd_unit->add_option("--t", t_param, "root-of-unity exponent t");
  cmd_unit->add_option("--j", j_param, "subgroup twist j");

  // adjust
  auto* cmd_adjust = app.add_subcommand("adjust", "multiply by theta_P^k");
  std::string cusp_name = "inf";
  cmd_adjust->add_option("--cusp", cusp_name, "inf | half | zero-<k>");
  cmd_adjust->add_option("--k", k, "odd weight numerator");
  cmd_adjust->add_option("--input", input, "series JSON file or - for stdin");

  // hecke
  auto* cmd_hecke = app.add_subcommand("hecke", "Hecke operators");
  cmd_hecke->require_subcommand(1);
  auto* cmd_t2 = cmd_hecke->add_subcommand("t2", "T_{l^2} closed formula");
  cmd_t2->add_option("--level", level, "level 4N");
  cmd_t2->add_option("--k", k, "odd weight numerator");
  cmd_t2->add_option("--l", ell, "odd prime away from the level");
  cmd_t2->add_option("--input", input, "series JSON file or - for stdin");
  auto* cmd_u = cmd_hecke->add_subcommand("u", "U_l for l dividing the level");
  cmd_u->add_option("--level", level, "level 4N");
  cmd_u->add_option("--k", k, "odd weight numerator");
  cmd_u->add_option("--l", ell, "odd prime dividing N");
  cmd_u->add_option("--input", input, "series JSON file or - for stdin");
  auto* cmd_up2 = cmd_hecke->add_subcommand("up2", "U_{p^2} coefficient map");
  cmd_up2->add_option("--p", p, "prime p");
  cmd_up2->add_option("--input", input, "series JSON file or - for stdin");
  auto* cmd_vo = cmd_hecke->add_subcommand("verify-oracle",
                                           "closed vs geometric operators");
  auto* cmd_integ = cmd_hecke->add_subcommand("integrality",
                                              "p-integrality of p/Theta_{p^2}");
  cmd_integ->add_option("--p", p, "odd prime p");
  cmd_integ->add_option("--prec", prec, "coefficients per series");

  // cusps / sigma / scan / degrees
  auto* cmd_cusps = app.add_subcommand("cusps", "cusps of Gamma_1(M)");
  int64_t level_arg = 4;
  cmd_cusps->add_option("level", level_arg, "level M >= 4")->required();
  auto* cmd_sigma = app.add_subcommand("sigma", "the divisor Sigma_{4N,k}");
  int64_t sigma_level = 4;
  int64_t sigma_k = 1;
  cmd_sigma->add_option("level", sigma_level, "level 4N")->required();
  cmd_sigma->add_option("k", sigma_k, "weight numerator")->required();
  auto* cmd_scan = app.add_subcommand("scan", "base-change counterexample scan");
  cmd_scan->add_option("--k", k, "odd weight numerator");
  cmd_scan->add_option("--max", max_level, "largest level scanned");
  auto* cmd_degrees = app.add_subcommand("degrees", "degree identities");
  cmd_degrees->add_option("level", level_arg, "level 4N")->required();

  // verify
  auto* cmd_verify = app.add_subcommand("verify", "run a named check suite");
  std::string suite = "all";
  cmd_verify->add_option("suite", suite,
                         "gauss | oracle | eigen | degrees | integrality | "
                         "transform | all");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*cmd_theta) {
      print_series(theta_series(prec), as_json);
    } else if (*cmd_unit) {
      ThetaUnitVariant v = SubgroupZeta{ell};
      if (variant == "generic")
        v = GenericM{m_param, t_param};
      else if (variant == "subgroup-zeta")
        v = SubgroupZeta{ell};
      else if (variant == "subgroup-zeta-q")
        v = SubgroupZetaQ{ell, j_param};
      else if (variant == "prime-level")
        v = PrimeLevel{ell, t_param == 0 ? 1 : t_param};
      else
        throw CLI::ValidationError("--variant", "unknown variant " + variant);
      print_series(theta_unit(v, prec), as_json);
    } else if (*cmd_adjust) {
      QSeries raw = read_series(input);
      AdjustedExpansion adj = adjust_expansion(raw, parse_cusp_name(cusp_name), k);
      print_series(adj.series, as_json);
    } else if (*cmd_t2) {
      QSeries f = read_series(input);
      HeckeContext ctx(level, k, Character::trivial(level));
      AdjustedExpansion out = t_l2_closed(
          AdjustedExpansion{f, k, FourTorsionClass::inf()}, ctx, ell);
      print_series(out.series, as_json);
    } else if (*cmd_u) {
      QSeries f = read_series(input);
      HeckeContext ctx(level, k, Character::trivial(level));
      AdjustedExpansion out =
          u_l_closed(AdjustedExpansion{f, k, FourTorsionClass::inf()}, ctx,
                     ell, CycNumber::zeta(level));
      print_series(out.series, as_json);
    } else if (*cmd_up2) {
      QSeries f = read_series(input);
      AdjustedExpansion out =
          u_p2(AdjustedExpansion{f, 1, FourTorsionClass::inf()}, p);
      print_series(out.series, as_json);
    } else if (*cmd_vo) {
      return print_report(run_suite("oracle"), as_json);
    } else if (*cmd_integ) {
      UnitIntegralityReport report = check_unit_integrality(p, prec);
      Report r{"integrality", {}};
      for (const auto& e : report.entries)
        r.add("min valuation at " + e.cusp, e.min_valuation >= 0, ">= 0",
              std::to_string(e.min_valuation));
      r.add("un-multiplied inverse at <zeta_p2>", report.unmultiplied_min == -1,
            "-1", std::to_string(report.unmultiplied_min));
      return print_report(r, as_json);
    } else if (*cmd_cusps) {
      auto cusps = enumerate_cusps(level_arg);
      if (as_json) {
        json rows = json::array();
        for (const Cusp& c : cusps)
          rows.push_back(json{{"a", c.a},
                              {"c", c.c},
                              {"width", c.width},
                              {"dgcd", c.dgcd},
                              {"over_half", level_arg % 4 == 0 && maps_to_half(c)}});
        std::cout << json{{"level", level_arg}, {"cusps", rows}}.dump(2) << "\n";
      } else {
        std::cout << "cusps of Gamma_1(" << level_arg << "): " << cusps.size()
                  << "\n";
        for (const Cusp& c : cusps) {
          std::cout << "  (" << c.a << " : " << c.c << ")  width " << c.width;
          if (level_arg % 4 == 0 && maps_to_half(c)) std::cout << "  over 1/2";
          std::cout << "\n";
        }
      }
    } else if (*cmd_sigma) {
      QDivisor d = sigma_divisor(sigma_level, sigma_k);
      if (as_json) {
        json rows = json::array();
        for (const auto& [c, coeff] : d.coefficients)
          rows.push_back(json{{"a", c.a},
                              {"c", c.c},
                              {"width", c.width},
                              {"coefficient", coeff.get_str()}});
        std::cout << json{{"level", sigma_level},
                          {"k", sigma_k},
                          {"coefficients", rows},
                          {"floor_degree", floor_degree(d)}}
                         .dump(2)
                  << "\n";
      } else {
        std::cout << "Sigma_{" << sigma_level << "," << sigma_k << "}:\n";
        for (const auto& [c, coeff] : d.coefficients)
          std::cout << "  " << coeff.get_str() << " * [" << c.label() << "]\n";
        std::cout << "floor degree: " << floor_degree(d) << "\n";
      }
    } else if (*cmd_scan) {
      auto first = counterexample_scan(k, max_level);
      if (as_json)
        std::cout << json{{"k", k},
                          {"max", max_level},
                          {"first_failure",
                           first ? json(*first) : json(nullptr)}}
                         .dump()
                  << "\n";
      else if (first)
        std::cout << "first failure: " << *first << "\n";
      else
        std::cout << "first failure: none\n";
    } else if (*cmd_degrees) {
      DegreeIdentityReport report = degree_identities(level_arg);
      Report r{"degrees", {}};
      r.add("deg Sigma_{4N,4} = deg omega^2",
            report.deg_sigma4 == report.omega2_degree,
            std::to_string(report.omega2_degree),
            std::to_string(report.deg_sigma4));
      r.add("fiber sums equal the degeneracy degree",
            report.fiber_sum_infinity == report.degeneracy_degree &&
                report.fiber_sum_zero == report.degeneracy_degree &&
                report.fiber_sum_half == report.degeneracy_degree,
            std::to_string(report.degeneracy_degree),
            std::to_string(report.fiber_sum_infinity) + "," +
                std::to_string(report.fiber_sum_zero) + "," +
                std::to_string(report.fiber_sum_half));
      return print_report(r, as_json);
    } else if (*cmd_verify) {
      return print_report(run_suite(suite), as_json);
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
