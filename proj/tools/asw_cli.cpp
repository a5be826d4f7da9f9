// asw: command-line front end.
//
//   asw pair      --p P [--e E] --n N "(a0; a1)" "b"  [--coboundary]
//   asw reduce    --p P --n N "(a0; a1)"
//   asw conductor --p P --n N "(a0; a1)"
//   asw unitgroup --p P --n N --m M
//   asw verify {witt,pairing,orthogonality,filagree,orders} --p P --n N
//
// Exit codes: 0 pass, 1 assertion failure, 2 usage or parse error.

#include <CLI11.hpp>
#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "asw/asw_class.hpp"
#include "asw/conductor.hpp"
#include "asw/reports.hpp"
#include "asw/symbol.hpp"
#include "asw/text.hpp"
#include "asw/unit_group.hpp"

namespace {

using asw::Json;

constexpr int kPass = 0;
constexpr int kAssertion = 1;
constexpr int kUsage = 2;

// Desk limits.
constexpr std::size_t kMaxN = 4;
constexpr unsigned kMaxPoles = 8;
constexpr unsigned kMaxWeightedPole = 512;  // single-class commands

struct Common {
  unsigned p = 0;
  unsigned e = 1;
  std::vector<unsigned> modulus;
  std::size_t n = 0;  // 0: take it from the input
  unsigned precision = 0;
  std::string format = "text";
  std::uint64_t seed = 20240917;
  int jobs = 0;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void add_common(CLI::App* cmd, Common& c, bool with_n = true) {
  cmd->add_option("--p", c.p, "characteristic")->required()->check(CLI::IsMember({2u, 3u, 5u}));
  cmd->add_option("--e", c.e, "degree of F_q over F_p")->check(CLI::Range(1u, 3u));
  cmd->add_option("--modulus", c.modulus, "monic modulus coefficients c0,...,ce (default: Conway)")->delimiter(',');
  if (with_n) cmd->add_option("--n", c.n, "Witt length")->check(CLI::Range(std::size_t{1}, kMaxN));
  cmd->add_option("--precision", c.precision, "p-adic lift precision M (default 2n)");
  cmd->add_option("--format", c.format, "output format")->check(CLI::IsMember({"text", "json"}));
  cmd->add_option("--seed", c.seed, "seed for randomized suites");
  cmd->add_option("--jobs", c.jobs, "worker threads (0: OpenMP default)");
}

const asw::FqField& field_of(const Common& c) { return asw::field_from_params(c.p, c.e, c.modulus); }

asw::WittK witt_arg(const std::string& text, const asw::FqField& field, Common& c) {
  asw::WittK a = asw::parse_witt(text, field);
  if (c.n == 0) c.n = a.length();
  if (a.length() != c.n)
    throw UsageError("Witt vector has " + std::to_string(a.length()) + " components but --n is " +
                     std::to_string(c.n));
  if (c.n > kMaxN) throw UsageError("n is limited to " + std::to_string(kMaxN));
  return a;
}

asw::PairingOptions pairing_options(const Common& c) {
  asw::PairingOptions o;
  o.lift_precision = c.precision;
  return o;
}

std::string hex64(std::uint64_t h) {
  std::ostringstream s;
  s << std::hex;
  s.width(16);
  s.fill('0');
  s << h;
  return s.str();
}

// FNV-1a over the printed trail.
std::uint64_t trail_hash(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  return h;
}

void emit(const Common& c, const Json& j, const std::string& text) {
  if (c.format == "json")
    std::cout << j.dump(2) << '\n';
  else
    std::cout << text;
}

// ---------------------------------------------------------------------------

int cmd_pair(Common& c, const std::string& a_text, const std::string& b_text, bool coboundary) {
  const auto& field = field_of(c);
  asw::WittK a = witt_arg(a_text, field, c);
  const asw::LaurentFq b = asw::parse_laurent(b_text, field);
  if (coboundary) a = a - asw::frobenius(a);
  const asw::PairingValue v = asw::sw_pair(a, b, pairing_options(c));
  Json j{{"value", v.value}, {"modulus", v.modulus}};
  std::string text = std::to_string(v.value) + " (mod " + std::to_string(v.modulus) + ")\n";
  if (coboundary) {
    j["coboundary_check"] = v.is_zero();
    text += std::string("coboundary check: ") + (v.is_zero() ? "ok" : "FAILED, (1-F)c pairs nontrivially") + "\n";
  }
  emit(c, j, text);
  return coboundary && !v.is_zero() ? kAssertion : kPass;
}

int cmd_reduce(Common& c, const std::string& a_text, bool with_dual) {
  const auto& field = field_of(c);
  const asw::WittK a = witt_arg(a_text, field, c);
  if (asw::weighted_pole(a) > kMaxWeightedPole)
    throw UsageError("weighted pole order above " + std::to_string(kMaxWeightedPole));
  const asw::ASWClass x = asw::reduce_class(a);
  const std::string rep = asw::to_string(x.representative);
  const std::string trail = asw::to_string(x.trail);
  const std::uint64_t h = trail_hash(trail);
  const unsigned lvl_log = asw::fil_log_level(x);
  const unsigned lvl = asw::fil_level(x);

  Json j{{"reduced", rep}, {"trail", trail}, {"trail_hash", hex64(h)}, {"fil_log", lvl_log}, {"fil", lvl}};
  std::ostringstream t;
  t << "reduced:   " << rep << '\n'
    << "trail:     " << trail << "  [fnv1a " << hex64(h) << "]\n"
    << "fil_log:   " << lvl_log << '\n'
    << "fil:       " << lvl << '\n';
  if (!with_dual) {
    emit(c, j, t.str());
    return kPass;
  }
  const asw::ConductorRow row = asw::conductor_row(x, pairing_options(c));
  std::string status = "agree";
  if (!row.agree())
    status = "MISMATCH";
  else if (row.boundary())
    status = "boundary";
  j["dual"] = row.dual;
  j["status"] = status;
  t << "Fil (dual): " << row.dual << '\n';
  if (status == "agree")
    t << "status:    fil = Fil\n";
  else if (status == "boundary")
    t << "status:    boundary case: nonzero unramified class (fil-side " << row.fil
      << ", Fil 0), outside the comparison's scope\n";
  else
    t << "status:    MISMATCH between fil " << row.fil << " and Fil " << row.dual << '\n';
  emit(c, j, t.str());
  if (!row.agree()) std::cerr << "asw: conductor mismatch for " << rep << '\n';
  return row.agree() ? kPass : kAssertion;
}

int cmd_unitgroup(Common& c, unsigned m) {
  const auto& field = field_of(c);
  if (c.n == 0) c.n = 1;
  if (m >= 1) {
    std::uint64_t size = 1;
    for (unsigned k = 1; k < m; ++k) {
      size *= field.order();
      if (size > asw::UnitQuot::kMaxPrincipalSize) throw UsageError("q^(m-1) exceeds the desk limit 10^5");
    }
  }
  const asw::UnitQuot g(field, c.n, m);
  Json gens = Json::array();
  std::string text = "G_{" + std::to_string(c.n) + "," + std::to_string(m) + "} over F_" +
                     std::to_string(field.order()) + ": order " + std::to_string(g.order()) + "\n";
  for (const auto& label : g.generator_labels()) {
    gens.push_back(label);
    text += "  generator " + label + "\n";
  }
  emit(c, Json{{"q", field.order()}, {"n", c.n}, {"m", m}, {"order", g.order()}, {"generators", gens}}, text);
  return kPass;
}

int cmd_verify(Common& c, const std::string& suite, std::uint64_t cases, unsigned poles, std::optional<unsigned> mmax) {
  const auto& field = field_of(c);
  if (c.n == 0) c.n = 1;
  asw::SuiteOutcome out;
  if (suite == "witt") {
    out = asw::witt_suite(field, c.n, cases ? cases : 500, c.seed);
  } else if (suite == "pairing") {
    out = asw::pairing_suite(field, c.n, cases ? cases : 200, c.seed, c.jobs);
  } else if (suite == "orthogonality") {
    const unsigned mm = mmax.value_or(5);
    std::uint64_t size = 1;
    for (unsigned k = 0; k < mm; ++k) size *= field.order();  // G_{n,mmax+1} is enumerated
    if (size > asw::UnitQuot::kMaxPrincipalSize) throw UsageError("q^mmax exceeds the desk limit 10^5");
    out = asw::orthogonality_suite(field, c.n, mm, c.jobs);
  } else if (suite == "filagree") {
    if (poles > kMaxPoles) throw UsageError("--poles is limited to " + std::to_string(kMaxPoles));
    const asw::FilagreeReport r = asw::filagree_report(field, c.n, poles, c.jobs);
    out.passed = r.passed();
    out.report = Json{{"suite", "filagree"},
                      {"field", {{"p", field.characteristic()}, {"e", field.degree()}, {"q", field.order()}, {"n", c.n}}},
                      {"poles", poles}};
    const Json body = asw::to_json(r);
    for (const auto& [k, v] : body.items()) out.report[k] = v;
  } else {
    const unsigned mm = mmax.value_or(4);
    if (mm > 1) {
      std::uint64_t size = 1;
      for (unsigned k = 1; k < mm; ++k) size *= field.order();
      if (size > asw::UnitQuot::kMaxPrincipalSize) throw UsageError("q^(mmax-1) exceeds the desk limit 10^5");
    }
    out = asw::orders_suite(field, c.n, mm);
  }
  std::string text = "verify " + suite + ": " + (out.passed ? "PASS" : "FAIL") + "\n";
  if (!out.passed && out.report.contains("first_failure"))
    text += "first failure (minimized): " + out.report["first_failure"].dump() + "\n";
  if (!out.passed && suite == "filagree") text += out.report.dump(2) + "\n";
  emit(c, out.report, text);
  return out.passed ? kPass : kAssertion;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Artin-Schreier-Witt symbols and conductors over F_q((t))"};
  app.require_subcommand(1);
  Common c;

  auto* pair = app.add_subcommand("pair", "evaluate the symbol [a, b)");
  std::string a_text, b_text;
  bool coboundary = false;
  add_common(pair, c);
  pair->add_option("a", a_text, "Witt vector, e.g. \"(t^-1; 0)\"")->required();
  pair->add_option("b", b_text, "unit of F_q((t)), e.g. \"1+t\"")->required();
  pair->add_flag("--coboundary", coboundary, "pair (1-F)a instead of a and require 0");

  auto* reduce = app.add_subcommand("reduce", "reduced representative and filtration levels");
  add_common(reduce, c);
  reduce->add_option("a", a_text, "Witt vector")->required();

  auto* conductor = app.add_subcommand("conductor", "both conductors of a class");
  add_common(conductor, c);
  conductor->add_option("a", a_text, "Witt vector")->required();

  auto* unitgroup = app.add_subcommand("unitgroup", "order and generators of K^x/(K^x)^{p^n} U^m");
  unsigned m = 0;
  add_common(unitgroup, c);
  unitgroup->add_option("--m", m, "level m")->required();

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  std::string suite;
  std::uint64_t cases = 0;
  unsigned poles = 4;
  std::optional<unsigned> mmax;
  add_common(verify, c);
  verify->add_option("suite", suite, "suite name")
      ->required()
      ->check(CLI::IsMember({"witt", "pairing", "orthogonality", "filagree", "orders"}));
  verify->add_option("--cases", cases, "randomized cases per law");
  verify->add_option("--poles", poles, "pole bound for filagree");
  verify->add_option("--mmax", mmax, "largest level m");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kPass : kUsage;
  }

  try {
    if (*pair) return cmd_pair(c, a_text, b_text, coboundary);
    if (*reduce) return cmd_reduce(c, a_text, false);
    if (*conductor) return cmd_reduce(c, a_text, true);
    if (*unitgroup) return cmd_unitgroup(c, m);
    return cmd_verify(c, suite, cases, poles, mmax);
  } catch (const asw::ParseError& e) {
    std::cerr << "asw: parse error: " << e.what() << '\n';
  } catch (const UsageError& e) {
    std::cerr << "asw: " << e.what() << '\n';
  } catch (const asw::Error& e) {
    std::cerr << "asw: " << e.what() << '\n';
  }
  return kUsage;
}
