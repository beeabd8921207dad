#include "qneg/cli.hpp"

#include "qneg/apery.hpp"
#include "qneg/congruence.hpp"
#include "qneg/json_io.hpp"
#include "qneg/qbinom.hpp"
#include "qneg/qseries.hpp"
#include "qneg/sweep.hpp"

#include "CLI11.hpp"

#include <optional>
#include <ostream>
#include <sstream>

namespace qneg::cli {

namespace {

using nlohmann::json;

struct Options {
  std::string format = "text";

  std::int64_t n = 0;
  std::int64_t k = 0;
  bool q1 = false;

  std::string n_range;
  std::string k_range;
  std::string m_range;

  std::string mode = "noncommutative-from-zero";
  std::int64_t trunc = 16;
  std::optional<std::int64_t> trunc_opt;
  std::int64_t p = 0;
  std::int64_t m = 0;
  std::optional<std::int64_t> p_opt;

  std::string suite;
  bool serial = false;
};

json document(std::string_view command) {
  return {{"schema", kJsonSchema}, {"command", command}};
}

void emit(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

std::string digits_text(const PadicDigits& d) {
  std::ostringstream s;
  s << "(";
  for (std::int64_t v : d.preperiodic) s << v << ", ";
  s << d.eventual << ", ...)_" << d.base;
  return s.str();
}

json digits_json(const PadicDigits& d) {
  return {{"base", d.base}, {"preperiodic", d.preperiodic}, {"eventual", d.eventual}};
}

// bin as a decimal string, qbinom as a Laurent polynomial
json value_json(std::int64_t n, std::int64_t k, bool q1) {
  if (q1) return bin(n, k).get_str();
  return laurent_to_json(qbinom(n, k));
}

std::string value_text(std::int64_t n, std::int64_t k, bool q1) {
  return q1 ? bin(n, k).get_str() : to_string(qbinom(n, k));
}

int cmd_eval(const Options& o, std::ostream& out) {
  if (o.format == "json") {
    json j = document("eval");
    j["n"] = o.n;
    j["k"] = o.k;
    j["q1"] = o.q1;
    j["value"] = value_json(o.n, o.k, o.q1);
    emit(out, j);
  } else {
    out << value_text(o.n, o.k, o.q1) << '\n';
  }
  return kExitOk;
}

// Text layout: one line per n, tab-separated cells in ascending k.
int cmd_table(const Options& o, std::ostream& out) {
  const SweepRange nr = SweepRange::parse(o.n_range);
  const SweepRange kr = SweepRange::parse(o.k_range);
  if (o.format == "json") {
    json j = document("table");
    j["q1"] = o.q1;
    json entries = json::array();
    for (std::int64_t n = nr.lo; n <= nr.hi; ++n) {
      for (std::int64_t k = kr.lo; k <= kr.hi; ++k) {
        entries.push_back({{"n", n}, {"k", k}, {"value", value_json(n, k, o.q1)}});
      }
    }
    j["entries"] = std::move(entries);
    emit(out, j);
    return kExitOk;
  }
  for (std::int64_t n = nr.lo; n <= nr.hi; ++n) {
    for (std::int64_t k = kr.lo; k <= kr.hi; ++k) {
      if (k != kr.lo) out << '\t';
      out << value_text(n, k, o.q1);
    }
    out << '\n';
  }
  return kExitOk;
}

int cmd_expand(const Options& o, std::ostream& out) {
  std::vector<std::pair<std::int64_t, LaurentPoly>> terms;
  if (o.mode == "pochhammer") {
    const PowerSeriesInX s = pochhammer_expansion(o.n, o.trunc);
    for (std::int64_t k = 0; k < s.truncation(); ++k) terms.emplace_back(k, s.coefficient(k));
  } else {
    const Direction d = o.mode == "noncommutative-from-zero" ? Direction::FromZero
                                                             : Direction::FromInfinity;
    const NormalSeries s = power_xy(o.n, d, o.trunc);
    for (std::int64_t k : s.window()) terms.emplace_back(k, s.coefficient(k));
  }
  if (o.format == "json") {
    json j = document("expand");
    j["n"] = o.n;
    j["mode"] = o.mode;
    j["truncation"] = o.trunc;
    json arr = json::array();
    for (const auto& [k, c] : terms) arr.push_back({{"k", k}, {"coefficient", laurent_to_json(c)}});
    j["terms"] = std::move(arr);
    emit(out, j);
  } else {
    for (const auto& [k, c] : terms) out << "C(" << k << ") = " << c << '\n';
  }
  return kExitOk;
}

int cmd_lucas(const Options& o, std::ostream& out) {
  if (!is_prime(o.p)) throw std::invalid_argument(std::to_string(o.p) + " is not prime");
  const Integer b = bin(o.n, o.k);
  Integer residue;
  mpz_fdiv_r_ui(residue.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(o.p));
  const std::int64_t product = lucas_product(o.n, o.k, o.p);
  const bool one_step = verify_lucas(o.n, o.k, o.p);
  const bool ok = one_step && product == residue.get_si();
  if (o.format == "json") {
    json j = document("lucas");
    j["n"] = o.n;
    j["k"] = o.k;
    j["p"] = o.p;
    j["digits_n"] = digits_json(padic_digits(o.n, o.p));
    j["digits_k"] = digits_json(padic_digits(o.k, o.p));
    j["bin"] = b.get_str();
    j["bin_mod_p"] = residue.get_si();
    j["digit_product"] = product;
    j["one_step"] = one_step;
    j["verified"] = ok;
    emit(out, j);
  } else {
    out << "n = " << o.n << " = " << digits_text(padic_digits(o.n, o.p)) << '\n'
        << "k = " << o.k << " = " << digits_text(padic_digits(o.k, o.p)) << '\n'
        << "bin(n,k) = " << b << '\n'
        << "bin(n,k) mod " << o.p << " = " << residue << '\n'
        << "digit product mod " << o.p << " = " << product << '\n'
        << "one-step congruence: " << (one_step ? "holds" : "fails") << '\n'
        << (ok ? "verified" : "FAILED") << '\n';
  }
  return ok ? kExitOk : kExitFailed;
}

int cmd_qlucas(const Options& o, std::ostream& out) {
  const CyclotomicModulus mod = cyclotomic(o.m);
  const LaurentPoly lhs = qbinom(o.n, o.k);
  const LaurentPoly rhs = q_lucas_rhs(o.n, o.k, o.m);
  const bool ok = congruent_mod(lhs, rhs, mod);
  if (o.format == "json") {
    json j = document("qlucas");
    j["n"] = o.n;
    j["k"] = o.k;
    j["m"] = o.m;
    j["lhs"] = laurent_to_json(lhs);
    j["rhs"] = laurent_to_json(rhs);
    j["modulus"] = laurent_to_json(mod.phi);
    j["congruent"] = ok;
    emit(out, j);
  } else {
    out << "lhs = " << lhs << '\n'
        << "rhs = " << rhs << '\n'
        << "phi_" << o.m << " = " << mod.phi << '\n'
        << "lhs - rhs mod phi_" << o.m << " = " << divide(lhs - rhs, mod.phi).remainder << '\n'
        << (ok ? "congruent" : "NOT congruent") << '\n';
  }
  return ok ? kExitOk : kExitFailed;
}

int cmd_apery(const Options& o, std::ostream& out) {
  const SweepRange nr = SweepRange::parse(o.n_range);
  if (o.format == "json") {
    json j = document("apery");
    json values = json::array();
    for (std::int64_t n = nr.lo; n <= nr.hi; ++n) {
      values.push_back({{"n", n}, {"value", apery(n).get_str()}});
    }
    j["values"] = std::move(values);
    emit(out, j);
  } else {
    for (std::int64_t n = nr.lo; n <= nr.hi; ++n) out << "A(" << n << ") = " << apery(n) << '\n';
  }
  return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  SweepParams params;
  if (o.suite == "chu") params.m = {-5, 5};
  if (o.suite == "freshman") params.m = {2, 12};
  if (o.suite == "qlucas") params.m = {3, 3};
  if (!o.n_range.empty()) params.n = SweepRange::parse(o.n_range);
  if (!o.k_range.empty()) params.k = SweepRange::parse(o.k_range);
  if (!o.m_range.empty()) params.m = SweepRange::parse(o.m_range);
  params.p = o.p_opt;
  if (o.trunc_opt) params.truncation = *o.trunc_opt;

  const SweepReport r =
      run_suite(o.suite, params, o.serial ? Execution::Serial : Execution::Parallel);
  if (o.format == "json") {
    json j = document("verify");
    j["suite"] = r.suite;
    j["checked"] = r.checked;
    j["passed"] = r.passed;
    j["skipped"] = r.skipped;
    json failures = json::array();
    for (const CaseOutcome& f : r.failures) {
      failures.push_back({{"case", f.label}, {"detail", f.detail}});
    }
    j["failures"] = std::move(failures);
    emit(out, j);
  } else {
    out << r.suite << ": checked " << r.checked << ", passed " << r.passed << ", skipped "
        << r.skipped.size() << '\n';
    constexpr std::size_t kListedSkips = 20;
    for (std::size_t i = 0; i < r.skipped.size() && i < kListedSkips; ++i) {
      out << "  skipped " << r.skipped[i] << '\n';
    }
    if (r.skipped.size() > kListedSkips) {
      out << "  ... " << r.skipped.size() - kListedSkips << " more skipped\n";
    }
    for (const CaseOutcome& f : r.failures) out << "  FAIL " << f.label << ": " << f.detail << '\n';
  }
  return verify_exit_code(r);
}

std::string suite_list() {
  std::string s;
  for (std::string_view name : suite_names()) {
    if (!s.empty()) s += ", ";
    s += name;
  }
  return s;
}

}  // namespace

int verify_exit_code(const SweepReport& report) {
  return report.all_passed() ? kExitOk : kExitFailed;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Gaussian binomial coefficients for all integer arguments"};
  app.name("qneg");
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  auto* eval = app.add_subcommand("eval", "Print qbinom(n,k), or bin(n,k) with --q1");
  eval->add_option("--n", o.n)->required();
  eval->add_option("--k", o.k)->required();
  eval->add_flag("--q1", o.q1, "Evaluate at q = 1");

  auto* table = app.add_subcommand("table", "Grid of values over n and k ranges (lo..hi)");
  table->add_option("--n", o.n_range)->required();
  table->add_option("--k", o.k_range)->required();
  table->add_flag("--q1", o.q1, "Evaluate at q = 1");

  auto* expand = app.add_subcommand("expand", "Truncated binomial expansion of (x + y)^n");
  expand->add_option("--n", o.n)->required();
  expand->add_option("--mode", o.mode)
      ->check(CLI::IsMember(
          {"noncommutative-from-zero", "noncommutative-from-infinity", "pochhammer"}))
      ->capture_default_str();
  expand->add_option("--trunc", o.trunc)->check(CLI::PositiveNumber)->capture_default_str();

  auto* lucas = app.add_subcommand("lucas", "Lucas congruence for bin(n,k) mod p");
  lucas->add_option("--n", o.n)->required();
  lucas->add_option("--k", o.k)->required();
  lucas->add_option("--p", o.p)->required();

  auto* qlucas = app.add_subcommand("qlucas", "q-Lucas congruence modulo phi_m");
  qlucas->add_option("--n", o.n)->required();
  qlucas->add_option("--k", o.k)->required();
  qlucas->add_option("--m", o.m)->required()->check(CLI::Range(std::int64_t{2}, INT64_MAX));

  auto* aperycmd = app.add_subcommand("apery", "Apery numbers A(n) for an n or a range lo..hi");
  aperycmd->add_option("--n", o.n_range)->required();

  auto* verify = app.add_subcommand("verify", "Run an identity sweep");
  verify->add_option("suite", o.suite, "One of: " + suite_list())->required();
  verify->add_option("--n", o.n_range, "n range lo..hi");
  verify->add_option("--k", o.k_range, "k range lo..hi");
  verify->add_option("--m", o.m_range, "m range lo..hi");
  verify->add_option("--p", o.p_opt, "prime");
  verify->add_option("--trunc", o.trunc_opt, "truncation order");
  verify->add_flag("--serial", o.serial, "Use the single-threaded reference loop");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (*eval) return cmd_eval(o, out);
    if (*table) return cmd_table(o, out);
    if (*expand) return cmd_expand(o, out);
    if (*lucas) return cmd_lucas(o, out);
    if (*qlucas) return cmd_qlucas(o, out);
    if (*aperycmd) return cmd_apery(o, out);
    if (*verify) {
      if (!is_suite(o.suite)) {
        err << "unknown suite '" << o.suite << "'; expected one of: " << suite_list() << '\n';
        return kExitUsage;
      }
      return cmd_verify(o, out);
    }
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailed;
  }
  return kExitUsage;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"qneg"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace qneg::cli
