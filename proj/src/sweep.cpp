#include "qneg/sweep.hpp"

#include "qneg/apery.hpp"
#include "qneg/congruence.hpp"
#include "qneg/hybridset.hpp"
#include "qneg/qbinom.hpp"
#include "qneg/qseries.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <stdexcept>

namespace qneg {

namespace {

std::int64_t parse_int(std::string_view text) {
  std::int64_t v = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (first != last && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc{} || ptr != last || first == last) {
    throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
  }
  return v;
}

std::string pair_label(std::int64_t n, std::int64_t k) {
  return "(" + std::to_string(n) + "," + std::to_string(k) + ")";
}

CaseOutcome pass(std::string label) { return {CaseStatus::Passed, std::move(label), {}}; }
CaseOutcome skip(std::string label) { return {CaseStatus::Skipped, std::move(label), {}}; }
CaseOutcome fail(std::string label, std::string detail) {
  return {CaseStatus::Failed, std::move(label), std::move(detail)};
}

CaseOutcome expect_equal(std::string label, const LaurentPoly& lhs, const LaurentPoly& rhs) {
  if (lhs == rhs) return pass(std::move(label));
  return fail(std::move(label), "lhs " + to_string(lhs) + " != rhs " + to_string(rhs));
}

CaseOutcome expect(std::string label, bool ok, std::string detail) {
  return ok ? pass(std::move(label)) : fail(std::move(label), std::move(detail));
}

std::vector<SweepCase> nk_box(const SweepParams& p) {
  std::vector<SweepCase> cases;
  for (std::int64_t n = p.n.lo; n <= p.n.hi; ++n) {
    for (std::int64_t k = p.k.lo; k <= p.k.hi; ++k) cases.push_back({n, k, 0, 0});
  }
  return cases;
}

std::vector<SweepCase> nkm_box(const SweepParams& p) {
  std::vector<SweepCase> cases;
  for (std::int64_t n = p.n.lo; n <= p.n.hi; ++n) {
    for (std::int64_t k = p.k.lo; k <= p.k.hi; ++k) {
      for (std::int64_t m = p.m.lo; m <= p.m.hi; ++m) cases.push_back({n, k, m, 0});
    }
  }
  return cases;
}

struct Suite {
  std::vector<SweepCase> (*cases)(const SweepParams&);
  CaseCheck (*check)(const SweepParams&);
};

// Both Pascal recurrences on the whole plane; (0,0) is their only exception.
CaseCheck pascal_check(const SweepParams&) {
  return [](const SweepCase& c) {
    const auto [n, k, unused, variant] = c;
    std::string label = pair_label(n, k);
    if (n == 0 && k == 0) return skip(std::move(label));
    const LaurentPoly lhs = qbinom(n, k);
    const LaurentPoly rule1 = qbinom(n - 1, k - 1) + shift(qbinom(n - 1, k), k);
    const LaurentPoly rule2 = shift(qbinom(n - 1, k - 1), n - k) + qbinom(n - 1, k);
    if (lhs != rule1) return fail(std::move(label), "first recurrence: " + to_string(rule1));
    if (lhs != rule2) return fail(std::move(label), "second recurrence: " + to_string(rule2));
    return pass(std::move(label));
  };
}

CaseCheck symmetry_check(const SweepParams&) {
  return [](const SweepCase& c) {
    return expect_equal(pair_label(c.a, c.b), qbinom(c.a, c.b), qbinom(c.a, c.a - c.b));
  };
}

CaseCheck reflection_check(const SweepParams&) {
  return [](const SweepCase& c) {
    const auto [n, k, unused, variant] = c;
    const int sign = (k % 2 == 0 ? 1 : -1) * sgn(k);
    const Exponent e = k * (2 * n - k + 1) / 2;
    return expect_equal(pair_label(n, k), qbinom(n, k),
                        signed_qpow(sign, e) * qbinom(k - n - 1, k));
  };
}

CaseCheck qinv_check(const SweepParams&) {
  return [](const SweepCase& c) {
    const auto [n, k, unused, variant] = c;
    const LaurentPoly v = qbinom(n, k);
    return expect_equal(pair_label(n, k), v, shift(substitute_qinv(v), k * (n - k)));
  };
}

// (1 - q^k) C(n,k) = (1 - q^n) C(n-1,k-1); k = 0 makes the left side 0 by
// fiat while the right side need not vanish.
CaseCheck absorption_check(const SweepParams&) {
  return [](const SweepCase& c) {
    const auto [n, k, unused, variant] = c;
    std::string label = pair_label(n, k);
    if (k == 0) return skip(std::move(label));
    return expect_equal(std::move(label), one_minus_qpow(k) * qbinom(n, k),
                        one_minus_qpow(n) * qbinom(n - 1, k - 1));
  };
}

CaseCheck forms_check(const SweepParams&) {
  return [](const SweepCase& c) {
    const IndexPair p{c.a, c.b};
    const LaurentPoly v = qbinom(p);
    const auto forms = six_forms(p);
    for (std::size_t i = 0; i < forms.size(); ++i) {
      const LaurentPoly rhs = forms[i].prefactor * qbinom(forms[i].index);
      if (rhs != v) {
        return fail(pair_label(p.n, p.k), "form " + std::to_string(i) + " gives " + to_string(rhs));
      }
    }
    return pass(pair_label(p.n, p.k));
  };
}

CaseCheck degrees_check(const SweepParams&) {
  return [](const SweepCase& c) {
    const IndexPair p{c.a, c.b};
    std::string label = pair_label(p.n, p.k);
    const LaurentPoly v = qbinom(p);
    const auto profile = degree_profile(p);
    if (!profile) return expect(std::move(label), v.is_zero(), "expected zero");
    if (v.is_zero()) return fail(std::move(label), "unexpected zero");
    if (v.valuation() != profile->valuation || v.degree() != profile->degree) {
      return fail(std::move(label), "support [" + std::to_string(v.valuation()) + ", " +
                                        std::to_string(v.degree()) + "]");
    }
    return expect(std::move(label), is_self_reciprocal(v), "not self-reciprocal");
  };
}

CaseCheck strategies_check(const SweepParams&) {
  return [](const SweepCase& c) {
    const IndexPair p{c.a, c.b};
    std::string label = pair_label(p.n, p.k);
    const LaurentPoly closed = qbinom(p);
    const LaurentPoly pascal = qbinom_pascal(p);
    if (closed != pascal) return fail(std::move(label), "pascal gives " + to_string(pascal));
    const Integer b = bin(p);
    return expect(std::move(label), b == eval_at_one(closed), "bin = " + b.get_str());
  };
}

CaseCheck subsets_check(const SweepParams&) {
  return [](const SweepCase& c) {
    const auto [n, k, unused, variant] = c;
    std::string label = pair_label(n, k);
    const LaurentPoly v = qbinom_via_subsets(n, k);
    if (v != qbinom(n, k)) return fail(std::move(label), "subset sum " + to_string(v));
    const Integer count(std::to_string(subset_count(n, k)));
    return expect(std::move(label), count == abs(bin(n, k)), "count " + count.get_str());
  };
}

// cases (n, m, k) over n-range x m-range x k-range
std::vector<SweepCase> chu_cases(const SweepParams& p) {
  std::vector<SweepCase> cases;
  for (std::int64_t n = p.n.lo; n <= p.n.hi; ++n) {
    for (std::int64_t m = p.m.lo; m <= p.m.hi; ++m) {
      for (std::int64_t k = p.k.lo; k <= p.k.hi; ++k) cases.push_back({n, m, k, 0});
    }
  }
  return cases;
}

CaseCheck chu_check(const SweepParams&) {
  return [](const SweepCase& c) {
    const auto [n, m, k, variant] = c;
    std::string label =
        "(" + std::to_string(n) + "," + std::to_string(m) + "," + std::to_string(k) + ")";
    if (!(k >= 0 || (n < 0 && m < 0))) return skip(std::move(label));
    return expect(std::move(label), verify_chu_vandermonde(n, m, k), "sum differs");
  };
}

// cases (n, k) with k in [0, truncation)
std::vector<SweepCase> qbt_cases(const SweepParams& p) {
  std::vector<SweepCase> cases;
  for (std::int64_t n = p.n.lo; n <= p.n.hi; ++n) {
    for (std::int64_t k = 0; k < p.truncation; ++k) cases.push_back({n, k, 0, 0});
  }
  return cases;
}

CaseCheck qbt_check(const SweepParams& params) {
  return [t = params.truncation](const SweepCase& c) {
    const auto [n, k, unused, variant] = c;
    const LaurentPoly coeff = pochhammer_expansion(n, t).coefficient(k);
    return expect_equal(pair_label(n, k), coeff, shift(qbinom(n, k), k * (k - 1) / 2));
  };
}

// cases (n, k, direction) over the retained window of each direction
std::vector<SweepCase> ncqbt_cases(const SweepParams& p) {
  std::vector<SweepCase> cases;
  for (std::int64_t n = p.n.lo; n <= p.n.hi; ++n) {
    for (std::int64_t i = 0; i < p.truncation; ++i) cases.push_back({n, i, 0, 0});
    for (std::int64_t i = 0; i < p.truncation; ++i) cases.push_back({n, n - i, 0, 1});
  }
  return cases;
}

CaseCheck ncqbt_check(const SweepParams& params) {
  return [t = params.truncation](const SweepCase& c) {
    const auto [n, k, unused, variant] = c;
    const Direction d = variant == 0 ? Direction::FromZero : Direction::FromInfinity;
    std::string label = pair_label(n, k) + " " + std::string(to_string(d));
    return expect_equal(std::move(label), extract_coeff(power_xy(n, d, t), k), qbinom(n, k));
  };
}

CaseCheck lucas_check(const SweepParams& params) {
  const std::int64_t p = params.p.value_or(7);
  if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
  return [p](const SweepCase& c) {
    const auto [n, k, unused, variant] = c;
    std::string label = pair_label(n, k);
    if (!verify_lucas(n, k, p)) return fail(std::move(label), "one-step congruence fails");
    Integer r;
    mpz_fdiv_r_ui(r.get_mpz_t(), bin(n, k).get_mpz_t(), static_cast<unsigned long>(p));
    const std::int64_t product = lucas_product(n, k, p);
    return expect(std::move(label), r.get_si() == product,
                  "digit product " + std::to_string(product) + " vs " + r.get_str());
  };
}

CaseCheck qlucas_check(const SweepParams& params) {
  if (params.m.lo < 2) throw std::invalid_argument("qlucas needs m >= 2");
  return [](const SweepCase& c) {
    const auto [n, k, m, variant] = c;
    return expect(pair_label(n, k) + " m=" + std::to_string(m), verify_q_lucas(n, k, m),
                  "not congruent mod phi_" + std::to_string(m));
  };
}

// variant 0: plain congruence for m; variants 1..5: lifted with n = -2..2
std::vector<SweepCase> freshman_cases(const SweepParams& p) {
  std::vector<SweepCase> cases;
  for (std::int64_t m = p.m.lo; m <= p.m.hi; ++m) {
    cases.push_back({m, 0, 0, 0});
    for (std::int64_t n = -2; n <= 2; ++n) {
      cases.push_back({m, n, 0, 1});
      cases.push_back({m, n, 0, 2});
    }
  }
  return cases;
}

CaseCheck freshman_check(const SweepParams& params) {
  if (params.m.lo < 2) throw std::invalid_argument("freshman needs m >= 2");
  return [t = params.truncation](const SweepCase& c) {
    const auto [m, n, unused, variant] = c;
    if (variant == 0) return expect("m=" + std::to_string(m), freshman_congruence(m), "fails");
    const Direction d = variant == 1 ? Direction::FromZero : Direction::FromInfinity;
    std::string label =
        "m=" + std::to_string(m) + " n=" + std::to_string(n) + " " + std::string(to_string(d));
    return expect(std::move(label), lifted_freshman_congruence(m, n, d, t), "fails");
  };
}

// variant 0: symmetry at n; variants 1..8: (r, m, flavour) congruences once
std::vector<SweepCase> apery_cases(const SweepParams& p) {
  std::vector<SweepCase> cases;
  for (std::int64_t n = p.n.lo; n <= p.n.hi; ++n) cases.push_back({n, 0, 0, 0});
  for (std::int64_t r = 1; r <= 2; ++r) {
    for (std::int64_t m = 1; m <= 2; ++m) {
      cases.push_back({r, m, 0, 1});
      cases.push_back({r, m, 0, 2});
    }
  }
  return cases;
}

CaseCheck apery_check(const SweepParams& params) {
  const std::int64_t p = params.p.value_or(5);
  if (p < 5 || !is_prime(p)) throw std::invalid_argument("apery needs a prime p >= 5");
  return [p](const SweepCase& c) {
    if (c.variant == 0) {
      return expect("n=" + std::to_string(c.a), verify_apery_symmetry(c.a), "A(-n) != A(n-1)");
    }
    const AperyVariant v = c.variant == 1 ? AperyVariant::Beukers : AperyVariant::Coster;
    std::string label = std::string(to_string(v)) + " p=" + std::to_string(p) +
                        " r=" + std::to_string(c.a) + " m=" + std::to_string(c.b);
    return expect(std::move(label), verify_apery_congruence(p, c.a, c.b, v), "fails");
  };
}

const std::map<std::string_view, Suite>& suites() {
  static const std::map<std::string_view, Suite> table{
      {"pascal", {nk_box, pascal_check}},
      {"symmetry", {nk_box, symmetry_check}},
      {"reflection", {nk_box, reflection_check}},
      {"qinv", {nk_box, qinv_check}},
      {"absorption", {nk_box, absorption_check}},
      {"forms", {nk_box, forms_check}},
      {"degrees", {nk_box, degrees_check}},
      {"strategies", {nk_box, strategies_check}},
      {"subsets", {nk_box, subsets_check}},
      {"chu", {chu_cases, chu_check}},
      {"qbt", {qbt_cases, qbt_check}},
      {"ncqbt", {ncqbt_cases, ncqbt_check}},
      {"lucas", {nk_box, lucas_check}},
      {"qlucas", {nkm_box, qlucas_check}},
      {"freshman", {freshman_cases, freshman_check}},
      {"apery", {apery_cases, apery_check}},
  };
  return table;
}

CaseOutcome guarded(const CaseCheck& check, const SweepCase& c) {
  try {
    return check(c);
  } catch (const std::exception& e) {
    return fail("case (" + std::to_string(c.a) + "," + std::to_string(c.b) + "," +
                    std::to_string(c.c) + "," + std::to_string(c.variant) + ")",
                std::string("exception: ") + e.what());
  }
}

}  // namespace

SweepRange SweepRange::parse(std::string_view text) {
  const auto dots = text.find("..");
  SweepRange r;
  if (dots == std::string_view::npos) {
    r.lo = r.hi = parse_int(text);
  } else {
    r.lo = parse_int(text.substr(0, dots));
    r.hi = parse_int(text.substr(dots + 2));
  }
  if (r.lo > r.hi) throw std::invalid_argument("empty range '" + std::string(text) + "'");
  return r;
}

std::vector<CaseOutcome> evaluate_cases(const std::vector<SweepCase>& cases,
                                        const CaseCheck& check, Execution execution) {
  std::vector<CaseOutcome> out(cases.size());
  const auto count = static_cast<std::ptrdiff_t>(cases.size());
  if (execution == Execution::Serial) {
    for (std::ptrdiff_t i = 0; i < count; ++i) out[i] = guarded(check, cases[i]);
  } else {
#pragma omp parallel for schedule(dynamic, 4)
    for (std::ptrdiff_t i = 0; i < count; ++i) out[i] = guarded(check, cases[i]);
  }
  return out;
}

const std::vector<std::string_view>& suite_names() {
  static const std::vector<std::string_view> names{
      "pascal", "symmetry", "reflection", "qinv",   "absorption", "forms",
      "degrees", "strategies", "subsets", "chu",    "qbt",        "ncqbt",
      "lucas",  "qlucas",   "freshman",   "apery"};
  return names;
}

bool is_suite(std::string_view name) { return suites().count(name) != 0; }

SweepReport run_suite(std::string_view suite, const SweepParams& params, Execution execution) {
  const auto it = suites().find(suite);
  if (it == suites().end()) {
    throw std::invalid_argument("unknown suite '" + std::string(suite) + "'");
  }
  if (params.truncation < 1) throw std::invalid_argument("truncation must be at least 1");
  const CaseCheck check = it->second.check(params);
  const std::vector<CaseOutcome> outcomes =
      evaluate_cases(it->second.cases(params), check, execution);

  SweepReport report;
  report.suite = std::string(suite);
  for (const CaseOutcome& o : outcomes) {
    switch (o.status) {
      case CaseStatus::Skipped:
        report.skipped.push_back(o.label);
        break;
      case CaseStatus::Passed:
        ++report.checked;
        ++report.passed;
        break;
      case CaseStatus::Failed:
        ++report.checked;
        report.failures.push_back(o);
        break;
    }
  }
  return report;
}

}  // namespace qneg
