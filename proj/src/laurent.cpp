#include "qneg/laurent.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace qneg {

namespace {

// Positions of the nonzero entries; used to skip zeros in the inner loops
// (binomial factors such as 1 - q^e are mostly zeros when stored densely).
std::vector<std::size_t> nonzero_positions(std::span<const Integer> c) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (sgn(c[i]) != 0) out.push_back(i);
  }
  return out;
}

}  // namespace

LaurentPoly::LaurentPoly(Exponent valuation, std::vector<Integer> coefficients)
    : valuation_(valuation), coeffs_(std::move(coefficients)) {
  canonicalize();
}

LaurentPoly LaurentPoly::constant(const Integer& c) { return monomial(c, 0); }

LaurentPoly LaurentPoly::monomial(const Integer& c, Exponent e) {
  return LaurentPoly(e, std::vector<Integer>{c});
}

Exponent LaurentPoly::degree() const {
  if (is_zero()) throw std::domain_error("degree of the zero polynomial");
  return valuation_ + static_cast<Exponent>(coeffs_.size()) - 1;
}

Integer LaurentPoly::coefficient(Exponent e) const {
  if (is_zero() || e < valuation_ || e > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(e - valuation_)];
}

const Integer& LaurentPoly::leading_coefficient() const {
  if (is_zero()) throw std::domain_error("leading coefficient of zero");
  return coeffs_.back();
}

void LaurentPoly::canonicalize() {
  auto first = std::find_if(coeffs_.begin(), coeffs_.end(),
                            [](const Integer& c) { return sgn(c) != 0; });
  if (first == coeffs_.end()) {
    coeffs_.clear();
    valuation_ = 0;
    return;
  }
  auto last = std::find_if(coeffs_.rbegin(), coeffs_.rend(),
                           [](const Integer& c) { return sgn(c) != 0; });
  coeffs_.erase(last.base(), coeffs_.end());
  const auto lead = first - coeffs_.begin();
  coeffs_.erase(coeffs_.begin(), first);
  valuation_ += lead;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
  if (rhs.is_zero()) return *this;
  if (is_zero()) return *this = rhs;
  const Exponent lo = std::min(valuation_, rhs.valuation_);
  const Exponent hi = std::max(degree(), rhs.degree());
  std::vector<Integer> out(static_cast<std::size_t>(hi - lo + 1));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    out[static_cast<std::size_t>(valuation_ - lo) + i] = coeffs_[i];
  }
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) {
    out[static_cast<std::size_t>(rhs.valuation_ - lo) + i] += rhs.coeffs_[i];
  }
  valuation_ = lo;
  coeffs_ = std::move(out);
  canonicalize();
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
  return *this += -rhs;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& rhs) {
  return *this = *this * rhs;
}

LaurentPoly& LaurentPoly::operator*=(const Integer& c) {
  if (sgn(c) == 0) return *this = LaurentPoly{};
  for (auto& x : coeffs_) x *= c;
  return *this;
}

LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }

LaurentPoly operator-(const LaurentPoly& a) {
  std::vector<Integer> c(a.coefficients().begin(), a.coefficients().end());
  for (auto& x : c) x = -x;
  return LaurentPoly(a.valuation(), std::move(c));
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  // Outer loop runs over the sparser operand.
  const bool swap = nonzero_positions(a.coefficients()).size() >
                    nonzero_positions(b.coefficients()).size();
  const LaurentPoly& outer = swap ? b : a;
  const LaurentPoly& inner = swap ? a : b;
  const auto oc = outer.coefficients();
  const auto ic = inner.coefficients();
  std::vector<Integer> out(oc.size() + ic.size() - 1);
  for (std::size_t i : nonzero_positions(oc)) {
    for (std::size_t j = 0; j < ic.size(); ++j) {
      mpz_addmul(out[i + j].get_mpz_t(), oc[i].get_mpz_t(), ic[j].get_mpz_t());
    }
  }
  return LaurentPoly(a.valuation() + b.valuation(), std::move(out));
}

LaurentPoly operator*(LaurentPoly a, const Integer& c) { return a *= c; }
LaurentPoly operator*(const Integer& c, LaurentPoly a) { return a *= c; }

LaurentPoly shift(LaurentPoly a, Exponent e) {
  if (a.is_zero()) return a;
  std::vector<Integer> c(a.coefficients().begin(), a.coefficients().end());
  return LaurentPoly(a.valuation() + e, std::move(c));
}

LaurentPoly substitute_qinv(const LaurentPoly& a) {
  if (a.is_zero()) return a;
  std::vector<Integer> c(a.coefficients().rbegin(), a.coefficients().rend());
  return LaurentPoly(-a.degree(), std::move(c));
}

Integer eval_at_one(const LaurentPoly& a) {
  Integer sum = 0;
  for (const auto& c : a.coefficients()) sum += c;
  return sum;
}

bool is_self_reciprocal(const LaurentPoly& a) {
  const auto c = a.coefficients();
  return std::equal(c.begin(), c.begin() + c.size() / 2, c.rbegin());
}

LaurentPoly one_minus_qpow(Exponent e) {
  return LaurentPoly::one() - LaurentPoly::monomial(1, e);
}

LaurentPoly signed_qpow(int sign, Exponent e) {
  return LaurentPoly::monomial(sign < 0 ? -1 : 1, e);
}

DivisionResult divide(const LaurentPoly& a, const LaurentPoly& d) {
  if (d.is_zero()) throw std::domain_error("division by the zero polynomial");
  const Integer& lead = d.leading_coefficient();
  if (lead != 1 && lead != -1) {
    throw std::domain_error("divisor leading coefficient must be +1 or -1");
  }
  if (a.is_zero()) return {};

  const auto dc = d.coefficients();
  const auto dz = nonzero_positions(dc);
  const std::size_t top = dc.size() - 1;
  std::vector<Integer> rem(a.coefficients().begin(), a.coefficients().end());
  if (rem.size() < dc.size()) {
    return {LaurentPoly{}, LaurentPoly(0, std::move(rem))};
  }
  std::vector<Integer> quot(rem.size() - top);
  for (std::size_t i = rem.size(); i-- > top;) {
    if (sgn(rem[i]) == 0) continue;
    const std::size_t base = i - top;
    Integer c = rem[i] * lead;  // lead is its own inverse
    for (std::size_t j : dz) {
      mpz_submul(rem[base + j].get_mpz_t(), c.get_mpz_t(), dc[j].get_mpz_t());
    }
    quot[base] = std::move(c);
  }
  rem.resize(top);
  return {LaurentPoly(a.valuation() - d.valuation(), std::move(quot)),
          LaurentPoly(0, std::move(rem))};
}

LaurentPoly exact_quotient(const LaurentPoly& a, const LaurentPoly& d) {
  auto [quot, rem] = divide(a, d);
  if (!rem.is_zero()) throw std::domain_error("inexact polynomial division");
  return quot;
}

bool divides(const LaurentPoly& d, const LaurentPoly& a) {
  if (d.is_zero() || d.leading_coefficient() != 1) {
    throw std::invalid_argument("divides: divisor must be monic");
  }
  return divide(a, d).remainder.is_zero();
}

const LaurentPoly& cyclotomic_polynomial(std::int64_t m) {
  if (m <= 0) throw std::invalid_argument("cyclotomic: m must be positive");
  static std::mutex mutex;
  static std::map<std::int64_t, LaurentPoly> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(m); it != cache.end()) return it->second;
  }
  // q^m - 1 = prod_{d | m} phi_d
  LaurentPoly phi = LaurentPoly::monomial(1, m) - LaurentPoly::one();
  for (std::int64_t d = 1; d < m; ++d) {
    if (m % d == 0) phi = exact_quotient(phi, cyclotomic_polynomial(d));
  }
  std::lock_guard lock(mutex);
  // std::map never invalidates references, and every writer computes the
  // same value, so an existing entry is kept as is.
  return cache.emplace(m, std::move(phi)).first->second;
}

CyclotomicModulus cyclotomic(std::int64_t m) {
  if (m < 2) throw std::invalid_argument("cyclotomic modulus needs m >= 2");
  return {m, cyclotomic_polynomial(m)};
}

bool congruent_mod(const LaurentPoly& a, const LaurentPoly& b,
                   const CyclotomicModulus& mod) {
  return divides(mod.phi, a - b);
}

std::string to_string(const LaurentPoly& a) {
  if (a.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  Exponent e = a.valuation();
  for (const auto& c : a.coefficients()) {
    const Exponent exp = e++;
    if (sgn(c) == 0) continue;
    const bool negative = sgn(c) < 0;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    const Integer mag = abs(c);
    if (exp == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag << '*';
    os << 'q';
    if (exp != 1) os << '^' << exp;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& a) {
  return os << to_string(a);
}

}  // namespace qneg
