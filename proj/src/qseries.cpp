#include "qneg/qseries.hpp"

#include "qneg/qbinom.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace qneg {

namespace {

// sign * q^qexp * x^xexp * y^yexp
struct Monomial {
  int sign = 1;
  Exponent qexp = 0;
  std::int64_t xexp = 0;
  std::int64_t yexp = 0;
};

// (x^a y^b)(x^c y^d) = q^(bc) x^(a+c) y^(b+d)
Monomial operator*(const Monomial& l, const Monomial& r) {
  return {l.sign * r.sign, l.qexp + r.qexp + l.yexp * r.xexp, l.xexp + r.xexp,
          l.yexp + r.yexp};
}

void require_truncation(std::int64_t truncation) {
  if (truncation < 1) throw std::invalid_argument("truncation must be at least 1");
}

void add_monomial(NormalSeries& s, const Monomial& m) {
  if (s.in_window(m.xexp)) s.add_to(m.xexp, signed_qpow(m.sign, m.qexp));
}

NormalSeries unit_series(Direction direction, std::int64_t truncation) {
  NormalSeries s(0, direction, truncation);
  s.add_to(0, LaurentPoly::one());
  return s;
}

// x^step + y^step
NormalSeries binomial_base(std::int64_t step, Direction direction, std::int64_t truncation) {
  NormalSeries s(step, direction, truncation);
  add_monomial(s, {1, 0, step, 0});
  add_monomial(s, {1, 0, 0, step});
  return s;
}

// (X + Y)^-1 with X = x^step, Y = y^step, by the geometric series
//   FromZero:      Y^-1 (X Y^-1 + 1)^-1 = sum_j (-1)^j Y^-1 (X Y^-1)^j
//   FromInfinity:  (1 + X^-1 Y)^-1 X^-1 = sum_j (-1)^j (X^-1 Y)^j X^-1
NormalSeries inverse_base(std::int64_t step, Direction direction, std::int64_t truncation) {
  NormalSeries s(-step, direction, truncation);
  const Monomial x_inv{1, 0, -step, 0};
  const Monomial y_inv{1, 0, 0, -step};
  const Monomial x{1, 0, step, 0};
  const Monomial y{1, 0, 0, step};
  if (direction == Direction::FromZero) {
    const Monomial ratio = x * y_inv;
    Monomial term = y_inv;
    for (std::int64_t j = 0; j * step < truncation; ++j) {
      add_monomial(s, {j % 2 == 0 ? term.sign : -term.sign, term.qexp, term.xexp, term.yexp});
      term = term * ratio;
    }
  } else {
    const Monomial ratio = x_inv * y;
    Monomial power;  // ratio^j
    for (std::int64_t j = 0; j * step < truncation; ++j) {
      Monomial term = power * x_inv;
      if (j % 2 != 0) term.sign = -term.sign;
      add_monomial(s, term);
      power = power * ratio;
    }
  }
  return s;
}

PowerSeriesInX truncated_mul(const PowerSeriesInX& a, const PowerSeriesInX& b) {
  const std::size_t t = std::min(a.coefficients.size(), b.coefficients.size());
  PowerSeriesInX out{std::vector<LaurentPoly>(t)};
  for (std::size_t i = 0; i < t; ++i) {
    if (a.coefficients[i].is_zero()) continue;
    for (std::size_t j = 0; i + j < t; ++j) {
      if (b.coefficients[j].is_zero()) continue;
      out.coefficients[i + j] += a.coefficients[i] * b.coefficients[j];
    }
  }
  return out;
}

}  // namespace

std::string_view to_string(Direction d) {
  return d == Direction::FromZero ? "from-zero" : "from-infinity";
}

NormalSeries::NormalSeries(std::int64_t degree, Direction direction, std::int64_t truncation)
    : degree_(degree), direction_(direction) {
  require_truncation(truncation);
  terms_.resize(static_cast<std::size_t>(truncation));
}

bool NormalSeries::in_window(std::int64_t k) const noexcept {
  const std::int64_t d = direction_ == Direction::FromZero ? k : degree_ - k;
  return d >= 0 && d < truncation();
}

std::vector<std::int64_t> NormalSeries::window() const {
  std::vector<std::int64_t> out;
  for (std::int64_t i = 0; i < truncation(); ++i) {
    out.push_back(direction_ == Direction::FromZero ? i : degree_ - i);
  }
  return out;
}

std::size_t NormalSeries::offset(std::int64_t k) const {
  if (!in_window(k)) {
    throw std::out_of_range("x-exponent " + std::to_string(k) +
                            " is outside the retained window");
  }
  return static_cast<std::size_t>(direction_ == Direction::FromZero ? k : degree_ - k);
}

const LaurentPoly& NormalSeries::coefficient(std::int64_t k) const {
  return terms_[offset(k)];
}

void NormalSeries::add_to(std::int64_t k, const LaurentPoly& c) { terms_[offset(k)] += c; }

NormalSeries series_mul(const NormalSeries& a, const NormalSeries& b) {
  if (a.direction() != b.direction()) {
    throw std::invalid_argument("series_mul: expansion directions differ");
  }
  NormalSeries out(a.degree() + b.degree(), a.direction(),
                   std::min(a.truncation(), b.truncation()));
  for (std::int64_t ka : a.window()) {
    const LaurentPoly& ca = a.coefficient(ka);
    if (ca.is_zero()) continue;
    for (std::int64_t kb : b.window()) {
      const LaurentPoly& cb = b.coefficient(kb);
      if (cb.is_zero() || !out.in_window(ka + kb)) continue;
      // y^(na-ka) x^kb = q^((na-ka) kb) x^kb y^(na-ka)
      out.add_to(ka + kb, shift(ca * cb, (a.degree() - ka) * kb));
    }
  }
  return out;
}

NormalSeries binomial_power(std::int64_t step, std::int64_t n, Direction direction,
                            std::int64_t truncation) {
  require_truncation(truncation);
  if (step < 1) throw std::invalid_argument("binomial_power: step must be positive");
  const NormalSeries base = n >= 0 ? binomial_base(step, direction, truncation)
                                   : inverse_base(step, direction, truncation);
  NormalSeries acc = unit_series(direction, truncation);
  for (std::int64_t i = 0; i < (n >= 0 ? n : -n); ++i) acc = series_mul(acc, base);
  return acc;
}

NormalSeries power_xy(std::int64_t n, Direction direction, std::int64_t truncation) {
  return binomial_power(1, n, direction, truncation);
}

LaurentPoly extract_coeff(const NormalSeries& s, std::int64_t k) { return s.coefficient(k); }

const LaurentPoly& PowerSeriesInX::coefficient(std::int64_t k) const {
  if (k < 0 || k >= truncation()) {
    throw std::out_of_range("power of x outside the truncation window");
  }
  return coefficients[static_cast<std::size_t>(k)];
}

PowerSeriesInX pochhammer_expansion(std::int64_t n, std::int64_t truncation) {
  require_truncation(truncation);
  const auto t = static_cast<std::size_t>(truncation);
  PowerSeriesInX acc{std::vector<LaurentPoly>(t)};
  acc.coefficients[0] = LaurentPoly::one();
  if (n >= 0) {
    // (1 + x)(1 + xq) ... (1 + xq^(n-1))
    for (std::int64_t j = 0; j < n; ++j) {
      PowerSeriesInX factor{std::vector<LaurentPoly>(t)};
      factor.coefficients[0] = LaurentPoly::one();
      if (t > 1) factor.coefficients[1] = LaurentPoly::monomial(1, j);
      acc = truncated_mul(acc, factor);
    }
  } else {
    // prod_{j=1}^{|n|} 1 / (1 + x q^-j) = prod_j sum_m (-1)^m x^m q^(-jm)
    for (std::int64_t j = 1; j <= -n; ++j) {
      PowerSeriesInX factor{std::vector<LaurentPoly>(t)};
      for (std::size_t m = 0; m < t; ++m) {
        const auto mm = static_cast<std::int64_t>(m);
        factor.coefficients[m] = signed_qpow(mm % 2 == 0 ? 1 : -1, -j * mm);
      }
      acc = truncated_mul(acc, factor);
    }
  }
  return acc;
}

bool verify_chu_vandermonde(std::int64_t n, std::int64_t m, std::int64_t k) {
  std::vector<std::int64_t> js;
  if (k >= 0) {
    for (std::int64_t j = 0; j <= k; ++j) js.push_back(j);
  } else if (n < 0 && m < 0) {
    for (std::int64_t j = -1; j > k; --j) js.push_back(j);
  } else {
    throw std::invalid_argument(
        "Chu-Vandermonde needs k >= 0, or n, m and k all negative");
  }
  LaurentPoly sum;
  for (std::int64_t j : js) {
    sum += shift(qbinom(n, j) * qbinom(m, k - j), (k - j) * (n - j));
  }
  return sum == qbinom(n + m, k);
}

bool freshman_congruence(std::int64_t m) {
  if (m < 2) throw std::invalid_argument("freshman_congruence needs m >= 2");
  const NormalSeries s = power_xy(m, Direction::FromZero, m + 1);
  const LaurentPoly& phi = cyclotomic_polynomial(m);
  if (s.coefficient(0) != LaurentPoly::one() || s.coefficient(m) != LaurentPoly::one()) {
    return false;
  }
  for (std::int64_t k = 1; k < m; ++k) {
    if (!divides(phi, s.coefficient(k))) return false;
  }
  return true;
}

bool lifted_freshman_congruence(std::int64_t m, std::int64_t n, Direction direction,
                                std::int64_t truncation) {
  const CyclotomicModulus mod = cyclotomic(m);
  const NormalSeries lhs = power_xy(n * m, direction, truncation);
  const NormalSeries rhs = binomial_power(m, n, direction, truncation);
  for (std::int64_t k : lhs.window()) {
    if (!congruent_mod(lhs.coefficient(k), rhs.coefficient(k), mod)) return false;
  }
  return true;
}

}  // namespace qneg
