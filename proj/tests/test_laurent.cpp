#include "qneg/laurent.hpp"
#include "qneg/qbinom.hpp"

#include "doctest.h"

#include <numeric>
#include <random>
#include <sstream>

using namespace qneg;

namespace {

LaurentPoly poly(Exponent v, std::initializer_list<long> cs) {
  std::vector<Integer> c;
  for (long x : cs) c.emplace_back(x);
  return LaurentPoly(v, std::move(c));
}

LaurentPoly random_poly(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> len(0, 7);
  std::uniform_int_distribution<int> val(-6, 6);
  std::uniform_int_distribution<long> coeff(-1000, 1000);
  std::vector<Integer> c(static_cast<std::size_t>(len(rng)));
  for (auto& x : c) x = coeff(rng);
  return LaurentPoly(val(rng), std::move(c));
}

bool canonical(const LaurentPoly& p) {
  if (p.is_zero()) return p.valuation() == 0 && p.size() == 0;
  return p.coefficients().front() != 0 && p.coefficients().back() != 0;
}

std::int64_t totient(std::int64_t m) {
  std::int64_t count = 0;
  for (std::int64_t i = 1; i <= m; ++i) count += std::gcd(i, m) == 1;
  return count;
}

// prime p with m = p^r, or 0
std::int64_t prime_power_base(std::int64_t m) {
  for (std::int64_t p = 2; p <= m; ++p) {
    if (m % p != 0) continue;
    while (m % p == 0) m /= p;
    return m == 1 ? p : 0;
  }
  return 0;
}

}  // namespace

TEST_CASE("construction canonicalizes") {
  const LaurentPoly p = poly(-2, {0, 0, 3, 0, 1, 0});
  CHECK(p.valuation() == 0);
  CHECK(p.degree() == 2);
  CHECK(p.size() == 3);
  CHECK(p.coefficient(1) == 0);
  CHECK(p.coefficient(2) == 1);
  CHECK(p.coefficient(50) == 0);
  CHECK(p.leading_coefficient() == 1);

  const LaurentPoly z = poly(7, {0, 0});
  CHECK(z.is_zero());
  CHECK(z.valuation() == 0);
  CHECK(z == LaurentPoly{});
  CHECK_THROWS_AS(z.degree(), std::domain_error);
}

TEST_CASE("addition") {
  CHECK(poly(0, {1, 1}) + LaurentPoly{} == poly(0, {1, 1}));
  CHECK((LaurentPoly::monomial(1, -1) + LaurentPoly::monomial(-1, -1)).is_zero());
  CHECK(poly(0, {1, 1, 2}) + LaurentPoly::monomial(1, 2) == poly(0, {1, 1, 3}));
  CHECK(poly(0, {1, 5}) - poly(0, {1}) == LaurentPoly::monomial(5, 1));
}

TEST_CASE("multiplication") {
  CHECK(poly(0, {1, 0, 1}) * poly(0, {1, 1, 1}) == poly(0, {1, 1, 2, 1, 1}));
  CHECK((poly(-3, {4, 5}) * LaurentPoly{}).is_zero());
  CHECK(LaurentPoly::monomial(1, -7) * poly(0, {1, 1}) == poly(-7, {1, 1}));
  CHECK(poly(2, {1, 2}) * Integer(-3) == poly(2, {-3, -6}));
  CHECK((poly(2, {1, 2}) * Integer(0)).is_zero());
}

TEST_CASE("shift, substitution, evaluation") {
  CHECK(shift(poly(0, {1, 1}), -1) == poly(-1, {1, 1}));
  CHECK(shift(LaurentPoly{}, 5).is_zero());
  CHECK(shift(poly(0, {1, 1, 2}), 3) == poly(3, {1, 1, 2}));

  CHECK(substitute_qinv(poly(0, {1, 1})) == poly(-1, {1, 1}));
  CHECK(substitute_qinv(poly(-5, {2, 0, 1})) == poly(3, {1, 0, 2}));
  CHECK(substitute_qinv(LaurentPoly{}).is_zero());

  CHECK(eval_at_one(poly(-7, {1, 1, 2, 1, 1})) == 6);
  CHECK(eval_at_one(LaurentPoly{}) == 0);
  CHECK(eval_at_one(poly(0, {-2, -2})) == -4);
}

TEST_CASE("text rendering") {
  CHECK(to_string(LaurentPoly{}) == "0");
  CHECK(to_string(poly(-7, {1, 1, 2, 1, 1})) == "q^-7 + q^-6 + 2*q^-5 + q^-4 + q^-3");
  CHECK(to_string(poly(-3, {-1, -1, -1})) == "-q^-3 - q^-2 - q^-1");
  CHECK(to_string(poly(0, {-2, -2})) == "-2 - 2*q");
  CHECK(to_string(poly(0, {1, -1, 1})) == "1 - q + q^2");
  CHECK(to_string(poly(1, {-1})) == "-q");
  std::ostringstream s;
  s << poly(0, {1, 1});
  CHECK(s.str() == "1 + q");
}

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic(3).phi == poly(0, {1, 1, 1}));
  CHECK(cyclotomic(6).phi == poly(0, {1, -1, 1}));
  CHECK(cyclotomic(7).phi == poly(0, {1, 1, 1, 1, 1, 1, 1}));
  CHECK(cyclotomic_polynomial(1) == poly(0, {-1, 1}));
  CHECK_THROWS_AS(cyclotomic(1), std::invalid_argument);
  CHECK_THROWS_AS(cyclotomic_polynomial(0), std::invalid_argument);

  for (std::int64_t m = 2; m <= 30; ++m) {
    CAPTURE(m);
    const LaurentPoly& phi = cyclotomic_polynomial(m);
    CHECK(phi.valuation() == 0);
    CHECK(phi.degree() == totient(m));
    CHECK(phi.coefficient(0) == 1);
    CHECK(is_self_reciprocal(phi));
    const std::int64_t p = prime_power_base(m);
    CHECK(eval_at_one(phi) == (p != 0 ? p : 1));
  }
  for (std::int64_t m = 1; m <= 30; ++m) {
    LaurentPoly product = LaurentPoly::one();
    for (std::int64_t d = 1; d <= m; ++d) {
      if (m % d == 0) product *= cyclotomic_polynomial(d);
    }
    CHECK(product == LaurentPoly::monomial(1, m) - LaurentPoly::one());
  }
}

TEST_CASE("division and divisibility") {
  const LaurentPoly phi3 = poly(0, {1, 1, 1});
  CHECK(divides(phi3, poly(0, {-1, 0, 0, 1})));
  CHECK_FALSE(divides(phi3, poly(0, {1, 1})));
  CHECK(divides(phi3, qbinom(-4, -8) - poly(0, {-2, -2})));
  CHECK(divides(phi3, shift(poly(0, {-1, 0, 0, 1}), -9)));
  CHECK_THROWS_AS(divides(poly(0, {1, 2}), poly(0, {1})), std::invalid_argument);

  const DivisionResult r = divide(poly(0, {5, 0, 0, 1}), phi3);
  CHECK(r.quotient * phi3 + r.remainder == poly(0, {5, 0, 0, 1}));
  CHECK(r.remainder == poly(0, {6}));
  CHECK(exact_quotient(poly(0, {1, 2, 1}), poly(0, {1, 1})) == poly(0, {1, 1}));
  CHECK_THROWS_AS(exact_quotient(poly(0, {1, 2, 2}), poly(0, {1, 1})), std::domain_error);
}

TEST_CASE("congruence modulo cyclotomic polynomials") {
  CHECK(congruent_mod(qbinom(-4, -8), poly(0, {-2, -2}), cyclotomic(3)));
  for (std::int64_t m = 2; m <= 12; ++m) {
    CHECK(congruent_mod(LaurentPoly::one(), LaurentPoly::monomial(1, m), cyclotomic(m)));
    CHECK(congruent_mod(qbinom(5, 2), qbinom(5, 2), cyclotomic(m)));
  }
  CHECK_FALSE(congruent_mod(LaurentPoly::one(), LaurentPoly::monomial(1, 2), cyclotomic(3)));
}

TEST_CASE("ring laws on random inputs") {
  std::mt19937_64 rng(20240611);
  for (int trial = 0; trial < 300; ++trial) {
    const LaurentPoly a = random_poly(rng);
    const LaurentPoly b = random_poly(rng);
    const LaurentPoly c = random_poly(rng);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a - a).is_zero());
    CHECK(a * LaurentPoly::one() == a);
    CHECK(canonical(a + b));
    CHECK(canonical(a - b));
    CHECK(canonical(a * b));
    CHECK(canonical(shift(a, 3)));
    CHECK(canonical(substitute_qinv(a)));
    CHECK(substitute_qinv(substitute_qinv(a)) == a);
    CHECK(eval_at_one(a * b) == eval_at_one(a) * eval_at_one(b));
    if (!a.is_zero() && !b.is_zero()) {
      CHECK((a * b).valuation() == a.valuation() + b.valuation());
      CHECK((a * b).degree() == a.degree() + b.degree());
    }
  }
}

TEST_CASE("divisibility is closed under ring operations") {
  std::mt19937_64 rng(77);
  std::uniform_int_distribution<std::int64_t> pick_m(2, 15);
  for (int trial = 0; trial < 200; ++trial) {
    const LaurentPoly& d = cyclotomic_polynomial(pick_m(rng));
    const LaurentPoly a = d * random_poly(rng);
    const LaurentPoly b = d * random_poly(rng);
    const LaurentPoly c = random_poly(rng);
    REQUIRE(divides(d, a));
    REQUIRE(divides(d, b));
    CHECK(divides(d, a + b));
    CHECK(divides(d, a - b));
    CHECK(divides(d, a * c));
  }
}
