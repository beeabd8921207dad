#include "qneg/qbinom.hpp"

#include "doctest.h"

#include <thread>

using namespace qneg;

namespace {

LaurentPoly poly(Exponent v, std::initializer_list<long> cs) {
  std::vector<Integer> c;
  for (long x : cs) c.emplace_back(x);
  return LaurentPoly(v, std::move(c));
}

// Values frozen from tests/oracle/limit_oracle.py (sympy limit of the
// product definition as the exponents approach the negative arguments).
const LaurentPoly kMinus3Minus5 = poly(-7, {1, 1, 2, 1, 1});
const LaurentPoly kMinus3Minus4 = poly(-3, {-1, -1, -1});
const LaurentPoly kMinus4Minus8 = poly(-22, {1, 1, 2, 3, 4, 4, 5, 4, 4, 3, 2, 1, 1});
const LaurentPoly kMinus5Plus3 = poly(-18, {-1, -1, -2, -3, -4, -4, -5, -4, -4, -3, -2, -1, -1});
const LaurentPoly kMinus4Minus6 = poly(-9, {1, 1, 2, 2, 2, 1, 1});
const LaurentPoly kSix3 = poly(0, {1, 1, 2, 3, 3, 3, 3, 2, 1, 1});

}  // namespace

TEST_CASE("sgn and regions") {
  CHECK(sgn(0) == 1);
  CHECK(sgn(5) == 1);
  CHECK(sgn(-3) == -1);
  CHECK(region({3, 2}) == Region::Classical);
  CHECK(region({-3, 2}) == Region::NegativeN);
  CHECK(region({-3, -5}) == Region::DoubleNegative);
  CHECK(region({-3, -2}) == Region::Vanishing);
  CHECK(region({2, 3}) == Region::Vanishing);
  CHECK(region({2, -1}) == Region::Vanishing);
  CHECK(region({0, 0}) == Region::Classical);
  CHECK(region({-1, -1}) == Region::DoubleNegative);

  for (std::int64_t n = -8; n <= 8; ++n) {
    for (std::int64_t k = -8; k <= 8; ++k) {
      const bool vanishing = (k > n && n >= 0) || (n >= 0 && 0 > k) || (0 > k && k > n);
      CHECK((region({n, k}) == Region::Vanishing) == vanishing);
    }
  }
}

TEST_CASE("oracle values") {
  CHECK(qbinom(-3, -5) == kMinus3Minus5);
  CHECK(qbinom(-3, 2) == kMinus3Minus5);
  CHECK(qbinom(-3, -4) == kMinus3Minus4);
  CHECK(qbinom(-4, -8) == kMinus4Minus8);
  CHECK(qbinom(-5, 3) == kMinus5Plus3);
  CHECK(qbinom(-4, -6) == kMinus4Minus6);
  CHECK(qbinom(6, 3) == kSix3);
  CHECK(qbinom(4, 2) == poly(0, {1, 1, 2, 1, 1}));
  CHECK(qbinom(-2, -3) == poly(-2, {-1, -1}));
  CHECK(qbinom(-1, 3) == poly(-6, {-1}));
  CHECK(qbinom(0, 0) == LaurentPoly::one());
  CHECK(qbinom(5, -2).is_zero());
  CHECK(qbinom(3, -2).is_zero());
  CHECK(qbinom(-3, -2).is_zero());
  CHECK(qbinom(-6, -2).is_zero());
  for (std::int64_t n : {-4, 0, 7}) CHECK(qbinom(n, 0) == LaurentPoly::one());
}

TEST_CASE("row n = -1") {
  for (std::int64_t k = -8; k <= 8; ++k) {
    const int sign = (k % 2 == 0 ? 1 : -1) * sgn(k);
    CHECK(qbinom(-1, k) == signed_qpow(sign, -k * (k + 1) / 2));
  }
}

TEST_CASE("cyclotomic factorization of a double-negative value") {
  const LaurentPoly product =
      cyclotomic_polynomial(5) * cyclotomic_polynomial(6) * cyclotomic_polynomial(7);
  CHECK(shift(qbinom(-4, -8), 22) == product);
}

TEST_CASE("Pascal strategy") {
  CHECK(qbinom_pascal({4, 2}) == poly(0, {1, 1, 2, 1, 1}));
  CHECK(qbinom_pascal({0, 0}) == LaurentPoly::one());
  CHECK(qbinom_pascal({-3, -5}) == kMinus3Minus5);
  CHECK(qbinom_pascal({-4, -8}) == kMinus4Minus8);
  CHECK(qbinom_pascal({-5, 3}) == kMinus5Plus3);
  CHECK(qbinom_pascal({-3, -2}).is_zero());
  for (std::int64_t n = -9; n <= 9; ++n) {
    for (std::int64_t k = -9; k <= 9; ++k) {
      CAPTURE(n);
      CAPTURE(k);
      CHECK(qbinom_pascal({n, k}) == qbinom(n, k));
    }
  }
}

TEST_CASE("integer binomial") {
  CHECK(bin(-11, -19) == 43758);
  CHECK(bin(-3, 2) == 6);
  CHECK(bin(-2, -3) == -2);
  CHECK(bin(-4, -8) == 35);
  CHECK(bin(-3, -5) == 6);
  CHECK(bin(5, -2) == 0);
  const long grid[5][5] = {{1, 0, 1, -2, 3},
                           {-1, 1, 1, -1, 1},
                           {0, 0, 1, 0, 0},
                           {0, 0, 1, 1, 0},
                           {0, 0, 1, 2, 1}};
  for (int i = 0; i < 5; ++i) {
    for (int j = 0; j < 5; ++j) CHECK(bin(i - 2, j - 2) == grid[i][j]);
  }
  for (std::int64_t n = -12; n <= 12; ++n) {
    for (std::int64_t k = -12; k <= 12; ++k) CHECK(bin(n, k) == eval_at_one(qbinom(n, k)));
  }
}

TEST_CASE("six forms") {
  const auto forms = six_forms({-3, 2});
  CHECK(forms[0].prefactor == LaurentPoly::one());
  CHECK(forms[0].index == IndexPair{-3, 2});
  CHECK(forms[1].prefactor == LaurentPoly::one());
  CHECK(forms[1].index == IndexPair{-3, -5});
  CHECK(forms[5].prefactor == LaurentPoly::monomial(1, -7));
  CHECK(forms[5].index == IndexPair{4, 2});
  CHECK(forms[2].index == IndexPair{-3, -5});
  CHECK(forms[3].index == IndexPair{-3, 2});
  CHECK(forms[4].index == IndexPair{4, 2});

  for (const auto& f : six_forms({0, 0})) CHECK(f.prefactor * qbinom(f.index) == LaurentPoly::one());
  for (std::int64_t n = -6; n <= 6; ++n) {
    for (std::int64_t k = -6; k <= 6; ++k) {
      for (const auto& f : six_forms({n, k})) {
        CHECK(f.prefactor * qbinom(f.index) == qbinom(n, k));
      }
      CHECK(six_forms({n, k})[1].index == IndexPair{n, n - k});
    }
  }
}

TEST_CASE("degree profile") {
  CHECK(degree_profile({-3, 2}) == DegreeProfile{-7, -3});
  CHECK(degree_profile({4, 2}) == DegreeProfile{0, 4});
  CHECK(degree_profile({-3, -4}) == DegreeProfile{-3, -1});
  CHECK_FALSE(degree_profile({-3, -2}).has_value());
  CHECK_FALSE(degree_profile({5, 6}).has_value());
}

TEST_CASE("cache is transparent under concurrent use") {
  clear_qbinom_cache();
  CHECK(qbinom_cache_size() == 0);
  std::vector<std::thread> workers;
  std::vector<int> ok(4, 1);
  for (int t = 0; t < 4; ++t) {
    workers.emplace_back([t, &ok] {
      for (std::int64_t n = -10; n <= 10; ++n) {
        for (std::int64_t k = -10; k <= 10; ++k) {
          if (qbinom(n, k) != qbinom_pascal({n, k})) ok[static_cast<std::size_t>(t)] = 0;
        }
      }
    });
  }
  for (auto& w : workers) w.join();
  for (int v : ok) CHECK(v == 1);
  CHECK(qbinom_cache_size() > 0);
  CHECK(qbinom(-4, -8) == kMinus4Minus8);
  clear_qbinom_cache();
  CHECK(qbinom(-4, -8) == kMinus4Minus8);
}
