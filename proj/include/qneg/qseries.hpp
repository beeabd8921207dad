#pragma once

#include "qneg/laurent.hpp"

#include <cstdint>
#include <string_view>
#include <vector>

namespace qneg {

/// Which end the expansion of (x + y)^n starts from.
enum class Direction {
  FromZero,      // powers x^k y^(n-k) with k = 0, 1, 2, ...
  FromInfinity,  // powers x^k y^(n-k) with k = n, n-1, n-2, ...
};

std::string_view to_string(Direction d);

/**
 * Truncated expansion of a homogeneous element of total degree n in
 * variables with y x = q x y, stored as coefficients of the normal-ordered
 * monomials x^k y^(n-k).
 *
 * The retained window is k in [0, truncation) for FromZero and
 * k in (n - truncation, n] for FromInfinity. Reading outside the window
 * throws std::out_of_range; inside it, missing terms are zero.
 */
class NormalSeries {
 public:
  NormalSeries(std::int64_t degree, Direction direction, std::int64_t truncation);

  std::int64_t degree() const noexcept { return degree_; }
  Direction direction() const noexcept { return direction_; }
  std::int64_t truncation() const noexcept { return static_cast<std::int64_t>(terms_.size()); }

  bool in_window(std::int64_t k) const noexcept;
  /// Window exponents, ascending for FromZero and descending for FromInfinity.
  std::vector<std::int64_t> window() const;

  const LaurentPoly& coefficient(std::int64_t k) const;
  void add_to(std::int64_t k, const LaurentPoly& c);

  friend bool operator==(const NormalSeries&, const NormalSeries&) = default;

 private:
  // distance of k from the start of the expansion
  std::size_t offset(std::int64_t k) const;

  std::int64_t degree_;
  Direction direction_;
  std::vector<LaurentPoly> terms_;
};

/// Product with y^a x^b = q^(ab) x^b y^a applied to every pair of terms.
/// Throws std::invalid_argument on a direction mismatch.
NormalSeries series_mul(const NormalSeries& a, const NormalSeries& b);

/// (x^step + y^step)^n expanded in the given direction; negative powers come
/// from the geometric series of the inverse.
NormalSeries binomial_power(std::int64_t step, std::int64_t n, Direction direction,
                            std::int64_t truncation);

/// (x + y)^n.
NormalSeries power_xy(std::int64_t n, Direction direction, std::int64_t truncation);

/// Coefficient of x^k y^(n-k); throws std::out_of_range outside the window.
LaurentPoly extract_coeff(const NormalSeries& s, std::int64_t k);

/// Commutative power series in x with Laurent polynomial coefficients.
struct PowerSeriesInX {
  std::vector<LaurentPoly> coefficients;  // index = power of x

  std::int64_t truncation() const noexcept {
    return static_cast<std::int64_t>(coefficients.size());
  }
  const LaurentPoly& coefficient(std::int64_t k) const;
};

/// (-x; q)_n as a power series in x, truncated to x^0 .. x^(truncation-1).
PowerSeriesInX pochhammer_expansion(std::int64_t n, std::int64_t truncation);

/**
 * Checks sum_j q^((k-j)(n-j)) C(n,j) C(m,k-j) = C(n+m,k) exactly.
 * For k >= 0 the sum runs over j = 0..k; for n, m, k all negative over
 * j = -1, -2, ..., k+1. Other inputs throw std::invalid_argument.
 */
bool verify_chu_vandermonde(std::int64_t n, std::int64_t m, std::int64_t k);

/// (x + y)^m = x^m + y^m modulo phi_m: the middle coefficients are divisible
/// by phi_m and the outer two are 1. Requires m >= 2.
bool freshman_congruence(std::int64_t m);

/// (x + y)^(n m) agrees with (x^m + y^m)^n coefficient-wise modulo phi_m
/// throughout the window.
bool lifted_freshman_congruence(std::int64_t m, std::int64_t n, Direction direction,
                                std::int64_t truncation);

}  // namespace qneg
