#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace qneg {

using Integer = mpz_class;
using Exponent = std::int64_t;

/**
 * Laurent polynomial in q with arbitrary-precision integer coefficients.
 *
 * Stored densely: coefficients()[i] is the coefficient of q^(valuation()+i).
 * Every instance is canonical: the first and last stored coefficients are
 * nonzero, and the zero polynomial has no coefficients and valuation 0.
 */
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(Exponent valuation, std::vector<Integer> coefficients);

  static LaurentPoly constant(const Integer& c);
  static LaurentPoly monomial(const Integer& c, Exponent e);
  static LaurentPoly one() { return constant(1); }

  bool is_zero() const noexcept { return coeffs_.empty(); }
  Exponent valuation() const noexcept { return valuation_; }
  /// Highest exponent; throws std::domain_error for the zero polynomial.
  Exponent degree() const;
  std::size_t size() const noexcept { return coeffs_.size(); }
  std::span<const Integer> coefficients() const noexcept { return coeffs_; }
  /// Coefficient of q^e (zero outside the stored range).
  Integer coefficient(Exponent e) const;
  const Integer& leading_coefficient() const;

  LaurentPoly& operator+=(const LaurentPoly& rhs);
  LaurentPoly& operator-=(const LaurentPoly& rhs);
  LaurentPoly& operator*=(const LaurentPoly& rhs);
  LaurentPoly& operator*=(const Integer& c);

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

 private:
  void canonicalize();

  Exponent valuation_ = 0;
  std::vector<Integer> coeffs_;
};

LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b);
LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b);
LaurentPoly operator-(const LaurentPoly& a);
LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly operator*(LaurentPoly a, const Integer& c);
LaurentPoly operator*(const Integer& c, LaurentPoly a);

/// Multiplication by q^e.
LaurentPoly shift(LaurentPoly a, Exponent e);
/// The substitution q -> 1/q.
LaurentPoly substitute_qinv(const LaurentPoly& a);
/// Value at q = 1, i.e. the sum of the coefficients.
Integer eval_at_one(const LaurentPoly& a);
/// True if the coefficient sequence is a palindrome (zero counts as one).
bool is_self_reciprocal(const LaurentPoly& a);
/// 1 - q^e.
LaurentPoly one_minus_qpow(Exponent e);
/// sign * q^e for sign in {-1, 1}.
LaurentPoly signed_qpow(int sign, Exponent e);

struct DivisionResult {
  LaurentPoly quotient;
  LaurentPoly remainder;
};

/**
 * Long division of a by d in Z[q, 1/q].
 *
 * Both operands are first shifted to valuation 0; q is a unit in the Laurent
 * ring, so this never changes whether d divides a. The leading coefficient of
 * d must be +1 or -1 so the division stays over the integers. The quotient is
 * shifted back, the remainder is reported for the shifted dividend.
 */
DivisionResult divide(const LaurentPoly& a, const LaurentPoly& d);

/// a / d, throwing std::domain_error if the remainder is nonzero.
LaurentPoly exact_quotient(const LaurentPoly& a, const LaurentPoly& d);

/// True iff a = d * c for some Laurent polynomial c. d must be monic.
bool divides(const LaurentPoly& d, const LaurentPoly& a);

/// The m-th cyclotomic polynomial, m >= 1. Results are cached per m.
const LaurentPoly& cyclotomic_polynomial(std::int64_t m);

/// Congruence context modulo the m-th cyclotomic polynomial, m >= 2.
struct CyclotomicModulus {
  std::int64_t m;
  LaurentPoly phi;
};

CyclotomicModulus cyclotomic(std::int64_t m);

/// True iff phi_m divides a - b.
bool congruent_mod(const LaurentPoly& a, const LaurentPoly& b,
                   const CyclotomicModulus& mod);

/// Text form, e.g. "q^-7 + q^-6 + 2*q^-5 + q^-4 + q^-3"; zero renders "0".
std::string to_string(const LaurentPoly& a);
std::ostream& operator<<(std::ostream& os, const LaurentPoly& a);

}  // namespace qneg
