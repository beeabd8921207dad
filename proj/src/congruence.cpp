#include "qneg/congruence.hpp"

#include "qneg/qbinom.hpp"

#include <stdexcept>
#include <string>

namespace qneg {

namespace {

void require_base(std::int64_t base) {
  if (base < 2) throw std::invalid_argument("digit base must be at least 2");
}

void require_prime(std::int64_t p) {
  if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
}

std::int64_t mod_p(const Integer& v, std::int64_t p) {
  Integer r;
  mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), static_cast<unsigned long>(p));
  return r.get_si();
}

bool at_fixed_point(std::int64_t x) { return x == 0 || x == -1; }

}  // namespace

DigitSplit digit_split(std::int64_t n, std::int64_t base) {
  require_base(base);
  std::int64_t low = n % base;
  if (low < 0) low += base;
  return {base, low, (n - low) / base};
}

PadicDigits padic_digits(std::int64_t n, std::int64_t base) {
  require_base(base);
  PadicDigits out{base, {}, n < 0 ? base - 1 : 0};
  // 0 and -1 are the fixed points of n -> floor(n / base)
  while (!at_fixed_point(n)) {
    const DigitSplit s = digit_split(n, base);
    out.preperiodic.push_back(s.low);
    n = s.high;
  }
  return out;
}

bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

std::int64_t lucas_product(std::int64_t n, std::int64_t k, std::int64_t p) {
  require_prime(p);
  std::int64_t product = 1;
  while (!(at_fixed_point(n) && at_fixed_point(k))) {
    const DigitSplit sn = digit_split(n, p);
    const DigitSplit sk = digit_split(k, p);
    product = product * mod_p(bin(sn.low, sk.low), p) % p;
    n = sn.high;
    k = sk.high;
  }
  // Both digit streams are now constant. The repeating pair is one of
  // (0,0), (p-1,0), (p-1,p-1) with factor 1, or (0,p-1) with factor 0, so one
  // more factor accounts for the whole infinite tail.
  const std::int64_t dn = n < 0 ? p - 1 : 0;
  const std::int64_t dk = k < 0 ? p - 1 : 0;
  return product * mod_p(bin(dn, dk), p) % p;
}

bool verify_lucas(std::int64_t n, std::int64_t k, std::int64_t p) {
  require_prime(p);
  const DigitSplit sn = digit_split(n, p);
  const DigitSplit sk = digit_split(k, p);
  const Integer rhs = bin(sn.low, sk.low) * bin(sn.high, sk.high);
  return mod_p(bin(n, k) - rhs, p) == 0;
}

LaurentPoly q_lucas_rhs(std::int64_t n, std::int64_t k, std::int64_t m) {
  if (m < 2) throw std::invalid_argument("q-Lucas modulus needs m >= 2");
  const DigitSplit sn = digit_split(n, m);
  const DigitSplit sk = digit_split(k, m);
  return qbinom(sn.low, sk.low) * bin(sn.high, sk.high);
}

bool verify_q_lucas(std::int64_t n, std::int64_t k, std::int64_t m) {
  return congruent_mod(qbinom(n, k), q_lucas_rhs(n, k, m), cyclotomic(m));
}

}  // namespace qneg
