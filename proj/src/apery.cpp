#include "qneg/apery.hpp"

#include "qneg/congruence.hpp"
#include "qneg/qbinom.hpp"

#include <stdexcept>

namespace qneg {

namespace {

Integer apery_term(std::int64_t n, std::int64_t k) {
  const Integer a = bin(n, k);
  const Integer b = bin(n + k, k);
  return a * a * b * b;
}

std::int64_t ipow(std::int64_t base, std::int64_t e) {
  std::int64_t r = 1;
  while (e-- > 0) r *= base;
  return r;
}

}  // namespace

Integer apery(std::int64_t n) {
  const std::int64_t lo = 0;
  const std::int64_t hi = n >= 0 ? n : -n - 1;
  for (std::int64_t k : {lo - 2, lo - 1, hi + 1, hi + 2}) {
    if (sgn(apery_term(n, k)) != 0) {
      throw std::logic_error("Apery term outside the summation window");
    }
  }
  Integer sum = 0;
  for (std::int64_t k = lo; k <= hi; ++k) sum += apery_term(n, k);
  return sum;
}

bool verify_apery_symmetry(std::int64_t n) { return apery(-n) == apery(n - 1); }

std::string_view to_string(AperyVariant v) {
  return v == AperyVariant::Beukers ? "beukers" : "coster";
}

bool verify_apery_congruence(std::int64_t p, std::int64_t r, std::int64_t m,
                             AperyVariant variant) {
  if (p < 5 || !is_prime(p)) throw std::invalid_argument("need a prime p >= 5");
  if (r < 1) throw std::invalid_argument("need r >= 1");
  const std::int64_t shift = variant == AperyVariant::Beukers ? -1 : 0;
  const std::int64_t hi = ipow(p, r) * m + shift;
  const std::int64_t lo = ipow(p, r - 1) * m + shift;
  Integer modulus;
  mpz_ui_pow_ui(modulus.get_mpz_t(), static_cast<unsigned long>(p),
                static_cast<unsigned long>(3 * r));
  const Integer diff = apery(hi) - apery(lo);
  Integer rem;
  mpz_fdiv_r(rem.get_mpz_t(), diff.get_mpz_t(), modulus.get_mpz_t());
  return sgn(rem) == 0;
}

}  // namespace qneg
