#pragma once

#include "qneg/laurent.hpp"

#include <cstdint>
#include <vector>

namespace qneg {

/// n = low + high * base with low in [0, base).
struct DigitSplit {
  std::int64_t base;
  std::int64_t low;
  std::int64_t high;
};

/// Base-p digits of any integer. Negative integers have infinitely many
/// digits, all but finitely many equal to base - 1.
struct PadicDigits {
  std::int64_t base;
  std::vector<std::int64_t> preperiodic;
  std::int64_t eventual;  // 0 for n >= 0, base - 1 for n < 0
};

/// Floor division by base. Throws std::invalid_argument for base < 2.
DigitSplit digit_split(std::int64_t n, std::int64_t base);

PadicDigits padic_digits(std::int64_t n, std::int64_t base);

/// Deterministic trial division.
bool is_prime(std::int64_t p);

/// prod_i bin(n_i, k_i) mod p over the aligned base-p digits of n and k,
/// a value in [0, p). Throws std::invalid_argument if p is not prime.
std::int64_t lucas_product(std::int64_t n, std::int64_t k, std::int64_t p);

/// bin(n,k) = bin(n0,k0) bin(n',k') mod p with n = n0 + n' p, k = k0 + k' p.
bool verify_lucas(std::int64_t n, std::int64_t k, std::int64_t p);

/// qbinom(n0, k0) * bin(n', k') for the base-m splits of n and k, m >= 2.
LaurentPoly q_lucas_rhs(std::int64_t n, std::int64_t k, std::int64_t m);

/// qbinom(n,k) = q_lucas_rhs(n,k,m) modulo phi_m. m need not be prime.
bool verify_q_lucas(std::int64_t n, std::int64_t k, std::int64_t m);

}  // namespace qneg
