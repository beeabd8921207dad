#pragma once

#include "qneg/laurent.hpp"

#include <cstdint>
#include <string_view>

namespace qneg {

/// A(n) = sum_k bin(n,k)^2 bin(n+k,k)^2 for any integer n. Only
/// k in [0, n] (n >= 0) or [0, -n-1] (n < 0) contribute; two terms past
/// each end of that window are checked to vanish (std::logic_error if not).
Integer apery(std::int64_t n);

/// A(-n) = A(n-1).
bool verify_apery_symmetry(std::int64_t n);

enum class AperyVariant {
  Beukers,  // A(p^r m - 1) = A(p^(r-1) m - 1) mod p^(3r)
  Coster,   // A(p^r m)     = A(p^(r-1) m)     mod p^(3r)
};

std::string_view to_string(AperyVariant v);

/// Evaluates the selected supercongruence with exact integers. p must be a
/// prime >= 5 and r >= 1 (std::invalid_argument otherwise). m may be any
/// integer, so negated indices can be checked too.
bool verify_apery_congruence(std::int64_t p, std::int64_t r, std::int64_t m,
                             AperyVariant variant);

}  // namespace qneg
