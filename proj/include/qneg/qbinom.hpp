#pragma once

#include "qneg/laurent.hpp"

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string_view>

namespace qneg {

struct IndexPair {
  std::int64_t n = 0;
  std::int64_t k = 0;
  friend auto operator<=>(const IndexPair&, const IndexPair&) = default;
};

/// The four regions of Z^2; q-binomials vanish exactly on Vanishing.
enum class Region {
  Classical,       // 0 <= k <= n
  NegativeN,       // n < 0 <= k
  DoubleNegative,  // k <= n < 0
  Vanishing,
};

std::string_view to_string(Region r);

/// 1 for k >= 0, -1 for k < 0.
int sgn(std::int64_t k);

Region region(IndexPair p);

/**
 * The q-binomial coefficient for arbitrary integers n, k.
 *
 * Classical entries are built as prod (1 - q^(n-r+j)) / (1 - q^j), j = 1..r,
 * with r = min(k, n - k) and every partial quotient divided exactly. The two
 * negative regions are mapped onto the classical one by the reflection
 * formulas. Values are memoized process-wide; the cache is safe under
 * concurrent use.
 */
LaurentPoly qbinom(IndexPair p);
inline LaurentPoly qbinom(std::int64_t n, std::int64_t k) {
  return qbinom(IndexPair{n, k});
}

/**
 * Independent evaluation by the q-Pascal recursion
 *   C(n,k) = C(n-1,k-1) + q^k C(n-1,k),   (n,k) != (0,0),
 * seeded by C(n,0) = C(n,n) = 1 and the row n = 0.
 *
 * Nonnegative rows are filled upward. Negative rows are filled downward by
 * solving the recursion for the lower row, marching k outward from the two
 * anchors k = 0 and k = n. On rows n <= -2 the middle stretch n < k < 0 is
 * reached from both anchors and the seeds are checked for consistency
 * (std::logic_error otherwise). Not cached.
 */
LaurentPoly qbinom_pascal(IndexPair p);

/// The integer binomial coefficient, i.e. qbinom(p) at q = 1.
Integer bin(IndexPair p);
inline Integer bin(std::int64_t n, std::int64_t k) { return bin(IndexPair{n, k}); }

/// One of the six equivalent forms: qbinom(p) = prefactor * qbinom(index).
struct EquivalentForm {
  LaurentPoly prefactor;
  IndexPair index;
};

/**
 * The six forms generated by the symmetry k -> n - k and the reflection
 * (n, k) -> (k - n - 1, k). Entry 0 is the identity, entries 1..5 are
 *   (n, n-k), (-k-1, n-k), (-k-1, -n-1), (k-n-1, -n-1), (k-n-1, k).
 */
std::array<EquivalentForm, 6> six_forms(IndexPair p);

struct DegreeProfile {
  Exponent valuation;
  Exponent degree;
  friend bool operator==(const DegreeProfile&, const DegreeProfile&) = default;
};

/// Predicted lowest and highest exponents; std::nullopt on Vanishing.
std::optional<DegreeProfile> degree_profile(IndexPair p);

void clear_qbinom_cache();
std::size_t qbinom_cache_size();

}  // namespace qneg
