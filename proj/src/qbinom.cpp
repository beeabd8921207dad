#include "qneg/qbinom.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <unordered_map>

namespace qneg {

namespace {

struct IndexPairHash {
  std::size_t operator()(const IndexPair& p) const noexcept {
    const auto h1 = std::hash<std::int64_t>{}(p.n);
    const auto h2 = std::hash<std::int64_t>{}(p.k);
    return h1 ^ (h2 + 0x9e3779b97f4a7c15ULL + (h1 << 6) + (h1 >> 2));
  }
};

class QbinomCache {
 public:
  std::optional<LaurentPoly> find(IndexPair p) const {
    std::shared_lock lock(mutex_);
    if (auto it = map_.find(p); it != map_.end()) return it->second;
    return std::nullopt;
  }
  void insert(IndexPair p, const LaurentPoly& v) {
    std::unique_lock lock(mutex_);
    map_.emplace(p, v);
  }
  void clear() {
    std::unique_lock lock(mutex_);
    map_.clear();
  }
  std::size_t size() const {
    std::shared_lock lock(mutex_);
    return map_.size();
  }

 private:
  mutable std::shared_mutex mutex_;
  std::unordered_map<IndexPair, LaurentPoly, IndexPairHash> map_;
};

QbinomCache& cache() {
  static QbinomCache instance;
  return instance;
}

// v / 2 for a value that is even by construction.
Exponent half_exact(Exponent v) {
  if (v % 2 != 0) throw std::logic_error("odd q-exponent numerator");
  return v / 2;
}

int parity_sign(std::int64_t e) { return (e % 2 == 0) ? 1 : -1; }

// k(2n-k+1)/2, the exponent in the reflection (n, k) -> (k-n-1, k).
Exponent reflection_exponent(std::int64_t n, std::int64_t k) {
  return half_exact(k * (2 * n - k + 1));
}

// (n(n+1) - k(k+1))/2, the exponent in the reflection to (-k-1, -n-1).
Exponent double_reflection_exponent(std::int64_t n, std::int64_t k) {
  return half_exact(n * (n + 1) - k * (k + 1));
}

LaurentPoly classical_product(std::int64_t n, std::int64_t k) {
  const std::int64_t r = std::min(k, n - k);
  LaurentPoly acc = LaurentPoly::one();
  for (std::int64_t j = 1; j <= r; ++j) {
    acc *= one_minus_qpow(n - r + j);
    acc = exact_quotient(acc, one_minus_qpow(j));
  }
  return acc;
}

LaurentPoly compute(IndexPair p) {
  const auto [n, k] = p;
  switch (region(p)) {
    case Region::Classical:
      return classical_product(n, k);
    case Region::NegativeN:
      return signed_qpow(parity_sign(k), reflection_exponent(n, k)) *
             qbinom(k - n - 1, k);
    case Region::DoubleNegative:
      return signed_qpow(parity_sign(n - k), double_reflection_exponent(n, k)) *
             qbinom(-k - 1, -n - 1);
    case Region::Vanishing:
      break;
  }
  return {};
}

Integer classical_bin(std::int64_t n, std::int64_t k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return r;
}

// One step of the downward fill: given row r+1 over [klo, khi], produce row r.
std::vector<LaurentPoly> pascal_row_below(const std::vector<LaurentPoly>& upper,
                                          std::int64_t r, std::int64_t klo,
                                          std::int64_t khi) {
  const auto at = [klo](std::int64_t k) { return static_cast<std::size_t>(k - klo); };
  std::vector<LaurentPoly> row(upper.size());
  const std::int64_t upper_n = r + 1;

  // C(r,k) = q^-k (C(r+1,k) - C(r,k-1)), k = 1, 2, ... from C(r,0) = 1
  row[at(0)] = LaurentPoly::one();
  for (std::int64_t k = 1; k <= khi; ++k) {
    row[at(k)] = shift(upper[at(k)] - row[at(k - 1)], -k);
  }
  // C(r,k-1) = C(r+1,k) - q^k C(r,k), k = r, r-1, ... from C(r,r) = 1
  row[at(r)] = LaurentPoly::one();
  for (std::int64_t k = r; k > klo; --k) {
    row[at(k - 1)] = upper[at(k)] - shift(row[at(k)], k);
  }
  // Same recursion from the k = 0 anchor through r < k < 0. At upper_n = 0
  // this would use the excluded pair (0,0); the stretch is empty there.
  if (upper_n != 0) {
    LaurentPoly walk = LaurentPoly::one();
    for (std::int64_t k = 0; k > r; --k) {
      LaurentPoly next = upper[at(k)] - shift(walk, k);
      if (k - 1 > r) row[at(k - 1)] = next;
      walk = std::move(next);
    }
    if (walk != LaurentPoly::one()) {
      throw std::logic_error("q-Pascal seeds C(n,0) and C(n,n) disagree");
    }
  }
  return row;
}

}  // namespace

std::string_view to_string(Region r) {
  switch (r) {
    case Region::Classical: return "classical";
    case Region::NegativeN: return "negative-n";
    case Region::DoubleNegative: return "double-negative";
    case Region::Vanishing: return "vanishing";
  }
  return "?";
}

int sgn(std::int64_t k) { return k >= 0 ? 1 : -1; }

Region region(IndexPair p) {
  const auto [n, k] = p;
  if (0 <= k && k <= n) return Region::Classical;
  if (n < 0 && 0 <= k) return Region::NegativeN;
  if (k <= n && n < 0) return Region::DoubleNegative;
  return Region::Vanishing;
}

LaurentPoly qbinom(IndexPair p) {
  if (region(p) == Region::Vanishing) return {};
  if (auto hit = cache().find(p)) return *std::move(hit);
  LaurentPoly v = compute(p);
  cache().insert(p, v);
  return v;
}

LaurentPoly qbinom_pascal(IndexPair p) {
  const auto [n, k] = p;
  const std::int64_t klo = std::min({k, n, std::int64_t{0}});
  const std::int64_t khi = std::max({k, n, std::int64_t{0}});
  const auto at = [klo](std::int64_t j) { return static_cast<std::size_t>(j - klo); };

  std::vector<LaurentPoly> row(static_cast<std::size_t>(khi - klo + 1));
  row[at(0)] = LaurentPoly::one();  // row n = 0

  if (n >= 0) {
    for (std::int64_t r = 1; r <= n; ++r) {
      std::vector<LaurentPoly> next(row.size());
      for (std::int64_t j = std::max<std::int64_t>(klo, 1); j <= khi; ++j) {
        next[at(j)] = row[at(j - 1)] + shift(row[at(j)], j);
      }
      next[at(0)] = LaurentPoly::one();
      next[at(r)] = LaurentPoly::one();
      row = std::move(next);
    }
  } else {
    for (std::int64_t r = -1; r >= n; --r) row = pascal_row_below(row, r, klo, khi);
  }
  return row[at(k)];
}

Integer bin(IndexPair p) {
  const auto [n, k] = p;
  switch (region(p)) {
    case Region::Classical:
      return classical_bin(n, k);
    case Region::NegativeN:
      return parity_sign(k) * classical_bin(k - n - 1, k);
    case Region::DoubleNegative:
      return parity_sign(n - k) * classical_bin(-k - 1, -n - 1);
    case Region::Vanishing:
      break;
  }
  return 0;
}

std::array<EquivalentForm, 6> six_forms(IndexPair p) {
  const auto [n, k] = p;
  const LaurentPoly one = LaurentPoly::one();
  const LaurentPoly swap_pre = signed_qpow(parity_sign(n - k) * sgn(n - k),
                                           double_reflection_exponent(n, k));
  const LaurentPoly neg_pre =
      signed_qpow(parity_sign(k) * sgn(k), reflection_exponent(n, k));
  return {{
      {one, {n, k}},
      {one, {n, n - k}},
      {swap_pre, {-k - 1, n - k}},
      {swap_pre, {-k - 1, -n - 1}},
      {neg_pre, {k - n - 1, -n - 1}},
      {neg_pre, {k - n - 1, k}},
  }};
}

std::optional<DegreeProfile> degree_profile(IndexPair p) {
  const auto [n, k] = p;
  switch (region(p)) {
    case Region::Classical:
      return DegreeProfile{0, k * (n - k)};
    case Region::NegativeN: {
      const Exponent v = reflection_exponent(n, k);
      return DegreeProfile{v, v + k * (-n - 1)};
    }
    case Region::DoubleNegative: {
      const Exponent v = double_reflection_exponent(n, k);
      return DegreeProfile{v, v + (-n - 1) * (n - k)};
    }
    case Region::Vanishing:
      break;
  }
  return std::nullopt;
}

void clear_qbinom_cache() { cache().clear(); }
std::size_t qbinom_cache_size() { return cache().size(); }

}  // namespace qneg
