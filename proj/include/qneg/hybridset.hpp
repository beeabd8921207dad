#pragma once

#include "qneg/laurent.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qneg {

/// A hybrid set: a finitely supported map from integers to integer
/// multiplicities. Absent elements have multiplicity 0; zeros are never stored.
class HybridSet {
 public:
  using Element = std::int64_t;
  using Multiplicity = std::int64_t;

  HybridSet() = default;

  /// Adds m to the multiplicity of x.
  void add(Element x, Multiplicity m);
  Multiplicity multiplicity(Element x) const;
  /// Sum of all multiplicities; negative for negative sets.
  Multiplicity element_count() const;
  bool empty() const noexcept { return mult_.empty(); }
  const std::map<Element, Multiplicity>& multiplicities() const noexcept { return mult_; }

  /// Parses the "{a, b | c, d}" notation. Throws std::invalid_argument.
  static HybridSet parse(std::string_view text);

  friend bool operator==(const HybridSet&, const HybridSet&) = default;

 private:
  std::map<Element, Multiplicity> mult_;
};

/// Multiplicity-weighted element sum.
std::int64_t sigma(const HybridSet& y);

/// X_n: {0, ..., n-1 | } for n >= 0 and { | -1, ..., n} for n < 0.
HybridSet standard_new_set(std::int64_t n);

/// "{a, b | c, d}": positive part before the bar, negative after, each element
/// repeated by the magnitude of its multiplicity, sorted descending.
/// The empty set renders as "{ | }".
std::string to_string(const HybridSet& y);

/**
 * Streams the k-element subsets of X_n.
 *
 *   0 <= k <= n : ordinary k-subsets of {0, ..., n-1}
 *   n < 0 <= k  : k-multisets over {-1, ..., n}
 *   k <= n < 0  : negative sets containing X_n with |k| elements in total
 *   otherwise   : nothing
 *
 * Subsets are profiles of multiplicity magnitudes over the elements of X_n in
 * descending order; they are emitted in descending lexicographic order of that
 * profile, e.g. {-1,-1|}, {-1,-2|}, {-1,-3|}, {-2,-2|}, ... for (n,k) = (-3,2).
 */
class KSubsetStream {
 public:
  KSubsetStream(std::int64_t n, std::int64_t k);

  std::optional<HybridSet> next();

 private:
  bool advance();

  std::vector<HybridSet::Element> elements_;  // descending
  std::vector<std::int64_t> parts_;           // magnitude minus offset_
  std::int64_t cap_ = 0;                      // per-part bound, < 0 if none
  std::int64_t offset_ = 0;
  int sign_ = 1;
  bool exhausted_ = true;
  bool started_ = false;
};

std::vector<HybridSet> k_subsets(std::int64_t n, std::int64_t k);

/// Number of k-element subsets of X_n, counted from the stream.
std::uint64_t subset_count(std::int64_t n, std::int64_t k);

/// epsilon * sum over k-subsets Y of q^(sigma(Y) - k(k-1)/2).
LaurentPoly qbinom_via_subsets(std::int64_t n, std::int64_t k);

}  // namespace qneg
