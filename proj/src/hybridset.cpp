#include "qneg/hybridset.hpp"

#include "qneg/qbinom.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>
#include <stdexcept>

namespace qneg {

void HybridSet::add(Element x, Multiplicity m) {
  if (m == 0) return;
  auto [it, inserted] = mult_.try_emplace(x, m);
  if (!inserted) {
    it->second += m;
    if (it->second == 0) mult_.erase(it);
  }
}

HybridSet::Multiplicity HybridSet::multiplicity(Element x) const {
  auto it = mult_.find(x);
  return it == mult_.end() ? 0 : it->second;
}

HybridSet::Multiplicity HybridSet::element_count() const {
  Multiplicity total = 0;
  for (const auto& [x, m] : mult_) total += m;
  return total;
}

namespace {

std::vector<std::int64_t> parse_elements(std::string_view part) {
  std::vector<std::int64_t> out;
  std::size_t pos = 0;
  while (pos < part.size()) {
    while (pos < part.size() && (std::isspace(static_cast<unsigned char>(part[pos])) ||
                                 part[pos] == ',')) {
      ++pos;
    }
    if (pos == part.size()) break;
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(part.data() + pos, part.data() + part.size(), v);
    if (ec != std::errc{}) {
      throw std::invalid_argument("hybrid set: bad element in '" + std::string(part) + "'");
    }
    out.push_back(v);
    pos = static_cast<std::size_t>(ptr - part.data());
  }
  return out;
}

}  // namespace

HybridSet HybridSet::parse(std::string_view text) {
  const auto open = text.find('{');
  const auto close = text.rfind('}');
  const auto bar = text.find('|');
  if (open == std::string_view::npos || close == std::string_view::npos ||
      bar == std::string_view::npos || !(open < bar && bar < close)) {
    throw std::invalid_argument("hybrid set must look like {a, b | c, d}");
  }
  HybridSet out;
  for (auto x : parse_elements(text.substr(open + 1, bar - open - 1))) out.add(x, 1);
  for (auto x : parse_elements(text.substr(bar + 1, close - bar - 1))) out.add(x, -1);
  return out;
}

std::int64_t sigma(const HybridSet& y) {
  std::int64_t s = 0;
  for (const auto& [x, m] : y.multiplicities()) s += m * x;
  return s;
}

HybridSet standard_new_set(std::int64_t n) {
  HybridSet out;
  if (n >= 0) {
    for (std::int64_t x = 0; x < n; ++x) out.add(x, 1);
  } else {
    for (std::int64_t x = -1; x >= n; --x) out.add(x, -1);
  }
  return out;
}

std::string to_string(const HybridSet& y) {
  std::vector<std::int64_t> pos;
  std::vector<std::int64_t> neg;
  for (auto it = y.multiplicities().rbegin(); it != y.multiplicities().rend(); ++it) {
    auto& dst = it->second > 0 ? pos : neg;
    for (std::int64_t i = 0; i < std::abs(it->second); ++i) dst.push_back(it->first);
  }
  std::ostringstream os;
  const auto list = [&os](const std::vector<std::int64_t>& v) {
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
  };
  os << '{';
  list(pos);
  os << " | ";
  list(neg);
  os << '}';
  return os.str();
}

KSubsetStream::KSubsetStream(std::int64_t n, std::int64_t k) {
  std::int64_t total = 0;
  switch (region({n, k})) {
    case Region::Classical:
      for (std::int64_t x = n - 1; x >= 0; --x) elements_.push_back(x);
      cap_ = 1;
      total = k;
      break;
    case Region::NegativeN:
      for (std::int64_t x = -1; x >= n; --x) elements_.push_back(x);
      cap_ = -1;
      total = k;
      break;
    case Region::DoubleNegative:
      // every element of X_n appears at least once, leaving |k| - |n| to place
      for (std::int64_t x = -1; x >= n; --x) elements_.push_back(x);
      cap_ = -1;
      offset_ = 1;
      sign_ = -1;
      total = n - k;
      break;
    case Region::Vanishing:
      return;
  }
  // greedy fill from the left is the lexicographically largest profile
  parts_.assign(elements_.size(), 0);
  std::int64_t left = total;
  for (auto& p : parts_) {
    p = cap_ < 0 ? left : std::min(cap_, left);
    left -= p;
  }
  exhausted_ = left != 0;
}

bool KSubsetStream::advance() {
  // Find the rightmost part that can give one unit to the suffix after it,
  // then refill that suffix greedily.
  const std::size_t len = parts_.size();
  std::int64_t suffix = 0;
  std::int64_t room = 0;
  for (std::size_t i = len; i-- > 0;) {
    if (parts_[i] > 0 && i + 1 < len && (cap_ < 0 || room > 0)) {
      --parts_[i];
      std::int64_t left = suffix + 1;
      for (std::size_t j = i + 1; j < len; ++j) {
        parts_[j] = cap_ < 0 ? left : std::min(cap_, left);
        left -= parts_[j];
      }
      return true;
    }
    suffix += parts_[i];
    if (cap_ >= 0) room += cap_ - parts_[i];
  }
  return false;
}

std::optional<HybridSet> KSubsetStream::next() {
  if (exhausted_) return std::nullopt;
  if (started_ && !advance()) {
    exhausted_ = true;
    return std::nullopt;
  }
  started_ = true;
  HybridSet out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    out.add(elements_[i], sign_ * (parts_[i] + offset_));
  }
  return out;
}

std::vector<HybridSet> k_subsets(std::int64_t n, std::int64_t k) {
  std::vector<HybridSet> out;
  KSubsetStream stream(n, k);
  while (auto y = stream.next()) out.push_back(*std::move(y));
  return out;
}

std::uint64_t subset_count(std::int64_t n, std::int64_t k) {
  std::uint64_t count = 0;
  KSubsetStream stream(n, k);
  while (stream.next()) ++count;
  return count;
}

LaurentPoly qbinom_via_subsets(std::int64_t n, std::int64_t k) {
  int epsilon = 1;
  switch (region({n, k})) {
    case Region::Classical: break;
    case Region::NegativeN: epsilon = (k % 2 == 0) ? 1 : -1; break;
    case Region::DoubleNegative: epsilon = ((n - k) % 2 == 0) ? 1 : -1; break;
    case Region::Vanishing: return {};
  }
  const Exponent offset = k * (k - 1) / 2;
  // histogram of exponents, then one canonical polynomial
  std::map<Exponent, Integer> hist;
  KSubsetStream stream(n, k);
  while (auto y = stream.next()) hist[sigma(*y) - offset] += epsilon;
  if (hist.empty()) return {};
  const Exponent lo = hist.begin()->first;
  std::vector<Integer> coeffs(static_cast<std::size_t>(hist.rbegin()->first - lo + 1));
  for (auto& [e, c] : hist) coeffs[static_cast<std::size_t>(e - lo)] = c;
  return LaurentPoly(lo, std::move(coeffs));
}

}  // namespace qneg
