#include "betaseries/sumset.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace betaseries {

Bitset::Bitset(std::uint64_t size) : size_(size), words_((size + 63) / 64, 0) {}

Bitset Bitset::from_set(const SupportSet& set, std::uint64_t size) {
  Bitset b(size);
  for (auto e : set.elements) {
    if (e >= size) break;
    b.set(e);
  }
  return b;
}

void Bitset::or_shifted(const Bitset& other, std::uint64_t shift) {
  if (shift >= size_) return;
  const std::uint64_t word_shift = shift >> 6;
  const unsigned bit_shift = shift & 63;
  const std::size_t n = words_.size();
  const std::size_t m = other.words_.size();
  if (bit_shift == 0) {
    for (std::size_t i = word_shift; i < n && i - word_shift < m; ++i) words_[i] |= other.words_[i - word_shift];
  } else {
    for (std::size_t i = word_shift; i < n; ++i) {
      const std::size_t j = i - word_shift;
      std::uint64_t w = j < m ? other.words_[j] << bit_shift : 0;
      if (j >= 1 && j - 1 < m) w |= other.words_[j - 1] >> (64 - bit_shift);
      words_[i] |= w;
    }
  }
  // Clear bits past size_.
  if (size_ & 63) words_.back() &= (std::uint64_t{1} << (size_ & 63)) - 1;
}

std::uint64_t Bitset::count() const {
  std::uint64_t c = 0;
  for (auto w : words_) c += static_cast<std::uint64_t>(std::popcount(w));
  return c;
}

std::vector<std::uint64_t> Bitset::to_vector() const {
  std::vector<std::uint64_t> out;
  out.reserve(count());
  for (std::size_t i = 0; i < words_.size(); ++i) {
    std::uint64_t w = words_[i];
    while (w) {
      out.push_back(i * 64 + static_cast<std::uint64_t>(std::countr_zero(w)));
      w &= w - 1;
    }
  }
  return out;
}

namespace {

void check_horizon(const SupportSet& s, std::uint64_t horizon) {
  if (s.horizon < horizon)
    throw Error(ErrorCode::invalid_argument, "operand horizon " + std::to_string(s.horizon) +
                                                 " is below the requested horizon " + std::to_string(horizon));
}

}  // namespace

SupportSet minkowski_sum(const SupportSet& a, const SupportSet& b, std::uint64_t horizon) {
  check_horizon(a, horizon);
  check_horizon(b, horizon);
  const SupportSet& small = a.size() <= b.size() ? a : b;
  const SupportSet& large = a.size() <= b.size() ? b : a;
  // Sparse path when the pair count is below the bitset's word count.
  const double pairs = static_cast<double>(small.size()) * static_cast<double>(large.size());
  if (pairs <= static_cast<double>(horizon) / 64.0 + 1024.0) {
    std::vector<std::uint64_t> sums;
    for (auto x : small.elements) {
      if (x >= horizon) break;
      for (auto y : large.elements) {
        if (y >= horizon - x) break;
        sums.push_back(x + y);
      }
    }
    std::sort(sums.begin(), sums.end());
    sums.erase(std::unique(sums.begin(), sums.end()), sums.end());
    return SupportSet::from_sorted(std::move(sums), horizon);
  }
  const Bitset base = Bitset::from_set(large, horizon);
  Bitset result(horizon);
  for (auto x : small.elements) {
    if (x >= horizon) break;
    result.or_shifted(base, x);
  }
  return SupportSet::from_sorted(result.to_vector(), horizon);
}

SupportSet k_fold_sum(const SupportSet& a, unsigned k, std::uint64_t horizon) {
  check_horizon(a, horizon);
  SupportSet result = SupportSet::from_sorted({0}, horizon);
  if (horizon == 0) result.elements.clear(), result.multiplicity.clear();
  const SupportSet plain = SupportSet::from_sorted(a.truncated(horizon).elements, horizon);
  for (unsigned i = 0; i < k; ++i) result = minkowski_sum(result, plain, horizon);
  return result;
}

SupportSet weighted_sum(std::span<const SumsetOperand> operands, std::uint64_t horizon) {
  if (operands.empty()) throw Error(ErrorCode::invalid_argument, "weighted sum needs at least one operand");
  for (const auto& op : operands) check_horizon(*op.set, horizon);
  SupportSet result = SupportSet::from_sorted({0}, horizon);
  for (const auto& op : operands) {
    if (op.k == 0) continue;
    result = minkowski_sum(result, k_fold_sum(*op.set, op.k, horizon), horizon);
  }
  return result;
}

std::vector<GapPoint> gap_profile(const SupportSet& set, std::span<const std::uint64_t> samples) {
  std::vector<GapPoint> out;
  out.reserve(samples.size());
  for (auto r : samples) {
    GapPoint p;
    p.r = r;
    try {
      p.gap = r - theta(r, set);
    } catch (const Error& e) {
      p.error = e.code();
    }
    out.push_back(p);
  }
  return out;
}

std::vector<GapPoint> gap_envelope(const SupportSet& set, std::span<const std::uint64_t> samples) {
  std::vector<GapPoint> out;
  out.reserve(samples.size());
  std::uint64_t window_start = set.empty() ? 0 : set.elements.front();
  for (auto r : samples) {
    GapPoint p;
    p.r = r;
    try {
      std::uint64_t best = r - theta(r, set);
      // Elements e_{i+1} in (window_start, r) give the gap e_{i+1} - e_i.
      auto it = std::upper_bound(set.elements.begin(), set.elements.end(), window_start);
      for (; it != set.elements.end() && *it < r; ++it)
        if (it != set.elements.begin()) best = std::max(best, *it - *std::prev(it));
      p.gap = best;
    } catch (const Error& e) {
      p.error = e.code();
    }
    window_start = std::max(window_start, r);
    out.push_back(p);
  }
  return out;
}

std::vector<std::uint64_t> geometric_grid(std::uint64_t r0, const Rational& c, std::uint64_t r_max) {
  if (c <= 1) throw Error(ErrorCode::invalid_argument, "grid ratio must exceed 1");
  if (r0 < 1) throw Error(ErrorCode::invalid_argument, "grid start must be >= 1");
  std::vector<std::uint64_t> grid;
  Rational x(std::to_string(r0));
  const Integer limit(std::to_string(r_max));
  for (;;) {
    const Integer f = floor_of(x);
    if (f > limit) break;
    const std::uint64_t v = f.get_ui();
    if (grid.empty() || v > grid.back()) grid.push_back(v);
    x *= c;
  }
  return grid;
}

}  // namespace betaseries
