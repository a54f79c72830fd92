#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "betaseries/error.hpp"
#include "betaseries/rational.hpp"
#include "betaseries/support_set.hpp"

namespace betaseries {

/// Dense bit vector over [0, size).
class Bitset {
 public:
  explicit Bitset(std::uint64_t size);
  static Bitset from_set(const SupportSet& set, std::uint64_t size);

  std::uint64_t size() const { return size_; }
  bool test(std::uint64_t i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }
  void set(std::uint64_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  // *this |= other << shift, truncated to size().
  void or_shifted(const Bitset& other, std::uint64_t shift);
  std::uint64_t count() const;
  std::vector<std::uint64_t> to_vector() const;

 private:
  std::uint64_t size_;
  std::vector<std::uint64_t> words_;
};

/// A + B truncated below `horizon`. Picks a dense bitset or a sparse sorted
/// merge depending on operand sizes; the result is the same either way.
SupportSet minkowski_sum(const SupportSet& a, const SupportSet& b, std::uint64_t horizon);

/// kA = {a_1 + ... + a_k}, {0} for k = 0, truncated below `horizon`.
SupportSet k_fold_sum(const SupportSet& a, unsigned k, std::uint64_t horizon);

struct SumsetOperand {
  const SupportSet* set;
  unsigned k;
};

/// sum_h k_h S_h below `horizon`. InvalidArgument if there is no operand or
/// an operand's horizon is smaller than `horizon`.
SupportSet weighted_sum(std::span<const SumsetOperand> operands, std::uint64_t horizon);

struct GapPoint {
  std::uint64_t r = 0;
  std::optional<std::uint64_t> gap;  // R - theta(R; set)
  std::optional<ErrorCode> error;
};

/// Exact gaps R - theta(R) at each sample point, with per-point errors.
std::vector<GapPoint> gap_profile(const SupportSet& set, std::span<const std::uint64_t> samples);

/// Largest gap R' - theta(R') over R' in (previous sample, R], for each
/// sample R (the first window starts at the set's smallest element).
/// Smooths the sawtooth of pointwise gaps for slope fits.
std::vector<GapPoint> gap_envelope(const SupportSet& set, std::span<const std::uint64_t> samples);

/// floor(r0 * c^j) for j = 0, 1, ... while <= r_max, strictly increasing.
std::vector<std::uint64_t> geometric_grid(std::uint64_t r0, const Rational& c, std::uint64_t r_max);

}  // namespace betaseries
