#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

namespace betaseries {

/// Sorted distinct nonnegative integers, complete below `horizon`, with the
/// number of indices producing each element.
struct SupportSet {
  std::uint64_t horizon = 0;
  std::vector<std::uint64_t> elements;
  std::vector<std::uint32_t> multiplicity;  // parallel to elements

  // Builds from an unsorted list with repeats; entries >= horizon dropped.
  static SupportSet from_values(std::vector<std::uint64_t> values, std::uint64_t horizon);
  // All multiplicities 1.
  static SupportSet from_sorted(std::vector<std::uint64_t> elements, std::uint64_t horizon);

  std::size_t size() const { return elements.size(); }
  bool empty() const { return elements.empty(); }
  bool contains(std::uint64_t n) const;
  std::uint32_t max_multiplicity() const;
  // Same elements, truncated to a smaller horizon.
  SupportSet truncated(std::uint64_t new_horizon) const;

  friend bool operator==(const SupportSet&, const SupportSet&) = default;
};

/// lambda(A; N) = #(A intersect [0, N)). Throws HorizonExceeded if N > horizon.
std::uint64_t lambda_count(const SupportSet& set, std::uint64_t n);

/// theta(R; A) = max{n in A : n < R}. Throws EmptyBelowR / HorizonExceeded.
std::uint64_t theta(std::uint64_t r, const SupportSet& set);

// CSV with header "element,multiplicity".
void write_csv(std::ostream& out, const SupportSet& set);

// Compact run-length binary format:
//   "BSRL" | u8 version=1 | varint horizon | varint run_count |
//   run_count x (varint gap, varint length) | u8 flag |
//   flag != 0: one varint multiplicity per element.
// Gaps are measured from the end of the previous run (first from 0).
void write_binary(std::ostream& out, const SupportSet& set);
SupportSet read_binary(std::istream& in);

}  // namespace betaseries
