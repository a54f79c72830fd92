#include "betaseries/support_set.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <string>

#include "betaseries/error.hpp"

namespace betaseries {

SupportSet SupportSet::from_values(std::vector<std::uint64_t> values, std::uint64_t horizon) {
  std::sort(values.begin(), values.end());
  SupportSet s;
  s.horizon = horizon;
  for (auto v : values) {
    if (v >= horizon) break;
    if (!s.elements.empty() && s.elements.back() == v) {
      ++s.multiplicity.back();
    } else {
      s.elements.push_back(v);
      s.multiplicity.push_back(1);
    }
  }
  return s;
}

SupportSet SupportSet::from_sorted(std::vector<std::uint64_t> elements, std::uint64_t horizon) {
  SupportSet s;
  s.horizon = horizon;
  s.elements = std::move(elements);
  s.multiplicity.assign(s.elements.size(), 1);
  return s;
}

bool SupportSet::contains(std::uint64_t n) const {
  return std::binary_search(elements.begin(), elements.end(), n);
}

std::uint32_t SupportSet::max_multiplicity() const {
  std::uint32_t m = 0;
  for (auto c : multiplicity) m = std::max(m, c);
  return m;
}

SupportSet SupportSet::truncated(std::uint64_t new_horizon) const {
  if (new_horizon > horizon)
    fail(ErrorCode::horizon_exceeded, "cannot extend a support set past its horizon");
  SupportSet s;
  s.horizon = new_horizon;
  const auto end = std::lower_bound(elements.begin(), elements.end(), new_horizon);
  const auto n = static_cast<std::size_t>(end - elements.begin());
  s.elements.assign(elements.begin(), end);
  s.multiplicity.assign(multiplicity.begin(), multiplicity.begin() + static_cast<long>(n));
  return s;
}

std::uint64_t lambda_count(const SupportSet& set, std::uint64_t n) {
  if (n > set.horizon)
    fail(ErrorCode::horizon_exceeded,
         "N=" + std::to_string(n) + " exceeds horizon " + std::to_string(set.horizon));
  return static_cast<std::uint64_t>(std::lower_bound(set.elements.begin(), set.elements.end(), n) -
                                    set.elements.begin());
}

std::uint64_t theta(std::uint64_t r, const SupportSet& set) {
  if (r > set.horizon)
    fail(ErrorCode::horizon_exceeded,
         "R=" + std::to_string(r) + " exceeds horizon " + std::to_string(set.horizon));
  const auto it = std::lower_bound(set.elements.begin(), set.elements.end(), r);
  if (it == set.elements.begin())
    fail(ErrorCode::empty_below_r, "no element below R=" + std::to_string(r));
  return *std::prev(it);
}

void write_csv(std::ostream& out, const SupportSet& set) {
  out << "element,multiplicity\n";
  for (std::size_t i = 0; i < set.elements.size(); ++i)
    out << set.elements[i] << ',' << set.multiplicity[i] << '\n';
}

namespace {

void put_varint(std::ostream& out, std::uint64_t v) {
  while (v >= 0x80) {
    out.put(static_cast<char>((v & 0x7f) | 0x80));
    v >>= 7;
  }
  out.put(static_cast<char>(v));
}

std::uint64_t get_varint(std::istream& in) {
  std::uint64_t v = 0;
  for (int shift = 0; shift < 64; shift += 7) {
    const int c = in.get();
    if (c == std::char_traits<char>::eof()) fail(ErrorCode::io_error, "truncated run-length data");
    v |= static_cast<std::uint64_t>(c & 0x7f) << shift;
    if (!(c & 0x80)) return v;
  }
  fail(ErrorCode::io_error, "varint too long");
}

}  // namespace

void write_binary(std::ostream& out, const SupportSet& set) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> runs;  // (start, length)
  for (auto e : set.elements) {
    if (!runs.empty() && runs.back().first + runs.back().second == e)
      ++runs.back().second;
    else
      runs.emplace_back(e, 1);
  }
  out.write("BSRL", 4);
  out.put(1);
  put_varint(out, set.horizon);
  put_varint(out, runs.size());
  std::uint64_t cursor = 0;
  for (const auto& [start, length] : runs) {
    put_varint(out, start - cursor);
    put_varint(out, length);
    cursor = start + length;
  }
  const bool plain = set.max_multiplicity() <= 1;
  out.put(plain ? 0 : 1);
  if (!plain)
    for (auto m : set.multiplicity) put_varint(out, m);
}

SupportSet read_binary(std::istream& in) {
  char magic[4];
  if (!in.read(magic, 4) || std::string(magic, 4) != "BSRL")
    fail(ErrorCode::io_error, "not a run-length support file");
  if (in.get() != 1) fail(ErrorCode::io_error, "unsupported run-length format version");
  SupportSet s;
  s.horizon = get_varint(in);
  const std::uint64_t runs = get_varint(in);
  std::uint64_t cursor = 0;
  for (std::uint64_t i = 0; i < runs; ++i) {
    const std::uint64_t start = cursor + get_varint(in);
    const std::uint64_t length = get_varint(in);
    for (std::uint64_t j = 0; j < length; ++j) s.elements.push_back(start + j);
    cursor = start + length;
  }
  const int flag = in.get();
  if (flag == std::char_traits<char>::eof()) fail(ErrorCode::io_error, "truncated run-length data");
  if (flag == 0) {
    s.multiplicity.assign(s.elements.size(), 1);
  } else {
    for (std::size_t i = 0; i < s.elements.size(); ++i)
      s.multiplicity.push_back(static_cast<std::uint32_t>(get_varint(in)));
  }
  if (!s.elements.empty() && s.elements.back() >= s.horizon)
    fail(ErrorCode::io_error, "run-length data exceeds its horizon");
  return s;
}

}  // namespace betaseries
