#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <string_view>
#include <vector>

#include "betaseries/enclosure.hpp"
#include "betaseries/polynomial.hpp"

namespace betaseries {

enum class BaseClass { pisot, salem, neither };

std::string_view base_class_name(BaseClass c);

struct PrecisionConfig {
  unsigned long start_bits = 64;
  unsigned long max_bits = 16384;
};

// Accepts a JSON array of integers or decimal integer strings, ascending
// degree: "[-1,-1,1]" or "[\"-1\",\"-1\",\"1\"]".
Polynomial parse_polynomial(std::string_view json_text);

// Throws NotMonic / InvalidPolynomial / Reducible.
void validate_base_polynomial(const Polynomial& p);

/// Pisot / Salem / Neither for a monic irreducible polynomial. Throws
/// NoRootAboveOne when no real root exceeds 1.
BaseClass classify_base(const Polynomial& p, const PrecisionConfig& config = {});

/// A Pisot or Salem number given by its minimal polynomial. Cheap to copy:
/// all state is shared and immutable apart from an internal enclosure cache.
class AlgebraicBase {
 public:
  // Throws the classify_base errors, and InvalidPolynomial for "Neither".
  static AlgebraicBase create(const Polynomial& min_poly, const PrecisionConfig& config = {});

  const Polynomial& min_poly() const { return data_->poly; }
  int degree() const { return data_->poly.degree(); }
  BaseClass classification() const { return data_->cls; }
  const PrecisionConfig& precision() const { return data_->config; }

  // Enclosure of beta with width <= 2^-bits (bits rounded up to the
  // precision schedule). Same request, same answer.
  RealEnclosure beta_enclosure(unsigned long bits) const;
  // The isolating interval found at construction.
  const RealEnclosure& isolating_interval() const { return data_->isolating; }
  // Certified disks for the other roots.
  const std::vector<RootDisk>& conjugate_disks() const { return data_->conjugates; }
  const RootDisk& beta_disk() const { return data_->beta_disk; }

  // floor(beta), exact.
  Integer floor_beta() const;

  bool operator==(const AlgebraicBase& other) const {
    return data_ == other.data_ || data_->poly == other.data_->poly;
  }

 private:
  struct Data {
    Polynomial poly;
    BaseClass cls = BaseClass::neither;
    PrecisionConfig config;
    RealEnclosure isolating;
    std::vector<RootDisk> conjugates;
    RootDisk beta_disk;
    mutable std::mutex mutex;
    mutable std::map<unsigned long, RealEnclosure> cache;
  };
  explicit AlgebraicBase(std::shared_ptr<const Data> data) : data_(std::move(data)) {}
  std::shared_ptr<const Data> data_;
};

}  // namespace betaseries
