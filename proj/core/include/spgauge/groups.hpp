#pragma once

#include "spgauge/arith.hpp"

namespace spgauge {

using arith::BigInt;

/// Finite cyclic group Z/N with N >= 1. Only the order is modelled.
class CyclicGroup {
 public:
  /// Throws DomainError unless order >= 1.
  explicit CyclicGroup(BigInt order);

  [[nodiscard]] const BigInt& order() const { return order_; }

  friend bool operator==(const CyclicGroup&, const CyclicGroup&) = default;

 private:
  BigInt order_;
};

/// The subgroup gZ of Z, stored by its nonnegative generator. g = 0 is the
/// zero subgroup.
class ZSubgroup {
 public:
  /// The sign of `generator` is discarded.
  explicit ZSubgroup(const BigInt& generator);

  [[nodiscard]] const BigInt& generator() const { return generator_; }
  [[nodiscard]] bool is_zero() const { return generator_ == 0; }
  [[nodiscard]] bool contains(const BigInt& value) const;
  /// True when this subgroup lies inside `other`.
  [[nodiscard]] bool is_subgroup_of(const ZSubgroup& other) const;

  /// Z / gZ. Throws ConsistencyError for the zero subgroup (infinite quotient).
  [[nodiscard]] CyclicGroup cokernel() const;

  friend bool operator==(const ZSubgroup&, const ZSubgroup&) = default;

 private:
  BigInt generator_;
};

}  // namespace spgauge
