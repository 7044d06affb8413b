#include <utility>

#include "spgauge/errors.hpp"
#include "spgauge/groups.hpp"

namespace spgauge {

CyclicGroup::CyclicGroup(BigInt order) : order_(std::move(order)) {
  if (order_ < 1) {
    throw DomainError("cyclic group order must be >= 1, got " + arith::to_string(order_));
  }
}

ZSubgroup::ZSubgroup(const BigInt& generator) : generator_(abs(generator)) {}

bool ZSubgroup::contains(const BigInt& value) const {
  if (generator_ == 0) {
    return value == 0;
  }
  return mpz_divisible_p(value.get_mpz_t(), generator_.get_mpz_t()) != 0;
}

bool ZSubgroup::is_subgroup_of(const ZSubgroup& other) const { return other.contains(generator_); }

CyclicGroup ZSubgroup::cokernel() const {
  if (generator_ == 0) {
    throw ConsistencyError("cokernel of the zero subgroup is infinite");
  }
  return CyclicGroup(generator_);
}

}  // namespace spgauge
