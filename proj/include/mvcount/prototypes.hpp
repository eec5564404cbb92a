#pragma once

#include <cstdint>
#include <vector>

#include "mvcount/rational.hpp"

namespace mvcount::prototypes {

struct Prototype {
  std::int64_t a;
  std::int64_t b;
  std::int64_t c;
  std::uint64_t k;
  std::uint64_t D;
  bool operator==(const Prototype&) const = default;
};

struct DiscriminantDecomposition {
  std::uint64_t D;
  std::uint64_t f;   // conductor
  std::uint64_t D0;  // fundamental part, 1 for squares
  bool is_square;
};

/// Throws DomainError unless D >= 1 and D = 0,1 mod 4.
void require_discriminant(std::uint64_t D);

DiscriminantDecomposition conductor_decompose(std::uint64_t D);

/// Ordered by increasing b, then increasing a.
std::vector<Prototype> enumerate_prototypes(std::uint64_t D, std::uint64_t k);

/// e(D,k) as an exact value; e(1,k) = -1/12.
Rational e_value(std::uint64_t D, std::uint64_t k);

/// e(D,k) for D >= 2 without materializing the prototype list.
Integer e_sum(std::uint64_t D, std::uint64_t k);

}  // namespace mvcount::prototypes
