#pragma once

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

namespace mvcount::ideals {

/// Element (a1, a2) of Z + Z; O_{d^2} is the subring a1 = a2 mod d.
struct QuadPair {
  std::int64_t a1 = 0;
  std::int64_t a2 = 0;

  std::int64_t norm() const { return a1 * a2; }
  std::int64_t trace() const { return a1 + a2; }
  QuadPair conjugate() const { return {a2, a1}; }
  bool operator==(const QuadPair&) const = default;
};

bool in_order(std::uint64_t d, const QuadPair& x);

/// The ideal b_r of norm n in O_{d^2}, with a Z-basis.
struct IdealSpec {
  std::uint64_t d;
  std::uint64_t n;
  std::uint64_t r;
  QuadPair g1;
  QuadPair g2;
};

using Matrix4 = std::array<std::array<std::int64_t, 4>, 4>;

bool ideal_membership(const IdealSpec& spec, const QuadPair& x);
IdealSpec ideal_basis(std::uint64_t d, std::uint64_t n, std::uint64_t r);
/// b_r = b_s iff lcm(r, (d,n)) = lcm(s, (d,n)).
bool ideal_equal(std::uint64_t d, std::uint64_t n, std::uint64_t r,
                 std::uint64_t s);
std::uint64_t galois_conjugate(std::uint64_t r, std::uint64_t n);
/// sigma_0(n / (d,n)).
std::uint64_t class_count(std::uint64_t d, std::uint64_t n);
/// Representatives r | 6 of the components of the (1,6) moduli space.
std::vector<std::uint64_t> component_list(std::uint64_t d);

/// Trace pairing on b_r + O^dual in the basis g1, g2, eta1, eta2 with
/// eta1 = (0, 1), eta2 = (-1, 1)/d.
Matrix4 gram_matrix(std::uint64_t d, std::uint64_t n, std::uint64_t r);

/// Elementary divisors (e1, e2), e1 | e2, of a nondegenerate alternating form.
std::pair<std::int64_t, std::int64_t> symplectic_divisors(const Matrix4& M);

/// Pairings of the rank-2 sublattices where the second (resp. first)
/// coordinate vanishes.
std::pair<std::int64_t, std::int64_t> polarization_restriction(
    std::uint64_t d, std::uint64_t n, std::uint64_t r);

}  // namespace mvcount::ideals
