#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "mvcount/euler.hpp"
#include "mvcount/rational.hpp"

namespace mvcount::counting {

enum class Locus { H2, P3, P4, G };

std::string_view to_string(Locus l);
/// Accepts h2, p3, p4, gothic (and g).
Locus parse_locus(std::string_view s);
/// Complex dimension of the locus; drives the D^dim normalization.
unsigned complex_dim(Locus l);

/// -6 chi, the number of minimal torus covers on a curve of Euler
/// characteristic chi.
Rational sts_count(const Rational& chi);

struct Contribution {
  euler::Family family;
  std::uint64_t D;
  std::optional<std::uint64_t> component;
  Rational count;
};

struct CoverCount {
  std::uint64_t m;
  std::vector<Contribution> contributions;
  Rational total;
};

/// Default surrogate for square discriminants of each locus.
euler::Mode default_mode(Locus l);

/// Minimal torus covers of degree and area m, split by Teichmueller curve.
CoverCount smm(Locus l, std::uint64_t m, euler::Mode mode);
/// sum_{m|d} sigma(d/m) smm(m).
Rational cd_count(Locus l, std::uint64_t d, euler::Mode mode);

/// Gothic components r paired with m: the divisors r of 6 whose curve
/// G^r_{(m/r)^2} receives covers of degree m.
std::vector<std::uint64_t> gothic_components(std::uint64_t m);

enum class Commutator { hvHV, HVhv };

/// Pairs (h, v) in S_d x S_d generating a transitive group whose commutator
/// is a single 3-cycle, divided by d!.
Rational h2_permutation_oracle(std::uint64_t d,
                               Commutator convention = Commutator::hvHV,
                               unsigned threads = 0);

}  // namespace mvcount::counting
