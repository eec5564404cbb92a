#include "mvcount/counting.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <string>

#include "mvcount/arith.hpp"
#include "mvcount/parallel.hpp"

namespace mvcount::counting {

using arith::u64;
using euler::Family;
using euler::Mode;

std::string_view to_string(Locus l) {
  switch (l) {
    case Locus::H2: return "h2";
    case Locus::P3: return "p3";
    case Locus::P4: return "p4";
    case Locus::G: return "gothic";
  }
  return "?";
}

Locus parse_locus(std::string_view s) {
  if (s == "h2" || s == "H2") return Locus::H2;
  if (s == "p3" || s == "P3") return Locus::P3;
  if (s == "p4" || s == "P4") return Locus::P4;
  if (s == "gothic" || s == "g" || s == "G") return Locus::G;
  throw DomainError("unknown locus: " + std::string(s));
}

unsigned complex_dim(Locus) { return 4; }

Rational sts_count(const Rational& chi) {
  MVCOUNT_REQUIRE(chi.sign() <= 0, "sts_count: chi must not be positive, got " +
                                       chi.str());
  return Rational(-6) * chi;
}

Mode default_mode(Locus l) {
  switch (l) {
    case Locus::H2: return Mode::exact;
    default: return Mode::main_term;
  }
}

std::vector<u64> gothic_components(u64 m) {
  MVCOUNT_REQUIRE(m >= 1, "gothic_components: m must be positive");
  if (m % 36 == 6 || m % 36 == 30) return {1, 2, 3, 6};
  if (m % 4 == 2) return {1, 2};
  if (m % 9 == 3 || m % 9 == 6) return {1, 3};
  return {1};
}

namespace {

void require_mode(Locus l, Mode mode) {
  switch (l) {
    case Locus::H2:
      MVCOUNT_REQUIRE(mode == Mode::exact, "smm: locus h2 uses mode exact");
      break;
    case Locus::P3:
    case Locus::P4:
      MVCOUNT_REQUIRE(mode == Mode::main_term,
                      "smm: Prym loci use mode main_term");
      break;
    case Locus::G:
      MVCOUNT_REQUIRE(mode != Mode::exact,
                      "smm: the gothic locus needs a square-discriminant mode");
      break;
  }
}

void add(CoverCount& out, const euler::EulerCharRecord& rec) {
  Rational c = sts_count(rec.value);
  out.total += c;
  out.contributions.push_back({rec.family, rec.D, rec.component, std::move(c)});
}

}  // namespace

CoverCount smm(Locus l, u64 m, Mode mode) {
  MVCOUNT_REQUIRE(m >= 1, "smm: m must be positive");
  require_mode(l, mode);
  CoverCount out{m, {}, Rational(0)};
  switch (l) {
    case Locus::H2:
      if (m > 2) {
        Rational c = sts_count(euler::chi_W2(m * m));
        out.total = c;
        out.contributions.push_back({Family::W2, m * m, std::nullopt, c});
      }
      break;
    case Locus::P3:
      add(out, euler::chi_W4(m * m, 1, Mode::main_term));
      if (m % 4 == 2)
        add(out, euler::chi_W4((m / 2) * (m / 2), 2, Mode::main_term));
      break;
    case Locus::P4:
      if (m % 2 == 0) add(out, euler::chi_W6((m / 2) * (m / 2), Mode::main_term));
      break;
    case Locus::G:
      for (u64 r : gothic_components(m)) {
        u64 d = m / r;
        // the r = 1 formula has no counterpart for the other components
        Mode used = (mode == Mode::remark && r != 1) ? Mode::main_term : mode;
        add(out, euler::chi_G(d * d, r, used));
      }
      break;
  }
  return out;
}

Rational cd_count(Locus l, u64 d, Mode mode) {
  MVCOUNT_REQUIRE(d >= 1, "cd_count: d must be positive");
  Rational total = 0;
  for (u64 m : arith::divisors(d)) {
    CoverCount c = smm(l, m, mode);
    if (!c.total.is_zero()) total += Rational(arith::sigma(1, d / m)) * c.total;
  }
  return total;
}

namespace {

using Perm = std::array<std::uint8_t, 10>;

void partitions(int n, int max_part, std::vector<int>& cur,
                std::vector<std::vector<int>>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (int p = std::min(n, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions(n - p, p, cur, out);
    cur.pop_back();
  }
}

// d! / z_lambda
u64 class_size(const std::vector<int>& lambda, int d) {
  u64 z = 1;
  std::array<int, 11> mult{};
  for (int p : lambda) {
    z *= p;
    z *= ++mult[p];
  }
  u64 fact = 1;
  for (int i = 2; i <= d; ++i) fact *= i;
  return fact / z;
}

Perm representative(const std::vector<int>& lambda) {
  Perm h{};
  int start = 0;
  for (int p : lambda) {
    for (int i = 0; i < p; ++i) h[start + i] = start + (i + 1) % p;
    start += p;
  }
  return h;
}

bool transitive(const Perm& h, const Perm& v, int d) {
  std::array<int, 10> parent{};
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int components = d;
  auto unite = [&](int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  };
  for (int x = 0; x < d; ++x) {
    unite(x, h[x]);
    unite(x, v[x]);
  }
  return components == 1;
}

}  // namespace

Rational h2_permutation_oracle(u64 d, Commutator convention, unsigned threads) {
  MVCOUNT_REQUIRE(d >= 1 && d <= 10, "h2_permutation_oracle: need 1 <= d <= 10");
  const int n = static_cast<int>(d);
  std::vector<std::vector<int>> classes;
  std::vector<int> cur;
  partitions(n, n, cur, classes);

  std::vector<u64> weighted(classes.size(), 0);
  parallel_for(0, classes.size(), threads, [&](u64 idx) {
    const Perm h = representative(classes[idx]);
    Perm hinv{};
    for (int x = 0; x < n; ++x) hinv[h[x]] = x;
    Perm v{}, vinv{};
    std::iota(v.begin(), v.begin() + n, 0);
    u64 count = 0;
    do {
      for (int x = 0; x < n; ++x) vinv[v[x]] = x;
      int moved = 0;
      for (int x = 0; x < n && moved <= 3; ++x) {
        int y = convention == Commutator::hvHV ? h[v[hinv[vinv[x]]]]
                                               : hinv[vinv[h[v[x]]]];
        if (y != x) ++moved;
      }
      // a permutation moving exactly three points is a 3-cycle
      if (moved == 3 && transitive(h, v, n)) ++count;
    } while (std::next_permutation(v.begin(), v.begin() + n));
    weighted[idx] = count * class_size(classes[idx], n);
  });

  u64 pairs = std::accumulate(weighted.begin(), weighted.end(), u64{0});
  u64 fact = 1;
  for (u64 i = 2; i <= d; ++i) fact *= i;
  return Rational(Integer(to_integer(pairs)), Integer(to_integer(fact)));
}

}  // namespace mvcount::counting
