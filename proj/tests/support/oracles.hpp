#pragma once

// Brute-force reference computations used as oracles by the unit tests.
// Each one works from definitions only and shares no logic with the code
// under test beyond group multiplication.

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "core/characters.hpp"
#include "core/int_matrix.hpp"
#include "core/subgroups.hpp"

namespace oracle {

using namespace gl2h;

inline Residue least_non_residue(std::uint32_t p) {
  for (Residue a = 2; a < p; ++a) {
    bool square = false;
    for (Residue x = 1; x < p && !square; ++x) square = (static_cast<std::uint64_t>(x) * x) % p == a;
    if (!square) return a;
  }
  return 0;
}

inline std::uint32_t multiplicative_order(Residue a, std::uint32_t p) {
  std::uint64_t v = a % p;
  for (std::uint32_t k = 1; k < p; ++k) {
    if (v == 1) return k;
    v = v * a % p;
  }
  return 0;
}

/// Conjugacy classes as orbits of x g x^-1, each a sorted list of indices.
inline std::vector<std::vector<std::uint32_t>> conjugacy_orbits(const Group& group) {
  std::vector<char> seen(group.size(), 0);
  std::vector<std::vector<std::uint32_t>> out;
  for (std::uint32_t g = 0; g < group.size(); ++g) {
    if (seen[g]) continue;
    std::set<std::uint32_t> orbit;
    for (std::uint32_t x = 0; x < group.size(); ++x) orbit.insert(group.multiply(group.multiply(x, g), group.inverse(x)));
    for (auto e : orbit) seen[e] = 1;
    out.emplace_back(orbit.begin(), orbit.end());
  }
  return out;
}

/// Number of distinct right K-cosets xK making up H g K.
inline std::uint64_t right_cosets_in_double_coset(const GroupWorkspace& ws, SubgroupLabel h, std::uint32_t g,
                                                  SubgroupLabel k) {
  const auto& group = ws.group();
  std::set<std::uint32_t> elements;
  for (auto x : ws.subgroup(h).elements())
    for (auto y : ws.subgroup(k).elements()) elements.insert(group.multiply(group.multiply(x, g), y));
  std::set<std::vector<std::uint32_t>> cosets;
  for (auto e : elements) {
    std::vector<std::uint32_t> coset;
    for (auto y : ws.subgroup(k).elements()) coset.push_back(group.multiply(e, y));
    std::sort(coset.begin(), coset.end());
    cosets.insert(coset);
  }
  return cosets.size();
}

/// Number of elements of sigma_{-1} N lying in each orbit-class, keyed by
/// the class label of the element.
inline std::map<ConjClassId, std::uint64_t> sigma_minus_one_census(const GroupWorkspace& ws) {
  const auto& ctx = ws.context();
  const auto& group = ws.group();
  const std::uint32_t s = group.index_of(sigma(ctx, -1));
  std::map<ConjClassId, std::uint64_t> out;
  for (auto n : ws.subgroup(SubgroupLabel::N).elements()) ++out[classify(ctx, group[group.multiply(s, n)])];
  return out;
}

/// Fixed cosets of g on G/H: x with x^-1 g x in H, divided by |H|.
inline std::uint64_t fixed_cosets(const GroupWorkspace& ws, SubgroupLabel h, std::uint32_t g) {
  const auto& group = ws.group();
  const auto& sub = ws.subgroup(h);
  std::uint64_t n = 0;
  for (std::uint32_t x = 0; x < group.size(); ++x)
    if (sub.contains(group.multiply(group.multiply(group.inverse(x), g), x))) ++n;
  return n / sub.order();
}

/// Determinant by cofactor expansion along the first row.
inline BigInt cofactor_determinant(const IntMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m.at(0, 0);
  BigInt total = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (sgn(m.at(0, j)) == 0) continue;
    IntMatrix minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t c = 0, cc = 0; c < n; ++c)
        if (c != j) minor.at(r - 1, cc++) = m.at(r, c);
    const BigInt term = m.at(0, j) * cofactor_determinant(minor);
    if (j % 2 == 0) total += term; else total -= term;
  }
  return total;
}

/// Rank over Q by Gaussian elimination on rationals.
inline std::size_t rational_rank(const IntMatrix& m) {
  std::vector<std::vector<mpq_class>> a(m.rows(), std::vector<mpq_class>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) a[r][c] = m.at(r, c);
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
    std::size_t pivot = rank;
    while (pivot < m.rows() && sgn(a[pivot][c]) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    std::swap(a[pivot], a[rank]);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == rank || sgn(a[r][c]) == 0) continue;
      const mpq_class f = a[r][c] / a[rank][c];
      for (std::size_t k = c; k < m.cols(); ++k) a[r][k] -= f * a[rank][k];
    }
    ++rank;
  }
  return rank;
}

}  // namespace oracle

namespace gen {

// Hand-rolled generators over a fixed-seed engine, so every run draws the
// same cases.
class Source {
 public:
  explicit Source(std::uint64_t seed) : rng_(seed) {}
  std::uint64_t below(std::uint64_t n) { return std::uniform_int_distribution<std::uint64_t>(0, n - 1)(rng_); }
  std::int64_t between(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_);
  }
  std::uint32_t element(const gl2h::Group& g) { return static_cast<std::uint32_t>(below(g.size())); }
  gl2h::GroupElement matrix(const gl2h::PrimeContext& ctx) {
    for (;;) {
      gl2h::GroupElement m{static_cast<gl2h::Residue>(below(ctx.p())), static_cast<gl2h::Residue>(below(ctx.p())),
                           static_cast<gl2h::Residue>(below(ctx.p())), static_cast<gl2h::Residue>(below(ctx.p()))};
      if (gl2h::determinant(ctx, m) != 0) return m;
    }
  }
  gl2h::IntMatrix int_matrix(std::size_t rows, std::size_t cols, std::int64_t bound) {
    gl2h::IntMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = static_cast<long>(between(-bound, bound));
    return m;
  }
  /// Product of a random low-rank factorisation: rank at most k.
  gl2h::IntMatrix low_rank(std::size_t rows, std::size_t cols, std::size_t k, std::int64_t bound) {
    return int_matrix(rows, k, bound) * int_matrix(k, cols, bound);
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace gen
