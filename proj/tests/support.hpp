#pragma once

// Builders and independent oracles shared by the test binaries. Nothing in
// here calls the simplex or lineality code it is used to check.

#include <cstdint>
#include <initializer_list>
#include <vector>

#include "conehelly/gens.hpp"
#include "conehelly/ratlin.hpp"

namespace test {

using conehelly::Rational;
using conehelly::Vector;
using conehelly::VectorSet;

inline Vector vec(std::initializer_list<long> xs) {
  Vector v;
  for (long x : xs) v.push_back(Rational(x));
  return v;
}

inline VectorSet vset(std::size_t d, std::initializer_list<std::initializer_list<long>> rows) {
  VectorSet s(d);
  for (const auto& r : rows) s.push_back(vec(r));
  return s;
}

inline Rational q(long num, long den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

using IntVec = std::vector<std::int64_t>;

inline std::vector<IntVec> to_int(const VectorSet& s) {
  std::vector<IntVec> out;
  for (const auto& v : s) {
    IntVec iv;
    for (const auto& x : v) iv.push_back(x.get_num().get_si());
    out.push_back(iv);
  }
  return out;
}

/// Bounded-grid reversibility search. Index i is reversible when some
/// positive integer combination, coefficient >= 1 on every member of a
/// support S containing i, sums to zero. Supports range over subsets of
/// size <= max_support and coefficients over [1, grid]; the last
/// coefficient of each support is read off by exact division.
inline std::vector<bool> grid_reversible(const std::vector<IntVec>& a, std::size_t max_support,
                                         std::int64_t grid) {
  const std::size_t n = a.size();
  const std::size_t d = n ? a[0].size() : 0;
  std::vector<bool> rev(n, false);
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1u << i)) s.push_back(i);
    if (s.size() > max_support) continue;
    bool all_known = true;
    for (std::size_t i : s) all_known = all_known && rev[i];
    if (all_known) continue;

    const std::size_t last = s.back();
    std::vector<std::int64_t> lambda(s.size() - 1, 1);
    for (;;) {
      IntVec w(d, 0);
      for (std::size_t t = 0; t + 1 < s.size(); ++t)
        for (std::size_t j = 0; j < d; ++j) w[j] -= lambda[t] * a[s[t]][j];
      // Need w = c * a[last] with 1 <= c <= grid.
      std::size_t piv = 0;
      while (piv < d && a[last][piv] == 0) ++piv;
      bool found = false;
      if (piv == d) {
        found = true;
        for (auto x : w) found = found && x == 0;
      } else if (w[piv] % a[last][piv] == 0) {
        const std::int64_t c = w[piv] / a[last][piv];
        if (c >= 1 && c <= grid) {
          found = true;
          for (std::size_t j = 0; j < d; ++j) found = found && w[j] == c * a[last][j];
        }
      }
      if (found) {
        for (std::size_t i : s) rev[i] = true;
        break;
      }
      std::size_t t = 0;
      while (t < lambda.size() && lambda[t] == grid) lambda[t++] = 1;
      if (t == lambda.size()) break;
      ++lambda[t];
    }
  }
  return rev;
}

/// Rank of the integer points of [-r, r]^d satisfying a.x <= 0 for all a.
/// A lower bound on the dimension of the solution cone, exact whenever the
/// cone has generators inside the grid.
inline std::size_t grid_solution_rank(const VectorSet& normals, std::int64_t r) {
  const auto a = to_int(normals);
  const std::size_t d = normals.ambient_dim();
  VectorSet feasible(d);
  IntVec x(d, -r);
  for (;;) {
    bool ok = true;
    for (const auto& n : a) {
      std::int64_t s = 0;
      for (std::size_t j = 0; j < d; ++j) s += n[j] * x[j];
      ok = ok && s <= 0;
    }
    if (ok) {
      Vector v;
      for (auto c : x) v.push_back(Rational(static_cast<long>(c)));
      feasible.push_back(v);
    }
    std::size_t j = 0;
    while (j < d && x[j] == r) x[j++] = -r;
    if (j == d) break;
    ++x[j];
  }
  return conehelly::rank(feasible);
}

/// Random integer matrix for linear-algebra properties.
inline conehelly::Matrix random_matrix(conehelly::SplitMix64& rng, std::size_t rows, std::size_t cols,
                                       std::int64_t bound) {
  std::vector<Vector> r(rows, Vector(cols));
  for (auto& row : r)
    for (auto& x : row) x = Rational(static_cast<long>(rng.uniform(-bound, bound)));
  return conehelly::Matrix(cols, std::move(r));
}

}  // namespace test
