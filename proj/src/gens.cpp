#include "conehelly/gens.hpp"

#include <limits>

#include "conehelly/errors.hpp"

namespace conehelly {

std::int64_t SplitMix64::uniform(std::int64_t lo, std::int64_t hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0) return static_cast<std::int64_t>(next());
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t x;
  do {
    x = next();
  } while (x >= limit);
  return lo + static_cast<std::int64_t>(x % span);
}

VectorSet gen_simplex_like(std::size_t d) {
  if (d < 1) throw InvalidInput("gen_simplex_like needs d >= 1");
  VectorSet out(d);
  Vector last(d, Rational(-1));
  for (std::size_t i = 0; i < d; ++i) out.push_back(unit_vector(d, i));
  out.push_back(std::move(last));
  return out;
}

VectorSet gen_axis_pairs(std::size_t k, std::size_t d) {
  if (k < 1 || k > d) throw InvalidInput("gen_axis_pairs needs 1 <= k <= d");
  VectorSet out(d);
  for (std::size_t i = 0; i < k; ++i) {
    out.push_back(unit_vector(d, i));
    out.push_back(negate(unit_vector(d, i)));
  }
  return out;
}

HalfspaceSystem gen_example2(std::size_t d, std::size_t k) {
  if (k < 1 || k > d) throw InvalidInput("gen_example2 needs 1 <= k <= d");
  VectorSet normals(d);
  for (std::size_t i = 0; i < d - k + 1; ++i) {
    normals.push_back(unit_vector(d, i));
    normals.push_back(negate(unit_vector(d, i)));
  }
  return HalfspaceSystem(std::move(normals));
}

VectorSet gen_random(std::size_t d, std::size_t n, std::uint64_t bound, std::uint64_t seed) {
  if (d < 1 || n < 1 || bound < 1) throw InvalidInput("gen_random needs d, n, bound >= 1");
  if (bound > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max() / 2))
    throw InvalidInput("gen_random bound too large");
  const auto b = static_cast<std::int64_t>(bound);
  SplitMix64 rng(seed);
  VectorSet out(d);
  while (out.size() < n) {
    Vector v(d);
    for (auto& x : v) x = Rational(static_cast<long>(rng.uniform(-b, b)));
    if (!is_zero(v)) out.push_back(std::move(v));
  }
  return out;
}

bool verify_tightness_example1(std::size_t d) {
  const HalfspaceSystem h(gen_simplex_like(d));
  if (max_cone_dim(h) != 0) return false;
  for (std::size_t drop = 0; drop < h.size(); ++drop) {
    const HalfspaceSystem rest(h.normals().without(drop));
    if (max_cone_dim(rest) != d) return false;
  }
  return true;
}

bool verify_tightness_example2(std::size_t d, std::size_t k) {
  const HalfspaceSystem h = gen_example2(d, k);
  if (max_cone_dim(h) != k - 1) return false;
  for (std::size_t drop = 0; drop < h.size(); ++drop) {
    const HalfspaceSystem rest(h.normals().without(drop));
    if (max_cone_dim(rest) < k) return false;
  }
  return true;
}

}  // namespace conehelly
