#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "conehelly/cone.hpp"
#include "conehelly/errors.hpp"
#include "conehelly/gens.hpp"
#include "support.hpp"

using namespace conehelly;
using test::vec;
using test::vset;

namespace {

Rational coefficient_of(const FarkasCertificate& c, std::size_t index) {
  for (const auto& t : c.combination())
    if (t.index == index) return t.coefficient;
  return 0;
}

VectorSet random_set(SplitMix64& rng, std::size_t d, std::size_t n, std::int64_t bound) {
  VectorSet s(d);
  while (s.size() < n) {
    Vector v(d);
    for (auto& x : v) x = Rational(static_cast<long>(rng.uniform(-bound, bound)));
    if (!is_zero(v)) s.push_back(v);
  }
  return s;
}

}  // namespace

TEST_CASE("membership examples") {
  const VectorSet e = vset(2, {{1, 0}, {0, 1}});
  const auto in = membership(vec({1, 1}), e);
  REQUIRE(in.in_cone());
  CHECK(coefficient_of(in, 0) == 1);
  CHECK(coefficient_of(in, 1) == 1);

  const auto out = membership(vec({-1, 0}), e);
  REQUIRE_FALSE(out.in_cone());
  CHECK(out.separator() == vec({-1, 0}));

  // Grid oracle: nonnegative integer coefficients in [0, 2]^4 reaching (0,0,1).
  const VectorSet s = gen_simplex_like(3);
  bool grid_hit = false;
  for (int a = 0; a <= 2 && !grid_hit; ++a)
    for (int b = 0; b <= 2 && !grid_hit; ++b)
      for (int c = 0; c <= 2 && !grid_hit; ++c)
        for (int dd = 0; dd <= 2 && !grid_hit; ++dd)
          grid_hit = (a - dd == 0) && (b - dd == 0) && (c - dd == 1);
  REQUIRE(grid_hit);
  const auto cert = membership(vec({0, 0, 1}), s);
  CHECK(cert.in_cone());
  CHECK(verify_certificate(vec({0, 0, 1}), s, cert));
}

TEST_CASE("membership edge cases") {
  CHECK(membership(vec({0, 0}), VectorSet(2)).in_cone());
  CHECK_FALSE(membership(vec({0, 1}), VectorSet(2)).in_cone());
  CHECK_THROWS_AS(membership(vec({1, 0, 0}), vset(2, {{1, 0}})), InvalidInput);
}

TEST_CASE("certificate verifier rejects forged certificates") {
  const VectorSet e = vset(2, {{1, 0}, {0, 1}});
  FarkasCertificate fake;
  fake.proof = std::vector<CombinationTerm>{{0, Rational(1)}};
  CHECK_FALSE(verify_certificate(vec({1, 1}), e, fake));
  fake.proof = std::vector<CombinationTerm>{{0, Rational(-1)}, {1, Rational(0)}};
  CHECK_FALSE(verify_certificate(vec({-1, 0}), e, fake));
  fake.proof = vec({1, 0});  // y.e1 > 0
  CHECK_FALSE(verify_certificate(vec({-1, 0}), e, fake));
}

TEST_CASE("property: Farkas exclusivity") {
  SplitMix64 rng(5);
  for (int trial = 0; trial < 400; ++trial) {
    const auto d = static_cast<std::size_t>(rng.uniform(1, 4));
    const auto n = static_cast<std::size_t>(rng.uniform(0, 6));
    const VectorSet g = random_set(rng, d, n, 3);
    Vector b(d);
    for (auto& x : b) x = Rational(static_cast<long>(rng.uniform(-3, 3)));
    const auto c = membership(b, g);
    CHECK(verify_certificate(b, g, c));
    // The opposite certificate type cannot exist; a separator y certifies
    // every combination is absent, and vice versa.
    if (c.in_cone()) {
      CHECK(sgn(dot(b, b)) >= 0);
    } else {
      for (const auto& a : g) CHECK(sgn(dot(c.separator(), a)) <= 0);
    }
  }
}

TEST_CASE("lineality_space examples") {
  const auto l = lineality_space(vset(2, {{1, 0}, {-1, 0}, {0, 1}}));
  REQUIRE(l.dim() == 1);
  CHECK(l.contains(vec({1, 0})));
  for (std::size_t d = 1; d <= 5; ++d)
    for (std::size_t k = 1; k <= d; ++k) CHECK(lineality_space(gen_axis_pairs(k, d)).dim() == k);

  for (std::size_t d = 1; d <= 5; ++d) {
    const VectorSet s = gen_simplex_like(d);
    CHECK(lineality_space(s).dim() == d);
    for (std::size_t drop = 0; drop <= d; ++drop) CHECK(lineality_space(s.without(drop)).dim() == 0);
  }
  CHECK(lineality_space(VectorSet(3)).dim() == 0);
}

TEST_CASE("property: lineality agrees with the bounded-grid oracle") {
  SplitMix64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const auto d = static_cast<std::size_t>(rng.uniform(1, 3));
    const auto n = static_cast<std::size_t>(rng.uniform(1, 5));
    const VectorSet g = random_set(rng, d, n, 2);
    const auto rev = test::grid_reversible(test::to_int(g), d + 1, 32);
    VectorSet reversible(d);
    for (std::size_t i = 0; i < n; ++i)
      if (rev[i]) reversible.push_back(g[i]);
    const Subspace oracle = span_basis(reversible);
    CHECK(lineality_space(g).same_as(oracle));
  }
}

TEST_CASE("is_pointed and project_out_lineality") {
  CHECK(is_pointed(vset(2, {{1, 0}, {0, 1}})));
  CHECK_FALSE(is_pointed(vset(2, {{1, 0}, {-1, 0}})));

  CHECK(project_out_lineality(vset(2, {{1, 0}, {-1, 0}, {0, 1}})) == vset(2, {{0, 1}}));
  const VectorSet pointed = vset(3, {{1, 0, 0}, {1, 1, 0}, {0, 1, 1}});
  CHECK(project_out_lineality(pointed) == pointed);
  CHECK(project_out_lineality(gen_axis_pairs(3, 3)).empty());

  SplitMix64 rng(3);
  for (int trial = 0; trial < 150; ++trial) {
    const VectorSet g = random_set(rng, 3, static_cast<std::size_t>(rng.uniform(1, 7)), 2);
    CHECK(is_pointed(project_out_lineality(g)));
  }
}

TEST_CASE("HalfspaceSystem rejects zero normals") {
  CHECK_THROWS_AS(HalfspaceSystem(vset(2, {{1, 0}, {0, 0}})), InvalidInput);
  CHECK_NOTHROW(HalfspaceSystem(vset(2, {{1, 0}, {1, 0}})));
}

TEST_CASE("max_cone_dim examples") {
  for (std::size_t d = 1; d <= 5; ++d)
    for (std::size_t k = 1; k <= d; ++k) CHECK(max_cone_dim(gen_example2(d, k)) == k - 1);
  CHECK(max_cone_dim(HalfspaceSystem(vset(2, {{-1, 0}}))) == 2);
  for (std::size_t d = 1; d <= 5; ++d) CHECK(max_cone_dim(HalfspaceSystem(gen_simplex_like(d))) == 0);
}

TEST_CASE("max_cone_dim matches the grid solution oracle on structured systems") {
  for (std::size_t d = 1; d <= 4; ++d) {
    const HalfspaceSystem s(gen_simplex_like(d));
    CHECK(test::grid_solution_rank(s.normals(), 1) == max_cone_dim(s));
    for (std::size_t drop = 0; drop <= d; ++drop) {
      const HalfspaceSystem rest(s.normals().without(drop));
      CHECK(test::grid_solution_rank(rest.normals(), 1) == max_cone_dim(rest));
    }
    for (std::size_t k = 1; k <= d; ++k) {
      const HalfspaceSystem e2 = gen_example2(d, k);
      CHECK(test::grid_solution_rank(e2.normals(), 1) == max_cone_dim(e2));
    }
  }
  // On random systems the grid only bounds from below.
  SplitMix64 rng(8);
  for (int trial = 0; trial < 100; ++trial) {
    const HalfspaceSystem h(random_set(rng, 3, static_cast<std::size_t>(rng.uniform(1, 6)), 2));
    CHECK(test::grid_solution_rank(h.normals(), 2) <= max_cone_dim(h));
  }
}

TEST_CASE("relative_interior_point") {
  const Vector x = relative_interior_point(HalfspaceSystem(vset(2, {{-1, 0}})));
  CHECK(sgn(x[0]) > 0);
  CHECK(relative_interior_point(HalfspaceSystem(vset(2, {{1, 0}, {-1, 0}}))) == vec({0, 0}));
  CHECK(is_zero(relative_interior_point(HalfspaceSystem(gen_simplex_like(3)))));

  SplitMix64 rng(21);
  for (int trial = 0; trial < 150; ++trial) {
    const HalfspaceSystem h(random_set(rng, 3, static_cast<std::size_t>(rng.uniform(1, 7)), 2));
    const Subspace l = lineality_space(h.normals());
    const Vector x0 = relative_interior_point(h);
    for (const auto& a : h.normals()) {
      if (l.contains(a))
        CHECK(sgn(dot(a, x0)) == 0);
      else
        CHECK(sgn(dot(a, x0)) < 0);
    }
    CHECK(orth_complement(l).contains(x0));
  }
}

TEST_CASE("extract_cone examples") {
  const HalfspaceSystem half(vset(2, {{-1, 0}}));
  const auto e = extract_cone(half, 2);
  REQUIRE(e.generators);
  CHECK(rank(*e.generators) == 2);
  for (const auto& g : *e.generators) CHECK(half.satisfied_by(g));

  const auto line = extract_cone(HalfspaceSystem(vset(2, {{1, 0}, {-1, 0}})), 1);
  REQUIRE(line.generators);
  REQUIRE(line.generators->size() == 1);
  const Vector& g = (*line.generators)[0];
  CHECK((g == vec({0, 1}) || g == vec({0, -1})));

  const auto none = extract_cone(HalfspaceSystem(gen_simplex_like(3)), 1);
  CHECK_FALSE(none.generators);
  CHECK(none.lineality_dim == 3);
  CHECK(none.max_cone_dim == 0);

  CHECK(extract_cone(half, 0).generators->empty());
  CHECK_THROWS_AS(extract_cone(half, 3), InvalidInput);
}

TEST_CASE("property: extract_cone at every feasible k and duality identity") {
  SplitMix64 rng(99);
  for (int trial = 0; trial < 120; ++trial) {
    const auto d = static_cast<std::size_t>(rng.uniform(1, 4));
    const HalfspaceSystem h(random_set(rng, d, static_cast<std::size_t>(rng.uniform(1, 7)), 2));
    const std::size_t mcd = max_cone_dim(h);
    CHECK(mcd + lineality_space(h.normals()).dim() == d);
    CHECK(solution_space_rank(h) == mcd);
    for (std::size_t k = 0; k <= d; ++k) {
      const auto e = extract_cone(h, k);
      CHECK(e.generators.has_value() == (k <= mcd));
      if (!e.generators) continue;
      CHECK(rank(*e.generators) == k);
      for (const auto& g : *e.generators) CHECK(h.satisfied_by(g));
    }
  }
}

TEST_CASE("solution_space_rank examples") {
  for (std::size_t d = 1; d <= 5; ++d) {
    for (std::size_t k = 1; k <= d; ++k) CHECK(solution_space_rank(gen_example2(d, k)) == k - 1);
    CHECK(solution_space_rank(HalfspaceSystem::empty(d)) == d);
    CHECK(solution_space_rank(HalfspaceSystem(gen_simplex_like(d))) == 0);
  }
}

TEST_CASE("lineality_of_polar") {
  CHECK(lineality_of_polar(HalfspaceSystem(vset(3, {{1, 0, 0}}))).dim() == 2);
  CHECK(lineality_of_polar(HalfspaceSystem(gen_simplex_like(4))).dim() == 0);
  for (std::size_t d = 1; d <= 5; ++d) {
    for (std::size_t k = 1; k <= d; ++k) {
      const Subspace s = lineality_of_polar(gen_example2(d, k));
      CHECK(s.dim() == k - 1);
      for (const auto& v : s.basis())
        for (std::size_t i = 0; i < d - k + 1; ++i) CHECK(sgn(v[i]) == 0);
    }
  }
  SplitMix64 rng(4);
  for (int trial = 0; trial < 100; ++trial) {
    const HalfspaceSystem h(random_set(rng, 4, static_cast<std::size_t>(rng.uniform(1, 6)), 2));
    const Subspace s = lineality_of_polar(h);
    CHECK(s.dim() == 4 - rank(h.normals()));
    for (const auto& v : s.basis())
      for (const auto& a : h.normals()) CHECK(sgn(dot(a, v)) == 0);
  }
}
