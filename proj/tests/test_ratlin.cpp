#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "conehelly/errors.hpp"
#include "conehelly/ratlin.hpp"
#include "support.hpp"

using namespace conehelly;
using test::q;
using test::vec;
using test::vset;

namespace {

Matrix mat(std::size_t cols, std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<Vector> r;
  for (const auto& row : rows) r.push_back(vec(row));
  return Matrix(cols, std::move(r));
}

Matrix identity(std::size_t d) {
  std::vector<Vector> r;
  for (std::size_t i = 0; i < d; ++i) r.push_back(unit_vector(d, i));
  return Matrix(d, std::move(r));
}

}  // namespace

TEST_CASE("rational canonical form") {
  const Rational r(6, -4);
  Rational c = r;
  c.canonicalize();
  CHECK(c.get_num() == -3);
  CHECK(c.get_den() == 2);
  CHECK(q(1, 2) + q(1, 3) == q(5, 6));
}

TEST_CASE("rref examples") {
  const auto id = rref(identity(3));
  CHECK(id.reduced == identity(3));
  CHECK(id.pivots == std::vector<std::size_t>{0, 1, 2});

  const auto r1 = rref(mat(2, {{1, 1}, {2, 2}}));
  CHECK(r1.reduced == mat(2, {{1, 1}, {0, 0}}));
  CHECK(r1.pivots == std::vector<std::size_t>{0});

  const auto perm = rref(mat(2, {{0, 1}, {1, 0}}));
  CHECK(perm.reduced == identity(2));
  CHECK(perm.pivots == std::vector<std::size_t>{0, 1});
}

TEST_CASE("rank examples") {
  for (std::size_t d = 1; d <= 5; ++d) CHECK(rank(identity(d)) == d);
  CHECK(rank(Matrix(3, {zero_vector(3), zero_vector(3)})) == 0);
  CHECK(rank(Matrix(4, {})) == 0);
  // rref by hand: the last row -(1,1,1) reduces to zero against e1, e2, e3.
  CHECK(rank(gen_simplex_like(3).as_rows()) == 3);
  CHECK(rank(gen_simplex_like(6).as_rows()) == 6);
}

TEST_CASE("span_basis") {
  const auto s = span_basis(vset(2, {{1, 0}, {2, 0}}));
  REQUIRE(s.dim() == 1);
  CHECK(s.basis()[0] == vec({1, 0}));
  CHECK(span_basis(VectorSet(3)).dim() == 0);
  CHECK(span_basis(vset(2, {{1, 1}, {1, -1}})).dim() == 2);
  // Input order decides which vectors are kept.
  CHECK(independent_indices(vset(2, {{0, 0}, {2, 0}, {1, 0}, {1, 1}})) == std::vector<std::size_t>{1, 3});
}

TEST_CASE("kernel_basis") {
  const auto k1 = kernel_basis(mat(2, {{1, 0}}));
  REQUIRE(k1.dim() == 1);
  CHECK(k1.basis()[0] == vec({0, 1}));
  CHECK(kernel_basis(identity(4)).dim() == 0);
  CHECK(kernel_basis(mat(3, {{1, 1, 0}})).dim() == 2);
  CHECK(kernel_basis(Matrix(3, {})).dim() == 3);
}

TEST_CASE("orth_complement") {
  const Subspace e1(3, {vec({1, 0, 0})});
  const auto c = orth_complement(e1);
  CHECK(c.dim() == 2);
  CHECK(c.contains(vec({0, 1, 0})));
  CHECK(c.contains(vec({0, 0, 1})));
  CHECK(orth_complement(Subspace(3)).dim() == 3);
  CHECK(orth_complement(Subspace::full(3)).dim() == 0);
}

TEST_CASE("project_onto_complement") {
  CHECK(project_onto_complement(Subspace(2, {vec({1, 0})}), vec({3, 4})) == vec({0, 4}));
  CHECK(project_onto_complement(Subspace(2), vec({3, 4})) == vec({3, 4}));
  // Gram system by hand: (2) c = 1, so c = 1/2 and (1,0) - (1/2)(1,1).
  CHECK(project_onto_complement(Subspace(2, {vec({1, 1})}), vec({1, 0})) == Vector{q(1, 2), q(-1, 2)});
  CHECK_THROWS_AS(project_onto_complement(Subspace(2), vec({1, 0, 0})), InvalidInput);
}

TEST_CASE("input validation") {
  CHECK_THROWS_AS(Matrix(2, {vec({1, 2}), vec({1})}), InvalidInput);
  CHECK_THROWS_AS(VectorSet(2, {vec({1, 2, 3})}), InvalidInput);
  CHECK_THROWS_AS(Subspace(2, {vec({1, 0}), vec({2, 0})}), InvalidInput);
  CHECK_THROWS_AS(dot(vec({1}), vec({1, 2})), InvalidInput);
  CHECK(find_duplicates(vset(2, {{1, 0}, {0, 1}, {1, 0}})) ==
        std::vector<std::pair<std::size_t, std::size_t>>{{0, 2}});
}

TEST_CASE("solve") {
  const auto x = solve(mat(2, {{1, 1}, {1, -1}}), vec({3, 1}));
  REQUIRE(x);
  CHECK(*x == vec({2, 1}));
  CHECK_FALSE(solve(mat(2, {{1, 1}, {2, 2}}), vec({1, 3})));
}

TEST_CASE("property: rref idempotent, rank of transpose") {
  SplitMix64 rng(2024);
  for (int trial = 0; trial < 300; ++trial) {
    const auto rows = static_cast<std::size_t>(rng.uniform(0, 5));
    const auto cols = static_cast<std::size_t>(rng.uniform(1, 5));
    const Matrix m = test::random_matrix(rng, rows, cols, 2);
    const auto once = rref(m);
    CHECK(rref(once.reduced).reduced == once.reduced);
    CHECK(rank(m) == rank(m.transpose()));
    CHECK(rank(m) == once.pivots.size());
  }
}

TEST_CASE("property: complement dimensions and projection decomposition") {
  SplitMix64 rng(77);
  for (int trial = 0; trial < 300; ++trial) {
    const auto d = static_cast<std::size_t>(rng.uniform(1, 5));
    const auto n = static_cast<std::size_t>(rng.uniform(0, 4));
    const Matrix m = test::random_matrix(rng, n, d, 3);
    const Subspace s = span_basis(VectorSet(d, m.row_list()));
    const Subspace c = orth_complement(s);
    CHECK(s.dim() + c.dim() == d);
    for (const auto& u : s.basis())
      for (const auto& w : c.basis()) CHECK(sgn(dot(u, w)) == 0);

    Vector v(d);
    for (auto& x : v) x = Rational(static_cast<long>(rng.uniform(-4, 4)), static_cast<unsigned long>(rng.uniform(1, 3)));
    for (auto& x : v) x.canonicalize();
    const Vector p = project_onto_complement(s, v);
    const Vector rest = subtract(v, p);
    CHECK(add(p, rest) == v);
    for (const auto& u : s.basis()) CHECK(sgn(dot(u, p)) == 0);
    CHECK(s.contains(rest));

    const Subspace k = kernel_basis(m);
    CHECK(k.dim() == d - rank(m));
    for (const auto& x : k.basis()) CHECK(is_zero(m.apply(x)));
  }
}
