#include "conehelly/cone.hpp"

#include <algorithm>

#include "conehelly/errors.hpp"
#include "conehelly/simplex.hpp"

namespace conehelly {

namespace {

// Positive multiple of v with coprime integer coordinates.
Vector primitive_direction(const Vector& v) {
  mpz_class den_lcm = 1;
  for (const auto& x : v) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), x.get_den_mpz_t());
  mpz_class num_gcd = 0;
  for (const auto& x : v) {
    mpz_class n = x.get_num() * (den_lcm / x.get_den());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
  }
  if (num_gcd == 0) return v;
  Vector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    out[i] = Rational(mpz_class(v[i].get_num() * (den_lcm / v[i].get_den()) / num_gcd));
  return out;
}

// Generators as the columns of a d x n matrix.
Matrix generator_columns(const VectorSet& gens) {
  std::vector<Vector> rows(gens.ambient_dim(), Vector(gens.size()));
  for (std::size_t j = 0; j < gens.size(); ++j)
    for (std::size_t i = 0; i < gens.ambient_dim(); ++i) rows[i][j] = gens[j][i];
  return Matrix(gens.size(), std::move(rows));
}

struct ImplicitSplit {
  Subspace lineality;
  std::vector<std::size_t> strict;  // normals outside the lineality space
};

ImplicitSplit split_normals(const HalfspaceSystem& h) {
  ImplicitSplit s{lineality_space(h.normals()), {}};
  for (std::size_t i = 0; i < h.size(); ++i)
    if (!s.lineality.contains(h.normals()[i])) s.strict.push_back(i);
  return s;
}

// Maximizes t subject to a.x <= -t for the strict normals, t <= 1, with x
// written in the given basis of L^⊥.
Vector interior_point(const HalfspaceSystem& h, const ImplicitSplit& split) {
  const std::size_t d = h.ambient_dim();
  if (split.strict.empty()) return zero_vector(d);
  const Subspace complement = orth_complement(split.lineality);
  const auto& u = complement.basis();
  const std::size_t m = u.size();
  const std::size_t p = split.strict.size();
  if (m == 0) throw InternalError("normal outside the lineality space while L^⊥ = {0}");

  // Columns: c+ (m), c- (m), t, slack per strict normal (p), slack of t <= 1.
  const std::size_t t_col = 2 * m;
  const std::size_t n = 2 * m + 1 + p + 1;
  std::vector<Vector> rows(p + 1, zero_vector(n));
  Vector rhs = zero_vector(p + 1);
  for (std::size_t r = 0; r < p; ++r) {
    const Vector& a = h.normals()[split.strict[r]];
    for (std::size_t i = 0; i < m; ++i) {
      const Rational au = dot(a, u[i]);
      rows[r][i] = au;
      rows[r][m + i] = -au;
    }
    rows[r][t_col] = 1;
    rows[r][t_col + 1 + r] = 1;
  }
  rows[p][t_col] = 1;
  rows[p][n - 1] = 1;
  rhs[p] = 1;
  Vector cost = zero_vector(n);
  cost[t_col] = -1;

  const auto res = lp::solve_standard_form(Matrix(n, std::move(rows)), rhs, cost);
  if (res.status != lp::Status::optimal || sgn(res.x[t_col]) <= 0)
    throw InternalError("no strictly feasible point for the non-implicit normals");

  Vector x0 = zero_vector(d);
  for (std::size_t i = 0; i < m; ++i) {
    const Rational c = res.x[i] - res.x[m + i];
    if (sgn(c) == 0) continue;
    for (std::size_t j = 0; j < d; ++j) x0[j] += c * u[i][j];
  }
  return primitive_direction(x0);
}

}  // namespace

bool verify_certificate(const Vector& b, const VectorSet& gens, const FarkasCertificate& cert) {
  if (b.size() != gens.ambient_dim()) return false;
  if (cert.in_cone()) {
    Vector sum = zero_vector(b.size());
    for (const auto& term : cert.combination()) {
      if (term.index >= gens.size() || sgn(term.coefficient) < 0) return false;
      for (std::size_t j = 0; j < sum.size(); ++j) sum[j] += term.coefficient * gens[term.index][j];
    }
    return sum == b;
  }
  const Vector& y = cert.separator();
  if (y.size() != b.size()) return false;
  for (const auto& a : gens)
    if (sgn(dot(y, a)) > 0) return false;
  return sgn(dot(y, b)) > 0;
}

HalfspaceSystem::HalfspaceSystem(VectorSet normals) : normals_(std::move(normals)) {
  for (std::size_t i = 0; i < normals_.size(); ++i)
    if (is_zero(normals_[i]))
      throw InvalidInput("outer normal " + std::to_string(i) + " is the zero vector");
}

HalfspaceSystem HalfspaceSystem::subsystem(std::span<const std::size_t> indices) const {
  return HalfspaceSystem(normals_.subset(indices));
}

bool HalfspaceSystem::satisfied_by(const Vector& x) const {
  return std::all_of(normals_.begin(), normals_.end(),
                     [&](const Vector& a) { return sgn(dot(a, x)) <= 0; });
}

FarkasCertificate membership(const Vector& b, const VectorSet& gens) {
  if (b.size() != gens.ambient_dim())
    throw InvalidInput("dimension mismatch: query of length " + std::to_string(b.size()) +
                       " against generators in dimension " + std::to_string(gens.ambient_dim()));
  const auto res = lp::solve_standard_form(generator_columns(gens), b);
  FarkasCertificate cert;
  if (res.status == lp::Status::infeasible) {
    cert.proof = primitive_direction(res.farkas);
  } else {
    std::vector<CombinationTerm> terms;
    for (std::size_t i = 0; i < res.x.size(); ++i)
      if (sgn(res.x[i]) != 0) terms.push_back({i, res.x[i]});
    cert.proof = std::move(terms);
  }
  if (!verify_certificate(b, gens, cert))
    throw InternalError("membership certificate failed verification for b = " + to_string(b));
  return cert;
}

std::vector<std::size_t> reversible_indices(const VectorSet& gens) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < gens.size(); ++i)
    if (membership(negate(gens[i]), gens).in_cone()) out.push_back(i);
  return out;
}

Subspace lineality_space(const VectorSet& gens) {
  const auto idx = reversible_indices(gens);
  return span_basis(gens.subset(idx));
}

bool is_pointed(const VectorSet& gens) { return lineality_space(gens).dim() == 0; }

VectorSet project_out_lineality(const VectorSet& gens) {
  const Subspace l = lineality_space(gens);
  VectorSet out(gens.ambient_dim());
  for (const auto& a : gens) {
    Vector p = project_onto_complement(l, a);
    if (!is_zero(p)) out.push_back(std::move(p));
  }
  return out;
}

std::size_t max_cone_dim(const HalfspaceSystem& h) {
  return h.ambient_dim() - lineality_space(h.normals()).dim();
}

Vector relative_interior_point(const HalfspaceSystem& h) {
  return interior_point(h, split_normals(h));
}

ConeExtraction extract_cone(const HalfspaceSystem& h, std::size_t k) {
  const std::size_t d = h.ambient_dim();
  if (k > d)
    throw InvalidInput("cone dimension " + std::to_string(k) + " exceeds ambient dimension " +
                       std::to_string(d));
  const ImplicitSplit split = split_normals(h);
  ConeExtraction out;
  out.lineality_dim = split.lineality.dim();
  out.max_cone_dim = d - out.lineality_dim;
  if (k > out.max_cone_dim) return out;

  VectorSet gens(d);
  if (k > 0) {
    const Vector x0 = interior_point(h, split);
    const Subspace complement = orth_complement(split.lineality);
    if (is_zero(x0)) {
      for (std::size_t i = 0; i < k; ++i) gens.push_back(complement.basis()[i]);
    } else {
      // Basis of L^⊥ that starts with x0, so the generators span exactly k dimensions.
      VectorSet seed(d);
      seed.push_back(x0);
      for (const auto& v : complement.basis()) seed.push_back(v);
      const auto u = span_basis(seed).basis();

      std::optional<Rational> eps;
      for (std::size_t r : split.strict) {
        const Vector& a = h.normals()[r];
        const Rational slack = -dot(a, x0);
        for (std::size_t i = 0; i < k; ++i) {
          const Rational au = dot(a, u[i]);
          if (sgn(au) <= 0) continue;
          Rational bound = slack / au;
          if (!eps || bound < *eps) eps = std::move(bound);
        }
      }
      const Rational step = eps ? Rational(*eps / 2) : Rational(1);
      gens.push_back(x0);
      for (std::size_t i = 0; i < k; ++i) {
        Vector g = add(x0, scale(u[i], step));
        if (!is_zero(g)) gens.push_back(std::move(g));
      }
    }
  }

  if (rank(gens) != k)
    throw InternalError("extracted cone has rank " + std::to_string(rank(gens)) + ", expected " +
                        std::to_string(k));
  for (const auto& g : gens)
    if (!h.satisfied_by(g)) throw InternalError("extracted generator violates the system");
  out.generators = std::move(gens);
  return out;
}

std::size_t solution_space_rank(const HalfspaceSystem& h) { return max_cone_dim(h); }

Subspace lineality_of_polar(const HalfspaceSystem& h) { return kernel_basis(h.normals().as_rows()); }

}  // namespace conehelly
