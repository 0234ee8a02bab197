#include "conehelly/ratlin.hpp"

#include <sstream>

#include "conehelly/errors.hpp"

namespace conehelly {

namespace {

void require_same_length(const Vector& a, const Vector& b) {
  if (a.size() != b.size())
    throw InvalidInput("dimension mismatch: " + std::to_string(a.size()) +
                       " vs " + std::to_string(b.size()));
}

// Gauss-Jordan in place; returns the pivot columns.
std::vector<std::size_t> reduce_in_place(std::vector<Vector>& rows, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && sgn(rows[p][c]) == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    const Rational inv = 1 / rows[r][c];
    for (std::size_t j = c; j < cols; ++j) rows[r][j] *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || sgn(rows[i][c]) == 0) continue;
      const Rational f = rows[i][c];
      for (std::size_t j = c; j < cols; ++j) rows[i][j] -= f * rows[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

Subspace make_trusted_subspace(std::size_t ambient_dim, std::vector<Vector> basis) {
  return Subspace(Subspace::Trusted{}, ambient_dim, std::move(basis));
}

Vector zero_vector(std::size_t dim) { return Vector(dim, Rational(0)); }

Vector unit_vector(std::size_t dim, std::size_t axis) {
  Vector v = zero_vector(dim);
  v.at(axis) = 1;
  return v;
}

Rational dot(const Vector& a, const Vector& b) {
  require_same_length(a, b);
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Vector add(const Vector& a, const Vector& b) {
  require_same_length(a, b);
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Vector subtract(const Vector& a, const Vector& b) {
  require_same_length(a, b);
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Vector scale(const Vector& v, const Rational& factor) {
  Vector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i] * factor;
  return r;
}

Vector negate(const Vector& v) { return scale(v, Rational(-1)); }

bool is_zero(const Vector& v) {
  for (const auto& x : v)
    if (sgn(x) != 0) return false;
  return true;
}

std::string to_string(const Rational& q) { return q.get_str(); }

std::string to_string(const Vector& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i].get_str();
  os << ')';
  return os.str();
}

// ---------------------------------------------------------------------------

Matrix::Matrix(std::size_t cols, std::vector<Vector> rows) : cols_(cols), rows_(std::move(rows)) {
  for (const auto& r : rows_)
    if (r.size() != cols_)
      throw InvalidInput("ragged matrix: row of length " + std::to_string(r.size()) +
                         ", expected " + std::to_string(cols_));
}

Matrix Matrix::transpose() const {
  std::vector<Vector> t(cols_, Vector(rows_.size()));
  for (std::size_t i = 0; i < rows_.size(); ++i)
    for (std::size_t j = 0; j < cols_; ++j) t[j][i] = rows_[i][j];
  return Matrix(rows_.size(), std::move(t));
}

Vector Matrix::apply(const Vector& x) const {
  if (x.size() != cols_) throw InvalidInput("dimension mismatch in matrix-vector product");
  Vector r(rows_.size());
  for (std::size_t i = 0; i < rows_.size(); ++i) r[i] = dot(rows_[i], x);
  return r;
}

VectorSet::VectorSet(std::size_t ambient_dim, std::vector<Vector> vectors)
    : ambient_dim_(ambient_dim), vectors_(std::move(vectors)) {
  for (const auto& v : vectors_)
    if (v.size() != ambient_dim_)
      throw InvalidInput("vector of length " + std::to_string(v.size()) +
                         " in a set of ambient dimension " + std::to_string(ambient_dim_));
}

void VectorSet::push_back(Vector v) {
  if (v.size() != ambient_dim_)
    throw InvalidInput("vector of length " + std::to_string(v.size()) +
                       " in a set of ambient dimension " + std::to_string(ambient_dim_));
  vectors_.push_back(std::move(v));
}

VectorSet VectorSet::subset(std::span<const std::size_t> indices) const {
  VectorSet out(ambient_dim_);
  out.vectors_.reserve(indices.size());
  for (std::size_t i : indices) out.vectors_.push_back(vectors_.at(i));
  return out;
}

VectorSet VectorSet::without(std::size_t index) const {
  VectorSet out(ambient_dim_);
  for (std::size_t i = 0; i < vectors_.size(); ++i)
    if (i != index) out.vectors_.push_back(vectors_[i]);
  return out;
}

Matrix VectorSet::as_rows() const { return Matrix(ambient_dim_, vectors_); }

std::vector<std::pair<std::size_t, std::size_t>> find_duplicates(const VectorSet& s) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (s[i] == s[j]) out.emplace_back(i, j);
  return out;
}

// ---------------------------------------------------------------------------

Subspace::Subspace(std::size_t ambient_dim, std::vector<Vector> basis)
    : ambient_dim_(ambient_dim), basis_(std::move(basis)) {
  const VectorSet check(ambient_dim_, basis_);
  if (rank(check) != basis_.size()) throw InvalidInput("subspace basis is linearly dependent");
}

Subspace Subspace::full(std::size_t ambient_dim) {
  std::vector<Vector> basis;
  for (std::size_t i = 0; i < ambient_dim; ++i) basis.push_back(unit_vector(ambient_dim, i));
  return make_trusted_subspace(ambient_dim, std::move(basis));
}

bool Subspace::contains(const Vector& v) const {
  if (v.size() != ambient_dim_) throw InvalidInput("dimension mismatch in subspace membership");
  if (is_zero(v)) return true;
  std::vector<Vector> rows = basis_;
  rows.push_back(v);
  return rank(Matrix(ambient_dim_, std::move(rows))) == basis_.size();
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_dim_ != ambient_dim_) throw InvalidInput("ambient dimension mismatch");
  for (const auto& v : other.basis_)
    if (!contains(v)) return false;
  return true;
}

bool Subspace::same_as(const Subspace& other) const {
  return other.ambient_dim_ == ambient_dim_ && other.dim() == dim() && contains(other);
}

// ---------------------------------------------------------------------------

RrefResult rref(const Matrix& m) {
  std::vector<Vector> rows = m.row_list();
  auto pivots = reduce_in_place(rows, m.cols());
  return {Matrix(m.cols(), std::move(rows)), std::move(pivots)};
}

std::size_t rank(const Matrix& m) {
  std::vector<Vector> rows = m.row_list();
  return reduce_in_place(rows, m.cols()).size();
}

std::size_t rank(const VectorSet& s) { return rank(s.as_rows()); }

std::vector<std::size_t> independent_indices(const VectorSet& s) {
  // Echelon rows of the kept vectors, each with a unit pivot.
  std::vector<Vector> echelon;
  std::vector<std::size_t> pivot_cols;
  std::vector<std::size_t> kept;
  for (std::size_t idx = 0; idx < s.size(); ++idx) {
    Vector r = s[idx];
    for (std::size_t e = 0; e < echelon.size(); ++e) {
      const Rational f = r[pivot_cols[e]];
      if (sgn(f) == 0) continue;
      for (std::size_t j = 0; j < r.size(); ++j) r[j] -= f * echelon[e][j];
    }
    std::size_t c = 0;
    while (c < r.size() && sgn(r[c]) == 0) ++c;
    if (c == r.size()) continue;
    const Rational inv = 1 / r[c];
    for (auto& x : r) x *= inv;
    // Keep earlier rows reduced at the new pivot.
    for (auto& row : echelon) {
      const Rational f = row[c];
      if (sgn(f) == 0) continue;
      for (std::size_t j = 0; j < row.size(); ++j) row[j] -= f * r[j];
    }
    echelon.push_back(std::move(r));
    pivot_cols.push_back(c);
    kept.push_back(idx);
  }
  return kept;
}

Subspace span_basis(const VectorSet& s) {
  std::vector<Vector> basis;
  for (std::size_t i : independent_indices(s)) basis.push_back(s[i]);
  return make_trusted_subspace(s.ambient_dim(), std::move(basis));
}

Subspace kernel_basis(const Matrix& m) {
  const auto [reduced, pivots] = rref(m);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  std::vector<Vector> basis;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Vector x = zero_vector(n);
    x[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = -reduced.at(i, f);
    basis.push_back(std::move(x));
  }
  return make_trusted_subspace(n, std::move(basis));
}

Subspace orth_complement(const Subspace& s) {
  return kernel_basis(Matrix(s.ambient_dim(), s.basis()));
}

Vector project_onto_complement(const Subspace& s, const Vector& v) {
  if (v.size() != s.ambient_dim())
    throw InvalidInput("dimension mismatch: vector of length " + std::to_string(v.size()) +
                       " against subspace of ambient dimension " +
                       std::to_string(s.ambient_dim()));
  const auto& b = s.basis();
  if (b.empty()) return v;
  const std::size_t k = b.size();
  // Gram system G c = (b_i . v); G is nonsingular because the basis is independent.
  std::vector<Vector> gram(k, Vector(k));
  Vector rhs(k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) gram[i][j] = dot(b[i], b[j]);
    rhs[i] = dot(b[i], v);
  }
  const auto coeffs = solve(Matrix(k, std::move(gram)), rhs);
  Vector out = v;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < out.size(); ++j) out[j] -= (*coeffs)[i] * b[i][j];
  return out;
}

std::optional<Vector> solve(const Matrix& m, const Vector& rhs) {
  if (rhs.size() != m.rows()) throw InvalidInput("dimension mismatch in linear solve");
  const std::size_t n = m.cols();
  std::vector<Vector> aug;
  aug.reserve(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Vector r = m.row(i);
    r.push_back(rhs[i]);
    aug.push_back(std::move(r));
  }
  const auto pivots = reduce_in_place(aug, n + 1);
  if (!pivots.empty() && pivots.back() == n) return std::nullopt;
  Vector x = zero_vector(n);
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug[i][n];
  return x;
}

}  // namespace conehelly
