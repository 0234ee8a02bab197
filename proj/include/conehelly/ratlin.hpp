#pragma once

// Exact rational linear algebra over GMP rationals.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace conehelly {

using Rational = mpq_class;
using Vector = std::vector<Rational>;

Vector zero_vector(std::size_t dim);
Vector unit_vector(std::size_t dim, std::size_t axis);
Rational dot(const Vector& a, const Vector& b);
Vector add(const Vector& a, const Vector& b);
Vector subtract(const Vector& a, const Vector& b);
Vector scale(const Vector& v, const Rational& factor);
Vector negate(const Vector& v);
bool is_zero(const Vector& v);
std::string to_string(const Rational& q);
std::string to_string(const Vector& v);

/// Rectangular matrix stored as rows. A matrix with no rows still carries
/// its column count.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t cols, std::vector<Vector> rows);

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  const Vector& row(std::size_t i) const { return rows_[i]; }
  const std::vector<Vector>& row_list() const { return rows_; }
  const Rational& at(std::size_t i, std::size_t j) const { return rows_[i][j]; }

  Matrix transpose() const;
  Vector apply(const Vector& x) const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t cols_ = 0;
  std::vector<Vector> rows_;
};

/// Ordered finite list of vectors in a common ambient space. Plays the role
/// of a generator set or of the outer normals of a halfspace system.
class VectorSet {
 public:
  VectorSet() = default;
  explicit VectorSet(std::size_t ambient_dim) : ambient_dim_(ambient_dim) {}
  VectorSet(std::size_t ambient_dim, std::vector<Vector> vectors);

  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t size() const { return vectors_.size(); }
  bool empty() const { return vectors_.empty(); }
  const Vector& operator[](std::size_t i) const { return vectors_[i]; }
  const std::vector<Vector>& vectors() const { return vectors_; }
  auto begin() const { return vectors_.begin(); }
  auto end() const { return vectors_.end(); }

  void push_back(Vector v);
  VectorSet subset(std::span<const std::size_t> indices) const;
  VectorSet without(std::size_t index) const;
  /// Vectors as the rows of a matrix.
  Matrix as_rows() const;

  friend bool operator==(const VectorSet&, const VectorSet&) = default;

 private:
  std::size_t ambient_dim_ = 0;
  std::vector<Vector> vectors_;
};

/// Index pairs (i, j), i < j, of equal vectors.
std::vector<std::pair<std::size_t, std::size_t>> find_duplicates(const VectorSet& s);

/// Linearly independent list spanning a subspace. The empty list is the zero
/// subspace.
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(std::size_t ambient_dim) : ambient_dim_(ambient_dim) {}
  /// Throws InvalidInput if the vectors are dependent or of the wrong length.
  Subspace(std::size_t ambient_dim, std::vector<Vector> basis);

  static Subspace full(std::size_t ambient_dim);

  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Vector>& basis() const { return basis_; }
  bool contains(const Vector& v) const;
  bool contains(const Subspace& other) const;
  bool same_as(const Subspace& other) const;

 private:
  struct Trusted {};
  Subspace(Trusted, std::size_t ambient_dim, std::vector<Vector> basis)
      : ambient_dim_(ambient_dim), basis_(std::move(basis)) {}
  friend Subspace make_trusted_subspace(std::size_t, std::vector<Vector>);

  std::size_t ambient_dim_ = 0;
  std::vector<Vector> basis_;
};

struct RrefResult {
  Matrix reduced;
  std::vector<std::size_t> pivots;
};

/// Reduced row echelon form. Pivot search scans rows top-down and takes the
/// first nonzero entry, so the result depends only on the input.
RrefResult rref(const Matrix& m);
std::size_t rank(const Matrix& m);
std::size_t rank(const VectorSet& s);

/// Indices of the vectors kept by a greedy input-order scan that drops every
/// vector already in the span of the earlier kept ones.
std::vector<std::size_t> independent_indices(const VectorSet& s);

/// Basis made of the input vectors selected by independent_indices.
Subspace span_basis(const VectorSet& s);
Subspace kernel_basis(const Matrix& m);
Subspace orth_complement(const Subspace& s);

/// Orthogonal projection of v onto the complement of s.
Vector project_onto_complement(const Subspace& s, const Vector& v);

/// Some x with m x = rhs, or nullopt when the system is inconsistent.
std::optional<Vector> solve(const Matrix& m, const Vector& rhs);

}  // namespace conehelly
