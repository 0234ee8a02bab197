#pragma once

// Polyhedral cones with apex at the origin: pos A, its lineality space, and
// the solution cone {x : a.x <= 0 for all a} of a homogeneous system.

#include <optional>
#include <variant>

#include "conehelly/ratlin.hpp"

namespace conehelly {

struct CombinationTerm {
  std::size_t index;
  Rational coefficient;

  friend bool operator==(const CombinationTerm&, const CombinationTerm&) = default;
};

/// Either b = sum coefficient * gens[index] with nonnegative coefficients, or
/// a functional y with y.a <= 0 for every generator and y.b > 0.
struct FarkasCertificate {
  std::variant<std::vector<CombinationTerm>, Vector> proof;

  bool in_cone() const { return proof.index() == 0; }
  const std::vector<CombinationTerm>& combination() const { return std::get<0>(proof); }
  const Vector& separator() const { return std::get<1>(proof); }
};

/// Exact substitution check of either certificate form.
bool verify_certificate(const Vector& b, const VectorSet& gens, const FarkasCertificate& cert);

/// Outer normals of closed halfspaces {x : a.x <= 0}. Zero normals are rejected.
class HalfspaceSystem {
 public:
  explicit HalfspaceSystem(VectorSet normals);
  /// The empty system in dimension d (its solution set is the whole space).
  static HalfspaceSystem empty(std::size_t d) { return HalfspaceSystem(VectorSet(d)); }

  const VectorSet& normals() const { return normals_; }
  std::size_t ambient_dim() const { return normals_.ambient_dim(); }
  std::size_t size() const { return normals_.size(); }
  HalfspaceSystem subsystem(std::span<const std::size_t> indices) const;
  bool satisfied_by(const Vector& x) const;

 private:
  VectorSet normals_;
};

FarkasCertificate membership(const Vector& b, const VectorSet& gens);

/// pos(gens) ∩ −pos(gens), computed as the span of the generators a with
/// −a ∈ pos(gens).
Subspace lineality_space(const VectorSet& gens);

/// Indices of the generators a with −a ∈ pos(gens).
std::vector<std::size_t> reversible_indices(const VectorSet& gens);

bool is_pointed(const VectorSet& gens);

/// Generators projected onto the complement of the lineality space, with
/// zero images dropped. The result generates a pointed cone.
VectorSet project_out_lineality(const VectorSet& gens);

/// Largest k such that the solution cone contains a k-dimensional cone.
std::size_t max_cone_dim(const HalfspaceSystem& h);

/// x0 in L^⊥ (L the lineality space of the normals) with a.x0 = 0 for normals
/// in L and a.x0 < 0 for all others.
Vector relative_interior_point(const HalfspaceSystem& h);

struct ConeExtraction {
  /// Generators of a k-dimensional cone inside the solution set, or nullopt
  /// when no such cone exists.
  std::optional<VectorSet> generators;
  std::size_t max_cone_dim = 0;
  std::size_t lineality_dim = 0;
};

ConeExtraction extract_cone(const HalfspaceSystem& h, std::size_t k);

/// Maximum number of linearly independent solutions of the system.
std::size_t solution_space_rank(const HalfspaceSystem& h);

/// The largest linear subspace inside the solution set: the kernel of the
/// normal matrix.
Subspace lineality_of_polar(const HalfspaceSystem& h);

}  // namespace conehelly
