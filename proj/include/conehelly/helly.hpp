#pragma once

// Helly-type checkers for lineality dimension, k-dimensional cones in
// intersections of homogeneous halfspaces, linearly independent solutions,
// and linear subspaces inside such intersections.

#include <functional>
#include <optional>
#include <string_view>

#include "conehelly/cone.hpp"

namespace conehelly {

/// Checkers refuse larger inputs with CapacityExceeded.
inline constexpr std::size_t kEnumerationCutoff = 24;

/// m = max(d+1, 2(d-k+1)) bounds subfamilies for k-dimensional cones;
/// h = max(d+1, 2(k+1)) bounds subsets for lineality dimension k.
struct HellyBounds {
  std::size_t k = 0;
  std::size_t d = 0;
  std::size_t m = 0;
  std::size_t h = 0;

  static HellyBounds make(std::size_t k, std::size_t d);
};

std::size_t bound_m(std::size_t k, std::size_t d);
std::size_t bound_h(std::size_t k, std::size_t d);

enum class WitnessProperty {
  lineality_exceeds,     // dim lpos B > k
  no_k_cone,             // the halfspaces in B admit no k-dimensional cone
  solution_rank_below,   // fewer than k independent solutions
  independent_normals,   // k+1 linearly independent normals
};

std::string_view to_string(WitnessProperty p);
std::optional<WitnessProperty> witness_property_from_string(std::string_view s);

struct Witness {
  std::vector<std::size_t> subset_indices;
  WitnessProperty property = WitnessProperty::lineality_exceeds;
  std::size_t size_bound = 0;
};

/// Re-checks the witness's property on the indicated subset, together with
/// the size bound.
bool verify_witness(const VectorSet& vectors, const Witness& w, std::size_t k);

struct HellyReport {
  std::optional<HellyBounds> bounds;
  /// The subset-size bound the hypothesis quantifies over.
  std::size_t bound_used = 0;
  bool hypothesis = false;
  bool conclusion = false;
  /// Quantity the conclusion is about: dim lpos, max cone dimension,
  /// solution rank, or dimension of the largest contained subspace.
  std::size_t measured = 0;
  std::optional<Witness> witness;
};

/// First subset of {0..n-1} (sizes ascending in [min_size, max_size],
/// lexicographic within a size) accepted by `pred`.
std::optional<std::vector<std::size_t>> find_first_subset(
    std::size_t n, std::size_t min_size, std::size_t max_size,
    const std::function<bool(std::span<const std::size_t>)>& pred);

bool check_lineality_hypothesis(const VectorSet& a, std::size_t k);
Witness witness_lineality_enum(const VectorSet& a, std::size_t k);
Witness witness_lineality_reay(const VectorSet& a, std::size_t k);
HellyReport verify_lineality_helly(const VectorSet& a, std::size_t k);

HellyReport verify_cone_helly(const HalfspaceSystem& h, std::size_t k);
HellyReport corollary_check(const HalfspaceSystem& h, std::size_t k);
HellyReport check_flat_helly(const HalfspaceSystem& h, std::size_t k);

}  // namespace conehelly
