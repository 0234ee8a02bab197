#pragma once

// Positive bases of linear subspaces and their Reay partitions.

#include "conehelly/cone.hpp"

namespace conehelly {

/// A subset X of some generator list with pos X = target and no element
/// removable.
struct PositiveBasis {
  Subspace target;
  VectorSet elements;
  /// Position of each element in the list it was extracted from.
  std::vector<std::size_t> source_indices;
};

/// Ordered partition X_1, ..., X_r of a positive basis. Every prefix union
/// B_j is a positive basis of its span, which has dimension |B_j| - j, and
/// |X_1| >= ... >= |X_r| >= 2.
struct ReayPartition {
  std::vector<VectorSet> parts;
  /// Indices of each part's vectors into the partitioned basis.
  std::vector<std::vector<std::size_t>> indices;

  std::size_t size() const { return parts.size(); }
};

/// pos x = target with x inside target, tested on ± each basis vector.
bool positively_spans(const VectorSet& x, const Subspace& target);

bool is_positive_basis(const VectorSet& x, const Subspace& target);

/// Restricts `a` to its reversible members and greedily drops elements in
/// input order while positive spanning of the lineality space survives.
PositiveBasis extract_positive_basis(const VectorSet& a);

/// Backtracking search for a Reay partition. Throws InvalidInput when the
/// input is not a positive basis of its target.
ReayPartition reay_partition(const PositiveBasis& x);

bool verify_reay(const ReayPartition& p);

}  // namespace conehelly
