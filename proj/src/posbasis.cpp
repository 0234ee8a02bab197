#include "conehelly/posbasis.hpp"

#include <algorithm>
#include <functional>

#include "conehelly/errors.hpp"

namespace conehelly {

namespace {

// Prefix union B_j of the first `count` parts.
VectorSet prefix_union(const std::vector<VectorSet>& parts, std::size_t count, std::size_t dim) {
  VectorSet out(dim);
  for (std::size_t j = 0; j < count; ++j)
    for (const auto& v : parts[j]) out.push_back(v);
  return out;
}

bool prefix_ok(const VectorSet& prefix, std::size_t j) {
  const Subspace span = span_basis(prefix);
  return span.dim() + j == prefix.size() && is_positive_basis(prefix, span);
}

class ReaySearch {
 public:
  explicit ReaySearch(const VectorSet& basis) : basis_(basis), used_(basis.size(), false) {}

  bool run() { return extend(basis_.size()); }
  const std::vector<std::vector<std::size_t>>& parts() const { return parts_; }

 private:
  bool extend(std::size_t max_size) {
    const std::size_t remaining = static_cast<std::size_t>(std::count(used_.begin(), used_.end(), false));
    if (remaining == 0) return true;
    std::vector<std::size_t> free;
    for (std::size_t i = 0; i < used_.size(); ++i)
      if (!used_[i]) free.push_back(i);

    for (std::size_t size = std::min(max_size, remaining); size >= 2; --size) {
      // A leftover of one element can never form a part.
      if (remaining - size == 1) continue;
      std::vector<std::size_t> pick(size);
      for (std::size_t i = 0; i < size; ++i) pick[i] = i;
      for (;;) {
        std::vector<std::size_t> part;
        for (std::size_t p : pick) part.push_back(free[p]);
        if (try_part(part, size)) return true;
        // Next combination in lexicographic order.
        std::size_t i = size;
        while (i > 0 && pick[i - 1] == free.size() - size + i - 1) --i;
        if (i == 0) break;
        ++pick[i - 1];
        for (std::size_t j = i; j < size; ++j) pick[j] = pick[j - 1] + 1;
      }
    }
    return false;
  }

  bool try_part(const std::vector<std::size_t>& part, std::size_t size) {
    VectorSet prefix(basis_.ambient_dim());
    for (const auto& p : parts_)
      for (std::size_t i : p) prefix.push_back(basis_[i]);
    for (std::size_t i : part) prefix.push_back(basis_[i]);
    if (!prefix_ok(prefix, parts_.size() + 1)) return false;

    parts_.push_back(part);
    for (std::size_t i : part) used_[i] = true;
    if (extend(size)) return true;
    for (std::size_t i : part) used_[i] = false;
    parts_.pop_back();
    return false;
  }

  const VectorSet& basis_;
  std::vector<bool> used_;
  std::vector<std::vector<std::size_t>> parts_;
};

ReayPartition build_partition(const VectorSet& basis, std::vector<std::vector<std::size_t>> idx) {
  ReayPartition p;
  for (auto& part : idx) {
    std::sort(part.begin(), part.end());
    p.parts.push_back(basis.subset(part));
  }
  p.indices = std::move(idx);
  return p;
}

}  // namespace

bool positively_spans(const VectorSet& x, const Subspace& target) {
  if (x.ambient_dim() != target.ambient_dim()) return false;
  for (const auto& v : x)
    if (!target.contains(v)) return false;
  for (const auto& u : target.basis()) {
    if (!membership(u, x).in_cone()) return false;
    if (!membership(negate(u), x).in_cone()) return false;
  }
  return true;
}

bool is_positive_basis(const VectorSet& x, const Subspace& target) {
  if (!positively_spans(x, target)) return false;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (positively_spans(x.without(i), target)) return false;
  return true;
}

PositiveBasis extract_positive_basis(const VectorSet& a) {
  std::vector<std::size_t> kept = reversible_indices(a);
  const Subspace target = span_basis(a.subset(kept));
  for (std::size_t pos = 0; pos < kept.size();) {
    std::vector<std::size_t> trial = kept;
    trial.erase(trial.begin() + static_cast<std::ptrdiff_t>(pos));
    if (positively_spans(a.subset(trial), target))
      kept = std::move(trial);
    else
      ++pos;
  }
  PositiveBasis out{target, a.subset(kept), kept};
  if (!is_positive_basis(out.elements, out.target))
    throw InternalError("greedy extraction did not produce a positive basis");
  return out;
}

ReayPartition reay_partition(const PositiveBasis& x) {
  if (!is_positive_basis(x.elements, x.target))
    throw InvalidInput("reay_partition: input is not a positive basis of its target");
  if (x.elements.empty()) return {};

  ReaySearch search(x.elements);
  if (!search.run())
    throw InternalError("no Reay partition found for a verified positive basis");

  // Canonical order: size descending, then smallest index. Equal-size parts
  // may only be reordered if every prefix still verifies.
  auto found = search.parts();
  for (auto& part : found) std::sort(part.begin(), part.end());
  auto sorted = found;
  std::stable_sort(sorted.begin(), sorted.end(), [](const auto& l, const auto& r) {
    if (l.size() != r.size()) return l.size() > r.size();
    return l.front() < r.front();
  });
  if (sorted != found) {
    ReayPartition canonical = build_partition(x.elements, std::move(sorted));
    if (verify_reay(canonical)) return canonical;
  }
  ReayPartition p = build_partition(x.elements, std::move(found));
  if (!verify_reay(p)) throw InternalError("Reay search produced an invalid partition");
  return p;
}

bool verify_reay(const ReayPartition& p) {
  if (p.parts.empty()) return true;
  const std::size_t dim = p.parts.front().ambient_dim();
  for (std::size_t j = 0; j < p.parts.size(); ++j) {
    if (p.parts[j].ambient_dim() != dim || p.parts[j].size() < 2) return false;
    if (j > 0 && p.parts[j].size() > p.parts[j - 1].size()) return false;
  }
  const VectorSet all = prefix_union(p.parts, p.parts.size(), dim);
  if (!find_duplicates(all).empty()) return false;
  for (std::size_t j = 1; j <= p.parts.size(); ++j)
    if (!prefix_ok(prefix_union(p.parts, j, dim), j)) return false;
  return true;
}

}  // namespace conehelly
