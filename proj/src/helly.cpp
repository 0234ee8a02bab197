#include "conehelly/helly.hpp"

#include <algorithm>
#include <array>

#include "conehelly/errors.hpp"
#include "conehelly/posbasis.hpp"

namespace conehelly {

namespace {

void require_k(std::size_t k, std::size_t d) {
  if (k < 1 || k > d)
    throw InvalidInput("k = " + std::to_string(k) + " outside [1, " + std::to_string(d) + "]");
}

void require_capacity(std::size_t n) {
  if (n > kEnumerationCutoff)
    throw CapacityExceeded("input has " + std::to_string(n) +
                           " vectors; subset enumeration is limited to " +
                           std::to_string(kEnumerationCutoff));
}

bool lineality_exceeds(const VectorSet& b, std::size_t threshold) {
  // dim lpos B <= rank B, so low-rank subsets are skipped without an LP.
  return rank(b) > threshold && lineality_space(b).dim() > threshold;
}

// Smallest lexicographically-first subset with dim lpos > threshold, among
// subsets of size at most max_size.
std::optional<std::vector<std::size_t>> smallest_lineality_subset(const VectorSet& a,
                                                                  std::size_t threshold,
                                                                  std::size_t max_size) {
  return find_first_subset(a.size(), threshold + 2, max_size, [&](std::span<const std::size_t> s) {
    return lineality_exceeds(a.subset(s), threshold);
  });
}

// Report for "the halfspaces carry at least k dimensions of <quantity>",
// where the quantity is d - dim lpos(normals) for both the cone and the
// solution-rank versions.
HellyReport cone_style_report(const HalfspaceSystem& h, std::size_t k, WitnessProperty property,
                              const std::function<std::size_t(const HalfspaceSystem&)>& measure) {
  const std::size_t d = h.ambient_dim();
  require_k(k, d);
  require_capacity(h.size());
  HellyReport r;
  r.bounds = HellyBounds::make(k, d);
  r.bound_used = r.bounds->m;
  r.measured = measure(h);
  r.conclusion = r.measured >= k;
  if (r.conclusion) {
    // Dropping halfspaces only enlarges the intersection.
    r.hypothesis = true;
    return r;
  }
  // The whole family fails, so a smallest failing subfamily exists.
  const auto sub = find_first_subset(h.size(), d - k + 2, h.size(), [&](std::span<const std::size_t> s) {
    const HalfspaceSystem part = h.subsystem(s);
    return rank(part.normals()) > d - k && measure(part) < k;
  });
  if (!sub) throw InternalError("no failing subfamily although the full family fails");
  r.hypothesis = sub->size() > r.bound_used;
  if (r.hypothesis)
    throw InternalError("hypothesis holds with bound " + std::to_string(r.bound_used) +
                        " but the conclusion fails (smallest failing subfamily has " +
                        std::to_string(sub->size()) + " members)");
  r.witness = Witness{*sub, property, r.bound_used};
  return r;
}

}  // namespace

HellyBounds HellyBounds::make(std::size_t k, std::size_t d) {
  return HellyBounds{k, d, bound_m(k, d), bound_h(k, d)};
}

std::size_t bound_m(std::size_t k, std::size_t d) {
  require_k(k, d);
  return std::max(d + 1, 2 * (d - k + 1));
}

std::size_t bound_h(std::size_t k, std::size_t d) {
  require_k(k, d);
  return std::max(d + 1, 2 * (k + 1));
}

namespace {
constexpr std::array<std::pair<WitnessProperty, std::string_view>, 4> kPropertyNames{{
    {WitnessProperty::lineality_exceeds, "lineality_dim_exceeds_k"},
    {WitnessProperty::no_k_cone, "no_k_dim_cone"},
    {WitnessProperty::solution_rank_below, "solution_rank_below_k"},
    {WitnessProperty::independent_normals, "independent_k_plus_1_normals"},
}};
}  // namespace

std::string_view to_string(WitnessProperty p) {
  for (const auto& [prop, name] : kPropertyNames)
    if (prop == p) return name;
  return "unknown";
}

std::optional<WitnessProperty> witness_property_from_string(std::string_view s) {
  for (const auto& [prop, name] : kPropertyNames)
    if (name == s) return prop;
  return std::nullopt;
}

bool verify_witness(const VectorSet& vectors, const Witness& w, std::size_t k) {
  const auto& idx = w.subset_indices;
  if (idx.size() > w.size_bound) return false;
  if (!std::is_sorted(idx.begin(), idx.end()) ||
      std::adjacent_find(idx.begin(), idx.end()) != idx.end())
    return false;
  for (std::size_t i : idx)
    if (i >= vectors.size()) return false;
  const VectorSet sub = vectors.subset(idx);
  switch (w.property) {
    case WitnessProperty::lineality_exceeds:
      return lineality_space(sub).dim() > k;
    case WitnessProperty::no_k_cone:
      return !extract_cone(HalfspaceSystem(sub), k).generators.has_value();
    case WitnessProperty::solution_rank_below:
      return solution_space_rank(HalfspaceSystem(sub)) < k;
    case WitnessProperty::independent_normals:
      return sub.size() == k + 1 && rank(sub) == k + 1;
  }
  return false;
}

std::optional<std::vector<std::size_t>> find_first_subset(
    std::size_t n, std::size_t min_size, std::size_t max_size,
    const std::function<bool(std::span<const std::size_t>)>& pred) {
  max_size = std::min(max_size, n);
  std::vector<std::size_t> pick;
  for (std::size_t size = min_size; size <= max_size; ++size) {
    pick.resize(size);
    for (std::size_t i = 0; i < size; ++i) pick[i] = i;
    for (;;) {
      if (pred(pick)) return pick;
      std::size_t i = size;
      while (i > 0 && pick[i - 1] == n - size + i - 1) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < size; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return std::nullopt;
}

bool check_lineality_hypothesis(const VectorSet& a, std::size_t k) {
  const std::size_t h = bound_h(k, a.ambient_dim());
  require_capacity(a.size());
  // lpos B ⊆ lpos A, so no subset can fail when A itself passes.
  if (lineality_space(a).dim() <= k) return true;
  return !smallest_lineality_subset(a, k, h).has_value();
}

Witness witness_lineality_enum(const VectorSet& a, std::size_t k) {
  const std::size_t h = bound_h(k, a.ambient_dim());
  require_capacity(a.size());
  if (lineality_space(a).dim() <= k)
    throw InvalidInput("precondition violated: dim lpos A <= k = " + std::to_string(k));
  auto sub = smallest_lineality_subset(a, k, a.size());
  if (!sub) throw InternalError("dim lpos A > k but no subset reaches it");
  if (sub->size() > h)
    throw InternalError("smallest subset with dim lpos > " + std::to_string(k) + " has " +
                        std::to_string(sub->size()) + " elements, above the bound " +
                        std::to_string(h));
  return Witness{std::move(*sub), WitnessProperty::lineality_exceeds, h};
}

Witness witness_lineality_reay(const VectorSet& a, std::size_t k) {
  const std::size_t h = bound_h(k, a.ambient_dim());
  const PositiveBasis basis = extract_positive_basis(a);
  if (basis.target.dim() <= k)
    throw InvalidInput("precondition violated: dim lpos A <= k = " + std::to_string(k));
  const ReayPartition p = reay_partition(basis);
  std::vector<std::size_t> prefix;
  VectorSet prefix_set(a.ambient_dim());
  for (std::size_t j = 0; j < p.size(); ++j) {
    for (std::size_t i : p.indices[j]) {
      prefix.push_back(basis.source_indices[i]);
      prefix_set.push_back(basis.elements[i]);
    }
    if (span_basis(prefix_set).dim() > k) break;
  }
  std::sort(prefix.begin(), prefix.end());
  if (prefix.size() > h)
    throw InternalError("Reay prefix of size " + std::to_string(prefix.size()) +
                        " exceeds the bound " + std::to_string(h));
  return Witness{std::move(prefix), WitnessProperty::lineality_exceeds, h};
}

HellyReport verify_lineality_helly(const VectorSet& a, std::size_t k) {
  HellyReport r;
  r.bounds = HellyBounds::make(k, a.ambient_dim());
  r.bound_used = r.bounds->h;
  require_capacity(a.size());
  r.measured = lineality_space(a).dim();
  r.conclusion = r.measured <= k;
  r.hypothesis = check_lineality_hypothesis(a, k);
  if (r.hypothesis && !r.conclusion)
    throw InternalError("every subset of size <= " + std::to_string(r.bound_used) +
                        " has dim lpos <= k but dim lpos A = " + std::to_string(r.measured));
  if (!r.conclusion) r.witness = witness_lineality_enum(a, k);
  return r;
}

HellyReport verify_cone_helly(const HalfspaceSystem& h, std::size_t k) {
  return cone_style_report(h, k, WitnessProperty::no_k_cone,
                           [](const HalfspaceSystem& s) { return max_cone_dim(s); });
}

HellyReport corollary_check(const HalfspaceSystem& h, std::size_t k) {
  return cone_style_report(h, k, WitnessProperty::solution_rank_below,
                           [](const HalfspaceSystem& s) { return solution_space_rank(s); });
}

HellyReport check_flat_helly(const HalfspaceSystem& h, std::size_t k) {
  const std::size_t d = h.ambient_dim();
  if (k > d) throw InvalidInput("k = " + std::to_string(k) + " exceeds d = " + std::to_string(d));
  require_capacity(h.size());
  HellyReport r;
  r.bound_used = k + 1;
  r.measured = lineality_of_polar(h).dim();
  r.conclusion = r.measured + k >= d;
  const auto independent = find_first_subset(h.size(), k + 1, k + 1, [&](std::span<const std::size_t> s) {
    return rank(h.normals().subset(s)) == k + 1;
  });
  r.hypothesis = !independent.has_value();
  if (r.hypothesis != r.conclusion)
    throw InternalError("flat criterion disagrees with the rank of the normals");
  if (independent) r.witness = Witness{*independent, WitnessProperty::independent_normals, k + 1};
  return r;
}

}  // namespace conehelly
