#include "conehelly/fuzz.hpp"

#include <algorithm>
#include <functional>

#include "conehelly/errors.hpp"
#include "conehelly/gens.hpp"
#include "conehelly/helly.hpp"
#include "conehelly/posbasis.hpp"

namespace conehelly {

namespace {

constexpr const char* kProperties[] = {
    "lineality_certificate", "monotonicity",   "pos_helly", "pos_witness_enum",
    "pos_witness_reay",      "cone_helly",     "duality",   "corollary",
    "flat_helly",            "reay_partition",
};

PropertyTally& tally(FuzzSummary& s, std::string_view name) {
  for (auto& t : s.properties)
    if (t.name == name) return t;
  s.properties.push_back({std::string(name), 0, 0});
  return s.properties.back();
}

// L is certified as the lineality space when ± each basis vector lies in
// pos A and the projection of A onto L^⊥ is pointed.
bool lineality_certified(const VectorSet& a, const Subspace& l) {
  for (const auto& v : l.basis())
    if (!membership(v, a).in_cone() || !membership(negate(v), a).in_cone()) return false;
  VectorSet projected(a.ambient_dim());
  for (const auto& g : a) {
    Vector p = project_onto_complement(l, g);
    if (!is_zero(p)) projected.push_back(std::move(p));
  }
  return lineality_space(projected).dim() == 0;
}

}  // namespace

std::uint64_t FuzzSummary::total_failures() const {
  std::uint64_t n = 0;
  for (const auto& t : properties) n += t.failed;
  return n;
}

VectorSet fuzz_instance(const FuzzConfig& config, std::uint64_t trial) {
  SplitMix64 rng(config.seed ^ (0xD1B54A32D192ED03ULL * (trial + 1)));
  const auto d = static_cast<std::size_t>(rng.uniform(1, static_cast<std::int64_t>(config.d_max)));
  const auto n = static_cast<std::size_t>(rng.uniform(1, static_cast<std::int64_t>(config.n_max)));
  return gen_random(d, n, config.bound, rng.next());
}

bool check_instance(const VectorSet& a, std::uint64_t trial, FuzzSummary& summary) {
  const std::size_t d = a.ambient_dim();
  std::size_t current_k = 0;
  auto check = [&](std::string_view name, const std::function<bool()>& body) {
    PropertyTally& t = tally(summary, name);
    ++t.checked;
    std::string detail;
    bool ok = false;
    try {
      ok = body();
    } catch (const InternalError& e) {
      detail = e.what();
    }
    if (ok) return true;
    ++t.failed;
    if (!summary.first_failure)
      summary.first_failure = FuzzFailure{trial, std::string(name), current_k, detail, a};
    return false;
  };

  const Subspace l = lineality_space(a);
  const std::size_t lin_dim = l.dim();
  const HalfspaceSystem h(a);

  bool ok = check("lineality_certificate", [&] { return lineality_certified(a, l); });

  ok &= check("monotonicity", [&] {
    // Prefix chain of a trial-dependent rotation of the input order.
    VectorSet prefix(d);
    std::size_t last = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
      prefix.push_back(a[(i + trial) % a.size()]);
      const std::size_t dim = lineality_space(prefix).dim();
      if (dim < last) return false;
      last = dim;
    }
    return last == lin_dim;
  });

  ok &= check("duality", [&] {
    const std::size_t mcd = max_cone_dim(h);
    if (mcd + lin_dim != d) return false;
    const auto ext = extract_cone(h, mcd);
    if (!ext.generators || rank(*ext.generators) != mcd) return false;
    for (const auto& g : *ext.generators)
      if (!h.satisfied_by(g)) return false;
    if (mcd < d && extract_cone(h, mcd + 1).generators) return false;
    return solution_space_rank(h) == mcd;
  });

  ok &= check("reay_partition", [&] {
    const PositiveBasis pb = extract_positive_basis(a);
    if (!is_positive_basis(pb.elements, pb.target) || !pb.target.same_as(l)) return false;
    const std::size_t m = pb.target.dim();
    if (m == 0) return pb.elements.empty();
    if (pb.elements.size() < m + 1 || pb.elements.size() > 2 * m) return false;
    if (m > 4) return true;
    const ReayPartition p = reay_partition(pb);
    std::size_t total = 0;
    for (const auto& part : p.parts) total += part.size();
    return verify_reay(p) && total == pb.elements.size();
  });

  for (std::size_t k = 0; k <= d; ++k) {
    current_k = k;
    ok &= check("flat_helly", [&] {
      const HellyReport r = check_flat_helly(h, k);
      if (r.witness && !verify_witness(a, *r.witness, k)) return false;
      return r.conclusion == (rank(a) <= k);
    });
  }

  for (std::size_t k = 1; k <= d; ++k) {
    current_k = k;
    const HellyBounds b = HellyBounds::make(k, d);

    ok &= check("pos_helly", [&] {
      const bool hyp = check_lineality_hypothesis(a, k);
      return !hyp || lin_dim <= k;
    });
    if (lin_dim > k) {
      std::size_t enum_size = 0;
      ok &= check("pos_witness_enum", [&] {
        const Witness w = witness_lineality_enum(a, k);
        enum_size = w.subset_indices.size();
        return w.subset_indices.size() <= b.h && verify_witness(a, w, k);
      });
      ok &= check("pos_witness_reay", [&] {
        const Witness w = witness_lineality_reay(a, k);
        return w.subset_indices.size() <= b.h && verify_witness(a, w, k) &&
               enum_size <= w.subset_indices.size();
      });
    }

    ok &= check("cone_helly", [&] {
      const HellyReport r = verify_cone_helly(h, k);
      if (r.hypothesis && !r.conclusion) return false;
      if (r.conclusion != (d - lin_dim >= k)) return false;
      if (!r.conclusion)
        return r.witness && r.witness->subset_indices.size() <= b.m && verify_witness(a, *r.witness, k);
      return !r.witness.has_value();
    });

    ok &= check("corollary", [&] {
      const HellyReport r = corollary_check(h, k);
      if (r.hypothesis != r.conclusion) return false;
      if (r.witness) return verify_witness(a, *r.witness, k);
      return r.conclusion;
    });
  }
  return ok;
}

FuzzSummary run_fuzz(const FuzzConfig& config) {
  FuzzSummary summary;
  summary.config = config;
  for (const char* name : kProperties) summary.properties.push_back({name, 0, 0});
  for (std::uint64_t t = 0; t < config.trials; ++t) {
    if (!check_instance(fuzz_instance(config, t), t, summary)) break;
  }
  return summary;
}

}  // namespace conehelly
