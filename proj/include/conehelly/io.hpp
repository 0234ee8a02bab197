#pragma once

// JSON instance and report files. Rationals serialize as JSON integers when
// they are integers that fit in 64 bits, otherwise as strings "p" or "p/q".

#include <json.hpp>

#include "conehelly/helly.hpp"
#include "conehelly/posbasis.hpp"

namespace conehelly::io {

using nlohmann::json;

enum class Role { generators, normals };

struct InstanceFile {
  Role role = Role::generators;
  VectorSet vectors;

  std::size_t d() const { return vectors.ambient_dim(); }
};

json to_json(const Rational& q);
Rational rational_from_json(const json& j);
Rational parse_rational(std::string_view text);
json to_json(const Vector& v);
Vector vector_from_json(const json& j, std::size_t d);

json to_json(const InstanceFile& f);
/// Validates the schema {"d", "role", "vectors"}; throws InvalidInput.
InstanceFile parse_instance(const json& j);
InstanceFile parse_instance_text(std::string_view text);

json to_json(const Subspace& s);
Subspace subspace_from_json(const json& j, std::size_t d);
json to_json(const FarkasCertificate& c);
FarkasCertificate certificate_from_json(const json& j, std::size_t d);
json to_json(const HellyBounds& b);
json to_json(const Witness& w);
Witness witness_from_json(const json& j);
json to_json(const HellyReport& r);
json to_json(const PositiveBasis& p);
json to_json(const ReayPartition& p);

}  // namespace conehelly::io
