#include "conehelly/io.hpp"

#include <limits>

#include "conehelly/errors.hpp"

namespace conehelly::io {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

const json& field(const json& j, const char* name) {
  if (!j.is_object() || !j.contains(name))
    throw InvalidInput(std::string("missing field \"") + name + "\"");
  return j.at(name);
}

std::size_t natural_field(const json& j, const char* name) {
  const json& v = field(j, name);
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0))
    throw InvalidInput(std::string("field \"") + name + "\" must be a natural number");
  return v.get<std::size_t>();
}

}  // namespace

json to_json(const Rational& q) {
  if (q.get_den() == 1 && q.get_num().fits_slong_p()) return q.get_num().get_si();
  return q.get_str();
}

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  std::string_view sign;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    sign = s.substr(0, 1);
    s.remove_prefix(1);
  }
  const auto slash = s.find('/');
  const std::string_view num = s.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? "1" : s.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den))
    throw InvalidInput("malformed rational \"" + std::string(text) + "\"");
  mpz_class n(std::string(num), 10);
  mpz_class q(std::string(den), 10);
  if (q == 0) throw InvalidInput("zero denominator in \"" + std::string(text) + "\"");
  if (sign == "-") n = -n;
  Rational r(n, q);
  r.canonicalize();
  return r;
}

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return Rational(mpz_class(std::to_string(j.get<std::uint64_t>())));
    return Rational(static_cast<long>(j.get<std::int64_t>()));
  }
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw InvalidInput("coordinate must be an integer or a string \"p/q\", got " + j.dump());
}

json to_json(const Vector& v) {
  json arr = json::array();
  for (const auto& x : v) arr.push_back(to_json(x));
  return arr;
}

Vector vector_from_json(const json& j, std::size_t d) {
  if (!j.is_array()) throw InvalidInput("vector must be an array");
  if (j.size() != d)
    throw InvalidInput("vector has " + std::to_string(j.size()) + " coordinates, expected " +
                       std::to_string(d));
  Vector v;
  v.reserve(d);
  for (const auto& x : j) v.push_back(rational_from_json(x));
  return v;
}

json to_json(const InstanceFile& f) {
  json vecs = json::array();
  for (const auto& v : f.vectors) vecs.push_back(to_json(v));
  return json{{"d", f.d()},
              {"role", f.role == Role::normals ? "normals" : "generators"},
              {"vectors", std::move(vecs)}};
}

InstanceFile parse_instance(const json& j) {
  if (!j.is_object()) throw InvalidInput("instance must be a JSON object");
  InstanceFile f;
  const std::size_t d = natural_field(j, "d");
  const json& role = field(j, "role");
  if (role == "generators")
    f.role = Role::generators;
  else if (role == "normals")
    f.role = Role::normals;
  else
    throw InvalidInput("role must be \"generators\" or \"normals\"");
  const json& vecs = field(j, "vectors");
  if (!vecs.is_array()) throw InvalidInput("\"vectors\" must be an array");
  f.vectors = VectorSet(d);
  for (const auto& v : vecs) f.vectors.push_back(vector_from_json(v, d));
  if (f.role == Role::normals)
    for (std::size_t i = 0; i < f.vectors.size(); ++i)
      if (is_zero(f.vectors[i]))
        throw InvalidInput("normal " + std::to_string(i) + " is the zero vector");
  return f;
}

InstanceFile parse_instance_text(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InvalidInput(std::string("invalid JSON: ") + e.what());
  }
  return parse_instance(j);
}

json to_json(const Subspace& s) {
  json basis = json::array();
  for (const auto& v : s.basis()) basis.push_back(to_json(v));
  return json{{"dim", s.dim()}, {"basis", std::move(basis)}};
}

Subspace subspace_from_json(const json& j, std::size_t d) {
  std::vector<Vector> basis;
  for (const auto& v : field(j, "basis")) basis.push_back(vector_from_json(v, d));
  return Subspace(d, std::move(basis));
}

json to_json(const FarkasCertificate& c) {
  if (!c.in_cone()) return json{{"kind", "separator"}, {"y", to_json(c.separator())}};
  json terms = json::array();
  for (const auto& t : c.combination())
    terms.push_back(json{{"index", t.index}, {"coefficient", to_json(t.coefficient)}});
  return json{{"kind", "combination"}, {"terms", std::move(terms)}};
}

FarkasCertificate certificate_from_json(const json& j, std::size_t d) {
  const json& kind = field(j, "kind");
  FarkasCertificate c;
  if (kind == "separator") {
    c.proof = vector_from_json(field(j, "y"), d);
  } else if (kind == "combination") {
    std::vector<CombinationTerm> terms;
    for (const auto& t : field(j, "terms"))
      terms.push_back({natural_field(t, "index"), rational_from_json(field(t, "coefficient"))});
    c.proof = std::move(terms);
  } else {
    throw InvalidInput("certificate kind must be \"combination\" or \"separator\"");
  }
  return c;
}

json to_json(const HellyBounds& b) {
  return json{{"k", b.k}, {"d", b.d}, {"m", b.m}, {"h", b.h}};
}

json to_json(const Witness& w) {
  return json{{"subset_indices", w.subset_indices},
              {"property", std::string(to_string(w.property))},
              {"size_bound", w.size_bound}};
}

Witness witness_from_json(const json& j) {
  Witness w;
  const json& idx = field(j, "subset_indices");
  if (!idx.is_array()) throw InvalidInput("subset_indices must be an array");
  for (const auto& i : idx) {
    if (!i.is_number_integer() || i.get<std::int64_t>() < 0)
      throw InvalidInput("subset index must be a natural number");
    w.subset_indices.push_back(i.get<std::size_t>());
  }
  const json& prop = field(j, "property");
  if (!prop.is_string()) throw InvalidInput("witness property must be a string");
  const auto p = witness_property_from_string(prop.get<std::string>());
  if (!p) throw InvalidInput("unknown witness property " + prop.dump());
  w.property = *p;
  w.size_bound = natural_field(j, "size_bound");
  return w;
}

json to_json(const HellyReport& r) {
  json out{{"hypothesis", r.hypothesis},
           {"conclusion", r.conclusion},
           {"bound_used", r.bound_used},
           {"measured", r.measured},
           {"witness", r.witness ? to_json(*r.witness) : json(nullptr)}};
  return out;
}

json to_json(const PositiveBasis& p) {
  json elems = json::array();
  for (const auto& v : p.elements) elems.push_back(to_json(v));
  return json{{"target", to_json(p.target)},
              {"elements", std::move(elems)},
              {"source_indices", p.source_indices}};
}

json to_json(const ReayPartition& p) {
  json parts = json::array();
  for (std::size_t j = 0; j < p.size(); ++j) {
    json vecs = json::array();
    for (const auto& v : p.parts[j]) vecs.push_back(to_json(v));
    parts.push_back(json{{"indices", p.indices[j]}, {"vectors", std::move(vecs)}});
  }
  return json{{"r", p.size()}, {"parts", std::move(parts)}};
}

}  // namespace conehelly::io
