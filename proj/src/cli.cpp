#include "conehelly/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "conehelly/errors.hpp"
#include "conehelly/fuzz.hpp"
#include "conehelly/gens.hpp"
#include "conehelly/io.hpp"

namespace conehelly::cli {

namespace {

using io::json;

struct Options {
  std::string input = "-";
  bool pretty = false;
  std::size_t k = 0;
  std::size_t d = 0;
  std::size_t n = 0;
  std::uint64_t bound = 2;
  std::uint64_t seed = 0;
  std::uint64_t trials = 100;
  std::size_t d_max = 4;
  std::size_t n_max = 10;
  std::string point;
  std::string example;
  std::string dump = "conehelly-fuzz-failure.json";
  std::string verify;
};

std::string read_all(const std::string& path, std::istream& in) {
  std::ostringstream ss;
  if (path.empty() || path == "-") {
    ss << in.rdbuf();
  } else {
    std::ifstream f(path);
    if (!f) throw InvalidInput("cannot open " + path);
    ss << f.rdbuf();
  }
  return ss.str();
}

json parse_json_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InvalidInput(std::string("invalid JSON: ") + e.what());
  }
}

Vector parse_point(const std::string& text, std::size_t d) {
  Vector v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) v.push_back(io::parse_rational(item));
  if (v.size() != d)
    throw InvalidInput("--point has " + std::to_string(v.size()) + " coordinates, expected " +
                       std::to_string(d));
  return v;
}

json vector_list(const VectorSet& s) {
  json arr = json::array();
  for (const auto& v : s) arr.push_back(io::to_json(v));
  return arr;
}

VectorSet vector_list_from_json(const json& j, std::size_t d) {
  VectorSet s(d);
  for (const auto& v : j) s.push_back(io::vector_from_json(v, d));
  return s;
}

json report(const std::string& op, json inputs, json result) {
  return json{{"operation", op}, {"inputs", std::move(inputs)}, {"result", std::move(result)}};
}

json instance_inputs(const io::InstanceFile& f) { return json{{"instance", io::to_json(f)}}; }

// ---------------------------------------------------------------------------
// Subcommand bodies. Each returns the report to print.

json cmd_lineality(const io::InstanceFile& f) {
  const Subspace l = lineality_space(f.vectors);
  json res = io::to_json(l);
  res["reversible_indices"] = reversible_indices(f.vectors);
  res["pointed"] = l.dim() == 0;
  res["projected"] = vector_list(project_out_lineality(f.vectors));
  return report("lineality", instance_inputs(f), std::move(res));
}

json cmd_membership(const io::InstanceFile& f, const Options& o) {
  const Vector b = parse_point(o.point, f.d());
  const FarkasCertificate c = membership(b, f.vectors);
  json in = instance_inputs(f);
  in["point"] = io::to_json(b);
  return report("membership", std::move(in),
                json{{"in_cone", c.in_cone()}, {"certificate", io::to_json(c)}});
}

json cmd_posbasis(const io::InstanceFile& f) {
  const PositiveBasis pb = extract_positive_basis(f.vectors);
  json res = io::to_json(pb);
  res["size"] = pb.elements.size();
  return report("posbasis", instance_inputs(f), std::move(res));
}

json cmd_reay(const io::InstanceFile& f) {
  const PositiveBasis pb = extract_positive_basis(f.vectors);
  const ReayPartition p = reay_partition(pb);
  json prefix_dims = json::array();
  VectorSet prefix(f.d());
  for (const auto& part : p.parts) {
    for (const auto& v : part) prefix.push_back(v);
    prefix_dims.push_back(span_basis(prefix).dim());
  }
  json res{{"basis", io::to_json(pb)}, {"partition", io::to_json(p)}, {"prefix_dims", prefix_dims}};
  return report("reay", instance_inputs(f), std::move(res));
}

json cmd_maxcone(const io::InstanceFile& f, const std::string& op) {
  const HalfspaceSystem h(f.vectors);
  const std::size_t mcd = max_cone_dim(h);
  const auto ext = extract_cone(h, mcd);
  json res{{op == "solution-rank" ? "rank" : "max_cone_dim", mcd},
           {"lineality", io::to_json(lineality_space(f.vectors))},
           {"generators", vector_list(*ext.generators)},
           {"interior_point", io::to_json(relative_interior_point(h))}};
  return report(op, instance_inputs(f), std::move(res));
}

json cmd_extract_cone(const io::InstanceFile& f, const Options& o) {
  const HalfspaceSystem h(f.vectors);
  const auto ext = extract_cone(h, o.k);
  json in = instance_inputs(f);
  in["k"] = o.k;
  json res{{"feasible", ext.generators.has_value()},
           {"generators", ext.generators ? vector_list(*ext.generators) : json(nullptr)},
           {"max_cone_dim", ext.max_cone_dim},
           {"lineality_dim", ext.lineality_dim}};
  return report("extract-cone", std::move(in), std::move(res));
}

json cmd_polar_lineality(const io::InstanceFile& f) {
  const HalfspaceSystem h(f.vectors);
  return report("polar-lineality", instance_inputs(f), io::to_json(lineality_of_polar(h)));
}

json helly_report(const std::string& op, const io::InstanceFile& f, std::size_t k,
                  const HellyReport& r, json extra = json::object()) {
  json in = instance_inputs(f);
  in["k"] = k;
  json res = io::to_json(r);
  for (auto& [key, value] : extra.items()) res[key] = value;
  json out = report(op, std::move(in), std::move(res));
  if (r.bounds) out["bounds"] = io::to_json(*r.bounds);
  return out;
}

json cmd_helly_pos(const io::InstanceFile& f, const Options& o) {
  const HellyReport r = verify_lineality_helly(f.vectors, o.k);
  json extra = json::object();
  extra["witness_reay"] = r.conclusion ? json(nullptr)
                                       : io::to_json(witness_lineality_reay(f.vectors, o.k));
  return helly_report("helly-pos", f, o.k, r, std::move(extra));
}

json cmd_gen(const Options& o) {
  io::InstanceFile f;
  if (o.example == "simplex-like" || o.example == "example1") {
    f.vectors = gen_simplex_like(o.d);
    f.role = o.example == "example1" ? io::Role::normals : io::Role::generators;
  } else if (o.example == "axis-pairs") {
    f.vectors = gen_axis_pairs(o.k, o.d);
  } else if (o.example == "example2") {
    f.vectors = gen_example2(o.d, o.k).normals();
    f.role = io::Role::normals;
  } else if (o.example == "random") {
    f.vectors = gen_random(o.d, o.n, o.bound, o.seed);
  } else {
    throw InvalidInput("unknown example \"" + o.example +
                       "\" (simplex-like, example1, axis-pairs, example2, random)");
  }
  return io::to_json(f);
}

json cmd_verify_tightness(const Options& o) {
  bool tight = false;
  json in{{"example", o.example}, {"d", o.d}};
  if (o.example == "1" || o.example == "example1") {
    tight = verify_tightness_example1(o.d);
  } else if (o.example == "2" || o.example == "example2") {
    tight = verify_tightness_example2(o.d, o.k);
    in["k"] = o.k;
  } else {
    throw InvalidInput("--example must be 1 or 2");
  }
  return report("verify-tightness", std::move(in), json{{"tight", tight}});
}

json summary_json(const FuzzSummary& s) {
  json props = json::array();
  for (const auto& t : s.properties)
    props.push_back(json{{"name", t.name}, {"checked", t.checked}, {"failed", t.failed}});
  json res{{"properties", std::move(props)}, {"failures", s.total_failures()}};
  if (s.first_failure) {
    const auto& f = *s.first_failure;
    res["first_failure"] = json{{"trial", f.trial},
                                {"property", f.property},
                                {"k", f.k},
                                {"detail", f.detail},
                                {"instance", io::to_json(io::InstanceFile{io::Role::generators, f.instance})}};
  }
  const auto& c = s.config;
  json in{{"d_max", c.d_max}, {"n_max", c.n_max}, {"bound", c.bound}, {"trials", c.trials}, {"seed", c.seed}};
  return report("fuzz", std::move(in), std::move(res));
}

// ---------------------------------------------------------------------------
// Independent re-verification of a report.

using Checks = std::vector<std::pair<std::string, bool>>;

bool lineality_basis_certified(const VectorSet& a, const Subspace& l) {
  for (const auto& v : l.basis())
    if (!membership(v, a).in_cone() || !membership(negate(v), a).in_cone()) return false;
  VectorSet projected(a.ambient_dim());
  for (const auto& g : a) {
    Vector p = project_onto_complement(l, g);
    if (!is_zero(p)) projected.push_back(std::move(p));
  }
  // Pointedness of the projection, read from certificates: no projected
  // generator is reversible.
  for (const auto& g : projected)
    if (membership(negate(g), projected).in_cone()) return false;
  return true;
}

bool cone_generators_valid(const HalfspaceSystem& h, const VectorSet& g, std::size_t k) {
  if (rank(g) != k) return false;
  for (const auto& v : g)
    if (!h.satisfied_by(v)) return false;
  return true;
}

Checks verify_report(const json& rep) {
  Checks checks;
  if (!rep.contains("operation")) {
    io::parse_instance(rep);
    checks.emplace_back("instance_schema", true);
    return checks;
  }
  const std::string op = rep.at("operation").get<std::string>();
  const json& in = rep.at("inputs");
  const json& res = rep.at("result");
  if (op == "fuzz") {
    checks.emplace_back("no_failures", res.at("failures").get<std::uint64_t>() == 0);
    return checks;
  }
  if (op == "verify-tightness") {
    Options o;
    o.example = in.at("example").get<std::string>();
    o.d = in.at("d").get<std::size_t>();
    if (in.contains("k")) o.k = in.at("k").get<std::size_t>();
    checks.emplace_back("tight_recomputed", cmd_verify_tightness(o).at("result").at("tight") == res.at("tight"));
    return checks;
  }

  const io::InstanceFile f = io::parse_instance(in.at("instance"));
  const std::size_t d = f.d();
  const VectorSet& a = f.vectors;

  if (op == "lineality") {
    const Subspace l = io::subspace_from_json(res, d);
    checks.emplace_back("lineality_certified", lineality_basis_certified(a, l));
  } else if (op == "membership") {
    const Vector b = io::vector_from_json(in.at("point"), d);
    const auto cert = io::certificate_from_json(res.at("certificate"), d);
    checks.emplace_back("certificate", verify_certificate(b, a, cert));
    checks.emplace_back("in_cone_flag", cert.in_cone() == res.at("in_cone").get<bool>());
  } else if (op == "posbasis" || op == "reay") {
    const json& pbj = op == "reay" ? res.at("basis") : res;
    const Subspace target = io::subspace_from_json(pbj.at("target"), d);
    const VectorSet elems = vector_list_from_json(pbj.at("elements"), d);
    const auto src = pbj.at("source_indices").get<std::vector<std::size_t>>();
    bool sourced = src.size() == elems.size();
    for (std::size_t i = 0; sourced && i < src.size(); ++i)
      sourced = src[i] < a.size() && a[src[i]] == elems[i];
    checks.emplace_back("elements_from_input", sourced);
    checks.emplace_back("positive_basis", is_positive_basis(elems, target));
    checks.emplace_back("target_is_lineality", lineality_basis_certified(a, target));
    if (op == "reay") {
      ReayPartition p;
      for (const auto& part : res.at("partition").at("parts")) {
        p.parts.push_back(vector_list_from_json(part.at("vectors"), d));
        p.indices.push_back(part.at("indices").get<std::vector<std::size_t>>());
      }
      std::size_t total = 0;
      for (const auto& part : p.parts) total += part.size();
      checks.emplace_back("partition_covers_basis", total == elems.size());
      checks.emplace_back("reay_invariants", verify_reay(p));
    }
  } else if (op == "maxcone" || op == "solution-rank") {
    const HalfspaceSystem h(a);
    const std::size_t value = res.at(op == "maxcone" ? "max_cone_dim" : "rank").get<std::size_t>();
    const Subspace l = io::subspace_from_json(res.at("lineality"), d);
    checks.emplace_back("lineality_certified", lineality_basis_certified(a, l));
    checks.emplace_back("duality", value + l.dim() == d);
    checks.emplace_back("generators", cone_generators_valid(h, vector_list_from_json(res.at("generators"), d), value));
  } else if (op == "extract-cone") {
    const HalfspaceSystem h(a);
    const std::size_t k = in.at("k").get<std::size_t>();
    if (res.at("feasible").get<bool>()) {
      checks.emplace_back("generators", cone_generators_valid(h, vector_list_from_json(res.at("generators"), d), k));
    } else {
      const Subspace l = lineality_space(a);
      checks.emplace_back("lineality_certified", lineality_basis_certified(a, l));
      checks.emplace_back("obstruction", d - l.dim() < k);
    }
  } else if (op == "polar-lineality") {
    const Subspace s = io::subspace_from_json(res, d);
    bool inside = true;
    for (const auto& v : s.basis())
      for (const auto& n : a) inside = inside && sgn(dot(v, n)) == 0;
    checks.emplace_back("inside_every_halfspace", inside);
    checks.emplace_back("dimension", s.dim() + rank(a) == d);
  } else if (op == "helly-pos" || op == "helly-cone" || op == "corollary" || op == "flat-helly") {
    const std::size_t k = in.at("k").get<std::size_t>();
    const bool conclusion = res.at("conclusion").get<bool>();
    if (!res.at("witness").is_null()) {
      const Witness w = io::witness_from_json(res.at("witness"));
      checks.emplace_back("witness", verify_witness(a, w, k));
      checks.emplace_back("witness_bound", w.size_bound == res.at("bound_used").get<std::size_t>());
    }
    if (res.contains("witness_reay") && !res.at("witness_reay").is_null())
      checks.emplace_back("witness_reay", verify_witness(a, io::witness_from_json(res.at("witness_reay")), k));
    bool recomputed = false;
    if (op == "helly-pos") recomputed = lineality_space(a).dim() <= k;
    if (op == "helly-cone") recomputed = max_cone_dim(HalfspaceSystem(a)) >= k;
    if (op == "corollary") recomputed = solution_space_rank(HalfspaceSystem(a)) >= k;
    if (op == "flat-helly") recomputed = rank(a) <= k;
    checks.emplace_back("conclusion", recomputed == conclusion);
    checks.emplace_back("witness_present_iff_needed",
                        op == "flat-helly" ? res.at("witness").is_null() == res.at("hypothesis").get<bool>()
                                           : res.at("witness").is_null() == conclusion);
  } else {
    throw InvalidInput("cannot verify operation \"" + op + "\"");
  }
  return checks;
}

// ---------------------------------------------------------------------------

void render_pretty(const json& j, const std::string& prefix, std::ostream& out) {
  if (j.is_object()) {
    for (const auto& [key, value] : j.items())
      render_pretty(value, prefix.empty() ? key : prefix + "." + key, out);
  } else if (j.is_array() && !j.empty() && (j.front().is_object() || j.front().is_array()) &&
             !(j.front().is_array() && !j.front().empty() && !j.front().front().is_structured())) {
    for (std::size_t i = 0; i < j.size(); ++i) render_pretty(j[i], prefix + "[" + std::to_string(i) + "]", out);
  } else {
    out << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << '\n';
  }
}

void emit(const json& j, bool pretty, std::ostream& out) {
  if (pretty)
    render_pretty(j, "", out);
  else
    out << j.dump() << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact polyhedral-cone toolkit and Helly-type checkers", "conehelly"};
  app.require_subcommand(0, 1);
  app.add_option("--verify", o.verify, "Re-verify a report file ('-' for stdin)");

  auto common = [&](CLI::App* sub) {
    sub->add_option("-i,--input", o.input, "Instance file ('-' for stdin)");
    sub->add_flag("--pretty", o.pretty, "Human-readable output");
    sub->add_flag_function("--json", [&](std::int64_t) { o.pretty = false; }, "JSON output (default)");
    return sub;
  };
  auto with_k = [&](CLI::App* sub) {
    sub->add_option("-k,--k", o.k, "Dimension parameter")->required();
    return sub;
  };

  const std::vector<std::pair<std::string, std::string>> instance_cmds = {
      {"lineality", "Lineality space of pos A"},
      {"posbasis", "Positive basis of the lineality space"},
      {"reay", "Reay partition of the extracted positive basis"},
      {"maxcone", "Largest k with a k-dimensional cone in the solution set"},
      {"solution-rank", "Number of linearly independent solutions"},
      {"polar-lineality", "Largest subspace inside the solution set"},
  };
  std::map<std::string, CLI::App*> subs;
  for (const auto& [name, help] : instance_cmds) subs[name] = common(app.add_subcommand(name, help));
  subs["membership"] = common(app.add_subcommand("membership", "Farkas certificate for b in pos A"));
  subs["membership"]->add_option("--point", o.point, "Comma-separated coordinates of b")->required();
  subs["extract-cone"] = with_k(common(app.add_subcommand("extract-cone", "Generators of a k-dimensional cone")));
  subs["helly-pos"] = with_k(common(app.add_subcommand("helly-pos", "Helly check for lineality dimension")));
  subs["helly-cone"] = with_k(common(app.add_subcommand("helly-cone", "Helly check for k-dimensional cones")));
  subs["corollary"] = with_k(common(app.add_subcommand("corollary", "Helly check for independent solutions")));
  subs["flat-helly"] = with_k(common(app.add_subcommand("flat-helly", "Helly check for contained subspaces")));

  auto* gen = app.add_subcommand("gen", "Generate an instance file");
  gen->add_option("--example", o.example, "simplex-like | example1 | axis-pairs | example2 | random")->required();
  gen->add_option("--d", o.d, "Ambient dimension")->required();
  gen->add_option("--k", o.k, "k parameter");
  gen->add_option("--n", o.n, "Number of random vectors");
  gen->add_option("--bound", o.bound, "Entry bound for random vectors");
  gen->add_option("--seed", o.seed, "Seed for random vectors");
  gen->add_flag("--pretty", o.pretty, "Human-readable output");
  subs["gen"] = gen;

  auto* tight = app.add_subcommand("verify-tightness", "Check the extremal examples");
  tight->add_option("--example", o.example, "1 or 2")->required();
  tight->add_option("--d", o.d, "Ambient dimension")->required();
  tight->add_option("--k", o.k, "k parameter (example 2)");
  tight->add_flag("--pretty", o.pretty, "Human-readable output");
  subs["verify-tightness"] = tight;

  auto* fuzz = app.add_subcommand("fuzz", "Seeded property fuzzing");
  fuzz->add_option("--d-max", o.d_max, "Largest ambient dimension");
  fuzz->add_option("--n-max", o.n_max, "Largest number of vectors");
  fuzz->add_option("--bound", o.bound, "Entry bound");
  fuzz->add_option("--trials", o.trials, "Number of trials");
  auto* seed_opt = fuzz->add_option("--seed", o.seed, "Seed (CONEHELLY_SEED when absent)");
  fuzz->add_option("--dump", o.dump, "Where to write a failing instance");
  fuzz->add_flag("--pretty", o.pretty, "Human-readable output");
  subs["fuzz"] = fuzz;

  std::vector<std::string> argv_store{"conehelly"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& s : argv_store) argv.push_back(s.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "conehelly: " << e.what() << '\n';
    return kMalformedInput;
  }

  try {
    if (!o.verify.empty()) {
      const json rep = parse_json_text(read_all(o.verify, in));
      const Checks checks = verify_report(rep);
      bool ok = true;
      json list = json::array();
      for (const auto& [name, passed] : checks) {
        list.push_back(json{{"check", name}, {"ok", passed}});
        ok = ok && passed;
      }
      emit(report("verify", json{{"operation", rep.value("operation", "instance")}},
                  json{{"ok", ok}, {"checks", std::move(list)}}),
           o.pretty, out);
      if (!ok) err << "conehelly: report failed verification\n";
      return ok ? kSuccess : kInternalError;
    }

    const CLI::App* chosen = nullptr;
    for (const auto& [name, sub] : subs)
      if (sub->parsed()) chosen = sub;
    if (!chosen) {
      err << app.help();
      return kMalformedInput;
    }
    const std::string name = chosen->get_name();

    if (name == "gen") {
      emit(cmd_gen(o), o.pretty, out);
      return kSuccess;
    }
    if (name == "verify-tightness") {
      emit(cmd_verify_tightness(o), o.pretty, out);
      return kSuccess;
    }
    if (name == "fuzz") {
      if (seed_opt->count() == 0) {
        if (const char* env = std::getenv("CONEHELLY_SEED")) {
          try {
            o.seed = std::stoull(env);
          } catch (const std::exception&) {
            throw InvalidInput(std::string("CONEHELLY_SEED is not an unsigned integer: ") + env);
          }
        }
      }
      if (o.d_max < 1 || o.n_max < 1 || o.bound < 1)
        throw InvalidInput("--d-max, --n-max and --bound must be positive");
      const FuzzSummary s = run_fuzz(FuzzConfig{o.d_max, o.n_max, o.bound, o.trials, o.seed});
      emit(summary_json(s), o.pretty, out);
      if (s.first_failure) {
        std::ofstream dump(o.dump);
        dump << io::to_json(io::InstanceFile{io::Role::generators, s.first_failure->instance}).dump()
             << '\n';
        err << "conehelly: property " << s.first_failure->property << " failed on trial "
            << s.first_failure->trial << "; instance written to " << o.dump << '\n';
        return kInternalError;
      }
      return kSuccess;
    }

    const io::InstanceFile f = io::parse_instance_text(read_all(o.input, in));
    json rep;
    if (name == "lineality") rep = cmd_lineality(f);
    else if (name == "membership") rep = cmd_membership(f, o);
    else if (name == "posbasis") rep = cmd_posbasis(f);
    else if (name == "reay") rep = cmd_reay(f);
    else if (name == "maxcone" || name == "solution-rank") rep = cmd_maxcone(f, name);
    else if (name == "extract-cone") rep = cmd_extract_cone(f, o);
    else if (name == "polar-lineality") rep = cmd_polar_lineality(f);
    else if (name == "helly-pos") rep = cmd_helly_pos(f, o);
    else if (name == "helly-cone")
      rep = helly_report(name, f, o.k, verify_cone_helly(HalfspaceSystem(f.vectors), o.k));
    else if (name == "corollary")
      rep = helly_report(name, f, o.k, corollary_check(HalfspaceSystem(f.vectors), o.k));
    else if (name == "flat-helly")
      rep = helly_report(name, f, o.k, check_flat_helly(HalfspaceSystem(f.vectors), o.k));
    const auto dups = find_duplicates(f.vectors);
    if (!dups.empty()) rep["warnings"] = json{{"duplicate_pairs", dups}};
    emit(rep, o.pretty, out);
    return kSuccess;
  } catch (const InvalidInput& e) {
    err << "conehelly: " << e.what() << '\n';
    return kMalformedInput;
  } catch (const json::exception& e) {
    err << "conehelly: malformed report: " << e.what() << '\n';
    return kMalformedInput;
  } catch (const CapacityExceeded& e) {
    err << "conehelly: " << e.what() << '\n';
    return kCapacityExceeded;
  } catch (const InternalError& e) {
    err << "conehelly: internal error (please report): " << e.what() << '\n';
    return kInternalError;
  }
}

}  // namespace conehelly::cli
