#include "arex/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <limits>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "arex/efffun.hpp"
#include "arex/groth.hpp"
#include "arex/subcat.hpp"

namespace arex {

using nlohmann::json;
using ordered_json = nlohmann::ordered_json;

namespace {

[[noreturn]] void malformed(const std::string& what) { throw Error(ErrorCode::Malformed, what); }

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Io, "cannot open " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

json parse_text(const std::string& text, const std::string& path) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    const std::size_t upto = std::min<std::size_t>(e.byte, text.size());
    const auto line = 1 + std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(upto), '\n');
    malformed(path + ": line " + std::to_string(line) + ": invalid JSON");
  }
}

void only_keys(const json& j, const std::string& where, std::initializer_list<const char*> allowed) {
  if (!j.is_object()) malformed(where + ": expected an object");
  for (const auto& [k, v] : j.items()) {
    bool ok = false;
    for (const char* a : allowed) ok = ok || k == a;
    if (!ok) malformed(where + ": unknown key \"" + k + "\"");
  }
}

const json& need(const json& j, const std::string& where, const char* key) {
  if (!j.contains(key)) malformed(where + ": missing key \"" + std::string(key) + "\"");
  return j.at(key);
}

std::size_t vertex_index(const std::vector<std::string>& vertices, const json& name, const std::string& where) {
  if (!name.is_string()) malformed(where + ": vertex names are strings");
  const auto it = std::find(vertices.begin(), vertices.end(), name.get<std::string>());
  if (it == vertices.end()) malformed(where + ": unknown vertex \"" + name.get<std::string>() + "\"");
  return static_cast<std::size_t>(it - vertices.begin());
}

FpMatrix parse_matrix(const PrimeField& f, const json& j, Eigen::Index rows, Eigen::Index cols, const std::string& where) {
  if (!j.is_array()) malformed(where + ": expected a list of rows");
  if (rows * cols == 0) {
    for (const json& r : j)
      if (!r.is_array() || !r.empty()) malformed(where + ": expected an empty " + std::to_string(rows) + "x" + std::to_string(cols) + " matrix");
    if (!j.empty() && static_cast<Eigen::Index>(j.size()) != rows) malformed(where + ": wrong number of rows");
    return FpMatrix::Zero(rows, cols);
  }
  if (static_cast<Eigen::Index>(j.size()) != rows) malformed(where + ": expected " + std::to_string(rows) + " rows");
  FpMatrix m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    const json& row = j[static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols)
      malformed(where + ": row " + std::to_string(r) + " needs " + std::to_string(cols) + " entries");
    for (Eigen::Index c = 0; c < cols; ++c) {
      const json& e = row[static_cast<std::size_t>(c)];
      if (!e.is_number_integer()) malformed(where + ": entries are integers");
      m(r, c) = f.reduce(e.get<std::int64_t>());
    }
  }
  return m;
}

ModMorphism parse_morphism(const Algebra& a, const json& j, const ModuleRep& s, const ModuleRep& t, const std::string& where) {
  const auto& vs = a.presentation().vertices;
  if (!j.is_object()) malformed(where + ": expected an object of blocks keyed by vertex");
  ModMorphism h = zero_morphism(s, t);
  for (const auto& [k, v] : j.items()) {
    const std::size_t i = vertex_index(vs, json(k), where);
    h.blocks[i] = parse_matrix(a.field(), v, t.dims[i], s.dims[i], where + "." + k);
  }
  if (!is_morphism(a, h)) malformed(where + ": blocks do not commute with the arrows");
  return h;
}

ordered_json instance_echo(const InstanceFile& inst) {
  const QuiverPresentation& q = inst.presentation;
  ordered_json arrows = ordered_json::array();
  for (const Arrow& ar : q.arrows)
    arrows.push_back({{"name", ar.name}, {"source", q.vertices[ar.source]}, {"target", q.vertices[ar.target]}});
  return {{"field", {{"char", q.field_char}}},
          {"quiver", {{"vertices", q.vertices}, {"arrows", arrows}}},
          {"relations", q.relations}};
}

ordered_json big(const BigInt& b) {
  if (b <= BigInt(std::numeric_limits<std::int64_t>::max()) && b >= BigInt(std::numeric_limits<std::int64_t>::min()))
    return static_cast<std::int64_t>(b);
  return b.str();
}

ordered_json lattice_json(const GenLattice& l) {
  ordered_json rows = ordered_json::array();
  for (Eigen::Index r = 0; r < l.basis().rows(); ++r) {
    ordered_json row = ordered_json::array();
    for (Eigen::Index c = 0; c < l.basis().cols(); ++c) row.push_back(big(l.basis()(r, c)));
    rows.push_back(row);
  }
  return rows;
}

ordered_json labels(const IndecRegistry& reg, const std::vector<std::size_t>& idx) {
  ordered_json out = ordered_json::array();
  for (std::size_t i : idx) out.push_back(reg.label(i));
  return out;
}

ordered_json class_json(const IndecRegistry& reg, const K0Vector& v) {
  ordered_json out = ordered_json::object();
  for (std::size_t i = 0; i < reg.size(); ++i)
    if (v.coords(static_cast<Eigen::Index>(i)) != 0) out[reg.label(i)] = big(v.coords(static_cast<Eigen::Index>(i)));
  return out;
}

std::size_t label_index(const IndecRegistry& reg, const std::string& label) {
  const auto i = reg.index_of_label(label);
  if (!i) malformed("unknown indecomposable label \"" + label + "\"");
  return *i;
}

struct Outcome {
  ordered_json results;
  int code = 0;
};

}  // namespace

// ---------------------------------------------------------------------------
// Parsing

InstanceFile parse_instance_json(const json& j) {
  only_keys(j, "instance", {"field", "quiver", "relations", "options"});
  InstanceFile inst;
  QuiverPresentation& q = inst.presentation;

  const json& field = need(j, "instance", "field");
  only_keys(field, "field", {"char"});
  const json& p = need(field, "field", "char");
  if (!p.is_number_integer() || !is_prime(p.get<std::int64_t>()) || p.get<std::int64_t>() >= PrimeField::kMaxCharacteristic)
    malformed("field.char: expected a prime below 2^20");
  q.field_char = p.get<std::int64_t>();

  const json& quiver = need(j, "instance", "quiver");
  only_keys(quiver, "quiver", {"vertices", "arrows"});
  const json& vs = need(quiver, "quiver", "vertices");
  if (!vs.is_array()) malformed("quiver.vertices: expected a list");
  for (const json& v : vs) {
    if (!v.is_string()) malformed("quiver.vertices: vertex names are strings");
    if (std::find(q.vertices.begin(), q.vertices.end(), v.get<std::string>()) != q.vertices.end())
      malformed("quiver.vertices: duplicate vertex \"" + v.get<std::string>() + "\"");
    q.vertices.push_back(v.get<std::string>());
  }
  const json arrows = quiver.contains("arrows") ? quiver.at("arrows") : json::array();
  if (!arrows.is_array()) malformed("quiver.arrows: expected a list");
  for (std::size_t k = 0; k < arrows.size(); ++k) {
    const std::string where = "quiver.arrows[" + std::to_string(k) + "]";
    only_keys(arrows[k], where, {"name", "source", "target"});
    const json& name = need(arrows[k], where, "name");
    if (!name.is_string()) malformed(where + ".name: expected a string");
    for (const Arrow& ar : q.arrows)
      if (ar.name == name.get<std::string>()) malformed(where + ": duplicate arrow \"" + ar.name + "\"");
    q.arrows.push_back({name.get<std::string>(), vertex_index(q.vertices, need(arrows[k], where, "source"), where + ".source"),
                        vertex_index(q.vertices, need(arrows[k], where, "target"), where + ".target")});
  }

  const json rels = j.contains("relations") ? j.at("relations") : json::array();
  if (!rels.is_array()) malformed("relations: expected a list of arrow-name paths");
  for (std::size_t k = 0; k < rels.size(); ++k) {
    const std::string where = "relations[" + std::to_string(k) + "]";
    if (!rels[k].is_array() || rels[k].empty()) malformed(where + ": expected a nonempty list of arrow names");
    std::vector<std::string> path;
    for (const json& n : rels[k]) {
      if (!n.is_string()) malformed(where + ": arrow names are strings");
      const std::string s = n.get<std::string>();
      if (std::none_of(q.arrows.begin(), q.arrows.end(), [&](const Arrow& ar) { return ar.name == s; }))
        malformed(where + ": unknown arrow \"" + s + "\"");
      path.push_back(s);
    }
    q.relations.push_back(std::move(path));
  }

  if (j.contains("options")) {
    const json& o = j.at("options");
    only_keys(o, "options", {"indec_bound", "trial_bound", "strict_scan"});
    if (o.contains("indec_bound")) {
      if (!o.at("indec_bound").is_number_unsigned()) malformed("options.indec_bound: expected a nonnegative integer");
      inst.options.indec_bound = o.at("indec_bound").get<std::size_t>();
    }
    if (o.contains("trial_bound")) {
      if (!o.at("trial_bound").is_number_unsigned()) malformed("options.trial_bound: expected a nonnegative integer");
      inst.options.trial_bound = o.at("trial_bound").get<int>();
    }
    if (o.contains("strict_scan")) {
      if (!o.at("strict_scan").is_boolean()) malformed("options.strict_scan: expected a boolean");
      inst.options.strict_scan = o.at("strict_scan").get<bool>();
    }
  }
  return inst;
}

InstanceFile parse_instance(const std::string& path) {
  const std::string text = read_file(path);
  return parse_instance_json(parse_text(text, path));
}

ModuleRep parse_module_json(const Algebra& a, const json& j) {
  only_keys(j, "module", {"dims", "arrows"});
  const json& dims = need(j, "module", "dims");
  if (!dims.is_array() || dims.size() != a.num_vertices())
    malformed("module.dims: expected " + std::to_string(a.num_vertices()) + " entries");
  ModuleRep m = zero_module(a);
  for (std::size_t v = 0; v < a.num_vertices(); ++v) {
    if (!dims[v].is_number_unsigned()) malformed("module.dims: expected nonnegative integers");
    m.dims[v] = dims[v].get<Eigen::Index>();
  }
  for (std::size_t k = 0; k < a.num_arrows(); ++k)
    m.action[k] = FpMatrix::Zero(m.dims[a.arrow(k).target], m.dims[a.arrow(k).source]);
  if (j.contains("arrows")) {
    const json& arrows = j.at("arrows");
    if (!arrows.is_object()) malformed("module.arrows: expected an object keyed by arrow name");
    for (const auto& [name, mat] : arrows.items()) {
      std::size_t k = 0;
      while (k < a.num_arrows() && a.arrow(k).name != name) ++k;
      if (k == a.num_arrows()) malformed("module.arrows: unknown arrow \"" + name + "\"");
      m.action[k] = parse_matrix(a.field(), mat, m.dims[a.arrow(k).target], m.dims[a.arrow(k).source], "module.arrows." + name);
    }
  }
  try {
    validate_module(a, m);
  } catch (const std::exception& e) {
    malformed(std::string("module: ") + e.what());
  }
  return m;
}

ModuleRep parse_module(const Algebra& a, const std::string& path) {
  return parse_module_json(a, parse_text(read_file(path), path));
}

Conflation parse_conflation(const Algebra& a, const std::string& path) {
  const json j = parse_text(read_file(path), path);
  only_keys(j, "conflation", {"x", "y", "z", "f", "g"});
  const ModuleRep x = parse_module_json(a, need(j, "conflation", "x"));
  const ModuleRep y = parse_module_json(a, need(j, "conflation", "y"));
  const ModuleRep z = parse_module_json(a, need(j, "conflation", "z"));
  Conflation c{parse_morphism(a, need(j, "conflation", "f"), x, y, "conflation.f"),
               parse_morphism(a, need(j, "conflation", "g"), y, z, "conflation.g")};
  if (!verify_conflation(a, c)) malformed("conflation: the sequence is not short exact");
  return c;
}

// ---------------------------------------------------------------------------
// DOT

std::string dot_string(const IndecRegistry& reg, const ARQuiverGraph& g) {
  std::ostringstream s;
  s << "digraph ar_quiver {\n  rankdir=LR;\n";
  for (std::size_t n : g.nodes) s << "  n" << n << " [label=\"" << reg.label(n) << "\"];\n";
  for (const ArrowEdge& e : g.edges) {
    s << "  n" << e.source << " -> n" << e.target;
    if (e.multiplicity > 1) s << " [label=\"" << e.multiplicity << "\"]";
    s << ";\n";
  }
  for (const auto& [z, t] : g.translation) s << "  n" << z << " -> n" << t << " [style=dashed, constraint=false];\n";
  s << "}\n";
  return s.str();
}

void export_dot(const IndecRegistry& reg, const ARQuiverGraph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::Io, "cannot write " + path);
  out << dot_string(reg, g);
  if (!out) throw Error(ErrorCode::Io, "cannot write " + path);
}

// ---------------------------------------------------------------------------
// Commands

namespace {

Outcome cmd_indec(const IndecRegistry& reg) {
  ordered_json list = ordered_json::array();
  for (std::size_t i = 0; i < reg.size(); ++i) {
    const auto t = reg.tau(i);
    list.push_back({{"label", reg.label(i)},
                    {"dims", reg.module(i).dims},
                    {"projective", reg.is_projective(i)},
                    {"injective", reg.is_injective(i)},
                    {"division_degree", reg.division_degree(i)},
                    {"tau", t ? ordered_json(reg.label(*t)) : ordered_json(nullptr)}});
  }
  return {{{"count", reg.size()}, {"indecomposables", list}}};
}

Outcome cmd_ar_quiver(const IndecRegistry& reg, const std::string& dot) {
  const ARQuiverGraph g = build_ar_quiver(reg);
  ordered_json edges = ordered_json::array(), tr = ordered_json::array();
  for (const ArrowEdge& e : g.edges)
    edges.push_back({{"source", reg.label(e.source)}, {"target", reg.label(e.target)}, {"multiplicity", e.multiplicity}});
  for (const auto& [z, t] : g.translation) tr.push_back({{"from", reg.label(z)}, {"to", reg.label(t)}});
  if (!dot.empty()) export_dot(reg, g, dot);
  return {{{"nodes", labels(reg, g.nodes)}, {"arrows", edges}, {"translation", tr}}};
}

Outcome cmd_k0(const IndecRegistry& reg) {
  const QuotientInvariants q = quotient_invariants(reg.size(), ex_lattice(reg));
  ordered_json torsion = ordered_json::array();
  for (const BigInt& t : q.torsion) torsion.push_back(big(t));
  return {{{"split_rank", reg.size()}, {"free_rank", q.free_rank}, {"torsion", torsion}}};
}

Outcome cmd_check_ar_ex(const IndecRegistry& reg, bool rational) {
  const ExArVerdict v = check_ar_eq_ex(reg);
  ordered_json torsion = ordered_json::array();
  for (const BigInt& t : v.k0_torsion) torsion.push_back(big(t));
  Outcome o{{{"basis", labels(reg, [&] {
               std::vector<std::size_t> all(reg.size());
               for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
               return all;
             }())},
             {"ar_lattice", lattice_json(v.ar_lattice)},
             {"ex_lattice", lattice_json(v.ex_lattice)},
             {"equal_exact", v.equal_exact},
             {"equal_rational", v.equal_rational},
             {"mode", rational ? "rational" : "exact"},
             {"k0_free_rank", v.k0_free_rank},
             {"k0_torsion", torsion}}};
  o.code = (rational ? v.equal_rational : v.equal_exact) ? 0 : 2;
  return o;
}

Outcome cmd_decompose(const IndecRegistry& reg, const std::string& path) {
  const Conflation c = parse_conflation(reg.algebra(), path);
  const MultiplicityVector m = decompose_into_ar(reg, c);
  ordered_json mults = ordered_json::object();
  for (std::size_t i = 0; i < reg.size(); ++i)
    if (m.mults[i] != 0) mults[reg.label(i)] = m.mults[i];
  return {{{"multiplicities", mults},
           {"length", m.length()},
           {"class", class_json(reg, class_of(reg, c))},
           {"identity_holds", true}}};
}

std::vector<std::string> split_labels(const std::vector<std::string>& raw) {
  std::vector<std::string> out;
  for (const std::string& r : raw) {
    std::string cur;
    for (char ch : r) {
      if (ch == ';' || ch == ' ') {
        if (!cur.empty()) out.push_back(cur);
        cur.clear();
      } else {
        cur += ch;
      }
    }
    if (!cur.empty()) out.push_back(cur);
  }
  return out;
}

Outcome cmd_subcat(const IndecRegistry& reg, const std::vector<std::string>& raw, const std::string& check,
                   const ScanOptions& scan) {
  std::vector<std::size_t> idx;
  for (const std::string& l : split_labels(raw)) idx.push_back(label_index(reg, l));
  if (idx.empty()) malformed("--members: no labels given");
  const SubcategorySpec s = make_subcategory(reg, idx);
  Outcome o{{{"members", labels(reg, s.members)}, {"check", check}}};
  bool holds = false;
  if (check == "ext") {
    holds = check_extension_closed(s);
  } else if (check == "resolving") {
    holds = check_resolving(s, scan);
  } else if (check == "torsion") {
    holds = check_torsion_class(s, scan);
  } else {
    holds = check_extension_closed(s);
    if (holds) {
      const RelativeStructure r = relative_structure(s);
      ordered_json rel_proj = ordered_json::array(), ars = ordered_json::array();
      for (std::size_t i = 0; i < s.members.size(); ++i) {
        if (r.rel_projective[i]) rel_proj.push_back(reg.label(s.members[i]));
        if (r.rel_ar[i]) ars.push_back({{"end", reg.label(s.members[i])}, {"class", class_json(reg, class_of(reg, *r.rel_ar[i]))}});
      }
      o.results["relative"] = {{"projectives", rel_proj},
                               {"ar_conflations", ars},
                               {"unresolved", labels(reg, r.unresolved)},
                               {"rel_ex", lattice_json(r.rel_ex)},
                               {"rel_ar", lattice_json(r.rel_ar_lattice)},
                               {"equal_exact", r.equal_exact}};
      holds = r.equal_exact;
    }
  }
  o.results["holds"] = holds;
  o.code = holds ? 0 : 2;
  return o;
}

Outcome cmd_perp(const IndecRegistry& reg, const std::string& path) {
  const PerpReport r = perp(reg, parse_module(reg.algebra(), path));
  return {{{"members", labels(reg, r.sub.members)},
           {"cotilting",
            {{"finite_injective_dimension", r.finite_injective_dimension},
             {"self_orthogonal", r.self_orthogonal},
             {"resolution_of_dual", r.resolution_of_dual},
             {"cotilting", r.cotilting()}}}}};
}

Outcome cmd_syzygy(const IndecRegistry& reg) {
  const SubcategorySpec omega = syzygy_category(reg);
  std::vector<std::size_t> all(reg.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  ordered_json pairs = ordered_json::array();
  bool holds = true;
  for (std::size_t w : omega.members) {
    if (reg.is_projective(w)) continue;
    const AdjunctionReport r = omega_minus(reg, w, all);
    const auto cosyz = reg.summands(r.sequence.z());
    std::vector<std::size_t> parts;
    for (std::size_t i = 0; i < cosyz.size(); ++i)
      for (int k = 0; k < cosyz[i]; ++k) parts.push_back(i);
    ordered_json rows = ordered_json::array();
    for (std::size_t k = 0; k < r.targets.size(); ++k)
      rows.push_back({{"target", reg.label(r.targets[k])}, {"lhs", r.lhs[k]}, {"rhs", r.rhs[k]}});
    pairs.push_back({{"object", reg.label(w)}, {"cosyzygy", labels(reg, parts)}, {"stable_hom", rows}, {"holds", r.verified}});
    holds = holds && r.verified;
  }
  Outcome o{{{"members", labels(reg, omega.members)}, {"adjunction", pairs}, {"holds", holds}}};
  o.code = holds ? 0 : 2;
  return o;
}

int exit_code_for(ErrorCode c) {
  switch (c) {
    case ErrorCode::BoundExceeded:
      return 3;
    case ErrorCode::Malformed:
    case ErrorCode::Io:
    case ErrorCode::NonAdmissible:
    case ErrorCode::CapExceeded:
    case ErrorCode::AlgebraMismatch:
    case ErrorCode::NotInSyzygyCategory:
      return 4;
    default:
      return 1;
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Auslander-Reiten and Grothendieck group computations for bound quiver algebras", kToolName};
  app.set_version_flag("--version", kToolVersion);
  std::string instance_path;
  std::uint64_t seed = 1;
  app.add_option("-i,--instance", instance_path, "instance JSON file")->required();
  app.add_option("--seed", seed, "seed for randomized scans");
  app.require_subcommand(1);

  auto* indec = app.add_subcommand("indec", "list the indecomposables");
  std::string dot;
  auto* arq = app.add_subcommand("ar-quiver", "AR quiver with translation");
  arq->add_option("--dot", dot, "write a DOT graph to this path");
  auto* k0 = app.add_subcommand("k0", "structure of the Grothendieck group");
  auto* check = app.add_subcommand("check", "decide a property");
  bool rational = false;
  auto* arex = check->add_subcommand("ar-ex", "AR relations generate all relations");
  arex->add_flag("--rational", rational, "compare after tensoring with Q");
  check->require_subcommand(1);
  std::string conflation;
  auto* dec = app.add_subcommand("decompose", "AR multiplicities of a conflation");
  dec->add_option("--conflation", conflation, "conflation JSON file")->required();
  std::vector<std::string> members;
  std::string which;
  auto* sub = app.add_subcommand("subcat", "closure checks for a subcategory");
  sub->add_option("--members", members, "indecomposable labels, separated by ';' or spaces")->required();
  sub->add_option("--check", which, "ext, resolving, torsion or relative")
      ->required()
      ->check(CLI::IsMember({"ext", "resolving", "torsion", "relative"}));
  std::string module_path;
  auto* pp = app.add_subcommand("perp", "left perpendicular category of a module");
  pp->add_option("--module", module_path, "module JSON file")->required();
  auto* syz = app.add_subcommand("syzygy", "syzygy category and the cosyzygy adjunction");

  std::vector<std::string> argv_s{kToolName};
  argv_s.insert(argv_s.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (std::string& s : argv_s) argv.push_back(s.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 4;
  }

  auto fail = [&](const std::string& code, const std::string& msg, int rc) {
    ordered_json e{{"tool", kToolName}, {"version", kToolVersion}, {"error", code}, {"message", msg}};
    err << e.dump(2) << "\n";
    return rc;
  };

  try {
    const InstanceFile inst = parse_instance(instance_path);
    const Algebra a = build_algebra(inst.presentation);
    const IndecRegistry reg = enumerate_indecomposables(a, inst.options.indec_bound);
    ScanOptions scan;
    scan.strict = inst.options.strict_scan;
    scan.random_trials = inst.options.trial_bound;
    scan.seed = seed;

    std::string command;
    Outcome o;
    if (indec->parsed()) {
      command = "indec";
      o = cmd_indec(reg);
    } else if (arq->parsed()) {
      command = "ar-quiver";
      o = cmd_ar_quiver(reg, dot);
    } else if (k0->parsed()) {
      command = "k0";
      o = cmd_k0(reg);
    } else if (arex->parsed()) {
      command = "check ar-ex";
      o = cmd_check_ar_ex(reg, rational);
    } else if (dec->parsed()) {
      command = "decompose";
      o = cmd_decompose(reg, conflation);
    } else if (sub->parsed()) {
      command = "subcat";
      o = cmd_subcat(reg, members, which, scan);
    } else if (pp->parsed()) {
      command = "perp";
      o = cmd_perp(reg, module_path);
    } else if (syz->parsed()) {
      command = "syzygy";
      o = cmd_syzygy(reg);
    }
    ordered_json report{{"tool", kToolName},
                        {"version", kToolVersion},
                        {"command", command},
                        {"instance", instance_echo(inst)},
                        {"results", o.results}};
    out << report.dump(2) << "\n";
    return o.code;
  } catch (const Error& e) {
    return fail(to_string(e.code()), e.what(), exit_code_for(e.code()));
  } catch (const std::out_of_range& e) {
    return fail("Malformed", e.what(), 4);
  } catch (const std::exception& e) {
    return fail("Internal", e.what(), 1);
  }
}

}  // namespace arex
