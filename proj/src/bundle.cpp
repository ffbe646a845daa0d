#include "omegalie/bundle.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "omegalie/kernels.hpp"

namespace omegalie::bundle {

namespace {

[[noreturn]] void fail(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

const Json& need(const Json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) fail(std::string("missing field \"") + key + "\"");
  return doc.at(key);
}

int int_from(const Json& j, const char* what) {
  if (!j.is_number_integer()) fail(std::string(what) + " must be an integer");
  return j.get<int>();
}

int positive_dim(const Json& doc, const char* key) {
  const int n = int_from(need(doc, key), key);
  if (n < 1) fail(std::string(key) + " must be positive");
  return n;
}

void expect_kind(const Json& doc, const char* kind) {
  if (doc.is_object() && doc.contains("kind") && kind_of(doc) != kind)
    fail("expected a \"" + std::string(kind) + "\" document, got \"" + kind_of(doc) + "\"");
}

std::vector<std::string> default_names(const char* prefix, int n) {
  std::vector<std::string> out;
  for (int i = 1; i <= n; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

std::vector<std::string> names_from(const Json& doc, const char* key, const char* prefix, int n) {
  if (!doc.contains(key)) return default_names(prefix, n);
  const Json& b = doc.at(key);
  if (!b.is_array() || static_cast<int>(b.size()) != n) fail(std::string(key) + " must list " + std::to_string(n) + " symbols");
  std::vector<std::string> out;
  std::set<std::string> seen;
  for (const auto& s : b) {
    if (!s.is_string()) fail(std::string(key) + " entries must be strings");
    if (!seen.insert(s.get<std::string>()).second) fail("duplicate basis symbol \"" + s.get<std::string>() + "\"");
    out.push_back(s.get<std::string>());
  }
  return out;
}

std::string label_from(const Json& doc) {
  if (doc.contains("meta") && doc.at("meta").contains("label")) {
    const Json& l = doc.at("meta").at("label");
    if (!l.is_string()) fail("meta.label must be a string");
    return l.get<std::string>();
  }
  return {};
}

void put_label(Json& doc, const std::string& label) {
  if (!label.empty()) doc["meta"] = Json{{"label", label}};
}

int index_from(const Json& j, int n) {
  const int i = int_from(j, "index");
  if (i < 1 || i > n) fail("index " + std::to_string(i) + " out of range 1.." + std::to_string(n));
  return i - 1;
}

// [i, j, k, "p/q"] with 1-based indices.
std::vector<StructureEntry> entries_from(const Json& j, int n, bool upper_only) {
  if (!j.is_array()) fail("structure entries must be an array");
  std::vector<StructureEntry> out;
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 4) fail("structure entry must be [i, j, k, value]");
    const int a = index_from(e[0], n), b = index_from(e[1], n), k = index_from(e[2], n);
    if (upper_only && a >= b) fail("antisymmetric bracket entries need i < j");
    out.emplace_back(a, b, k, rat_from(e[3]));
  }
  return out;
}

Tensor3 full_structure(int n, const std::vector<StructureEntry>& entries) {
  Tensor3 t(n);
  std::vector<char> seen(static_cast<std::size_t>(n) * n * n, 0);
  for (const auto& [a, b, k, v] : entries) {
    const std::size_t idx = (static_cast<std::size_t>(a) * n + b) * n + k;
    if (seen[idx] && t(a, b, k) != v)
      fail("contradictory structure entries for (" + std::to_string(a + 1) + "," + std::to_string(b + 1) + "," +
           std::to_string(k + 1) + ")");
    seen[idx] = 1;
    t(a, b, k) = v;
  }
  return t;
}

Json entries_json(const Tensor3& t, bool upper_only) {
  Json out = Json::array();
  const int n = t.n();
  for (int i = 0; i < n; ++i)
    for (int j = upper_only ? i + 1 : 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (t(i, j, k) != 0) out.push_back(Json::array({i + 1, j + 1, k + 1, format_rat(t(i, j, k))}));
  return out;
}

OperatorFamily family_from(const Json& j, const std::vector<std::string>& basis, int m) {
  if (!j.is_object()) fail("operator family must be an object keyed by basis symbol");
  OperatorFamily out(basis.size(), Mat(m, m));
  for (const auto& [key, value] : j.items()) {
    auto it = std::find(basis.begin(), basis.end(), key);
    if (it == basis.end()) fail("operator keyed by unknown basis symbol \"" + key + "\"");
    out[static_cast<std::size_t>(it - basis.begin())] = mat_from(value, m, m);
  }
  return out;
}

Json family_json(const OperatorFamily& f) {
  Json out = Json::object();
  const auto names = default_names("e", static_cast<int>(f.size()));
  for (std::size_t i = 0; i < f.size(); ++i) out[names[i]] = to_json(f[i]);
  return out;
}

const Json& nested(const Json& doc, const char* key, const char* kind) {
  const Json& sub = need(doc, key);
  expect_kind(sub, kind);
  return sub;
}

struct Carrier {
  OmegaLieAlgebra algebra;
  std::vector<std::string> basis;
  int m = 0;
};

Carrier carrier_from(const Json& doc) {
  Carrier c;
  const Json& alg = nested(doc, "algebra", "omega_lie");
  c.algebra = omega_lie_from(alg);
  c.basis = names_from(alg, "basis", "e", c.algebra.dim);
  c.m = positive_dim(doc, "carrier_dim");
  names_from(doc, "carrier_basis", "v", c.m);
  return c;
}

void put_carrier(Json& doc, const OmegaLieAlgebra& L, int m) {
  doc["algebra"] = to_json(L);
  doc["carrier_dim"] = m;
  doc["carrier_basis"] = default_names("v", m);
}

GenKind gen_kind_from(const Json& j) {
  if (!j.is_string()) fail("gen_kind must be a string");
  const std::string s = j.get<std::string>();
  for (GenKind k : {GenKind::GenI, GenKind::GenII, GenKind::AssociatedGenII})
    if (s == to_string(k)) return k;
  fail("unknown gen_kind \"" + s + "\"");
}

Json value_json(const Value& v) {
  if (v.shape.empty()) return format_rat(v.data.at(0));
  Json data = Json::array();
  for (const auto& x : v.data) data.push_back(format_rat(x));
  return Json{{"shape", v.shape}, {"data", std::move(data)}};
}

}  // namespace

Json parse_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    fail(std::string("malformed JSON: ") + e.what());
  }
}

Json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_text(ss.str());
}

std::string kind_of(const Json& doc) {
  const Json& k = need(doc, "kind");
  if (!k.is_string()) fail("kind must be a string");
  return k.get<std::string>();
}

Rat rat_from(const Json& j) {
  if (j.is_string()) return parse_rat(j.get<std::string>());
  if (j.is_number_integer()) return parse_rat(j.dump());
  fail("rational must be a \"p/q\" string or an integer, got " + j.dump());
}

Json to_json(const Rat& x) { return format_rat(x); }

Vec vec_from(const Json& j, int n) {
  if (!j.is_array() || static_cast<int>(j.size()) != n) fail("expected a vector of length " + std::to_string(n));
  Vec out;
  for (const auto& x : j) out.push_back(rat_from(x));
  return out;
}

Json to_json(const Vec& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(format_rat(x));
  return out;
}

Mat mat_from(const Json& j, int rows, int cols) {
  if (!j.is_array() || static_cast<int>(j.size()) != rows)
    fail("expected a " + std::to_string(rows) + "x" + std::to_string(cols) + " matrix");
  Mat out(rows, cols);
  for (int i = 0; i < rows; ++i) {
    const Vec row = vec_from(j[static_cast<std::size_t>(i)], cols);
    for (int k = 0; k < cols; ++k) out(i, k) = row[k];
  }
  return out;
}

Json to_json(const Mat& m) {
  Json out = Json::array();
  for (int i = 0; i < m.rows(); ++i) out.push_back(to_json(m.row(i)));
  return out;
}

Tensor3 tensor_from(const Json& j, int n) {
  if (!j.is_array() || static_cast<int>(j.size()) != n) fail("expected an n x n x n array");
  Tensor3 t(n);
  for (int i = 0; i < n; ++i) {
    const Mat slice = mat_from(j[static_cast<std::size_t>(i)], n, n);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) t(i, a, b) = slice(a, b);
  }
  return t;
}

Json to_json(const Tensor3& t) {
  Json out = Json::array();
  for (int i = 0; i < t.dim(0); ++i) {
    Json slice = Json::array();
    for (int a = 0; a < t.dim(1); ++a) {
      Json row = Json::array();
      for (int b = 0; b < t.dim(2); ++b) row.push_back(format_rat(t(i, a, b)));
      slice.push_back(std::move(row));
    }
    out.push_back(std::move(slice));
  }
  return out;
}

// ---- omega_lie ----

OmegaLieAlgebra omega_lie_from(const Json& doc) {
  expect_kind(doc, "omega_lie");
  const int n = positive_dim(doc, "dim");
  names_from(doc, "basis", "e", n);
  Tensor3 c = antisymmetric_structure(n, entries_from(need(doc, "bracket"), n, true));
  if (doc.contains("omega") && doc.contains("r")) fail("give either omega or r, not both");
  if (doc.contains("omega")) return OmegaLieAlgebra::general(std::move(c), mat_from(doc.at("omega"), n, n), label_from(doc));
  Vec r = doc.contains("r") ? vec_from(doc.at("r"), n) : zero_vec(n);
  return OmegaLieAlgebra::multiplicative(std::move(c), std::move(r), label_from(doc));
}

Json to_json(const OmegaLieAlgebra& L) {
  Json doc{{"kind", "omega_lie"}, {"dim", L.dim}, {"basis", default_names("e", L.dim)}};
  doc["bracket"] = entries_json(L.c, true);
  if (L.is_multiplicative())
    doc["r"] = to_json(L.r);
  else
    doc["omega"] = to_json(L.omega);
  put_label(doc, L.label);
  return doc;
}

// ---- generalized ----

GeneralizedOmegaLieAlgebra generalized_from(const Json& doc) {
  expect_kind(doc, "generalized");
  const int n = positive_dim(doc, "dim");
  names_from(doc, "basis", "e", n);
  GeneralizedOmegaLieAlgebra G;
  G.dim = n;
  // bracket1 is written antisymmetrically but stored in full, so a
  // non-anticommutative first bracket reaches the checker instead of the loader.
  G.c1 = full_structure(n, entries_from(need(doc, "bracket1"), n, false));
  G.c2 = full_structure(n, entries_from(need(doc, "bracket2"), n, false));
  G.r = doc.contains("r") ? vec_from(doc.at("r"), n) : zero_vec(n);
  G.label = label_from(doc);
  return G;
}

Json to_json(const GeneralizedOmegaLieAlgebra& G) {
  Json doc{{"kind", "generalized"}, {"dim", G.dim}, {"basis", default_names("e", G.dim)}};
  doc["bracket1"] = entries_json(G.c1, false);
  doc["bracket2"] = entries_json(G.c2, false);
  doc["r"] = to_json(G.r);
  put_label(doc, G.label);
  return doc;
}

// ---- lsa ----

LeftSymmetricAlgebra lsa_from(const Json& doc) {
  expect_kind(doc, "lsa");
  const int n = positive_dim(doc, "dim");
  names_from(doc, "basis", "e", n);
  Tensor3 a = full_structure(n, entries_from(need(doc, "product"), n, false));
  if (doc.contains("omega") && doc.contains("r")) fail("give either omega or r, not both");
  if (doc.contains("omega")) return LeftSymmetricAlgebra::general(std::move(a), mat_from(doc.at("omega"), n, n), label_from(doc));
  if (doc.contains("r")) return LeftSymmetricAlgebra::multiplicative(std::move(a), vec_from(doc.at("r"), n), label_from(doc));
  return LeftSymmetricAlgebra::plain(std::move(a), label_from(doc));
}

Json to_json(const LeftSymmetricAlgebra& V) {
  Json doc{{"kind", "lsa"}, {"dim", V.dim}, {"basis", default_names("e", V.dim)}};
  doc["product"] = entries_json(V.a, false);
  if (V.flavor == LsaFlavor::GeneralOmega) doc["omega"] = to_json(V.omega);
  if (V.flavor == LsaFlavor::Multiplicative) doc["r"] = to_json(V.r);
  put_label(doc, V.label);
  return doc;
}

// ---- representation / gen_rep_pair ----

Representation representation_from(const Json& doc) {
  expect_kind(doc, "representation");
  Carrier c = carrier_from(doc);
  Representation rep;
  rep.rho = family_from(need(doc, "rho"), c.basis, c.m);
  rep.algebra = std::move(c.algebra);
  rep.m = c.m;
  rep.label = label_from(doc);
  return rep;
}

Json to_json(const Representation& rep) {
  Json doc{{"kind", "representation"}};
  put_carrier(doc, rep.algebra, rep.m);
  doc["rho"] = family_json(rep.rho);
  put_label(doc, rep.label);
  return doc;
}

GenRepDoc gen_rep_from(const Json& doc) {
  expect_kind(doc, "gen_rep_pair");
  Carrier c = carrier_from(doc);
  GenRepDoc out;
  out.pair.rho1 = family_from(need(doc, "rho1"), c.basis, c.m);
  out.pair.rho2 = family_from(need(doc, "rho2"), c.basis, c.m);
  out.pair.kind = doc.contains("gen_kind") ? gen_kind_from(doc.at("gen_kind")) : GenKind::GenI;
  if (doc.contains("f")) out.f = family_from(doc.at("f"), c.basis, c.m);
  out.pair.algebra = std::move(c.algebra);
  out.pair.m = c.m;
  out.pair.label = label_from(doc);
  return out;
}

Json to_json(const GenRepPair& pair, const OperatorFamily* f) {
  Json doc{{"kind", "gen_rep_pair"}};
  put_carrier(doc, pair.algebra, pair.m);
  doc["gen_kind"] = to_string(pair.kind);
  doc["rho1"] = family_json(pair.rho1);
  doc["rho2"] = family_json(pair.rho2);
  if (f) doc["f"] = family_json(*f);
  put_label(doc, pair.label);
  return doc;
}

// ---- two_tensor ----

TwoTensorDoc two_tensor_from(const Json& doc) {
  expect_kind(doc, "two_tensor");
  const int n = positive_dim(doc, "dim");
  TwoTensorDoc out;
  out.R = mat_from(need(doc, "entries"), n, n);
  if (doc.contains("algebra")) {
    out.algebra = omega_lie_from(nested(doc, "algebra", "omega_lie"));
    if (out.algebra->dim != n) throw Error(ErrorCode::DimMismatch, "two_tensor: algebra dimension differs from dim");
  }
  if (doc.contains("u_r")) out.u_r = vec_from(doc.at("u_r"), n);
  if (doc.contains("decomposition")) {
    const Json& d = doc.at("decomposition");
    if (!d.is_array()) fail("decomposition must be an array of {x, y} pairs");
    for (const auto& p : d) out.decomposition.emplace_back(vec_from(need(p, "x"), n), vec_from(need(p, "y"), n));
  }
  return out;
}

Json to_json(const TwoTensorDoc& d) {
  Json doc{{"kind", "two_tensor"}, {"dim", d.R.rows()}, {"entries", to_json(d.R)}};
  if (d.algebra) doc["algebra"] = to_json(*d.algebra);
  if (d.u_r) doc["u_r"] = to_json(*d.u_r);
  if (!d.decomposition.empty()) {
    Json pairs = Json::array();
    for (const auto& [x, y] : d.decomposition) pairs.push_back(Json{{"x", to_json(x)}, {"y", to_json(y)}});
    doc["decomposition"] = std::move(pairs);
  }
  return doc;
}

// ---- o_operator ----

OOperatorDoc o_operator_from(const Json& doc) {
  expect_kind(doc, "o_operator");
  OOperatorDoc out;
  out.rep = representation_from(nested(doc, "representation", "representation"));
  out.T = mat_from(need(doc, "T"), out.rep.algebra.dim, out.rep.m);
  return out;
}

Json to_json(const OOperatorDoc& d) {
  return Json{{"kind", "o_operator"}, {"representation", to_json(d.rep)}, {"T", to_json(d.T)}};
}

// ---- dual_pair ----

DualPair dual_pair_from(const Json& doc) {
  expect_kind(doc, "dual_pair");
  const OmegaLieAlgebra L = omega_lie_from(nested(doc, "L", "omega_lie"));
  const OmegaLieAlgebra Lstar = omega_lie_from(nested(doc, "Lstar", "omega_lie"));
  if (!L.is_multiplicative() || !Lstar.is_multiplicative()) fail("dual_pair needs multiplicative algebras (r, not omega)");
  if (L.dim != Lstar.dim) throw Error(ErrorCode::DimMismatch, "dual_pair: L and Lstar differ in dimension");
  DualPair dp = DualPair::standard(L, Lstar);
  if (doc.contains("u_r")) dp.u_r = vec_from(doc.at("u_r"), L.dim);
  return dp;
}

Json to_json(const DualPair& dp) {
  return Json{{"kind", "dual_pair"}, {"L", to_json(dp.L)}, {"Lstar", to_json(dp.Lstar)}, {"u_r", to_json(dp.u_r)}};
}

// ---- solve_request ----

SolveOptions options_from(const Json& j, SolveOptions o) {
  if (!j.is_object()) fail("options must be an object");
  for (const auto& [key, v] : j.items()) {
    auto num = [&]() {
      if (!v.is_number()) fail("option " + key + " must be a number");
      return v.get<double>();
    };
    auto integer = [&]() {
      if (!v.is_number_integer()) fail("option " + key + " must be an integer");
      return v.get<long long>();
    };
    if (key == "max_iterations") o.max_iterations = static_cast<int>(integer());
    else if (key == "step_tolerance") o.step_tolerance = num();
    else if (key == "residual_tolerance") o.residual_tolerance = num();
    else if (key == "restarts") o.restarts = static_cast<int>(integer());
    else if (key == "seed") {
      if (!v.is_number_unsigned()) fail("option seed must be a non-negative integer");
      o.seed = v.get<std::uint64_t>();
    } else if (key == "max_denominator") o.max_denominator = static_cast<long>(integer());
    else if (key == "workers") o.workers = static_cast<int>(integer());
    else fail("unknown solver option \"" + key + "\"");
  }
  if (o.max_iterations < 0 || o.restarts < 1 || o.max_denominator < 1 || o.workers < 1)
    fail("solver options out of range");
  return o;
}

Json to_json(const SolveOptions& o) {
  return Json{{"max_iterations", o.max_iterations},     {"step_tolerance", o.step_tolerance},
              {"residual_tolerance", o.residual_tolerance}, {"restarts", o.restarts},
              {"seed", o.seed},                         {"max_denominator", o.max_denominator},
              {"workers", o.workers}};
}

SolveRequest solve_request_from(const Json& doc) {
  expect_kind(doc, "solve_request");
  SolveRequest req;
  req.L = omega_lie_from(nested(doc, "algebra", "omega_lie"));
  if (!req.L.is_multiplicative()) fail("solve_request needs a multiplicative algebra");
  req.u_r = doc.contains("u_r") ? vec_from(doc.at("u_r"), req.L.dim) : zero_vec(req.L.dim);
  if (doc.contains("options")) req.options = options_from(doc.at("options"));
  return req;
}

Json to_json(const SolveRequest& req) {
  return Json{{"kind", "solve_request"}, {"algebra", to_json(req.L)}, {"u_r", to_json(req.u_r)}, {"options", to_json(req.options)}};
}

// ---- outputs ----

Json three_tensor_json(const Tensor3& T) {
  return Json{{"kind", "three_tensor"}, {"dim", T.n()}, {"zero", T.is_zero()}, {"entries", to_json(T)}};
}

Json cobracket_json(const Cobracket& delta) {
  Json d = Json::object();
  const auto names = default_names("e", static_cast<int>(delta.size()));
  for (std::size_t k = 0; k < delta.size(); ++k) d[names[k]] = to_json(delta[k]);
  return Json{{"kind", "cobracket"}, {"dim", delta.size()}, {"delta", std::move(d)}};
}

Json tensor_form_json(const TensorFormResult& result, bool matches_residual) {
  Json units = Json::array();
  for (int mask = 1; mask < 8; ++mask) {
    const Tensor3& t = result.parts[static_cast<std::size_t>(mask)];
    if (t.is_zero()) continue;
    Json slots = Json::array();
    for (int s = 0; s < 3; ++s)
      if (mask & (1 << s)) slots.push_back(s + 1);
    units.push_back(Json{{"unit_slots", std::move(slots)}, {"entries", to_json(t)}});
  }
  return Json{{"kind", "tensor_form_residual"},
              {"dim", result.pure().n()},
              {"pure_zero", result.pure().is_zero()},
              {"unit_part_zero", result.unit_part_zero()},
              {"matches_residual", matches_residual},
              {"pure", to_json(result.pure())},
              {"unit_terms", std::move(units)}};
}

Json solve_result_json(const SolveProblem& problem, const SolveResult& r) {
  Json doc{{"kind", "solve_result"},
           {"dim", problem.n},
           {"parameters", problem.params()},
           {"converged", r.converged},
           {"residual_norm", r.residual_norm},
           {"exact_verified", r.exact_verified}};
  Json Rf = Json::array();
  for (int i = 0; i < problem.n; ++i) {
    Json row = Json::array();
    for (int j = 0; j < problem.n; ++j) row.push_back(r.best_R_float[static_cast<std::size_t>(i * problem.n + j)]);
    Rf.push_back(std::move(row));
  }
  doc["best_R_float"] = std::move(Rf);
  doc["best_coords"] = r.best_coords;
  doc["rationalized_R"] = r.rationalized_R ? to_json(*r.rationalized_R) : Json(nullptr);
  doc["rationalized_coords"] = to_json(r.rationalized_coords);
  Json basis = Json::array();
  for (const auto& B : problem.basis) basis.push_back(to_json(B));
  doc["parameter_basis"] = std::move(basis);
  doc["trace"] = r.trace;
  doc["step_kinds"] = r.step_kinds;
  doc["winning_restart"] = r.winning_restart;
  doc["restarts_converged"] = r.restarts_converged;
  doc["options"] = to_json(problem.options);
  doc["kernel"] = kernels::to_string(kernels::active_isa());
  return doc;
}

Json to_json(const Report& report) {
  Json doc{{"kind", "report"}, {"title", report.title()}, {"verdict", report.verdict()}};
  Json clauses = Json::array();
  for (const auto& c : report.clauses()) {
    Json vs = Json::array();
    for (const auto& v : c.violations) {
      Json idx = Json::array();
      for (int i : v.indices) idx.push_back(i + 1);
      vs.push_back(Json{{"indices", std::move(idx)}, {"lhs", value_json(v.lhs)}, {"rhs", value_json(v.rhs)}});
    }
    clauses.push_back(Json{{"name", c.name}, {"anchor", c.anchor}, {"verdict", c.passed() ? "PASS" : "FAIL"}, {"violations", std::move(vs)}});
  }
  doc["clauses"] = std::move(clauses);
  Json meta = Json::object();
  for (const auto& [k, v] : report.metadata()) meta[k] = v;
  doc["metadata"] = std::move(meta);
  if (!report.details().empty()) {
    Json details = Json::object();
    for (const auto& [k, sub] : report.details()) details[k] = to_json(sub);
    doc["details"] = std::move(details);
  }
  return doc;
}

Json normalize(const Json& doc) {
  const std::string kind = kind_of(doc);
  if (kind == "omega_lie") return to_json(omega_lie_from(doc));
  if (kind == "generalized") return to_json(generalized_from(doc));
  if (kind == "lsa") return to_json(lsa_from(doc));
  if (kind == "representation") return to_json(representation_from(doc));
  if (kind == "gen_rep_pair") {
    const GenRepDoc g = gen_rep_from(doc);
    return to_json(g.pair, g.f ? &*g.f : nullptr);
  }
  if (kind == "two_tensor") return to_json(two_tensor_from(doc));
  if (kind == "o_operator") return to_json(o_operator_from(doc));
  if (kind == "dual_pair") return to_json(dual_pair_from(doc));
  if (kind == "solve_request") return to_json(solve_request_from(doc));
  throw Error(ErrorCode::UnknownKind, "unknown document kind \"" + kind + "\"");
}

}  // namespace omegalie::bundle
