#include "omegalie/cli.hpp"

#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "omegalie/bundle.hpp"

namespace omegalie::cli {

namespace {

using bundle::Json;

struct Config {
  JacScope scope = JacScope::AllSummands;
  CenterRule center_rule = CenterRule::Center;
  SolveOptions solver;
};

Config load_config(const std::string& path) {
  Config cfg;
  if (path.empty()) return cfg;
  const Json doc = bundle::read_file(path);
  if (!doc.is_object()) throw Error(ErrorCode::ParseError, "config must be a JSON object");
  for (const auto& [key, v] : doc.items()) {
    if (key == "jac_delta_scope") {
      const std::string s = v.is_string() ? v.get<std::string>() : "";
      if (s == to_string(JacScope::AllSummands)) cfg.scope = JacScope::AllSummands;
      else if (s == to_string(JacScope::FirstSummand)) cfg.scope = JacScope::FirstSummand;
      else throw Error(ErrorCode::ParseError, "jac_delta_scope must be \"all-summands\" or \"first-summand\"");
    } else if (key == "center_rule") {
      const std::string s = v.is_string() ? v.get<std::string>() : "";
      if (s == to_string(CenterRule::Center)) cfg.center_rule = CenterRule::Center;
      else if (s == to_string(CenterRule::Zero)) cfg.center_rule = CenterRule::Zero;
      else throw Error(ErrorCode::ParseError, "center_rule must be \"center\" or \"zero\"");
    } else if (key == "solver") {
      cfg.solver = bundle::options_from(v, cfg.solver);
    } else {
      throw Error(ErrorCode::ParseError, "unknown config key \"" + key + "\"");
    }
  }
  return cfg;
}

struct Outcome {
  Json doc;
  int code = 0;
};

Outcome report_outcome(Report report, const Config& cfg) {
  report.set_meta("tool_version", kToolVersion);
  report.set_meta("jac_delta_scope", to_string(cfg.scope));
  report.set_meta("center_rule", to_string(cfg.center_rule));
  const int code = report.passed() ? 0 : 1;
  return {bundle::to_json(report), code};
}

Outcome document(Json doc) { return {std::move(doc), 0}; }

// Copies every clause of `from` into `into`.
void merge_clauses(Report& into, const Report& from) {
  for (const auto& c : from.clauses()) into.clause(c.name, c.anchor).violations = c.violations;
}

Vec parse_u_r(const std::string& spec, int n) {
  if (std::filesystem::is_regular_file(spec)) {
    const Json doc = bundle::read_file(spec);
    return bundle::vec_from(doc.is_object() ? doc.at("u_r") : doc, n);
  }
  Vec out;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_rat(item));
  if (static_cast<int>(out.size()) != n)
    throw Error(ErrorCode::DimMismatch, "--u-r needs " + std::to_string(n) + " comma-separated entries");
  return out;
}

YbeContext context_for(const OmegaLieAlgebra& L, const std::optional<Vec>& u_r, const Config& cfg) {
  if (!L.is_multiplicative()) throw Error(ErrorCode::Precondition, "the Yang-Baxter layer needs a multiplicative algebra");
  YbeContext ctx{L, u_r ? *u_r : zero_vec(L.dim), cfg.center_rule};
  require_dims(ctx.u_r.size() == static_cast<std::size_t>(L.dim), "u_r length differs from the algebra dimension");
  return ctx;
}

// A two_tensor document plus its algebra, taken from --algebra or embedded.
struct TensorInput {
  YbeContext ctx;
  bundle::TwoTensorDoc doc;
};

TensorInput tensor_input(const Json& tensor_doc, const std::string& algebra_path, const std::string& u_r_spec,
                         const Config& cfg) {
  bundle::TwoTensorDoc td = bundle::two_tensor_from(tensor_doc);
  std::optional<OmegaLieAlgebra> L = td.algebra;
  if (!algebra_path.empty()) L = bundle::omega_lie_from(bundle::read_file(algebra_path));
  if (!L) throw Error(ErrorCode::Precondition, "no algebra: pass --algebra or embed one in the two_tensor document");
  require_dims(L->dim == td.R.rows(), "tensor and algebra dimensions differ");
  std::optional<Vec> u_r = td.u_r;
  if (!u_r_spec.empty()) u_r = parse_u_r(u_r_spec, L->dim);
  TensorInput in{context_for(*L, u_r, cfg), std::move(td)};
  return in;
}

Report check_two_tensor(const YbeContext& ctx, const TwoTensor& R) {
  Report out("omega-YBE solution");
  merge_clauses(out, check_r_admissible(ctx, R));
  out.clause("skew", "R + sigma(R) = 0").expect(is_skew(R));
  const Tensor3 T = yb_residual(ctx, R);
  out.clause("yb-equation", "[R, R] = 0").expect_equal({}, T, Tensor3(ctx.L.dim));
  return out;
}

Outcome run_check(const Json& doc, const Config& cfg) {
  const std::string kind = bundle::kind_of(doc);
  if (kind == "omega_lie") return report_outcome(check_omega_lie(bundle::omega_lie_from(doc)), cfg);
  if (kind == "generalized") return report_outcome(check_generalized(bundle::generalized_from(doc)), cfg);
  if (kind == "lsa") return report_outcome(check_lsa(bundle::lsa_from(doc)), cfg);
  if (kind == "representation") return report_outcome(check_representation(bundle::representation_from(doc)), cfg);
  if (kind == "gen_rep_pair") {
    const bundle::GenRepDoc g = bundle::gen_rep_from(doc);
    if (g.f) {
      const auto G = GeneralizedOmegaLieAlgebra::from(g.pair.algebra);
      return report_outcome(check_special_rep_II(G, g.pair.rho1, g.pair.rho2, *g.f), cfg);
    }
    return report_outcome(check_gen_rep(g.pair), cfg);
  }
  if (kind == "two_tensor") {
    const TensorInput in = tensor_input(doc, "", "", cfg);
    return report_outcome(check_two_tensor(in.ctx, in.doc.R), cfg);
  }
  if (kind == "o_operator") {
    const bundle::OOperatorDoc o = bundle::o_operator_from(doc);
    return report_outcome(check_o_operator(o.rep, o.T), cfg);
  }
  if (kind == "dual_pair") {
    const DualPair dp = bundle::dual_pair_from(doc);
    Report out = check_dual_pair(dp);
    if (out.passed()) merge_clauses(out, check_matched_pair(dp));
    return report_outcome(std::move(out), cfg);
  }
  if (kind == "solve_request") throw Error(ErrorCode::UnknownKind, "solve_request documents are run with `solve`, not checked");
  throw Error(ErrorCode::UnknownKind, "unknown document kind \"" + kind + "\"");
}

Outcome construction_report(const GeneralizedConstruction& gc, const Config& cfg) {
  if (gc.input.passed() && gc.output.passed()) return document(bundle::to_json(gc.algebra));
  Report out("semidirect product");
  out.clause("input-data", gc.input.title()).expect(gc.input.passed());
  out.clause("product-structure", gc.output.title()).expect(gc.output.passed());
  out.add_detail("input", gc.input);
  out.add_detail("output", gc.output);
  return report_outcome(std::move(out), cfg);
}

Outcome run_construct(const std::string& recipe, const Json& doc, const std::string& c_text, const Config& cfg) {
  const std::string kind = bundle::kind_of(doc);
  auto need_kind = [&](std::initializer_list<const char*> kinds) {
    for (const char* k : kinds)
      if (kind == k) return;
    throw Error(ErrorCode::UnknownKind, "recipe " + recipe + " does not accept a \"" + kind + "\" document");
  };
  if (recipe == "dual-rep") {
    need_kind({"representation"});
    return document(bundle::to_json(dual_representation(bundle::representation_from(doc))));
  }
  if (recipe == "adjoint-pair") {
    need_kind({"omega_lie"});
    return document(bundle::to_json(adjoint_pair(bundle::omega_lie_from(doc))));
  }
  if (recipe == "gen-dual") {
    need_kind({"gen_rep_pair"});
    return document(bundle::to_json(generalized_dual_pair(bundle::gen_rep_from(doc).pair)));
  }
  if (recipe == "semidirect") {
    need_kind({"representation", "gen_rep_pair"});
    if (kind == "representation") {
      const Representation rep = bundle::representation_from(doc);
      return document(bundle::to_json(semidirect_rep(rep.algebra, rep)));
    }
    const bundle::GenRepDoc g = bundle::gen_rep_from(doc);
    const auto G = GeneralizedOmegaLieAlgebra::from(g.pair.algebra);
    if (g.pair.kind == GenKind::GenI) return construction_report(semidirect_gen_I(G, g.pair.rho1, g.pair.rho2), cfg);
    std::optional<OperatorFamily> f = g.f;
    if (!f) f = solve_special_f(G, g.pair.rho1, g.pair.rho2);
    if (!f) throw Error(ErrorCode::Precondition, "no f satisfies the special Representation II identity for this pair");
    return construction_report(semidirect_special_II(G, g.pair.rho1, g.pair.rho2, *f), cfg);
  }
  if (recipe == "double") {
    need_kind({"dual_pair"});
    return document(bundle::to_json(double_bracket(bundle::dual_pair_from(doc))));
  }
  if (recipe == "cobracket") {
    need_kind({"omega_lie", "two_tensor"});
    if (kind == "omega_lie") {
      const OmegaLieAlgebra Lstar = bundle::omega_lie_from(doc);
      require_pass(check_omega_lie(Lstar), "cobracket: the dual structure is not omega-Lie");
      return document(bundle::cobracket_json(cobracket_of_dual(Lstar)));
    }
    const TensorInput in = tensor_input(doc, "", "", cfg);
    return document(bundle::cobracket_json(delta_from_r(in.ctx, in.doc.R)));
  }
  if (recipe == "dual-from-r") {
    need_kind({"two_tensor"});
    const TensorInput in = tensor_input(doc, "", "", cfg);
    return document(bundle::to_json(dual_structure_from_r(in.ctx, in.doc.R)));
  }
  if (recipe == "lsa-from-o") {
    need_kind({"o_operator"});
    const bundle::OOperatorDoc o = bundle::o_operator_from(doc);
    return document(bundle::to_json(lsa_from_o_operator(o.rep, o.T)));
  }
  if (recipe == "lift-o") {
    need_kind({"o_operator"});
    const bundle::OOperatorDoc o = bundle::o_operator_from(doc);
    Lift lift = lift_o_operator(o.rep, o.T);
    bundle::TwoTensorDoc out{lift.R, lift.H, zero_vec(lift.H.dim), {}};
    return document(bundle::to_json(out));
  }
  if (recipe == "omega-lie-from-lsa") {
    need_kind({"lsa"});
    const Rat c = c_text.empty() ? Rat(1) : parse_rat(c_text);
    const LsaOmegaLie res = omega_lie_from_lsa(bundle::lsa_from(doc), c);
    Json out = bundle::to_json(res.algebra);
    Json comp = Json::array();
    for (int i : res.complement) comp.push_back(i + 1);
    out["meta"]["complement"] = std::move(comp);
    out["meta"]["c"] = format_rat(c);
    return document(std::move(out));
  }
  if (recipe == "rep-from-lsa") {
    need_kind({"lsa"});
    const Rat c = c_text.empty() ? Rat(1) : parse_rat(c_text);
    const LeftSymmetricAlgebra A = bundle::lsa_from(doc);
    return document(bundle::to_json(rep_from_lsa(omega_lie_from_lsa(A, c).algebra, A)));
  }
  throw Error(ErrorCode::UnknownKind, "unknown recipe \"" + recipe + "\"");
}

Outcome run_yb(const std::string& action, const std::string& algebra_path, const std::string& tensor_path,
               const std::string& u_r_spec, const Config& cfg) {
  const TensorInput in = tensor_input(bundle::read_file(tensor_path), algebra_path, u_r_spec, cfg);
  const TwoTensor& R = in.doc.R;
  if (action == "residual") return document(bundle::three_tensor_json(yb_residual(in.ctx, R)));
  if (action == "tensor-form") {
    const TensorFormResult tf = tensor_form_residual(in.ctx, R, in.doc.decomposition);
    const bool matches = tf.unit_part_zero() && tf.pure() == yb_residual(in.ctx, R);
    return document(bundle::tensor_form_json(tf, matches));
  }
  if (action == "admissible") return report_outcome(check_r_admissible(in.ctx, R), cfg);
  if (action == "lemma42") return report_outcome(check_lemma42(in.ctx, R, cfg.scope), cfg);
  if (action == "bialgebra") return report_outcome(check_yb_bialgebra(in.ctx, R), cfg);
  if (action == "solution") return report_outcome(check_two_tensor(in.ctx, R), cfg);
  throw Error(ErrorCode::UnknownKind, "unknown yb action \"" + action + "\"");
}

Outcome run_verify(const std::string& name, const Json& doc, const Config& cfg) {
  if (name == "thm-3.8" || name == "bialgebra-equivalence")
    return report_outcome(crosscheck_bialgebra(bundle::dual_pair_from(doc), true), cfg);
  if (name == "thm-4.4" || name == "dual-structure") {
    const TensorInput in = tensor_input(doc, "", "", cfg);
    return report_outcome(crosscheck_dual_structure(in.ctx, in.doc.R), cfg);
  }
  if (name == "thm-5.18" || name == "o-operator-lift") {
    const bundle::OOperatorDoc o = bundle::o_operator_from(doc);
    return report_outcome(crosscheck_lift(o.rep, o.T), cfg);
  }
  throw Error(ErrorCode::UnknownKind, "unknown verification \"" + name + "\"");
}

Outcome run_solve(const Json& doc, const Config& cfg, bool deterministic) {
  if (bundle::kind_of(doc) != "solve_request") throw Error(ErrorCode::UnknownKind, "solve needs a solve_request document");
  bundle::SolveRequest req = bundle::solve_request_from(doc);
  SolveOptions o = cfg.solver;
  if (doc.contains("options")) o = bundle::options_from(doc.at("options"), cfg.solver);
  if (deterministic) {
    o.seed = 1;
    o.workers = 1;
  }
  const SolveProblem problem = SolveProblem::build(context_for(req.L, req.u_r, cfg), o);
  return document(bundle::solve_result_json(problem, solve(problem)));
}

void emit(const Json& doc, const std::string& out_path, std::ostream& out) {
  const std::string text = doc.dump(2) + "\n";
  if (out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(out_path);
  if (!f) throw Error(ErrorCode::ParseError, "cannot write " + out_path);
  f << text;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification and construction toolkit for multiplicative omega-Lie algebras", "omegalie"};
  app.require_subcommand(1);
  std::string config_path, out_path;
  bool deterministic = false;
  app.add_option("--config", config_path, "JSON config (jac_delta_scope, center_rule, solver)");
  app.add_option("--out", out_path, "write the document here instead of standard output");
  app.add_flag("--deterministic", deterministic, "pin the solver seed to 1 and use one worker");
  app.set_version_flag("--version", kToolVersion);

  std::string in_path, recipe, action, verify_name, algebra_path, tensor_path, u_r_spec, c_text;

  auto* check = app.add_subcommand("check", "run the checker matching the document kind");
  check->add_option("bundle", in_path, "input document")->required();

  auto* construct = app.add_subcommand("construct", "build a derived object");
  construct->add_option("recipe", recipe,
                        "dual-rep | adjoint-pair | gen-dual | semidirect | double | cobracket | dual-from-r | "
                        "lsa-from-o | lift-o | omega-lie-from-lsa | rep-from-lsa")
      ->required();
  construct->add_option("--in", in_path, "input document")->required();
  construct->add_option("--c", c_text, "nonzero constant for omega-lie-from-lsa / rep-from-lsa (default 1)");

  auto* yb = app.add_subcommand("yb", "Yang-Baxter computations for a two-tensor");
  yb->add_option("action", action, "residual | tensor-form | admissible | lemma42 | bialgebra | solution")->required();
  yb->add_option("--algebra", algebra_path, "omega_lie document (else the one embedded in the tensor)");
  yb->add_option("--r-tensor", tensor_path, "two_tensor document")->required();
  yb->add_option("--u-r", u_r_spec, "central element: inline \"1,0\" or a JSON file");

  auto* verify = app.add_subcommand("verify", "run a cross-check between independent routes");
  verify->add_option("name", verify_name,
                     "thm-3.8 (bialgebra-equivalence) | thm-4.4 (dual-structure) | thm-5.18 (o-operator-lift)")
      ->required();
  verify->add_option("--in", in_path, "input document")->required();

  auto* solve_cmd = app.add_subcommand("solve", "numerically search for skew solutions, then verify exactly");
  solve_cmd->add_option("--in", in_path, "solve_request document")->required();

  for (auto* sub : {check, construct, yb, verify, solve_cmd}) sub->fallthrough();

  std::vector<const char*> argv{"omegalie"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  try {
    const Config cfg = load_config(config_path);
    Outcome result;
    try {
      if (*check) result = run_check(bundle::read_file(in_path), cfg);
      else if (*construct) result = run_construct(recipe, bundle::read_file(in_path), c_text, cfg);
      else if (*yb) result = run_yb(action, algebra_path, tensor_path, u_r_spec, cfg);
      else if (*verify) result = run_verify(verify_name, bundle::read_file(in_path), cfg);
      else result = run_solve(bundle::read_file(in_path), cfg, deterministic);
    } catch (const AxiomViolation& e) {
      err << "omegalie: " << e.what() << "\n";
      result = report_outcome(e.report(), cfg);
    }
    emit(result.doc, out_path, out);
    return result.code;
  } catch (const Error& e) {
    err << "omegalie: " << e.what() << "\n";
  } catch (const nlohmann::json::exception& e) {
    err << "omegalie: PARSE_ERROR: " << e.what() << "\n";
  } catch (const std::exception& e) {
    err << "omegalie: " << e.what() << "\n";
  }
  return 2;
}

}  // namespace omegalie::cli
