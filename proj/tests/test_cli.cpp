#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "omegalie/bundle.hpp"
#include "omegalie/cli.hpp"

using omegalie::bundle::Json;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
  Json doc() const { return Json::parse(out); }
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = omegalie::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(OMEGALIE_TEST_DATA) + "/" + name; }

std::filesystem::path scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "omegalie_cli_tests";
  std::filesystem::create_directories(dir);
  return dir / name;
}

std::vector<std::string> fixtures() {
  std::vector<std::string> out;
  for (const auto& e : std::filesystem::directory_iterator(OMEGALIE_TEST_DATA))
    if (e.path().extension() == ".json") out.push_back(e.path().filename().string());
  std::sort(out.begin(), out.end());
  return out;
}

/// Exit 1 iff the emitted report says FAIL; exit 2 iff nothing was emitted.
void check_contract(const Outcome& o) {
  CAPTURE(o.out);
  CAPTURE(o.err);
  if (o.code == 2) {
    CHECK(o.out.empty());
    CHECK_FALSE(o.err.empty());
    return;
  }
  const Json d = o.doc();
  if (d.value("kind", "") == "report") {
    CHECK((d["verdict"] == "FAIL") == (o.code == 1));
    bool any_violation = false;
    for (const auto& c : d["clauses"]) {
      CHECK((c["verdict"] == "FAIL") == !c["violations"].empty());
      any_violation = any_violation || !c["violations"].empty();
    }
    CHECK(any_violation == (d["verdict"] == "FAIL"));
  } else {
    CHECK(o.code == 0);
  }
}

}  // namespace

TEST_CASE("cli examples") {
  const Outcome c = run({"check", data("b2.json")});
  CHECK(c.code == 0);
  CHECK(c.doc()["verdict"] == "PASS");

  const Outcome y = run({"yb", "residual", "--algebra", data("b2.json"), "--r-tensor", data("wedge.json")});
  CHECK(y.code == 0);
  CHECK(y.doc()["kind"] == "three_tensor");
  CHECK(y.doc()["zero"] == true);

  const Outcome v = run({"verify", "thm-5.18", "--in", data("bad_T.json")});
  CHECK(v.code == 1);
  const Json r = v.doc();
  CHECK(r["verdict"] == "FAIL");
  for (const auto& cl : r["clauses"]) {
    if (cl["name"] == "o-operator" || cl["name"] == "lift-residual-zero") CHECK(cl["verdict"] == "FAIL");
    if (cl["name"] == "verdict-agreement") CHECK(cl["verdict"] == "PASS");
  }
}

TEST_CASE("cli check verdicts and exit codes") {
  const std::vector<std::pair<std::string, int>> expected{
      {"ax2.json", 0},        {"ax2_abelian_dual.json", 1}, {"ax2_scalar_rep.json", 0}, {"b2.json", 0},
      {"bad_T.json", 1},      {"bad_kind.json", 2},         {"classical_double.json", 0}, {"e1_o.json", 0},
      {"jacobi_fail.json", 1}, {"lie3.json", 0},            {"lie_dual.json", 0},       {"malformed.json", 2},
      {"nc2.json", 0},        {"solve_b2.json", 2},         {"wedge.json", 2},          {"wedge_b2.json", 0}};
  for (const auto& [file, code] : expected) {
    CAPTURE(file);
    const Outcome o = run({"check", data(file)});
    CHECK(o.code == code);
    check_contract(o);
  }
  const Json j = run({"check", data("jacobi_fail.json")}).doc();
  bool found = false;
  for (const auto& cl : j["clauses"])
    for (const auto& v : cl["violations"])
      if (v["indices"] == Json::array({1, 2, 3})) found = true;
  CHECK(found);
}

TEST_CASE("cli usage errors exit 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"check"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"check", data("does_not_exist.json")}).code == 2);
  CHECK(run({"construct", "no-such-recipe", "--in", data("b2.json")}).code == 2);
  CHECK(run({"verify", "no-such-check", "--in", data("b2.json")}).code == 2);
  CHECK(run({"yb", "residual", "--r-tensor", data("wedge.json")}).code == 2);  // no algebra anywhere
  CHECK(run({"solve", "--in", data("solve_ax2.json")}).code == 2);
  const Outcome m = run({"check", data("malformed.json")});
  CHECK(m.err.find("PARSE_ERROR") != std::string::npos);
  const Outcome k = run({"check", data("bad_kind.json")});
  CHECK(k.err.find("UNKNOWN_KIND") != std::string::npos);
  CHECK(run({"--version"}).code == 0);
  CHECK(run({"--version"}).out.find(omegalie::cli::kToolVersion) != std::string::npos);
}

TEST_CASE("cli constructions emit documents that re-check") {
  struct Case {
    std::string recipe, input, expect_kind;
  };
  const std::vector<Case> cases{
      {"dual-rep", "ax2_scalar_rep.json", "representation"},
      {"adjoint-pair", "ax2.json", "gen_rep_pair"},
      {"semidirect", "ax2_scalar_rep.json", "omega_lie"},
      {"double", "classical_double.json", "omega_lie"},
      {"cobracket", "ax2.json", "cobracket"},
      {"dual-from-r", "wedge_b2.json", "omega_lie"},
      {"lsa-from-o", "e1_o.json", "lsa"},
      {"lift-o", "e1_o.json", "two_tensor"},
      {"omega-lie-from-lsa", "nc2.json", "omega_lie"},
      {"rep-from-lsa", "nc2.json", "representation"},
  };
  for (const auto& c : cases) {
    CAPTURE(c.recipe);
    const auto out = scratch(c.recipe + ".json");
    const Outcome o = run({"--out", out.string(), "construct", c.recipe, "--in", data(c.input)});
    CHECK(o.code == 0);
    CHECK(o.out.empty());
    const Json d = omegalie::bundle::read_file(out.string());
    CHECK(d["kind"] == c.expect_kind);
    if (c.expect_kind != "cobracket" && c.expect_kind != "two_tensor") {
      const Outcome re = run({"check", out.string()});
      CHECK(re.code == 0);
    }
  }
  // gen-dual chains on the adjoint pair.
  const auto adj = scratch("adjoint.json");
  run({"--out", adj.string(), "construct", "adjoint-pair", "--in", data("ax2.json")});
  const Outcome g = run({"construct", "gen-dual", "--in", adj.string()});
  CHECK(g.code == 0);
  CHECK(g.doc()["kind"] == "gen_rep_pair");

  // The lifted tensor has zero residual on its own algebra.
  const auto lift = scratch("lift-o.json");
  const Outcome res = run({"yb", "residual", "--r-tensor", lift.string()});
  CHECK(res.code == 0);
  CHECK(res.doc()["zero"] == true);

  const Outcome bad = run({"construct", "semidirect", "--in", data("bad_T.json")});
  CHECK(bad.code == 2);
}

TEST_CASE("cli yb actions") {
  for (const std::string action : {"residual", "tensor-form", "admissible", "lemma42", "bialgebra", "solution"}) {
    CAPTURE(action);
    const Outcome o = run({"yb", action, "--algebra", data("b2.json"), "--r-tensor", data("wedge.json")});
    CHECK(o.code == 0);
    check_contract(o);
  }
  const Outcome tf = run({"yb", "tensor-form", "--algebra", data("b2.json"), "--r-tensor", data("wedge.json")});
  CHECK(tf.doc()["matches_residual"] == true);
  const Outcome ax = run({"yb", "admissible", "--algebra", data("ax2.json"), "--r-tensor", data("wedge.json")});
  CHECK(ax.code == 1);
  check_contract(ax);
  const Outcome nc = run({"yb", "admissible", "--algebra", data("b2.json"), "--r-tensor", data("wedge.json"), "--u-r", "1,0"});
  CHECK(nc.code == 1);
  CHECK(run({"yb", "residual", "--algebra", data("b2.json"), "--r-tensor", data("wedge.json"), "--u-r", "1,x"}).code == 2);
}

TEST_CASE("cli verify names and aliases") {
  CHECK(run({"verify", "thm-3.8", "--in", data("classical_double.json")}).code == 0);
  CHECK(run({"verify", "bialgebra-equivalence", "--in", data("classical_double.json")}).code == 0);
  const Outcome d = run({"verify", "thm-3.8", "--in", data("ax2_abelian_dual.json")});
  CHECK(d.code == 1);
  check_contract(d);
  CHECK(run({"verify", "thm-4.4", "--in", data("wedge_b2.json")}).code == 0);
  CHECK(run({"verify", "dual-structure", "--in", data("wedge_b2.json")}).code == 0);
  CHECK(run({"verify", "thm-5.18", "--in", data("e1_o.json")}).code == 0);
  CHECK(run({"verify", "o-operator-lift", "--in", data("bad_T.json")}).code == 1);
}

TEST_CASE("cli solve") {
  const Outcome a = run({"--deterministic", "solve", "--in", data("solve_b2.json")});
  CHECK(a.code == 0);
  const Json d = a.doc();
  CHECK(d["converged"] == true);
  CHECK(d["exact_verified"] == true);
  const Outcome b = run({"--deterministic", "solve", "--in", data("solve_b2.json")});
  CHECK(a.out == b.out);
}

TEST_CASE("cli config knobs reach the report metadata") {
  const auto cfg = scratch("config.json");
  std::ofstream(cfg) << R"({"jac_delta_scope": "first-summand", "center_rule": "zero", "solver": {"restarts": 4}})";
  const Outcome o = run({"--config", cfg.string(), "check", data("b2.json")});
  CHECK(o.code == 0);
  const Json meta = o.doc()["metadata"];
  CHECK(meta["jac_delta_scope"] == "first-summand");
  CHECK(meta["center_rule"] == "zero");
  const auto bad = scratch("bad_config.json");
  std::ofstream(bad) << R"({"jac_delta_scope": "sideways"})";
  CHECK(run({"--config", bad.string(), "check", data("b2.json")}).code == 2);
}

TEST_CASE("cli documents round-trip and reports are byte-stable") {
  for (const auto& f : fixtures()) {
    CAPTURE(f);
    Json doc;
    try {
      doc = omegalie::bundle::read_file(data(f));
    } catch (const omegalie::Error&) {
      continue;
    }
    try {
      const Json once = omegalie::bundle::normalize(doc);
      CHECK(omegalie::bundle::normalize(once) == once);
      CHECK(omegalie::bundle::normalize(Json::parse(once.dump())) == once);
    } catch (const omegalie::Error& e) {
      CHECK_MESSAGE((f == "malformed.json" || f == "bad_kind.json"), e.what());
    }
    const Outcome a = run({"check", data(f)}), b = run({"check", data(f)});
    CHECK(a.out == b.out);
    CHECK(a.code == b.code);
  }
}
