#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "omegalie/operators.hpp"
#include "omegalie/solver.hpp"

// JSON documents exchanged by the command-line tool. Files use 1-based basis
// indices and "p/q" rationals; everything here converts to and from the
// 0-based exact types. Basis symbols are validated on input and written back
// as e1..en (algebra) and v1..vm (carrier).
namespace omegalie::bundle {

using Json = nlohmann::ordered_json;

Json read_file(const std::string& path);
Json parse_text(const std::string& text);
/// The "kind" field; PARSE_ERROR when missing.
std::string kind_of(const Json& doc);

// ---- scalars and dense blocks ----
Rat rat_from(const Json& j);
Json to_json(const Rat& x);
Vec vec_from(const Json& j, int n);
Json to_json(const Vec& v);
Mat mat_from(const Json& j, int rows, int cols);
Json to_json(const Mat& m);
Tensor3 tensor_from(const Json& j, int n);
Json to_json(const Tensor3& t);

// ---- documents ----
OmegaLieAlgebra omega_lie_from(const Json& doc);
Json to_json(const OmegaLieAlgebra& L);

GeneralizedOmegaLieAlgebra generalized_from(const Json& doc);
Json to_json(const GeneralizedOmegaLieAlgebra& G);

LeftSymmetricAlgebra lsa_from(const Json& doc);
Json to_json(const LeftSymmetricAlgebra& V);

Representation representation_from(const Json& doc);
Json to_json(const Representation& rep);

struct GenRepDoc {
  GenRepPair pair;
  std::optional<OperatorFamily> f;  // special Representation II data, when given
};
GenRepDoc gen_rep_from(const Json& doc);
Json to_json(const GenRepPair& pair, const OperatorFamily* f = nullptr);

struct TwoTensorDoc {
  TwoTensor R;
  std::optional<OmegaLieAlgebra> algebra;
  std::optional<Vec> u_r;
  Decomposition decomposition;
};
TwoTensorDoc two_tensor_from(const Json& doc);
Json to_json(const TwoTensorDoc& doc);

struct OOperatorDoc {
  Representation rep;
  Mat T;  // n x m
};
OOperatorDoc o_operator_from(const Json& doc);
Json to_json(const OOperatorDoc& doc);

DualPair dual_pair_from(const Json& doc);
Json to_json(const DualPair& dp);

struct SolveRequest {
  OmegaLieAlgebra L;
  Vec u_r;
  SolveOptions options;
};
SolveRequest solve_request_from(const Json& doc);
Json to_json(const SolveRequest& req);
SolveOptions options_from(const Json& j, SolveOptions base = {});
Json to_json(const SolveOptions& o);

// ---- outputs ----
Json three_tensor_json(const Tensor3& T);
Json cobracket_json(const Cobracket& delta);
Json tensor_form_json(const TensorFormResult& result, bool matches_residual);
Json solve_result_json(const SolveProblem& problem, const SolveResult& result);
Json to_json(const Report& report);

/// Parses the document and writes it back; the round-trip is the identity on
/// normalized documents.
Json normalize(const Json& doc);

}  // namespace omegalie::bundle
