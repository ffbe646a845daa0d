#pragma once

#include <deque>
#include <string>
#include <utility>
#include <vector>

#include "omegalie/error.hpp"
#include "omegalie/linalg.hpp"

namespace omegalie {

/// Exact value of one side of an identity: a scalar, vector, matrix or
/// three-tensor, flattened row-major together with its shape.
struct Value {
  std::vector<int> shape;
  std::vector<Rat> data;

  static Value of(const Rat& x) { return {{}, {x}}; }
  static Value of(const Vec& v);
  static Value of(const Mat& m);
  static Value of(const Tensor3& t);
  static Value of(const Value& v) { return v; }
  static Value flag(bool b) { return of(Rat(b ? 1 : 0)); }

  friend bool operator==(const Value&, const Value&) = default;
};

struct Violation {
  std::vector<int> indices;  // 0-based basis indices
  Value lhs;
  Value rhs;
};

struct Clause {
  std::string name;
  std::string anchor;  // which defining identity this clause evaluates
  std::vector<Violation> violations;

  bool passed() const { return violations.empty(); }
  /// Records a violation when lhs != rhs; returns whether the sides agreed.
  template <class T>
  bool expect_equal(std::vector<int> indices, const T& lhs, const T& rhs) {
    if (lhs == rhs) return true;
    violations.push_back({std::move(indices), Value::of(lhs), Value::of(rhs)});
    return false;
  }
  bool expect(bool ok, std::vector<int> indices = {}) {
    if (!ok) violations.push_back({std::move(indices), Value::flag(false), Value::flag(true)});
    return ok;
  }
};

class Report {
 public:
  Report() = default;
  explicit Report(std::string title) : title_(std::move(title)) {}

  const std::string& title() const { return title_; }
  Clause& clause(const std::string& name, const std::string& anchor);
  const std::deque<Clause>& clauses() const { return clauses_; }
  const Clause* find(const std::string& name) const;

  void set_meta(const std::string& key, const std::string& value);
  const std::vector<std::pair<std::string, std::string>>& metadata() const { return meta_; }

  void add_detail(const std::string& key, Report sub);
  const std::vector<std::pair<std::string, Report>>& details() const { return details_; }

  /// PASS exactly when no clause carries a violation. Nested detail reports
  /// are informational and do not affect the verdict.
  bool passed() const;
  std::string verdict() const { return passed() ? "PASS" : "FAIL"; }
  std::size_t violation_count() const;

 private:
  std::string title_;
  std::deque<Clause> clauses_;  // deque: clause() hands out stable references
  std::vector<std::pair<std::string, std::string>> meta_;
  std::vector<std::pair<std::string, Report>> details_;
};

/// Thrown when a construction's input (or asserted output) fails its checker.
class AxiomViolation : public Error {
 public:
  AxiomViolation(const std::string& what, Report report)
      : Error(ErrorCode::AxiomViolation, what), report_(std::move(report)) {}
  const Report& report() const { return report_; }

 private:
  Report report_;
};

/// Throws AxiomViolation carrying `report` unless it passed.
void require_pass(const Report& report, const std::string& what);

}  // namespace omegalie
