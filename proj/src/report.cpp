#include "omegalie/report.hpp"

namespace omegalie {

Value Value::of(const Vec& v) { return {{static_cast<int>(v.size())}, v}; }

Value Value::of(const Mat& m) {
  Value out{{m.rows(), m.cols()}, {}};
  out.data.reserve(static_cast<std::size_t>(m.rows()) * m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out.data.push_back(m(i, j));
  return out;
}

Value Value::of(const Tensor3& t) { return {{t.dim(0), t.dim(1), t.dim(2)}, t.data()}; }

Clause& Report::clause(const std::string& name, const std::string& anchor) {
  for (auto& c : clauses_)
    if (c.name == name) return c;
  clauses_.push_back({name, anchor, {}});
  return clauses_.back();
}

const Clause* Report::find(const std::string& name) const {
  for (const auto& c : clauses_)
    if (c.name == name) return &c;
  return nullptr;
}

void Report::set_meta(const std::string& key, const std::string& value) {
  for (auto& kv : meta_)
    if (kv.first == key) {
      kv.second = value;
      return;
    }
  meta_.emplace_back(key, value);
}

void Report::add_detail(const std::string& key, Report sub) { details_.emplace_back(key, std::move(sub)); }

bool Report::passed() const {
  for (const auto& c : clauses_)
    if (!c.passed()) return false;
  return true;
}

std::size_t Report::violation_count() const {
  std::size_t n = 0;
  for (const auto& c : clauses_) n += c.violations.size();
  return n;
}

void require_pass(const Report& report, const std::string& what) {
  if (!report.passed()) throw AxiomViolation(what, report);
}

}  // namespace omegalie
