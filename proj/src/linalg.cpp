#include "omegalie/linalg.hpp"

#include <string>
#include <utility>

#include "omegalie/error.hpp"

namespace omegalie {

namespace {

void check_same(std::size_t a, std::size_t b, const char* op) {
  require_dims(a == b, std::string(op) + ": length " + std::to_string(a) + " vs " + std::to_string(b));
}

}  // namespace

Vec zero_vec(int n) { return Vec(static_cast<std::size_t>(n), Rat(0)); }

Vec unit_vec(int n, int i) {
  require_dims(i >= 0 && i < n, "unit_vec: index out of range");
  Vec v = zero_vec(n);
  v[i] = 1;
  return v;
}

Vec add(const Vec& a, const Vec& b) {
  check_same(a.size(), b.size(), "add");
  Vec out(a);
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  return out;
}

Vec sub(const Vec& a, const Vec& b) {
  check_same(a.size(), b.size(), "sub");
  Vec out(a);
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  return out;
}

Vec scale(const Rat& s, const Vec& v) {
  Vec out(v);
  for (auto& x : out) x *= s;
  return out;
}

void axpy(const Rat& s, const Vec& x, Vec& y) {
  check_same(x.size(), y.size(), "axpy");
  if (s == 0) return;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] != 0) y[i] += s * x[i];
}

Rat dot(const Vec& a, const Vec& b) {
  check_same(a.size(), b.size(), "dot");
  Rat acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0 && b[i] != 0) acc += a[i] * b[i];
  return acc;
}

bool is_zero(const Vec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

// ---- Mat -------------------------------------------------------------------

Mat::Mat(int rows, int cols) : rows_(rows), cols_(cols) {
  require_dims(rows >= 0 && cols >= 0, "negative matrix extent");
  data_.assign(static_cast<std::size_t>(rows) * cols, Rat(0));
}

Mat Mat::identity(int n) {
  Mat m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Mat Mat::from_rows(const std::vector<Vec>& rows, int cols) {
  Mat m(static_cast<int>(rows.size()), cols);
  for (int i = 0; i < m.rows(); ++i) {
    check_same(rows[i].size(), static_cast<std::size_t>(cols), "from_rows");
    for (int j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

Vec Mat::row(int i) const {
  Vec v(static_cast<std::size_t>(cols_));
  for (int j = 0; j < cols_; ++j) v[j] = (*this)(i, j);
  return v;
}

Vec Mat::col(int j) const {
  Vec v(static_cast<std::size_t>(rows_));
  for (int i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

bool Mat::is_zero() const {
  for (const auto& x : data_)
    if (x != 0) return false;
  return true;
}

Mat add(const Mat& a, const Mat& b) {
  Mat out(a);
  axpy(Rat(1), b, out);
  return out;
}

Mat sub(const Mat& a, const Mat& b) {
  Mat out(a);
  axpy(Rat(-1), b, out);
  return out;
}

Mat scale(const Rat& s, const Mat& a) {
  Mat out(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) out(i, j) = s * a(i, j);
  return out;
}

void axpy(const Rat& s, const Mat& x, Mat& y) {
  require_dims(x.rows() == y.rows() && x.cols() == y.cols(), "matrix axpy: shape mismatch");
  if (s == 0) return;
  for (int i = 0; i < x.rows(); ++i)
    for (int j = 0; j < x.cols(); ++j)
      if (x(i, j) != 0) y(i, j) += s * x(i, j);
}

Mat matmul(const Mat& a, const Mat& b) {
  require_dims(a.cols() == b.rows(), "matmul: inner dimensions differ");
  Mat out(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (int j = 0; j < b.cols(); ++j)
        if (b(k, j) != 0) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

Vec matvec(const Mat& a, const Vec& x) {
  check_same(static_cast<std::size_t>(a.cols()), x.size(), "matvec");
  Vec out = zero_vec(a.rows());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      if (a(i, j) != 0 && x[j] != 0) out[i] += a(i, j) * x[j];
  return out;
}

Mat transpose(const Mat& a) {
  Mat out(a.cols(), a.rows());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) out(j, i) = a(i, j);
  return out;
}

Mat outer(const Vec& x, const Vec& y) {
  Mat out(static_cast<int>(x.size()), static_cast<int>(y.size()));
  for (int i = 0; i < out.rows(); ++i)
    for (int j = 0; j < out.cols(); ++j) out(i, j) = x[i] * y[j];
  return out;
}

Rat determinant(const Mat& a) {
  require_dims(a.rows() == a.cols(), "determinant of a non-square matrix");
  Mat m(a);
  const int n = m.rows();
  Rat det = 1;
  for (int c = 0; c < n; ++c) {
    int p = c;
    while (p < n && m(p, c) == 0) ++p;
    if (p == n) return Rat(0);
    if (p != c) {
      for (int j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    for (int i = c + 1; i < n; ++i) {
      if (m(i, c) == 0) continue;
      Rat f = m(i, c) / m(c, c);
      for (int j = c; j < n; ++j) m(i, j) -= f * m(c, j);
    }
  }
  return det;
}

// ---- Tensor3 ---------------------------------------------------------------

Tensor3::Tensor3(int d0, int d1, int d2) : dims_{d0, d1, d2} {
  require_dims(d0 >= 0 && d1 >= 0 && d2 >= 0, "negative tensor extent");
  data_.assign(static_cast<std::size_t>(d0) * d1 * d2, Rat(0));
}

bool Tensor3::is_zero() const {
  for (const auto& x : data_)
    if (x != 0) return false;
  return true;
}

namespace {

void check_same_shape(const Tensor3& a, const Tensor3& b) {
  require_dims(a.dim(0) == b.dim(0) && a.dim(1) == b.dim(1) && a.dim(2) == b.dim(2),
               "tensor shapes differ");
}

}  // namespace

Tensor3 add(const Tensor3& a, const Tensor3& b) {
  check_same_shape(a, b);
  Tensor3 out(a);
  for (int i = 0; i < a.dim(0); ++i)
    for (int j = 0; j < a.dim(1); ++j)
      for (int k = 0; k < a.dim(2); ++k) out(i, j, k) += b(i, j, k);
  return out;
}

Tensor3 sub(const Tensor3& a, const Tensor3& b) { return add(a, scale(Rat(-1), b)); }

Tensor3 scale(const Rat& s, const Tensor3& a) {
  Tensor3 out(a);
  for (int i = 0; i < a.dim(0); ++i)
    for (int j = 0; j < a.dim(1); ++j)
      for (int k = 0; k < a.dim(2); ++k) out(i, j, k) *= s;
  return out;
}

// ---- elimination -----------------------------------------------------------

std::vector<int> rref(Mat& a) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < a.cols() && row < a.rows(); ++col) {
    int p = row;
    while (p < a.rows() && a(p, col) == 0) ++p;
    if (p == a.rows()) continue;
    if (p != row)
      for (int j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(row, j));
    const Rat inv = 1 / a(row, col);
    for (int j = col; j < a.cols(); ++j) a(row, j) *= inv;
    for (int i = 0; i < a.rows(); ++i) {
      if (i == row || a(i, col) == 0) continue;
      const Rat f = a(i, col);
      for (int j = col; j < a.cols(); ++j) a(i, j) -= f * a(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

int rank(Mat a) { return static_cast<int>(rref(a).size()); }

std::optional<Vec> solve_linear(const Mat& a, const Vec& b) {
  check_same(static_cast<std::size_t>(a.rows()), b.size(), "solve_linear");
  const int n = a.cols();
  Mat aug(a.rows(), n + 1);
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n) = b[i];
  }
  const auto pivots = rref(aug);
  if (!pivots.empty() && pivots.back() == n) return std::nullopt;
  Vec x = zero_vec(n);
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug(static_cast<int>(r), n);
  return x;
}

// ---- subspaces -------------------------------------------------------------

Subspace Subspace::span(int ambient, const std::vector<Vec>& vectors) {
  Subspace s;
  s.ambient_ = ambient;
  if (vectors.empty()) return s;
  Mat m = Mat::from_rows(vectors, ambient);
  const auto pivots = rref(m);
  for (std::size_t r = 0; r < pivots.size(); ++r) s.basis_.push_back(m.row(static_cast<int>(r)));
  return s;
}

Subspace Subspace::full(int ambient) {
  std::vector<Vec> basis;
  for (int i = 0; i < ambient; ++i) basis.push_back(unit_vec(ambient, i));
  return span(ambient, basis);
}

Subspace Subspace::zero(int ambient) { return span(ambient, {}); }

bool Subspace::contains(const Vec& v) const {
  check_same(v.size(), static_cast<std::size_t>(ambient_), "Subspace::contains");
  const Mat ann = annihilator();
  return is_zero(matvec(ann, v));
}

bool Subspace::contains(const Subspace& other) const {
  require_dims(other.ambient_ == ambient_, "Subspace::contains: ambient dimensions differ");
  for (const auto& v : other.basis_)
    if (!contains(v)) return false;
  return true;
}

Mat Subspace::annihilator() const {
  if (basis_.empty()) return Mat::identity(ambient_);
  const Subspace ann = nullspace(Mat::from_rows(basis_, ambient_));
  if (ann.basis_.empty()) return Mat(0, ambient_);
  return Mat::from_rows(ann.basis_, ambient_);
}

Subspace nullspace(const Mat& a) {
  Mat m(a);
  const auto pivots = rref(m);
  const int n = a.cols();
  std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
  for (int p : pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (int f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Vec v = zero_vec(n);
    v[f] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(static_cast<int>(r), f);
    basis.push_back(std::move(v));
  }
  return Subspace::span(n, basis);
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  require_dims(a.ambient() == b.ambient(), "intersect: ambient dimensions differ");
  const Mat ma = a.annihilator();
  const Mat mb = b.annihilator();
  Mat stacked(ma.rows() + mb.rows(), a.ambient());
  for (int i = 0; i < ma.rows(); ++i)
    for (int j = 0; j < a.ambient(); ++j) stacked(i, j) = ma(i, j);
  for (int i = 0; i < mb.rows(); ++i)
    for (int j = 0; j < a.ambient(); ++j) stacked(ma.rows() + i, j) = mb(i, j);
  return nullspace(stacked);
}

}  // namespace omegalie
