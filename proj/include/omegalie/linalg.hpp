#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "omegalie/rational.hpp"

namespace omegalie {

using Vec = std::vector<Rat>;

Vec zero_vec(int n);
Vec unit_vec(int n, int i);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Rat& s, const Vec& v);
void axpy(const Rat& s, const Vec& x, Vec& y);  // y += s*x
Rat dot(const Vec& a, const Vec& b);
bool is_zero(const Vec& v);

/// Dense row-major rational matrix.
class Mat {
 public:
  Mat() = default;
  Mat(int rows, int cols);

  static Mat identity(int n);
  static Mat from_rows(const std::vector<Vec>& rows, int cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rat& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
  const Rat& operator()(int i, int j) const { return data_[static_cast<std::size_t>(i) * cols_ + j]; }

  Vec row(int i) const;
  Vec col(int j) const;
  bool is_zero() const;

  friend bool operator==(const Mat& a, const Mat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rat> data_;
};

Mat add(const Mat& a, const Mat& b);
Mat sub(const Mat& a, const Mat& b);
Mat scale(const Rat& s, const Mat& a);
void axpy(const Rat& s, const Mat& x, Mat& y);
Mat matmul(const Mat& a, const Mat& b);
Vec matvec(const Mat& a, const Vec& x);
Mat transpose(const Mat& a);
Mat outer(const Vec& x, const Vec& y);
Rat determinant(const Mat& a);

/// Order-3 tensor with independent extents, indexed (i, j, k).
class Tensor3 {
 public:
  Tensor3() = default;
  explicit Tensor3(int n) : Tensor3(n, n, n) {}
  Tensor3(int d0, int d1, int d2);

  int dim(int axis) const { return dims_[axis]; }
  int n() const { return dims_[0]; }  // for cubic tensors
  bool cubic() const { return dims_[0] == dims_[1] && dims_[1] == dims_[2]; }

  Rat& operator()(int i, int j, int k) { return data_[index(i, j, k)]; }
  const Rat& operator()(int i, int j, int k) const { return data_[index(i, j, k)]; }

  bool is_zero() const;
  const std::vector<Rat>& data() const { return data_; }

  friend bool operator==(const Tensor3& a, const Tensor3& b) {
    return a.dims_[0] == b.dims_[0] && a.dims_[1] == b.dims_[1] && a.dims_[2] == b.dims_[2] &&
           a.data_ == b.data_;
  }

 private:
  std::size_t index(int i, int j, int k) const {
    return (static_cast<std::size_t>(i) * dims_[1] + j) * dims_[2] + k;
  }
  int dims_[3] = {0, 0, 0};
  std::vector<Rat> data_;
};

Tensor3 add(const Tensor3& a, const Tensor3& b);
Tensor3 sub(const Tensor3& a, const Tensor3& b);
Tensor3 scale(const Rat& s, const Tensor3& a);

/// Reduced row echelon form in place; returns pivot columns (leftmost-pivot convention).
std::vector<int> rref(Mat& a);
int rank(Mat a);

/// One exact solution of A x = b with free variables set to zero, or nullopt.
std::optional<Vec> solve_linear(const Mat& a, const Vec& b);

/// Subspace of K^n held by its canonical reduced-echelon basis, so equal
/// subspaces compare equal.
class Subspace {
 public:
  Subspace() = default;
  static Subspace span(int ambient, const std::vector<Vec>& vectors);
  static Subspace full(int ambient);
  static Subspace zero(int ambient);

  int ambient() const { return ambient_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  const std::vector<Vec>& basis() const { return basis_; }
  bool contains(const Vec& v) const;
  bool contains(const Subspace& other) const;

  /// Rows span the annihilator: a vector lies in the subspace iff every row kills it.
  Mat annihilator() const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  int ambient_ = 0;
  std::vector<Vec> basis_;
};

Subspace nullspace(const Mat& a);
Subspace intersect(const Subspace& a, const Subspace& b);

}  // namespace omegalie
