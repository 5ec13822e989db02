#pragma once

#include <cassert>
#include <optional>
#include <string>
#include <vector>

#include "refdefect/scalar.hpp"

namespace refdefect {

/// Dense matrix of Gaussian rationals, row-major. All arithmetic is exact.
class Mat {
 public:
  Mat(int rows, int cols) : rows_(rows), cols_(cols), e_(static_cast<size_t>(rows) * cols) {
    assert(rows > 0 && cols > 0);
  }

  static Mat identity(int n);
  static Mat zero(int rows, int cols) { return Mat(rows, cols); }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Scalar& at(int i, int j) {
    assert(i >= 0 && i < rows_ && j >= 0 && j < cols_);
    return e_[static_cast<size_t>(i) * cols_ + j];
  }
  const Scalar& at(int i, int j) const {
    assert(i >= 0 && i < rows_ && j >= 0 && j < cols_);
    return e_[static_cast<size_t>(i) * cols_ + j];
  }

  Mat transpose() const;
  Scalar trace() const;  // square only
  bool is_zero() const;

  Mat block(int i0, int j0, int nrows, int ncols) const;
  void set_block(int i0, int j0, const Mat& b);
  void swap_rows(int i, int j);

  Mat operator-() const;
  Mat& operator+=(const Mat& o);
  Mat& operator-=(const Mat& o);
  Mat& operator*=(const Scalar& s);

  friend Mat operator+(Mat a, const Mat& b) { return a += b; }
  friend Mat operator-(Mat a, const Mat& b) { return a -= b; }
  friend Mat operator*(Mat a, const Scalar& s) { return a *= s; }
  friend Mat operator*(const Scalar& s, Mat a) { return a *= s; }
  friend Mat operator*(const Mat& a, const Mat& b);

  friend bool operator==(const Mat& a, const Mat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
  }
  friend bool operator!=(const Mat& a, const Mat& b) { return !(a == b); }

 private:
  int rows_, cols_;
  std::vector<Scalar> e_;
};

struct Rref {
  Mat m;
  int rank;
  std::vector<int> pivot_cols;
};

/// Unique reduced row echelon form, exact and deterministic.
Rref rref(const Mat& m);

int rank(const Mat& m);

/// Basis of the right null space as column vectors, one per free column,
/// ordered by free column index. Empty for injective matrices.
std::vector<Mat> kernel_basis(const Mat& m);

/// Exact inverse, or nullopt for singular input.
std::optional<Mat> inverse(const Mat& m);

/// Column-stacking vectorization: columns top-to-bottom, left-to-right.
Mat vec(const Mat& m);
Mat unvec(const Mat& v, int rows, int cols);

/// Kronecker product; satisfies vec(A*T*B) = kron(B^T, A) * vec(T).
Mat kron(const Mat& a, const Mat& b);

Mat mat_pow(const Mat& m, int e);

std::string to_string(const Mat& m);

}  // namespace refdefect
