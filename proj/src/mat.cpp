#include "refdefect/mat.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace refdefect {

Mat Mat::identity(int n) {
  Mat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Scalar(1);
  return m;
}

Mat Mat::transpose() const {
  Mat t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

Scalar Mat::trace() const {
  if (rows_ != cols_) throw std::invalid_argument("trace: matrix is not square");
  Scalar s;
  for (int i = 0; i < rows_; ++i) s += at(i, i);
  return s;
}

bool Mat::is_zero() const {
  for (const Scalar& s : e_)
    if (!s.is_zero()) return false;
  return true;
}

Mat Mat::block(int i0, int j0, int nrows, int ncols) const {
  assert(i0 >= 0 && j0 >= 0 && i0 + nrows <= rows_ && j0 + ncols <= cols_);
  Mat b(nrows, ncols);
  for (int i = 0; i < nrows; ++i)
    for (int j = 0; j < ncols; ++j) b.at(i, j) = at(i0 + i, j0 + j);
  return b;
}

void Mat::set_block(int i0, int j0, const Mat& b) {
  assert(i0 >= 0 && j0 >= 0 && i0 + b.rows() <= rows_ && j0 + b.cols() <= cols_);
  for (int i = 0; i < b.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j) at(i0 + i, j0 + j) = b.at(i, j);
}

void Mat::swap_rows(int i, int j) {
  if (i == j) return;
  for (int c = 0; c < cols_; ++c)
    std::swap(e_[static_cast<size_t>(i) * cols_ + c], e_[static_cast<size_t>(j) * cols_ + c]);
}

Mat Mat::operator-() const {
  Mat m = *this;
  for (Scalar& s : m.e_) s = -s;
  return m;
}

Mat& Mat::operator+=(const Mat& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("Mat+=: shape mismatch");
  for (size_t n = 0; n < e_.size(); ++n) e_[n] += o.e_[n];
  return *this;
}

Mat& Mat::operator-=(const Mat& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("Mat-=: shape mismatch");
  for (size_t n = 0; n < e_.size(); ++n) e_[n] -= o.e_[n];
  return *this;
}

Mat& Mat::operator*=(const Scalar& s) {
  for (Scalar& x : e_) x *= s;
  return *this;
}

Mat operator*(const Mat& a, const Mat& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("Mat*: shape mismatch");
  Mat c(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int k = 0; k < a.cols(); ++k) {
      const Scalar& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (int j = 0; j < b.cols(); ++j) {
        const Scalar& bkj = b.at(k, j);
        if (bkj.is_zero()) continue;
        c.at(i, j) += aik * bkj;
      }
    }
  }
  return c;
}

Rref rref(const Mat& m) {
  Mat r = m;
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < r.cols() && row < r.rows(); ++col) {
    int pr = -1;
    for (int i = row; i < r.rows(); ++i) {
      if (!r.at(i, col).is_zero()) {
        pr = i;
        break;
      }
    }
    if (pr < 0) continue;
    r.swap_rows(row, pr);
    Scalar inv = r.at(row, col).inverse();
    for (int j = col; j < r.cols(); ++j) {
      if (!r.at(row, j).is_zero()) r.at(row, j) *= inv;
    }
    for (int i = 0; i < r.rows(); ++i) {
      if (i == row || r.at(i, col).is_zero()) continue;
      Scalar f = r.at(i, col);
      for (int j = col; j < r.cols(); ++j) {
        if (!r.at(row, j).is_zero()) r.at(i, j) -= f * r.at(row, j);
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return Rref{std::move(r), row, std::move(pivots)};
}

int rank(const Mat& m) { return rref(m).rank; }

std::vector<Mat> kernel_basis(const Mat& m) {
  Rref r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int c : r.pivot_cols) is_pivot[c] = true;
  std::vector<Mat> out;
  for (int f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Mat v(m.cols(), 1);
    v.at(f, 0) = Scalar(1);
    for (int pi = 0; pi < r.rank; ++pi) v.at(r.pivot_cols[pi], 0) = -r.m.at(pi, f);
    out.push_back(std::move(v));
  }
  return out;
}

std::optional<Mat> inverse(const Mat& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse: matrix is not square");
  int n = m.rows();
  Mat aug(n, 2 * n);
  aug.set_block(0, 0, m);
  aug.set_block(0, n, Mat::identity(n));
  Rref r = rref(aug);
  if (r.rank < n || r.pivot_cols[n - 1] != n - 1) return std::nullopt;
  return r.m.block(0, n, n, n);
}

Mat vec(const Mat& m) {
  Mat v(m.rows() * m.cols(), 1);
  int idx = 0;
  for (int j = 0; j < m.cols(); ++j)
    for (int i = 0; i < m.rows(); ++i) v.at(idx++, 0) = m.at(i, j);
  return v;
}

Mat unvec(const Mat& v, int rows, int cols) {
  if (v.cols() != 1 || v.rows() != rows * cols)
    throw std::invalid_argument("unvec: length does not match the requested shape");
  Mat m(rows, cols);
  int idx = 0;
  for (int j = 0; j < cols; ++j)
    for (int i = 0; i < rows; ++i) m.at(i, j) = v.at(idx++, 0);
  return m;
}

Mat kron(const Mat& a, const Mat& b) {
  Mat k(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) {
      const Scalar& aij = a.at(i, j);
      if (aij.is_zero()) continue;
      for (int u = 0; u < b.rows(); ++u)
        for (int v = 0; v < b.cols(); ++v)
          k.at(i * b.rows() + u, j * b.cols() + v) = aij * b.at(u, v);
    }
  }
  return k;
}

Mat mat_pow(const Mat& m, int e) {
  if (m.rows() != m.cols()) throw std::invalid_argument("mat_pow: matrix is not square");
  assert(e >= 0);
  Mat acc = Mat::identity(m.rows());
  for (int t = 0; t < e; ++t) acc = acc * m;
  return acc;
}

std::string to_string(const Mat& m) {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < m.rows(); ++i) {
    os << (i == 0 ? "[" : " [");
    for (int j = 0; j < m.cols(); ++j) {
      if (j) os << ", ";
      os << to_string(m.at(i, j));
    }
    os << "]";
    if (i + 1 < m.rows()) os << "\n";
  }
  os << "]";
  return os.str();
}

}  // namespace refdefect
