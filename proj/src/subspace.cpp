#include "refdefect/subspace.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace refdefect {

namespace {

void check_same_ambient(const Subspace& a, const Subspace& b, const char* what) {
  if (a.ambient_rows() != b.ambient_rows() || a.ambient_cols() != b.ambient_cols())
    throw std::invalid_argument(std::string(what) + ": ambient shape mismatch");
}

}  // namespace

Subspace Subspace::zero(int ambient_rows, int ambient_cols) {
  assert(ambient_rows > 0 && ambient_cols > 0);
  return Subspace(ambient_rows, ambient_cols);
}

Subspace Subspace::full(int ambient_rows, int ambient_cols) {
  // Unit matrices in vec order are already the canonical (RREF) basis.
  Subspace s(ambient_rows, ambient_cols);
  int n = ambient_rows * ambient_cols;
  s.basis_.reserve(n);
  s.pivots_.reserve(n);
  for (int j = 0; j < ambient_cols; ++j)
    for (int i = 0; i < ambient_rows; ++i) {
      Mat e(ambient_rows, ambient_cols);
      e.at(i, j) = Scalar(1);
      s.basis_.push_back(std::move(e));
      s.pivots_.push_back(static_cast<int>(s.pivots_.size()));
    }
  return s;
}

Subspace Subspace::span(int ambient_rows, int ambient_cols, const std::vector<Mat>& mats) {
  Subspace s(ambient_rows, ambient_cols);
  for (const Mat& m : mats) {
    if (m.rows() != ambient_rows || m.cols() != ambient_cols)
      throw std::invalid_argument("Subspace::span: mixed matrix shapes");
  }
  if (mats.empty()) return s;
  Mat rows_mat(static_cast<int>(mats.size()), ambient_rows * ambient_cols);
  for (size_t i = 0; i < mats.size(); ++i) {
    Mat v = vec(mats[i]);
    for (int q = 0; q < v.rows(); ++q) rows_mat.at(static_cast<int>(i), q) = v.at(q, 0);
  }
  Rref r = rref(rows_mat);
  s.basis_.reserve(r.rank);
  for (int i = 0; i < r.rank; ++i) {
    Mat v(ambient_rows * ambient_cols, 1);
    for (int q = 0; q < v.rows(); ++q) v.at(q, 0) = r.m.at(i, q);
    s.basis_.push_back(unvec(v, ambient_rows, ambient_cols));
  }
  s.pivots_ = std::move(r.pivot_cols);
  return s;
}

Subspace Subspace::span(const std::vector<Mat>& mats) {
  if (mats.empty())
    throw std::invalid_argument("Subspace::span: ambient shape required for an empty span");
  return span(mats.front().rows(), mats.front().cols(), mats);
}

bool Subspace::contains(const Mat& m) const {
  if (m.rows() != arows_ || m.cols() != acols_)
    throw std::invalid_argument("Subspace::contains: ambient shape mismatch");
  Mat v = vec(m);
  // The canonical basis rows are in RREF, so the coefficient of basis row i in
  // any representation of v is v[pivot_i].
  for (int i = 0; i < dim(); ++i) {
    Scalar c = v.at(pivots_[i], 0);
    if (c.is_zero()) continue;
    Mat bv = vec(basis_[i]);
    for (int q = 0; q < v.rows(); ++q) {
      if (!bv.at(q, 0).is_zero()) v.at(q, 0) -= c * bv.at(q, 0);
    }
  }
  return v.is_zero();
}

bool Subspace::contains(const Subspace& other) const {
  check_same_ambient(*this, other, "Subspace::contains");
  for (const Mat& b : other.basis_) {
    if (!contains(b)) return false;
  }
  return true;
}

Subspace Subspace::sum(const Subspace& o) const {
  check_same_ambient(*this, o, "Subspace::sum");
  std::vector<Mat> all = basis_;
  all.insert(all.end(), o.basis_.begin(), o.basis_.end());
  return span(arows_, acols_, all);
}

Subspace Subspace::intersect(const Subspace& o) const {
  check_same_ambient(*this, o, "Subspace::intersect");
  if (dim() == 0 || o.dim() == 0) return zero(arows_, acols_);
  // v in both spans iff v = U^T x = W^T y; solve [U^T | -W^T] (x;y) = 0.
  int n = ambient_dim();
  Mat sys(n, dim() + o.dim());
  for (int i = 0; i < dim(); ++i) {
    Mat v = vec(basis_[i]);
    for (int q = 0; q < n; ++q) sys.at(q, i) = v.at(q, 0);
  }
  for (int j = 0; j < o.dim(); ++j) {
    Mat v = vec(o.basis_[j]);
    for (int q = 0; q < n; ++q) sys.at(q, dim() + j) = -v.at(q, 0);
  }
  std::vector<Mat> gens;
  for (const Mat& z : kernel_basis(sys)) {
    Mat acc(arows_, acols_);
    for (int i = 0; i < dim(); ++i) {
      if (!z.at(i, 0).is_zero()) acc += z.at(i, 0) * basis_[i];
    }
    gens.push_back(std::move(acc));
  }
  return span(arows_, acols_, gens);
}

Subspace Subspace::annihilator() const {
  if (dim() == 0) return full(acols_, arows_);
  // tr(C * S) = vec(C) . vec(S^T) for C in M_{n,m}, S in M_{m,n}.
  Mat constraints(dim(), ambient_dim());
  for (int i = 0; i < dim(); ++i) {
    Mat vt = vec(basis_[i].transpose());
    for (int q = 0; q < vt.rows(); ++q) constraints.at(i, q) = vt.at(q, 0);
  }
  std::vector<Mat> gens;
  for (const Mat& v : kernel_basis(constraints)) gens.push_back(unvec(v, acols_, arows_));
  return span(acols_, arows_, gens);
}

Subspace Subspace::left_mul(const Mat& a) const {
  if (a.cols() != arows_) throw std::invalid_argument("Subspace::left_mul: shape mismatch");
  std::vector<Mat> gens;
  gens.reserve(basis_.size());
  for (const Mat& b : basis_) gens.push_back(a * b);
  return span(a.rows(), acols_, gens);
}

Subspace Subspace::right_mul(const Mat& b) const {
  if (b.rows() != acols_) throw std::invalid_argument("Subspace::right_mul: shape mismatch");
  std::vector<Mat> gens;
  gens.reserve(basis_.size());
  for (const Mat& m : basis_) gens.push_back(m * b);
  return span(arows_, b.cols(), gens);
}

Subspace Subspace::transform(const Mat& a, const Mat& b) const {
  if (a.cols() != arows_ || b.rows() != acols_)
    throw std::invalid_argument("Subspace::transform: shape mismatch");
  std::vector<Mat> gens;
  gens.reserve(basis_.size());
  for (const Mat& m : basis_) gens.push_back(a * m * b);
  return span(a.rows(), b.cols(), gens);
}

namespace {

std::vector<int> offsets_of(const std::vector<int>& sizes) {
  std::vector<int> off(sizes.size() + 1, 0);
  for (size_t i = 0; i < sizes.size(); ++i) {
    if (sizes[i] <= 0) throw std::invalid_argument("block sizes must be positive");
    off[i + 1] = off[i] + sizes[i];
  }
  return off;
}

}  // namespace

Subspace block_compose(const SubspaceGrid& blocks, const std::vector<int>& row_sizes,
                       const std::vector<int>& col_sizes) {
  if (blocks.size() != row_sizes.size())
    throw std::invalid_argument("block_compose: grid has wrong number of block rows");
  std::vector<int> roff = offsets_of(row_sizes);
  std::vector<int> coff = offsets_of(col_sizes);
  int R = roff.back(), C = coff.back();
  std::vector<Mat> gens;
  for (size_t i = 0; i < blocks.size(); ++i) {
    if (blocks[i].size() != col_sizes.size())
      throw std::invalid_argument("block_compose: grid has wrong number of block columns");
    for (size_t j = 0; j < blocks[i].size(); ++j) {
      const Subspace& s = blocks[i][j];
      if (s.ambient_rows() != row_sizes[i] || s.ambient_cols() != col_sizes[j])
        throw std::invalid_argument("block_compose: block ambient does not match partition");
      for (const Mat& b : s.basis()) {
        Mat big(R, C);
        big.set_block(roff[i], coff[j], b);
        gens.push_back(std::move(big));
      }
    }
  }
  Subspace out = gens.empty() ? Subspace::zero(R, C) : Subspace::span(R, C, gens);
  return out;
}

BlockDecomposition block_decompose(const Subspace& s, const std::vector<int>& row_sizes,
                                   const std::vector<int>& col_sizes) {
  std::vector<int> roff = offsets_of(row_sizes);
  std::vector<int> coff = offsets_of(col_sizes);
  if (roff.back() != s.ambient_rows() || coff.back() != s.ambient_cols())
    throw std::invalid_argument("block_decompose: partition does not match ambient shape");
  SubspaceGrid grid;
  for (size_t i = 0; i < row_sizes.size(); ++i) {
    std::vector<Subspace> row;
    for (size_t j = 0; j < col_sizes.size(); ++j) {
      std::vector<Mat> corners;
      corners.reserve(s.basis().size());
      for (const Mat& b : s.basis())
        corners.push_back(b.block(roff[i], coff[j], row_sizes[i], col_sizes[j]));
      row.push_back(Subspace::span(row_sizes[i], col_sizes[j], corners));
    }
    grid.push_back(std::move(row));
  }
  Subspace recomposed = block_compose(grid, row_sizes, col_sizes);
  if (recomposed == s) return BlockDecomposition{true, std::move(grid), ""};
  std::ostringstream diag;
  diag << "subspace is not block-decomposable: corner compressions span dimension "
       << recomposed.dim() << ", input has dimension " << s.dim();
  return BlockDecomposition{false, std::move(grid), diag.str()};
}

}  // namespace refdefect
