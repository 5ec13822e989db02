#include "refdefect/elemop.hpp"

#include <stdexcept>
#include <utility>

namespace refdefect {

ElementaryOperator::ElementaryOperator(std::vector<Mat> left, std::vector<Mat> right)
    : p_(0), r_(0), left_(std::move(left)), right_(std::move(right)) {
  if (left_.empty() || left_.size() != right_.size())
    throw std::invalid_argument("ElementaryOperator: coefficient lists must be nonempty and equal length");
  p_ = left_.front().rows();
  r_ = right_.front().rows();
  for (const Mat& a : left_) {
    if (a.rows() != p_ || a.cols() != p_)
      throw std::invalid_argument("ElementaryOperator: left coefficients must all be p x p");
  }
  for (const Mat& b : right_) {
    if (b.rows() != r_ || b.cols() != r_)
      throw std::invalid_argument("ElementaryOperator: right coefficients must all be r x r");
  }
}

Mat ElementaryOperator::apply(const Mat& t) const {
  if (t.rows() != p_ || t.cols() != r_)
    throw std::invalid_argument("ElementaryOperator::apply: argument shape mismatch");
  Mat acc(p_, r_);
  for (size_t l = 0; l < left_.size(); ++l) acc += left_[l] * t * right_[l];
  return acc;
}

Mat ElementaryOperator::matricize() const {
  Mat acc(p_ * r_, p_ * r_);
  for (size_t l = 0; l < left_.size(); ++l) acc += kron(right_[l].transpose(), left_[l]);
  return acc;
}

Subspace ElementaryOperator::kernel_subspace() const {
  std::vector<Mat> gens;
  for (const Mat& v : kernel_basis(matricize())) gens.push_back(unvec(v, p_, r_));
  return Subspace::span(p_, r_, gens);
}

Subspace ElementaryOperator::image_subspace() const {
  Mat m = matricize();
  std::vector<Mat> gens;
  gens.reserve(m.cols());
  for (int j = 0; j < m.cols(); ++j) {
    Mat col(m.rows(), 1);
    for (int i = 0; i < m.rows(); ++i) col.at(i, 0) = m.at(i, j);
    gens.push_back(unvec(col, p_, r_));
  }
  return Subspace::span(p_, r_, gens);
}

ElementaryOperator ElementaryOperator::adjoint() const { return ElementaryOperator(right_, left_); }

ElementaryOperator make_derivation(const Mat& a, const Mat& b) {
  if (a.rows() != a.cols() || b.rows() != b.cols())
    throw std::invalid_argument("make_derivation: coefficients must be square");
  return ElementaryOperator({a, -Mat::identity(a.rows())}, {Mat::identity(b.rows()), b});
}

ElementaryOperator make_mult_minus_id(const Mat& a, const Mat& b) {
  if (a.rows() != a.cols() || b.rows() != b.cols())
    throw std::invalid_argument("make_mult_minus_id: coefficients must be square");
  return ElementaryOperator({a, -Mat::identity(a.rows())}, {b, Mat::identity(b.rows())});
}

}  // namespace refdefect
