#pragma once

#include <vector>

#include "refdefect/subspace.hpp"

namespace refdefect {

/// Elementary operator T |-> sum_l A_l * T * B_l on M_{p,r}, with square
/// coefficients A_l (p x p) and B_l (r x r).
class ElementaryOperator {
 public:
  ElementaryOperator(std::vector<Mat> left, std::vector<Mat> right);

  int domain_rows() const { return p_; }
  int domain_cols() const { return r_; }
  int term_count() const { return static_cast<int>(left_.size()); }
  const std::vector<Mat>& left_coeffs() const { return left_; }
  const std::vector<Mat>& right_coeffs() const { return right_; }

  Mat apply(const Mat& t) const;

  /// The (p*r) x (p*r) matrix acting on vec(T): sum_l kron(B_l^T, A_l).
  Mat matricize() const;

  Subspace kernel_subspace() const;
  Subspace image_subspace() const;

  /// The operator C |-> sum_l B_l * C * A_l on M_{r,p}. Its kernel equals the
  /// trace-pairing annihilator of this operator's image, exactly.
  ElementaryOperator adjoint() const;

 private:
  int p_, r_;
  std::vector<Mat> left_, right_;
};

/// T |-> a*T - T*b on M_{p,r}, encoded as the two-term lists (a, -I), (I, b).
ElementaryOperator make_derivation(const Mat& a, const Mat& b);

/// T |-> a*T*b - T on M_{p,r}, encoded as the two-term lists (a, -I), (b, I).
ElementaryOperator make_mult_minus_id(const Mat& a, const Mat& b);

}  // namespace refdefect
