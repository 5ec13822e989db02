#pragma once

#include <string>
#include <vector>

#include "refdefect/mat.hpp"

namespace refdefect {

/// Linear subspace of a matrix space M_{m,n}, stored in canonical form: the
/// vectorized basis elements form the reduced row echelon form of any spanning
/// set, so equality of subspaces is structural equality of bases.
class Subspace {
 public:
  static Subspace zero(int ambient_rows, int ambient_cols);
  static Subspace full(int ambient_rows, int ambient_cols);

  /// Canonical span; duplicates and linear dependencies are removed.
  /// All matrices must have shape ambient_rows x ambient_cols.
  static Subspace span(int ambient_rows, int ambient_cols, const std::vector<Mat>& mats);

  /// Span with the ambient shape taken from the first matrix; throws on
  /// an empty list (the ambient shape would be ambiguous).
  static Subspace span(const std::vector<Mat>& mats);

  int ambient_rows() const { return arows_; }
  int ambient_cols() const { return acols_; }
  int ambient_dim() const { return arows_ * acols_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  const std::vector<Mat>& basis() const { return basis_; }

  bool contains(const Mat& m) const;
  bool contains(const Subspace& other) const;

  Subspace sum(const Subspace& o) const;
  Subspace intersect(const Subspace& o) const;

  /// Annihilator under the bilinear trace pairing <C, S> = tr(C*S): for an
  /// ambient M_{m,n} the result lives in M_{n,m}. dim + dim(annihilator)
  /// equals m*n, and the operation is an involution.
  Subspace annihilator() const;

  Subspace left_mul(const Mat& a) const;   // span{ a*s }
  Subspace right_mul(const Mat& b) const;  // span{ s*b }
  Subspace transform(const Mat& a, const Mat& b) const;  // span{ a*s*b }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.arows_ == b.arows_ && a.acols_ == b.acols_ && a.basis_ == b.basis_;
  }
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

 private:
  Subspace(int arows, int acols) : arows_(arows), acols_(acols) {}

  int arows_, acols_;
  std::vector<Mat> basis_;
  std::vector<int> pivots_;  // pivot position of each vectorized basis row
};

using SubspaceGrid = std::vector<std::vector<Subspace>>;

/// Embeds each block subspace at its corner of the block partition given by
/// row_sizes x col_sizes and sums; dim equals the sum of the block dims.
Subspace block_compose(const SubspaceGrid& blocks, const std::vector<int>& row_sizes,
                       const std::vector<int>& col_sizes);

struct BlockDecomposition {
  bool ok;
  SubspaceGrid blocks;     // corner compressions (valid even when !ok)
  std::string diagnostic;  // set when !ok
};

/// Splits s along the block partition. Succeeds iff s equals the block
/// composition of its corner compressions; otherwise the blockwise identities
/// for covers and defects do not apply to s and the caller must not use them.
BlockDecomposition block_decompose(const Subspace& s, const std::vector<int>& row_sizes,
                                   const std::vector<int>& col_sizes);

}  // namespace refdefect
