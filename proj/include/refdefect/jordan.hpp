#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "refdefect/mat.hpp"

namespace refdefect {

struct JordanBlock {
  Scalar eig;
  int size = 1;

  friend bool operator==(const JordanBlock& a, const JordanBlock& b) {
    return a.eig == b.eig && a.size == b.size;
  }
};

/// Jordan-form description of a matrix: an ordered list of (eigenvalue, block
/// size) pairs. Eigenvalues need not be distinct. Jordan data is always an
/// input here; it is never extracted from a raw matrix.
struct JordanSpec {
  std::vector<JordanBlock> blocks;

  int dim() const;

  static JordanSpec single(Scalar eig, int size) { return JordanSpec{{{std::move(eig), size}}}; }

  /// Blocks sorted by eigenvalue (lexicographic), then size descending.
  JordanSpec canonical() const;

  /// Compact label, e.g. "J3(0)+J2(1+i)". Uses the block order as stored.
  std::string label() const;

  friend bool operator==(const JordanSpec& a, const JordanSpec& b) { return a.blocks == b.blocks; }
};

/// J_size(eig): eig on the diagonal, 1 on the superdiagonal.
Mat jordan_block(const Scalar& eig, int size);

/// Block-diagonal matrix with one Jordan block per spec entry.
Mat build(const JordanSpec& spec);

/// Sizes of the Jordan blocks of m at the given eigenvalue, descending,
/// recovered from the rank sequence of powers of (m - eig*I). Empty when eig
/// is not an eigenvalue.
std::vector<int> segre(const Mat& m, const Scalar& eig);

enum class SimilarityStatus { found, not_similar, budget_exhausted };

struct SimilarityResult {
  SimilarityStatus status;
  std::optional<Mat> x;  // invertible, with m*x == x*j, iff status == found

  bool ok() const { return status == SimilarityStatus::found; }
};

/// Searches for an invertible X with M*X = X*J. The solution space of the
/// Sylvester system is computed exactly; candidates are each basis element
/// alone, then seeded random integer combinations with coefficients in
/// [-3, 3]. For similar matrices the invertible solutions are dense in the
/// solution space, so small combinations succeed quickly; exact verification
/// makes false positives impossible. budget_exhausted is distinct from
/// not_similar (the latter means the solution space is {0}).
SimilarityResult find_similarity(const Mat& m, const Mat& j, std::uint64_t seed = 1,
                                 int budget = 64);

struct ScalarLess {
  bool operator()(const Scalar& a, const Scalar& b) const { return a.compare(b) < 0; }
};

/// Multiplicities of the common roots of the minimal polynomials of the two
/// specs: for each shared eigenvalue, min over the specs of its largest block.
std::map<Scalar, int, ScalarLess> gcd_root_multiplicities(const JordanSpec& a,
                                                          const JordanSpec& b);

}  // namespace refdefect
