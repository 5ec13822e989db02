#include "refdefect/random_gen.hpp"

#include <stdexcept>

namespace refdefect {

Mat random_mat(Rng& rng, int rows, int cols, int max_num, int max_den, bool with_imag) {
  Mat m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m.at(i, j) = rng.scalar(max_num, max_den, with_imag);
  return m;
}

Mat random_invertible(Rng& rng, int n, int max_num, int max_den, bool with_imag) {
  for (int attempt = 0; attempt < 256; ++attempt) {
    Mat m = random_mat(rng, n, n, max_num, max_den, with_imag);
    if (rank(m) == n) return m;
  }
  throw std::runtime_error("random_invertible: no invertible sample found");
}

Subspace random_subspace(Rng& rng, int m, int n) {
  int count = rng.range(0, m * n);
  std::vector<Mat> gens;
  gens.reserve(count);
  for (int t = 0; t < count; ++t) gens.push_back(random_mat(rng, m, n));
  return Subspace::span(m, n, gens);
}

ElementaryOperator random_elemop(Rng& rng, int max_terms, int max_side, bool with_imag) {
  int terms = rng.range(1, max_terms);
  int p = rng.range(1, max_side);
  int r = rng.range(1, max_side);
  std::vector<Mat> left, right;
  for (int l = 0; l < terms; ++l) {
    left.push_back(random_mat(rng, p, p, 3, 2, with_imag));
    right.push_back(random_mat(rng, r, r, 3, 2, with_imag));
  }
  return ElementaryOperator(std::move(left), std::move(right));
}

JordanSpec random_jordan_spec(Rng& rng, int n, const std::vector<Scalar>& pool) {
  if (n < 1 || pool.empty()) throw std::invalid_argument("random_jordan_spec: bad arguments");
  JordanSpec spec;
  int remaining = n;
  while (remaining > 0) {
    int size = rng.range(1, remaining);
    spec.blocks.push_back({pool[rng.below(static_cast<int>(pool.size()))], size});
    remaining -= size;
  }
  return spec;
}

}  // namespace refdefect
