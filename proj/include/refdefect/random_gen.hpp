#pragma once

#include "refdefect/elemop.hpp"
#include "refdefect/jordan.hpp"
#include "refdefect/rng.hpp"
#include "refdefect/subspace.hpp"

namespace refdefect {

// Seeded generators shared by the verification suites and the test binaries.

Mat random_mat(Rng& rng, int rows, int cols, int max_num = 3, int max_den = 2,
               bool with_imag = true);

/// Invertible matrix with small entries; retries until the rank is full.
Mat random_invertible(Rng& rng, int n, int max_num = 3, int max_den = 2, bool with_imag = true);

/// Random subspace of M_{m,n}: the span of a uniformly chosen number of
/// random matrices (dimension 0..m*n, concentrated near the middle).
Subspace random_subspace(Rng& rng, int m, int n);

ElementaryOperator random_elemop(Rng& rng, int max_terms = 3, int max_side = 4,
                                 bool with_imag = true);

/// Random Jordan spec of total size n with eigenvalues drawn from the pool.
JordanSpec random_jordan_spec(Rng& rng, int n, const std::vector<Scalar>& pool);

}  // namespace refdefect
