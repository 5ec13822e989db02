#include <doctest.h>

#include "refdefect/elemop.hpp"
#include "refdefect/jordan.hpp"
#include "refdefect/random_gen.hpp"

using namespace refdefect;

namespace {

Mat unit(int rows, int cols, int i, int j) {
  Mat e(rows, cols);
  e.at(i, j) = Scalar(1);
  return e;
}

Subspace toeplitz_algebra(int n) {
  std::vector<Mat> gens;
  for (int t = 0; t < n; ++t) gens.push_back(mat_pow(jordan_block(Scalar(0), n), t));
  return Subspace::span(n, n, gens);
}

}  // namespace

TEST_CASE("apply on frozen examples") {
  ElementaryOperator id({Mat::identity(2)}, {Mat::identity(2)});
  Mat t = unit(2, 2, 0, 1) + Scalar(3) * unit(2, 2, 1, 0);
  CHECK(id.apply(t) == t);

  Mat n2 = jordan_block(Scalar(0), 2);
  ElementaryOperator inner = make_derivation(n2, n2);
  CHECK(inner.apply(unit(2, 2, 1, 0)) == unit(2, 2, 0, 0) - unit(2, 2, 1, 1));

  ElementaryOperator mult = make_mult_minus_id(n2, n2);
  CHECK(mult.apply(unit(2, 2, 1, 0)) == unit(2, 2, 0, 1) - unit(2, 2, 1, 0));

  CHECK_THROWS_AS(inner.apply(Mat::identity(3)), std::invalid_argument);
  CHECK(make_derivation(Mat::identity(2), Mat::identity(2)).apply(t) == Mat::zero(2, 2));
  CHECK(make_mult_minus_id(Mat::identity(2), Mat::identity(2)).apply(t) == Mat::zero(2, 2));
}

TEST_CASE("linearity of apply") {
  Rng rng(3);
  ElementaryOperator op = random_elemop(rng);
  int p = op.domain_rows(), r = op.domain_cols();
  Mat t1 = random_mat(rng, p, r), t2 = random_mat(rng, p, r);
  Scalar alpha = rng.scalar();
  CHECK(op.apply(alpha * t1 + t2) == alpha * op.apply(t1) + op.apply(t2));
}

TEST_CASE("matricize represents apply under vec") {
  ElementaryOperator id({Mat::identity(2)}, {Mat::identity(3)});
  CHECK(id.matricize() == Mat::identity(6));

  Rng rng(7);
  Mat a = random_mat(rng, 2, 2), b = random_mat(rng, 3, 3);
  ElementaryOperator two_sided({a}, {b});
  CHECK(two_sided.matricize() == kron(b.transpose(), a));

  ElementaryOperator der = make_derivation(a, b);
  CHECK(der.matricize() ==
        kron(Mat::identity(3), a) - kron(b.transpose(), Mat::identity(2)));
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 3; ++j) {
      Mat e = unit(2, 3, i, j);
      CHECK(der.matricize() * vec(e) == vec(der.apply(e)));
    }
}

TEST_CASE("kernel of the inner derivation at a nilpotent Jordan block is Toeplitz") {
  for (int n = 2; n <= 4; ++n) {
    Mat nn = jordan_block(Scalar(0), n);
    ElementaryOperator delta = make_derivation(nn, nn);
    CHECK(delta.kernel_subspace() == toeplitz_algebra(n));
    CHECK(delta.kernel_subspace().dim() + delta.image_subspace().dim() == n * n);
  }
}

TEST_CASE("derivations with distinct eigenvalues are bijective") {
  ElementaryOperator op = make_derivation(jordan_block(Scalar(1), 2), jordan_block(Scalar(0), 2));
  CHECK(rank(op.matricize()) == 4);
  CHECK(op.kernel_subspace().dim() == 0);
  CHECK(op.image_subspace() == Subspace::full(2, 2));
}

TEST_CASE("T -> ATB - T with nilpotent Jordan coefficients is surjective") {
  Mat n2 = jordan_block(Scalar(0), 2);
  CHECK(make_mult_minus_id(n2, n2).image_subspace() == Subspace::full(2, 2));
}

TEST_CASE("adjoint swaps the coefficient lists") {
  Mat e11 = unit(2, 2, 0, 0);
  ElementaryOperator op({e11}, {e11});
  Subspace lhs = op.image_subspace().annihilator();
  Subspace rhs = op.adjoint().kernel_subspace();
  CHECK(lhs.dim() == 3);
  CHECK(lhs == rhs);

  Rng rng(13);
  ElementaryOperator r = random_elemop(rng);
  ElementaryOperator back = r.adjoint().adjoint();
  CHECK(back.left_coeffs() == r.left_coeffs());
  CHECK(back.right_coeffs() == r.right_coeffs());

  // A derivation's adjoint is the swapped derivation on the transposed shape.
  ElementaryOperator der = make_derivation(jordan_block(Scalar(0), 3), jordan_block(Scalar(0), 2));
  ElementaryOperator adj = der.adjoint();
  CHECK(adj.domain_rows() == 2);
  CHECK(adj.domain_cols() == 3);
  ElementaryOperator swapped = make_derivation(jordan_block(Scalar(0), 2), jordan_block(Scalar(0), 3));
  Mat t(2, 3);
  t.at(0, 2) = Scalar(1);
  t.at(1, 0) = Scalar(5);
  CHECK(adj.apply(t) == -swapped.apply(t));
  CHECK(adj.kernel_subspace() == swapped.kernel_subspace());
}

TEST_CASE("the image annihilator equals the adjoint kernel on random operators") {
  Rng rng(41);
  for (int t = 0; t < 30; ++t) {
    ElementaryOperator op = random_elemop(rng);
    CHECK(op.image_subspace().annihilator() == op.adjoint().kernel_subspace());
  }
}

TEST_CASE("derivation image dimension for equal-eigenvalue Jordan coefficients") {
  for (int p = 1; p <= 4; ++p)
    for (int r = 1; r <= 4; ++r) {
      ElementaryOperator op =
          make_derivation(jordan_block(Scalar(2), p), jordan_block(Scalar(2), r));
      int d = std::min(p, r), dmax = std::max(p, r);
      CHECK(op.image_subspace().dim() == d * (dmax - 1));
    }
}

TEST_CASE("coefficient list validation") {
  CHECK_THROWS_AS(ElementaryOperator({}, {}), std::invalid_argument);
  CHECK_THROWS_AS(ElementaryOperator({Mat::identity(2)}, {Mat::identity(2), Mat::identity(2)}),
                  std::invalid_argument);
  CHECK_THROWS_AS(ElementaryOperator({Mat::zero(2, 3)}, {Mat::identity(2)}),
                  std::invalid_argument);
}
