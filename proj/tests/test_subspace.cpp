#include <doctest.h>

#include "refdefect/random_gen.hpp"
#include "refdefect/subspace.hpp"

using namespace refdefect;

namespace {

Mat unit(int rows, int cols, int i, int j) {
  Mat e(rows, cols);
  e.at(i, j) = Scalar(1);
  return e;
}

Mat nilpotent(int n) {
  Mat m(n, n);
  for (int i = 0; i + 1 < n; ++i) m.at(i, i + 1) = Scalar(1);
  return m;
}

Subspace toeplitz_algebra(int n) {
  std::vector<Mat> gens;
  for (int t = 0; t < n; ++t) gens.push_back(mat_pow(nilpotent(n), t));
  return Subspace::span(n, n, gens);
}

}  // namespace

TEST_CASE("span removes duplicates and dependencies") {
  Mat e11 = unit(2, 2, 0, 0);
  CHECK(Subspace::span(2, 2, {e11, Scalar(2) * e11}).dim() == 1);
  CHECK(Subspace::span(2, 2, {}).dim() == 0);
  CHECK_THROWS_AS(Subspace::span({}), std::invalid_argument);
  CHECK_THROWS_AS(Subspace::span(2, 2, {unit(1, 2, 0, 0)}), std::invalid_argument);
}

TEST_CASE("the upper triangular Toeplitz algebra is span{I, N}") {
  Subspace t2 = Subspace::span(2, 2, {Mat::identity(2), nilpotent(2)});
  CHECK(t2.dim() == 2);
  // Canonical basis: pivot-ordered RREF of the vectorized generators.
  CHECK(t2 == toeplitz_algebra(2));
  REQUIRE(t2.basis().size() == 2);
  CHECK(t2.basis()[0] == Mat::identity(2));
  CHECK(t2.basis()[1] == nilpotent(2));
}

TEST_CASE("lattice operations") {
  Subspace a = Subspace::span(2, 2, {unit(2, 2, 0, 0)});
  Subspace b = Subspace::span(2, 2, {unit(2, 2, 1, 1)});
  CHECK(a.sum(b).dim() == 2);
  Subspace t2 = toeplitz_algebra(2);
  Subspace e12 = Subspace::span(2, 2, {unit(2, 2, 0, 1)});
  CHECK(t2.intersect(e12) == e12);
  CHECK(!toeplitz_algebra(3).contains(unit(3, 3, 1, 0)));
  CHECK_THROWS_AS(a.sum(Subspace::zero(3, 3)), std::invalid_argument);
  CHECK_THROWS_AS(a.contains(unit(3, 3, 0, 0)), std::invalid_argument);
}

TEST_CASE("annihilator of span{I} is the trace-zero space") {
  Subspace ann = Subspace::span(2, 2, {Mat::identity(2)}).annihilator();
  CHECK(ann.dim() == 3);
  CHECK(ann.contains(unit(2, 2, 0, 1)));
  CHECK(ann.contains(unit(2, 2, 1, 0)));
  CHECK(ann.contains(unit(2, 2, 0, 0) - unit(2, 2, 1, 1)));
  CHECK(!ann.contains(Mat::identity(2)));
}

TEST_CASE("annihilator of span{E11} kills the (1,1) entry") {
  Subspace ann = Subspace::span(2, 2, {unit(2, 2, 0, 0)}).annihilator();
  CHECK(ann.dim() == 3);
  CHECK(ann.contains(unit(2, 2, 0, 1)));
  CHECK(ann.contains(unit(2, 2, 1, 0)));
  CHECK(ann.contains(unit(2, 2, 1, 1)));
  CHECK(!ann.contains(unit(2, 2, 0, 0)));
}

TEST_CASE("annihilator of the full matrix space is zero") {
  for (int n = 1; n <= 3; ++n) {
    CHECK(Subspace::full(n, n).annihilator() == Subspace::zero(n, n));
    CHECK(Subspace::zero(n, n).annihilator() == Subspace::full(n, n));
  }
}

TEST_CASE("rectangular annihilators swap the ambient shape") {
  Rng rng(23);
  Subspace s = random_subspace(rng, 2, 3);
  Subspace ann = s.annihilator();
  CHECK(ann.ambient_rows() == 3);
  CHECK(ann.ambient_cols() == 2);
  CHECK(s.dim() + ann.dim() == 6);
  CHECK(ann.annihilator() == s);
}

TEST_CASE("annihilator involution and dimension formulas hold on random data") {
  Rng rng(29);
  for (int t = 0; t < 120; ++t) {
    int m = rng.range(1, 4), n = rng.range(1, 4);
    Subspace s = random_subspace(rng, m, n);
    Subspace ann = s.annihilator();
    CHECK(s.dim() + ann.dim() == m * n);
    CHECK(ann.annihilator() == s);
    Subspace s2 = random_subspace(rng, m, n);
    CHECK(s.dim() + s2.dim() == s.sum(s2).dim() + s.intersect(s2).dim());
  }
}

TEST_CASE("annihilators transport contravariantly under S -> ASB") {
  Rng rng(31);
  for (int t = 0; t < 40; ++t) {
    int m = rng.range(1, 3), n = rng.range(1, 3);
    Subspace s = random_subspace(rng, m, n);
    Mat a = random_invertible(rng, m), b = random_invertible(rng, n);
    CHECK(s.transform(a, b).annihilator() ==
          s.annihilator().transform(inverse(b).value(), inverse(a).value()));
  }
}

TEST_CASE("block compose and decompose") {
  Subspace t2 = toeplitz_algebra(2);
  SubspaceGrid grid{{t2, Subspace::zero(2, 2)}, {Subspace::zero(2, 2), t2}};
  Subspace composed = block_compose(grid, {2, 2}, {2, 2});
  CHECK(composed.dim() == 4);
  BlockDecomposition dec = block_decompose(composed, {2, 2}, {2, 2});
  REQUIRE(dec.ok);
  CHECK(dec.blocks[0][0] == t2);
  CHECK(dec.blocks[1][1] == t2);
  CHECK(dec.blocks[0][1].dim() == 0);

  SubspaceGrid single{{t2}};
  CHECK(block_compose(single, {2}, {2}) == t2);
}

TEST_CASE("block decompose rejects non-decomposable spaces") {
  Subspace diag = Subspace::span(2, 2, {Mat::identity(2)});
  BlockDecomposition dec = block_decompose(diag, {1, 1}, {1, 1});
  CHECK(!dec.ok);
  CHECK(!dec.diagnostic.empty());
  // Corner compressions overshoot: they span E11 and E22 separately.
  CHECK(block_compose(dec.blocks, {1, 1}, {1, 1}).dim() == 2);
  CHECK_THROWS_AS(block_decompose(diag, {1, 2}, {1, 1}), std::invalid_argument);
}

TEST_CASE("block compose then decompose is the identity on random grids") {
  Rng rng(37);
  for (int t = 0; t < 25; ++t) {
    std::vector<int> rs, cs;
    for (int i = rng.range(1, 3); i > 0; --i) rs.push_back(rng.range(1, 2));
    for (int j = rng.range(1, 3); j > 0; --j) cs.push_back(rng.range(1, 2));
    SubspaceGrid grid;
    int total = 0;
    for (int r : rs) {
      std::vector<Subspace> row;
      for (int c : cs) {
        row.push_back(random_subspace(rng, r, c));
        total += row.back().dim();
      }
      grid.push_back(std::move(row));
    }
    Subspace composed = block_compose(grid, rs, cs);
    CHECK(composed.dim() == total);
    BlockDecomposition dec = block_decompose(composed, rs, cs);
    REQUIRE(dec.ok);
    for (size_t i = 0; i < grid.size(); ++i)
      for (size_t j = 0; j < grid[i].size(); ++j) CHECK(dec.blocks[i][j] == grid[i][j]);
  }
}
