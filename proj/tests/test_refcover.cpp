#include <doctest.h>

#include "refdefect/random_gen.hpp"
#include "refdefect/refcover.hpp"

using namespace refdefect;

namespace {

Subspace toeplitz_algebra(int n) {
  std::vector<Mat> gens;
  for (int t = 0; t < n; ++t) gens.push_back(mat_pow(jordan_block(Scalar(0), n), t));
  return Subspace::span(n, n, gens);
}

}  // namespace

TEST_CASE("shifted Toeplitz spaces and their low-rank spans") {
  ShiftedToeplitz square{3, 3, PadSide::left};
  CHECK(square.subspace() == toeplitz_algebra(3));
  CHECK(square.low_rank_span(1).dim() == 1);
  // Only the extreme corner diagonal has rank <= 1.
  Mat corner(3, 3);
  corner.at(0, 2) = Scalar(1);
  CHECK(square.low_rank_span(1).contains(corner));

  ShiftedToeplitz wide{2, 5, PadSide::left};
  CHECK(wide.rows() == 2);
  CHECK(wide.cols() == 5);
  CHECK(wide.subspace().dim() == 2);
  CHECK(wide.low_rank_span(7).dim() == 2);  // k >= d: the whole space

  ShiftedToeplitz tall{3, 4, PadSide::bottom};
  CHECK(tall.rows() == 4);
  CHECK(tall.cols() == 3);
  CHECK(tall.low_rank_span(2).dim() == 2);

  // Rank profile: the generator with first nonzero diagonal at offset j has
  // rank d - j, so every element of low_rank_span(k) really has rank <= k.
  Subspace tall_low = tall.low_rank_span(2);
  for (const Mat& b : tall_low.basis()) CHECK(rank(b) <= 2);
  ShiftedToeplitz wide34{3, 4, PadSide::left};
  Subspace wide_low = wide34.low_rank_span(2);
  CHECK(wide_low.dim() == 2);
  for (const Mat& b : wide_low.basis()) CHECK(rank(b) <= 2);
}

TEST_CASE("adjoint kernel shapes match the kernels they predict") {
  for (int p = 1; p <= 4; ++p)
    for (int r = 1; r <= 4; ++r) {
      ShiftedToeplitz st = adjoint_kernel_shape(p, r);
      CHECK(st.rows() == r);
      CHECK(st.cols() == p);
      ElementaryOperator adjoint =
          make_derivation(jordan_block(Scalar(1), r), jordan_block(Scalar(1), p));
      CHECK(adjoint.kernel_subspace() == st.subspace());
    }
}

TEST_CASE("inner derivation covers reproduce the n^2 - k profile") {
  for (int n = 3; n <= 5; ++n) {
    JordanSpec s = JordanSpec::single(Scalar(0), n);
    for (int k = 1; k < n; ++k) {
      CoverResult cover = ref_k_exact_derivation(s, s, k);
      CHECK(cover.image.dim() == n * n - n);
      CHECK(cover.refk.dim() == n * n - k);
      CHECK(cover.refk.contains(cover.image));
    }
    CoverResult at_n = ref_k_exact_derivation(s, s, n);
    CHECK(at_n.refk == at_n.image);
  }
}

TEST_CASE("rectangular single-block derivation with equal eigenvalues") {
  JordanSpec a = JordanSpec::single(Scalar(5), 3), b = JordanSpec::single(Scalar(5), 2);
  CoverResult cover = ref_k_exact_derivation(a, b, 1);
  CHECK(cover.image.dim() == 4);  // d(D-1) with d=2, D=3
  CHECK(cover.refk.dim() == 5);   // dD - k
  CHECK(cover.refk.dim() - cover.image.dim() == 1);
}

TEST_CASE("multi-block derivation assembles blockwise") {
  JordanSpec a{{{Scalar(0), 2}, {Scalar(1), 3}}};
  JordanSpec b = JordanSpec::single(Scalar(0), 5);
  DefectReport rep = rd_k_exact(OperatorFamily::derivation, a, b, 1);
  CHECK(rep.rd_exact == 1);
  CHECK(rep.rd_formula == 1);
  CHECK(rep.agree);
}

TEST_CASE("mult family: nilpotent-nilpotent blocks are surjective") {
  JordanSpec z = JordanSpec::single(Scalar(0), 2);
  for (int k = 1; k <= 2; ++k) {
    CoverResult cover = ref_k_exact_mult(z, z, k);
    CHECK(cover.image == Subspace::full(2, 2));
    CHECK(cover.refk == cover.image);
  }
}

TEST_CASE("mult family resonance lambda*mu == 1") {
  JordanSpec a = JordanSpec::single(Scalar(2), 3);
  JordanSpec b = JordanSpec::single(parse_scalar("1/2"), 3);
  for (int k = 1; k <= 3; ++k) {
    DefectReport rep = rd_k_exact(OperatorFamily::mult, a, b, k);
    CHECK(rep.rd_exact == (k < 3 ? 3 - k : 0));
    CHECK(rep.agree);
  }

  JordanSpec c = JordanSpec::single(parse_scalar("1/3"), 3);
  DefectReport off = rd_k_exact(OperatorFamily::mult, a, c, 1);
  CHECK(off.rd_exact == 0);
  CHECK(off.dim_image == 9);
  CHECK(off.agree);

  DefectReport gauss = rd_k_exact(OperatorFamily::mult, JordanSpec::single(Scalar::i(), 2),
                                  JordanSpec::single(-Scalar::i(), 2), 1);
  CHECK(gauss.rd_exact == 1);
  CHECK(gauss.agree);
}

TEST_CASE("mult family with mixed blocks") {
  JordanSpec a{{{Scalar(2), 2}, {Scalar(0), 1}}};
  JordanSpec b{{{parse_scalar("1/2"), 2}, {Scalar(2), 1}}};
  for (int k = 1; k <= 2; ++k) {
    DefectReport rep = rd_k_exact(OperatorFamily::mult, a, b, k, false, 300, 99);
    CHECK(rep.agree);
    CHECK(rep.rd_exact == (k == 1 ? 1 : 0));
  }
}

TEST_CASE("primal superset basics") {
  Subspace full2 = Subspace::full(2, 2);
  CHECK(ref_k_primal_superset(full2, 1, 5, 1) == full2);

  Rng rng(55);
  Subspace s = random_subspace(rng, 2, 3);
  // k >= column count: a full coordinate tuple forces exact membership.
  CHECK(ref_k_primal_superset(s, 3, 10, 1) == s);
  CHECK(ref_k_primal_superset(s, 5, 10, 1) == s);
}

TEST_CASE("primal superset descends to the exact cover for the inner derivation") {
  JordanSpec s = JordanSpec::single(Scalar(0), 3);
  CoverResult cover = ref_k_exact_derivation(s, s, 1);
  Subspace primal = ref_k_primal_superset(cover.image, 1, 200, 42);
  CHECK(primal.dim() == 8);  // n^2 - k
  CHECK(primal == cover.refk);
  CHECK(primal.contains(cover.refk));
}

TEST_CASE("report fields and the with_primal path") {
  DefectReport rep = rd_k_exact(OperatorFamily::derivation, JordanSpec::single(Scalar(0), 4),
                                JordanSpec::single(Scalar(0), 4), 2, true, 300, 7);
  CHECK(rep.rd_formula == 2);
  CHECK(rep.rd_exact == 2);
  CHECK(rep.agree);
  CHECK(rep.dim_image == 12);
  CHECK(rep.dim_refk_exact == 14);
  REQUIRE(rep.primal_dim.has_value());
  CHECK(*rep.primal_dim >= rep.dim_refk_exact);

  DefectReport bij = rd_k_exact(OperatorFamily::derivation, JordanSpec::single(Scalar(1), 2),
                                JordanSpec::single(Scalar(0), 2), 1);
  CHECK(bij.rd_exact == 0);
  CHECK(bij.dim_image == 4);
  CHECK(bij.agree);
}

TEST_CASE("evaluate_case shares work across k values") {
  JordanSpec s = JordanSpec::single(Scalar(0), 5);
  std::vector<DefectReport> reps =
      evaluate_case(OperatorFamily::derivation, s, s, {1, 2, 3, 4, 5});
  REQUIRE(reps.size() == 5);
  for (size_t i = 0; i < reps.size(); ++i) {
    CHECK(reps[i].rd_exact == (i + 1 < 5 ? 4 - static_cast<int>(i) : 0));
    CHECK(reps[i].agree);
  }
}

TEST_CASE("cover dimensions are antitone in k") {
  Rng rng(61);
  std::vector<Scalar> pool{Scalar(0), Scalar(1)};
  for (int t = 0; t < 5; ++t) {
    int n = rng.range(2, 4);
    JordanSpec a = random_jordan_spec(rng, n, pool);
    JordanSpec b = random_jordan_spec(rng, n, pool);
    int prev = -1;
    for (int k = 1; k <= n; ++k) {
      int dim = ref_k_exact_derivation(a, b, k).refk.dim();
      if (prev >= 0) CHECK(dim <= prev);
      prev = dim;
    }
  }
}
