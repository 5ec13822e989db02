#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "refdefect/elemop.hpp"
#include "refdefect/formulas.hpp"
#include "refdefect/jordan.hpp"

namespace refdefect {

/// Raised when an exact pipeline's structural certificate fails: a kernel
/// that should match the predicted shifted-Toeplitz shape does not, a
/// supposedly bijective block operator is not surjective, or a mapped image
/// disagrees with the directly computed one. Any of these would poison the
/// downstream dimension counts, so the pipeline refuses to continue.
struct StructureError : std::runtime_error {
  explicit StructureError(const std::string& what) : std::runtime_error(what) {}
};

/// Raised when the similarity search behind the mult-family reduction runs
/// out of attempts. Retrying with a different seed is the intended remedy.
struct SimilarityError : std::runtime_error {
  explicit SimilarityError(const std::string& what) : std::runtime_error(what) {}
};

enum class PadSide { left, bottom };

/// The upper triangular Toeplitz algebra T_d padded by a zero block to a
/// d x D (pad-left) or D x d (pad-bottom) rectangle. These are exactly the
/// kernels of the adjoint block derivations with equal eigenvalues, and the
/// one family for which the span of the rank <= k elements has a closed form:
/// an element whose first j diagonals vanish has rank d - j, so for k < d the
/// rank <= k elements form the k-dimensional top-corner Toeplitz span.
struct ShiftedToeplitz {
  int d = 1;
  int D = 1;
  PadSide pad = PadSide::left;

  int rows() const { return pad == PadSide::left ? d : D; }
  int cols() const { return pad == PadSide::left ? D : d; }

  /// The full d-dimensional space as a canonical Subspace.
  Subspace subspace() const;

  /// Exact span of the rank <= k elements: the whole space when k >= d, the
  /// min(k,d)-dimensional corner Toeplitz span when k < d.
  Subspace low_rank_span(int k) const;
};

/// Shape of ker(C |-> J_r(mu) C - C J_p(lam)) in M_{r,p} when lam == mu.
ShiftedToeplitz adjoint_kernel_shape(int p, int r);

struct CoverResult {
  Subspace refk;   // k-reflexive cover of the image
  Subspace image;  // exact image of the assembled operator
};

/// Exact cover of the image of T |-> build(a) T - T build(b) on
/// M_{a.n, b.n}. Per block pair: unequal eigenvalues give the full block
/// (the block operator is bijective, verified by rank); equal eigenvalues
/// give the annihilator of the low-rank span of the adjoint block kernel,
/// whose shifted-Toeplitz shape is verified exactly before use. The cover is
/// assembled blockwise; the image is computed from the matricization of the
/// assembled operator.
CoverResult ref_k_exact_derivation(const JordanSpec& a, const JordanSpec& b, int k);

/// Exact cover of the image of T |-> build(a) T build(b) - T. Non-resonant
/// block pairs (lam*mu != 1) are bijective and give the full block; resonant
/// pairs reduce to the derivation pipeline with coefficients J_p(lam) and
/// J_r(1/mu), with the cover carried back through the inverse similarity and
/// the right multiplication by J_r(mu) (right multiplication by an invertible
/// matrix commutes with taking covers).
CoverResult ref_k_exact_mult(const JordanSpec& a, const JordanSpec& b, int k,
                             std::uint64_t seed = 1);

/// One-sided primal oracle: intersects s + {T : T|_V = 0} over sampled
/// k-dimensional column subspaces V, taking all coordinate subspaces first
/// and then seeded random rational k-tuples. The result always contains the
/// exact cover and shrinks monotonically with budget; it is never claimed
/// exact. Deterministic given the seed.
Subspace ref_k_primal_superset(const Subspace& s, int k, int budget, std::uint64_t seed);

/// One case evaluation: formula vs exact pipeline, with an optional primal
/// upper bound on the cover dimension.
struct DefectReport {
  std::string case_id;
  OperatorFamily family = OperatorFamily::derivation;
  JordanSpec a, b;
  int k = 1;
  int dim_image = 0;
  int dim_refk_exact = 0;
  int rd_formula = 0;
  int rd_exact = 0;
  std::optional<int> primal_dim;
  bool agree = false;  // rd_formula == rd_exact
  double elapsed_ms = 0.0;
};

DefectReport rd_k_exact(OperatorFamily family, const JordanSpec& a, const JordanSpec& b, int k,
                        bool with_primal = false, int budget = 300, std::uint64_t seed = 1,
                        const std::string& case_id = "");

/// Batched variant sharing the k-independent work (block classification,
/// kernels, images) across all requested k values.
std::vector<DefectReport> evaluate_case(OperatorFamily family, const JordanSpec& a,
                                        const JordanSpec& b, const std::vector<int>& ks,
                                        bool with_primal = false, int budget = 300,
                                        std::uint64_t seed = 1, const std::string& case_id = "");

}  // namespace refdefect
