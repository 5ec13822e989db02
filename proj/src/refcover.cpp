#include "refdefect/refcover.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>
#include <utility>

#include "refdefect/rng.hpp"

namespace refdefect {

namespace {

// Basis element: the t-th shift power of T_d embedded into the padded
// rectangle. pad-left puts the Toeplitz block in the last d columns,
// pad-bottom in the first d rows.
Mat shifted_toeplitz_gen(const ShiftedToeplitz& st, int t) {
  Mat m(st.rows(), st.cols());
  int col_off = st.pad == PadSide::left ? st.D - st.d : 0;
  for (int q = 0; q + t < st.d; ++q) m.at(q, col_off + q + t) = Scalar(1);
  return m;
}

}  // namespace

Subspace ShiftedToeplitz::subspace() const { return low_rank_span(d); }

Subspace ShiftedToeplitz::low_rank_span(int k) const {
  if (k < 1) throw std::invalid_argument("low_rank_span: k must be >= 1");
  int keep = std::min(k, d);
  std::vector<Mat> gens;
  gens.reserve(keep);
  for (int t = d - keep; t < d; ++t) gens.push_back(shifted_toeplitz_gen(*this, t));
  return Subspace::span(rows(), cols(), gens);
}

ShiftedToeplitz adjoint_kernel_shape(int p, int r) {
  ShiftedToeplitz st;
  st.d = std::min(p, r);
  st.D = std::max(p, r);
  st.pad = r <= p ? PadSide::left : PadSide::bottom;
  return st;
}

namespace {

struct BlockPlan {
  int p = 1, r = 1;
  Scalar lam, mu;
  bool full_cover = false;              // non-resonant: cover is all of M_{p,r}
  ShiftedToeplitz st;                   // resonant: adjoint kernel shape
  std::optional<Mat> map_right;         // mult resonant: carries covers back
  std::optional<Subspace> image;        // exact image of the block operator
};

struct CasePlan {
  std::vector<int> row_sizes, col_sizes;
  std::vector<std::vector<BlockPlan>> blocks;
  std::optional<Subspace> image;  // exact image of the assembled operator
};

// Resonant derivation block: verify that the kernel of the adjoint block
// operator (computed from the matricization, with no structural assumption)
// equals the predicted shifted-Toeplitz space. A mismatch would invalidate
// the closed-form low-rank span, so it is a hard error.
void check_adjoint_kernel(const ElementaryOperator& block_op, const ShiftedToeplitz& st,
                          const std::string& what) {
  Subspace kernel = block_op.adjoint().kernel_subspace();
  if (kernel != st.subspace()) {
    std::ostringstream os;
    os << "adjoint kernel of " << what << " does not match the shifted-Toeplitz shape (d=" << st.d
       << ", D=" << st.D << ", " << (st.pad == PadSide::left ? "pad-left" : "pad-bottom")
       << "); got dimension " << kernel.dim();
    throw StructureError(os.str());
  }
}

BlockPlan plan_derivation_block(const JordanBlock& ba, const JordanBlock& bb) {
  BlockPlan plan;
  plan.p = ba.size;
  plan.r = bb.size;
  plan.lam = ba.eig;
  plan.mu = bb.eig;
  ElementaryOperator op = make_derivation(jordan_block(plan.lam, plan.p),
                                          jordan_block(plan.mu, plan.r));
  plan.image = op.image_subspace();
  if (plan.lam != plan.mu) {
    if (plan.image->dim() != plan.p * plan.r)
      throw StructureError("derivation block with distinct eigenvalues is not bijective");
    plan.full_cover = true;
    return plan;
  }
  plan.st = adjoint_kernel_shape(plan.p, plan.r);
  check_adjoint_kernel(op, plan.st, "derivation block");
  return plan;
}

BlockPlan plan_mult_block(const JordanBlock& ba, const JordanBlock& bb, std::uint64_t seed,
                          const std::string& tag) {
  BlockPlan plan;
  plan.p = ba.size;
  plan.r = bb.size;
  plan.lam = ba.eig;
  plan.mu = bb.eig;
  Mat jr_mu = jordan_block(plan.mu, plan.r);
  ElementaryOperator op = make_mult_minus_id(jordan_block(plan.lam, plan.p), jr_mu);
  plan.image = op.image_subspace();

  bool resonant = !plan.lam.is_zero() && !plan.mu.is_zero() && plan.lam * plan.mu == Scalar(1);
  if (!resonant) {
    if (plan.image->dim() != plan.p * plan.r)
      throw StructureError("non-resonant mult block is not surjective");
    plan.full_cover = true;
    return plan;
  }

  // Resonant: T |-> J_p(lam) T J_r(mu) - T factors as Gamma(T X) X^{-1} J_r(mu)
  // where Gamma(S) = J_p(lam) S - S J_r(1/mu) and X conjugates J_r(mu)^{-1}
  // into Jordan form. lam == 1/mu, so Gamma is a resonant derivation block.
  Scalar inv_mu = plan.mu.inverse();
  ElementaryOperator gamma = make_derivation(jordan_block(plan.lam, plan.p),
                                             jordan_block(inv_mu, plan.r));
  plan.st = adjoint_kernel_shape(plan.p, plan.r);
  check_adjoint_kernel(gamma, plan.st, "reduced derivation block");

  std::optional<Mat> jr_mu_inv = inverse(jr_mu);
  if (!jr_mu_inv) throw StructureError("resonant mult block has a singular Jordan coefficient");
  SimilarityResult sim{SimilarityStatus::budget_exhausted, std::nullopt};
  for (int retry = 0; retry < 3 && !sim.ok(); ++retry) {
    sim = find_similarity(*jr_mu_inv, jordan_block(inv_mu, plan.r),
                          derive_seed(seed, tag + "#" + std::to_string(retry)));
    if (sim.status == SimilarityStatus::not_similar)
      throw StructureError("inverted Jordan block is not similar to its predicted Jordan form");
  }
  if (!sim.ok())
    throw SimilarityError("similarity search budget exhausted for a resonant mult block (" + tag +
                          "); retry with a different seed");
  Mat w = inverse(*sim.x).value() * jr_mu;
  // Consistency certificate: mapping the reduced image back must reproduce
  // the directly computed block image.
  if (gamma.image_subspace().right_mul(w) != *plan.image)
    throw StructureError("mapped image of the reduced derivation disagrees with the block image");
  plan.map_right = std::move(w);
  return plan;
}

CasePlan plan_case(OperatorFamily family, const JordanSpec& a, const JordanSpec& b,
                   std::uint64_t seed) {
  if (a.blocks.empty() || b.blocks.empty())
    throw std::invalid_argument("plan_case: empty Jordan spec");
  CasePlan plan;
  for (const JordanBlock& blk : a.blocks) plan.row_sizes.push_back(blk.size);
  for (const JordanBlock& blk : b.blocks) plan.col_sizes.push_back(blk.size);
  for (size_t i = 0; i < a.blocks.size(); ++i) {
    std::vector<BlockPlan> row;
    for (size_t j = 0; j < b.blocks.size(); ++j) {
      std::string tag = "block" + std::to_string(i) + "," + std::to_string(j);
      row.push_back(family == OperatorFamily::derivation
                        ? plan_derivation_block(a.blocks[i], b.blocks[j])
                        : plan_mult_block(a.blocks[i], b.blocks[j], seed, tag));
    }
    plan.blocks.push_back(std::move(row));
  }
  if (a.blocks.size() == 1 && b.blocks.size() == 1) {
    plan.image = plan.blocks[0][0].image;  // single block: the assembled operator is the block
  } else {
    Mat ma = build(a), mb = build(b);
    ElementaryOperator full = family == OperatorFamily::derivation ? make_derivation(ma, mb)
                                                                   : make_mult_minus_id(ma, mb);
    plan.image = full.image_subspace();
  }
  return plan;
}

Subspace cover_for(const BlockPlan& plan, int k) {
  if (plan.full_cover) return Subspace::full(plan.p, plan.r);
  Subspace cover = plan.st.low_rank_span(k).annihilator();
  if (plan.map_right) cover = cover.right_mul(*plan.map_right);
  return cover;
}

CoverResult assemble_cover(const CasePlan& plan, int k) {
  SubspaceGrid grid;
  for (const auto& row : plan.blocks) {
    std::vector<Subspace> grow;
    for (const BlockPlan& bp : row) grow.push_back(cover_for(bp, k));
    grid.push_back(std::move(grow));
  }
  Subspace refk = block_compose(grid, plan.row_sizes, plan.col_sizes);
  if (!refk.contains(*plan.image))
    throw StructureError("assembled cover does not contain the operator image");
  return CoverResult{std::move(refk), *plan.image};
}

}  // namespace

CoverResult ref_k_exact_derivation(const JordanSpec& a, const JordanSpec& b, int k) {
  if (k < 1) throw std::invalid_argument("ref_k_exact_derivation: k must be >= 1");
  return assemble_cover(plan_case(OperatorFamily::derivation, a, b, 0), k);
}

CoverResult ref_k_exact_mult(const JordanSpec& a, const JordanSpec& b, int k,
                             std::uint64_t seed) {
  if (k < 1) throw std::invalid_argument("ref_k_exact_mult: k must be >= 1");
  return assemble_cover(plan_case(OperatorFamily::mult, a, b, seed), k);
}

namespace {

// {T : T v = 0 for every sampled v}, as a subspace of M_{m,n}.
Subspace vanishing_on(const std::vector<Mat>& vs, int m, int n) {
  Mat constraints(static_cast<int>(vs.size()) * m, m * n);
  for (size_t t = 0; t < vs.size(); ++t) {
    const Mat& v = vs[t];
    for (int q = 0; q < m; ++q)
      for (int j = 0; j < n; ++j)
        constraints.at(static_cast<int>(t) * m + q, j * m + q) = v.at(j, 0);
  }
  std::vector<Mat> gens;
  for (const Mat& z : kernel_basis(constraints)) gens.push_back(unvec(z, m, n));
  return Subspace::span(m, n, gens);
}

}  // namespace

Subspace ref_k_primal_superset(const Subspace& s, int k, int budget, std::uint64_t seed) {
  if (k < 1) throw std::invalid_argument("ref_k_primal_superset: k must be >= 1");
  if (budget < 1) throw std::invalid_argument("ref_k_primal_superset: budget must be >= 1");
  int m = s.ambient_rows(), n = s.ambient_cols();
  // k >= n: a full-basis tuple already forces exact agreement everywhere.
  if (k >= n) return s;

  Subspace current = Subspace::full(m, n);
  int used = 0;
  auto cut = [&](const std::vector<Mat>& vs) {
    current = current.intersect(s.sum(vanishing_on(vs, m, n)));
    ++used;
  };

  // All coordinate k-subsets of the column space first, lexicographically.
  std::vector<int> combo(k);
  for (int i = 0; i < k; ++i) combo[i] = i;
  while (used < budget) {
    std::vector<Mat> vs;
    for (int c : combo) {
      Mat e(n, 1);
      e.at(c, 0) = Scalar(1);
      vs.push_back(std::move(e));
    }
    cut(vs);
    if (current.dim() == s.dim()) return current;  // cannot descend below s
    int pos = k - 1;
    while (pos >= 0 && combo[pos] == n - k + pos) --pos;
    if (pos < 0) break;
    ++combo[pos];
    for (int i = pos + 1; i < k; ++i) combo[i] = combo[i - 1] + 1;
  }

  // Then seeded random rational k-tuples: small heights keep the arithmetic
  // fast while giving generic position with high probability.
  Rng rng(seed);
  while (used < budget && current.dim() > s.dim()) {
    std::vector<Mat> vs;
    for (int t = 0; t < k; ++t) {
      Mat v(n, 1);
      for (int q = 0; q < n; ++q) v.at(q, 0) = Scalar(rng.rational(9, 4));
      vs.push_back(std::move(v));
    }
    cut(vs);
  }
  return current;
}

std::vector<DefectReport> evaluate_case(OperatorFamily family, const JordanSpec& a,
                                        const JordanSpec& b, const std::vector<int>& ks,
                                        bool with_primal, int budget, std::uint64_t seed,
                                        const std::string& case_id) {
  using clock = std::chrono::steady_clock;
  std::string id = case_id.empty()
                       ? std::string(family_name(family)) + ":" + a.label() + ":" + b.label()
                       : case_id;
  CasePlan plan = plan_case(family, a, b, derive_seed(seed, id));
  std::vector<DefectReport> reports;
  reports.reserve(ks.size());
  for (int k : ks) {
    auto t0 = clock::now();
    DefectReport rep;
    rep.case_id = id;
    rep.family = family;
    rep.a = a;
    rep.b = b;
    rep.k = k;
    CoverResult cover = assemble_cover(plan, k);
    rep.dim_image = cover.image.dim();
    rep.dim_refk_exact = cover.refk.dim();
    rep.rd_exact = rep.dim_refk_exact - rep.dim_image;
    rep.rd_formula = rd_k_formula(family, a, b, k);
    rep.agree = rep.rd_formula == rep.rd_exact;
    if (with_primal) {
      Subspace primal = ref_k_primal_superset(
          cover.image, k, budget, derive_seed(seed, id + ":k=" + std::to_string(k)));
      if (!primal.contains(cover.refk))
        throw StructureError("primal superset fails to contain the exact cover");
      rep.primal_dim = primal.dim();
    }
    rep.elapsed_ms =
        std::chrono::duration_cast<std::chrono::duration<double, std::milli>>(clock::now() - t0)
            .count();
    reports.push_back(std::move(rep));
  }
  return reports;
}

DefectReport rd_k_exact(OperatorFamily family, const JordanSpec& a, const JordanSpec& b, int k,
                        bool with_primal, int budget, std::uint64_t seed,
                        const std::string& case_id) {
  return evaluate_case(family, a, b, {k}, with_primal, budget, seed, case_id).front();
}

}  // namespace refdefect
