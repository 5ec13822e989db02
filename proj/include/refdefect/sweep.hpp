#pragma once

#include <iosfwd>

#include "refdefect/io.hpp"

namespace refdefect {

/// All Jordan specs of total size n with eigenvalues from the pool, one
/// representative per equivalence class under block reordering, in a
/// deterministic canonical order (sorted by label).
std::vector<JordanSpec> enumerate_jordan_specs(int n, const std::vector<Scalar>& pool);

struct SweepSummary {
  int case_count = 0;
  int row_count = 0;
  int mismatch_count = 0;
  int max_defect = 0;
  double elapsed_s = 0.0;
};

struct SweepResult {
  std::vector<DefectReport> rows;  // canonical order: (n, family, spec_a, spec_b, k)
  SweepSummary summary;
};

/// Enumerates all spec pairs (both orders) for each n <= n_max and every
/// k <= k_max, evaluating formula vs exact pipeline per row. Cases run in
/// parallel up to config.jobs; the row order is canonical regardless of
/// completion order, and all per-case randomness derives from (seed, case id).
SweepResult run_sweep(const SweepConfig& config);

/// Fixed columns: case_id,family,n,spec_a,spec_b,k,dim_image,dim_refk,
/// rd_formula,rd_exact,primal_dim,agree,elapsed_ms. Byte-identical for equal
/// (config, seed) apart from the elapsed_ms column.
void write_csv(std::ostream& os, const std::vector<DefectReport>& rows);

void write_markdown(std::ostream& os, const SweepConfig& config, const SweepResult& result);

}  // namespace refdefect
