#include "refdefect/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "refdefect/random_gen.hpp"
#include "refdefect/refcover.hpp"
#include "refdefect/sweep.hpp"

namespace refdefect {

namespace {

constexpr size_t kMaxDumps = 5;

struct Check {
  SuiteResult result;

  explicit Check(std::string name) { result.name = std::move(name); }

  void expect(bool ok, const std::function<std::string()>& dump) {
    ++result.total;
    if (ok) {
      ++result.passed;
    } else if (result.failures.size() < kMaxDumps) {
      result.failures.push_back(dump());
    }
  }

  void expect(bool ok, const std::string& dump) {
    expect(ok, [&]() { return dump; });
  }
};

SuiteResult suite_rref(std::uint64_t seed) {
  Check c("rref");
  Rng rng(derive_seed(seed, "rref"));
  for (int t = 0; t < 200; ++t) {
    Mat m = random_mat(rng, rng.range(1, 6), rng.range(1, 6));
    Rref r = rref(m);
    c.expect(rref(r.m).m == r.m, [&]() { return "rref not idempotent on " + to_string(m); });
    c.expect(r.rank == rank(m.transpose()),
             [&]() { return "rank(M) != rank(M^T) for " + to_string(m); });
  }
  return c.result;
}

SuiteResult suite_kron_vec(std::uint64_t seed) {
  Check c("kron-vec");
  Rng rng(derive_seed(seed, "kron-vec"));
  for (int t = 0; t < 100; ++t) {
    int m = rng.range(1, 3), p = rng.range(1, 3), q = rng.range(1, 3), n = rng.range(1, 3);
    Mat a = random_mat(rng, m, p), x = random_mat(rng, p, q), b = random_mat(rng, q, n);
    c.expect(vec(a * x * b) == kron(b.transpose(), a) * vec(x),
             "vec(ATB) != kron(B^T, A) vec(T)");
  }
  for (int t = 0; t < 100; ++t) {
    int a1 = rng.range(1, 3), a2 = rng.range(1, 3), a3 = rng.range(1, 3);
    int b1 = rng.range(1, 3), b2 = rng.range(1, 3), b3 = rng.range(1, 3);
    Mat a = random_mat(rng, a1, a2), cmat = random_mat(rng, a2, a3);
    Mat b = random_mat(rng, b1, b2), d = random_mat(rng, b2, b3);
    c.expect(kron(a, b) * kron(cmat, d) == kron(a * cmat, b * d),
             "(A(x)B)(C(x)D) != (AC)(x)(BD)");
  }
  return c.result;
}

SuiteResult suite_subspace_algebra(std::uint64_t seed) {
  Check c("subspace-algebra");
  Rng rng(derive_seed(seed, "subspace-algebra"));
  for (int t = 0; t < 1000; ++t) {
    int m = rng.range(1, 4), n = rng.range(1, 4);
    Subspace s = random_subspace(rng, m, n);
    Subspace ann = s.annihilator();
    c.expect(ann.annihilator() == s && s.dim() + ann.dim() == m * n, [&]() {
      std::ostringstream os;
      os << "annihilator involution/dimension failed (m=" << m << ", n=" << n
         << ", dim=" << s.dim() << ", iteration " << t << ")";
      return os.str();
    });
    Subspace s2 = random_subspace(rng, m, n);
    c.expect(s.dim() + s2.dim() == s.sum(s2).dim() + s.intersect(s2).dim(), [&]() {
      std::ostringstream os;
      os << "dim(S)+dim(T) != dim(S+T)+dim(S^T) (m=" << m << ", n=" << n << ", iteration " << t
         << ")";
      return os.str();
    });
  }
  return c.result;
}

SuiteResult suite_conjugation(std::uint64_t seed) {
  Check c("conjugation");
  Rng rng(derive_seed(seed, "conjugation"));
  for (int t = 0; t < 100; ++t) {
    int m = rng.range(1, 4), n = rng.range(1, 4);
    Subspace s = random_subspace(rng, m, n);
    Mat a = random_invertible(rng, m), b = random_invertible(rng, n);
    Subspace lhs = s.transform(a, b).annihilator();
    Subspace rhs = s.annihilator().transform(inverse(b).value(), inverse(a).value());
    c.expect(lhs == rhs, [&]() {
      std::ostringstream os;
      os << "(A S B)_perp != B^-1 S_perp A^-1 (m=" << m << ", n=" << n << ", iteration " << t
         << ")";
      return os.str();
    });
  }
  return c.result;
}

SuiteResult suite_block_roundtrip(std::uint64_t seed) {
  Check c("block-roundtrip");
  Rng rng(derive_seed(seed, "block-roundtrip"));
  for (int t = 0; t < 100; ++t) {
    std::vector<int> row_sizes, col_sizes;
    for (int i = rng.range(1, 3); i > 0; --i) row_sizes.push_back(rng.range(1, 3));
    for (int j = rng.range(1, 3); j > 0; --j) col_sizes.push_back(rng.range(1, 3));
    SubspaceGrid grid;
    for (int rs : row_sizes) {
      std::vector<Subspace> row;
      for (int cs : col_sizes) row.push_back(random_subspace(rng, rs, cs));
      grid.push_back(std::move(row));
    }
    Subspace composed = block_compose(grid, row_sizes, col_sizes);
    BlockDecomposition dec = block_decompose(composed, row_sizes, col_sizes);
    bool same = dec.ok;
    int expected_dim = 0;
    for (size_t i = 0; i < grid.size() && same; ++i)
      for (size_t j = 0; j < grid[i].size(); ++j) {
        expected_dim += grid[i][j].dim();
        if (!(dec.blocks[i][j] == grid[i][j])) same = false;
      }
    c.expect(same && composed.dim() == expected_dim,
             [&]() { return "block compose/decompose round trip failed at iteration " +
                            std::to_string(t); });
  }
  return c.result;
}

SuiteResult suite_adjoint_kernel(std::uint64_t seed) {
  Check c("adjoint-kernel");
  Rng rng(derive_seed(seed, "adjoint-kernel"));
  for (int t = 0; t < 100; ++t) {
    ElementaryOperator op = random_elemop(rng);
    c.expect(op.image_subspace().annihilator() == op.adjoint().kernel_subspace(), [&]() {
      std::ostringstream os;
      os << "(im)_perp != ker(adjoint) for random operator (p=" << op.domain_rows()
         << ", r=" << op.domain_cols() << ", terms=" << op.term_count() << ", iteration " << t
         << ")";
      return os.str();
    });
  }
  return c.result;
}

SuiteResult suite_elemop_dims(std::uint64_t seed) {
  Check c("elemop-dims");
  Rng rng(derive_seed(seed, "elemop-dims"));
  for (int t = 0; t < 100; ++t) {
    ElementaryOperator op = random_elemop(rng);
    int pr = op.domain_rows() * op.domain_cols();
    c.expect(rank(op.matricize()) + op.kernel_subspace().dim() == pr,
             "rank(matricize) + dim(kernel) != p*r");
  }
  // Derivations with equal-eigenvalue Jordan coefficients: the image has
  // dimension d(D-1) with d = min(p,r), D = max(p,r).
  for (int p = 1; p <= 5; ++p) {
    for (int r = 1; r <= 5; ++r) {
      for (const Scalar& lam : {Scalar(0), Scalar(1)}) {
        ElementaryOperator op = make_derivation(jordan_block(lam, p), jordan_block(lam, r));
        int d = std::min(p, r), dmax = std::max(p, r);
        c.expect(op.image_subspace().dim() == d * (dmax - 1), [&]() {
          std::ostringstream os;
          os << "derivation image dim != d(D-1) at p=" << p << ", r=" << r
             << ", eig=" << to_string(lam);
          return os.str();
        });
      }
    }
  }
  return c.result;
}

SuiteResult suite_segre(std::uint64_t seed) {
  Check c("segre");
  Rng rng(derive_seed(seed, "segre"));
  std::vector<Scalar> pool{Scalar(0), Scalar(1), Scalar(2), Scalar::i()};
  for (int t = 0; t < 100; ++t) {
    JordanSpec spec = random_jordan_spec(rng, rng.range(1, 7), pool);
    Mat m = build(spec);
    std::map<Scalar, std::vector<int>, ScalarLess> expected;
    for (const JordanBlock& b : spec.blocks) expected[b.eig].push_back(b.size);
    bool ok = true;
    for (auto& [eig, sizes] : expected) {
      std::sort(sizes.begin(), sizes.end(), std::greater<int>());
      if (segre(m, eig) != sizes) ok = false;
    }
    if (segre(m, Scalar(7)) != std::vector<int>{}) ok = false;  // 7 is not in the pool
    c.expect(ok, [&]() { return "segre failed to recover " + spec.label(); });
  }
  // Inversion preserves the block structure, with eigenvalues inverted.
  std::vector<Scalar> invertible_pool{Scalar(1), Scalar(2), parse_scalar("1/2"), Scalar(3),
                                      Scalar::i(), -Scalar::i()};
  for (const Scalar& eig : invertible_pool) {
    for (int size = 1; size <= 5; ++size) {
      Mat inv = inverse(build(JordanSpec::single(eig, size))).value();
      c.expect(segre(inv, eig.inverse()) == std::vector<int>{size}, [&]() {
        return "segre of inverted J_" + std::to_string(size) + "(" + to_string(eig) +
               ") != [size]";
      });
    }
  }
  for (int t = 0; t < 20; ++t) {
    JordanSpec spec = random_jordan_spec(rng, rng.range(1, 5), invertible_pool);
    Mat m = build(spec);
    Mat inv = inverse(m).value();
    bool ok = true;
    for (const JordanBlock& b : spec.blocks) {
      if (segre(inv, b.eig.inverse()) != segre(m, b.eig)) ok = false;
    }
    c.expect(ok, [&]() { return "inversion changed the segre data of " + spec.label(); });
  }
  return c.result;
}

SuiteResult suite_similarity(std::uint64_t seed) {
  Check c("similarity");
  Rng rng(derive_seed(seed, "similarity"));
  std::vector<Scalar> pool{Scalar(0), Scalar(1), Scalar::i()};
  for (int t = 0; t < 50; ++t) {
    int n = rng.range(1, 5);
    JordanSpec spec = random_jordan_spec(rng, n, pool);
    Mat j = build(spec);
    Mat p = random_invertible(rng, n);
    Mat m = p * j * inverse(p).value();
    SimilarityResult res = find_similarity(m, j, rng.next());
    bool ok = res.ok();
    if (ok) {
      const Mat& x = *res.x;
      ok = (m * x == x * j) && rank(x) == n &&
           inverse(x).value() * m * x == j;
    }
    c.expect(ok, [&]() { return "similarity search failed for " + spec.label(); });
  }
  return c.result;
}

SuiteResult suite_formulas(std::uint64_t seed) {
  (void)seed;  // exhaustive, no randomness
  Check c("formulas");
  std::vector<Scalar> pool{Scalar(0), Scalar(1)};
  std::vector<JordanSpec> specs;
  for (int n = 1; n <= 5; ++n) {
    std::vector<JordanSpec> more = enumerate_jordan_specs(n, pool);
    specs.insert(specs.end(), more.begin(), more.end());
  }
  for (const JordanSpec& a : specs) {
    for (const JordanSpec& b : specs) {
      int prev = -1;
      int threshold = 0;
      for (const JordanBlock& pa : a.blocks)
        for (const JordanBlock& pb : b.blocks)
          if (pa.eig == pb.eig) threshold = std::max(threshold, std::min(pa.size, pb.size));
      for (int k = 1; k <= 6; ++k) {
        int rd = rd_k_formula(OperatorFamily::derivation, a, b, k);
        c.expect(is_k_reflexive_image(a, b, k) == (rd == 0), [&]() {
          return "criterion/formula mismatch at " + a.label() + " vs " + b.label() +
                 ", k=" + std::to_string(k);
        });
        c.expect(prev < 0 || rd <= prev, [&]() {
          return "formula not monotone at " + a.label() + " vs " + b.label() +
                 ", k=" + std::to_string(k);
        });
        c.expect(rd == rd_k_formula(OperatorFamily::derivation, b, a, k), [&]() {
          return "formula not symmetric at " + a.label() + " vs " + b.label() +
                 ", k=" + std::to_string(k);
        });
        c.expect((k >= threshold) == (rd == 0), [&]() {
          return "formula does not vanish exactly from k=" + std::to_string(threshold) + " at " +
                 a.label() + " vs " + b.label();
        });
        prev = rd;
      }
    }
  }
  return c.result;
}

SuiteResult suite_block_additivity(std::uint64_t seed) {
  Check c("block-additivity");
  Rng rng(derive_seed(seed, "block-additivity"));
  std::vector<Scalar> pool{Scalar(0), Scalar(1), Scalar(2)};
  for (int t = 0; t < 40; ++t) {
    int n = rng.range(2, 5);
    JordanSpec a = random_jordan_spec(rng, n, pool);
    JordanSpec b = random_jordan_spec(rng, n, pool);
    for (int k = 1; k <= 4; ++k) {
      DefectReport full = rd_k_exact(OperatorFamily::derivation, a, b, k);
      int block_sum = 0;
      for (const JordanBlock& pa : a.blocks)
        for (const JordanBlock& pb : b.blocks)
          block_sum += rd_k_exact(OperatorFamily::derivation, JordanSpec::single(pa.eig, pa.size),
                                  JordanSpec::single(pb.eig, pb.size), k)
                           .rd_exact;
      c.expect(full.rd_exact == block_sum && full.rd_exact == full.rd_formula, [&]() {
        std::ostringstream os;
        os << "additivity failed: full=" << full.rd_exact << ", block sum=" << block_sum
           << ", formula=" << full.rd_formula << " at " << a.label() << " vs " << b.label()
           << ", k=" << k;
        return os.str();
      });
    }
  }
  return c.result;
}

SuiteResult suite_inner_derivation(std::uint64_t seed) {
  (void)seed;
  Check c("inner-derivation");
  for (int n = 3; n <= 7; ++n) {
    Mat nilp = jordan_block(Scalar(0), n);
    ElementaryOperator delta = make_derivation(nilp, nilp);
    std::vector<Mat> toeplitz_gens;
    for (int t = 0; t < n; ++t) toeplitz_gens.push_back(mat_pow(nilp, t));
    Subspace toeplitz = Subspace::span(n, n, toeplitz_gens);
    c.expect(delta.image_subspace().annihilator() == toeplitz,
             "(im delta)_perp is not the upper triangular Toeplitz algebra at n=" +
                 std::to_string(n));
    JordanSpec spec = JordanSpec::single(Scalar(0), n);
    for (int k = 1; k <= n; ++k) {
      CoverResult cover = ref_k_exact_derivation(spec, spec, k);
      int rd = cover.refk.dim() - cover.image.dim();
      bool ok = k < n ? (rd == n - k && cover.refk.dim() == n * n - k) : rd == 0;
      c.expect(ok, [&]() {
        std::ostringstream os;
        os << "inner derivation profile failed at n=" << n << ", k=" << k << " (rd=" << rd
           << ", dim refk=" << cover.refk.dim() << ")";
        return os.str();
      });
    }
  }
  return c.result;
}

SuiteResult suite_sandwich(std::uint64_t seed) {
  Check c("sandwich");
  int converged = 0, comparisons = 0;
  std::vector<std::pair<Scalar, Scalar>> eig_pairs{{Scalar(0), Scalar(0)},
                                                   {Scalar(1), Scalar(1)},
                                                   {Scalar(0), Scalar(1)}};
  for (int p = 1; p <= 4; ++p) {
    for (int r = 1; r <= 4; ++r) {
      for (const auto& [lam, mu] : eig_pairs) {
        JordanSpec a = JordanSpec::single(lam, p), b = JordanSpec::single(mu, r);
        for (int k = 1; k <= std::min(p, r); ++k) {
          CoverResult cover = ref_k_exact_derivation(a, b, k);
          std::uint64_t s = derive_seed(seed, "sandwich:" + a.label() + ":" + b.label() +
                                                  ":k=" + std::to_string(k));
          Subspace primal = ref_k_primal_superset(cover.image, k, 300, s);
          bool hard = cover.refk.contains(cover.image) && primal.contains(cover.refk);
          c.expect(hard, [&]() {
            return "sandwich containment failed at " + a.label() + " vs " + b.label() +
                   ", k=" + std::to_string(k);
          });
          ++comparisons;
          if (primal.dim() == cover.refk.dim()) ++converged;
        }
      }
    }
  }
  std::ostringstream note;
  note << "primal superset matched the exact cover in " << converged << "/" << comparisons
       << " cases (upper bound only; equality is empirical)";
  c.result.note = note.str();
  return c.result;
}

SuiteResult suite_invariance(std::uint64_t seed) {
  Check c("invariance");
  Rng rng(derive_seed(seed, "invariance"));
  std::vector<Scalar> pool{Scalar(0), Scalar(1)};
  for (int t = 0; t < 30; ++t) {
    int n = rng.range(2, 4);
    JordanSpec a = random_jordan_spec(rng, n, pool);
    JordanSpec b = random_jordan_spec(rng, n, pool);
    int k = rng.range(1, 3);
    CoverResult cover = ref_k_exact_derivation(a, b, k);
    Mat p = random_invertible(rng, n), q = random_invertible(rng, n);
    Mat p_inv = inverse(p).value(), q_inv = inverse(q).value();
    Subspace s_conj = cover.image.transform(p, q);
    // Annihilators transport contravariantly under S |-> P S Q.
    bool ann_ok =
        s_conj.annihilator() == cover.image.annihilator().transform(q_inv, p_inv);
    // The low-rank span is the cover's annihilator; transporting it and
    // annihilating again must land on the transported cover.
    Subspace low_conj = cover.refk.annihilator().transform(q_inv, p_inv);
    bool cover_ok = low_conj.annihilator() == cover.refk.transform(p, q);
    c.expect(ann_ok && cover_ok, [&]() {
      return "conjugation invariance failed at " + a.label() + " vs " + b.label() +
             ", k=" + std::to_string(k);
    });
  }
  return c.result;
}

SuiteResult suite_antitone(std::uint64_t seed) {
  Check c("antitone");
  Rng rng(derive_seed(seed, "antitone"));
  std::vector<Scalar> pool{Scalar(0), Scalar(1)};
  for (int t = 0; t < 20; ++t) {
    int n = rng.range(2, 5);
    JordanSpec a = random_jordan_spec(rng, n, pool);
    JordanSpec b = random_jordan_spec(rng, n, pool);
    int threshold = 1;
    for (const JordanBlock& pa : a.blocks)
      for (const JordanBlock& pb : b.blocks)
        if (pa.eig == pb.eig) threshold = std::max(threshold, std::min(pa.size, pb.size));
    int prev = -1;
    bool ok = true;
    for (int k = 1; k <= threshold + 1; ++k) {
      CoverResult cover = ref_k_exact_derivation(a, b, k);
      int dim = cover.refk.dim();
      if (prev >= 0 && dim > prev) ok = false;
      if (k >= threshold && dim != cover.image.dim()) ok = false;
      prev = dim;
    }
    c.expect(ok, [&]() {
      return "cover dimension chain not antitone for " + a.label() + " vs " + b.label();
    });
  }
  return c.result;
}

using SuiteFn = SuiteResult (*)(std::uint64_t);

const std::vector<std::pair<std::string, SuiteFn>>& suite_table() {
  static const std::vector<std::pair<std::string, SuiteFn>> table{
      {"rref", suite_rref},
      {"kron-vec", suite_kron_vec},
      {"subspace-algebra", suite_subspace_algebra},
      {"conjugation", suite_conjugation},
      {"block-roundtrip", suite_block_roundtrip},
      {"adjoint-kernel", suite_adjoint_kernel},
      {"elemop-dims", suite_elemop_dims},
      {"segre", suite_segre},
      {"similarity", suite_similarity},
      {"formulas", suite_formulas},
      {"block-additivity", suite_block_additivity},
      {"inner-derivation", suite_inner_derivation},
      {"sandwich", suite_sandwich},
      {"invariance", suite_invariance},
      {"antitone", suite_antitone},
  };
  return table;
}

}  // namespace

std::vector<std::string> verify_suite_names() {
  std::vector<std::string> names;
  for (const auto& [name, fn] : suite_table()) {
    (void)fn;
    names.push_back(name);
  }
  return names;
}

SuiteResult run_verify_suite(const std::string& name, std::uint64_t seed) {
  for (const auto& [n, fn] : suite_table()) {
    if (n == name) return fn(seed);
  }
  throw std::invalid_argument("unknown verify suite: \"" + name + "\"");
}

std::vector<SuiteResult> run_verify(std::uint64_t seed) {
  std::vector<SuiteResult> results;
  for (const auto& [name, fn] : suite_table()) {
    (void)name;
    results.push_back(fn(seed));
  }
  return results;
}

}  // namespace refdefect
