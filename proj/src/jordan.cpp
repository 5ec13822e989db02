#include "refdefect/jordan.hpp"

#include <algorithm>
#include <stdexcept>

#include "refdefect/rng.hpp"

namespace refdefect {

int JordanSpec::dim() const {
  int n = 0;
  for (const JordanBlock& b : blocks) n += b.size;
  return n;
}

JordanSpec JordanSpec::canonical() const {
  JordanSpec out = *this;
  std::sort(out.blocks.begin(), out.blocks.end(), [](const JordanBlock& a, const JordanBlock& b) {
    int c = a.eig.compare(b.eig);
    if (c != 0) return c < 0;
    return a.size > b.size;
  });
  return out;
}

std::string JordanSpec::label() const {
  std::string out;
  for (size_t i = 0; i < blocks.size(); ++i) {
    if (i) out += "+";
    out += "J" + std::to_string(blocks[i].size) + "(" + to_string(blocks[i].eig) + ")";
  }
  return out.empty() ? "(empty)" : out;
}

Mat jordan_block(const Scalar& eig, int size) {
  if (size < 1) throw std::invalid_argument("jordan_block: size must be positive");
  Mat j(size, size);
  for (int i = 0; i < size; ++i) {
    j.at(i, i) = eig;
    if (i + 1 < size) j.at(i, i + 1) = Scalar(1);
  }
  return j;
}

Mat build(const JordanSpec& spec) {
  int n = spec.dim();
  if (n == 0) throw std::invalid_argument("build: empty Jordan spec");
  Mat m(n, n);
  int off = 0;
  for (const JordanBlock& b : spec.blocks) {
    m.set_block(off, off, jordan_block(b.eig, b.size));
    off += b.size;
  }
  return m;
}

std::vector<int> segre(const Mat& m, const Scalar& eig) {
  if (m.rows() != m.cols()) throw std::invalid_argument("segre: matrix is not square");
  int n = m.rows();
  Mat shifted = m;
  for (int i = 0; i < n; ++i) shifted.at(i, i) -= eig;

  // ranks[j] = rank((m - eig I)^j); blocks of size >= j number ranks[j-1] - ranks[j].
  std::vector<int> ranks{n};
  Mat power = shifted;
  for (int j = 1; j <= n; ++j) {
    int rk = rank(power);
    ranks.push_back(rk);
    if (rk == ranks[j - 1]) break;  // no further drops
    power = power * shifted;
  }

  int levels = static_cast<int>(ranks.size()) - 1;
  auto count_geq = [&](int j) { return j <= levels ? ranks[j - 1] - ranks[j] : 0; };
  std::vector<int> sizes;
  for (int size = levels; size >= 1; --size) {
    int count = count_geq(size) - count_geq(size + 1);
    for (int c = 0; c < count; ++c) sizes.push_back(size);
  }
  return sizes;
}

SimilarityResult find_similarity(const Mat& m, const Mat& j, std::uint64_t seed, int budget) {
  if (m.rows() != m.cols() || j.rows() != j.cols() || m.rows() != j.rows())
    throw std::invalid_argument("find_similarity: matrices must be square of equal size");
  int n = m.rows();
  // M X - X J = 0  <=>  (I (x) M - J^T (x) I) vec(X) = 0.
  Mat sys = kron(Mat::identity(n), m) - kron(j.transpose(), Mat::identity(n));
  std::vector<Mat> ker = kernel_basis(sys);
  if (ker.empty()) return {SimilarityStatus::not_similar, std::nullopt};

  std::vector<Mat> sols;
  sols.reserve(ker.size());
  for (const Mat& v : ker) sols.push_back(unvec(v, n, n));

  int attempts = 0;
  for (const Mat& x : sols) {
    if (attempts >= budget) break;
    ++attempts;
    if (rank(x) == n) return {SimilarityStatus::found, x};
  }
  Rng rng(seed);
  while (attempts < budget) {
    ++attempts;
    Mat x(n, n);
    for (const Mat& s : sols) {
      int c = rng.range(-3, 3);
      if (c != 0) x += Scalar(c) * s;
    }
    if (!x.is_zero() && rank(x) == n) return {SimilarityStatus::found, x};
  }
  return {SimilarityStatus::budget_exhausted, std::nullopt};
}

std::map<Scalar, int, ScalarLess> gcd_root_multiplicities(const JordanSpec& a,
                                                          const JordanSpec& b) {
  std::map<Scalar, int, ScalarLess> max_a, max_b;
  for (const JordanBlock& blk : a.blocks) {
    int& m = max_a[blk.eig];
    m = std::max(m, blk.size);
  }
  for (const JordanBlock& blk : b.blocks) {
    int& m = max_b[blk.eig];
    m = std::max(m, blk.size);
  }
  std::map<Scalar, int, ScalarLess> out;
  for (const auto& [eig, ma] : max_a) {
    auto it = max_b.find(eig);
    if (it != max_b.end()) out[eig] = std::min(ma, it->second);
  }
  return out;
}

}  // namespace refdefect
