#include <doctest.h>

#include <algorithm>
#include <map>

#include "refdefect/jordan.hpp"
#include "refdefect/random_gen.hpp"

using namespace refdefect;

TEST_CASE("build assembles block-diagonal Jordan matrices") {
  Mat j2 = build(JordanSpec::single(Scalar(0), 2));
  Mat expect(2, 2);
  expect.at(0, 1) = Scalar(1);
  CHECK(j2 == expect);

  Scalar lam = parse_scalar("1/2"), mu = Scalar::i();
  Mat diag = build(JordanSpec{{{lam, 1}, {mu, 1}}});
  CHECK(diag.at(0, 0) == lam);
  CHECK(diag.at(1, 1) == mu);
  CHECK(diag.at(0, 1) == Scalar(0));

  Mat m = build(JordanSpec{{{Scalar(1), 2}, {Scalar(0), 1}}});
  CHECK(m.rows() == 3);
  CHECK(m.at(0, 0) == Scalar(1));
  CHECK(m.at(0, 1) == Scalar(1));
  CHECK(m.at(1, 1) == Scalar(1));
  CHECK(m.at(1, 2) == Scalar(0));
  CHECK(m.at(2, 2) == Scalar(0));
}

TEST_CASE("segre recovers block sizes from rank sequences") {
  CHECK(segre(build(JordanSpec{{{Scalar(0), 3}, {Scalar(0), 1}}}), Scalar(0)) ==
        std::vector<int>{3, 1});
  CHECK(segre(Mat::identity(3), Scalar(0)).empty());
  CHECK(segre(build(JordanSpec{{{Scalar(0), 2}, {Scalar(1), 3}}}), Scalar(1)) ==
        std::vector<int>{3});

  Mat inv = inverse(build(JordanSpec::single(Scalar(5), 3))).value();
  CHECK(segre(inv, parse_scalar("1/5")) == std::vector<int>{3});
}

TEST_CASE("segre recovers the block data of seeded random builds") {
  Rng rng(101);
  std::vector<Scalar> pool{Scalar(0), Scalar(1), Scalar::i()};
  for (int t = 0; t < 30; ++t) {
    JordanSpec spec = random_jordan_spec(rng, rng.range(1, 7), pool);
    Mat m = build(spec);
    std::map<Scalar, std::vector<int>, ScalarLess> by_eig;
    for (const JordanBlock& b : spec.blocks) by_eig[b.eig].push_back(b.size);
    for (auto& [eig, sizes] : by_eig) {
      std::sort(sizes.begin(), sizes.end(), std::greater<int>());
      CHECK(segre(m, eig) == sizes);
    }
  }
}

TEST_CASE("find_similarity returns verified witnesses") {
  SimilarityResult res = find_similarity(Mat::identity(2), Mat::identity(2));
  REQUIRE(res.ok());
  CHECK(rank(*res.x) == 2);

  Mat n2 = build(JordanSpec::single(Scalar(0), 2));
  res = find_similarity(n2.transpose(), n2);
  REQUIRE(res.ok());
  CHECK(n2.transpose() * *res.x == *res.x * n2);
  CHECK(rank(*res.x) == 2);

  Mat m = inverse(build(JordanSpec::single(Scalar(2), 3))).value();
  Mat j = build(JordanSpec::single(parse_scalar("1/2"), 3));
  res = find_similarity(m, j, 7);
  REQUIRE(res.ok());
  CHECK(m * *res.x == *res.x * j);
  CHECK(rank(*res.x) == 3);
  CHECK(inverse(*res.x).value() * m * *res.x == j);
}

TEST_CASE("find_similarity distinguishes failure modes") {
  // I and 2I: the Sylvester solution space is {0}.
  CHECK(find_similarity(Mat::identity(2), Scalar(2) * Mat::identity(2)).status ==
        SimilarityStatus::not_similar);
  // J_2(0) vs the zero matrix: nonzero solutions exist but none is invertible.
  Mat n2 = build(JordanSpec::single(Scalar(0), 2));
  CHECK(find_similarity(n2, Mat::zero(2, 2)).status == SimilarityStatus::budget_exhausted);
  CHECK_THROWS_AS(find_similarity(Mat::identity(2), Mat::identity(3)), std::invalid_argument);
}

TEST_CASE("gcd root multiplicities") {
  JordanSpec a{{{Scalar(1), 3}, {Scalar(1), 2}}};
  JordanSpec b{{{Scalar(1), 2}}};
  auto m = gcd_root_multiplicities(a, b);
  REQUIRE(m.size() == 1);
  CHECK(m.at(Scalar(1)) == 2);

  CHECK(gcd_root_multiplicities(JordanSpec::single(Scalar(0), 2), JordanSpec::single(Scalar(1), 2))
            .empty());

  JordanSpec c = JordanSpec::single(Scalar::i(), 4);
  auto mc = gcd_root_multiplicities(c, c);
  REQUIRE(mc.size() == 1);
  CHECK(mc.at(Scalar::i()) == 4);
}

TEST_CASE("canonical block order and labels") {
  JordanSpec s{{{Scalar(1), 1}, {Scalar(0), 2}, {Scalar(1), 3}}};
  JordanSpec c = s.canonical();
  CHECK(c.blocks[0].eig == Scalar(0));
  CHECK(c.blocks[1] == JordanBlock{Scalar(1), 3});
  CHECK(c.blocks[2] == JordanBlock{Scalar(1), 1});
  CHECK(c.label() == "J2(0)+J3(1)+J1(1)");
  CHECK(s.dim() == 6);
}
