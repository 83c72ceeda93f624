#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qso/simplex.hpp"

using qso::IndexSet;
using qso::SimplexPointd;

TEST_CASE("construction clamps tiny negatives and renormalizes") {
  const SimplexPointd x{0.5, 0.5 + 5e-10, -5e-13};
  CHECK(x[2] == 0.0);
  CHECK(std::abs(x.coords().sum() - 1.0) <= 1e-15);
  CHECK(x[0] == doctest::Approx(0.5).epsilon(1e-9));
}

TEST_CASE("construction rejects bad vectors") {
  CHECK_THROWS_AS(SimplexPointd({0.6, 0.5, -0.1}), qso::SimplexError);
  CHECK_THROWS_AS(SimplexPointd({0.5, 0.5, -2e-12}), qso::SimplexError);
  CHECK_THROWS_AS(SimplexPointd({0.5, 0.5, 1e-8}), qso::SimplexError);
  CHECK_THROWS_AS(SimplexPointd({0.5, NAN, 0.5}), qso::SimplexError);
  CHECK_THROWS_AS(SimplexPointd(Eigen::VectorXd(0)), qso::SimplexError);
}

TEST_CASE("vertices") {
  CHECK(qso::vertex(0, 3) == SimplexPointd{1.0, 0.0, 0.0});
  CHECK(qso::vertex(2, 3) == SimplexPointd{0.0, 0.0, 1.0});
  CHECK_THROWS_AS(qso::vertex(3, 3), std::out_of_range);
  CHECK_THROWS_AS(qso::vertex(-1, 3), std::out_of_range);
}

TEST_CASE("support") {
  CHECK(qso::support(SimplexPointd{0.5, 0.5, 0.0}) == IndexSet{0, 1});
  CHECK(qso::support(qso::vertex(0, 3)) == IndexSet{0});
  CHECK(qso::support(SimplexPointd{1.0 / 3, 1.0 / 3, 1.0 / 3}) == IndexSet{0, 1, 2});
  CHECK(qso::support(SimplexPointd{1.0 - 1e-13, 1e-13, 0.0}) == IndexSet{0});
}

TEST_CASE("index sets") {
  CHECK(IndexSet{2, 0}.members() == std::vector<int>{0, 2});
  CHECK_THROWS(IndexSet{1, 1});
  CHECK_THROWS(IndexSet{-1});
  CHECK(IndexSet{0, 2}.contains(2));
  CHECK_FALSE(IndexSet{0, 2}.contains(1));
}

TEST_CASE("equivalence and singularity") {
  const SimplexPointd x{0.5, 0.5, 0.0}, y{0.9, 0.1, 0.0};
  CHECK(qso::equivalent(x, y));
  CHECK_FALSE(qso::equivalent(qso::vertex(0, 3), qso::vertex(1, 3)));
  CHECK(qso::equivalent(x, x));
  CHECK(qso::singular(qso::vertex(0, 3), SimplexPointd{0.0, 0.3, 0.7}));
  CHECK_FALSE(qso::singular(x, SimplexPointd{0.0, 0.5, 0.5}));
  CHECK_FALSE(qso::singular(x, x));
  CHECK_THROWS(qso::equivalent(x, SimplexPointd{0.5, 0.5}));
  CHECK_THROWS(qso::singular(x, SimplexPointd{0.5, 0.5}));
}

TEST_CASE("l1 distance") {
  CHECK(qso::l1_distance(qso::vertex(0, 3), qso::vertex(1, 3)) == 2.0);
  const SimplexPointd x{0.2, 0.3, 0.5};
  CHECK(qso::l1_distance(x, x) == 0.0);
  CHECK(qso::l1_distance(SimplexPointd{0.5, 0.5, 0.0}, SimplexPointd{0.25, 0.75, 0.0}) == doctest::Approx(0.5));
  CHECK_THROWS(qso::l1_distance(x, SimplexPointd{0.5, 0.5}));
}

TEST_CASE("sampling is deterministic and valid") {
  const auto s1 = qso::sample(3, 7, 2), s2 = qso::sample(3, 7, 2);
  REQUIRE(s1.size() == 2);
  CHECK(s1 == s2);
  CHECK_FALSE(qso::sample(3, 8, 2) == s1);
  CHECK_THROWS(qso::sample(3, 7, 0));
  CHECK_THROWS(qso::sample(1, 7, 1));

  const auto big = qso::sample(3, 11, 10000);
  Eigen::Vector3d mean = Eigen::Vector3d::Zero();
  for (const auto& p : big) {
    CHECK(p.coords().minCoeff() >= 0.0);
    CHECK(std::abs(p.coords().sum() - 1.0) <= 1e-12);
    mean += p.coords();
  }
  mean /= static_cast<double>(big.size());
  for (int i = 0; i < 3; ++i) CHECK(std::abs(mean[i] - 1.0 / 3) <= 0.02);
}

TEST_CASE("face sampling keeps other coordinates exactly zero") {
  qso::SimplexSampler sampler(3, 5);
  for (int n = 0; n < 200; ++n) {
    const auto x = sampler.next_on_face(IndexSet{1, 2});
    CHECK(x[0] == 0.0);
    CHECK(x[1] > 0.0);
  }
  CHECK_THROWS(sampler.next_on_face(IndexSet{0, 3}));
}

TEST_CASE("relations on sampled sets") {
  auto pts = qso::sample(3, 3, 30);
  pts.push_back(qso::vertex(0, 3));
  pts.push_back(qso::vertex(1, 3));
  pts.push_back(SimplexPointd{0.0, 0.4, 0.6});
  pts.push_back(SimplexPointd{0.2, 0.8, 0.0});
  for (const auto& x : pts)
    for (const auto& y : pts) {
      CHECK(qso::equivalent(x, y) == qso::equivalent(y, x));
      if (qso::singular(x, y)) CHECK_FALSE(qso::equivalent(x, y));
      for (const auto& z : pts) {
        if (qso::equivalent(x, y) && qso::equivalent(y, z)) CHECK(qso::equivalent(x, z));
        CHECK(qso::l1_distance(x, z) <= qso::l1_distance(x, y) + qso::l1_distance(y, z) + 1e-15);
      }
    }
}

TEST_CASE("long double points") {
  const qso::SimplexPoint<long double> x = SimplexPointd{0.25, 0.25, 0.5}.cast<long double>();
  CHECK(x[2] == 0.5L);
  CHECK(qso::support(x) == IndexSet{0, 1, 2});
  CHECK(qso::l1_distance(x, qso::vertex<long double>(2, 3)) == 1.0L);
}
