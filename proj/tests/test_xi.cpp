#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "printed_polynomials.hpp"
#include "qso/catalog.hpp"
#include "qso/conjugacy.hpp"
#include "qso/partition.hpp"

#include <set>

using qso::HeredityTensord;
using qso::IndexPair;
using qso::Permutation;

namespace {

const std::vector<double> kGridA{0.0, 0.25, 0.5, 0.75, 1.0};

Permutation cyc(std::vector<std::vector<int>> c) { return Permutation::from_cycles(3, c); }

std::set<std::set<int>> member_sets(const std::vector<qso::ConjugacyClass>& classes) {
  std::set<std::set<int>> out;
  for (const auto& c : classes) out.emplace(c.members.begin(), c.members.end());
  return out;
}

}  // namespace

TEST_CASE("standard partitions") {
  const auto xi = qso::standard_partitions();
  REQUIRE(xi.size() == 5);
  CHECK(xi[0].size() == 3);
  CHECK(xi[1].size() == 2);
  CHECK(xi[2].size() == 2);
  CHECK(xi[3].size() == 2);
  CHECK(xi[4].size() == 1);
  CHECK(xi[1].to_string() == "{{(2,3)}, {(1,2),(1,3)}}");
  CHECK(xi[4].to_string() == "{{(1,2),(1,3),(2,3)}}");
  for (const auto& p : xi) {
    std::set<IndexPair> all;
    for (const auto& b : p.blocks()) all.insert(b.begin(), b.end());
    CHECK(all == std::set<IndexPair>{{0, 1}, {0, 2}, {1, 2}});
  }
}

TEST_CASE("partition validation") {
  CHECK_THROWS(qso::CoupledIndexPartition(3, {{{0, 1}}, {{0, 2}}}));
  CHECK_THROWS(qso::CoupledIndexPartition(3, {{{0, 1}, {0, 2}}, {{0, 2}, {1, 2}}}));
  CHECK_THROWS(qso::CoupledIndexPartition(3, {{{1, 0}}, {{0, 2}}, {{1, 2}}}));
  CHECK_THROWS(qso::CoupledIndexPartition(3, {}));
}

TEST_CASE("partition stabilizers") {
  const auto xi = qso::standard_partitions();
  CHECK(qso::partition_stabilizer(xi[1]) == std::vector<Permutation>{Permutation::identity(3), cyc({{2, 3}})});
  CHECK(qso::partition_stabilizer(xi[0]).size() == 6);
  CHECK(qso::partition_stabilizer(xi[4]).size() == 6);
}

TEST_CASE("build_operator matches the case tables") {
  CHECK(qso::OperatorSpec{3, 1, 0.3}.id() == 13);
  CHECK(qso::OperatorSpec{5, 1, 0.3}.id() == 25);
  CHECK(qso::OperatorSpec{1, 2, 0.3}.id() == 2);
  const auto spec = qso::OperatorSpec::from_id(28, 0.4);
  CHECK(spec.case_one == 5);
  CHECK(spec.case_two == 4);
  CHECK_THROWS(qso::OperatorSpec::from_id(37, 0.3));
  CHECK_THROWS(qso::OperatorSpec::from_id(1, 1.5));
  CHECK_THROWS(qso::build_operator({7, 1, 0.3}));

  const HeredityTensord v13 = qso::catalog_operator(13, 0.3);
  CHECK(v13.row(0, 1) == Eigen::Vector3d(0.3, 0.0, 0.7));
  CHECK(v13.row(0, 2) == Eigen::Vector3d(0.3, 0.0, 0.7));
  CHECK(v13.row(1, 2) == Eigen::Vector3d(0.0, 1.0, 0.0));
}

TEST_CASE("catalog expands to the printed polynomials coefficient-exactly") {
  for (double a : kGridA)
    for (int id = 1; id <= qso::kCatalogSize; ++id) {
      const HeredityTensord t = qso::catalog_operator(id, a);
      CHECK(qso::validate(t).ok());
      for (int k = 0; k < 3; ++k) {
        INFO("V_" << id << " output " << k + 1 << " a=" << a);
        CHECK(t.slice(k) == printed::quadratic_form(printed::kFormulas[id - 1][k], a));
      }
    }
}

TEST_CASE("apply agrees with the printed formulas") {
  const auto pts = qso::sample(3, 23, 50);
  for (double a : kGridA)
    for (int id = 1; id <= qso::kCatalogSize; ++id) {
      const HeredityTensord t = qso::catalog_operator(id, a);
      for (const auto& x : pts) {
        const Eigen::VectorXd y = qso::evaluate(t, x.coords());
        for (int k = 0; k < 3; ++k)
          CHECK(std::abs(y[k] - printed::evaluate(printed::kFormulas[id - 1][k], a, x.coords())) <= 1e-14);
      }
    }
}

TEST_CASE("printed formula parser") {
  const auto terms = printed::parse("x_3^2+2(1-a)x_1(1-x_1)", 0.25);
  REQUIRE(terms.size() == 2);
  CHECK(terms[1].factor == 1.5);
  CHECK_THROWS(printed::parse("x_4^2", 0.3));
  CHECK_THROWS(printed::parse("3x_1x_2", 0.3));
}

TEST_CASE("polynomial rendering") {
  const auto lines = qso::render_polynomial(qso::catalog_operator(13, 0.3));
  REQUIRE(lines.size() == 3);
  CHECK(lines[0] == "x1' = x1^2 + 0.6*x1*x2 + 0.6*x1*x3");
  CHECK(lines[1] == "x2' = x2^2 + 2*x2*x3");
  CHECK(lines[2] == "x3' = 1.4*x1*x2 + 1.4*x1*x3 + x3^2");
  CHECK(qso::format_number(0.1) == "0.1");
  CHECK(qso::format_number(1.0 / 3) == "0.3333333333333333");
}

TEST_CASE("xi_s check") {
  const auto xi = qso::standard_partitions();
  const auto r = qso::xi_s_check(qso::catalog_operator(13, 0.3), xi[1]);
  CHECK(r.pass());
  REQUIRE(r.diagonal_permutation);
  CHECK(r.diagonal_permutation->is_identity());

  const auto r1 = qso::xi_s_check(qso::catalog_operator(13, 0.3), xi[0]);
  CHECK_FALSE(r1.pass());
  CHECK(std::any_of(r1.violations.begin(), r1.violations.end(), [](const qso::XiViolation& v) {
    return v.condition == "ii" && v.first == IndexPair{0, 1} && v.second == IndexPair{0, 2};
  }));

  HeredityTensord bad = qso::catalog_operator(13, 0.3);
  bad.set_row(1, 1, Eigen::Vector3d(1.0, 0.0, 0.0));
  for (const auto& p : xi) {
    const auto rb = qso::xi_s_check(bad, p);
    CHECK_FALSE(rb.pass());
    CHECK_FALSE(rb.diagonal_permutation);
  }
}

TEST_CASE("every catalog operator is xi_s with respect to xi_2") {
  const auto xi2 = qso::standard_partitions()[1];
  for (int step = 1; step <= 9; ++step)
    for (int id = 1; id <= qso::kCatalogSize; ++id) CHECK(qso::xi_s_check(qso::catalog_operator(id, step / 10.0), xi2).pass());
}

TEST_CASE("transpositions carry xi_2 operators to xi_3 and xi_4") {
  const auto xi = qso::standard_partitions();
  for (int id = 1; id <= qso::kCatalogSize; ++id) {
    const HeredityTensord t = qso::catalog_operator(id, 0.3);
    CHECK(qso::xi_s_check(qso::conjugate(t, cyc({{1, 2}})), xi[2]).pass());
    CHECK(qso::xi_s_check(qso::conjugate(t, cyc({{1, 3}})), xi[3]).pass());
  }
  CHECK(xi[1].permuted(cyc({{1, 2}})) == xi[2]);
  CHECK(xi[1].permuted(cyc({{1, 3}})) == xi[3]);
}

TEST_CASE("conjugation examples") {
  const HeredityTensord v1 = qso::catalog_operator(1, 0.3);
  CHECK(qso::max_coefficient_difference(qso::conjugate(v1, cyc({{2, 3}})), qso::catalog_operator(13, 0.3)) == 0.0);
  CHECK(qso::max_coefficient_difference(qso::conjugate(v1, Permutation::identity(3)), v1) == 0.0);

  const auto p = qso::are_conjugate(v1, qso::catalog_operator(13, 0.3));
  REQUIRE(p);
  CHECK(p->cycle_notation() == "(1)(2 3)");
  CHECK_FALSE(qso::are_conjugate(qso::catalog_operator(7, 0.3), qso::catalog_operator(10, 0.3)));
  const auto self = qso::are_conjugate(v1, v1);
  REQUIRE(self);
  CHECK(self->is_identity());
}

TEST_CASE("conjugation is a right action and intertwines the operators") {
  const auto perms = qso::all_permutations(3);
  const auto pts = qso::sample(3, 31, 20);
  for (int id : {1, 4, 13, 17, 28, 35}) {
    const HeredityTensord t = qso::catalog_operator(id, 0.3);
    for (const auto& p : perms) {
      CHECK(qso::max_coefficient_difference(qso::conjugate(qso::conjugate(t, p), p.inverse()), t) == 0.0);
      const HeredityTensord tp = qso::conjugate(t, p);
      for (const auto& x : pts) {
        const Eigen::VectorXd lhs = qso::evaluate(tp, p.permute(x.coords()));
        const Eigen::VectorXd rhs = p.permute(qso::evaluate(t, x.coords()));
        CHECK((lhs - rhs).cwiseAbs().maxCoeff() <= 1e-15);
      }
      for (const auto& q : perms)
        CHECK(qso::max_coefficient_difference(qso::conjugate(qso::conjugate(t, q), p),
                                              qso::conjugate(t, qso::compose(q, p))) == 0.0);
    }
  }
}

TEST_CASE("conjugacy is an equivalence relation on the catalog") {
  std::vector<HeredityTensord> ts;
  for (int id = 1; id <= qso::kCatalogSize; ++id) ts.push_back(qso::catalog_operator(id, 0.3));
  for (std::size_t i = 0; i < ts.size(); ++i)
    for (std::size_t j = 0; j < ts.size(); ++j) {
      const auto p = qso::are_conjugate(ts[i], ts[j]);
      const auto back = qso::are_conjugate(ts[j], ts[i]);
      CHECK(p.has_value() == back.has_value());
      if (!p) continue;
      CHECK(qso::max_coefficient_difference(qso::conjugate(ts[j], p->inverse()), ts[i]) == 0.0);
      for (std::size_t k = 0; k < ts.size(); ++k) {
        const auto q = qso::are_conjugate(ts[j], ts[k]);
        if (!q) continue;
        CHECK(qso::max_coefficient_difference(qso::conjugate(ts[i], qso::compose(*p, *q)), ts[k]) == 0.0);
      }
    }
}

TEST_CASE("classification reproduces the reference classes") {
  for (double a : {0.1, 0.3, 0.7, 0.9}) {
    const auto classes = qso::classify_catalog(a);
    CHECK(classes.size() == 20);
    CHECK(qso::matches_printed(classes));
    std::set<std::set<int>> expected;
    for (const auto& c : qso::printed_classes()) expected.emplace(c.begin(), c.end());
    CHECK(member_sets(classes) == expected);
  }
  CHECK(qso::printed_label({4, 16}) == 4);
  CHECK(qso::printed_label({28}) == 19);
  CHECK(qso::printed_label({25}) == 17);
  CHECK_FALSE(qso::printed_label({1, 2}));
}

TEST_CASE("strict same-parameter matching splits four classes") {
  for (double a : {0.1, 0.3, 0.7, 0.9}) {
    const auto classes = qso::classify_catalog(a, qso::ParameterMatching::same_parameter);
    CHECK(classes.size() == 24);
    CHECK_FALSE(qso::matches_printed(classes));
    const auto sets = member_sets(classes);
    for (int id : {8, 9, 11, 12, 26, 27, 29, 30}) CHECK(sets.count({id}) == 1);
  }
}

TEST_CASE("class links record the witnessing permutations") {
  for (const auto& c : qso::classify_catalog(0.3))
    for (const auto& l : c.links) {
      const HeredityTensord to = qso::catalog_operator(l.to, l.reflected ? 1.0 - 0.3 : 0.3);
      CHECK(qso::max_coefficient_difference(qso::conjugate(qso::catalog_operator(l.from, 0.3), l.permutation), to) <=
            1e-12);
    }
}

TEST_CASE("degenerate parameters") {
  CHECK(qso::is_degenerate_parameter(0.5));
  CHECK(qso::is_degenerate_parameter(0.0));
  CHECK(qso::is_degenerate_parameter(1.0));
  CHECK_FALSE(qso::is_degenerate_parameter(0.3));
  CHECK_NOTHROW(qso::classify_catalog(0.5));
}
