#include <algorithm>
#include <random>

#include <doctest.h>

#include "effrank/errors.hpp"
#include "effrank/simplex.hpp"
#include "lp_oracle.hpp"

using namespace effrank;

namespace {

LinearProgram random_lp(std::mt19937_64& gen) {
  std::uniform_real_distribution<double> coeff(-5.0, 5.0);
  std::uniform_int_distribution<int> nvars_d(2, 4);
  std::uniform_int_distribution<int> ncons_d(1, 5);
  LinearProgram lp;
  const int nvars = nvars_d(gen);
  const int ncons = ncons_d(gen);
  for (int v = 0; v < nvars; ++v) {
    lp.objective.push_back(coeff(gen));
    lp.bounds.push_back(gen() % 4 == 0 ? VarBound::Free : VarBound::NonNegative);
  }
  for (int i = 0; i < ncons; ++i) {
    LinearConstraint c;
    for (int v = 0; v < nvars; ++v) c.coefficients.push_back(coeff(gen));
    const int r = static_cast<int>(gen() % 8);
    c.relation = r == 0 ? Relation::EQ : (r % 2 ? Relation::LE : Relation::GE);
    c.rhs = coeff(gen);
    lp.constraints.push_back(std::move(c));
  }
  return lp;
}

}  // namespace

TEST_CASE("single active constraint") {
  LinearProgram lp;
  lp.objective = {1.0};
  lp.bounds = {VarBound::NonNegative};
  lp.constraints.push_back({{1.0}, Relation::GE, 3.0});
  auto s = solve_lp(lp);
  REQUIRE(s.status == LpStatus::Optimal);
  CHECK(s.objective_value == doctest::Approx(3.0));
}

TEST_CASE("two-variable vertex optimum") {
  // minimize -x - y  s.t.  x + 2y <= 2,  x,y >= 0; optimum -2 at (2, 0)
  LinearProgram lp;
  lp.objective = {-1.0, -1.0};
  lp.bounds = {VarBound::NonNegative, VarBound::NonNegative};
  lp.constraints.push_back({{1.0, 2.0}, Relation::LE, 2.0});
  auto s = solve_lp(lp);
  REQUIRE(s.status == LpStatus::Optimal);
  CHECK(s.objective_value == doctest::Approx(-2.0));
  CHECK(s.variables[0] == doctest::Approx(2.0));
  CHECK(s.variables[1] == doctest::Approx(0.0));
}

TEST_CASE("infeasible") {
  LinearProgram lp;
  lp.objective = {1.0};
  lp.bounds = {VarBound::NonNegative};
  lp.constraints.push_back({{1.0}, Relation::LE, -1.0});
  CHECK(solve_lp(lp).status == LpStatus::Infeasible);
}

TEST_CASE("unbounded") {
  LinearProgram lp;
  lp.objective = {-1.0};
  lp.bounds = {VarBound::NonNegative};
  lp.constraints.push_back({{-1.0}, Relation::LE, 1.0});
  CHECK(solve_lp(lp).status == LpStatus::Unbounded);
}

TEST_CASE("free variable") {
  // minimize x  s.t.  x >= -7, x free
  LinearProgram lp;
  lp.objective = {1.0};
  lp.bounds = {VarBound::Free};
  lp.constraints.push_back({{1.0}, Relation::GE, -7.0});
  auto s = solve_lp(lp);
  REQUIRE(s.status == LpStatus::Optimal);
  CHECK(s.objective_value == doctest::Approx(-7.0));
}

TEST_CASE("equality constraints") {
  // minimize x + y  s.t.  x + y == 4, x - y == 2
  LinearProgram lp;
  lp.objective = {1.0, 1.0};
  lp.bounds = {VarBound::NonNegative, VarBound::NonNegative};
  lp.constraints.push_back({{1.0, 1.0}, Relation::EQ, 4.0});
  lp.constraints.push_back({{1.0, -1.0}, Relation::EQ, 2.0});
  auto s = solve_lp(lp);
  REQUIRE(s.status == LpStatus::Optimal);
  CHECK(s.variables[0] == doctest::Approx(3.0));
  CHECK(s.variables[1] == doctest::Approx(1.0));
}

TEST_CASE("optimal points are feasible") {
  std::mt19937_64 gen(42);
  for (int trial = 0; trial < 200; ++trial) {
    auto lp = random_lp(gen);
    auto s = solve_lp(lp);
    if (s.status != LpStatus::Optimal) continue;
    for (const auto& c : lp.constraints) {
      double lhs = 0.0, scale = 1.0;
      for (std::size_t v = 0; v < lp.objective.size(); ++v) {
        lhs += c.coefficients[v] * s.variables[v];
        scale = std::max(scale, std::fabs(c.coefficients[v]));
      }
      const double tol = 1e-9 * scale * 100;  // row scaling headroom
      switch (c.relation) {
        case Relation::LE: CHECK(lhs <= c.rhs + tol); break;
        case Relation::GE: CHECK(lhs >= c.rhs - tol); break;
        case Relation::EQ: CHECK(std::fabs(lhs - c.rhs) <= tol); break;
      }
    }
    for (std::size_t v = 0; v < lp.objective.size(); ++v)
      if (lp.bounds[v] == VarBound::NonNegative)
        CHECK(s.variables[v] >= -1e-9);
  }
}

TEST_CASE("agrees with vertex-enumeration oracle") {
  std::mt19937_64 gen(1);
  int optimal_seen = 0;
  for (int trial = 0; trial < 100; ++trial) {
    auto lp = random_lp(gen);
    auto got = solve_lp(lp);
    auto want = lp_oracle::brute_force_lp(lp);
    REQUIRE(got.status == want.status);
    if (got.status == LpStatus::Optimal) {
      ++optimal_seen;
      CHECK(got.objective_value ==
            doctest::Approx(want.objective_value).epsilon(1e-7));
    }
  }
  CHECK(optimal_seen > 10);  // the generator must exercise the optimal path
}

TEST_CASE("objective translation via fixed variable") {
  std::mt19937_64 gen(9);
  for (int trial = 0; trial < 20; ++trial) {
    auto lp = random_lp(gen);
    auto base = solve_lp(lp);
    if (base.status != LpStatus::Optimal) continue;

    const double shift = 13.25;
    auto shifted = lp;
    for (auto& c : shifted.constraints) c.coefficients.push_back(0.0);
    shifted.objective.push_back(shift);
    shifted.bounds.push_back(VarBound::NonNegative);
    LinearConstraint fix;
    fix.coefficients.assign(shifted.objective.size(), 0.0);
    fix.coefficients.back() = 1.0;
    fix.relation = Relation::EQ;
    fix.rhs = 1.0;
    shifted.constraints.push_back(std::move(fix));

    auto s = solve_lp(shifted);
    REQUIRE(s.status == LpStatus::Optimal);
    CHECK(s.objective_value ==
          doctest::Approx(base.objective_value + shift).epsilon(1e-9));
  }
}

TEST_CASE("variable permutation equivariance") {
  std::mt19937_64 gen(123);
  for (int trial = 0; trial < 50; ++trial) {
    auto lp = random_lp(gen);
    const std::size_t n = lp.objective.size();
    std::vector<std::size_t> perm(n);
    for (std::size_t v = 0; v < n; ++v) perm[v] = v;
    std::shuffle(perm.begin(), perm.end(), gen);

    LinearProgram permuted;
    permuted.objective.resize(n);
    permuted.bounds.resize(n);
    for (std::size_t v = 0; v < n; ++v) {
      permuted.objective[perm[v]] = lp.objective[v];
      permuted.bounds[perm[v]] = lp.bounds[v];
    }
    for (const auto& c : lp.constraints) {
      LinearConstraint pc;
      pc.coefficients.resize(n);
      for (std::size_t v = 0; v < n; ++v)
        pc.coefficients[perm[v]] = c.coefficients[v];
      pc.relation = c.relation;
      pc.rhs = c.rhs;
      permuted.constraints.push_back(std::move(pc));
    }

    auto a = solve_lp(lp);
    auto b = solve_lp(permuted);
    REQUIRE(a.status == b.status);
    if (a.status == LpStatus::Optimal)
      CHECK(a.objective_value == doctest::Approx(b.objective_value).epsilon(1e-7));
  }
}

TEST_CASE("dimension mismatch raises") {
  LinearProgram lp;
  lp.objective = {1.0, 2.0};
  lp.bounds = {VarBound::NonNegative};
  CHECK_THROWS_AS(solve_lp(lp), Error);
}

TEST_CASE("format_lp is parseable text") {
  LinearProgram lp;
  lp.objective = {1.0, -2.0};
  lp.bounds = {VarBound::NonNegative, VarBound::Free};
  lp.constraints.push_back({{1.0, 1.0}, Relation::LE, 3.0});
  const auto text = format_lp(lp);
  CHECK(text.find("minimize") != std::string::npos);
  CHECK(text.find("subject to") != std::string::npos);
  CHECK(text.find("<=") != std::string::npos);
}
