#include <algorithm>
#include <random>

#include <doctest.h>

#include "effrank/efficiency.hpp"
#include "effrank/errors.hpp"
#include "effrank/pareto.hpp"

using namespace effrank;

namespace {

Point p(std::string name, std::vector<double> in, std::vector<double> out) {
  return {std::move(name), std::move(in), std::move(out)};
}

std::vector<Point> random_points(std::mt19937_64& gen, int n, int L, int J) {
  std::uniform_real_distribution<double> val(0.1, 10.0);
  std::vector<Point> points;
  for (int i = 0; i < n; ++i) {
    Point q;
    q.setup = "s" + std::to_string(i);
    for (int l = 0; l < L; ++l) q.inputs.push_back(val(gen));
    for (int j = 0; j < J; ++j) q.outputs.push_back(val(gen));
    points.push_back(std::move(q));
  }
  return points;
}

}  // namespace

TEST_CASE("dominates basics") {
  CHECK(dominates(p("a", {1}, {5}), p("b", {2}, {4})));
  CHECK_FALSE(dominates(p("a", {1}, {5}), p("a2", {1}, {5})));  // identical
  CHECK_FALSE(dominates(p("a", {1, 9}, {5}), p("b", {2, 1}, {4})));  // trade-off
  // equal on one axis, strict on the other still dominates
  CHECK(dominates(p("a", {1}, {5}), p("b", {1}, {4})));
  CHECK_THROWS_AS(dominates(p("a", {1}, {5}), p("b", {1, 2}, {4})), Error);
}

TEST_CASE("dominates is irreflexive and asymmetric") {
  std::mt19937_64 gen(3);
  auto points = random_points(gen, 20, 2, 2);
  for (const auto& a : points) {
    CHECK_FALSE(dominates(a, a));
    for (const auto& b : points) {
      const bool both = dominates(a, b) && dominates(b, a);
      CHECK_FALSE(both);
    }
  }
}

TEST_CASE("dominates is transitive") {
  std::mt19937_64 gen(4);
  auto points = random_points(gen, 15, 2, 1);
  for (const auto& a : points)
    for (const auto& b : points)
      for (const auto& c : points)
        if (dominates(a, b) && dominates(b, c)) CHECK(dominates(a, c));
}

TEST_CASE("frontier examples") {
  CHECK(pareto_frontier({p("only", {1}, {1})}) ==
        std::set<std::string>{"only"});

  auto frontier = pareto_frontier({p("a", {1}, {1}), p("b", {2}, {3}),
                                   p("c", {4}, {4}), p("d", {3}, {2})});
  CHECK(frontier == std::set<std::string>{"a", "b", "c"});  // d < b

  // all identical: nobody strictly dominates anybody
  auto all = pareto_frontier({p("a", {1}, {1}), p("b", {1}, {1}), p("c", {1}, {1})});
  CHECK(all.size() == 3);
}

TEST_CASE("every non-frontier point is dominated by a frontier point") {
  std::mt19937_64 gen(5);
  for (int trial = 0; trial < 20; ++trial) {
    auto points = random_points(gen, 2 + static_cast<int>(gen() % 20), 2, 2);
    auto frontier = pareto_frontier(points);
    for (const auto& q : points) {
      if (frontier.count(q.setup)) continue;
      bool covered = false;
      for (const auto& f : points) {
        if (!frontier.count(f.setup)) continue;
        if (dominates(f, q)) covered = true;
      }
      CHECK(covered);
    }
  }
}

TEST_CASE("frontier invariant under permutation and positive scaling") {
  std::mt19937_64 gen(6);
  for (int trial = 0; trial < 10; ++trial) {
    auto points = random_points(gen, 10, 2, 1);
    auto frontier = pareto_frontier(points);

    auto shuffled = points;
    std::shuffle(shuffled.begin(), shuffled.end(), gen);
    CHECK(pareto_frontier(shuffled) == frontier);

    auto scaled = points;
    for (auto& q : scaled) q.inputs[0] *= 42.0;
    CHECK(pareto_frontier(scaled) == frontier);
  }
}

TEST_CASE("strictly dominated points have theta < 1") {
  std::mt19937_64 gen(7);
  for (int trial = 0; trial < 10; ++trial) {
    auto points = random_points(gen, 8, 2, 1);
    auto results = efficiency_scores(points, FrontierForm::Convex);
    for (std::size_t i = 0; i < points.size(); ++i) {
      // strict domination with margin on every input
      for (std::size_t k = 0; k < points.size(); ++k) {
        if (k == i) continue;
        bool all_inputs_strict = true;
        for (std::size_t d = 0; d < points[i].inputs.size(); ++d)
          if (points[k].inputs[d] >= points[i].inputs[d])
            all_inputs_strict = false;
        bool outputs_ok = true;
        for (std::size_t d = 0; d < points[i].outputs.size(); ++d)
          if (points[k].outputs[d] < points[i].outputs[d]) outputs_ok = false;
        if (all_inputs_strict && outputs_ok) CHECK(results[i].theta < 1.0);
      }
    }
  }
}
