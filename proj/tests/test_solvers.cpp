#include <doctest.h>

#include "helpers.hpp"

using namespace linsys;

// Golden values below were fixed with brute_force_tau / brute_force_nu2
// before the branch-and-bound solvers existed.

TEST_CASE("oracle golden values") {
  CHECK(brute_force_tau(testing::fano()) == 3);
  CHECK(brute_force_nu2(testing::fano()) == 4);
  CHECK(brute_force_tau(cycle_graph(6)) == 3);
  CHECK(brute_force_nu2(cycle_graph(6)) == 6);
  CHECK(brute_force_tau(projective_plane(3).system) == 4);
  CHECK(brute_force_nu2(projective_plane(3).system) == 4);
  CHECK(brute_force_tau(build_cnn(3).system) == 4);
  CHECK(brute_force_nu2(build_cnn(3).system) == 4);
  CHECK(brute_force_tau(LinearSystem{}) == 0);
  CHECK_THROWS_AS(brute_force_tau(matching(7, 3)), Error);
}

TEST_CASE("exact solvers on small constructions") {
  struct Case {
    const char* name;
    LinearSystem s;
    std::size_t tau, nu2;
  };
  const std::vector<Case> cases{
      {"fano", testing::fano(), 3, 4},
      {"pi3", projective_plane(3).system, 4, 4},
      {"C", build_C().system, 4, 4},
      {"c34", build_cnn(3).system, 4, 4},
      {"c56", build_cnn(5).system, 6, 6},
      {"cycle6", cycle_graph(6), 3, 6},
      {"cycle7", cycle_graph(7), 4, 7},
      {"star", star(5, 3), 1, 2},
      {"matching", matching(4, 3), 4, 4},
      {"dual K5", dual_complete(5), 3, 5},
      {"empty", LinearSystem(3, {}), 0, 0},
  };
  for (const auto& c : cases) {
    CAPTURE(c.name);
    const auto t = transversal_number(c.s);
    const auto p = two_packing_number(c.s);
    CHECK(t.optimum == c.tau);
    CHECK(p.optimum == c.nu2);
    CHECK(t.proven_optimal);
    CHECK(p.proven_optimal);
    CHECK(t.witness.size() == c.tau);
    CHECK(p.witness.size() == c.nu2);
    CHECK(is_transversal(c.s, t.witness));
    CHECK(is_two_packing(c.s, p.witness));
  }
}

TEST_CASE("solvers agree with the oracle on random systems") {
  for (std::uint64_t seed = 1; seed <= 120; ++seed) {
    CAPTURE(seed);
    const auto s = testing::random_system(seed);
    CHECK(transversal_number(s).optimum == brute_force_tau(s));
    CHECK(two_packing_number(s).optimum == brute_force_nu2(s));
  }
}

TEST_CASE("deterministic witnesses are lexicographically least") {
  // Brute force the least optimal transversal of a 6-cycle.
  const auto s = cycle_graph(6);
  const auto t = transversal_number(s);
  std::vector<std::size_t> best;
  for (std::size_t a = 0; a < 6 && best.empty(); ++a)
    for (std::size_t b = a + 1; b < 6 && best.empty(); ++b)
      for (std::size_t c = b + 1; c < 6 && best.empty(); ++c) {
        const std::vector<std::size_t> cand{a, b, c};
        if (is_transversal(s, cand)) best = cand;
      }
  CHECK(t.witness == best);
  CHECK(two_packing_number(testing::fano()).witness == std::vector<std::size_t>{0, 1, 3, 6});
}

TEST_CASE("padding leaves the witness alone") {
  const auto base = build_cnn(5).system;
  const auto padded = pad_uniform(base, 7).first;
  CHECK(transversal_number(padded).witness == transversal_number(base).witness);
  CHECK(two_packing_number(padded).witness == two_packing_number(base).witness);
}

TEST_CASE("tiny budgets return an unproven incumbent") {
  const auto s = build_cnn(5).system;
  const auto t = transversal_number(s, SearchBudget{5, true});
  CHECK_FALSE(t.proven_optimal);
  CHECK(t.optimum >= 6);
  CHECK(is_transversal(s, t.witness));
  const auto p = two_packing_number(s, SearchBudget{5, true});
  CHECK_FALSE(p.proven_optimal);
  CHECK(is_two_packing(s, p.witness));
  CHECK_THROWS_AS(transversal_number(s, SearchBudget{0, true}), Error);
}

TEST_CASE("greedy transversal is feasible") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const auto s = testing::random_system(seed);
    const auto g = greedy_transversal(s);
    const std::vector<std::size_t> pts(g.begin(), g.end());
    CHECK(is_transversal(s, pts));
    CHECK(pts.size() >= transversal_number(s).optimum);
  }
}

TEST_CASE("delta2 transversal") {
  const auto s = dual_complete(5);
  const auto d = delta2_transversal(s);
  const std::vector<std::size_t> pts(d.transversal.begin(), d.transversal.end());
  CHECK(is_transversal(s, pts));
  CHECK(d.transversal.size() <= s.num_lines() - 1);
  CHECK(d.residual_lines.size() == d.residual_cover.size());
  CHECK_THROWS_AS(delta2_transversal(testing::fano()), Error);

  // Path 3-1-0-2-4: scanning greedily picks 0 and leaves two residual
  // edges, while a maximum independent set leaves none.
  const LinearSystem path(5, {{1, 3}, {0, 1}, {0, 2}, {2, 4}});
  const auto greedy = delta2_transversal(path, IndependentChoice::Greedy);
  const auto maximum = delta2_transversal(path, IndependentChoice::Maximum);
  CHECK(greedy.independent == std::vector<Point>{0});
  CHECK(greedy.residual_lines.size() == 2);
  CHECK(maximum.independent.size() == 2);
  CHECK(maximum.residual_lines.empty());
}
