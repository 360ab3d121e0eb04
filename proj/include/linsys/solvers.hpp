#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "linsys/system.hpp"

namespace linsys {

inline constexpr std::uint64_t kDefaultSolverNodes = 200'000'000;

struct SearchBudget {
  std::uint64_t max_nodes = kDefaultSolverNodes;
  // Also search for the lexicographically least optimal witness.
  bool deterministic = true;
};

struct SolveResult {
  std::size_t optimum = 0;
  // Point indices for tau, line indices for nu2; ascending.
  std::vector<std::size_t> witness;
  std::uint64_t nodes_explored = 0;
  bool proven_optimal = false;
};

/// Minimum transversal (hitting set) by branch and bound.
///
/// Branches on the uncovered line with the fewest available points (least
/// index on ties); the i-th child takes that line's i-th point and excludes
/// the earlier ones. Points whose uncovered lines are a subset of another
/// candidate's on the same line are skipped. The lower bound is a greedy
/// packing of uncovered lines with pairwise disjoint available points.
///
/// In deterministic mode a second, point-ordered search with the optimum as
/// target returns the lexicographically least optimal witness.
///
/// On budget exhaustion returns the best incumbent with proven_optimal=false.
SolveResult transversal_number(const LinearSystem& s, SearchBudget budget = {});

/// Maximum 2-packing: the largest set of lines with no point on three of them.
/// Include-first search over lines in index order with per-point usage
/// counters; the bound is the current size plus the number of later lines
/// that can still be added. The first maximum found is the lexicographically
/// least one.
SolveResult two_packing_number(const LinearSystem& s, SearchBudget budget = {});

/// How delta2_transversal picks its independent set A of degree-2 points.
enum class IndependentChoice {
  Maximum,  // largest A, lexicographically least among the largest
  Greedy,   // maximal A, scanning points in index order
};

struct Delta2Transversal {
  std::vector<Point> independent;           // A
  std::vector<std::size_t> residual_lines;  // L' = lines missing A, a matching
  std::vector<Point> residual_cover;        // B: least point of each line of L'
  std::vector<Point> transversal;           // A u B, ascending
};

/// Constructive transversal for systems with maximum degree exactly 2.
/// Throws PreconditionViolated otherwise.
Delta2Transversal delta2_transversal(const LinearSystem& s,
                                     IndependentChoice choice = IndependentChoice::Maximum);

/// Repeatedly takes a point on the most uncovered lines (least index on
/// ties). Feasible, not optimal.
std::vector<Point> greedy_transversal(const LinearSystem& s);

bool is_transversal(const LinearSystem& s, std::span<const std::size_t> points);
bool is_two_packing(const LinearSystem& s, std::span<const std::size_t> lines);

}  // namespace linsys
