#pragma once

#include <cstddef>

#include "linsys/system.hpp"

namespace linsys {

inline constexpr std::size_t kOracleMaxItems = 20;

// Exhaustive reference values. These enumerate subsets by size with bit
// masks and share nothing with the branch-and-bound solvers.

/// Smallest k such that some k points meet every line. Needs <= 20 points.
std::size_t brute_force_tau(const LinearSystem& s);

/// Largest k such that some k lines put no point on three of them. Needs
/// <= 20 lines.
std::size_t brute_force_nu2(const LinearSystem& s);

}  // namespace linsys
