#include "linsys/oracle.hpp"

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace linsys {
namespace {

// Next larger integer with the same popcount (Gosper's hack).
std::uint32_t next_combination(std::uint32_t x) {
  const std::uint32_t low = x & (~x + 1);
  const std::uint32_t ripple = x + low;
  return ripple | (((x ^ ripple) >> 2) / low);
}

template <class Pred>
bool any_subset_of_size(unsigned n, unsigned k, Pred pred) {
  if (k == 0) return pred(std::uint32_t{0});
  const std::uint64_t limit = std::uint64_t{1} << n;
  for (std::uint64_t x = (std::uint64_t{1} << k) - 1; x < limit;
       x = next_combination(static_cast<std::uint32_t>(x))) {
    if (pred(static_cast<std::uint32_t>(x))) return true;
    if (k == n) break;
  }
  return false;
}

}  // namespace

std::size_t brute_force_tau(const LinearSystem& s) {
  const auto n = static_cast<unsigned>(s.num_points());
  if (n > kOracleMaxItems)
    throw Error(ErrorCode::TooLarge, std::to_string(n) + " points exceed the oracle cap");
  std::vector<std::uint32_t> masks;
  for (const auto& l : s.lines()) {
    std::uint32_t m = 0;
    for (Point p : l) m |= std::uint32_t{1} << p;
    masks.push_back(m);
  }
  for (unsigned k = 0; k <= n; ++k) {
    const bool hit = any_subset_of_size(n, k, [&](std::uint32_t pts) {
      for (auto m : masks)
        if ((m & pts) == 0) return false;
      return true;
    });
    if (hit) return k;
  }
  return n;  // unreachable for a valid system
}

std::size_t brute_force_nu2(const LinearSystem& s) {
  const auto m = static_cast<unsigned>(s.num_lines());
  if (m > kOracleMaxItems)
    throw Error(ErrorCode::TooLarge, std::to_string(m) + " lines exceed the oracle cap");
  std::vector<std::uint32_t> through(s.num_points(), 0);
  for (unsigned i = 0; i < m; ++i)
    for (Point p : s.line(i)) through[p] |= std::uint32_t{1} << i;
  for (unsigned k = m + 1; k-- > 0;) {
    const bool ok = any_subset_of_size(m, k, [&](std::uint32_t lines) {
      for (auto t : through)
        if (std::popcount(t & lines) > 2) return false;
      return true;
    });
    if (ok) return k;
  }
  return 0;
}

}  // namespace linsys
