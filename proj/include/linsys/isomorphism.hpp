#pragma once

#include <cstdint>
#include <string>

#include "linsys/system.hpp"

namespace linsys {

inline constexpr std::uint64_t kDefaultIsoNodes = 5'000'000;

struct CanonicalForm {
  // Reduced system relabeled into canonical order, lines sorted.
  LinearSystem system;
  // Search tree nodes visited.
  std::uint64_t nodes = 0;
};

/// Canonical representative of the isomorphism class of reduce(s).
///
/// Points and lines form a bipartite incidence graph that is refined to an
/// equitable colouring; non-singleton point cells are individualized in
/// order and every leaf of the resulting search tree yields a relabeling.
/// The representative is the lexicographically least sorted line list among
/// those leaves. The tree depends only on the isomorphism class, so two
/// systems get equal forms iff they are isomorphic after reduction.
///
/// Throws Error(SearchBudgetExceeded) once more than `max_nodes` tree nodes
/// have been expanded.
CanonicalForm canonical_form(const LinearSystem& s,
                             std::uint64_t max_nodes = kDefaultIsoNodes);

/// Byte-exact instance-file encoding of canonical_form(s).
std::string canonical_encoding(const LinearSystem& s,
                               std::uint64_t max_nodes = kDefaultIsoNodes);

/// Isomorphism after deleting points of degree 0 or 1 from both systems.
bool is_isomorphic(const LinearSystem& a, const LinearSystem& b,
                   std::uint64_t max_nodes = kDefaultIsoNodes);

}  // namespace linsys
