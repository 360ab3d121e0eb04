#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "linsys/io.hpp"
#include "linsys/system.hpp"

namespace linsys {

struct LabeledSystem {
  LinearSystem system;
  ConstructionLabeling labels;
};

/// The n-uniform system C_{n,n+1} over Z_n (n odd, n >= 3).
///
/// Points (h,g) with h in Z_n, g in Z_n \ {0} get index h*(n-1) + (g-1);
/// the two special points p and q are n(n-1) and n(n-1)+1. Lines, in order:
///   L_g   = {(h,g) : h}                                 g = 1..n-1
///   l_p_g = {(g,h) : h != 0} + {p}                      g = 0..n-1
///   l_q_g = {(h,h+g) : h+g != 0} + {q}                  g = 0..n-1
LabeledSystem build_cnn(int n);

/// Desarguesian plane PG(2,q) for prime q. Points and lines are normalized
/// homogeneous triples over Z_q (first nonzero coordinate 1) in
/// lexicographic order; a point lies on a line iff their dot product is 0.
/// Prime powers that are not prime raise NotImplemented.
LabeledSystem projective_plane(int q);

struct Triangle {
  std::array<Point, 3> points;       // ascending
  std::array<std::size_t, 3> lines;  // through (p0,p1), (p0,p2), (p1,p2)
  friend bool operator==(const Triangle&, const Triangle&) = default;
};

/// All triangles, ordered by their point triples.
std::vector<Triangle> find_triangles(const LinearSystem& s);

/// Removes the three lines and then the three points of `t`. The returned
/// deletion maps original points to new indices; line_origin refers to the
/// original line indices.
PointDeletion delete_triangle_mapped(const LinearSystem& s, const Triangle& t);

LinearSystem delete_triangle(const LinearSystem& s, const Triangle& t);

/// Pi_3 minus its lexicographically first triangle.
LabeledSystem build_C();

struct C44Member {
  LinearSystem system;
  std::string provenance;
};

/// Subsystems of Pi_3 containing C (as built by build_C) as a linear
/// subsystem, with 2-packing number 4, one per isomorphism class after
/// reduction. Enumerates every choice of restored triangle points and
/// restored triangle lines (traces on the chosen point set).
std::vector<C44Member> enumerate_C44();

struct PaddingRecord {
  LinearSystem base;
  std::size_t k = 0;
  std::vector<std::vector<Point>> added_points;  // per line
};

/// Appends k = r - r0 fresh degree-1 points to every line of an r0-uniform
/// system. Fresh indices start at num_points and follow line order.
std::pair<LinearSystem, PaddingRecord> pad_uniform(const LinearSystem& s, std::size_t r);

LinearSystem matching(std::size_t m, std::size_t r);

/// k lines of size r through point 0, otherwise disjoint.
LinearSystem star(std::size_t k, std::size_t r);

/// The cycle graph on m >= 3 vertices as a 2-uniform system.
LinearSystem cycle_graph(std::size_t m);

/// m >= 3 lines meeting pairwise in distinct points: one point per pair of
/// lines, so every point has degree 2 and the lines are (m-1)-sets.
LinearSystem dual_complete(std::size_t m);

/// Rejection sampler: draws random lines with size in [min_size, max_size]
/// and keeps those meeting every kept line in at most one point. Throws
/// GenerationExhausted after a fixed number of rejected draws.
LinearSystem random_linear_system(std::size_t num_points, std::size_t num_lines,
                                  std::pair<std::size_t, std::size_t> line_size_range,
                                  std::uint64_t seed);

inline constexpr std::size_t kRandomMaxRejections = 20000;

/// Parameters of a randomly drawn corpus instance. Each seed picks its own
/// point count, line count and size range; line counts back off until the
/// sampler succeeds.
struct RandomFamily {
  std::size_t min_points = 6;
  std::size_t max_points = 12;
  std::size_t max_lines = 12;
  std::size_t count = 100;
  std::uint64_t seed = 1;
};

LinearSystem random_corpus_instance(const RandomFamily& family, std::uint64_t seed);

/// Point labels like "(h,g)" for the product part of C_{n,n+1}.
std::string cnn_point_label(int h, int g);

bool is_prime(int q);

}  // namespace linsys
