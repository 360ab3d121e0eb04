#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "linsys/error.hpp"

namespace linsys {

using Point = std::uint32_t;
using Line = std::vector<Point>;

// Strongly typed handle for a point of a particular system.
struct PointId {
  Point index = 0;
  friend bool operator==(PointId, PointId) = default;
  friend auto operator<=>(PointId, PointId) = default;
};

/// A finite linear system (partial Steiner system): points 0..num_points-1 and
/// a list of distinct nonempty lines, any two of which share at most one point.
///
/// Immutable once constructed; every constructor path validates.
class LinearSystem {
 public:
  LinearSystem() = default;

  /// Validates and stores the system. Each line is sorted; a line with a
  /// repeated point is rejected as malformed. Throws Error with
  /// LinearityViolation, DuplicateLine, PointOutOfRange or EmptyLine.
  LinearSystem(std::size_t num_points, std::vector<Line> lines);

  std::size_t num_points() const noexcept { return num_points_; }
  std::size_t num_lines() const noexcept { return lines_.size(); }
  const std::vector<Line>& lines() const noexcept { return lines_; }
  const Line& line(std::size_t i) const { return lines_.at(i); }

  // Sum of line sizes.
  std::size_t incidences() const noexcept;

  friend bool operator==(const LinearSystem&, const LinearSystem&) = default;

 private:
  std::size_t num_points_ = 0;
  std::vector<Line> lines_;
};

inline LinearSystem new_system(std::size_t num_points, std::vector<Line> lines) {
  return LinearSystem(num_points, std::move(lines));
}

struct DegreeProfile {
  std::vector<std::size_t> per_point_degrees;
  std::size_t max_degree = 0;
};

DegreeProfile degree_profile(const LinearSystem& s);

/// Incident line indices per point.
std::vector<std::vector<std::size_t>> point_lines(const LinearSystem& s);

/// r if every line has exactly r points; empty for the empty system.
std::optional<std::size_t> uniformity(const LinearSystem& s);

bool is_intersecting(const LinearSystem& s);

/// Result of removing points: the new system, where every old point went
/// (nullopt when deleted) and which old lines vanished because they emptied.
struct PointDeletion {
  LinearSystem system;
  std::vector<std::optional<Point>> index_map;
  std::vector<std::size_t> dropped_lines;
  // Old index of each surviving line, in new line order.
  std::vector<std::size_t> line_origin;
};

/// Removes every point in `doomed` from every line and re-indexes the rest
/// in ascending order. Emptied lines are dropped. Throws DuplicateLine if two
/// lines collapse onto the same set (possible only with 1-lines).
PointDeletion delete_points(const LinearSystem& s, std::span<const Point> doomed);

PointDeletion delete_point(const LinearSystem& s, PointId p);

LinearSystem delete_line(const LinearSystem& s, std::size_t index);

/// Removes several lines at once; points are untouched.
LinearSystem delete_lines(const LinearSystem& s, std::span<const std::size_t> indices);

struct ReducedSystem {
  LinearSystem system;
  std::vector<Point> removed_points;       // original indices, ascending
  std::vector<std::size_t> dropped_lines;  // original line indices, ascending
  std::vector<std::optional<Point>> index_map;
};

/// Deletes every point of degree 0 or 1. Repeats only in the degenerate case
/// where a 1-line and a 2-line collapse onto each other, which is merged
/// (the later line counts as dropped).
ReducedSystem reduce(const LinearSystem& s);

/// True iff `child` is a linear subsystem of `parent` under the point
/// embedding `embed` (child point i is parent point embed[i]): every child
/// line is the trace of some parent line on the embedded point set.
bool is_linear_subsystem(const LinearSystem& parent, std::span<const Point> embed,
                         const LinearSystem& child);

/// True iff the two sorted lines share at least two points.
bool share_two(const Line& a, const Line& b);

/// Number of common points of two sorted lines.
std::size_t intersection_size(const Line& a, const Line& b);

/// The same system with its lines sorted lexicographically; `order[i]` is the
/// old index of new line i.
struct SortedLines {
  LinearSystem system;
  std::vector<std::size_t> order;
};
SortedLines sort_lines(const LinearSystem& s);

}  // namespace linsys
