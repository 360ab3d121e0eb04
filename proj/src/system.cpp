#include "linsys/system.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>

namespace linsys {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::LinearityViolation: return "LinearityViolation";
    case ErrorCode::DuplicateLine: return "DuplicateLine";
    case ErrorCode::PointOutOfRange: return "PointOutOfRange";
    case ErrorCode::EmptyLine: return "EmptyLine";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::InvalidParameter: return "InvalidParameter";
    case ErrorCode::NotImplemented: return "NotImplemented";
    case ErrorCode::NotATriangle: return "NotATriangle";
    case ErrorCode::NotUniform: return "NotUniform";
    case ErrorCode::GenerationExhausted: return "GenerationExhausted";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::SearchBudgetExceeded: return "SearchBudgetExceeded";
    case ErrorCode::MalformedInput: return "MalformedInput";
  }
  return "Unknown";
}

std::size_t intersection_size(const Line& a, const Line& b) {
  std::size_t n = 0;
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++n;
      ++i;
      ++j;
    }
  }
  return n;
}

bool share_two(const Line& a, const Line& b) {
  std::size_t n = 0;
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      if (++n == 2) return true;
      ++i;
      ++j;
    }
  }
  return false;
}

LinearSystem::LinearSystem(std::size_t num_points, std::vector<Line> lines)
    : num_points_(num_points), lines_(std::move(lines)) {
  for (std::size_t i = 0; i < lines_.size(); ++i) {
    auto& l = lines_[i];
    if (l.empty()) throw Error(ErrorCode::EmptyLine, "line " + std::to_string(i));
    std::sort(l.begin(), l.end());
    if (std::adjacent_find(l.begin(), l.end()) != l.end())
      throw Error(ErrorCode::MalformedInput,
                  "line " + std::to_string(i) + " repeats a point");
    if (l.back() >= num_points_)
      throw Error(ErrorCode::PointOutOfRange,
                  "line " + std::to_string(i) + " has point " +
                      std::to_string(l.back()) + " >= " + std::to_string(num_points_));
  }

  // Pairwise check through the point-line incidence lists: two lines that
  // share two points are met twice while scanning one of those points' lists.
  std::vector<std::vector<std::size_t>> through(num_points_);
  for (std::size_t i = 0; i < lines_.size(); ++i)
    for (Point p : lines_[i]) through[p].push_back(i);

  std::map<Line, std::size_t> seen;
  for (std::size_t i = 0; i < lines_.size(); ++i) {
    auto [it, fresh] = seen.emplace(lines_[i], i);
    if (!fresh)
      throw Error(ErrorCode::DuplicateLine, "lines " + std::to_string(it->second) +
                                                " and " + std::to_string(i));
  }

  std::vector<std::size_t> last_shared(lines_.size(), SIZE_MAX);
  for (std::size_t i = 0; i < lines_.size(); ++i) {
    for (Point p : lines_[i]) {
      for (std::size_t j : through[p]) {
        if (j <= i) continue;
        if (last_shared[j] == i)
          throw Error(ErrorCode::LinearityViolation,
                      "lines " + std::to_string(i) + " and " + std::to_string(j) +
                          " share at least two points");
        last_shared[j] = i;
      }
    }
  }
}

std::size_t LinearSystem::incidences() const noexcept {
  std::size_t n = 0;
  for (const auto& l : lines_) n += l.size();
  return n;
}

DegreeProfile degree_profile(const LinearSystem& s) {
  DegreeProfile d;
  d.per_point_degrees.assign(s.num_points(), 0);
  for (const auto& l : s.lines())
    for (Point p : l) ++d.per_point_degrees[p];
  if (!d.per_point_degrees.empty())
    d.max_degree = *std::max_element(d.per_point_degrees.begin(), d.per_point_degrees.end());
  return d;
}

std::vector<std::vector<std::size_t>> point_lines(const LinearSystem& s) {
  std::vector<std::vector<std::size_t>> through(s.num_points());
  for (std::size_t i = 0; i < s.num_lines(); ++i)
    for (Point p : s.line(i)) through[p].push_back(i);
  return through;
}

std::optional<std::size_t> uniformity(const LinearSystem& s) {
  if (s.num_lines() == 0) return std::nullopt;
  const std::size_t r = s.line(0).size();
  for (const auto& l : s.lines())
    if (l.size() != r) return std::nullopt;
  return r;
}

bool is_intersecting(const LinearSystem& s) {
  const auto& ls = s.lines();
  for (std::size_t i = 0; i < ls.size(); ++i)
    for (std::size_t j = i + 1; j < ls.size(); ++j)
      if (intersection_size(ls[i], ls[j]) != 1) return false;
  return true;
}

PointDeletion delete_points(const LinearSystem& s, std::span<const Point> doomed) {
  std::vector<bool> gone(s.num_points(), false);
  for (Point p : doomed) {
    if (p >= s.num_points())
      throw Error(ErrorCode::PointOutOfRange, "point " + std::to_string(p));
    gone[p] = true;
  }

  PointDeletion out;
  out.index_map.assign(s.num_points(), std::nullopt);
  Point next = 0;
  for (std::size_t p = 0; p < s.num_points(); ++p)
    if (!gone[p]) out.index_map[p] = next++;

  std::vector<Line> lines;
  for (std::size_t i = 0; i < s.num_lines(); ++i) {
    Line l;
    for (Point p : s.line(i))
      if (out.index_map[p]) l.push_back(*out.index_map[p]);
    if (l.empty()) {
      out.dropped_lines.push_back(i);
    } else {
      lines.push_back(std::move(l));
      out.line_origin.push_back(i);
    }
  }
  out.system = LinearSystem(next, std::move(lines));
  return out;
}

PointDeletion delete_point(const LinearSystem& s, PointId p) {
  const Point doomed[] = {p.index};
  return delete_points(s, doomed);
}

LinearSystem delete_lines(const LinearSystem& s, std::span<const std::size_t> indices) {
  std::vector<bool> gone(s.num_lines(), false);
  for (std::size_t i : indices) {
    if (i >= s.num_lines())
      throw Error(ErrorCode::IndexOutOfRange, "line " + std::to_string(i));
    gone[i] = true;
  }
  std::vector<Line> lines;
  for (std::size_t i = 0; i < s.num_lines(); ++i)
    if (!gone[i]) lines.push_back(s.line(i));
  return LinearSystem(s.num_points(), std::move(lines));
}

LinearSystem delete_line(const LinearSystem& s, std::size_t index) {
  const std::size_t doomed[] = {index};
  return delete_lines(s, doomed);
}

namespace {

// One reduction pass on raw data; merges lines that collapse onto each other.
// Returns true if anything changed.
bool reduce_pass(std::size_t& num_points, std::vector<Line>& lines,
                 std::vector<std::size_t>& origin, std::vector<Point>& point_origin,
                 std::vector<Point>& removed, std::vector<std::size_t>& dropped) {
  std::vector<std::size_t> deg(num_points, 0);
  for (const auto& l : lines)
    for (Point p : l) ++deg[p];

  std::vector<std::optional<Point>> remap(num_points);
  std::vector<Point> kept_origin;
  Point next = 0;
  for (std::size_t p = 0; p < num_points; ++p) {
    if (deg[p] <= 1) {
      removed.push_back(point_origin[p]);
    } else {
      remap[p] = next++;
      kept_origin.push_back(point_origin[p]);
    }
  }
  bool changed = next != num_points;

  std::map<Line, std::size_t> seen;
  std::vector<Line> out;
  std::vector<std::size_t> out_origin;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    Line l;
    for (Point p : lines[i])
      if (remap[p]) l.push_back(*remap[p]);
    if (l.empty() || !seen.emplace(l, i).second) {
      dropped.push_back(origin[i]);
      changed = true;
      continue;
    }
    out.push_back(std::move(l));
    out_origin.push_back(origin[i]);
  }
  num_points = next;
  lines = std::move(out);
  origin = std::move(out_origin);
  point_origin = std::move(kept_origin);
  return changed;
}

}  // namespace

ReducedSystem reduce(const LinearSystem& s) {
  std::size_t n = s.num_points();
  std::vector<Line> lines = s.lines();
  std::vector<std::size_t> origin(lines.size());
  std::iota(origin.begin(), origin.end(), std::size_t{0});
  std::vector<Point> point_origin(n);
  std::iota(point_origin.begin(), point_origin.end(), Point{0});

  ReducedSystem r;
  while (reduce_pass(n, lines, origin, point_origin, r.removed_points, r.dropped_lines)) {
  }
  std::sort(r.removed_points.begin(), r.removed_points.end());
  std::sort(r.dropped_lines.begin(), r.dropped_lines.end());
  r.index_map.assign(s.num_points(), std::nullopt);
  for (Point p = 0; p < point_origin.size(); ++p) r.index_map[point_origin[p]] = p;
  r.system = LinearSystem(n, std::move(lines));
  return r;
}

bool is_linear_subsystem(const LinearSystem& parent, std::span<const Point> embed,
                         const LinearSystem& child) {
  if (embed.size() != child.num_points()) return false;
  std::vector<std::optional<Point>> local(parent.num_points());
  for (Point i = 0; i < embed.size(); ++i) {
    if (embed[i] >= parent.num_points() || local[embed[i]]) return false;
    local[embed[i]] = i;
  }
  std::set<Line> traces;
  for (const auto& l : parent.lines()) {
    Line t;
    for (Point p : l)
      if (local[p]) t.push_back(*local[p]);
    std::sort(t.begin(), t.end());
    if (!t.empty()) traces.insert(std::move(t));
  }
  return std::all_of(child.lines().begin(), child.lines().end(),
                     [&](const Line& l) { return traces.count(l) > 0; });
}

SortedLines sort_lines(const LinearSystem& s) {
  SortedLines out;
  out.order.resize(s.num_lines());
  std::iota(out.order.begin(), out.order.end(), std::size_t{0});
  std::sort(out.order.begin(), out.order.end(),
            [&](std::size_t a, std::size_t b) { return s.line(a) < s.line(b); });
  std::vector<Line> lines;
  lines.reserve(s.num_lines());
  for (std::size_t i : out.order) lines.push_back(s.line(i));
  out.system = LinearSystem(s.num_points(), std::move(lines));
  return out;
}

}  // namespace linsys
