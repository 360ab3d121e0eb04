#include "linsys/constructions.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "linsys/isomorphism.hpp"
#include "linsys/solvers.hpp"

namespace linsys {

std::string cnn_point_label(int h, int g) {
  return "(" + std::to_string(h) + "," + std::to_string(g) + ")";
}

LabeledSystem build_cnn(int n) {
  if (n < 3 || n % 2 == 0)
    throw Error(ErrorCode::InvalidParameter,
                "C_{n,n+1} needs odd n >= 3, got " + std::to_string(n));

  const auto mod = [n](int x) { return ((x % n) + n) % n; };
  const auto at = [n](int h, int g) { return static_cast<Point>(h * (n - 1) + (g - 1)); };
  const Point p = static_cast<Point>(n * (n - 1));
  const Point q = p + 1;

  LabeledSystem out;
  auto& labels = out.labels;
  labels.name = "cnn(" + std::to_string(n) + ")";
  labels.point_labels.resize(q + 1);
  for (int h = 0; h < n; ++h)
    for (int g = 1; g < n; ++g) labels.point_labels[at(h, g)] = cnn_point_label(h, g);
  labels.point_labels[p] = "p";
  labels.point_labels[q] = "q";

  std::vector<Line> lines;
  for (int g = 1; g < n; ++g) {
    Line l;
    for (int h = 0; h < n; ++h) l.push_back(at(h, g));
    lines.push_back(std::move(l));
    labels.line_labels.push_back("L_" + std::to_string(g));
  }
  for (int g = 0; g < n; ++g) {
    Line l{p};
    for (int h = 1; h < n; ++h) l.push_back(at(g, h));
    lines.push_back(std::move(l));
    labels.line_labels.push_back("l_p_" + std::to_string(g));
  }
  for (int g = 0; g < n; ++g) {
    Line l{q};
    for (int h = 0; h < n; ++h)
      if (mod(h + g) != 0) l.push_back(at(h, mod(h + g)));
    lines.push_back(std::move(l));
    labels.line_labels.push_back("l_q_" + std::to_string(g));
  }
  out.system = LinearSystem(q + 1, std::move(lines));
  return out;
}

bool is_prime(int q) {
  if (q < 2) return false;
  for (int d = 2; d * d <= q; ++d)
    if (q % d == 0) return false;
  return true;
}

namespace {

bool is_prime_power(int q) {
  if (q < 2) return false;
  int p = 2;
  while (q % p != 0) ++p;
  while (q % p == 0) q /= p;
  return q == 1;
}

std::string triple_label(const std::array<int, 3>& v, char open, char close) {
  return open + std::to_string(v[0]) + ":" + std::to_string(v[1]) + ":" +
         std::to_string(v[2]) + close;
}

}  // namespace

LabeledSystem projective_plane(int q) {
  if (!is_prime(q)) {
    if (is_prime_power(q))
      throw Error(ErrorCode::NotImplemented,
                  "planes of prime-power order " + std::to_string(q) + " are not built");
    throw Error(ErrorCode::InvalidParameter, "plane order must be prime, got " + std::to_string(q));
  }

  std::vector<std::array<int, 3>> triples;
  for (int x = 0; x < q; ++x)
    for (int y = 0; y < q; ++y)
      for (int z = 0; z < q; ++z) {
        const std::array<int, 3> v{x, y, z};
        const auto lead = std::find_if(v.begin(), v.end(), [](int c) { return c != 0; });
        if (lead != v.end() && *lead == 1) triples.push_back(v);
      }

  LabeledSystem out;
  out.labels.name = "plane(" + std::to_string(q) + ")";
  std::vector<Line> lines;
  for (const auto& dual : triples) {
    Line l;
    for (Point i = 0; i < triples.size(); ++i) {
      const auto& pt = triples[i];
      if ((dual[0] * pt[0] + dual[1] * pt[1] + dual[2] * pt[2]) % q == 0) l.push_back(i);
    }
    lines.push_back(std::move(l));
    out.labels.line_labels.push_back(triple_label(dual, '[', ']'));
  }
  for (const auto& pt : triples) out.labels.point_labels.push_back(triple_label(pt, '(', ')'));
  out.system = LinearSystem(triples.size(), std::move(lines));
  return out;
}

std::vector<Triangle> find_triangles(const LinearSystem& s) {
  const std::size_t n = s.num_points();
  constexpr std::size_t kNone = SIZE_MAX;
  std::vector<std::size_t> joining(n * n, kNone);
  for (std::size_t i = 0; i < s.num_lines(); ++i) {
    const auto& l = s.line(i);
    for (std::size_t a = 0; a < l.size(); ++a)
      for (std::size_t b = a + 1; b < l.size(); ++b) {
        joining[l[a] * n + l[b]] = i;
        joining[l[b] * n + l[a]] = i;
      }
  }

  std::vector<Triangle> out;
  for (Point a = 0; a < n; ++a)
    for (Point b = a + 1; b < n; ++b) {
      const auto ab = joining[a * n + b];
      if (ab == kNone) continue;
      for (Point c = b + 1; c < n; ++c) {
        const auto ac = joining[a * n + c];
        const auto bc = joining[b * n + c];
        if (ac == kNone || bc == kNone || ab == ac) continue;
        out.push_back(Triangle{{a, b, c}, {ab, ac, bc}});
      }
    }
  return out;
}

PointDeletion delete_triangle_mapped(const LinearSystem& s, const Triangle& t) {
  const auto& [a, b, c] = t.points;
  const auto on = [&](std::size_t line, Point p) {
    return line < s.num_lines() && std::binary_search(s.line(line).begin(), s.line(line).end(), p);
  };
  const bool ok = a < b && b < c && c < s.num_points() && on(t.lines[0], a) &&
                  on(t.lines[0], b) && on(t.lines[1], a) && on(t.lines[1], c) &&
                  on(t.lines[2], b) && on(t.lines[2], c) && t.lines[0] != t.lines[1];
  if (!ok) throw Error(ErrorCode::NotATriangle, "points/lines do not form a triangle");

  const auto without_lines = delete_lines(s, t.lines);
  auto deletion = delete_points(without_lines, t.points);

  // Map line origins back past the removed triangle lines.
  std::vector<std::size_t> survivors;
  for (std::size_t i = 0; i < s.num_lines(); ++i)
    if (std::find(t.lines.begin(), t.lines.end(), i) == t.lines.end()) survivors.push_back(i);
  for (auto& o : deletion.line_origin) o = survivors[o];
  for (auto& o : deletion.dropped_lines) o = survivors[o];
  return deletion;
}

LinearSystem delete_triangle(const LinearSystem& s, const Triangle& t) {
  return delete_triangle_mapped(s, t).system;
}

LabeledSystem build_C() {
  const auto plane = projective_plane(3);
  const auto triangles = find_triangles(plane.system);
  const auto deletion = delete_triangle_mapped(plane.system, triangles.front());

  LabeledSystem out;
  out.system = deletion.system;
  out.labels.name = "C";
  out.labels.point_labels.resize(out.system.num_points());
  for (std::size_t p = 0; p < deletion.index_map.size(); ++p)
    if (deletion.index_map[p]) out.labels.point_labels[*deletion.index_map[p]] = plane.labels.point_labels[p];
  for (std::size_t o : deletion.line_origin) out.labels.line_labels.push_back(plane.labels.line_labels[o]);
  return out;
}

std::vector<C44Member> enumerate_C44() {
  const auto plane = projective_plane(3);
  const auto& pi3 = plane.system;
  const Triangle t = find_triangles(pi3).front();
  const auto c = delete_triangle_mapped(pi3, t);

  // Embedding of C's points into Pi_3.
  std::vector<Point> c_embed(c.system.num_points());
  for (Point p = 0; p < pi3.num_points(); ++p)
    if (c.index_map[p]) c_embed[*c.index_map[p]] = p;

  std::vector<C44Member> out;
  std::set<std::string> seen;
  for (unsigned point_mask = 0; point_mask < 8; ++point_mask) {
    for (unsigned line_mask = 0; line_mask < 8; ++line_mask) {
      std::vector<bool> keep(pi3.num_points(), true);
      for (int i = 0; i < 3; ++i)
        if (!(point_mask & (1u << i))) keep[t.points[i]] = false;

      std::vector<Point> embed;
      std::vector<Point> local(pi3.num_points(), 0);
      for (Point p = 0; p < pi3.num_points(); ++p)
        if (keep[p]) {
          local[p] = static_cast<Point>(embed.size());
          embed.push_back(p);
        }

      std::vector<Line> lines;
      std::string restored_lines;
      for (std::size_t i = 0; i < pi3.num_lines(); ++i) {
        const auto slot = std::find(t.lines.begin(), t.lines.end(), i) - t.lines.begin();
        if (slot < 3 && !(line_mask & (1u << slot))) continue;
        if (slot < 3) restored_lines += (restored_lines.empty() ? "" : ",") + plane.labels.line_labels[i];
        Line trace;
        for (Point p : pi3.line(i))
          if (keep[p]) trace.push_back(local[p]);
        if (!trace.empty()) lines.push_back(std::move(trace));
      }
      LinearSystem candidate(embed.size(), std::move(lines));

      std::vector<Point> c_in_candidate(c_embed.size());
      for (std::size_t i = 0; i < c_embed.size(); ++i) c_in_candidate[i] = local[c_embed[i]];
      if (!is_linear_subsystem(pi3, embed, candidate) ||
          !is_linear_subsystem(candidate, c_in_candidate, c.system))
        continue;

      if (two_packing_number(candidate).optimum != 4) continue;
      if (!seen.insert(canonical_encoding(candidate)).second) continue;

      std::string restored_points;
      for (int i = 0; i < 3; ++i)
        if (point_mask & (1u << i))
          restored_points += (restored_points.empty() ? "" : ",") + plane.labels.point_labels[t.points[i]];
      out.push_back(C44Member{std::move(candidate), "C + points {" + restored_points +
                                                        "} + lines {" + restored_lines + "}"});
    }
  }
  return out;
}

std::pair<LinearSystem, PaddingRecord> pad_uniform(const LinearSystem& s, std::size_t r) {
  const auto r0 = uniformity(s);
  if (!r0) throw Error(ErrorCode::NotUniform, "padding needs a uniform system");
  if (r < *r0)
    throw Error(ErrorCode::InvalidParameter,
                "target size " + std::to_string(r) + " below line size " + std::to_string(*r0));

  PaddingRecord rec{s, r - *r0, {}};
  auto next = static_cast<Point>(s.num_points());
  std::vector<Line> lines = s.lines();
  for (auto& l : lines) {
    std::vector<Point> added;
    for (std::size_t j = 0; j < rec.k; ++j) added.push_back(next++);
    l.insert(l.end(), added.begin(), added.end());
    rec.added_points.push_back(std::move(added));
  }
  return {LinearSystem(next, std::move(lines)), std::move(rec)};
}

LinearSystem matching(std::size_t m, std::size_t r) {
  if (m < 1 || r < 2) throw Error(ErrorCode::InvalidParameter, "matching needs m >= 1, r >= 2");
  std::vector<Line> lines(m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < r; ++j) lines[i].push_back(static_cast<Point>(i * r + j));
  return LinearSystem(m * r, std::move(lines));
}

LinearSystem star(std::size_t k, std::size_t r) {
  if (k < 1 || r < 2) throw Error(ErrorCode::InvalidParameter, "star needs k >= 1, r >= 2");
  std::vector<Line> lines(k);
  for (std::size_t i = 0; i < k; ++i) {
    lines[i].push_back(0);
    for (std::size_t j = 0; j + 1 < r; ++j)
      lines[i].push_back(static_cast<Point>(1 + i * (r - 1) + j));
  }
  return LinearSystem(1 + k * (r - 1), std::move(lines));
}

LinearSystem cycle_graph(std::size_t m) {
  if (m < 3) throw Error(ErrorCode::InvalidParameter, "cycle needs m >= 3");
  std::vector<Line> lines;
  for (std::size_t i = 0; i < m; ++i)
    lines.push_back({static_cast<Point>(i), static_cast<Point>((i + 1) % m)});
  return LinearSystem(m, std::move(lines));
}

LinearSystem dual_complete(std::size_t m) {
  if (m < 3) throw Error(ErrorCode::InvalidParameter, "dual_complete needs m >= 3");
  std::vector<Line> lines(m);
  Point next = 0;
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b) {
      lines[a].push_back(next);
      lines[b].push_back(next);
      ++next;
    }
  return LinearSystem(next, std::move(lines));
}

LinearSystem random_linear_system(std::size_t num_points, std::size_t num_lines,
                                  std::pair<std::size_t, std::size_t> line_size_range,
                                  std::uint64_t seed) {
  const auto [lo, hi] = line_size_range;
  if (lo < 1 || lo > hi || hi > num_points)
    throw Error(ErrorCode::InvalidParameter, "line size range must satisfy 1 <= min <= max <= points");

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> size_dist(lo, hi);
  std::vector<Point> pool(num_points);
  std::iota(pool.begin(), pool.end(), Point{0});

  std::vector<Line> kept;
  std::size_t rejections = 0;
  while (kept.size() < num_lines) {
    std::shuffle(pool.begin(), pool.end(), rng);
    Line cand(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(size_dist(rng)));
    std::sort(cand.begin(), cand.end());
    const bool fits = std::none_of(kept.begin(), kept.end(), [&](const Line& l) {
      return l == cand || share_two(l, cand);
    });
    if (fits) {
      kept.push_back(std::move(cand));
    } else if (++rejections > kRandomMaxRejections) {
      throw Error(ErrorCode::GenerationExhausted,
                  "kept " + std::to_string(kept.size()) + " of " + std::to_string(num_lines) +
                      " lines before the rejection cap");
    }
  }
  return LinearSystem(num_points, std::move(kept));
}

LinearSystem random_corpus_instance(const RandomFamily& family, std::uint64_t seed) {
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  const auto pick = [&](std::size_t a, std::size_t b) {
    return std::uniform_int_distribution<std::size_t>(a, b)(rng);
  };
  const std::size_t n = pick(family.min_points, family.max_points);
  std::size_t lo = 2, hi = 2;
  if (pick(0, 2) == 0) {
    hi = std::min<std::size_t>(4, n);
  } else {
    lo = hi = std::min<std::size_t>(pick(2, 4), n);
  }
  for (std::size_t m = pick(1, family.max_lines); m >= 1; --m) {
    try {
      return random_linear_system(n, m, {lo, hi}, seed);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::GenerationExhausted) throw;
    }
  }
  return random_linear_system(n, 1, {lo, hi}, seed);
}

}  // namespace linsys
