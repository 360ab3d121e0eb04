#include "linsys/isomorphism.hpp"

#include <algorithm>
#include <optional>
#include <utility>

#include "linsys/io.hpp"

namespace linsys {
namespace {

using Colouring = std::vector<std::uint32_t>;

// Incidence graph: vertices 0..n-1 are points, n..n+m-1 are lines.
class Canonizer {
 public:
  Canonizer(const LinearSystem& s, std::uint64_t max_nodes)
      : sys_(s), n_(s.num_points()), max_nodes_(max_nodes) {
    adj_.resize(n_ + s.num_lines());
    for (std::size_t i = 0; i < s.num_lines(); ++i)
      for (Point p : s.line(i)) {
        adj_[p].push_back(static_cast<std::uint32_t>(n_ + i));
        adj_[n_ + i].push_back(p);
      }
  }

  CanonicalForm run() {
    Colouring c(adj_.size());
    for (std::size_t v = 0; v < c.size(); ++v) c[v] = v < n_ ? 0 : 1;
    search(std::move(c));
    return CanonicalForm{LinearSystem(n_, std::move(*best_)), nodes_};
  }

 private:
  template <class KeyFn>
  static Colouring rank(const Colouring& c, KeyFn key) {
    using Key = decltype(key(std::size_t{0}));
    std::vector<std::pair<Key, std::size_t>> keyed;
    keyed.reserve(c.size());
    for (std::size_t v = 0; v < c.size(); ++v) keyed.emplace_back(key(v), v);
    std::sort(keyed.begin(), keyed.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    Colouring out(c.size());
    std::uint32_t colour = 0;
    for (std::size_t i = 0; i < keyed.size(); ++i) {
      if (i > 0 && keyed[i - 1].first < keyed[i].first) ++colour;
      out[keyed[i].second] = colour;
    }
    return out;
  }

  static std::size_t count_colours(const Colouring& c) {
    if (c.empty()) return 0;
    return *std::max_element(c.begin(), c.end()) + 1;
  }

  // Equitable refinement: split cells by the multiset of neighbour colours.
  Colouring refine(Colouring c) const {
    std::size_t classes = count_colours(c);
    while (true) {
      Colouring next = rank(c, [&](std::size_t v) {
        std::vector<std::uint32_t> nb;
        nb.reserve(adj_[v].size());
        for (auto u : adj_[v]) nb.push_back(c[u]);
        std::sort(nb.begin(), nb.end());
        return std::make_pair(c[v], std::move(nb));
      });
      const std::size_t k = count_colours(next);
      if (k == classes) return c;
      classes = k;
      c = std::move(next);
    }
  }

  void search(Colouring c) {
    if (++nodes_ > max_nodes_)
      throw Error(ErrorCode::SearchBudgetExceeded,
                  "canonical labeling exceeded " + std::to_string(max_nodes_) + " nodes");
    c = refine(std::move(c));

    // First non-singleton point cell, by colour.
    std::vector<std::uint32_t> size(count_colours(c), 0);
    for (std::size_t p = 0; p < n_; ++p) ++size[c[p]];
    std::optional<std::uint32_t> target;
    for (std::size_t p = 0; p < n_; ++p)
      if (size[c[p]] > 1 && (!target || c[p] < *target)) target = c[p];

    if (!target) {
      leaf(c);
      return;
    }
    for (std::size_t v = 0; v < n_; ++v) {
      if (c[v] != *target) continue;
      search(rank(c, [&](std::size_t u) { return std::make_pair(c[u], u == v ? 0 : 1); }));
    }
  }

  void leaf(const Colouring& c) {
    std::vector<Line> lines;
    lines.reserve(sys_.num_lines());
    for (const auto& l : sys_.lines()) {
      Line mapped;
      mapped.reserve(l.size());
      for (Point p : l) mapped.push_back(c[p]);
      std::sort(mapped.begin(), mapped.end());
      lines.push_back(std::move(mapped));
    }
    std::sort(lines.begin(), lines.end());
    if (!best_ || lines < *best_) best_ = std::move(lines);
  }

  const LinearSystem& sys_;
  std::size_t n_;
  std::uint64_t max_nodes_;
  std::uint64_t nodes_ = 0;
  std::vector<std::vector<std::uint32_t>> adj_;
  std::optional<std::vector<Line>> best_;
};

}  // namespace

CanonicalForm canonical_form(const LinearSystem& s, std::uint64_t max_nodes) {
  const auto reduced = reduce(s);
  return Canonizer(reduced.system, max_nodes).run();
}

std::string canonical_encoding(const LinearSystem& s, std::uint64_t max_nodes) {
  return to_instance_text(canonical_form(s, max_nodes).system);
}

bool is_isomorphic(const LinearSystem& a, const LinearSystem& b, std::uint64_t max_nodes) {
  const auto ra = reduce(a).system;
  const auto rb = reduce(b).system;
  if (ra.num_points() != rb.num_points() || ra.num_lines() != rb.num_lines() ||
      ra.incidences() != rb.incidences())
    return false;
  auto da = degree_profile(ra).per_point_degrees;
  auto db = degree_profile(rb).per_point_degrees;
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return false;
  return Canonizer(ra, max_nodes).run().system == Canonizer(rb, max_nodes).run().system;
}

}  // namespace linsys
