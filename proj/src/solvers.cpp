#include "linsys/solvers.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

#include <boost/dynamic_bitset.hpp>

namespace linsys {
namespace {

using Bits = boost::dynamic_bitset<>;

struct BudgetStop {};

class NodeCounter {
 public:
  explicit NodeCounter(std::uint64_t max) : max_(max) {}
  void tick() {
    if (++nodes_ > max_) throw BudgetStop{};
  }
  std::uint64_t nodes() const { return std::min(nodes_, max_); }

 private:
  std::uint64_t max_;
  std::uint64_t nodes_ = 0;
};

std::vector<std::size_t> bits_to_vector(const Bits& b) {
  std::vector<std::size_t> out;
  for (auto i = b.find_first(); i != Bits::npos; i = b.find_next(i)) out.push_back(i);
  return out;
}

class TransversalSearch {
 public:
  TransversalSearch(const LinearSystem& s, NodeCounter& counter)
      : n_(s.num_points()), m_(s.num_lines()), counter_(counter) {
    line_pts_.assign(m_, Bits(n_));
    pt_lines_.assign(n_, Bits(m_));
    for (std::size_t i = 0; i < m_; ++i)
      for (Point p : s.line(i)) {
        line_pts_[i].set(p);
        pt_lines_[p].set(i);
      }
  }

  // Line-branching search for the optimum, seeded with a feasible incumbent.
  void minimize(std::vector<std::size_t> incumbent) {
    best_ = std::move(incumbent);
    std::vector<std::size_t> chosen;
    branch_lines(Bits(m_), Bits(n_), chosen);
  }

  const std::vector<std::size_t>& best() const { return best_; }

  // Point-ordered include-first search for the lexicographically least
  // transversal of size `target`.
  std::optional<std::vector<std::size_t>> least_of_size(std::size_t target) {
    suffix_.assign(n_ + 1, Bits(n_));
    for (std::size_t i = n_; i-- > 0;) {
      suffix_[i] = suffix_[i + 1];
      suffix_[i].set(i);
    }
    std::vector<std::size_t> chosen;
    if (branch_points(0, Bits(m_), chosen, target)) return chosen;
    return std::nullopt;
  }

 private:
  // Size of a greedy packing of uncovered lines whose available points are
  // pairwise disjoint; nullopt if some uncovered line has no available point.
  std::optional<std::size_t> packing_bound(const Bits& covered, const Bits& available) const {
    std::vector<std::pair<std::size_t, std::size_t>> order;  // (count, line)
    for (std::size_t i = 0; i < m_; ++i) {
      if (covered.test(i)) continue;
      const auto c = (line_pts_[i] & available).count();
      if (c == 0) return std::nullopt;
      order.emplace_back(c, i);
    }
    std::sort(order.begin(), order.end());
    Bits used(n_);
    std::size_t lb = 0;
    for (auto [c, i] : order) {
      Bits avail = line_pts_[i] & available;
      if (!avail.intersects(used)) {
        ++lb;
        used |= avail;
      }
    }
    return lb;
  }

  void branch_lines(const Bits& covered, Bits excluded, std::vector<std::size_t>& chosen) {
    counter_.tick();
    if (covered.all()) {
      if (chosen.size() < best_.size()) {
        best_ = chosen;
        std::sort(best_.begin(), best_.end());
      }
      return;
    }
    Bits available = ~excluded;
    const auto lb = packing_bound(covered, available);
    if (!lb || chosen.size() + *lb >= best_.size()) return;

    std::size_t line = m_, fewest = n_ + 1;
    for (std::size_t i = 0; i < m_; ++i) {
      if (covered.test(i)) continue;
      const auto c = (line_pts_[i] & available).count();
      if (c < fewest) {
        fewest = c;
        line = i;
      }
    }

    const Bits uncovered = ~covered;
    const auto candidates = bits_to_vector(line_pts_[line] & available);
    std::vector<Bits> gain;
    gain.reserve(candidates.size());
    for (auto p : candidates) gain.push_back(pt_lines_[p] & uncovered);

    for (std::size_t a = 0; a < candidates.size(); ++a) {
      const auto p = candidates[a];
      bool dominated = false;
      for (std::size_t b = 0; b < candidates.size() && !dominated; ++b) {
        if (a == b) continue;
        dominated = gain[a].is_subset_of(gain[b]) && (gain[a] != gain[b] || b < a);
      }
      if (!dominated) {
        chosen.push_back(p);
        branch_lines(covered | pt_lines_[p], excluded, chosen);
        chosen.pop_back();
      }
      excluded.set(p);
    }
  }

  bool branch_points(std::size_t from, const Bits& covered, std::vector<std::size_t>& chosen,
                     std::size_t target) {
    counter_.tick();
    if (covered.all()) return true;
    if (chosen.size() >= target) return false;
    const auto lb = packing_bound(covered, suffix_[from]);
    if (!lb || chosen.size() + *lb > target) return false;

    // Next point that still hits an uncovered line.
    const Bits uncovered = ~covered;
    std::size_t p = from;
    while (p < n_ && !pt_lines_[p].intersects(uncovered)) ++p;
    if (p == n_) return false;

    chosen.push_back(p);
    if (branch_points(p + 1, covered | pt_lines_[p], chosen, target)) return true;
    chosen.pop_back();
    return branch_points(p + 1, covered, chosen, target);
  }

  std::size_t n_, m_;
  NodeCounter& counter_;
  std::vector<Bits> line_pts_, pt_lines_, suffix_;
  std::vector<std::size_t> best_;
};

class PackingSearch {
 public:
  PackingSearch(const LinearSystem& s, NodeCounter& counter)
      : s_(s), usage_(s.num_points(), 0), counter_(counter) {}

  void run() {
    std::vector<std::size_t> chosen;
    branch(0, chosen);
  }

  const std::vector<std::size_t>& best() const { return best_; }

 private:
  bool addable(std::size_t i) const {
    return std::all_of(s_.line(i).begin(), s_.line(i).end(),
                       [&](Point p) { return usage_[p] < 2; });
  }

  void branch(std::size_t i, std::vector<std::size_t>& chosen) {
    counter_.tick();
    std::size_t open = 0;
    for (std::size_t j = i; j < s_.num_lines(); ++j) open += addable(j);
    if (open == 0) {
      if (chosen.size() > best_.size()) best_ = chosen;
      return;
    }
    if (chosen.size() + open <= best_.size()) return;
    while (!addable(i)) ++i;

    for (Point p : s_.line(i)) ++usage_[p];
    chosen.push_back(i);
    branch(i + 1, chosen);
    chosen.pop_back();
    for (Point p : s_.line(i)) --usage_[p];

    branch(i + 1, chosen);
  }

  const LinearSystem& s_;
  std::vector<std::uint8_t> usage_;
  NodeCounter& counter_;
  std::vector<std::size_t> best_;
};

}  // namespace

std::vector<Point> greedy_transversal(const LinearSystem& s) {
  const auto through = point_lines(s);
  std::vector<bool> covered(s.num_lines(), false);
  std::size_t remaining = s.num_lines();
  std::vector<Point> out;
  while (remaining > 0) {
    Point pick = 0;
    std::size_t most = 0;
    for (Point p = 0; p < s.num_points(); ++p) {
      std::size_t c = 0;
      for (auto i : through[p]) c += !covered[i];
      if (c > most) {
        most = c;
        pick = p;
      }
    }
    for (auto i : through[pick]) {
      if (!covered[i]) --remaining;
      covered[i] = true;
    }
    out.push_back(pick);
  }
  std::sort(out.begin(), out.end());
  return out;
}

SolveResult transversal_number(const LinearSystem& s, SearchBudget budget) {
  if (budget.max_nodes < 1) throw Error(ErrorCode::InvalidParameter, "budget must be >= 1 node");
  NodeCounter counter(budget.max_nodes);
  TransversalSearch search(s, counter);
  const auto greedy = greedy_transversal(s);

  SolveResult r;
  try {
    search.minimize(std::vector<std::size_t>(greedy.begin(), greedy.end()));
    r.proven_optimal = true;
  } catch (const BudgetStop&) {
  }
  r.witness = search.best();
  r.optimum = r.witness.size();

  if (r.proven_optimal && budget.deterministic) {
    try {
      if (auto least = search.least_of_size(r.optimum)) r.witness = std::move(*least);
    } catch (const BudgetStop&) {
      // Optimum stands; the witness is just not the least one.
    }
  }
  r.nodes_explored = counter.nodes();
  return r;
}

SolveResult two_packing_number(const LinearSystem& s, SearchBudget budget) {
  if (budget.max_nodes < 1) throw Error(ErrorCode::InvalidParameter, "budget must be >= 1 node");
  NodeCounter counter(budget.max_nodes);
  PackingSearch search(s, counter);
  SolveResult r;
  try {
    search.run();
    r.proven_optimal = true;
  } catch (const BudgetStop&) {
  }
  r.witness = search.best();
  r.optimum = r.witness.size();
  r.nodes_explored = counter.nodes();
  return r;
}

namespace {

// Lexicographically least maximum independent set of `vertices` in the graph
// given by `adjacent`.
std::vector<Point> maximum_independent(const std::vector<Point>& vertices,
                                       const std::vector<Bits>& adjacent) {
  const std::size_t k = vertices.size();
  std::vector<std::size_t> best, cur;
  auto go = [&](auto&& self, std::size_t i, const Bits& blocked) -> void {
    std::size_t free = 0;
    for (std::size_t j = i; j < k; ++j) free += !blocked.test(j);
    if (free == 0) {
      if (cur.size() > best.size()) best = cur;
      return;
    }
    if (cur.size() + free <= best.size()) return;
    while (blocked.test(i)) ++i;
    cur.push_back(i);
    self(self, i + 1, blocked | adjacent[i]);
    cur.pop_back();
    self(self, i + 1, blocked);
  };
  go(go, 0, Bits(k));
  std::vector<Point> out;
  for (auto i : best) out.push_back(vertices[i]);
  return out;
}

}  // namespace

Delta2Transversal delta2_transversal(const LinearSystem& s, IndependentChoice choice) {
  const auto deg = degree_profile(s);
  if (deg.max_degree != 2)
    throw Error(ErrorCode::PreconditionViolated,
                "maximum degree is " + std::to_string(deg.max_degree) + ", not 2");

  std::vector<Point> doubles;
  for (Point p = 0; p < s.num_points(); ++p)
    if (deg.per_point_degrees[p] == 2) doubles.push_back(p);

  const auto through = point_lines(s);
  std::vector<Bits> adjacent(doubles.size(), Bits(doubles.size()));
  for (std::size_t a = 0; a < doubles.size(); ++a)
    for (std::size_t b = 0; b < doubles.size(); ++b) {
      if (a == b) continue;
      const auto& la = through[doubles[a]];
      const auto& lb = through[doubles[b]];
      for (auto i : la)
        if (std::find(lb.begin(), lb.end(), i) != lb.end()) adjacent[a].set(b);
    }

  Delta2Transversal out;
  if (choice == IndependentChoice::Maximum) {
    out.independent = maximum_independent(doubles, adjacent);
  } else {
    Bits blocked(doubles.size());
    for (std::size_t a = 0; a < doubles.size(); ++a) {
      if (blocked.test(a)) continue;
      out.independent.push_back(doubles[a]);
      blocked |= adjacent[a];
    }
  }

  std::vector<bool> hit(s.num_lines(), false);
  for (Point a : out.independent)
    for (auto i : through[a]) hit[i] = true;
  for (std::size_t i = 0; i < s.num_lines(); ++i)
    if (!hit[i]) {
      out.residual_lines.push_back(i);
      out.residual_cover.push_back(s.line(i).front());
    }
  out.transversal = out.independent;
  out.transversal.insert(out.transversal.end(), out.residual_cover.begin(), out.residual_cover.end());
  std::sort(out.transversal.begin(), out.transversal.end());
  out.transversal.erase(std::unique(out.transversal.begin(), out.transversal.end()),
                        out.transversal.end());
  return out;
}

bool is_transversal(const LinearSystem& s, std::span<const std::size_t> points) {
  std::vector<bool> in(s.num_points(), false);
  for (auto p : points) {
    if (p >= s.num_points()) return false;
    in[p] = true;
  }
  return std::all_of(s.lines().begin(), s.lines().end(), [&](const Line& l) {
    return std::any_of(l.begin(), l.end(), [&](Point p) { return in[p]; });
  });
}

bool is_two_packing(const LinearSystem& s, std::span<const std::size_t> lines) {
  std::vector<int> usage(s.num_points(), 0);
  std::vector<bool> seen(s.num_lines(), false);
  for (auto i : lines) {
    if (i >= s.num_lines() || seen[i]) return false;
    seen[i] = true;
    for (Point p : s.line(i))
      if (++usage[p] > 2) return false;
  }
  return true;
}

}  // namespace linsys
