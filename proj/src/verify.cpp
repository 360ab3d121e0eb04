#include "linsys/verify.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include <json.hpp>

#include "linsys/io.hpp"
#include "linsys/isomorphism.hpp"

namespace linsys {
namespace {

Rational ceil_half(std::size_t v) { return Rational((static_cast<std::int64_t>(v) + 1) / 2); }

Rational as_rational(std::size_t v) { return Rational(static_cast<std::int64_t>(v)); }

std::int64_t floor_of(const Rational& q) {
  // boost::rational keeps the denominator positive.
  auto n = q.numerator(), d = q.denominator();
  return n >= 0 ? n / d : -((-n + d - 1) / d);
}

// Uniform with r >= 2, else nullopt.
std::optional<std::size_t> uniform_r(const LinearSystem& s) {
  auto r = uniformity(s);
  if (r && *r >= 2) return r;
  return std::nullopt;
}

std::size_t non_isolated_points(const LinearSystem& s) {
  const auto deg = degree_profile(s).per_point_degrees;
  return static_cast<std::size_t>(std::count_if(deg.begin(), deg.end(), [](auto d) { return d > 0; }));
}

}  // namespace

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Equality: return "equality";
    case CheckStatus::SkippedPrecondition: return "skipped-precondition";
  }
  return "?";
}

std::string to_string(Relation r) {
  switch (r) {
    case Relation::Le: return "<=";
    case Relation::Lt: return "<";
    case Relation::Eq: return "=";
  }
  return "?";
}

std::string format_rational(const Rational& q) {
  if (q.denominator() == 1) return std::to_string(q.numerator());
  return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

CheckEntry make_check(std::string name, Rational lhs, Relation rel, Rational rhs, bool proven,
                      std::string note) {
  CheckEntry e{std::move(name), lhs, rel, rhs, CheckStatus::Pass, !proven, false, std::move(note)};
  bool holds = false;
  switch (rel) {
    case Relation::Le: holds = lhs <= rhs; break;
    case Relation::Lt: holds = lhs < rhs; break;
    case Relation::Eq: holds = lhs == rhs; break;
  }
  if (holds) {
    e.status = (lhs == rhs) ? CheckStatus::Equality : CheckStatus::Pass;
  } else {
    e.status = proven ? CheckStatus::Fail : CheckStatus::SkippedPrecondition;
  }
  return e;
}

CheckEntry skipped(std::string name, std::string why) {
  CheckEntry e;
  e.name = std::move(name);
  e.status = CheckStatus::SkippedPrecondition;
  e.note = std::move(why);
  return e;
}

Rational hy_ratio(const LinearSystem& s) {
  const auto r = uniformity(s);
  if (!r) throw Error(ErrorCode::NotUniform, "ratio needs a uniform system");
  return Rational(static_cast<std::int64_t>(s.num_points() + s.num_lines()),
                  static_cast<std::int64_t>(*r + 1));
}

std::vector<CheckEntry> check_eq1(const LinearSystem& s, Measured tau, Measured nu2) {
  const bool proven = tau.proven && nu2.proven;
  std::vector<CheckEntry> out;
  out.push_back(make_check("eq1.lower", ceil_half(nu2.value), Relation::Le, as_rational(tau.value), proven));
  // With nu2 <= 2 and no line beyond the packing, two disjoint lines already
  // need two points while nu2(nu2-1)/2 <= 1.
  if (nu2.value >= 3 || s.num_lines() > nu2.value) {
    const auto v = static_cast<std::int64_t>(nu2.value);
    out.push_back(make_check("eq1.upper", as_rational(tau.value), Relation::Le,
                             Rational(v * (v - 1) / 2), proven));
  } else {
    out.push_back(skipped("eq1.upper", "needs nu2 >= 3 or |L| > nu2"));
  }
  return out;
}

std::vector<CheckEntry> check_hy(const LinearSystem& s, Measured tau, Measured nu2) {
  if (!uniform_r(s)) return {skipped("hy.ratio", "needs an r-uniform system with r >= 2")};
  const bool strict = nu2.proven && (nu2.value == 2 || nu2.value == 3) && s.num_lines() > nu2.value;
  std::string note;
  if (strict) {
    note = "strict: nu2 in {2,3}, |L| > nu2";
  } else if (nu2.value == 4 && s.num_lines() > 4) {
    note = "nu2 = 4, |L| > 4";
  } else if (degree_profile(s).max_degree <= 2) {
    note = "max degree <= 2";
  } else {
    note = "open case";
  }
  return {make_check("hy.ratio", as_rational(tau.value), strict ? Relation::Lt : Relation::Le,
                     hy_ratio(s), tau.proven && nu2.proven, note)};
}

std::vector<CheckEntry> check_delta2(const LinearSystem& s, Measured tau, Measured nu2) {
  const auto deg = degree_profile(s);
  if (deg.max_degree != 2) return {skipped("delta2", "needs maximum degree 2")};

  const bool proven = tau.proven && nu2.proven;
  const auto t = as_rational(tau.value);
  const auto v = static_cast<std::int64_t>(nu2.value);
  std::vector<CheckEntry> out;
  out.push_back(make_check("delta2.nu2_is_lines", Rational(v), Relation::Eq,
                           as_rational(s.num_lines()), nu2.proven));
  out.push_back(make_check("delta2.lower", ceil_half(nu2.value), Relation::Le, t, proven));
  out.push_back(make_check("delta2.upper", t, Relation::Le, Rational(v - 1), proven));

  const auto built = delta2_transversal(s);
  const std::vector<std::size_t> cover(built.transversal.begin(), built.transversal.end());
  out.push_back(make_check("delta2.construction_feasible",
                           Rational(is_transversal(s, cover) ? 1 : 0), Relation::Eq, Rational(1)));
  out.push_back(make_check("delta2.construction_size", as_rational(cover.size()), Relation::Eq,
                           as_rational(s.num_lines() - built.independent.size())));
  out.push_back(make_check("delta2.construction_bound", as_rational(cover.size()), Relation::Le,
                           Rational(v - 1), nu2.proven));

  const auto residual = built.residual_lines.size();
  if (residual <= 1) {
    out.push_back(make_check("delta2.residual_le_1", t, Relation::Eq, ceil_half(nu2.value), proven,
                             "|L'| = " + std::to_string(residual)));
  } else {
    out.push_back(skipped("delta2.residual_le_1", "|L'| = " + std::to_string(residual)));
  }
  if (static_cast<std::int64_t>(residual) == v - 2) {
    out.push_back(make_check("delta2.residual_nu2_minus_2", t, Relation::Eq, Rational(v - 1), proven));
  } else {
    out.push_back(skipped("delta2.residual_nu2_minus_2", "|L'| != nu2 - 2"));
  }

  const auto r = uniform_r(s);
  if (!r) {
    out.push_back(skipped("delta2.ratio", "needs an r-uniform system with r >= 2"));
    return out;
  }
  out.push_back(make_check("delta2.ratio", t, Relation::Le, hy_ratio(s), proven));
  // Isolated points inflate |P| without touching any line, so the floor chain
  // is taken over points that lie on some line.
  const Rational trimmed(static_cast<std::int64_t>(non_isolated_points(s) + s.num_lines()),
                         static_cast<std::int64_t>(*r + 1));
  const Rational floor_ratio(floor_of(trimmed));
  out.push_back(make_check("delta2.floor_lower", ceil_half(nu2.value), Relation::Le, floor_ratio,
                           nu2.proven));
  out.push_back(make_check("delta2.floor_upper", floor_ratio, Relation::Le, Rational(v - 1),
                           nu2.proven));

  if (is_intersecting(s) && nu2.value % 2 == 0 && nu2.value == *r + 1) {
    auto e = make_check("delta2.intersecting_even_equality", t, Relation::Eq, hy_ratio(s), proven);
    e.experimental = true;
    e.note = "tau = ceil(nu2/2) here, while the ratio is (nu2+1)/2";
    out.push_back(std::move(e));
  } else {
    out.push_back(skipped("delta2.intersecting_even_equality",
                          "needs an intersecting system with nu2 even and nu2 = r + 1"));
  }
  return out;
}

std::vector<CheckEntry> check_dorfling_refined(const LinearSystem& s, Measured tau) {
  const auto r = uniformity(s);
  if (!r || *r < 3 || *r % 2 == 0 || degree_profile(s).max_degree > 2)
    return {skipped("dorfling_refined", "needs r odd >= 3 and maximum degree <= 2")};
  const auto rr = static_cast<std::int64_t>(*r);
  const auto n = static_cast<std::int64_t>(s.num_points());
  const auto m = static_cast<std::int64_t>(s.num_lines());
  auto e = make_check("dorfling_refined", Rational(rr * (rr * rr - 3) * static_cast<std::int64_t>(tau.value)),
                      Relation::Le, Rational((rr - 2) * (rr + 1) * n + (rr - 1) * (rr - 1) * m + rr - 1),
                      tau.proven, "n = |P|, m = |L|");
  e.experimental = true;
  return {e};
}

std::vector<CheckEntry> check_nu2_le_r(const LinearSystem& s, Measured tau, Measured nu2) {
  const auto r = uniform_r(s);
  if (!r || nu2.value > *r + 1)
    return {skipped("nu2_le_r", "needs an r-uniform system with nu2 - 1 <= r")};
  const bool proven = tau.proven && nu2.proven;
  const auto ratio = hy_ratio(s);
  std::vector<CheckEntry> out;
  out.push_back(make_check("nu2_le_r.bound", ceil_half(nu2.value), Relation::Le, ratio, nu2.proven));
  if (as_rational(tau.value) == ceil_half(nu2.value)) {
    out.push_back(make_check("nu2_le_r.tau", as_rational(tau.value), Relation::Le, ratio, proven));
  } else {
    out.push_back(skipped("nu2_le_r.tau", "tau != ceil(nu2/2)"));
  }
  return out;
}

std::vector<CheckEntry> check_delta_ge(const LinearSystem& s, Measured tau, Measured nu2) {
  const auto r = uniform_r(s);
  const auto delta = static_cast<std::int64_t>(degree_profile(s).max_degree);
  const auto v = static_cast<std::int64_t>(nu2.value);
  if (!r || delta < v - 1)
    return {skipped("delta_ge", "needs an r-uniform system with max degree >= nu2 - 1")};
  const bool proven = tau.proven && nu2.proven;
  const auto ratio = hy_ratio(s);
  std::vector<CheckEntry> out;
  out.push_back(make_check("delta_ge.bound", Rational(v - 1), Relation::Le, ratio, nu2.proven));
  if (static_cast<std::int64_t>(tau.value) <= v - 1) {
    out.push_back(make_check("delta_ge.tau", as_rational(tau.value), Relation::Le, ratio, proven));
  } else {
    out.push_back(skipped("delta_ge.tau", "tau > nu2 - 1"));
  }
  return out;
}

bool in_c44_family(const LinearSystem& s) {
  static const std::set<std::string> encodings = [] {
    std::set<std::string> out;
    for (const auto& m : enumerate_C44()) out.insert(canonical_encoding(m.system));
    return out;
  }();
  return encodings.count(canonical_encoding(s)) > 0;
}

std::vector<CheckEntry> check_nu2_four(const LinearSystem& s, Measured tau, Measured nu2) {
  const auto delta = degree_profile(s).max_degree;
  if (nu2.value != 4 || delta < 3) return {skipped("nu2_four", "needs nu2 = 4 and max degree >= 3")};
  const bool proven = tau.proven && nu2.proven;
  const auto t = as_rational(tau.value);
  if (delta == 3) {
    static const auto c34 = build_cnn(3).system;
    if (is_isomorphic(s, c34)) return {make_check("nu2_four.delta3", t, Relation::Eq, Rational(4), proven, "~ C_{3,4}")};
    return {make_check("nu2_four.delta3", t, Relation::Le, Rational(3), proven, "not ~ C_{3,4}")};
  }
  if (delta == 4) {
    if (in_c44_family(s)) return {make_check("nu2_four.delta4", t, Relation::Eq, Rational(4), proven, "in C_{4,4}")};
    return {make_check("nu2_four.delta4", t, Relation::Le, Rational(3), proven, "not in C_{4,4}")};
  }
  return {make_check("nu2_four.delta_ge5", t, Relation::Le, Rational(3), proven)};
}

std::vector<Instance> family_instances(const Family& family) {
  std::vector<Instance> out;
  const auto add = [&](std::string name, LinearSystem s, std::optional<std::size_t> tau = {},
                       std::optional<std::size_t> nu2 = {}) {
    out.push_back(Instance{std::move(name), std::move(s), tau, nu2});
  };
  struct Visitor {
    decltype(add)& push;
    void operator()(const CnnFamily& f) const {
      for (int n = f.first; n <= f.last; ++n) {
        if (n % 2 == 0 || n < 3) continue;
        const auto expect = static_cast<std::size_t>(n + 1);
        push("cnn(" + std::to_string(n) + ")", build_cnn(n).system, expect, expect);
      }
    }
    void operator()(const PlaneFamily& f) const {
      for (int q : f.orders) {
        std::optional<std::size_t> tau, nu2;
        if (q == 2) tau = 3, nu2 = 4;
        if (q == 3) tau = 4, nu2 = 4;
        push("plane(" + std::to_string(q) + ")", projective_plane(q).system, tau, nu2);
      }
    }
    void operator()(const C44Family&) const {
      std::size_t i = 0;
      for (auto& m : enumerate_C44())
        push("c44[" + std::to_string(i++) + "] " + m.provenance, std::move(m.system), 4, 4);
    }
    void operator()(const ConstructionsFamily&) const {
      for (int n : {3, 5, 7}) {
        const auto base = build_cnn(n).system;
        const auto expect = static_cast<std::size_t>(n + 1);
        push("cnn(" + std::to_string(n) + ")", base, expect, expect);
        for (int k : {1, 2})
          push("pad(cnn(" + std::to_string(n) + ")," + std::to_string(n + k) + ")",
              pad_uniform(base, static_cast<std::size_t>(n + k)).first, expect, expect);
      }
      (*this)(PlaneFamily{});
      push("C", build_C().system, 4, 4);
      (*this)(C44Family{});
      for (std::size_t r = 2; r <= 4; ++r)
        for (std::size_t m = 1; m <= 4; ++m)
          push("matching(" + std::to_string(m) + "," + std::to_string(r) + ")", matching(m, r), m, m);
      for (std::size_t r = 2; r <= 4; ++r)
        for (std::size_t k = 1; k <= 5; ++k)
          push("star(" + std::to_string(k) + "," + std::to_string(r) + ")", star(k, r), 1,
              std::min<std::size_t>(k, 2));
      for (std::size_t m = 3; m <= 8; ++m)
        push("cycle(" + std::to_string(m) + ")", cycle_graph(m), (m + 1) / 2, m);
      for (std::size_t m = 3; m <= 6; ++m)
        push("dual_complete(" + std::to_string(m) + ")", dual_complete(m), (m + 1) / 2, m);
    }
    void operator()(const RandomFamily& f) const {
      for (std::size_t i = 0; i < f.count; ++i) {
        const auto seed = f.seed + i;
        push("random(" + std::to_string(seed) + ")", random_corpus_instance(f, seed));
      }
    }
    void operator()(const FileFamily& f) const {
      for (const auto& p : f.paths) push(p, read_instance(p));
    }
  };
  std::visit(Visitor{add}, family);
  return out;
}

InstanceReport verify_instance(const Instance& inst, SearchBudget budget) {
  const auto& s = inst.system;
  InstanceReport rep;
  auto& sum = rep.summary;
  sum.name = inst.name;
  sum.points = s.num_points();
  sum.lines = s.num_lines();
  sum.r = uniformity(s);
  sum.delta = degree_profile(s).max_degree;

  const auto tau = transversal_number(s, budget);
  const auto nu2 = two_packing_number(s, budget);
  sum.tau = {tau.optimum, tau.proven_optimal};
  sum.nu2 = {nu2.optimum, nu2.proven_optimal};
  sum.tau_nodes = tau.nodes_explored;
  sum.nu2_nodes = nu2.nodes_explored;

  auto append = [&](std::vector<CheckEntry> v) {
    for (auto& e : v) rep.checks.push_back(std::move(e));
  };
  if (inst.expected_tau)
    append({make_check("expected.tau", as_rational(sum.tau.value), Relation::Eq,
                       as_rational(*inst.expected_tau), sum.tau.proven)});
  if (inst.expected_nu2)
    append({make_check("expected.nu2", as_rational(sum.nu2.value), Relation::Eq,
                       as_rational(*inst.expected_nu2), sum.nu2.proven)});
  append(check_eq1(s, sum.tau, sum.nu2));
  append(check_hy(s, sum.tau, sum.nu2));
  append(check_delta2(s, sum.tau, sum.nu2));
  append(check_dorfling_refined(s, sum.tau));
  append(check_nu2_le_r(s, sum.tau, sum.nu2));
  append(check_delta_ge(s, sum.tau, sum.nu2));
  append(check_nu2_four(s, sum.tau, sum.nu2));
  return rep;
}

CheckReport run_suite(const std::vector<Instance>& instances, SearchBudget budget) {
  CheckReport report;
  for (const auto& inst : instances) report.instances.push_back(verify_instance(inst, budget));
  return report;
}

CheckReport run_suite(const Family& family, SearchBudget budget) {
  return run_suite(family_instances(family), budget);
}

std::size_t CheckReport::failures() const {
  std::size_t n = 0;
  for (const auto& inst : instances)
    for (const auto& c : inst.checks) n += c.status == CheckStatus::Fail && !c.experimental;
  return n;
}

bool CheckReport::any_unproven() const {
  for (const auto& inst : instances) {
    if (!inst.summary.tau.proven || !inst.summary.nu2.proven) return true;
    for (const auto& c : inst.checks)
      if (c.unproven) return true;
  }
  return false;
}

int exit_code(const CheckReport& report) {
  if (report.failures() > 0) return 1;
  if (report.any_unproven()) return 3;
  return 0;
}

std::string report_text(const CheckReport& report) {
  std::ostringstream os;
  std::size_t counts[4] = {0, 0, 0, 0};
  std::size_t total = 0;
  for (const auto& inst : report.instances) {
    const auto& s = inst.summary;
    os << "instance " << s.name << ": points=" << s.points << " lines=" << s.lines
       << " r=" << (s.r ? std::to_string(*s.r) : "-") << " delta=" << s.delta << " tau=" << s.tau.value
       << (s.tau.proven ? "" : "?") << " nu2=" << s.nu2.value << (s.nu2.proven ? "" : "?")
       << " nodes=" << s.tau_nodes << "/" << s.nu2_nodes << "\n";
    for (const auto& c : inst.checks) {
      ++total;
      ++counts[static_cast<int>(c.status)];
      os << "  [" << to_string(c.status) << "] " << c.name;
      if (c.status != CheckStatus::SkippedPrecondition || c.unproven)
        os << ": " << format_rational(c.lhs) << " " << to_string(c.relation) << " "
           << format_rational(c.rhs);
      if (c.unproven) os << " (unproven)";
      if (c.experimental) os << " (experimental)";
      if (!c.note.empty()) os << " -- " << c.note;
      os << "\n";
    }
  }
  os << "summary: instances=" << report.instances.size() << " checks=" << total
     << " pass=" << counts[0] << " equality=" << counts[2] << " fail=" << counts[1]
     << " skipped=" << counts[3] << " counted_failures=" << report.failures()
     << " unproven=" << (report.any_unproven() ? "yes" : "no") << "\n";
  return os.str();
}

std::string report_json(const CheckReport& report) {
  using nlohmann::ordered_json;
  ordered_json doc;
  doc["instances"] = ordered_json::array();
  for (const auto& inst : report.instances) {
    const auto& s = inst.summary;
    ordered_json j;
    j["name"] = s.name;
    j["points"] = s.points;
    j["lines"] = s.lines;
    j["r"] = s.r ? ordered_json(*s.r) : ordered_json(nullptr);
    j["delta"] = s.delta;
    j["tau"] = {{"value", s.tau.value}, {"proven", s.tau.proven}, {"nodes", s.tau_nodes}};
    j["nu2"] = {{"value", s.nu2.value}, {"proven", s.nu2.proven}, {"nodes", s.nu2_nodes}};
    j["checks"] = ordered_json::array();
    for (const auto& c : inst.checks) {
      ordered_json e;
      e["name"] = c.name;
      e["lhs"] = format_rational(c.lhs);
      e["relation"] = to_string(c.relation);
      e["rhs"] = format_rational(c.rhs);
      e["status"] = to_string(c.status);
      e["unproven"] = c.unproven;
      e["experimental"] = c.experimental;
      e["note"] = c.note;
      j["checks"].push_back(std::move(e));
    }
    doc["instances"].push_back(std::move(j));
  }
  doc["failures"] = report.failures();
  doc["unproven"] = report.any_unproven();
  doc["exit_code"] = exit_code(report);
  return doc.dump(2) + "\n";
}

}  // namespace linsys
