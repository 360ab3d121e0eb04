// Acceptance run: prints one PASS/FAIL line per criterion and exits nonzero
// if any criterion fails.

#include <array>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "linsys/linsys.hpp"

using namespace linsys;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) detail = what;
    ok = ok && cond;
  }
};

struct Criterion {
  int id;
  std::string title;
  double limit_seconds;
  std::function<Outcome()> body;
};

// ---- 1. construction fidelity ----------------------------------------------

Outcome construction_fidelity() {
  Outcome o;
  for (int n : {3, 5, 7, 9}) {
    const auto start = std::chrono::steady_clock::now();
    const auto s = build_cnn(n).system;
    const auto nn = static_cast<std::size_t>(n);
    const std::string tag = "n=" + std::to_string(n) + ": ";
    o.require(s.num_points() == nn * (nn - 1) + 2, tag + "point count");
    o.require(s.num_lines() == 3 * nn - 1, tag + "line count");
    o.require(uniformity(s) == nn, tag + "not n-uniform");
    std::map<std::size_t, std::size_t> hist, want{{3, nn * (nn - 1)}};
    want[nn] += 2;
    for (auto d : degree_profile(s).per_point_degrees) ++hist[d];
    o.require(hist == want, tag + "degree profile");
    try {
      LinearSystem again(s.num_points(), s.lines());
    } catch (const Error& e) {
      o.require(false, tag + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    o.require(secs < 1.0, tag + "took " + std::to_string(secs) + " s");
  }
  return o;
}

// ---- 2. tau = nu2 = n+1 -----------------------------------------------------

Outcome main_theorem() {
  Outcome o;
  std::ostringstream d;
  for (int n : {3, 5, 7}) {
    const auto s = build_cnn(n).system;
    const auto t = transversal_number(s);
    const auto p = two_packing_number(s);
    const auto want = static_cast<std::size_t>(n + 1);
    d << "n=" << n << " tau=" << t.optimum << " nu2=" << p.optimum << "; ";
    o.require(t.proven_optimal && p.proven_optimal, "n=" + std::to_string(n) + " unproven");
    o.require(t.optimum == want && p.optimum == want, "n=" + std::to_string(n) + " wrong value");
  }
  if (o.ok) o.detail = d.str();
  return o;
}

// ---- 3. equality cases ------------------------------------------------------

Outcome equality_cases() {
  Outcome o;
  for (int n : {3, 5, 7}) {
    const auto base = build_cnn(n).system;
    const std::string tag = "n=" + std::to_string(n);
    o.require(hy_ratio(base) == Rational(n + 1), tag + " ratio");
    for (int k : {0, 1, 2}) {
      const auto s = k == 0 ? base : pad_uniform(base, std::size_t(n + k)).first;
      const Rational want = Rational(n + 1) + Rational(2 * k * (n - 1), n + k + 1);
      const std::string ktag = tag + " k=" + std::to_string(k);
      o.require(hy_ratio(s) == want, ktag + " ratio " + format_rational(hy_ratio(s)));
      const auto t = transversal_number(s);
      const auto p = two_packing_number(s);
      const auto checks = check_hy(s, {t.optimum, t.proven_optimal}, {p.optimum, p.proven_optimal});
      o.require(checks.size() == 1, ktag + " hy check missing");
      const auto want_status = k == 0 ? CheckStatus::Equality : CheckStatus::Pass;
      o.require(checks.front().status == want_status, ktag + " hy status " + to_string(checks.front().status));
    }
  }
  return o;
}

// ---- 4. projective planes ---------------------------------------------------

Outcome projective_planes() {
  Outcome o;
  // Golden values fixed with the brute-force oracle.
  const std::map<int, std::pair<std::size_t, std::size_t>> golden{{2, {3, 4}}, {3, {4, 4}}};
  for (const auto& [q, want] : golden) {
    const auto s = projective_plane(q).system;
    const std::string tag = "q=" + std::to_string(q);
    const std::size_t n = s.num_points();
    o.require(brute_force_tau(s) == want.first && brute_force_nu2(s) == want.second, tag + " oracle");
    bool pairs = true, meets = true;
    for (Point a = 0; a < n; ++a)
      for (Point b = a + 1; b < n; ++b) {
        std::size_t on = 0;
        for (const auto& l : s.lines())
          on += std::binary_search(l.begin(), l.end(), a) && std::binary_search(l.begin(), l.end(), b);
        pairs = pairs && on == 1;
      }
    for (std::size_t a = 0; a < s.num_lines(); ++a)
      for (std::size_t b = a + 1; b < s.num_lines(); ++b)
        meets = meets && intersection_size(s.line(a), s.line(b)) == 1;
    o.require(pairs, tag + " two points on != 1 line");
    o.require(meets, tag + " two lines meet in != 1 point");
    bool general = false;
    for (Point a = 0; a < n && !general; ++a)
      for (Point b = a + 1; b < n && !general; ++b)
        for (Point c = b + 1; c < n && !general; ++c)
          for (Point d = c + 1; d < n && !general; ++d) {
            bool ok = true;
            for (const auto& l : s.lines()) {
              int hits = 0;
              for (Point p : {a, b, c, d}) hits += std::binary_search(l.begin(), l.end(), p);
              ok = ok && hits <= 2;
            }
            general = ok;
          }
    o.require(general, tag + " no 4 points in general position");
    const auto t = transversal_number(s);
    const auto p = two_packing_number(s);
    o.require(t.proven_optimal && t.optimum == want.first, tag + " tau");
    o.require(p.proven_optimal && p.optimum == want.second, tag + " nu2");
  }
  return o;
}

// ---- 5. C and C_{4,4} -------------------------------------------------------

Outcome c_and_c44() {
  Outcome o;
  const auto c = build_C().system;
  std::map<std::size_t, std::size_t> sizes;
  for (const auto& l : c.lines()) ++sizes[l.size()];
  o.require(c.num_points() == 10 && c.num_lines() == 10, "C counts");
  o.require(sizes == std::map<std::size_t, std::size_t>{{3, 6}, {4, 4}}, "C line sizes");
  const auto pi3 = projective_plane(3).system;
  const auto tris = find_triangles(pi3);
  o.require(tris.size() == 234, "triangle count " + std::to_string(tris.size()));
  for (const auto& t : tris) o.require(is_isomorphic(delete_triangle(pi3, t), c), "a triangle deletion is not ~ C");
  const auto members = enumerate_C44();
  for (const auto& m : members) {
    const auto t = transversal_number(m.system);
    const auto p = two_packing_number(m.system);
    o.require(t.proven_optimal && p.proven_optimal && t.optimum == 4 && p.optimum == 4,
              "member " + m.provenance);
  }
  if (o.ok) o.detail = std::to_string(members.size()) + " members of C_{4,4}";
  return o;
}

// ---- 6. oracle equivalence --------------------------------------------------

RandomFamily acceptance_random() { return RandomFamily{6, 12, 12, 200, 1}; }

Outcome oracle_equivalence() {
  Outcome o;
  const auto fam = acceptance_random();
  for (std::uint64_t seed = fam.seed; seed < fam.seed + fam.count; ++seed) {
    const auto s = random_corpus_instance(fam, seed);
    const std::string tag = "seed " + std::to_string(seed);
    o.require(s.num_points() <= 12 && s.num_lines() <= 12, tag + " too large");
    const auto t = transversal_number(s);
    const auto p = two_packing_number(s);
    o.require(t.proven_optimal && t.optimum == brute_force_tau(s), tag + " tau");
    o.require(p.proven_optimal && p.optimum == brute_force_nu2(s), tag + " nu2");
  }
  return o;
}

// ---- 7. inequality suites ---------------------------------------------------

Outcome inequality_suites() {
  Outcome o;
  auto instances = family_instances(ConstructionsFamily{});
  for (auto& i : family_instances(acceptance_random())) instances.push_back(std::move(i));
  const auto report = run_suite(instances);
  std::size_t delta2 = 0, nu2_four = 0, strict = 0;
  for (const auto& inst : report.instances) {
    const auto& sum = inst.summary;
    o.require(sum.tau.proven && sum.nu2.proven, sum.name + " unproven");
    for (const auto& c : inst.checks) {
      if (c.experimental) continue;
      o.require(c.status != CheckStatus::Fail, sum.name + ": " + c.name + " failed");
      o.require(!(c.name == "eq1.lower" && c.status == CheckStatus::SkippedPrecondition), sum.name + " eq1");
      if (c.name == "delta2.construction_bound" && c.status != CheckStatus::SkippedPrecondition) ++delta2;
      if (c.name == "hy.ratio" && sum.r && *sum.r >= 2 && sum.nu2.value == 4 && sum.lines > 4) {
        o.require(c.status == CheckStatus::Pass || c.status == CheckStatus::Equality, sum.name + " hy");
        ++nu2_four;
      }
      if (c.name == "hy.ratio" && sum.r && *sum.r >= 2 && (sum.nu2.value == 2 || sum.nu2.value == 3) && sum.lines > sum.nu2.value) {
        o.require(c.relation == Relation::Lt && c.status == CheckStatus::Pass, sum.name + " not strict");
        ++strict;
      }
    }
  }
  if (o.ok)
    o.detail = std::to_string(report.instances.size()) + " instances, " + std::to_string(delta2) +
               " with max degree 2, " + std::to_string(nu2_four) + " with nu2 = 4, " +
               std::to_string(strict) + " strict";
  return o;
}

// ---- 8. determinism ---------------------------------------------------------

std::string capture(const std::string& args) {
  const std::string cmd = std::string(LINSYS_CLI) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return "<popen failed>";
  std::string out;
  std::array<char, 4096> buf{};
  while (std::size_t n = std::fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  pclose(pipe);
  return out;
}

Outcome determinism() {
  Outcome o;
  const auto dir = fs::temp_directory_path() / "linsys_acceptance";
  fs::create_directories(dir);
  const std::vector<std::pair<std::string, LinearSystem>> inputs{
      {"cnn5.json", build_cnn(5).system},
      {"pi3.json", projective_plane(3).system},
      {"random.json", random_corpus_instance(acceptance_random(), 7)}};
  for (const auto& [name, s] : inputs) {
    const auto path = (dir / name).string();
    write_instance(path, s);
    for (const std::string& sub : {"solve " + path + " --deterministic", "canon " + path}) {
      const auto a = capture(sub);
      const auto b = capture(sub);
      o.require(!a.empty() && a == b, "'" + sub + "' differs between runs");
    }
  }
  fs::remove_all(dir);
  return o;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "construction fidelity of C_{n,n+1}, n = 3,5,7,9", 4.0, construction_fidelity},
      {2, "tau = nu2 = n+1 for C_{n,n+1}, n = 3,5,7", 300.0, main_theorem},
      {3, "ratio equality and strictness after padding", 300.0, equality_cases},
      {4, "projective planes of order 2 and 3", 300.0, projective_planes},
      {5, "C and the C_{4,4} family", 120.0, c_and_c44},
      {6, "solvers match the brute-force oracle on 200 random systems", 120.0, oracle_equivalence},
      {7, "inequality suites on constructions and 200 random systems", 300.0, inequality_suites},
      {8, "solve and canon output is byte-identical across runs", 60.0, determinism},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.body();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.limit_seconds) {
      o.ok = false;
      o.detail = "over time limit of " + std::to_string(int(c.limit_seconds)) + " s";
    }
    failed += !o.ok;
    std::printf("criterion %d: %s  %s  [%.2f s]%s%s\n", c.id, o.ok ? "PASS" : "FAIL", c.title.c_str(), secs,
                o.detail.empty() ? "" : "  ", o.detail.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
