// linsys: generate, solve, verify and compare linear systems.
//
// Exit codes: 0 success/pass, 1 verified failure (or not isomorphic),
// 2 usage or input error, 3 undecided/unproven.

#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "linsys/linsys.hpp"

namespace fs = std::filesystem;
using namespace linsys;

namespace {

constexpr int kUsageError = 2;
constexpr int kUndecided = 3;

ConstructionLabeling generic_labels(const std::string& name, const LinearSystem& s) {
  ConstructionLabeling l{name, {}, {}};
  for (std::size_t i = 0; i < s.num_points(); ++i) l.point_labels.push_back("x" + std::to_string(i));
  for (std::size_t i = 0; i < s.num_lines(); ++i) l.line_labels.push_back("l" + std::to_string(i));
  return l;
}

void emit(const std::string& out, const LinearSystem& s, const ConstructionLabeling& labels) {
  if (out.empty()) {
    std::cout << to_instance_text(s);
    return;
  }
  write_labeled_instance(out, s, labels);
  std::cout << "wrote " << out << " (" << s.num_points() << " points, " << s.num_lines()
            << " lines)\n";
}

std::string join(const std::vector<std::size_t>& v) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << "]";
  return os.str();
}

struct GenOptions {
  std::string construction;
  int n = 3;
  int q = 2;
  std::size_t m = 1, k = 1, r = 3;
  std::size_t points = 9, lines = 6, min_size = 3, max_size = 3;
  std::uint64_t seed = 1;
  std::string in;
  std::string out;
};

int run_gen(const GenOptions& o) {
  const auto& c = o.construction;
  if (c == "cnn") {
    auto b = build_cnn(o.n);
    emit(o.out, b.system, b.labels);
  } else if (c == "plane") {
    auto b = projective_plane(o.q);
    emit(o.out, b.system, b.labels);
  } else if (c == "C") {
    auto b = build_C();
    emit(o.out, b.system, b.labels);
  } else if (c == "c44") {
    const auto members = enumerate_C44();
    if (o.out.empty()) {
      for (const auto& m : members) std::cout << to_instance_text(m.system);
      return 0;
    }
    fs::create_directories(o.out);
    for (std::size_t i = 0; i < members.size(); ++i) {
      char name[32];
      std::snprintf(name, sizeof name, "c44_%02zu.json", i);
      auto labels = generic_labels(members[i].provenance, members[i].system);
      write_labeled_instance(fs::path(o.out) / name, members[i].system, labels);
    }
    std::cout << "wrote " << members.size() << " members to " << o.out << "\n";
  } else if (c == "matching") {
    const auto s = matching(o.m, o.r);
    emit(o.out, s, generic_labels("matching", s));
  } else if (c == "star") {
    const auto s = star(o.k, o.r);
    emit(o.out, s, generic_labels("star", s));
  } else if (c == "random") {
    const auto s = random_linear_system(o.points, o.lines, {o.min_size, o.max_size}, o.seed);
    emit(o.out, s, generic_labels("random", s));
  } else if (c == "pad") {
    if (o.in.empty()) throw Error(ErrorCode::InvalidParameter, "pad needs --in");
    const auto base = read_instance(o.in);
    auto [s, rec] = pad_uniform(base, o.r);
    auto labels = generic_labels("pad", s);
    for (std::size_t i = 0; i < rec.added_points.size(); ++i)
      for (std::size_t j = 0; j < rec.added_points[i].size(); ++j)
        labels.point_labels[rec.added_points[i][j]] =
            "pad(" + std::to_string(i) + "," + std::to_string(j) + ")";
    emit(o.out, s, labels);
  } else {
    throw Error(ErrorCode::InvalidParameter, "unknown construction '" + c + "'");
  }
  return 0;
}

int run_solve(const std::string& in, const std::string& what, std::uint64_t budget,
              bool deterministic) {
  const auto s = read_instance(in);
  const SearchBudget b{budget, deterministic};
  bool proven = true;
  if (what == "tau" || what == "both") {
    const auto r = transversal_number(s, b);
    std::cout << "tau=" << r.optimum << " witness=" << join(r.witness)
              << " nodes=" << r.nodes_explored << " proven=" << (r.proven_optimal ? "yes" : "no") << "\n";
    proven = proven && r.proven_optimal;
  }
  if (what == "nu2" || what == "both") {
    const auto r = two_packing_number(s, b);
    std::cout << "nu2=" << r.optimum << " witness=" << join(r.witness)
              << " nodes=" << r.nodes_explored << " proven=" << (r.proven_optimal ? "yes" : "no") << "\n";
    proven = proven && r.proven_optimal;
  }
  return proven ? 0 : kUndecided;
}

struct VerifyOptions {
  std::vector<std::string> files;
  std::string family;
  std::string range = "3..9";
  std::vector<int> orders{2, 3};
  std::size_t count = 100;
  std::uint64_t seed = 1;
  std::size_t min_points = 6, max_points = 12, max_lines = 12;
  std::string format = "text";
  std::uint64_t budget = kDefaultSolverNodes;
};

CnnFamily parse_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      const int v = std::stoi(text);
      return {v, v};
    }
    return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
  } catch (const std::exception&) {
    throw Error(ErrorCode::InvalidParameter, "range must look like 3..9, got '" + text + "'");
  }
}

int run_verify(const VerifyOptions& o) {
  Family family;
  if (!o.files.empty() && !o.family.empty())
    throw Error(ErrorCode::InvalidParameter, "give files or --family, not both");
  if (!o.files.empty()) {
    family = FileFamily{o.files};
  } else if (o.family == "cnn") {
    family = parse_range(o.range);
  } else if (o.family == "planes") {
    family = PlaneFamily{o.orders};
  } else if (o.family == "c44") {
    family = C44Family{};
  } else if (o.family == "constructions") {
    family = ConstructionsFamily{};
  } else if (o.family == "random") {
    family = RandomFamily{o.min_points, o.max_points, o.max_lines, o.count, o.seed};
  } else {
    throw Error(ErrorCode::InvalidParameter, "need instance files or a known --family");
  }
  const auto report = run_suite(family, SearchBudget{o.budget, true});
  std::cout << (o.format == "json" ? report_json(report) : report_text(report));
  return exit_code(report);
}

int run_iso(const std::string& a, const std::string& b, std::uint64_t budget) {
  const auto sa = read_instance(a);
  const auto sb = read_instance(b);
  try {
    const bool iso = is_isomorphic(sa, sb, budget);
    std::cout << (iso ? "isomorphic" : "not-isomorphic") << "\n";
    return iso ? 0 : 1;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::SearchBudgetExceeded) throw;
    std::cout << "undecided\n";
    return kUndecided;
  }
}

int run_canon(const std::string& in, std::uint64_t budget) {
  std::cout << canonical_encoding(read_instance(in), budget);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Linear systems: constructions, transversal and 2-packing numbers, checks"};
  app.require_subcommand(1);

  GenOptions gen;
  auto* g = app.add_subcommand("gen", "Generate an instance file and labeling sidecar");
  g->add_option("construction", gen.construction, "cnn|plane|C|c44|matching|star|random|pad")
      ->required()
      ->check(CLI::IsMember({"cnn", "plane", "C", "c44", "matching", "star", "random", "pad"}));
  g->add_option("--n", gen.n, "order of C_{n,n+1} (odd, >= 3)");
  g->add_option("--q", gen.q, "plane order (prime)");
  g->add_option("--m", gen.m, "matching size");
  g->add_option("--k", gen.k, "star size");
  g->add_option("--r", gen.r, "line size (matching, star, pad target)");
  g->add_option("--points", gen.points, "random: number of points");
  g->add_option("--lines", gen.lines, "random: number of lines");
  g->add_option("--min-size", gen.min_size, "random: smallest line");
  g->add_option("--max-size", gen.max_size, "random: largest line");
  g->add_option("--seed", gen.seed, "random: seed");
  g->add_option("--in", gen.in, "pad: base instance file");
  g->add_option("--out", gen.out, "output file (directory for c44); stdout if omitted");

  std::string solve_in, what = "both";
  std::uint64_t solve_budget = kDefaultSolverNodes;
  bool deterministic = false;
  auto* s = app.add_subcommand("solve", "Compute tau and/or nu2 exactly");
  s->add_option("instance", solve_in, "instance file")->required();
  s->add_option("--what", what, "tau|nu2|both")->check(CLI::IsMember({"tau", "nu2", "both"}));
  s->add_option("--budget", solve_budget, "node cap per search")->check(CLI::PositiveNumber);
  s->add_flag("--deterministic", deterministic, "return the lexicographically least witness");

  VerifyOptions ver;
  auto* v = app.add_subcommand("verify", "Run every applicable check and report");
  v->add_option("instances", ver.files, "instance files");
  v->add_option("--family", ver.family, "cnn|planes|c44|constructions|random");
  v->add_option("--range", ver.range, "cnn: odd n range, e.g. 3..7");
  v->add_option("--q", ver.orders, "planes: orders")->delimiter(',');
  v->add_option("--count", ver.count, "random: number of instances");
  v->add_option("--seed", ver.seed, "random: first seed");
  v->add_option("--min-points", ver.min_points, "random: fewest points");
  v->add_option("--max-points", ver.max_points, "random: most points");
  v->add_option("--max-lines", ver.max_lines, "random: most lines");
  v->add_option("--format", ver.format, "text|json")->check(CLI::IsMember({"text", "json"}));
  v->add_option("--budget", ver.budget, "node cap per search")->check(CLI::PositiveNumber);

  std::string iso_a, iso_b;
  std::uint64_t iso_budget = kDefaultIsoNodes;
  auto* iso = app.add_subcommand("iso", "Isomorphism after deleting points of degree <= 1");
  iso->add_option("a", iso_a, "first instance")->required();
  iso->add_option("b", iso_b, "second instance")->required();
  iso->add_option("--budget", iso_budget, "search tree node cap")->check(CLI::PositiveNumber);

  std::string canon_in;
  std::uint64_t canon_budget = kDefaultIsoNodes;
  auto* canon = app.add_subcommand("canon", "Print the canonical form of the reduced system");
  canon->add_option("instance", canon_in, "instance file")->required();
  canon->add_option("--budget", canon_budget, "search tree node cap")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsageError;
  }

  try {
    if (*g) return run_gen(gen);
    if (*s) return run_solve(solve_in, what, solve_budget, deterministic);
    if (*v) return run_verify(ver);
    if (*iso) return run_iso(iso_a, iso_b, iso_budget);
    if (*canon) return run_canon(canon_in, canon_budget);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == ErrorCode::SearchBudgetExceeded ? kUndecided : kUsageError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  }
  return kUsageError;
}
