#include <doctest.h>

#include "helpers.hpp"

using namespace linsys;

namespace {

const CheckEntry* find(const std::vector<CheckEntry>& v, const std::string& name) {
  for (const auto& c : v)
    if (c.name == name) return &c;
  return nullptr;
}

Measured exact(std::size_t v) { return {v, true}; }

}  // namespace

TEST_CASE("ratio arithmetic is exact") {
  CHECK(hy_ratio(build_cnn(3).system) == Rational(4));
  CHECK(hy_ratio(build_cnn(7).system) == Rational(8));
  CHECK(hy_ratio(testing::fano()) == Rational(14, 4));
  // (n+1) + 2k(n-1)/(n+k+1) for n = 5, k = 2.
  CHECK(hy_ratio(pad_uniform(build_cnn(5).system, 7).first) == Rational(6) + Rational(16, 8));
  CHECK_THROWS_AS(hy_ratio(LinearSystem(3, {{0, 1}, {2}})), Error);
  CHECK(format_rational(Rational(7, 2)) == "7/2");
  CHECK(format_rational(Rational(4)) == "4");
}

TEST_CASE("make_check statuses") {
  CHECK(make_check("a", 1, Relation::Le, 2).status == CheckStatus::Pass);
  CHECK(make_check("a", 2, Relation::Le, 2).status == CheckStatus::Equality);
  CHECK(make_check("a", 2, Relation::Lt, 2).status == CheckStatus::Fail);
  CHECK(make_check("a", 3, Relation::Eq, 3).status == CheckStatus::Equality);
  const auto soft = make_check("a", 3, Relation::Le, 2, false);
  CHECK(soft.status == CheckStatus::SkippedPrecondition);
  CHECK(soft.unproven);
}

TEST_CASE("Eq. 1 upper bound needs more than two disjoint lines") {
  const auto two = matching(2, 3);
  const auto checks = check_eq1(two, exact(2), exact(2));
  CHECK(find(checks, "eq1.upper")->status == CheckStatus::SkippedPrecondition);
  const auto fano = check_eq1(testing::fano(), exact(3), exact(4));
  for (const auto& c : fano) CHECK(c.status != CheckStatus::Fail);
}

TEST_CASE("HY bound is tight for C_{n,n+1} and strict after padding") {
  const auto c = build_cnn(5).system;
  const auto tight = check_hy(c, exact(6), exact(6));
  CHECK(find(tight, "hy.ratio")->status == CheckStatus::Equality);
  const auto padded = pad_uniform(c, 6).first;
  const auto loose = check_hy(padded, exact(6), exact(6));
  CHECK(find(loose, "hy.ratio")->status == CheckStatus::Pass);
}

TEST_CASE("a wrong tau is caught") {
  // Claiming tau = 5 for C_{3,4} violates the ratio 4.
  const auto checks = check_hy(build_cnn(3).system, exact(5), exact(4));
  CHECK(find(checks, "hy.ratio")->status == CheckStatus::Fail);
}

TEST_CASE("nu2 = 4 split by maximum degree") {
  const auto c34 = check_nu2_four(build_cnn(3).system, exact(4), exact(4));
  REQUIRE_FALSE(c34.empty());
  for (const auto& c : c34) CHECK(c.status != CheckStatus::Fail);
  CHECK(in_c44_family(build_C().system));
  CHECK(in_c44_family(projective_plane(3).system));
  CHECK_FALSE(in_c44_family(build_cnn(3).system));
}

TEST_CASE("delta2 checks on cycles and dual complete systems") {
  for (std::size_t m = 3; m <= 8; ++m) {
    const auto s = cycle_graph(m);
    const auto t = transversal_number(s);
    const auto p = two_packing_number(s);
    for (const auto& c : check_delta2(s, exact(t.optimum), exact(p.optimum)))
      if (!c.experimental) CHECK(c.status != CheckStatus::Fail);
  }
  CHECK(find(check_delta2(testing::fano(), exact(3), exact(4)), "delta2")->status ==
        CheckStatus::SkippedPrecondition);
}

TEST_CASE("suites pass on the constructions") {
  const auto report = run_suite(ConstructionsFamily{});
  CHECK(report.failures() == 0);
  CHECK_FALSE(report.any_unproven());
  CHECK(exit_code(report) == 0);
  for (const auto& inst : report.instances) {
    CAPTURE(inst.summary.name);
    CHECK(inst.summary.tau.proven);
  }
}

TEST_CASE("an unproven solve yields exit code 3") {
  const auto report = run_suite(std::vector<Instance>{{"c56", build_cnn(5).system, {}, {}}},
                                SearchBudget{3, true});
  CHECK(report.any_unproven());
  CHECK(exit_code(report) == 3);
}

TEST_CASE("reports render") {
  const auto report = run_suite(PlaneFamily{{2}});
  const auto text = report_text(report);
  CHECK(text.find("summary:") != std::string::npos);
  const auto json = report_json(report);
  CHECK(json.front() == '{');
}
