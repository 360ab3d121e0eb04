#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <boost/rational.hpp>

#include "linsys/constructions.hpp"
#include "linsys/solvers.hpp"
#include "linsys/system.hpp"

namespace linsys {

using Rational = boost::rational<std::int64_t>;

/// An optimum together with whether the search proved it.
struct Measured {
  std::size_t value = 0;
  bool proven = false;
};

enum class Relation { Le, Lt, Eq };
enum class CheckStatus { Pass, Fail, Equality, SkippedPrecondition };

struct CheckEntry {
  std::string name;
  Rational lhs;
  Relation relation = Relation::Le;
  Rational rhs;
  CheckStatus status = CheckStatus::Pass;
  // Inputs were not proven optimal; such a check never reports Fail.
  bool unproven = false;
  // Reported but excluded from the overall verdict.
  bool experimental = false;
  std::string note;
};

struct InstanceSummary {
  std::string name;
  std::size_t points = 0;
  std::size_t lines = 0;
  std::optional<std::size_t> r;
  std::size_t delta = 0;
  Measured tau;
  Measured nu2;
  std::uint64_t tau_nodes = 0;
  std::uint64_t nu2_nodes = 0;
};

struct InstanceReport {
  InstanceSummary summary;
  std::vector<CheckEntry> checks;
};

struct CheckReport {
  std::vector<InstanceReport> instances;

  std::size_t failures() const;
  // Any instance or check carrying an unproven input.
  bool any_unproven() const;
};

/// Evaluates `lhs relation rhs`. Unproven inputs that would fail are
/// downgraded to SkippedPrecondition with the unproven flag.
CheckEntry make_check(std::string name, Rational lhs, Relation rel, Rational rhs,
                      bool proven = true, std::string note = {});
CheckEntry skipped(std::string name, std::string why);

/// (|P| + |L|) / (r + 1) for an r-uniform system. Throws NotUniform.
Rational hy_ratio(const LinearSystem& s);

/// ceil(nu2/2) <= tau <= nu2(nu2-1)/2.
std::vector<CheckEntry> check_eq1(const LinearSystem& s, Measured tau, Measured nu2);

/// tau <= (|P|+|L|)/(r+1); strict when nu2 is 2 or 3 and |L| > nu2.
std::vector<CheckEntry> check_hy(const LinearSystem& s, Measured tau, Measured nu2);

/// The maximum-degree-2 chain: ceil(nu2/2) <= tau <= nu2-1, nu2 = |L|, the
/// constructive transversal bound, the floor-ratio chain (uniform only) and
/// the two equality conditions on the residual matching L'.
std::vector<CheckEntry> check_delta2(const LinearSystem& s, Measured tau, Measured nu2);

/// r(r^2-3) tau <= (r-2)(r+1)|P| + (r-1)^2 |L| + r - 1 for r odd >= 3 and
/// maximum degree <= 2. Experimental: see README.
std::vector<CheckEntry> check_dorfling_refined(const LinearSystem& s, Measured tau);

/// For nu2 - 1 <= r: ceil(nu2/2) <= ratio, and tau <= ratio when tau equals
/// ceil(nu2/2).
std::vector<CheckEntry> check_nu2_le_r(const LinearSystem& s, Measured tau, Measured nu2);

/// For maximum degree >= nu2 - 1: nu2 - 1 <= ratio, and tau <= ratio when
/// tau <= nu2 - 1.
std::vector<CheckEntry> check_delta_ge(const LinearSystem& s, Measured tau, Measured nu2);

/// For nu2 = 4, split by maximum degree: degree 3 gives tau = 4 exactly for
/// systems isomorphic to C_{3,4} and tau <= 3 otherwise; degree 4 gives
/// tau = 4 exactly for systems isomorphic to a C_{4,4} member and tau <= 3
/// otherwise; degree >= 5 gives tau <= 3.
std::vector<CheckEntry> check_nu2_four(const LinearSystem& s, Measured tau, Measured nu2);

/// Membership in C_{4,4} up to isomorphism after reduction.
bool in_c44_family(const LinearSystem& s);

struct Instance {
  std::string name;
  LinearSystem system;
  std::optional<std::size_t> expected_tau;
  std::optional<std::size_t> expected_nu2;
};

struct CnnFamily {
  int first = 3;
  int last = 9;
};
struct PlaneFamily {
  std::vector<int> orders{2, 3};
};
struct C44Family {};
// Every desk-scale construction: C_{n,n+1} for n = 3, 5, 7 and their paddings,
// the planes of order 2 and 3, C and the C_{4,4} members, matchings, stars,
// cycles and pairwise-meeting systems.
struct ConstructionsFamily {};
struct FileFamily {
  std::vector<std::string> paths;
};
using Family =
    std::variant<CnnFamily, PlaneFamily, C44Family, ConstructionsFamily, RandomFamily, FileFamily>;

std::vector<Instance> family_instances(const Family& family);

/// Solves one instance and runs every check (skipped ones included).
InstanceReport verify_instance(const Instance& inst, SearchBudget budget = {});

CheckReport run_suite(const Family& family, SearchBudget budget = {});
CheckReport run_suite(const std::vector<Instance>& instances, SearchBudget budget = {});

/// 0 all pass, 1 some proven failure, 3 no failure but something unproven.
int exit_code(const CheckReport& report);

std::string to_string(CheckStatus s);
std::string to_string(Relation r);
std::string format_rational(const Rational& q);

std::string report_text(const CheckReport& report);
std::string report_json(const CheckReport& report);

}  // namespace linsys
