#pragma once

// Machine-checked replay of the identities, orders and generation
// certificates behind the two-periodic-generator theorems.  Every passing
// check is an exact discrete assertion: group equality through the action
// oracle, an integer order, a coset-enumeration index, a matrix identity,
// or an identity in (Z/2)^2.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "emcg/dnb_action.hpp"
#include "emcg/todd_coxeter.hpp"

namespace emcg {

enum class CheckStatus { pass, fail, overflow, skipped };

std::string to_string(CheckStatus s);

struct CheckResult {
  std::string id;
  std::string statement;
  CheckStatus status = CheckStatus::fail;
  std::optional<std::string> witness;
  double millis = 0.0;
};

using CheckResults = std::vector<CheckResult>;

struct HarnessConfig {
  EnumerationLimits enumeration;
  ActionLimits action;
  int order_cap = 0;  // 0: 4n
  /// Meet-in-the-middle search for t a0 as a word in a, b.
  bool search_ta0_witness = true;
  int witness_radius = 10;
  std::size_t witness_budget = 200'000;
};

CheckResults verify_presentation(int n, const HarnessConfig& config = {});
CheckResults verify_prop22(int n, const HarnessConfig& config = {});
CheckResults verify_section3(int n, const HarnessConfig& config = {});
CheckResults verify_lemma_y(int n, const HarnessConfig& config = {});
CheckResults verify_lemma_z(int n, const HarnessConfig& config = {});
CheckResults verify_main_even(int n, const HarnessConfig& config = {});
CheckResults verify_odd(int n, const HarnessConfig& config = {});
CheckResults verify_n4(const HarnessConfig& config = {});
CheckResults verify_sigma2(const HarnessConfig& config = {});

/// Number of distinct group elements reached by closing {1} under right
/// multiplication by the generators, with classes separated by the oracle
/// (pairwise equal_in_group).  nullopt when more than max_elements appear.
std::optional<std::size_t> cayley_closure_order(int n, Flavor flavor,
                                                std::size_t max_elements = 1000);

/// Shortest word in a, b of length <= 2 * radius equal to t a0, found by
/// meeting two balls of the given radius (deduplicated by outer class,
/// at most `budget` elements).  Returned in the expression grammar, e.g.
/// "a b^-1 a"; nullopt when nothing is found.
std::optional<std::string> find_ta0_witness(int n, int radius, std::size_t budget);

enum class Suite {
  presentation,
  prop22,
  section3,
  lemma_y,
  lemma_z,
  main,
  odd,
  n4,
  sigma2,
  all,
};

/// Accepts the CLI names (presentation, prop22, section3, lemma-y, lemma-z,
/// main, odd, n4, sigma2, all); throws std::invalid_argument.
Suite parse_suite(std::string_view name);
/// Whether the suite accepts this n (n-independent suites accept any n).
bool suite_applies(Suite suite, int n);
bool suite_uses_n(Suite suite);

CheckResults run_suite(Suite suite, int n, const HarnessConfig& config = {});

struct Report {
  int version = 1;
  CheckResults checks;  // sorted by id

  /// 0 all pass, 1 any fail, 2 only overflows (beyond the tolerated ones).
  int exit_code() const;
  bool passed() const { return exit_code() == 0; }
};

/// Overflow is tolerated for enumeration checks at n > 6.
bool overflow_tolerated(const CheckResult& r);

Report make_report(CheckResults checks);

/// Every applicable suite for each n, plus the n-independent n4 and
/// sigma2 suites.
Report full_report(const std::vector<int>& ns, const HarnessConfig& config = {});

/// {version, checks: [{id, statement, status, witness, millis}]}
std::string to_json(const Report& report, bool include_timing = true);
/// Aligned table, one row per check, then a summary line.
std::string to_table(const Report& report);

}  // namespace emcg
