#include "emcg/cli.hpp"

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"

#include "emcg/dnb_action.hpp"
#include "emcg/harness.hpp"
#include "emcg/homs.hpp"
#include "emcg/presentation.hpp"
#include "emcg/properties.hpp"
#include "emcg/todd_coxeter.hpp"

namespace emcg {
namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  int n = 6;
  std::string flavor = "extended";
  std::string suite = "all";
  std::string subgroup;
  std::size_t max_cosets = EnumerationLimits{}.max_cosets;
  double max_time = 60.0;
  std::size_t aut_length = ActionLimits{}.max_image_length;
  int order_cap = 0;
  bool machine = false;
  std::optional<std::uint64_t> seed;
  std::string out_path;
  std::vector<std::string> exprs;
};

HarnessConfig harness_config(const Options& o) {
  HarnessConfig c;
  c.enumeration.max_cosets = o.max_cosets;
  c.enumeration.max_time =
      std::chrono::milliseconds(static_cast<std::int64_t>(o.max_time * 1000.0));
  c.action.max_image_length = o.aut_length;
  c.order_cap = o.order_cap;
  return c;
}

void write_atomically(const std::string& path, const std::string& text) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot write " + tmp.string());
    f << text;
    f.flush();
    if (!f) throw std::runtime_error("cannot write " + tmp.string());
  }
  fs::rename(tmp, target);
}

void require_n(int n) {
  if (n < 3) throw UsageError("--n must be at least 3");
}

int cmd_verify(const Options& o, std::ostream& out) {
  const Suite suite = [&] {
    try {
      return parse_suite(o.suite);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }();
  if (suite_uses_n(suite)) {
    require_n(o.n);
    if (!suite_applies(suite, o.n)) {
      throw UsageError("suite " + o.suite + " does not apply to n = " + std::to_string(o.n));
    }
  }
  const HarnessConfig config = harness_config(o);
  CheckResults checks = run_suite(suite, o.n, config);
  if (o.seed) {
    SampleConfig sample;
    sample.seed = *o.seed;
    const int n = suite_uses_n(suite) ? o.n : 6;
    CheckResults more = verify_properties(n, sample, config);
    checks.insert(checks.end(), more.begin(), more.end());
  }
  const Report report = make_report(std::move(checks));
  const std::string json = to_json(report);
  if (!o.out_path.empty()) write_atomically(o.out_path, json);
  out << (o.machine ? json : to_table(report));
  return report.exit_code();
}

Word parse_or_throw(const std::string& text, int n) { return parse_expression(text, n); }

void describe(std::ostream& out, const char* label, const Word& u, int n) {
  out << label << ": " << to_string(u) << "  perm " << to_string(perm_image(u, n)) << "  psi' "
      << to_string(abelianization_image(u)) << '\n';
}

int cmd_eval(const Options& o, std::ostream& out) {
  require_n(o.n);
  const Word lhs = parse_or_throw(o.exprs.at(0), o.n);
  const Word rhs = parse_or_throw(o.exprs.at(1), o.n);
  const ActionLimits limits{o.aut_length};
  const auto witness = equality_witness(lhs, rhs, o.n, limits);
  out << (witness ? "equal" : "not equal") << '\n';
  describe(out, "lhs", lhs, o.n);
  describe(out, "rhs", rhs, o.n);
  if (witness) out << "conjugator: " << to_string(*witness) << '\n';
  return witness ? 0 : 1;
}

int cmd_order(const Options& o, std::ostream& out) {
  require_n(o.n);
  const Word u = parse_or_throw(o.exprs.at(0), o.n);
  const int cap = o.order_cap > 0 ? o.order_cap : 4 * o.n;
  const auto k = order_of(u, o.n, cap, ActionLimits{o.aut_length});
  if (k) {
    out << *k << '\n';
  } else {
    out << "exceeds cap " << cap << '\n';
  }
  return 0;
}

std::vector<Word> parse_subgroup(const std::string& text, int n) {
  std::vector<Word> gens;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.find_first_not_of(" \t") == std::string::npos) continue;
    gens.push_back(parse_expression(item, n));
  }
  return gens;
}

int cmd_enumerate(const Options& o, std::ostream& out) {
  require_n(o.n);
  const Flavor flavor = [&] {
    try {
      return parse_flavor(o.flavor);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }();
  const Presentation p = build_presentation(o.n, flavor);
  const std::vector<Word> gens = parse_subgroup(o.subgroup, o.n);
  if (flavor == Flavor::oriented) {
    for (const Word& g : gens) {
      if (count_reflections(g) > 0) throw UsageError("t is not in the oriented alphabet");
    }
  }
  const auto result = enumerate(p, gens, harness_config(o).enumeration);
  if (result.finished()) {
    out << "index " << result.index << '\n';
  } else {
    out << "OVERFLOW (" << result.overflow_reason << ")\n";
  }
  out << "defined " << result.stats.defined << ", max-alive " << result.stats.max_alive
      << ", collapses " << result.stats.collapsed << ", seconds " << std::fixed
      << std::setprecision(3) << result.stats.seconds << '\n';
  return result.finished() ? 0 : 2;
}

int cmd_presentation(const Options& o, std::ostream& out) {
  require_n(o.n);
  Flavor flavor;
  try {
    flavor = parse_flavor(o.flavor);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  out << dump(build_presentation(o.n, flavor));
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact checks for periodic generators of extended mapping class groups of "
               "punctured spheres"};
  app.name("emcg");
  app.require_subcommand(1);

  auto add_n = [&](CLI::App* sub) { sub->add_option("--n", o.n, "number of punctures"); };
  auto add_limits = [&](CLI::App* sub) {
    sub->add_option("--max-cosets", o.max_cosets, "alive coset limit")
        ->check(CLI::PositiveNumber);
    sub->add_option("--max-time", o.max_time, "enumeration time limit in seconds")
        ->check(CLI::PositiveNumber);
    sub->add_option("--aut-length", o.aut_length, "automorphism image length guard")
        ->check(CLI::PositiveNumber);
  };

  auto* verify = app.add_subcommand("verify", "run verification suites");
  add_n(verify);
  add_limits(verify);
  verify->add_option("--suite", o.suite,
                     "presentation, prop22, section3, lemma-y, lemma-z, main, odd, n4, sigma2, all");
  verify->add_option("--order-cap", o.order_cap, "order search cap (default 4n)")
      ->check(CLI::NonNegativeNumber);
  verify->add_flag("--machine", o.machine, "print the JSON report");
  verify->add_option("--out", o.out_path, "also write the JSON report to this path");
  verify->add_option("--seed", o.seed, "add seeded random property checks");

  auto* eval = app.add_subcommand("eval", "decide whether two expressions are equal");
  add_n(eval);
  eval->add_option("--aut-length", o.aut_length, "automorphism image length guard")
      ->check(CLI::PositiveNumber);
  eval->add_option("exprs", o.exprs, "two expressions")->expected(2)->required();

  auto* order = app.add_subcommand("order", "order of an element, up to a cap");
  add_n(order);
  order->add_option("--order-cap", o.order_cap, "order search cap (default 4n)")
      ->check(CLI::NonNegativeNumber);
  order->add_option("--aut-length", o.aut_length, "automorphism image length guard")
      ->check(CLI::PositiveNumber);
  order->add_option("expr", o.exprs, "expression")->expected(1)->required();

  auto* enumerate_cmd = app.add_subcommand("enumerate", "index of a subgroup by coset enumeration");
  add_n(enumerate_cmd);
  add_limits(enumerate_cmd);
  enumerate_cmd->add_option("--flavor", o.flavor, "oriented or extended");
  enumerate_cmd->add_option("--subgroup", o.subgroup, "comma-separated generator expressions");

  auto* pres = app.add_subcommand("presentation", "print the relators");
  add_n(pres);
  pres->add_option("--flavor", o.flavor, "oriented or extended");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*verify) return cmd_verify(o, out);
    if (*eval) return cmd_eval(o, out);
    if (*order) return cmd_order(o, out);
    if (*enumerate_cmd) return cmd_enumerate(o, out);
    if (*pres) return cmd_presentation(o, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitParse;
  } catch (const ResourceError& e) {
    err << "resource limit: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return kExitUsage;
}

}  // namespace emcg
