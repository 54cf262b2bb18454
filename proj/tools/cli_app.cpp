// Copyright 2026 The owf-lab Authors
// SPDX-License-Identifier: Apache-2.0

#include "cli_app.hpp"

#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "owflab/analysis.hpp"
#include "owflab/composition.hpp"
#include "owflab/errors.hpp"
#include "owflab/owf.hpp"
#include "owflab/report_json.hpp"
#include "owflab/trajectory.hpp"

namespace owflab::cli {

namespace {

// Scans at least this long report progress on the error stream.
constexpr std::uint64_t kProgressThreshold = std::uint64_t{1} << 20;

struct Common {
  bool json = false;
  bool hex = false;
  int base() const { return hex ? 16 : 10; }
};

struct ParamFlags {
  std::optional<std::size_t> n;
  std::optional<std::size_t> r;
  std::string profile;
  bool strict_width = false;

  void add_to(CLI::App* sub) {
    sub->add_option("--n", n, "input bit width");
    sub->add_option("--r", r, "iteration count / digest width");
    sub->add_option("--profile", profile, "named profile (paper512 = --n 512 --r 256)");
    sub->add_flag("--strict-width", strict_width, "require exactly n significant input bits");
  }

  owf::OwfParams resolve() const {
    owf::OwfParams p;
    if (!profile.empty()) {
      if (n || r) throw CLI::ValidationError("--profile", "cannot be combined with --n/--r");
      p = owf::OwfParams::profile(profile);
    } else {
      if (!n || !r) throw CLI::ValidationError("--n/--r", "both are required without --profile");
      p.n = *n;
      p.r = *r;
    }
    p.strict_width = strict_width;
    p.validate();
    return p;
  }
};

struct ScanFlags {
  unsigned jobs = 1;
  std::optional<std::uint64_t> budget;

  void add_to(CLI::App* sub) {
    sub->add_option("--jobs", jobs, "worker threads (0 = hardware concurrency)");
    sub->add_option("--budget", budget, "maximum evaluations (overrides OWFLAB_BUDGET)");
  }

  analysis::ScanOptions resolve(std::ostream& err) const {
    analysis::ScanOptions o;
    o.jobs = jobs == 0 ? std::max(1u, std::thread::hardware_concurrency()) : jobs;
    o.budget = analysis::Budget::from_env();
    if (budget) o.budget.max_evaluations = *budget;
    o.progress = [&err, last = std::uint64_t{0}](std::uint64_t done, std::uint64_t total) mutable {
      if (total < kProgressThreshold) return;
      const std::uint64_t pct = done * 100 / total;
      if (pct >= last + 5 || done == total) {
        last = pct;
        err << "progress " << done << "/" << total << " (" << pct << "%)\n" << std::flush;
      }
    };
    return o;
  }
};

Natural parse_natural(const std::string& text, const Common& c, const char* flag) {
  try {
    return Natural::from_text(text, c.base());
  } catch (const ParseError& e) {
    throw ParseError(std::string(flag) + ": " + e.what(), e.position());
  }
}

void print_json(std::ostream& out, const report::Json& j) { out << j.dump(2) << '\n'; }

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Collatz one-way-function candidate laboratory", "owflab"};
  app.require_subcommand(1);

  Common common;
  app.add_flag("--json", common.json, "print the owf-lab/1 JSON document");
  app.add_flag("--hex", common.hex, "read and write values in lowercase hex");

  std::string x_text;
  std::size_t r_only = 0;
  std::function<void()> action;

  // owf / trace
  ParamFlags owf_params;
  auto* owf_cmd = app.add_subcommand("owf", "evaluate the digest of x");
  owf_cmd->add_option("--x", x_text, "input value")->required();
  owf_params.add_to(owf_cmd);
  owf_cmd->callback([&] {
    action = [&] {
      const auto p = owf_params.resolve();
      const Natural x = parse_natural(x_text, common, "--x");
      const auto y = owf::evaluate(x, p);
      if (common.json) {
        print_json(out, report::to_json(y, x, p, common.base()));
      } else if (common.hex) {
        out << y.to_hex() << '\n';
      } else {
        out << y.digest.to_text() << " (hex " << y.to_hex() << ")\n";
      }
    };
  });

  ParamFlags trace_params;
  auto* trace_cmd = app.add_subcommand("trace", "evaluate x and show every intermediate value");
  trace_cmd->add_option("--x", x_text, "input value")->required();
  trace_params.add_to(trace_cmd);
  trace_cmd->callback([&] {
    action = [&] {
      const auto p = trace_params.resolve();
      const Natural x = parse_natural(x_text, common, "--x");
      const auto t = owf::trace(x, p);
      const int b = common.base();
      if (common.json) {
        print_json(out, report::to_json(t, p, b));
        return;
      }
      out << "input        " << t.input.to_text(b) << '\n'
          << "final        " << t.final.to_text(b) << '\n'
          << "path         " << t.path.to_string() << " = " << path_to_natural(t.path).to_text(b)
          << '\n'
          << "fold(input)  " << t.folded_input.to_text(b) << '\n'
          << "fold(final)  " << t.folded_final.to_text(b) << '\n'
          << "digest       " << t.digest.to_text(b) << " (hex " << owf::digest_hex(t.digest, p.r)
          << ")\n";
    };
  });

  // trajectory
  bool show_steps = false;
  auto* traj_cmd = app.add_subcommand("trajectory", "run r branching iterations from x");
  traj_cmd->add_option("--x", x_text, "input value")->required();
  traj_cmd->add_option("--r", r_only, "iteration count")->required();
  traj_cmd->add_flag("--steps", show_steps, "list every step");
  traj_cmd->callback([&] {
    action = [&] {
      const Natural x = parse_natural(x_text, common, "--x");
      const auto t = trajectory::run(x, r_only, {.record_steps = show_steps});
      const int b = common.base();
      if (common.json) {
        print_json(out, report::to_json(t, x, r_only, b));
        return;
      }
      if (t.steps) {
        std::size_t i = 1;
        for (const auto& s : *t.steps) {
          out << "step " << i++ << "  " << s.input.to_text(b) << " -"
              << (s.branch == Branch::F ? "x/2" : "(3x+1)/2") << "-> " << s.output.to_text(b)
              << "  " << (s.branch == Branch::G ? 1 : 0) << '\n';
        }
      }
      out << "final " << t.final.to_text(b) << '\n' << "path " << t.path.to_string() << '\n';
    };
  });

  // search
  std::string order_text = "lexicographic";
  auto* search_cmd = app.add_subcommand("search", "exhaustive composition search for x");
  search_cmd->add_option("--x", x_text, "input value")->required();
  search_cmd->add_option("--r", r_only, "composition length")->required();
  search_cmd->add_option("--order", order_text, "lexicographic (lex) or paper");
  search_cmd->callback([&] {
    action = [&] {
      const Natural x = parse_natural(x_text, common, "--x");
      const auto order = composition::order_from_name(order_text);
      analysis::Budget budget = analysis::Budget::from_env();
      if (r_only > budget.max_search_r) {
        throw BudgetError("search at r = " + std::to_string(r_only) + " exceeds the cap r <= " +
                              std::to_string(budget.max_search_r),
                          r_only);
      }
      const auto s = composition::search(x, r_only, order);
      if (common.json) {
        print_json(out, report::to_json(s, x, r_only, common.base()));
      } else {
        out << s.found.to_string() << " → " << s.result.to_text(common.base()) << " (tries "
            << s.tries << ")\n";
      }
    };
  });

  // oracle
  auto* oracle_cmd = app.add_subcommand("oracle", "list every integral composition of length r");
  oracle_cmd->add_option("--x", x_text, "input value")->required();
  oracle_cmd->add_option("--r", r_only, "composition length")->required();
  oracle_cmd->callback([&] {
    action = [&] {
      const Natural x = parse_natural(x_text, common, "--x");
      const auto found = composition::integral_compositions(x, r_only);
      if (common.json) {
        print_json(out, report::oracle_json(found, x, r_only, common.base()));
      } else {
        for (const auto& c : found) out << c.to_string() << '\n';
      }
    };
  });

  // preimage / census
  auto scan_range = [&](const owf::OwfParams& p, const std::optional<std::string>& lo,
                        const std::optional<std::string>& hi) {
    Natural lo_v = lo ? parse_natural(*lo, common, "--lo") : Natural(1);
    Natural hi_v = hi ? parse_natural(*hi, common, "--hi") : Natural::pow2(p.n) - Natural(1);
    return std::pair{std::move(lo_v), std::move(hi_v)};
  };

  ParamFlags pre_params;
  ScanFlags pre_scan;
  std::string y_text;
  std::optional<std::string> pre_lo;
  std::optional<std::string> pre_hi;
  auto* pre_cmd = app.add_subcommand("preimage", "find every x in [lo, hi] with digest y");
  pre_cmd->add_option("--y", y_text, "target digest")->required();
  pre_params.add_to(pre_cmd);
  pre_scan.add_to(pre_cmd);
  pre_cmd->add_option("--lo", pre_lo, "first input (default 1)");
  pre_cmd->add_option("--hi", pre_hi, "last input (default 2^n - 1)");
  pre_cmd->callback([&] {
    action = [&] {
      const auto p = pre_params.resolve();
      const owf::OwfOutput y{parse_natural(y_text, common, "--y"), p.r};
      const auto [lo, hi] = scan_range(p, pre_lo, pre_hi);
      const auto rep = analysis::preimage_search(y, p, lo, hi, pre_scan.resolve(err));
      if (common.json) {
        print_json(out, report::to_json(rep, common.base()));
        return;
      }
      for (const auto& x : rep.preimages) out << x.to_text(common.base()) << '\n';
      out << "preimages " << rep.preimages.size() << " evaluations " << rep.evaluations << '\n';
    };
  });

  ParamFlags census_params;
  ScanFlags census_scan;
  std::optional<std::string> census_lo;
  std::optional<std::string> census_hi;
  auto* census_cmd = app.add_subcommand("census", "digest histogram over [lo, hi]");
  census_params.add_to(census_cmd);
  census_scan.add_to(census_cmd);
  census_cmd->add_option("--lo", census_lo, "first input (default 1)");
  census_cmd->add_option("--hi", census_hi, "last input (default 2^n - 1)");
  census_cmd->callback([&] {
    action = [&] {
      const auto p = census_params.resolve();
      const auto [lo, hi] = scan_range(p, census_lo, census_hi);
      const auto rep = analysis::collision_census(p, lo, hi, census_scan.resolve(err));
      if (common.json) {
        print_json(out, report::to_json(rep, common.base()));
        return;
      }
      for (const auto& [digest, count] : rep.histogram) {
        out << owf::digest_hex(digest, p.r) << ' ' << count << '\n';
      }
      out << "buckets " << rep.histogram.size() << " evaluations " << rep.evaluations << '\n';
    };
  });

  // avalanche
  ParamFlags av_params;
  std::uint64_t av_samples = 10000;
  std::uint64_t av_seed = 1;
  bool av_control = false;
  auto* av_cmd = app.add_subcommand("avalanche", "single-bit input flip diffusion statistics");
  av_params.add_to(av_cmd);
  av_cmd->add_option("--samples", av_samples, "number of samples");
  av_cmd->add_option("--seed", av_seed, "generator seed");
  av_cmd->add_flag("--control", av_control, "flip no bits (expected ratio 0)");
  av_cmd->callback([&] {
    action = [&] {
      const auto p = av_params.resolve();
      const auto rep = analysis::avalanche(
          p, av_samples, av_seed,
          av_control ? analysis::AvalancheMode::kControl : analysis::AvalancheMode::kSingleBit);
      if (common.json) {
        print_json(out, report::to_json(rep));
        return;
      }
      out << "mean_flip_ratio " << rep.mean_flip_ratio << '\n';
      for (std::size_t i = 0; i < rep.per_bit_flip_counts.size(); ++i) {
        out << "bit " << i << ' ' << rep.per_bit_flip_counts[i] << '\n';
      }
    };
  });

  // bench
  std::vector<std::size_t> bench_r{4, 5, 6, 7, 8, 9, 10, 11, 12};
  std::optional<std::uint64_t> bench_samples;
  std::uint64_t bench_seed = 1;
  std::string bench_order = "lexicographic";
  std::optional<std::size_t> bench_max_r;
  auto* bench_cmd = app.add_subcommand("bench", "branching vs exhaustive-search operation counts");
  bench_cmd->add_option("--r-values", bench_r, "iteration counts to profile")->delimiter(',');
  bench_cmd->add_option("--samples", bench_samples,
                        "random inputs per r (default: every residue in [1, 2^r])");
  bench_cmd->add_option("--seed", bench_seed, "generator seed");
  bench_cmd->add_option("--order", bench_order, "lexicographic (lex) or paper");
  bench_cmd->add_option("--max-r", bench_max_r, "raise the search cap of r <= 16");
  bench_cmd->callback([&] {
    action = [&] {
      analysis::CostOptions o;
      o.samples_per_r = bench_samples;
      o.seed = bench_seed;
      o.order = composition::order_from_name(bench_order);
      if (bench_max_r) o.budget.max_search_r = *bench_max_r;
      const auto rep = analysis::cost_profile(bench_r, o);
      if (common.json) {
        print_json(out, report::to_json(rep, common.base()));
        return;
      }
      out << "r  branching_ops  search_tries_mean  path_count\n";
      for (const auto& row : rep.rows) {
        out << row.r << "  " << row.branching_ops << "  " << row.search_tries_mean << "  "
            << row.path_count.to_text(common.base()) << '\n';
      }
    };
  });

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
    action();
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const BudgetError& e) {
    err << "refused: " << e.what() << '\n';
    return kExitBudget;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  }
  return kExitOk;
}

}  // namespace owflab::cli
