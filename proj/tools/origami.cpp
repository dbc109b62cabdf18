// Command-line front end: enumerate, greens, verify, normal-forms, export.
//
// Exit codes: 0 success, 1 verification failure (or engine disagreement),
// 2 usage error, 3 budget/resource error.  All file outputs are
// deterministic; wall-clock timing goes to stdout only, on lines starting
// with "time_ms=".

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "origami/export.hpp"
#include "origami/forms.hpp"
#include "origami/greens.hpp"
#include "origami/jones.hpp"
#include "origami/pipeline.hpp"

namespace {

using namespace origami;

struct CliOptions {
  std::string monoid = "origami";
  int n = 2;
  std::string engine = "tc";
  bool no_redundant = false;
  bool large = false;
  std::string cache;
  std::string out;
  std::string format = "json";
  std::size_t kb_max_rules = 20000;
  std::size_t kb_max_pairs = 1000000;
  std::size_t element_cap = 2000000;
  std::string suite;
};

void add_common(CLI::App* cmd, CliOptions& opt) {
  cmd->add_option("--monoid", opt.monoid, "Monoid family: jones|origami")
      ->check(CLI::IsMember({"jones", "origami"}));
  cmd->add_option("--n", opt.n, "Rank n >= 2")->required();
  cmd->add_option("--engine", opt.engine, "Equality engine: kb|tc|both")
      ->check(CLI::IsMember({"kb", "tc", "both"}));
  cmd->add_flag("--no-redundant-rules", opt.no_redundant,
                "Drop the derivable rules (2b)/(3b) from the presentation");
  cmd->add_flag("--large", opt.large,
                "Allow minutes-scale runs (origami n >= 7)");
  cmd->add_option("--cache", opt.cache, "Cache directory for monoid tables");
  cmd->add_option("--out", opt.out, "Output file (stdout if omitted)");
  cmd->add_option("--kb-max-rules", opt.kb_max_rules,
                  "Completion budget: max live rules");
  cmd->add_option("--kb-max-pairs", opt.kb_max_pairs,
                  "Completion budget: max critical pairs");
  cmd->add_option("--element-cap", opt.element_cap,
                  "Enumeration budget: max live classes");
}

RunConfig to_config(const CliOptions& opt) {
  RunConfig cfg;
  cfg.family = parse_family(opt.monoid);
  cfg.n = opt.n;
  cfg.engine = parse_engine(opt.engine);
  cfg.include_redundant = !opt.no_redundant;
  cfg.allow_large = opt.large;
  cfg.kb_budget = {opt.kb_max_rules, opt.kb_max_pairs};
  cfg.tc_options = {opt.element_cap};
  if (!opt.cache.empty()) {
    cfg.cache_dir = opt.cache;
  } else if (const char* env = std::getenv("ORIGAMI_CACHE_DIR")) {
    if (*env) {
      cfg.cache_dir = std::string(env);
    }
  }
  return cfg;
}

void write_output(const CliOptions& opt, const std::string& content) {
  if (opt.out.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(opt.out);
  if (!out) {
    throw std::runtime_error("cannot write " + opt.out);
  }
  out << content;
}

class Timer {
 public:
  Timer() : start_(std::chrono::steady_clock::now()) {}
  long long ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

int run_enumerate(const CliOptions& opt) {
  Timer timer;
  RunConfig cfg = to_config(opt);
  EnumerateResult res = enumerate_monoid(cfg);
  std::string summary;
  summary += "{\n";
  summary += " \"family\": \"" + res.table.family() + "\",\n";
  summary += " \"n\": " + std::to_string(res.table.rank()) + ",\n";
  summary += " \"engine\": \"" + opt.engine + "\",\n";
  summary += " \"include_redundant\": ";
  summary += cfg.include_redundant ? "true" : "false";
  summary += ",\n";
  summary += " \"size\": " + std::to_string(res.table.size()) + ",\n";
  summary +=
      " \"non_identity_size\": " + std::to_string(res.table.size() - 1);
  if (res.kb_completed) {
    summary += ",\n \"kb_completed\": ";
    summary += *res.kb_completed ? "true" : "false";
    if (res.kb_count) {
      summary += ",\n \"kb_normal_forms\": " + std::to_string(*res.kb_count);
    }
  }
  summary += "\n}\n";
  write_output(opt, summary);
  std::cout << "enumerated " << res.table.family() << " n=" << res.table.rank()
            << " size=" << res.table.size()
            << (res.from_cache ? " (cache)" : "") << "\n";
  std::cout << "time_ms=" << timer.ms() << "\n";
  return 0;
}

int run_greens(const CliOptions& opt) {
  Timer timer;
  EnumerateResult res = enumerate_monoid(to_config(opt));
  GreensStructure g = compute_greens(res.table);
  write_output(opt, greens_report_json(res.table, g));
  std::cout << "greens " << res.table.family() << " n=" << res.table.rank()
            << " d_classes=" << g.d_count() << "\n";
  std::cout << "time_ms=" << timer.ms() << "\n";
  return 0;
}

int run_verify(const CliOptions& opt) {
  Timer timer;
  RunConfig cfg = to_config(opt);
  const bool origami_only =
      opt.suite == "identities" || opt.suite == "submonoids"
      || opt.suite == "projections" || opt.suite == "conjecture"
      || opt.suite == "core-d" || opt.suite == "theorem"
      || opt.suite == "redundancy";
  if (origami_only && cfg.family != Family::origami) {
    throw std::invalid_argument("suite '" + opt.suite
                                + "' applies to --monoid origami only");
  }
  VerifyReport report;
  if (opt.suite == "redundancy") {
    report = verify_redundancy(opt.n, cfg.tc_options);
  } else {
    EnumerateResult res = enumerate_monoid(cfg);
    const MonoidTable& m = res.table;
    if (opt.suite == "identities") {
      report = verify_identities(m);
    } else if (opt.suite == "submonoids") {
      report = verify_submonoids(m);
    } else if (opt.suite == "projections") {
      report = verify_projections(m, m.rank() <= 4 ? 6 : 0);
    } else if (opt.suite == "conjecture") {
      report = verify_conjecture(m).report;
    } else if (opt.suite == "h-trivial") {
      report = check_h_trivial(m, compute_greens(m));
    } else if (opt.suite == "regular-r") {
      report = check_regular_r(m);
    } else if (opt.suite == "core-d") {
      report = check_core_d_related(m, compute_greens(m));
    } else if (opt.suite == "theorem") {
      MonoidTable jm = tc_enumerate(jones_presentation(m.rank()));
      report = check_theorem_main(m, compute_greens(m), jm,
                                  compute_greens(jm));
    } else {
      throw std::invalid_argument("unknown suite '" + opt.suite + "'");
    }
  }
  write_output(opt, verify_report_json(report));
  std::cout << "verify suite=" << report.suite << " n=" << report.n
            << " instances=" << report.instances
            << " failures=" << report.failures.size() << "\n";
  std::cout << "time_ms=" << timer.ms() << "\n";
  return report.ok() ? 0 : 1;
}

int run_normal_forms(const CliOptions& opt) {
  Timer timer;
  RunConfig cfg = to_config(opt);
  std::string content;
  if (cfg.family == Family::origami) {
    EnumerateResult res = enumerate_monoid(cfg);
    for (const RegularForm& f : compute_regular_forms(res.table)) {
      content += format_word(f.word());
      content += '\n';
    }
  } else {
    for (const JnfWord& f : enumerate_jnf(opt.n)) {
      content += format_word(f.to_word(Kind::H));
      content += '\n';
    }
  }
  write_output(opt, content);
  std::cout << "time_ms=" << timer.ms() << "\n";
  return 0;
}

int run_export(const CliOptions& opt) {
  Timer timer;
  EnumerateResult res = enumerate_monoid(to_config(opt));
  std::string content;
  if (opt.format == "dot") {
    content = to_dot(res.table, compute_greens(res.table));
  } else if (opt.format == "csv") {
    content = to_csv(res.table, compute_greens(res.table));
  } else if (opt.format == "json") {
    std::ostringstream out;
    save_monoid_json(res.table, out);
    content = out.str();
  } else {
    throw std::invalid_argument("unknown format '" + opt.format + "'");
  }
  write_output(opt, content);
  std::cout << "time_ms=" << timer.ms() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Origami and Jones monoid toolkit"};
  app.require_subcommand(1);
  CliOptions opt;

  CLI::App* enumerate = app.add_subcommand(
      "enumerate", "Enumerate a monoid and report its size");
  add_common(enumerate, opt);

  CLI::App* greens = app.add_subcommand(
      "greens", "Compute Green's relations and class counts");
  add_common(greens, opt);

  CLI::App* verify = app.add_subcommand(
      "verify", "Run a verification suite and emit a JSON report");
  add_common(verify, opt);
  verify
      ->add_option("--suite", opt.suite,
                   "identities|submonoids|projections|conjecture|h-trivial|"
                   "regular-r|core-d|theorem|redundancy")
      ->required();

  CLI::App* normal_forms = app.add_subcommand(
      "normal-forms", "Write one canonical form per element");
  add_common(normal_forms, opt);

  CLI::App* exporter = app.add_subcommand(
      "export", "Export D-class diagrams or class tables");
  add_common(exporter, opt);
  exporter->add_option("--format", opt.format, "dot|csv|json")
      ->check(CLI::IsMember({"dot", "csv", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      return app.exit(e);  // --help
    }
    app.exit(e);
    return 2;
  }

  try {
    if (enumerate->parsed()) {
      return run_enumerate(opt);
    }
    if (greens->parsed()) {
      return run_greens(opt);
    }
    if (verify->parsed()) {
      return run_verify(opt);
    }
    if (normal_forms->parsed()) {
      return run_normal_forms(opt);
    }
    if (exporter->parsed()) {
      return run_export(opt);
    }
  } catch (const EngineMismatchError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const BudgetError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 2;
}
