// Command-line front end: evaluation tables, verification suites, exact
// certificates, and the log-convexity probe for c < 0.

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <string>

#include "baskakov/exact.hpp"
#include "baskakov/quadratic.hpp"
#include "baskakov/shannon.hpp"
#include "baskakov/verification.hpp"

namespace {

using baskakov::FamilyParams;
using baskakov::TruncationPolicy;
using baskakov::verify::strfmt;

std::string fmt_double(double v) { return strfmt("%.17g", v); }

char separator(const std::string& format) {
  return format == "tsv" ? '\t' : ',';
}

int write_file_or_stdout(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return 0;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << content;
  out.flush();
  if (!out) {
    std::remove(path.c_str());
    std::cerr << "error: could not write " << path << "\n";
    return 2;
  }
  return 0;
}

struct CommonOpts {
  double c = 0.0;
  double n = 1.0;
  double epsilon = 1e-12;
  long max_terms = 1 << 20;
  std::string out;
  std::string format = "csv";

  TruncationPolicy policy() const { return {epsilon, max_terms}; }
};

void add_family_flags(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--c", opts.c, "family parameter c")->required();
  cmd->add_option("--n", opts.n, "order n (n = -c*l for c < 0)")->required();
}

void add_policy_flags(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--epsilon", opts.epsilon, "certified tail-mass bound");
  cmd->add_option("--max-terms", opts.max_terms, "truncation hard cap");
}

void add_output_flags(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--out", opts.out, "output path (stdout if omitted)");
  cmd->add_option("--format", opts.format, "csv, tsv or json-lines")
      ->check(CLI::IsMember({"csv", "tsv", "json-lines"}));
}

int run_eval(const CommonOpts& opts, double x) {
  const FamilyParams params = baskakov::make_family(opts.c, opts.n);
  const TruncationPolicy policy = opts.policy();
  const baskakov::ShannonEval h = baskakov::shannon(params, x, policy);
  const baskakov::QuadEval q = baskakov::s_value(params, x, policy);

  std::string content;
  if (opts.format == "json-lines") {
    nlohmann::json j{{"x", x},           {"H", h.h},
                     {"R", q.renyi},     {"T", q.tsallis},
                     {"S", q.s},         {"K", q.truncation_k},
                     {"h_tail", h.tail_bound}, {"s_tail", q.tail_bound}};
    content = j.dump() + "\n";
  } else {
    const char sep = separator(opts.format);
    content = strfmt("x%cH%cR%cT%cS%cK%ch_tail%cs_tail\n", sep, sep, sep, sep,
                     sep, sep, sep);
    content += fmt_double(x) + sep + fmt_double(h.h) + sep +
               fmt_double(q.renyi) + sep + fmt_double(q.tsallis) + sep +
               fmt_double(q.s) + sep + std::to_string(q.truncation_k) + sep +
               fmt_double(h.tail_bound) + sep + fmt_double(q.tail_bound) +
               "\n";
  }
  return write_file_or_stdout(opts.out, content);
}

int run_table(const CommonOpts& opts, double x_min, double x_max, long steps) {
  const FamilyParams params = baskakov::make_family(opts.c, opts.n);
  const TruncationPolicy policy = opts.policy();
  if (!(x_min < x_max) || steps < 2)
    throw baskakov::DomainError("table: need x-min < x-max and steps >= 2");

  const char sep = separator(opts.format);
  const bool json = opts.format == "json-lines";
  std::string content;
  if (!json)
    content = strfmt("x%cH%cHpp%cS%cR%cT%cSpp\n", sep, sep, sep, sep, sep, sep);

  for (long i = 0; i < steps; ++i) {
    const double x =
        x_min + (x_max - x_min) * static_cast<double>(i) /
                    static_cast<double>(steps - 1);
    const baskakov::ShannonEval h = baskakov::shannon(params, x, policy);
    const baskakov::QuadEval q = baskakov::s_value(params, x, policy);

    std::optional<double> hpp;
    if (params.c >= 0.0 && x > 0.0)
      hpp = baskakov::shannon_second_series(params, x, policy);
    else if (params.c < 0.0 && params.domain().strictly_inside(x))
      hpp = baskakov::shannon_second_integral(params, x);

    std::optional<double> spp;
    try {
      spp = baskakov::derivative_tower(params, x, 2, policy).values[2];
    } catch (const baskakov::Error&) {
      // singular or boundary point: leave the cell empty
    }

    if (json) {
      nlohmann::json j{{"x", x}, {"H", h.h}, {"S", q.s},
                       {"R", q.renyi}, {"T", q.tsallis}};
      if (hpp) j["Hpp"] = *hpp;
      if (spp) j["Spp"] = *spp;
      content += j.dump() + "\n";
    } else {
      content += fmt_double(x) + sep + fmt_double(h.h) + sep +
                 (hpp ? fmt_double(*hpp) : "") + sep + fmt_double(q.s) + sep +
                 fmt_double(q.renyi) + sep + fmt_double(q.tsallis) + sep +
                 (spp ? fmt_double(*spp) : "") + "\n";
    }
  }
  return write_file_or_stdout(opts.out, content);
}

std::string records_to_text(
    const std::vector<baskakov::verify::VerificationRecord>& records,
    const std::string& format) {
  using baskakov::verify::status_name;
  std::string content;
  if (format == "json-lines") {
    for (const auto& r : records) {
      nlohmann::json j{{"suite", r.suite},
                       {"case", r.case_id},
                       {"status", status_name(r.status)},
                       {"worst_margin", r.worst_margin},
                       {"location", r.location}};
      content += j.dump() + "\n";
    }
    return content;
  }
  const char sep = separator(format);
  content = strfmt("suite%ccase%cstatus%cworst_margin%clocation\n", sep, sep,
                   sep, sep);
  for (const auto& r : records)
    content += r.suite + sep + r.case_id + sep + status_name(r.status) + sep +
               fmt_double(r.worst_margin) + sep + r.location + "\n";
  return content;
}

int run_verify(const CommonOpts& opts, const std::string& suite, long n_max,
               bool inject_failure) {
  baskakov::verify::SuiteOptions suite_opts;
  suite_opts.n_max = n_max;
  suite_opts.policy = opts.policy();
  auto records = baskakov::verify::run_suite(suite, suite_opts);
  if (inject_failure)
    records.push_back({"harness", "injected-failure",
                       baskakov::verify::Status::fail, -1.0, "synthetic"});

  long passed = 0, failed = 0, reported = 0;
  for (const auto& r : records) {
    switch (r.status) {
      case baskakov::verify::Status::pass: ++passed; break;
      case baskakov::verify::Status::fail: ++failed; break;
      case baskakov::verify::Status::report_only: ++reported; break;
    }
    std::cout << strfmt("%-12s %-34s %-11s margin=%.6g  %s\n",
                        r.suite.c_str(), r.case_id.c_str(),
                        baskakov::verify::status_name(r.status),
                        r.worst_margin, r.location.c_str());
  }
  std::cout << strfmt(
      "suite=%s manifest=%s: %ld passed, %ld failed, %ld report-only\n",
      suite.c_str(), baskakov::verify::kManifestVersion, passed, failed,
      reported);

  if (!opts.out.empty()) {
    const int code =
        write_file_or_stdout(opts.out, records_to_text(records, opts.format));
    if (code != 0) return code;
  }
  return failed > 0 ? 1 : 0;
}

int run_exact_cmd(const CommonOpts& opts, long n_max, bool format_given) {
  baskakov::verify::SuiteOptions suite_opts;
  suite_opts.n_max = n_max;
  const auto records = baskakov::verify::run_suite("exact", suite_opts);
  const std::string format = format_given ? opts.format : "json-lines";
  const int code =
      write_file_or_stdout(opts.out, records_to_text(records, format));
  if (code != 0) return code;
  return baskakov::verify::any_failure(records) ? 1 : 0;
}

int run_probe(const CommonOpts& opts, long l_max, long steps) {
  if (!(opts.c < 0.0))
    throw baskakov::DomainError("probe: requires c < 0");
  const auto rows =
      baskakov::verify::log_convexity_probe_sweep(opts.c, l_max, steps);
  std::string content;
  if (opts.format == "json-lines") {
    for (const auto& row : rows) {
      nlohmann::json j{{"c", row.c},
                       {"l", row.l},
                       {"min_second_diff", row.min_second_diff},
                       {"argmin_x", row.argmin_x}};
      content += j.dump() + "\n";
    }
  } else {
    const char sep = separator(opts.format);
    content = strfmt("c%cl%cmin_second_diff%cargmin_x\n", sep, sep, sep);
    for (const auto& row : rows)
      content += fmt_double(row.c) + sep + std::to_string(row.l) + sep +
                 fmt_double(row.min_second_diff) + sep +
                 fmt_double(row.argmin_x) + "\n";
  }
  return write_file_or_stdout(opts.out, content);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"c-parameterized discrete family: Shannon/Renyi/Tsallis "
               "entropies, ODE characterizations, and exact verification"};
  app.require_subcommand(1);

  CommonOpts opts;
  double x = 0.0, x_min = 0.0, x_max = 1.0;
  long steps = 101, n_max = 0, probe_l_max = 12, probe_steps = 2001;
  std::string suite = "all";
  bool inject_failure = false;

  CLI::App* eval = app.add_subcommand("eval", "evaluate the entropies at one x");
  add_family_flags(eval, opts);
  eval->add_option("--x", x, "evaluation point")->required();
  add_policy_flags(eval, opts);
  add_output_flags(eval, opts);

  CLI::App* table =
      app.add_subcommand("table", "entropy table over a uniform grid");
  add_family_flags(table, opts);
  table->add_option("--x-min", x_min, "grid start")->required();
  table->add_option("--x-max", x_max, "grid end")->required();
  table->add_option("--steps", steps, "number of grid points");
  add_policy_flags(table, opts);
  add_output_flags(table, opts);

  CLI::App* verify =
      app.add_subcommand("verify", "run a verification suite; exit 1 on fail");
  verify->add_option("--suite", suite, "shannon, quadratic, exact or all")
      ->check(CLI::IsMember({"shannon", "quadratic", "exact", "all"}));
  verify->add_option("--n-max", n_max, "override the suite's order caps");
  add_policy_flags(verify, opts);
  add_output_flags(verify, opts);
  verify->add_flag("--inject-failure", inject_failure)->group("");

  CLI::App* exact_cmd = app.add_subcommand(
      "exact", "emit exact-arithmetic verification certificates");
  exact_cmd->add_option("--n-max", n_max, "override the suite's order caps");
  add_output_flags(exact_cmd, opts);

  CLI::App* probe = app.add_subcommand(
      "probe", "log-convexity evidence for c < 0 (report-only)");
  probe->add_option("--c", opts.c, "family parameter, must be < 0")->required();
  probe->add_option("--n-max", probe_l_max, "largest l in the sweep");
  probe->add_option("--steps", probe_steps, "grid points per l");
  add_output_flags(probe, opts);

  try {
    app.parse(argc, argv);
    if (eval->parsed()) return run_eval(opts, x);
    if (table->parsed()) return run_table(opts, x_min, x_max, steps);
    if (verify->parsed()) return run_verify(opts, suite, n_max, inject_failure);
    if (exact_cmd->parsed())
      return run_exact_cmd(opts, n_max, exact_cmd->count("--format") > 0);
    if (probe->parsed()) return run_probe(opts, probe_l_max, probe_steps);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const baskakov::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
