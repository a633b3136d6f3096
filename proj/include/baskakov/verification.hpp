#pragma once

#include <string>
#include <vector>

#include "baskakov/family.hpp"

namespace baskakov::verify {

enum class Status { pass, fail, report_only };

/// printf-style formatting into a std::string (locations, CSV cells).
std::string strfmt(const char* fmt, ...);

/// One named check: an identity, inequality, or residual bound, with the
/// worst margin seen and where it occurred.  Margins are oriented so
/// that pass <=> worst_margin >= 0; report_only records never assert.
struct VerificationRecord {
  std::string suite;
  std::string case_id;
  Status status = Status::pass;
  double worst_margin = 0.0;
  std::string location;
};

const char* status_name(Status s);

struct SuiteOptions {
  long n_max = 0;  // 0 = suite defaults (50 linear-cost, 30 quadratic-cost)
  TruncationPolicy policy{};
};

/// Suite names: "shannon", "quadratic", "exact", "all".  Parameter sets
/// are pinned in the built-in manifest (kManifestVersion).
std::vector<VerificationRecord> run_suite(const std::string& name,
                                          const SuiteOptions& options);

bool any_failure(const std::vector<VerificationRecord>& records);

/// One evidence row of the open log-convexity probe for c < 0.
struct ProbeRow {
  double c = 0.0;
  long l = 0;
  double min_second_diff = 0.0;  // second-derivative-scale estimate
  double argmin_x = 0.0;
};

std::vector<ProbeRow> log_convexity_probe_sweep(double c, long l_max,
                                                long steps);

inline constexpr const char* kManifestVersion = "v1";

}  // namespace baskakov::verify
