#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "gtsg/nat.hpp"
#include "gtsg/thabit.hpp"

namespace gtsg::cli {

/// Stable process exit codes.
enum ExitCode : int { kOk = 0, kMismatch = 1, kUsage = 2 };

enum class OutputFormat { text, json, csv };

/// Default cap on s_0 before an Apery set is enumerated.
inline constexpr std::uint64_t kDefaultS0Cap = 1'000'000;

/// Cap from GTSG_S0_CAP when set to a valid number, else kDefaultS0Cap.
Nat s0_cap_from_env();

struct Mismatch {
  std::string field;
  std::string closed;
  std::string oracle;
};

struct PointResult {
  thabit::GTParams params;
  Nat s0;
  thabit::CaseTag tag;
  std::vector<Mismatch> mismatches;

  bool matched() const noexcept { return mismatches.empty(); }
};

struct VerifyReport {
  std::vector<PointResult> points;  // n ascending, then k ascending

  std::size_t matched() const;
  std::size_t mismatched() const { return points.size() - matched(); }
  bool all_match() const { return matched() == points.size(); }
};

/// Grid points (n, k) with n <= n_max, 1 <= k <= k_max and s_0 <= s0_max.
std::vector<thabit::GTParams> verify_grid(std::uint32_t n_max,
                                          std::uint32_t k_max,
                                          const Nat& s0_max);

/// Compares Frobenius number, full Apery set, genus and the minimal
/// generator fixed point between the closed forms and the oracle.
PointResult verify_point(const thabit::GTParams& p);

/// Evaluates the grid on `jobs` threads; ordering does not depend on jobs.
VerifyReport run_verify(std::uint32_t n_max, std::uint32_t k_max,
                        const Nat& s0_max, unsigned jobs);

void print_report(const VerifyReport& report, OutputFormat format,
                  std::ostream& out);

/// Entry point of the gtsg tool. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace gtsg::cli
