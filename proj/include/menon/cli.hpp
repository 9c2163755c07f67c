#pragma once

#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "menon/batch.hpp"
#include "menon/cap.hpp"
#include "menon/int128.hpp"
#include "menon/sums.hpp"

namespace menon::cli {

namespace exit_code {
inline constexpr int kOk = 0;
inline constexpr int kUsage = 1;
inline constexpr int kResource = 2;  // overflow, iteration cap, I/O
inline constexpr int kVerificationFailed = 3;
}  // namespace exit_code

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class OutputFormat { kPlain, kCsv, kJsonLines };

OutputFormat parse_output_format(std::string_view name);

// Inclusive "lo..hi"; a bare value means lo = hi.
template <typename T>
struct Range {
  T lo;
  T hi;
};
Range<Natural> parse_natural_range(std::string_view text);
Range<Integer> parse_integer_range(std::string_view text);

// Comma-separated values or ranges, e.g. "1,2,3" or "1..3".
std::vector<unsigned> parse_k_set(std::string_view text);

// ---------------------------------------------------------------------------
// compute
// ---------------------------------------------------------------------------

// Accepted function names, in help order.
const std::vector<std::string>& compute_function_names();

struct ComputeRequest {
  std::string function;
  Natural m = 1;
  std::optional<Integer> s;
  unsigned k = 1;
};

// UsageError for unknown functions or missing s.
Natural cmd_compute(const ComputeRequest& request, IterationCap cap);

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

// One line per report: "PASS m=.. s=.. k=.. lhs=.. rhs=..". Failures add
// the elapsed time.
void write_report(const IdentityReport& report, std::ostream& out);

// "checked=N passed=N failed=N skipped=N"
void write_summary(const GridSummary& summary, std::ostream& out);

// Returns kOk when nothing failed, kVerificationFailed otherwise. With
// `quiet` only failing reports are listed.
int cmd_verify(const VerificationGrid& grid, IterationCap cap, bool quiet,
               std::ostream& out);

// ---------------------------------------------------------------------------
// table
// ---------------------------------------------------------------------------

// kAuto fills the brute-force column when sum_{m<=n} m^k fits in the cap.
enum class BruteForceMode { kAuto, kOn, kOff };

struct TableRequest {
  std::uint64_t n = 1;
  Integer s = 0;
  unsigned k = 1;
  OutputFormat format = OutputFormat::kPlain;
  BruteForceMode bruteforce = BruteForceMode::kAuto;
  unsigned threads = 1;
};

// Column order shared by every format.
inline constexpr const char* kTableColumns[] = {
    "m", "phi_k", "d_s_k", "pillai_k", "menon_lhs", "menon_rhs", "verified"};

void write_table_header(OutputFormat format, std::ostream& out);
void write_table_row(OutputFormat format, const BatchRow& row,
                     std::ostream& out);

void cmd_table(const TableRequest& request, IterationCap cap,
               std::ostream& out);

// ---------------------------------------------------------------------------
// residues
// ---------------------------------------------------------------------------

void cmd_residues(Natural m, unsigned k, OutputFormat format, IterationCap cap,
                  std::ostream& out);

// ---------------------------------------------------------------------------

// Full command line, including the global --max-iterations flag and the
// MENON_MAX_ITERATIONS fallback. Returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err);

}  // namespace menon::cli
