#include "menon/cli.hpp"

#include <fstream>
#include <memory>

#include <CLI11.hpp>

#include "menon/arith.hpp"
#include "menon/residues.hpp"

namespace menon::cli {

namespace {

template <typename T, typename Parse>
Range<T> parse_range(std::string_view text, Parse parse) {
  const auto dots = text.find("..");
  if (dots == std::string_view::npos) {
    const T value = parse(text);
    return {value, value};
  }
  Range<T> r{parse(text.substr(0, dots)), parse(text.substr(dots + 2))};
  if (r.lo > r.hi) {
    throw UsageError("empty range '" + std::string(text) + "'");
  }
  return r;
}

unsigned to_unsigned(Natural value, const char* what) {
  if (value > ~0U) {
    throw UsageError(std::string(what) + " is too large");
  }
  return static_cast<unsigned>(value);
}

void write_optional(OutputFormat format, const std::optional<Natural>& v,
                    std::ostream& out) {
  if (v) {
    out << Dec{*v};
  } else if (format == OutputFormat::kJsonLines) {
    out << "null";
  } else if (format == OutputFormat::kPlain) {
    out << '-';
  }
}

void write_optional(OutputFormat format, const std::optional<bool>& v,
                    std::ostream& out) {
  if (v) {
    out << (*v ? "true" : "false");
  } else if (format == OutputFormat::kJsonLines) {
    out << "null";
  } else if (format == OutputFormat::kPlain) {
    out << '-';
  }
}

}  // namespace

OutputFormat parse_output_format(std::string_view name) {
  if (name == "plain") return OutputFormat::kPlain;
  if (name == "csv") return OutputFormat::kCsv;
  if (name == "json-lines" || name == "jsonl") return OutputFormat::kJsonLines;
  throw UsageError("unknown format '" + std::string(name) +
                   "' (expected plain, csv or json-lines)");
}

Range<Natural> parse_natural_range(std::string_view text) {
  return parse_range<Natural>(text, parse_natural);
}

Range<Integer> parse_integer_range(std::string_view text) {
  return parse_range<Integer>(text, parse_integer);
}

std::vector<unsigned> parse_k_set(std::string_view text) {
  std::vector<unsigned> ks;
  while (!text.empty()) {
    const auto comma = text.find(',');
    const auto piece = text.substr(0, comma);
    const auto range = parse_natural_range(piece);
    for (Natural k = range.lo; k <= range.hi; ++k) {
      ks.push_back(to_unsigned(k, "k"));
    }
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  if (ks.empty()) throw UsageError("empty k set");
  return ks;
}

const std::vector<std::string>& compute_function_names() {
  static const std::vector<std::string> names = {
      "phi", "cohen-phi", "d", "d-s", "d-s-k", "pillai", "menon-lhs",
      "menon-rhs"};
  return names;
}

Natural cmd_compute(const ComputeRequest& request, IterationCap cap) {
  const auto& f = request.function;
  auto need_s = [&]() -> Integer {
    if (!request.s) throw UsageError("function '" + f + "' requires --s");
    return *request.s;
  };
  if (f == "phi") return euler_phi(request.m);
  if (f == "cohen-phi") return cohen_phi(request.m, request.k);
  if (f == "d") return divisor_count(request.m);
  if (f == "d-s") return d_s(request.m, need_s());
  if (f == "d-s-k") return d_s_k(request.m, need_s(), request.k);
  if (f == "pillai") return pillai(request.m, request.k);
  if (f == "menon-lhs") {
    return menon_sum_bruteforce({request.m, need_s(), request.k}, cap);
  }
  if (f == "menon-rhs") {
    return menon_closed_form({request.m, need_s(), request.k});
  }
  throw UsageError("unknown function '" + f + "'");
}

void write_report(const IdentityReport& report, std::ostream& out) {
  out << (report.holds ? "PASS" : "FAIL") << " m=" << Dec{report.params.m}
      << " s=" << SignedDec{report.params.s} << " k=" << report.params.k
      << " lhs=" << Dec{report.lhs} << " rhs=" << Dec{report.rhs};
  if (!report.holds) out << " elapsed_ns=" << report.elapsed.count();
  out << '\n';
}

void write_summary(const GridSummary& summary, std::ostream& out) {
  out << "checked=" << summary.checked << " passed=" << summary.passed
      << " failed=" << summary.failed() << " skipped=" << summary.skipped
      << '\n';
}

int cmd_verify(const VerificationGrid& grid, IterationCap cap, bool quiet,
               std::ostream& out) {
  const GridSummary summary =
      verify_grid(grid, cap, [&](const IdentityReport& report) {
        if (!quiet || !report.holds) write_report(report, out);
      });
  write_summary(summary, out);
  return summary.failed() == 0 ? exit_code::kOk
                               : exit_code::kVerificationFailed;
}

void write_table_header(OutputFormat format, std::ostream& out) {
  if (format == OutputFormat::kJsonLines) return;
  const char sep = format == OutputFormat::kCsv ? ',' : ' ';
  bool first = true;
  for (const char* column : kTableColumns) {
    if (!first) out << sep;
    out << column;
    first = false;
  }
  out << '\n';
}

void write_table_row(OutputFormat format, const BatchRow& row,
                     std::ostream& out) {
  if (format == OutputFormat::kJsonLines) {
    out << "{\"m\":" << Dec{row.m} << ",\"phi_k\":" << Dec{row.phi_k}
        << ",\"d_s_k\":" << Dec{row.d_s_k} << ",\"pillai_k\":"
        << Dec{row.pillai_k} << ",\"menon_lhs\":";
    write_optional(format, row.menon_lhs, out);
    out << ",\"menon_rhs\":" << Dec{row.menon_rhs} << ",\"verified\":";
    write_optional(format, row.verified, out);
    out << "}\n";
    return;
  }
  const char sep = format == OutputFormat::kCsv ? ',' : ' ';
  out << Dec{row.m} << sep << Dec{row.phi_k} << sep << Dec{row.d_s_k} << sep
      << Dec{row.pillai_k} << sep;
  write_optional(format, row.menon_lhs, out);
  out << sep << Dec{row.menon_rhs} << sep;
  write_optional(format, row.verified, out);
  out << '\n';
}

void cmd_table(const TableRequest& request, IterationCap cap,
               std::ostream& out) {
  BatchOptions options;
  options.cap = cap;
  options.threads = request.threads;
  switch (request.bruteforce) {
    case BruteForceMode::kOn:
      options.with_bruteforce = true;
      break;
    case BruteForceMode::kOff:
      options.with_bruteforce = false;
      break;
    case BruteForceMode::kAuto: {
      const auto work = bruteforce_work(request.n, request.k);
      options.with_bruteforce = work && *work <= cap.max_iterations;
      break;
    }
  }
  write_table_header(request.format, out);
  batch_table(request.n, request.s, request.k, options,
              [&](const BatchRow& row) {
                write_table_row(request.format, row, out);
              });
}

void cmd_residues(Natural m, unsigned k, OutputFormat format, IterationCap cap,
                  std::ostream& out) {
  const ResidueSet set = standard_residue_set(m, k, cap);
  if (format == OutputFormat::kJsonLines) {
    out << "{\"m\":" << Dec{m} << ",\"k\":" << k << ",\"count\":"
        << set.size() << ",\"elements\":[";
  }
  const char sep = format == OutputFormat::kPlain ? ' ' : ',';
  bool first = true;
  for (Natural a : set.elements()) {
    if (!first) out << sep;
    out << Dec{a};
    first = false;
  }
  out << (format == OutputFormat::kJsonLines ? "]}\n" : "\n");
}

int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Generalized Menon identities: k-th power gcd sums, "
               "Eckford Cohen totients and Pillai functions"};
  app.name("menon");
  app.require_subcommand(1);

  std::string max_iterations;
  app.add_option("--max-iterations", max_iterations,
                 "Brute-force iteration cap per evaluation (default: $" +
                     std::string(kIterationCapEnvVar) + " or " +
                     std::to_string(kDefaultIterationCap) + ")");

  // compute
  auto* compute = app.add_subcommand("compute", "Evaluate one function");
  std::string function_name;
  std::string compute_m;
  std::string compute_s;
  std::string compute_k = "1";
  compute->add_option("function", function_name,
                      "phi | cohen-phi | d | d-s | d-s-k | pillai | "
                      "menon-lhs | menon-rhs")
      ->required();
  compute->add_option("--m", compute_m, "Modulus m >= 1")->required();
  compute->add_option("--s", compute_s, "Shift s (any integer)");
  compute->add_option("--k", compute_k, "Power k >= 1")->capture_default_str();

  // verify
  auto* verify = app.add_subcommand(
      "verify", "Check sum (a-s, m^k)_k = d_s^(k)(m) phi^(k)(m) over a grid");
  std::string verify_m;
  std::string verify_s = "1";
  std::string verify_k = "1";
  bool quiet = false;
  verify->add_option("--m", verify_m, "m range lo..hi")->required();
  verify->add_option("--s", verify_s, "s range lo..hi")->capture_default_str();
  verify->add_option("--k", verify_k, "k values, e.g. 1,2 or 1..3")->capture_default_str();
  verify->add_flag("--quiet", quiet, "List failing points only");

  // table
  auto* table = app.add_subcommand("table", "Tabulate all functions over m");
  std::string table_n;
  std::string table_s = "1";
  std::string table_k = "1";
  std::string table_format = "plain";
  std::string table_out;
  bool with_bruteforce = false;
  bool no_bruteforce = false;
  unsigned threads = 1;
  table->add_option("--n", table_n, "Tabulate m = 1..n")->required();
  table->add_option("--s", table_s, "Shift s")->capture_default_str();
  table->add_option("--k", table_k, "Power k")->capture_default_str();
  table->add_option("--format", table_format, "plain | csv | json-lines")->capture_default_str();
  table->add_option("--out", table_out, "Write to this file");
  table->add_option("--threads", threads, "Worker threads")->capture_default_str();
  auto* bf_on = table->add_flag("--with-bruteforce", with_bruteforce,
                                "Always fill the brute-force column");
  table->add_flag("--no-bruteforce", no_bruteforce,
                  "Never fill the brute-force column")
      ->excludes(bf_on);

  // residues
  auto* residues = app.add_subcommand(
      "residues", "List the standard k-th power reduced residue set");
  std::string residues_m;
  std::string residues_k = "1";
  std::string residues_format = "plain";
  residues->add_option("--m", residues_m, "Modulus m")->required();
  residues->add_option("--k", residues_k, "Power k")->capture_default_str();
  residues->add_option("--format", residues_format, "plain | csv | json-lines")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_code::kOk : exit_code::kUsage;
  }

  try {
    IterationCap cap = iteration_cap_from_env();
    if (!max_iterations.empty()) {
      const Natural value = parse_natural(max_iterations);
      if (value == 0 || value > ~std::uint64_t{0}) {
        throw UsageError("--max-iterations must be a positive 64-bit integer");
      }
      cap.max_iterations = static_cast<std::uint64_t>(value);
    }

    if (*compute) {
      ComputeRequest request;
      request.function = function_name;
      request.m = parse_natural(compute_m);
      if (!compute_s.empty()) request.s = parse_integer(compute_s);
      request.k = to_unsigned(parse_natural(compute_k), "k");
      out << Dec{cmd_compute(request, cap)} << '\n';
      return exit_code::kOk;
    }

    if (*verify) {
      const auto m = parse_natural_range(verify_m);
      const auto s = parse_integer_range(verify_s);
      const VerificationGrid grid{m.lo, m.hi, s.lo, s.hi, parse_k_set(verify_k)};
      return cmd_verify(grid, cap, quiet, out);
    }

    if (*table) {
      TableRequest request;
      const Natural n = parse_natural(table_n);
      if (n > ~std::uint64_t{0}) throw OverflowError("--n is too large");
      request.n = static_cast<std::uint64_t>(n);
      request.s = parse_integer(table_s);
      request.k = to_unsigned(parse_natural(table_k), "k");
      request.format = parse_output_format(table_format);
      request.bruteforce = with_bruteforce ? BruteForceMode::kOn
                           : no_bruteforce ? BruteForceMode::kOff
                                           : BruteForceMode::kAuto;
      request.threads = threads;
      if (table_out.empty()) {
        cmd_table(request, cap, out);
      } else {
        std::ofstream file(table_out, std::ios::binary | std::ios::trunc);
        if (!file) throw std::ios_base::failure("cannot open " + table_out);
        cmd_table(request, cap, file);
        file.flush();
        if (!file) throw std::ios_base::failure("cannot write " + table_out);
      }
      return exit_code::kOk;
    }

    if (*residues) {
      cmd_residues(parse_natural(residues_m),
                   to_unsigned(parse_natural(residues_k), "k"),
                   parse_output_format(residues_format), cap, out);
      return exit_code::kOk;
    }
  } catch (const UsageError& e) {
    err << "menon: " << e.what() << '\n';
    return exit_code::kUsage;
  } catch (const DomainError& e) {
    err << "menon: " << e.what() << '\n';
    return exit_code::kUsage;
  } catch (const OverflowError& e) {
    err << "menon: overflow: " << e.what() << '\n';
    return exit_code::kResource;
  } catch (const ResourceError& e) {
    err << "menon: resource limit: " << e.what() << '\n';
    return exit_code::kResource;
  } catch (const std::ios_base::failure& e) {
    err << "menon: I/O error: " << e.what() << '\n';
    return exit_code::kResource;
  }
  return exit_code::kUsage;
}

}  // namespace menon::cli
