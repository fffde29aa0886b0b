// Command-line front end: construct assembled systems, solve and certify
// them, re-verify solution files, and tabulate the bound calculators.
//
// Exit protocol (machine-readable for CI):
//   0 success, 2 precondition violation, 3 count mismatch, 4 certification
//   failure.

#include <cctype>
#include <cstdlib>
#include <ctime>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fewnomial/bounds.hpp"
#include "fewnomial/construct.hpp"
#include "fewnomial/io.hpp"
#include "fewnomial/solver.hpp"

namespace {

constexpr int kExitSuccess = 0;
constexpr int kExitPrecondition = 2;
constexpr int kExitCountMismatch = 3;
constexpr int kExitCertification = 4;

using namespace fewnomial;

unsigned parse_precision(const std::string& text, const std::string& origin) {
  if (text.empty() ||
      text.find_first_not_of("0123456789") != std::string::npos) {
    throw DomainError(origin + " must be a positive decimal integer, got '" +
                      text + "'");
  }
  const unsigned long value = std::stoul(text);
  if (value < 1 || value > 100000) {
    throw DomainError(origin + " must be between 1 and 100000, got '" + text +
                      "'");
  }
  return static_cast<unsigned>(value);
}

// Default precision: FEWNOMIAL_PRECISION when set, library default otherwise.
// An explicit --precision / --digits flag overrides both.
unsigned env_precision() {
  const char* env = std::getenv("FEWNOMIAL_PRECISION");
  if (env == nullptr || *env == '\0') return kDefaultDigits;
  return parse_precision(env, "FEWNOMIAL_PRECISION");
}

std::string join_command_line(int argc, char** argv) {
  std::ostringstream joined;
  for (int i = 0; i < argc; ++i) {
    if (i) joined << ' ';
    joined << argv[i];
  }
  return joined.str();
}

std::string utc_timestamp() {
  const std::time_t now = std::time(nullptr);
  std::tm parts{};
  gmtime_r(&now, &parts);
  char buffer[32];
  std::strftime(buffer, sizeof(buffer), "%Y-%m-%dT%H:%M:%SZ", &parts);
  return buffer;
}

void emit(const std::string& out_path, const std::string& content) {
  if (out_path.empty()) {
    std::cout << content;
  } else {
    io::write_file(out_path, content);
  }
}

struct CommonFlags {
  std::string out;
  std::string precision_flag;
  bool stamp = false;
};

io::RunManifest make_manifest(const std::string& command_line,
                              unsigned precision, bool stamp) {
  io::RunManifest manifest;
  manifest.command_line = command_line;
  manifest.precision = precision;
  manifest.version = io::library_version();
  if (stamp) manifest.timestamp = utc_timestamp();
  return manifest;
}

int cmd_construct(std::size_t n, std::size_t k,
                  const std::vector<std::string>& block_ids,
                  const CommonFlags& flags, const std::string& command_line) {
  const unsigned precision = flags.precision_flag.empty()
                                 ? env_precision()
                                 : parse_precision(flags.precision_flag,
                                                   "--precision");
  const SparseSystem system = assemble(plan(n, k, block_ids));
  io::RunManifest manifest = make_manifest(command_line, precision, flags.stamp);
  emit(flags.out, io::system_to_json(system, &manifest));
  return kExitSuccess;
}

int cmd_solve(const std::string& input, unsigned threads,
              const CommonFlags& flags, const std::string& command_line) {
  const unsigned precision = flags.precision_flag.empty()
                                 ? env_precision()
                                 : parse_precision(flags.precision_flag,
                                                   "--precision");
  const std::string text = io::read_file(input);
  const SparseSystem system = io::system_from_json(text);
  if (system.plan() == nullptr) {
    throw DomainError("input system carries no construction plan metadata; "
                      "solve needs the plan to know its block recipes");
  }

  const SolutionSet set = solve_assembled(system, precision, threads);

  io::RunManifest manifest = make_manifest(command_line, precision, flags.stamp);
  manifest.inputs.emplace_back(input, io::sha256_hex(text));
  emit(flags.out, io::solutions_to_json(set, precision, &manifest));

  if (set.solutions.size() != set.count_claimed) {
    std::cerr << "count mismatch: certified " << set.solutions.size()
              << " solutions, plan predicts " << set.count_claimed << "\n";
    return kExitCountMismatch;
  }
  return kExitSuccess;
}

int cmd_verify(const std::string& system_path, const std::string& solutions_path,
               const std::string& tolerance_text, const CommonFlags& flags) {
  const unsigned precision = flags.precision_flag.empty()
                                 ? env_precision()
                                 : parse_precision(flags.precision_flag,
                                                   "--precision");
  const SparseSystem system = io::system_from_json(io::read_file(system_path));

  PrecisionScope scope(precision);
  const io::SolutionFile file =
      io::solutions_from_json(io::read_file(solutions_path));
  const Real tolerance(tolerance_text);
  if (!(tolerance > 0)) {
    throw DomainError("--tolerance must be positive, got '" + tolerance_text +
                      "'");
  }

  if (system.plan() != nullptr &&
      Integer(file.points.size()) != system.plan()->predicted) {
    std::cerr << "count mismatch: file has " << file.points.size()
              << " solutions, plan predicts " << system.plan()->predicted
              << "\n";
    return kExitCountMismatch;
  }

  bool ok = true;
  for (std::size_t i = 0; i < file.points.size(); ++i) {
    const Certificate cert = certify(system, file.points[i], precision);
    if (!cert.positive) {
      std::cerr << "solution " << i << ": not strictly positive\n";
      ok = false;
      continue;
    }
    if (!(cert.residual_norm < tolerance)) {
      std::cerr << "solution " << i << ": residual "
                << real_to_string(cert.residual_norm, 6) << " >= tolerance "
                << real_to_string(tolerance, 6) << "\n";
      ok = false;
    }
    if (!cert.nondegenerate) {
      std::cerr << "solution " << i << ": Jacobian determinant vanishes to "
                << "working precision (degenerate)\n";
      ok = false;
    }
  }

  const Real gap = to_real(Rational(1, Integer(10000000000)));  // 10^-10
  for (std::size_t i = 0; i < file.points.size(); ++i) {
    for (std::size_t j = i + 1; j < file.points.size(); ++j) {
      Real separation(0);
      for (std::size_t c = 0; c < file.points[i].size(); ++c) {
        const Real d = abs(file.points[i][c] - file.points[j][c]);
        if (d > separation) separation = d;
      }
      if (!(separation > gap)) {
        std::cerr << "solutions " << i << " and " << j << " coincide within "
                  << "10^-10\n";
        ok = false;
      }
    }
  }

  if (!ok) return kExitCertification;
  std::cout << "verified " << file.points.size() << " solutions\n";
  return kExitSuccess;
}

std::string factor_suffix(const BoundValue& value) {
  if (value.factor == TranscendentalFactor::kNone) return "";
  return std::string(" * ") + factor_name(value.factor);
}

int cmd_bounds(std::size_t n, std::size_t k, const std::string& digits_flag,
               bool as_json, const CommonFlags& flags,
               const std::string& command_line) {
  const unsigned digits = digits_flag.empty()
                              ? env_precision()
                              : parse_precision(digits_flag, "--digits");
  const BoundReport rep = report(n, k, digits);

  if (as_json) {
    io::RunManifest manifest = make_manifest(command_line, digits, flags.stamp);
    emit(flags.out, io::report_to_json(rep, &manifest));
    return kExitSuccess;
  }

  std::ostringstream text;
  text << "bounds at n=" << n << ", k=" << k << " (" << digits
       << "-digit evaluation)\n";
  for (const auto& [name, value] : rep.entries) {
    text << "  " << name << " = " << rational_to_string(value.exact_part)
         << factor_suffix(value) << " ~ "
         << real_to_string(value.approx(digits), digits) << "\n";
  }
  const auto yn = [](bool b) { return b ? "yes" : "no"; };
  text << "orderings:\n";
  if (rep.ordering.lower_le_bs.has_value()) {
    text << "  lower <= bs_solution: " << yn(*rep.ordering.lower_le_bs) << "\n";
  }
  text << "  lemma3_sum < theorem2: " << yn(rep.ordering.lemma3_lt_theorem2)
       << "\n";
  if (rep.ordering.full_support_lt_theorem2.has_value()) {
    text << "  full_support < theorem2: "
         << yn(*rep.ordering.full_support_lt_theorem2) << "\n";
  }
  text << "  kappa_upper * 2 = bs_solution: "
       << yn(rep.ordering.kappa_doubles_to_bs) << "\n";
  text << "  singular = 2 * theorem2: "
       << yn(rep.ordering.singular_doubles_theorem2) << "\n";
  text << "  perrucci < lrw_component: " << yn(rep.ordering.perrucci_lt_lrw)
       << "\n";
  emit(flags.out, text.str());
  return kExitSuccess;
}

// Table columns, in emission order. "lower" and the ratio are blank wherever
// the lower bound is undefined (k = 0 or n < k).
const std::vector<std::string> kTableBounds = {
    "lower",        "bs_solution",      "kappa_upper",   "lemma3_sum",
    "theorem2",     "singular",         "full_support",  "khovanskii_solution",
    "khovanskii_betti", "lrw_component", "perrucci"};

std::vector<std::string> table_row(const BoundReport& rep, unsigned digits) {
  std::vector<std::string> cells;
  cells.push_back(std::to_string(rep.n));
  cells.push_back(std::to_string(rep.k));
  for (const std::string& name : kTableBounds) {
    const auto it = rep.entries.find(name);
    if (it == rep.entries.end()) {
      cells.emplace_back();
    } else if (it->second.factor == TranscendentalFactor::kNone &&
               is_integer(it->second.exact_part)) {
      cells.push_back(rational_to_string(it->second.exact_part));
    } else {
      cells.push_back(real_to_string(it->second.approx(digits), digits));
    }
  }
  const auto lower = rep.entries.find("lower");
  if (lower == rep.entries.end()) {
    cells.emplace_back();
  } else {
    PrecisionScope scope(digits + kGuardDigits);
    const Real ratio = to_real(lower->second.exact_part) /
                       rep.entries.at("bs_solution").approx(digits);
    cells.push_back(real_to_string(round_to_digits(ratio, digits), digits));
  }
  return cells;
}

int cmd_table(std::size_t n_max, std::size_t k_max, const std::string& format,
              const std::string& digits_flag, const CommonFlags& flags,
              const std::string& command_line) {
  const unsigned digits = digits_flag.empty()
                              ? env_precision()
                              : parse_precision(digits_flag, "--digits");
  if (n_max < 1) throw DomainError("--n-max must be at least 1");
  if (format != "csv" && format != "json" && format != "md") {
    throw DomainError("--format must be csv, json, or md, got '" + format +
                      "'");
  }

  std::vector<std::string> header = {"n", "k"};
  header.insert(header.end(), kTableBounds.begin(), kTableBounds.end());
  header.push_back("lower_over_bs");

  std::vector<std::vector<std::string>> rows;
  for (std::size_t n = 1; n <= n_max; ++n) {
    for (std::size_t k = 0; k <= k_max; ++k) {
      rows.push_back(table_row(report(n, k, digits), digits));
    }
  }

  std::ostringstream text;
  if (format == "csv") {
    for (std::size_t c = 0; c < header.size(); ++c) {
      if (c) text << ',';
      text << header[c];
    }
    text << '\n';
    for (const auto& row : rows) {
      for (std::size_t c = 0; c < row.size(); ++c) {
        if (c) text << ',';
        text << row[c];
      }
      text << '\n';
    }
  } else if (format == "md") {
    text << "|";
    for (const auto& h : header) text << ' ' << h << " |";
    text << "\n|";
    for (std::size_t c = 0; c < header.size(); ++c) text << " --- |";
    text << '\n';
    for (const auto& row : rows) {
      text << "|";
      for (const auto& cell : row) text << ' ' << cell << " |";
      text << '\n';
    }
  } else {
    // Hand-rolled JSON mirrors the CSV cells: strings for values, null for
    // blanks. Keys and ordering are fixed, so the bytes are reproducible.
    text << "{\n  \"digits\": " << digits << ",\n  \"command\": \""
         << command_line << "\",\n  \"rows\": [\n";
    for (std::size_t r = 0; r < rows.size(); ++r) {
      text << "    {";
      for (std::size_t c = 0; c < header.size(); ++c) {
        if (c) text << ", ";
        text << '"' << header[c] << "\": ";
        if (c < 2) {
          text << rows[r][c];
        } else if (rows[r][c].empty()) {
          text << "null";
        } else {
          text << '"' << rows[r][c] << '"';
        }
      }
      text << (r + 1 < rows.size() ? "},\n" : "}\n");
    }
    text << "  ]\n}\n";
  }
  emit(flags.out, text.str());
  return kExitSuccess;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "fewnomial systems: construction, certified solving, and bound tables"};
  app.require_subcommand(1);
  const std::string command_line = join_command_line(argc, argv);

  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t n_max = 0;
  std::size_t k_max = 0;
  unsigned threads = 1;
  bool as_json = false;
  std::string input;
  std::string system_path;
  std::string solutions_path;
  std::string tolerance = "1e-4";
  std::string format = "csv";
  std::string digits_flag;
  std::vector<std::string> block_ids;
  CommonFlags flags;

  CLI::App* construct =
      app.add_subcommand("construct", "Assemble the (n, k) system as JSON");
  construct->add_option("--n", n, "Number of variables/equations")->required();
  construct->add_option("--k", k, "Number of blocks")->required();
  construct->add_option("--blocks", block_ids,
                        "Override block ids (one per block)");
  construct->add_option("--out", flags.out, "Output path (default: stdout)");
  construct->add_option("--precision", flags.precision_flag,
                        "Decimal digits recorded in the manifest");
  construct->add_flag("--stamp", flags.stamp, "Embed a UTC timestamp");

  CLI::App* solve = app.add_subcommand(
      "solve", "Solve and certify a constructed system file");
  solve->add_option("input", input, "System JSON path")->required();
  solve->add_option("--precision", flags.precision_flag,
                    "Working precision in decimal digits");
  solve->add_option("--threads", threads, "Worker threads (default 1)");
  solve->add_option("--out", flags.out, "Output path (default: stdout)");
  solve->add_flag("--stamp", flags.stamp, "Embed a UTC timestamp");

  CLI::App* verify = app.add_subcommand(
      "verify", "Re-certify a solutions file against its system");
  verify->add_option("system", system_path, "System JSON path")->required();
  verify->add_option("solutions", solutions_path, "Solutions JSON path")
      ->required();
  verify->add_option("--tolerance", tolerance,
                     "Residual tolerance (default 1e-4)");
  verify->add_option("--precision", flags.precision_flag,
                     "Re-certification precision in decimal digits");

  CLI::App* bounds =
      app.add_subcommand("bounds", "All bounds at one (n, k)");
  bounds->add_option("--n", n, "Number of variables")->required();
  bounds->add_option("--k", k, "Monomial surplus parameter")->required();
  bounds->add_option("--digits", digits_flag, "Evaluation digits");
  bounds->add_flag("--json", as_json, "Emit the report as JSON");
  bounds->add_option("--out", flags.out, "Output path (default: stdout)");
  bounds->add_flag("--stamp", flags.stamp, "Embed a UTC timestamp (JSON only)");

  CLI::App* table = app.add_subcommand(
      "table", "Bound table over the grid 1 <= n <= n-max, 0 <= k <= k-max");
  table->add_option("--n-max", n_max, "Largest n")->required();
  table->add_option("--k-max", k_max, "Largest k")->required();
  table->add_option("--format", format, "csv, json, or md (default csv)");
  table->add_option("--digits", digits_flag, "Evaluation digits");
  table->add_option("--out", flags.out, "Output path (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitSuccess : kExitPrecondition;
  }

  try {
    if (construct->parsed()) {
      return cmd_construct(n, k, block_ids, flags, command_line);
    }
    if (solve->parsed()) {
      return cmd_solve(input, threads, flags, command_line);
    }
    if (verify->parsed()) {
      return cmd_verify(system_path, solutions_path, tolerance, flags);
    }
    if (bounds->parsed()) {
      return cmd_bounds(n, k, digits_flag, as_json, flags, command_line);
    }
    if (table->parsed()) {
      return cmd_table(n_max, k_max, format, digits_flag, flags, command_line);
    }
  } catch (const CertificationError& e) {
    std::cerr << "certification failure: " << e.what() << "\n";
    return kExitCertification;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitPrecondition;
  }
  return kExitPrecondition;
}
