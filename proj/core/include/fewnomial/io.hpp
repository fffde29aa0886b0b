#pragma once

#include <string>
#include <utility>
#include <vector>

#include "fewnomial/blocks.hpp"
#include "fewnomial/bounds.hpp"
#include "fewnomial/construct.hpp"
#include "fewnomial/solver.hpp"

namespace fewnomial::io {

/// Provenance stamped into every JSON artifact a pipeline writes. The
/// timestamp stays empty unless explicitly requested, so identical inputs
/// produce byte-identical outputs.
struct RunManifest {
  std::string command_line;
  std::vector<std::pair<std::string, std::string>> inputs;  // (path, sha256 hex)
  unsigned precision = kDefaultDigits;
  std::string version;
  std::string timestamp;
};

std::string library_version();

// All *_to_json functions emit canonical text: 2-space indent, LF line ends,
// one trailing newline, rationals as "p" or "p/q" strings, terms in the
// polynomials' canonical order. Parsers throw FormatError on anything that
// does not match the schema.

std::string system_to_json(const SparseSystem& system, const RunManifest* manifest = nullptr);
SparseSystem system_from_json(const std::string& text);

std::string block_to_json(const BlockRecipe& recipe);
BlockRecipe block_from_json(const std::string& text);

std::string solutions_to_json(const SolutionSet& set, unsigned digits,
                              const RunManifest* manifest = nullptr);

/// The parts of a solutions file a re-certification needs.
struct SolutionFile {
  std::size_t count = 0;
  std::vector<std::vector<Real>> points;  // parsed at the current precision
};
SolutionFile solutions_from_json(const std::string& text);

std::string report_to_json(const BoundReport& report, const RunManifest* manifest = nullptr);

std::string sha256_hex(const std::string& bytes);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace fewnomial::io
