#pragma once

// Command-line front end: knot files, reports, and the verb dispatcher.

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "seifert/seifert.hpp"

namespace seifert::cli {

enum ExitCode : int {
  kCertified = 0,
  kObstructed = 1,
  kParseError = 2,
  kValidationError = 3,
  kInconclusive = 4,
};

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// One knot per file: {"k": 0, "matrix": [[1, 1], [0, 1]]}, or "n" (odd,
/// positive) in place of "k". Entries are JSON integers or decimal strings.
struct KnotFile {
  std::optional<unsigned long> n;
  std::optional<unsigned long> k;
  IntMatrix matrix;

  unsigned handle_index() const;
};

/// Throws ParseError on malformed JSON, unknown or missing fields, both or
/// neither of n/k, even n, non-integer entries and non-square matrices.
/// With index_required false a bare {"matrix": ...} is accepted (a form
/// rather than a Seifert matrix).
KnotFile parse_knot_file(const std::string& text, bool index_required = true);

/// Canonical rendering, the format documented in the README.
std::string format_knot_file(const KnotFile& file);

/// seifert::validate on the parsed data.
SeifertKnot to_knot(const KnotFile& file);

std::string sha256_hex(const std::string& bytes);

/// Runs one command line (without the program name). Reports go to out,
/// diagnostics to err; returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace seifert::cli
