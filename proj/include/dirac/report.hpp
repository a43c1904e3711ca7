#ifndef DIRAC_REPORT_HPP
#define DIRAC_REPORT_HPP

#include "dirac/checks.hpp"
#include "dirac/serialize.hpp"

namespace dirac {

/// Machine-readable run record. exit_code is 0 iff all checks pass; every
/// failed check carries a witness.
struct Report {
  std::string command;
  std::vector<std::pair<std::string, std::string>> inputs;  // path, digest
  Checklist checks;
  std::vector<std::string> outputs;
  int exit_code = 0;

  void finalize() { exit_code = checks.ok() ? 0 : 1; }
};

/// FNV-1a digest of file bytes, printed as 16 hex digits.
std::string content_digest(const std::string& bytes);

/// One line per check; ANSI color unless disabled (DIRAC_COLOR=0).
std::string render_text(const Report& r, bool color);
/// Stable key order; byte-identical for identical inputs.
std::string render_json(const Report& r);

/// CLI entry point shared by the binary and the tests. argv excludes the
/// program name. Writes report text to `out`; returns the exit code
/// (0 = all checks pass, 1 = check failures, 2 = usage/parse errors).
int execute(const std::vector<std::string>& argv, std::string& out);

}  // namespace dirac

#endif
