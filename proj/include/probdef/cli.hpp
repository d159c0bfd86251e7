#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "probdef/entail.hpp"

namespace probdef::cli {

enum class OutputFormat { kHuman, kStructured };

struct QueryRequest {
  std::filesystem::path theory;
  std::string evidence = "true";
  std::string query;
  Semantics semantics = Semantics::kOne;
  OutputFormat format = OutputFormat::kHuman;
  bool verbose = false;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitEngineError = 1;
inline constexpr int kExitParseError = 2;

// `[19/20, 1] ≈ [0.9500, 1.0000]`, `VACUOUS [1,0]`, `UNSAT` or `UNDEFINED`.
std::string format_human(const Interval& interval);

// `semantics=<tag> status=<status> lower=<p/q> upper=<p/q>`; bounds are `-`
// when the status carries none.
std::string format_structured(Semantics semantics, const Interval& interval);

int cmd_check(const std::filesystem::path& theory, const std::string& evidence, std::ostream& out,
              std::ostream& err);
int cmd_zpartition(const std::filesystem::path& theory, std::ostream& out, std::ostream& err);
int cmd_entail(const QueryRequest& request, std::ostream& out, std::ostream& err);

// Runs a tab-separated manifest: theory path (relative to the manifest),
// evidence, query, semantics, expected status, expected lower, expected upper.
// Blank lines and lines starting with `#` are skipped. Exit code 0 iff every
// row matches exactly.
int cmd_table(const std::filesystem::path& manifest, std::ostream& out, std::ostream& err);

// Full command line: `check`, `zpartition`, `entail`, `table`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace probdef::cli
