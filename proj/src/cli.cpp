#include "probdef/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <vector>

#include "probdef/error.hpp"

namespace probdef::cli {

std::string format_human(const Interval& interval) {
  if (!interval.is_proper()) return interval.to_string();
  return "[" + to_compact_string(interval.lower) + ", " + to_compact_string(interval.upper) +
         "] \xE2\x89\x88 [" + to_decimal_string(interval.lower, 4) + ", " +
         to_decimal_string(interval.upper, 4) + "]";
}

std::string format_structured(Semantics semantics, const Interval& interval) {
  std::string out = std::string("semantics=") + to_string(semantics) +
                    " status=" + to_string(interval.status);
  if (interval.has_bounds()) {
    out += " lower=" + to_fraction_string(interval.lower) +
           " upper=" + to_fraction_string(interval.upper);
  } else {
    out += " lower=- upper=-";
  }
  return out;
}

namespace {

int report_error(const Error& e, std::ostream& err) {
  err << "error: " << e.what() << "\n";
  return is_parse_error(e.kind()) ? kExitParseError : kExitEngineError;
}

const char* sat_word(bool sat) { return sat ? "SAT" : "UNSAT"; }

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    const auto tab = line.find('\t', start);
    out.push_back(line.substr(start, tab - start));
    if (tab == std::string::npos) break;
    start = tab + 1;
  }
  return out;
}

std::optional<IntervalStatus> parse_status(const std::string& text) {
  for (auto s : {IntervalStatus::kProper, IntervalStatus::kVacuous, IntervalStatus::kUnsat,
                 IntervalStatus::kUndefined}) {
    if (text == to_string(s)) return s;
  }
  return std::nullopt;
}

}  // namespace

int cmd_check(const std::filesystem::path& theory_path, const std::string& evidence,
              std::ostream& out, std::ostream& err) {
  try {
    const DefaultTheory theory = load_theory(theory_path);
    const KnowledgeBase kb = parse_kb(evidence);
    const Vocabulary vocab = vocabulary_of(theory, kb, Query{});
    ConstraintSystem everything{vocab, theory.strict, {}, {}};
    everything.members.insert(everything.members.end(), theory.defaults.begin(),
                              theory.defaults.end());
    everything.members.insert(everything.members.end(), kb.conjuncts.begin(), kb.conjuncts.end());
    ConstraintSystem strict_only{vocab, theory.strict, {}, {}};
    strict_only.members.insert(strict_only.members.end(), kb.conjuncts.begin(),
                               kb.conjuncts.end());
    out << "P\xE2\x88\xAA" "D\xE2\x88\xAAKB: " << sat_word(satisfiable(everything))
        << "; P\xE2\x88\xAAKB: " << sat_word(satisfiable(strict_only))
        << "; sigma-consistent: " << (sigma_consistent(theory, vocab) ? "yes" : "no") << "\n";
    return kExitOk;
  } catch (const Error& e) {
    return report_error(e, err);
  }
}

int cmd_zpartition(const std::filesystem::path& theory_path, std::ostream& out,
                   std::ostream& err) {
  try {
    const DefaultTheory theory = load_theory(theory_path);
    const Vocabulary vocab = vocabulary_of(theory, {}, Query{});
    if (auto zp = z_partition(theory, vocab)) {
      out << describe(*zp, theory);
    } else {
      out << "sigma-inconsistent\n";
    }
    return kExitOk;
  } catch (const Error& e) {
    return report_error(e, err);
  }
}

int cmd_entail(const QueryRequest& request, std::ostream& out, std::ostream& err) {
  DefaultTheory theory;
  KnowledgeBase kb;
  Query query;
  try {
    theory = load_theory(request.theory);
    kb = parse_kb(request.evidence);
    query = parse_query(request.query);
  } catch (const Error& e) {
    return report_error(e, err);
  }
  try {
    const Entailment result = entail(request.semantics, theory, kb, query);
    if (request.format == OutputFormat::kStructured) {
      out << format_structured(request.semantics, result.interval) << "\n";
    } else {
      out << format_human(result.interval) << "\n";
    }
    if (request.verbose) out << describe(result, theory);
    return kExitOk;
  } catch (const Error& e) {
    if (request.format == OutputFormat::kStructured) {
      out << "semantics=" << to_string(request.semantics) << " status=error lower=- upper=-\n";
    }
    return report_error(e, err);
  }
}

int cmd_table(const std::filesystem::path& manifest, std::ostream& out, std::ostream& err) {
  std::ifstream in(manifest);
  if (!in) {
    err << "error: cannot read manifest '" << manifest.string() << "'\n";
    return kExitParseError;
  }
  const std::filesystem::path base = manifest.parent_path();
  std::string line;
  int line_no = 0;
  int rows = 0;
  int passed = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    const auto fields = split_tabs(line);
    if (fields.size() != 7) {
      err << "error: manifest line " << line_no << ": expected 7 tab-separated fields\n";
      return kExitParseError;
    }
    const auto semantics = parse_semantics(fields[3]);
    const auto status = parse_status(fields[4]);
    if (!semantics || !status) {
      err << "error: manifest line " << line_no << ": bad semantics or status\n";
      return kExitParseError;
    }
    Interval expected{*status, 0, 0};
    std::string got;
    bool match = false;
    try {
      if (*status == IntervalStatus::kProper) {
        expected.lower = parse_rational(fields[5]);
        expected.upper = parse_rational(fields[6]);
      } else if (*status == IntervalStatus::kVacuous) {
        expected = Interval::vacuous();
      }
      const DefaultTheory theory = load_theory(base / fields[0]);
      const Interval actual =
          entail(*semantics, theory, parse_kb(fields[1]), parse_query(fields[2])).interval;
      got = actual.to_string();
      match = actual == expected;
    } catch (const Error& e) {
      got = std::string("error ") + to_string(e.kind());
      if (is_parse_error(e.kind())) {
        err << "error: manifest line " << line_no << ": " << e.what() << "\n";
        return kExitParseError;
      }
    }
    ++rows;
    if (match) ++passed;
    out << (match ? "PASS" : "FAIL") << " line " << line_no << " " << fields[3] << " "
        << fields[0] << " " << fields[1] << " " << fields[2] << " -> " << got;
    if (!match) out << " (expected " << expected.to_string() << ")";
    out << "\n";
  }
  out << passed << "/" << rows << " rows match\n";
  return passed == rows ? kExitOk : kExitEngineError;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Tight-interval entailment over probabilistic default theories"};
  app.require_subcommand(1);

  std::string theory;
  std::string evidence = "true";
  QueryRequest request;
  std::string semantics = "one";
  std::string format = "human";
  std::string manifest;

  auto* check = app.add_subcommand("check", "Satisfiability and sigma-consistency report");
  check->add_option("--theory", theory, "Theory file (.pdt)")->required();
  check->add_option("--evidence", evidence, "Evidence, e.g. \"(bird|true)[1,1]\"");

  auto* zpart = app.add_subcommand("zpartition", "Print the z-partition of the defaults");
  zpart->add_option("--theory", theory, "Theory file (.pdt)")->required();

  auto* ent = app.add_subcommand("entail", "Tight entailed interval for a query");
  ent->add_option("--theory", theory, "Theory file (.pdt)")->required();
  ent->add_option("--evidence", evidence, "Evidence, e.g. \"(bird|true)[1,1]\"");
  ent->add_option("--query", request.query, "Query, e.g. \"(fly|true)\"")->required();
  ent->add_option("--semantics", semantics, "zero | one | z | lex | ce")
      ->check(CLI::IsMember({"zero", "one", "z", "lex", "ce"}));
  ent->add_option("--format", format, "human | structured")
      ->check(CLI::IsMember({"human", "structured"}));
  ent->add_flag("--verbose", request.verbose, "Print intermediate artifacts");

  auto* table = app.add_subcommand("table", "Run a manifest of expected results");
  table->add_option("manifest", manifest, "Tab-separated manifest file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitParseError;
  }

  if (check->parsed()) return cmd_check(theory, evidence, out, err);
  if (zpart->parsed()) return cmd_zpartition(theory, out, err);
  if (table->parsed()) return cmd_table(manifest, out, err);
  request.theory = theory;
  request.evidence = evidence;
  request.semantics = *parse_semantics(semantics);
  request.format = format == "structured" ? OutputFormat::kStructured : OutputFormat::kHuman;
  return cmd_entail(request, out, err);
}

}  // namespace probdef::cli
