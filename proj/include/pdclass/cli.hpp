#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "pdclass/rootsys.hpp"

namespace pdclass {

enum class Subcommand { kClassify, kSurvey, kCurvature, kStructures, kVerify };
enum class OutputFormat { kText, kJson, kCsv };
enum class VerifySuite { kLemmas, kEquivalence, kAll };

struct CommandRequest {
  Subcommand subcommand = Subcommand::kClassify;
  std::optional<std::string> domain_spec;
  std::optional<std::string> weight;
  OutputFormat format = OutputFormat::kText;
  std::optional<std::string> output_path;
  VerifySuite suite = VerifySuite::kAll;
  std::vector<char> types{'A', 'B', 'C', 'D', 'G', 'F'};
  int max_rank = 4;
  int radius = 3;
  std::size_t jobs = 1;
  bool count_structures = false;
  /// Cap on enumerated structures for the structures subcommand.
  std::size_t enumeration_limit = 100000;
};

struct DomainSpec {
  char type_label = 'A';
  int rank = 0;
  std::vector<int> labels;
};

/// "<letter><rank>/<c_1>,...,<c_r>". Throws Error(kParseError) naming the
/// offending character position, Error(kInvalidTypeRank) for unsupported
/// systems and Error(kLabelOutOfRange) for a label count mismatch.
DomainSpec parse_domain_spec(std::string_view text);

/// Comma-separated rationals, exactly `rank` of them.
Weight parse_weight(std::string_view text, int rank);

/// "A,B,C" or "ABC".
std::vector<char> parse_types(std::string_view text);

/// Applies key=value lines (types, max_rank, oracle_radius, format, jobs).
/// `#` starts a comment. Keys listed in `skip` are ignored, so command-line
/// flags win.
void apply_config(CommandRequest& req, std::string_view text,
                  const std::vector<std::string>& skip = {});

/// Runs a parsed request. Returns the exit code: 0 success, 1 usage or input
/// error, 2 for the theorem-violation class of errors or a failed verify suite.
int execute_command(const CommandRequest& req, std::ostream& out, std::ostream& err);

/// Parses argv, then executes.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace pdclass
