#include "pdclass/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <sstream>

#include "pdclass/classifier.hpp"
#include "pdclass/error.hpp"
#include "pdclass/oracle.hpp"
#include "pdclass/report.hpp"
#include "pdclass/structures.hpp"

namespace pdclass {

namespace {

[[noreturn]] void parse_failure(std::string_view text, std::size_t pos, const std::string& what) {
  throw Error(ErrorCode::kParseError, "'" + std::string(text) + "' at position " +
                                          std::to_string(pos + 1) + ": " + what);
}

bool is_digit(char c) { return c >= '0' && c <= '9'; }

OutputFormat parse_format(std::string_view s) {
  if (s == "text") return OutputFormat::kText;
  if (s == "json") return OutputFormat::kJson;
  if (s == "csv") return OutputFormat::kCsv;
  throw Error(ErrorCode::kParseError, "unknown format '" + std::string(s) + "'");
}

int parse_int(std::string_view s, std::string_view key) {
  if (s.empty() || !std::all_of(s.begin(), s.end(), is_digit) || s.size() > 9) {
    throw Error(ErrorCode::kParseError,
                std::string(key) + ": expected a nonnegative integer, got '" + std::string(s) + "'");
  }
  return std::stoi(std::string(s));
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::string roots_text(const RootSystem& rs, const RootSet& s) {
  std::string out = "{";
  bool first = true;
  for (RootId id : s) {
    out += first ? "" : " ";
    first = false;
    out += "(" + join_ints(rs.root(id).coefficients) + ")";
  }
  return out + "}";
}

std::string rationals_text(const RationalVector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + to_string(v[i]);
  return out + ")";
}

nlohmann::json roots_json(const RootSystem& rs, const RootSet& s) {
  nlohmann::json out = nlohmann::json::array();
  for (RootId id : s) out.push_back(rs.root(id).coefficients);
  return out;
}

nlohmann::json rationals_json(const RationalVector& v) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

HodgeGrading grading_from(const CommandRequest& req) {
  if (!req.domain_spec) throw Error(ErrorCode::kInvalidArgument, "a DOMAIN argument is required");
  DomainSpec d = parse_domain_spec(*req.domain_spec);
  return make_grading(shared_root_system(d.type_label, d.rank), std::move(d.labels));
}

SurveyOptions survey_options(const CommandRequest& req) {
  SurveyOptions o;
  o.types = req.types;
  o.max_rank = req.max_rank;
  o.radius = req.radius;
  o.jobs = req.jobs;
  o.count_structures = req.count_structures;
  return o;
}

void run_classify(const CommandRequest& req, std::ostream& out) {
  const HodgeGrading g = grading_from(req);
  const DomainReport report = classify(g);
  switch (req.format) {
    case OutputFormat::kJson:
      out << report_to_json(report).dump(2) << '\n';
      break;
    case OutputFormat::kCsv:
      write_report_csv(out, report);
      break;
    case OutputFormat::kText:
      write_report_text(out, report);
      break;
  }
}

void run_survey(const CommandRequest& req, std::ostream& out, std::ostream& err, int& code) {
  const SurveyResult survey = survey_crosscheck(survey_options(req));
  switch (req.format) {
    case OutputFormat::kJson:
      out << survey_to_json(survey).dump(2) << '\n';
      break;
    case OutputFormat::kCsv:
      write_survey_csv(out, survey);
      break;
    case OutputFormat::kText:
      write_survey_text(out, survey);
      break;
  }
  if (!survey.failures.empty()) {
    for (const auto& f : survey.failures) err << "failure: " << f << '\n';
    code = 2;
  }
}

void run_curvature(const CommandRequest& req, std::ostream& out) {
  const HodgeGrading g = grading_from(req);
  if (!req.weight) throw Error(ErrorCode::kInvalidArgument, "curvature requires --weight");
  const Weight lambda = parse_weight(*req.weight, g.rank());
  const auto sig = curvature_signature(g, lambda);
  const auto q = q_value(g, lambda);
  const bool vanishing = predicts_vanishing(g, lambda);
  switch (req.format) {
    case OutputFormat::kJson: {
      nlohmann::json j;
      j["schema_version"] = kReportSchemaVersion;
      j["domain"] = {{"type", std::string(1, g.root_system().type_label())},
                     {"rank", g.rank()},
                     {"labels", g.labels()}};
      j["weight"] = weight_to_json(lambda);
      j["signature"] = {{"positive", sig.positive}, {"zero", sig.zero}, {"negative", sig.negative}};
      j["eigenvalues"] = rationals_json(sig.eigenvalues);
      j["q"] = q;
      j["predicts_vanishing"] = vanishing;
      out << j.dump(2) << '\n';
      break;
    }
    case OutputFormat::kCsv:
      out << "domain,weight,positive,zero,negative,q,predicts_vanishing\n";
      {
        std::string w;
        for (std::size_t i = 0; i < lambda.coordinates.size(); ++i) {
          w += (i ? "," : "") + to_string(lambda.coordinates[i]);
        }
        out << '"' << g.spec_string() << "\",\"" << w << "\"," << sig.positive << ','
            << sig.zero << ',' << sig.negative << ',' << q << ','
            << (vanishing ? "true" : "false") << '\n';
      }
      break;
    case OutputFormat::kText:
      out << "domain: " << g.spec_string() << '\n';
      out << "weight: " << rationals_text(lambda.coordinates) << '\n';
      out << "signature: (" << sig.positive << "," << sig.zero << "," << sig.negative << ")\n";
      out << "eigenvalues: " << rationals_text(sig.eigenvalues) << '\n';
      out << "q: " << q << '\n';
      out << "predicts_vanishing: " << (vanishing ? "true" : "false") << '\n';
      break;
  }
}

void run_structures(const CommandRequest& req, std::ostream& out) {
  const HodgeGrading g = grading_from(req);
  const RootSystem& rs = g.root_system();
  const DomainReport report = classify(g);

  std::optional<NewStructure> ns;
  if (report.hermitian_type) ns = new_complex_structure(g);
  const ComplexStructure cs = ns ? ns->structure : original_structure(g);
  const RootSet parabolic = ns ? parabolic_of_new(g, *ns) : parabolic_of(g, cs);
  const PositiveSystem ps = positive_system_of(g, cs);

  std::optional<Enumeration> en;
  try {
    en = enumerate_structures(g, req.enumeration_limit);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kTooLarge) throw;
  }

  switch (req.format) {
    case OutputFormat::kJson: {
      auto j = report_to_json(report, structure_section(g, cs, parabolic, ps));
      auto& s = j["structure"];
      s["source"] = ns ? "hermitian" : "original";
      if (ns) {
        s["z"] = rationals_json(ns->splitting.z);
        s["p_plus_R"] = roots_json(rs, ns->splitting.p_plus_R);
        s["p_minus_R"] = roots_json(rs, ns->splitting.p_minus_R);
        s["differs_from_original"] = ns->differs_from_original;
        s["projection_holomorphic"] = ns->projection_holomorphic;
      }
      if (en) {
        s["n_structures"] = en->structures.size();
        s["enumeration_truncated"] = en->truncated;
      }
      out << j.dump(2) << '\n';
      break;
    }
    case OutputFormat::kCsv:
      out << "domain,hermitian,differs_from_original,projection_holomorphic,n_structures\n";
      out << '"' << g.spec_string() << "\"," << (ns ? "true" : "false") << ','
          << (ns && ns->differs_from_original ? "true" : "false") << ','
          << (ns && ns->projection_holomorphic ? "true" : "false") << ',';
      if (en) out << en->structures.size();
      out << '\n';
      break;
    case OutputFormat::kText:
      out << "domain: " << g.spec_string() << '\n';
      if (ns) {
        out << "z: " << rationals_text(ns->splitting.z) << '\n';
        out << "p_plus_R: " << roots_text(rs, ns->splitting.p_plus_R) << '\n';
        out << "p_minus_R: " << roots_text(rs, ns->splitting.p_minus_R) << '\n';
        out << "new_structure_S: " << roots_text(rs, cs.S) << '\n';
        out << "differs_from_original: " << (ns->differs_from_original ? "true" : "false") << '\n';
        out << "projection_holomorphic: " << (ns->projection_holomorphic ? "true" : "false")
            << '\n';
      } else {
        out << "hermitian_splitting: none\n";
        out << "original_structure_S: " << roots_text(rs, cs.S) << '\n';
      }
      out << "parabolic: " << roots_text(rs, parabolic) << '\n';
      out << "positive_system_simples: {";
      for (std::size_t i = 0; i < ps.simple_roots.size(); ++i) {
        out << (i ? " " : "") << "(" << join_ints(rs.root(ps.simple_roots[i]).coefficients)
            << ")";
      }
      out << "}\n";
      if (en) {
        out << "n_structures: " << en->structures.size() << (en->truncated ? " (truncated)" : "")
            << '\n';
      } else {
        out << "n_structures: skipped (too large)\n";
      }
      break;
  }
}

struct Check {
  std::string name;
  bool pass;
  std::string detail;
};

void lemma_checks(const CommandRequest& req, std::vector<Check>& checks) {
  for (const auto& [t, rank] : survey_systems(survey_options(req))) {
    const auto rs = shared_root_system(t, rank);
    const auto ttt = verify_three_to_two(*rs);
    checks.push_back({"three_to_two " + rs->name(), ttt.holds,
                      std::to_string(ttt.triples_checked) + " triples"});
    std::size_t kpp_fail = 0, nc_fail = 0, nc_checked = 0;
    const auto vectors = all_label_vectors(rank);
    for (const auto& labels : vectors) {
      const HodgeGrading g = make_grading(rs, labels);
      if (!verify_k_equals_pp(g)) ++kpp_fail;
      if (!is_classical_definitional(g).classical) {
        ++nc_checked;
        if (!verify_simple_nc_decomposition(g)) ++nc_fail;
      }
    }
    checks.push_back({"k_equals_pp " + rs->name(), kpp_fail == 0,
                      std::to_string(vectors.size()) + " gradings"});
    checks.push_back({"simple_nc_decomposition " + rs->name(), nc_fail == 0,
                      std::to_string(nc_checked) + " non-classical gradings"});
  }
  ThreeToTwoOptions degenerate;
  degenerate.exclude_beta_negative_alpha = false;
  const auto demo = verify_three_to_two(*shared_root_system('A', 2), degenerate);
  checks.push_back({"three_to_two_degenerate A2", !demo.violations.empty(),
                    std::to_string(demo.violations.size()) + " violations with beta = -alpha"});
}

void equivalence_checks(const CommandRequest& req, std::vector<Check>& checks) {
  const SurveyResult survey = survey_crosscheck(survey_options(req));
  for (const auto& s : survey.summaries) {
    checks.push_back({"equivalence " + std::string(1, s.type_label) + std::to_string(s.rank), true,
                      std::to_string(s.total) + " gradings"});
  }
  for (const auto& f : survey.failures) checks.push_back({"equivalence", false, f});
}

void run_verify(const CommandRequest& req, std::ostream& out, int& code) {
  std::vector<Check> checks;
  if (req.suite != VerifySuite::kEquivalence) lemma_checks(req, checks);
  if (req.suite != VerifySuite::kLemmas) equivalence_checks(req, checks);
  std::size_t failed = 0;
  if (req.format == OutputFormat::kJson) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& c : checks) j.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    out << j.dump(2) << '\n';
  } else if (req.format == OutputFormat::kCsv) {
    out << "name,pass,detail\n";
    for (const auto& c : checks) {
      out << '"' << c.name << "\"," << (c.pass ? "true" : "false") << ",\"" << c.detail << "\"\n";
    }
  } else {
    for (const auto& c : checks) {
      out << (c.pass ? "PASS " : "FAIL ") << c.name << " (" << c.detail << ")\n";
    }
  }
  for (const auto& c : checks) failed += c.pass ? 0 : 1;
  if (req.format == OutputFormat::kText) {
    out << (failed == 0 ? "all checks passed" : std::to_string(failed) + " checks failed") << '\n';
  }
  if (failed > 0) code = 2;
}

}  // namespace

DomainSpec parse_domain_spec(std::string_view text) {
  DomainSpec d;
  std::size_t pos = 0;
  if (text.empty() || !(text[0] >= 'A' && text[0] <= 'Z')) {
    parse_failure(text, 0, "expected a type letter A-G");
  }
  d.type_label = text[pos++];
  const std::size_t rank_start = pos;
  while (pos < text.size() && is_digit(text[pos])) ++pos;
  if (pos == rank_start || pos - rank_start > 3) parse_failure(text, rank_start, "expected a rank");
  d.rank = std::stoi(std::string(text.substr(rank_start, pos - rank_start)));
  if (!is_valid_type_rank(d.type_label, d.rank)) {
    throw Error(ErrorCode::kInvalidTypeRank,
                std::string(text.substr(0, pos)) + " is not a supported root system");
  }
  if (pos >= text.size() || text[pos] != '/') parse_failure(text, pos, "expected '/'");
  ++pos;
  while (true) {
    const std::size_t start = pos;
    while (pos < text.size() && is_digit(text[pos])) ++pos;
    if (pos == start || pos - start > 3) parse_failure(text, start, "expected a label");
    d.labels.push_back(std::stoi(std::string(text.substr(start, pos - start))));
    if (pos == text.size()) break;
    if (text[pos] != ',') parse_failure(text, pos, "expected ','");
    ++pos;
  }
  if (d.labels.size() != static_cast<std::size_t>(d.rank)) {
    throw Error(ErrorCode::kLabelOutOfRange, "'" + std::string(text) + "' has " +
                                                 std::to_string(d.labels.size()) +
                                                 " labels, expected " + std::to_string(d.rank));
  }
  return d;
}

Weight parse_weight(std::string_view text, int rank) {
  Weight w;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    const auto piece = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
    try {
      w.coordinates.push_back(parse_rational(trim(piece)));
    } catch (const Error& e) {
      parse_failure(text, start, std::string("bad rational: ") + e.what());
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (w.coordinates.size() != static_cast<std::size_t>(rank)) {
    throw Error(ErrorCode::kParseError, "weight '" + std::string(text) + "' has " +
                                            std::to_string(w.coordinates.size()) +
                                            " coordinates, expected " + std::to_string(rank));
  }
  return w;
}

std::vector<char> parse_types(std::string_view text) {
  std::vector<char> out;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c == ',' || c == ' ') continue;
    if (c < 'A' || c > 'G') parse_failure(text, i, "expected a type letter A-G");
    if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(c);
  }
  if (out.empty()) throw Error(ErrorCode::kParseError, "empty type list");
  return out;
}

void apply_config(CommandRequest& req, std::string_view text, const std::vector<std::string>& skip) {
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    const std::string stripped = trim(line);
    if (stripped.empty()) continue;
    const auto eq = stripped.find('=');
    if (eq == std::string::npos) {
      throw Error(ErrorCode::kParseError, "config line " + std::to_string(line_no) + ": expected key=value");
    }
    const std::string key = trim(std::string_view(stripped).substr(0, eq));
    const std::string value = trim(std::string_view(stripped).substr(eq + 1));
    if (std::find(skip.begin(), skip.end(), key) != skip.end()) continue;
    if (key == "types") {
      req.types = parse_types(value);
    } else if (key == "max_rank") {
      req.max_rank = parse_int(value, key);
    } else if (key == "oracle_radius") {
      req.radius = parse_int(value, key);
    } else if (key == "format") {
      req.format = parse_format(value);
    } else if (key == "jobs") {
      req.jobs = static_cast<std::size_t>(parse_int(value, key));
    } else {
      throw Error(ErrorCode::kParseError,
                  "config line " + std::to_string(line_no) + ": unknown key '" + key + "'");
    }
  }
}

int execute_command(const CommandRequest& req, std::ostream& out, std::ostream& err) {
  std::ofstream file;
  std::ostringstream buffer;
  std::ostream& sink = req.output_path ? static_cast<std::ostream&>(buffer) : out;
  int code = 0;
  try {
    if (req.radius < 1) throw Error(ErrorCode::kInvalidArgument, "--radius must be >= 1");
    switch (req.subcommand) {
      case Subcommand::kClassify:
        run_classify(req, sink);
        break;
      case Subcommand::kSurvey:
        run_survey(req, sink, err, code);
        break;
      case Subcommand::kCurvature:
        run_curvature(req, sink);
        break;
      case Subcommand::kStructures:
        run_structures(req, sink);
        break;
      case Subcommand::kVerify:
        run_verify(req, sink, code);
        break;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return is_theorem_violation(e.code()) ? 2 : 1;
  }
  if (req.output_path) {
    file.open(*req.output_path, std::ios::binary);
    if (!file) {
      err << "error: cannot open " << *req.output_path << " for writing\n";
      return 1;
    }
    file << buffer.str();
  }
  return code;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Classify period domains and build invariant complex structures", "pdclass"};
  std::string subcommand, domain, weight, format = "text", out_path, types, suite = "all", config;
  int max_rank = 4, radius = 3;
  std::size_t jobs = 1, limit = 100000;
  bool count_structures = false;

  app.add_option("subcommand", subcommand, "classify | survey | curvature | structures | verify")
      ->required()
      ->check(CLI::IsMember({"classify", "survey", "curvature", "structures", "verify"}));
  app.add_option("domain", domain, "TYPE RANK / labels, e.g. C2/1,1");
  app.add_option("--weight", weight, "comma-separated rationals p/q");
  auto* format_opt = app.add_option("--format", format, "text | json | csv")
                         ->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--out", out_path, "write output to PATH");
  auto* max_rank_opt = app.add_option("--max-rank", max_rank, "largest rank in surveys")
                           ->check(CLI::Range(1, 8));
  auto* types_opt = app.add_option("--types", types, "type letters, e.g. A,B,C");
  auto* radius_opt = app.add_option("--radius", radius, "lattice oracle radius")
                         ->check(CLI::PositiveNumber);
  app.add_option("--suite", suite, "lemmas | equivalence | all")
      ->check(CLI::IsMember({"lemmas", "equivalence", "all"}));
  app.add_option("--config", config, "key=value file; flags override it");
  auto* jobs_opt = app.add_option("--jobs", jobs, "survey worker threads (0 = all cores)");
  app.add_flag("--count-structures", count_structures, "add n_structures to survey rows");
  app.add_option("--limit", limit, "cap on enumerated structures");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }

  CommandRequest req;
  try {
    if (!config.empty()) {
      std::ifstream in(config);
      if (!in) throw Error(ErrorCode::kInvalidArgument, "cannot read config " + config);
      std::stringstream text;
      text << in.rdbuf();
      std::vector<std::string> skip;
      if (format_opt->count()) skip.push_back("format");
      if (max_rank_opt->count()) skip.push_back("max_rank");
      if (types_opt->count()) skip.push_back("types");
      if (radius_opt->count()) skip.push_back("oracle_radius");
      if (jobs_opt->count()) skip.push_back("jobs");
      apply_config(req, text.str(), skip);
    }
    if (subcommand == "classify") req.subcommand = Subcommand::kClassify;
    if (subcommand == "survey") req.subcommand = Subcommand::kSurvey;
    if (subcommand == "curvature") req.subcommand = Subcommand::kCurvature;
    if (subcommand == "structures") req.subcommand = Subcommand::kStructures;
    if (subcommand == "verify") req.subcommand = Subcommand::kVerify;
    if (!domain.empty()) req.domain_spec = domain;
    if (!weight.empty()) req.weight = weight;
    if (!out_path.empty()) req.output_path = out_path;
    if (format_opt->count() || config.empty()) req.format = parse_format(format);
    if (max_rank_opt->count()) req.max_rank = max_rank;
    if (types_opt->count()) req.types = parse_types(types);
    if (radius_opt->count()) req.radius = radius;
    if (jobs_opt->count()) req.jobs = jobs;
    req.suite = suite == "lemmas" ? VerifySuite::kLemmas
                : suite == "equivalence" ? VerifySuite::kEquivalence
                                         : VerifySuite::kAll;
    req.count_structures = count_structures;
    req.enumeration_limit = limit;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return execute_command(req, out, err);
}

}  // namespace pdclass
