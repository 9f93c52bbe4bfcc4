#include "pdclass/report.hpp"

#include <iomanip>

#include "pdclass/error.hpp"

namespace pdclass {

using nlohmann::json;

std::string join_ints(const std::vector<int>& values, char sep) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += sep;
    out += std::to_string(values[i]);
  }
  return out;
}

StructureSection structure_section(const HodgeGrading& g, const ComplexStructure& cs,
                                   const RootSet& parabolic, const PositiveSystem& ps) {
  const RootSystem& rs = g.root_system();
  StructureSection out;
  for (RootId id : cs.S) out.S.push_back(rs.root(id));
  for (RootId id : parabolic) out.parabolic.push_back(rs.root(id));
  for (RootId id : ps.simple_roots) out.positive_system_simples.push_back(rs.root(id));
  return out;
}

json root_to_json(const Root& r) { return r.coefficients; }

json weight_to_json(const Weight& w) {
  json out = json::array();
  for (const auto& x : w.coordinates) out.push_back(to_string(x));
  return out;
}

Root root_from_json(const json& j) { return Root{j.get<std::vector<int>>()}; }

Weight weight_from_json(const json& j) {
  Weight w;
  for (const auto& x : j) w.coordinates.push_back(parse_rational(x.get<std::string>()));
  return w;
}

namespace {

json roots_to_json(const std::vector<Root>& roots) {
  json out = json::array();
  for (const auto& r : roots) out.push_back(root_to_json(r));
  return out;
}

std::vector<Root> roots_from_json(const json& j) {
  std::vector<Root> out;
  for (const auto& r : j) out.push_back(root_from_json(r));
  return out;
}

json certificate_to_json(const FarkasCertificate& cert) {
  json out = json::array();
  for (const auto& c : cert.combinations) {
    json coeffs = json::array();
    for (const auto& y : c.coefficients) coeffs.push_back(to_string(y));
    out.push_back({{"axis", c.axis}, {"sign", c.sign}, {"coefficients", coeffs}});
  }
  return out;
}

FarkasCertificate certificate_from_json(const json& j) {
  FarkasCertificate cert;
  for (const auto& c : j) {
    DirectionCombination d;
    d.axis = c.at("axis").get<std::size_t>();
    d.sign = c.at("sign").get<int>();
    for (const auto& y : c.at("coefficients")) {
      d.coefficients.push_back(parse_rational(y.get<std::string>()));
    }
    cert.combinations.push_back(std::move(d));
  }
  return cert;
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

std::string root_text(const Root& r) { return "(" + join_ints(r.coefficients) + ")"; }

std::string csv_quote(const std::string& s) { return "\"" + s + "\""; }

}  // namespace

json report_to_json(const DomainReport& report, const std::optional<StructureSection>& structure) {
  json j;
  j["schema_version"] = kReportSchemaVersion;
  j["domain"] = {{"type", std::string(1, report.type_label)},
                 {"rank", report.rank},
                 {"labels", report.labels}};
  j["dims"] = {{"dim_D", report.dim_D},
               {"dim_KV", report.dim_KV},
               {"m0", report.m0},
               {"two_rho_nc", report.two_rho_nc}};
  j["flags"] = {{"classical", report.classical},
                {"hermitian_type", report.hermitian_type},
                {"bracket_generates", report.bracket_generates},
                {"cycle_chain_connected", report.cycle_chain_connected}};
  json w = json::object();
  if (report.witness_nonclassical) {
    w["nonclassical_pair"] = {root_to_json(report.witness_nonclassical->first),
                              root_to_json(report.witness_nonclassical->second)};
  }
  if (report.witness_classical) w["classical_weight"] = weight_to_json(*report.witness_classical);
  if (report.farkas) w["farkas_summary"] = certificate_to_json(*report.farkas);
  w["closure_trace"] = roots_to_json(report.closure_trace);
  j["witnesses"] = w;
  if (structure) {
    j["structure"] = {{"S", roots_to_json(structure->S)},
                      {"parabolic", roots_to_json(structure->parabolic)},
                      {"positive_system_simples", roots_to_json(structure->positive_system_simples)}};
  }
  return j;
}

ParsedReport report_from_json(const json& j) {
  try {
    if (j.at("schema_version").get<int>() != kReportSchemaVersion) {
      throw Error(ErrorCode::kParseError, "unsupported schema_version");
    }
    ParsedReport out;
    DomainReport& r = out.report;
    const auto& domain = j.at("domain");
    const auto type = domain.at("type").get<std::string>();
    if (type.size() != 1) throw Error(ErrorCode::kParseError, "domain.type must be one letter");
    r.type_label = type[0];
    r.rank = domain.at("rank").get<int>();
    r.labels = domain.at("labels").get<std::vector<int>>();
    const auto& dims = j.at("dims");
    r.dim_D = dims.at("dim_D").get<std::size_t>();
    r.dim_KV = dims.at("dim_KV").get<std::size_t>();
    r.m0 = dims.at("m0").get<std::size_t>();
    r.two_rho_nc = dims.at("two_rho_nc").get<std::vector<int>>();
    const auto& flags = j.at("flags");
    r.classical = flags.at("classical").get<bool>();
    r.hermitian_type = flags.at("hermitian_type").get<bool>();
    r.bracket_generates = flags.at("bracket_generates").get<bool>();
    r.cycle_chain_connected = flags.at("cycle_chain_connected").get<bool>();
    const auto& w = j.at("witnesses");
    if (w.contains("nonclassical_pair")) {
      const auto& p = w.at("nonclassical_pair");
      r.witness_nonclassical = std::make_pair(root_from_json(p.at(0)), root_from_json(p.at(1)));
    }
    if (w.contains("classical_weight")) r.witness_classical = weight_from_json(w.at("classical_weight"));
    if (w.contains("farkas_summary")) r.farkas = certificate_from_json(w.at("farkas_summary"));
    r.closure_trace = roots_from_json(w.at("closure_trace"));
    if (j.contains("structure")) {
      const auto& s = j.at("structure");
      out.structure = StructureSection{roots_from_json(s.at("S")),
                                       roots_from_json(s.at("parabolic")),
                                       roots_from_json(s.at("positive_system_simples"))};
    }
    return out;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParseError, std::string("report JSON: ") + e.what());
  }
}

void write_report_text(std::ostream& out, const DomainReport& r) {
  out << "domain: " << r.spec_string() << '\n';
  out << "classical: " << yes_no(r.classical) << '\n';
  out << "hermitian_type: " << yes_no(r.hermitian_type) << '\n';
  out << "dim_D: " << r.dim_D << "  dim_KV: " << r.dim_KV << "  m0: " << r.m0 << '\n';
  out << "two_rho_nc: (" << join_ints(r.two_rho_nc) << ")\n";
  out << "bracket_generates: " << yes_no(r.bracket_generates) << '\n';
  out << "cycle_chain_connected: " << yes_no(r.cycle_chain_connected) << '\n';
  if (r.witness_nonclassical) {
    out << "nonclassical_pair: " << root_text(r.witness_nonclassical->first) << " + "
        << root_text(r.witness_nonclassical->second) << '\n';
  }
  if (r.witness_classical) {
    out << "classical_weight: (";
    const auto& c = r.witness_classical->coordinates;
    for (std::size_t i = 0; i < c.size(); ++i) out << (i ? "," : "") << to_string(c[i]);
    out << ")\n";
  }
  if (r.farkas) out << "farkas_directions: " << r.farkas->combinations.size() << '\n';
}

void write_report_csv(std::ostream& out, const DomainReport& r) {
  out << "type,rank,labels,classical,hermitian,m0,dim_D,dim_KV,bracket_generates\n";
  out << r.type_label << ',' << r.rank << ',' << csv_quote(join_ints(r.labels)) << ','
      << yes_no(r.classical) << ',' << yes_no(r.hermitian_type) << ',' << r.m0 << ','
      << r.dim_D << ',' << r.dim_KV << ',' << yes_no(r.bracket_generates) << '\n';
}

void write_survey_csv(std::ostream& out, const SurveyResult& survey) {
  const bool with_structures = !survey.rows.empty() && survey.rows.front().n_structures;
  out << "type,rank,labels,classical,hermitian,m0,dim_D";
  if (with_structures) out << ",n_structures";
  out << '\n';
  for (const auto& row : survey.rows) {
    out << row.type_label << ',' << row.rank << ',' << csv_quote(join_ints(row.labels)) << ','
        << yes_no(row.classical) << ',' << yes_no(row.hermitian) << ',' << row.m0 << ','
        << row.dim_D;
    if (with_structures) {
      out << ',';
      if (row.n_structures) out << *row.n_structures;
    }
    out << '\n';
  }
}

json survey_to_json(const SurveyResult& survey) {
  json j;
  j["schema_version"] = kReportSchemaVersion;
  json rows = json::array();
  for (const auto& row : survey.rows) {
    json r = {{"type", std::string(1, row.type_label)},
              {"rank", row.rank},
              {"labels", row.labels},
              {"classical", row.classical},
              {"hermitian", row.hermitian},
              {"m0", row.m0},
              {"dim_D", row.dim_D}};
    if (row.n_structures) r["n_structures"] = *row.n_structures;
    rows.push_back(std::move(r));
  }
  j["rows"] = rows;
  json summaries = json::array();
  for (const auto& s : survey.summaries) {
    summaries.push_back({{"type", std::string(1, s.type_label)},
                         {"rank", s.rank},
                         {"total", s.total},
                         {"classical", s.classical},
                         {"nonclassical", s.nonclassical},
                         {"hermitian", s.hermitian}});
  }
  j["summaries"] = summaries;
  j["failures"] = survey.failures;
  return j;
}

void write_survey_text(std::ostream& out, const SurveyResult& survey) {
  out << std::left << std::setw(8) << "system" << std::right << std::setw(7) << "total"
      << std::setw(11) << "classical" << std::setw(14) << "nonclassical" << std::setw(11)
      << "hermitian" << '\n';
  for (const auto& s : survey.summaries) {
    out << std::left << std::setw(8) << (std::string(1, s.type_label) + std::to_string(s.rank))
        << std::right << std::setw(7) << s.total << std::setw(11) << s.classical
        << std::setw(14) << s.nonclassical << std::setw(11) << s.hermitian << '\n';
  }
  out << "failures: " << survey.failures.size() << '\n';
  for (const auto& f : survey.failures) out << "  " << f << '\n';
}

}  // namespace pdclass
