#pragma once

#include <optional>
#include <ostream>
#include <vector>

#include <json.hpp>

#include "pdclass/classifier.hpp"
#include "pdclass/oracle.hpp"
#include "pdclass/structures.hpp"

namespace pdclass {

inline constexpr int kReportSchemaVersion = 1;

struct StructureSection {
  std::vector<Root> S;
  std::vector<Root> parabolic;
  std::vector<Root> positive_system_simples;

  friend bool operator==(const StructureSection&, const StructureSection&) = default;
};

StructureSection structure_section(const HodgeGrading& g, const ComplexStructure& cs,
                                   const RootSet& parabolic, const PositiveSystem& ps);

nlohmann::json root_to_json(const Root& r);
nlohmann::json weight_to_json(const Weight& w);
Root root_from_json(const nlohmann::json& j);
Weight weight_from_json(const nlohmann::json& j);

nlohmann::json report_to_json(const DomainReport& report,
                              const std::optional<StructureSection>& structure = std::nullopt);

struct ParsedReport {
  DomainReport report;
  std::optional<StructureSection> structure;
};

/// Inverse of report_to_json. Throws Error(kParseError) on schema mismatch.
ParsedReport report_from_json(const nlohmann::json& j);

void write_report_text(std::ostream& out, const DomainReport& report);
/// One header line and one data line.
void write_report_csv(std::ostream& out, const DomainReport& report);

void write_survey_csv(std::ostream& out, const SurveyResult& survey);
nlohmann::json survey_to_json(const SurveyResult& survey);
void write_survey_text(std::ostream& out, const SurveyResult& survey);

/// "1,0,2"
std::string join_ints(const std::vector<int>& values, char sep = ',');

}  // namespace pdclass
