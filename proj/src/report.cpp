#include "schurasym/report.hpp"

#include <cstdio>
#include <sstream>
#include <vector>

namespace schurasym {

namespace {

using nlohmann::json;

std::string opt_number(const std::optional<double>& v) { return v ? format_number(*v) : ""; }
// Numbers go into JSON as already-rounded doubles so both formats agree.
double rounded(double v) { return std::stod(format_number(v)); }

class CsvWriter {
 public:
  CsvWriter(const std::string& campaign, const CampaignConfig& config) {
    out_ << "# campaign: " << campaign << "\r\n";
    out_ << "# config: " << config.source.dump() << "\r\n";
  }
  void comment(const std::string& line) { out_ << "# " << line << "\r\n"; }
  void row(const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) out_ << (i ? "," : "") << csv_field(cells[i]);
    out_ << "\r\n";
  }
  std::string str() const { return out_.str(); }

 private:
  std::ostringstream out_;
};

json json_head(const std::string& campaign, const CampaignConfig& config) {
  return json{{"campaign", campaign}, {"config", config.source}};
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

}  // namespace

std::string format_number(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

std::string render(const ConvergenceReport& report, const CampaignConfig& config, OutputFormat f) {
  if (f == OutputFormat::csv) {
    CsvWriter w("verify-t17", config);
    w.row({"N", "lambda1", "exact_log_ratio", "theorem_limit", "abs_error", "steepest_value",
           "pp1_residual"});
    for (const auto& r : report.rows)
      w.row({std::to_string(r.N), std::to_string(r.lambda1), format_number(r.exact),
             format_number(r.limit), format_number(r.abs_error), opt_number(r.steepest),
             format_number(r.pp1_residual)});
    w.comment("summary: monotone=" + yes_no(report.monotone) + " finite=" + yes_no(report.finite) +
              " final_error=" + format_number(report.final_error));
    return w.str();
  }
  json j = json_head("verify-t17", config);
  j["rows"] = json::array();
  for (const auto& r : report.rows)
    j["rows"].push_back({{"N", r.N},
                         {"lambda1", r.lambda1},
                         {"exact_log_ratio", rounded(r.exact)},
                         {"theorem_limit", rounded(r.limit)},
                         {"abs_error", rounded(r.abs_error)},
                         {"steepest_value", r.steepest ? json(rounded(*r.steepest)) : json()},
                         {"pp1_residual", rounded(r.pp1_residual)}});
  j["summary"] = {{"monotone", report.monotone},
                  {"finite", report.finite},
                  {"final_error", rounded(report.final_error)},
                  {"passed", report.passed()}};
  return j.dump(2) + "\n";
}

std::string render(const P28Report& report, const CampaignConfig& config, OutputFormat f) {
  if (f == OutputFormat::csv) {
    CsvWriter w("compare-p28", config);
    w.row({"N", "lambda1", "y", "exact_log_s1", "steepest_value", "difference", "note"});
    for (const auto& r : report.rows)
      w.row({std::to_string(r.N), std::to_string(r.lambda1), format_number(r.y),
             format_number(r.exact), opt_number(r.steepest), opt_number(r.difference), r.note});
    w.comment("summary: decayed=" + yes_no(report.decayed));
    return w.str();
  }
  json j = json_head("compare-p28", config);
  j["rows"] = json::array();
  for (const auto& r : report.rows) {
    json row = {{"N", r.N},
                {"lambda1", r.lambda1},
                {"y", rounded(r.y)},
                {"exact_log_s1", rounded(r.exact)},
                {"steepest_value", r.steepest ? json(rounded(*r.steepest)) : json()},
                {"difference", r.difference ? json(rounded(*r.difference)) : json()}};
    if (!r.note.empty()) row["note"] = r.note;
    j["rows"].push_back(row);
  }
  j["summary"] = {{"decayed", report.decayed}, {"passed", report.passed()}};
  return j.dump(2) + "\n";
}

std::string render(const PP1Report& report, const CampaignConfig& config, OutputFormat f) {
  if (f == OutputFormat::csv) {
    CsvWriter w("verify-pp1", config);
    w.row({"N", "lambda1", "log_s1_over_N", "log_s3_over_N", "residual"});
    for (const auto& r : report.rows)
      w.row({std::to_string(r.N), std::to_string(r.lambda1), format_number(r.log_s1),
             format_number(r.log_s3), format_number(r.residual)});
    w.comment("summary: decreasing=" + yes_no(report.decreasing));
    return w.str();
  }
  json j = json_head("verify-pp1", config);
  j["rows"] = json::array();
  for (const auto& r : report.rows)
    j["rows"].push_back({{"N", r.N},
                         {"lambda1", r.lambda1},
                         {"log_s1_over_N", rounded(r.log_s1)},
                         {"log_s3_over_N", rounded(r.log_s3)},
                         {"residual", rounded(r.residual)}});
  j["summary"] = {{"decreasing", report.decreasing}, {"passed", report.passed()}};
  return j.dump(2) + "\n";
}

std::string render(const MomentReport& report, const CampaignConfig& config, OutputFormat f) {
  const std::string contour = "center=" + format_number(report.contour.center.real()) +
                              " radius=" + format_number(report.contour.radius);
  const std::string cond = "1/(1-kappa)=" + format_number(report.conditioning) +
                           " ill_conditioned=" + yes_no(report.ill_conditioned);
  if (f == OutputFormat::csv) {
    CsvWriter w("moments", config);
    w.comment("contour: " + contour);
    w.comment("conditioning: " + cond);
    if (!report.contour_error.empty()) w.comment("contour_error: " + report.contour_error);
    w.row({"p", "value", "residue_value", "discrepancy"});
    for (const auto& r : report.rows)
      w.row({std::to_string(r.p), format_number(r.quadrature), format_number(r.residues),
             format_number(r.discrepancy)});
    w.comment("summary: passed=" + yes_no(report.passed));
    return w.str();
  }
  json j = json_head("moments", config);
  j["contour"] = {{"center", rounded(report.contour.center.real())},
                  {"radius", rounded(report.contour.radius)}};
  j["conditioning"] = {{"inverse_one_minus_kappa", rounded(report.conditioning)},
                       {"ill_conditioned", report.ill_conditioned}};
  if (!report.contour_error.empty()) j["contour_error"] = report.contour_error;
  j["rows"] = json::array();
  for (const auto& r : report.rows)
    j["rows"].push_back({{"p", r.p},
                         {"value", rounded(r.quadrature)},
                         {"residue_value", rounded(r.residues)},
                         {"discrepancy", rounded(r.discrepancy)}});
  j["summary"] = {{"passed", report.passed}};
  return j.dump(2) + "\n";
}

std::string render(const IdentityReport& report, const CampaignConfig& config, OutputFormat f) {
  if (f == OutputFormat::csv) {
    CsvWriter w("verify-identities", config);
    w.row({"identity", "cases", "failures", "passed"});
    for (const auto& s : report.suites)
      w.row({s.name, std::to_string(s.cases), std::to_string(s.failures), yes_no(s.passed())});
    for (const auto& s : report.suites)
      for (const auto& d : s.failure_details) w.comment("failure " + s.name + ": " + d);
    w.comment("summary: passed=" + yes_no(report.passed()));
    return w.str();
  }
  json j = json_head("verify-identities", config);
  j["identities"] = json::array();
  for (const auto& s : report.suites)
    j["identities"].push_back({{"name", s.name},
                               {"cases", s.cases},
                               {"failures", s.failures},
                               {"failure_details", s.failure_details},
                               {"passed", s.passed()}});
  j["summary"] = {{"passed", report.passed()}};
  return j.dump(2) + "\n";
}

}  // namespace schurasym
