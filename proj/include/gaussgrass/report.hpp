#ifndef GAUSSGRASS_REPORT_HPP
#define GAUSSGRASS_REPORT_HPP

#include <string>
#include <utility>
#include <vector>

#include "gaussgrass/analysis.hpp"

namespace gaussgrass {

// Ordered key/value report with two deterministic renderings: a readable
// text layout and a machine layout of one "key<TAB>value" record per line.
class ReportDocument {
 public:
  void add(const std::string& key, const std::string& value);
  void add(const std::string& key, int value);
  void add(const std::string& key, bool value);
  void add(const std::string& key, Verdict value);
  void add_matrix(const std::string& key, const Matrix<RatFunc>& m);
  void add_coords(const std::string& key, const std::vector<RatFunc>& v);
  void add_perm(const std::string& key, const std::vector<int>& p);
  void add_params(const std::string& key, const std::vector<std::string>& p);

  std::string render_text() const;
  std::string render_machine() const;

 private:
  // value rendered for machine mode; matrices get a multi-line text layout
  std::vector<std::pair<std::string, std::string>> entries_;
  std::vector<bool> is_matrix_;
};

std::string matrix_brackets(const Matrix<RatFunc>& m);

void add_family_header(ReportDocument& doc, const ChartFamily& fam);
void add_family_grid(ReportDocument& doc, const std::string& key,
                     const ChartFamily& fam);
void add_expansion(ReportDocument& doc, const ExpansionResult& ex);
void add_analysis(ReportDocument& doc, const AnalysisReport& rep);
void add_curve(ReportDocument& doc, const CurveReport& rep);

}  // namespace gaussgrass

#endif
