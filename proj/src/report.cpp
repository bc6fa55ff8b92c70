#include "gaussgrass/report.hpp"

#include <sstream>

namespace gaussgrass {

std::string matrix_brackets(const Matrix<RatFunc>& m) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i) os << ", ";
    os << "[";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) os << ", ";
      os << m(i, j).str();
    }
    os << "]";
  }
  os << "]";
  return os.str();
}

void ReportDocument::add(const std::string& key, const std::string& value) {
  entries_.emplace_back(key, value);
  is_matrix_.push_back(false);
}

void ReportDocument::add(const std::string& key, int value) {
  add(key, std::to_string(value));
}

void ReportDocument::add(const std::string& key, bool value) {
  add(key, std::string(value ? "true" : "false"));
}

void ReportDocument::add(const std::string& key, Verdict value) {
  add(key, verdict_str(value));
}

void ReportDocument::add_matrix(const std::string& key,
                                const Matrix<RatFunc>& m) {
  entries_.emplace_back(key, matrix_brackets(m));
  is_matrix_.push_back(true);
}

void ReportDocument::add_coords(const std::string& key,
                                const std::vector<RatFunc>& v) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ", ";
    os << v[i].str();
  }
  os << "]";
  add(key, os.str());
}

void ReportDocument::add_perm(const std::string& key,
                              const std::vector<int>& p) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) os << ", ";
    os << p[i];
  }
  os << "]";
  add(key, os.str());
}

void ReportDocument::add_params(const std::string& key,
                                const std::vector<std::string>& p) {
  std::ostringstream os;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) os << " ";
    os << p[i];
  }
  add(key, os.str());
}

namespace {

// "[[a, b], [c, d]]" -> {"[a, b]", "[c, d]"}. Expression entries use only
// parentheses, so brackets always delimit rows.
std::vector<std::string> split_grid_rows(const std::string& v) {
  std::vector<std::string> rows;
  int depth = 0;
  std::string cur;
  for (char c : v) {
    if (c == '[') {
      ++depth;
      if (depth == 2) cur = "[";
      continue;
    }
    if (c == ']') {
      --depth;
      if (depth == 1) {
        cur += ']';
        rows.push_back(cur);
        cur.clear();
      }
      continue;
    }
    if (depth >= 2) cur += c;
  }
  return rows;
}

}  // namespace

std::string ReportDocument::render_text() const {
  std::ostringstream os;
  for (std::size_t k = 0; k < entries_.size(); ++k) {
    const auto& [key, value] = entries_[k];
    if (!is_matrix_[k]) {
      os << key << ": " << value << "\n";
      continue;
    }
    os << key << ":\n";
    auto rows = split_grid_rows(value);
    if (rows.empty()) os << "  []\n";
    for (const auto& row : rows) os << "  " << row << "\n";
  }
  return os.str();
}

std::string ReportDocument::render_machine() const {
  std::ostringstream os;
  for (const auto& [key, value] : entries_) {
    os << key << "\t" << value << "\n";
  }
  return os.str();
}

void add_family_header(ReportDocument& doc, const ChartFamily& fam) {
  doc.add("field", fam.field().str());
  doc.add("ambient", fam.ambient);
  doc.add("plane_dim", fam.plane_dim);
  doc.add_params("params", fam.ring->params);
}

void add_family_grid(ReportDocument& doc, const std::string& key,
                     const ChartFamily& fam) {
  doc.add_matrix(key, fam.chart);
  doc.add_perm(key + "_perm", fam.coord_perm);
}

void add_expansion(ReportDocument& doc, const ExpansionResult& ex) {
  const bool expanding = ex.direction == MapDirection::expand;
  doc.add(expanding ? "m_plus" : "m_minus", ex.m_out);
  doc.add_perm("pivots", ex.pivots);
  doc.add_matrix("g", ex.g);
  doc.add_perm("perm", ex.perm);
  add_family_grid(doc, "family_out", ex.family_out);
}

void add_analysis(ReportDocument& doc, const AnalysisReport& rep) {
  doc.add("n_params", rep.n_params);
  doc.add("m_plus", rep.m_plus);
  doc.add("m_minus", rep.m_minus);
  doc.add("rank_dgamma", rep.rank_dgamma);
  doc.add("rank_psi", rep.rank_psi);
  doc.add("rank_proj", rep.rank_proj);
  if (rep.rank_conormal) {
    doc.add("rank_conormal", *rep.rank_conormal);
  } else {
    doc.add("rank_conormal", std::string("undefined (m_plus = N)"));
  }
  doc.add("gamma_separable_dimension", rep.gamma_separable_dimension);
  doc.add("proj_separable_genfinite", rep.proj_separable_genfinite);
  doc.add("developable", rep.developable);
  doc.add("identity_composition", rep.identity_composition);
  doc.add("inclusion_chain", rep.inclusion_chain);
  doc.add("diagram_commutes", rep.diagram_commutes);
}

void add_curve(ReportDocument& doc, const CurveReport& rep) {
  doc.add("m_plus", rep.m_plus);
  doc.add("m_minus", rep.m_minus);
  doc.add("two_m_identity", rep.two_m_identity);
  doc.add("developable", rep.developable);
  doc.add("m_plus_is_m_plus_1", rep.mplus_is_m_plus_1);
  doc.add("m_minus_is_m_minus_1", rep.mminus_is_m_minus_1);
  doc.add("equivalences_agree", rep.equivalences_agree);
  doc.add("char2_dgamma_zero", rep.char2_dgamma_zero);
}

}  // namespace gaussgrass
