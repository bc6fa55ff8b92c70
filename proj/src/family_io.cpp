#include "gaussgrass/family_io.hpp"

#include <fstream>
#include <sstream>

#include "gaussgrass/parser.hpp"

namespace gaussgrass {

namespace {

[[noreturn]] void schema_error(const std::string& source, int line,
                               const std::string& what) {
  throw InputError(source + ":" + std::to_string(line) + ": " + what);
}

std::string strip_comment(const std::string& line) {
  auto pos = line.find('#');
  return pos == std::string::npos ? line : line.substr(0, pos);
}

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream is(s);
  std::vector<std::string> out;
  std::string w;
  while (is >> w) out.push_back(w);
  return out;
}

int parse_int(const std::string& source, int line, const std::string& key,
              const std::string& value) {
  try {
    std::size_t used = 0;
    int v = std::stoi(value, &used);
    if (used != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    schema_error(source, line, "key '" + key + "' needs an integer, got '" +
                                   value + "'");
  }
}

// Split "[ [a, b], [c] ]" into rows of entry strings; commas and brackets
// only count at their own nesting level, so entries may contain parentheses.
std::vector<std::vector<std::string>> parse_grid(const std::string& source,
                                                 int line,
                                                 const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip();
  if (i >= text.size() || text[i] != '[') {
    schema_error(source, line, "grid must start with '['");
  }
  ++i;
  while (true) {
    skip();
    if (i < text.size() && text[i] == ']') {
      ++i;
      break;
    }
    if (i >= text.size() || text[i] != '[') {
      schema_error(source, line, "grid row must start with '['");
    }
    ++i;
    std::vector<std::string> row;
    std::string entry;
    int depth = 0;
    while (i < text.size()) {
      char c = text[i];
      if (c == '(') ++depth;
      if (c == ')') --depth;
      if (depth == 0 && (c == ',' || c == ']')) {
        std::string e = trim(entry);
        if (!e.empty() || !row.empty() || c == ',') row.push_back(e);
        entry.clear();
        ++i;
        if (c == ']') break;
        continue;
      }
      entry += c;
      ++i;
    }
    for (const auto& e : row) {
      if (e.empty()) schema_error(source, line, "empty grid entry");
    }
    rows.push_back(std::move(row));
    skip();
    if (i < text.size() && text[i] == ',') {
      ++i;
      continue;
    }
  }
  skip();
  if (i != text.size()) schema_error(source, line, "trailing text after grid");
  return rows;
}

std::vector<int> parse_int_list(const std::string& source, int line,
                                const std::string& text) {
  std::string t = trim(text);
  if (t.size() < 2 || t.front() != '[' || t.back() != ']') {
    schema_error(source, line, "perm must be a bracketed integer list");
  }
  std::vector<int> out;
  std::istringstream is(t.substr(1, t.size() - 2));
  std::string tok;
  while (std::getline(is, tok, ',')) {
    tok = trim(tok);
    if (tok.empty()) schema_error(source, line, "empty entry in perm");
    out.push_back(parse_int(source, line, "perm", tok));
  }
  return out;
}

}  // namespace

FamilyFile parse_family_text(std::string_view text, const std::string& source) {
  FamilyFile out;
  bool saw_field = false, saw_ambient = false, saw_plane_dim = false,
       saw_params = false, saw_grid = false;

  std::istringstream is{std::string(text)};
  std::string raw;
  int lineno = 0;
  while (std::getline(is, raw)) {
    ++lineno;
    const int key_line = lineno;
    std::string line = trim(strip_comment(raw));
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) {
      schema_error(source, key_line, "expected 'key = value'");
    }
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));

    // Bracketed values may span lines; gather until brackets balance.
    if (!value.empty() && value[0] == '[') {
      long depth = 0;
      for (char c : value) depth += (c == '[') - (c == ']');
      while (depth > 0 && std::getline(is, raw)) {
        ++lineno;
        std::string more = trim(strip_comment(raw));
        for (char c : more) depth += (c == '[') - (c == ']');
        value += " " + more;
      }
      if (depth != 0) schema_error(source, key_line, "unbalanced brackets");
    }

    if (key == "label") {
      out.label = value;
    } else if (key == "field") {
      try {
        out.field = parse_field_spec(value);
      } catch (const InputError& e) {
        schema_error(source, key_line, e.what());
      }
      saw_field = true;
    } else if (key == "ambient") {
      out.ambient = parse_int(source, key_line, key, value);
      saw_ambient = true;
    } else if (key == "plane_dim") {
      out.plane_dim = parse_int(source, key_line, key, value);
      saw_plane_dim = true;
    } else if (key == "params") {
      out.params = split_ws(value);
      saw_params = true;
    } else if (key == "f") {
      out.grid = parse_grid(source, key_line, value);
      saw_grid = true;
    } else if (key == "perm") {
      out.perm = parse_int_list(source, key_line, value);
    } else if (key.rfind("expect_", 0) == 0) {
      out.expect[key] = value;
    } else {
      schema_error(source, key_line, "unknown key '" + key + "'");
    }
  }
  if (!saw_field) throw InputError(source + ": missing key 'field'");
  if (!saw_ambient) throw InputError(source + ": missing key 'ambient'");
  if (!saw_plane_dim) throw InputError(source + ": missing key 'plane_dim'");
  if (!saw_params) throw InputError(source + ": missing key 'params'");
  if (!saw_grid) throw InputError(source + ": missing key 'f'");

  const int N = out.ambient, m = out.plane_dim;
  if (N < 1 || m < 0 || m > N) {
    throw InputError(source + ": bad dimensions ambient = " + std::to_string(N) +
                     ", plane_dim = " + std::to_string(m));
  }
  if (out.grid.size() != std::size_t(m + 1)) {
    throw InputError(source + ": grid 'f' has " + std::to_string(out.grid.size()) +
                     " rows, expected plane_dim+1 = " + std::to_string(m + 1));
  }
  for (const auto& row : out.grid) {
    if (row.size() != std::size_t(N - m)) {
      throw InputError(source + ": grid 'f' row has " +
                       std::to_string(row.size()) +
                       " entries, expected ambient-plane_dim = " +
                       std::to_string(N - m));
    }
  }
  return out;
}

FamilyFile parse_family_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open family file '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_family_text(buf.str(), path.string());
}

ChartFamily FamilyFile::to_family(
    const std::optional<FieldSpec>& field_override) const {
  FieldSpec fs = field_override.value_or(field);
  RingPtr ring = make_ring(fs, params);
  Matrix<RatFunc> chart(plane_dim + 1, ambient - plane_dim,
                        RatFunc::zero(ring));
  for (int i = 0; i <= plane_dim; ++i) {
    for (int t = 0; t < ambient - plane_dim; ++t) {
      try {
        chart(i, t) = ratfunc_parse(grid[i][t], ring);
      } catch (const InputError& e) {
        throw InputError("entry f[" + std::to_string(i) + "][" +
                         std::to_string(t) + "] = '" + grid[i][t] +
                         "': " + e.what());
      }
    }
  }
  return ChartFamily(ambient, plane_dim, std::move(ring), std::move(chart),
                     perm);
}

ChartFamily load_family(const std::filesystem::path& path,
                        const std::optional<FieldSpec>& field_override) {
  return parse_family_file(path).to_family(field_override);
}

std::string emit_family_text(const ChartFamily& fam, const std::string& label) {
  std::ostringstream os;
  if (!label.empty()) os << "label = " << label << "\n";
  os << "field = " << fam.field().str() << "\n";
  os << "ambient = " << fam.ambient << "\n";
  os << "plane_dim = " << fam.plane_dim << "\n";
  os << "params =";
  for (const auto& p : fam.ring->params) os << " " << p;
  os << "\n";
  os << "f = [\n";
  for (std::size_t i = 0; i < fam.chart.rows(); ++i) {
    os << "  [ ";
    for (std::size_t j = 0; j < fam.chart.cols(); ++j) {
      if (j) os << ", ";
      os << fam.chart(i, j).str();
    }
    os << " ]" << (i + 1 < fam.chart.rows() ? "," : "") << "\n";
  }
  os << "]\n";
  os << "perm = [";
  for (std::size_t i = 0; i < fam.coord_perm.size(); ++i) {
    if (i) os << ", ";
    os << fam.coord_perm[i];
  }
  os << "]\n";
  return os.str();
}

}  // namespace gaussgrass
