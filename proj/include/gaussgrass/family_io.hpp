#ifndef GAUSSGRASS_FAMILY_IO_HPP
#define GAUSSGRASS_FAMILY_IO_HPP

#include <filesystem>
#include <map>
#include <optional>

#include "gaussgrass/chart.hpp"

namespace gaussgrass {

// Line-oriented family file: "key = value" entries plus a bracketed
// expression grid. Keys: label (optional), field, ambient, plane_dim,
// params, f, perm (optional), expect_* (optional fixture assertions).
// '#' starts a comment. See the README for the grammar.
struct FamilyFile {
  std::string label;
  FieldSpec field = FieldSpec::rationals();
  int ambient = 0;
  int plane_dim = 0;
  std::vector<std::string> params;
  std::vector<std::vector<std::string>> grid;
  std::vector<int> perm;  // empty = identity
  std::map<std::string, std::string> expect;

  ChartFamily to_family(
      const std::optional<FieldSpec>& field_override = std::nullopt) const;
};

FamilyFile parse_family_text(std::string_view text, const std::string& source);
FamilyFile parse_family_file(const std::filesystem::path& path);

ChartFamily load_family(
    const std::filesystem::path& path,
    const std::optional<FieldSpec>& field_override = std::nullopt);

// Deterministic re-parsable rendering.
std::string emit_family_text(const ChartFamily& fam, const std::string& label);

}  // namespace gaussgrass

#endif
