// Python bindings for the main operations: families parse from the same text
// format the CLI reads, results come back as plain dicts of primitives and
// expression strings.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gaussgrass/family_io.hpp"
#include "gaussgrass/parser.hpp"
#include "gaussgrass/report.hpp"

namespace py = pybind11;
namespace gg = gaussgrass;

namespace {

gg::ChartFamily family_of(const std::string& text,
                          const std::string& field_override) {
  std::optional<gg::FieldSpec> fs;
  if (!field_override.empty()) fs = gg::parse_field_spec(field_override);
  return gg::parse_family_text(text, "<string>").to_family(fs);
}

py::list grid_of(const gg::Matrix<gg::RatFunc>& m) {
  py::list rows;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    py::list row;
    for (std::size_t j = 0; j < m.cols(); ++j) row.append(m(i, j).str());
    rows.append(row);
  }
  return rows;
}

py::dict family_dict(const gg::ChartFamily& fam) {
  py::dict d;
  d["field"] = fam.field().str();
  d["ambient"] = fam.ambient;
  d["plane_dim"] = fam.plane_dim;
  d["params"] = fam.ring->params;
  d["f"] = grid_of(fam.chart);
  d["perm"] = fam.coord_perm;
  d["text"] = gg::emit_family_text(fam, "");
  return d;
}

py::dict expansion_dict(const gg::ExpansionResult& ex) {
  py::dict d;
  d[ex.direction == gg::MapDirection::expand ? "m_plus" : "m_minus"] = ex.m_out;
  d["pivots"] = ex.pivots;
  d["g"] = grid_of(ex.g);
  d["perm"] = ex.perm;
  d["family_out"] = family_dict(ex.family_out);
  return d;
}

std::string verdict_of(gg::Verdict v) { return gg::verdict_str(v); }

py::dict analysis_dict(const gg::AnalysisReport& rep) {
  py::dict d;
  d["m_plus"] = rep.m_plus;
  d["m_minus"] = rep.m_minus;
  d["rank_dgamma"] = rep.rank_dgamma;
  d["rank_psi"] = rep.rank_psi;
  d["rank_proj"] = rep.rank_proj;
  if (rep.rank_conormal) {
    d["rank_conormal"] = *rep.rank_conormal;
  } else {
    d["rank_conormal"] = py::none();
  }
  d["gamma_separable_dimension"] = rep.gamma_separable_dimension;
  d["proj_separable_genfinite"] = rep.proj_separable_genfinite;
  d["developable"] = rep.developable;
  d["identity_composition"] = verdict_of(rep.identity_composition);
  d["inclusion_chain"] = verdict_of(rep.inclusion_chain);
  d["diagram_commutes"] = verdict_of(rep.diagram_commutes);
  return d;
}

}  // namespace

PYBIND11_MODULE(_gaussgrass, m) {
  m.doc() = "exact expanding/shrinking maps and Gauss-map diagnostics for "
            "families of planes in projective space";

  py::register_exception<gg::MathError>(m, "MathError");
  py::register_exception<gg::InputError>(m, "InputError");

  m.def(
      "parse_family",
      [](const std::string& text, const std::string& field) {
        return family_dict(family_of(text, field));
      },
      py::arg("text"), py::arg("field") = "",
      "Parse a family file's text; optionally override the coefficient field "
      "(\"QQ\" or \"GF:p\").");

  m.def(
      "expand",
      [](const std::string& text, const std::string& field) {
        return expansion_dict(gg::expand(family_of(text, field)));
      },
      py::arg("text"), py::arg("field") = "", "Expanding map of the family.");

  m.def(
      "shrink",
      [](const std::string& text, const std::string& field) {
        return expansion_dict(gg::shrink(family_of(text, field)));
      },
      py::arg("text"), py::arg("field") = "", "Shrinking map of the family.");

  m.def(
      "gauss",
      [](const std::string& text, const std::string& field) {
        auto fam = family_of(text, field);
        auto variety =
            gg::promote_fiber_params(gg::universal_projection(fam));
        return expansion_dict(gg::gauss_map(variety));
      },
      py::arg("text"), py::arg("field") = "",
      "Gauss map of a plane_dim = 0 parametrized variety.");

  m.def(
      "dual",
      [](const std::string& text, const std::string& field) {
        return family_dict(gg::dual_family(family_of(text, field)));
      },
      py::arg("text"), py::arg("field") = "",
      "Chart-level duality involution.");

  m.def(
      "conormal",
      [](const std::string& text, const std::string& field) {
        auto con = gg::conormal_param(family_of(text, field));
        py::dict d;
        std::vector<std::string> dual_params(
            con.ring->params.begin() + con.base_arity, con.ring->params.end());
        d["dual_params"] = dual_params;
        py::list coeffs;
        for (const auto& c : con.coeffs) coeffs.append(c.str());
        d["coeffs"] = coeffs;
        return d;
      },
      py::arg("text"), py::arg("field") = "",
      "Generalized conormal parametrization.");

  m.def(
      "analyze",
      [](const std::string& text, const std::string& field) {
        return analysis_dict(gg::developability(family_of(text, field)));
      },
      py::arg("text"), py::arg("field") = "",
      "Full rank/separability/developability report.");

  m.def(
      "curve",
      [](const std::string& text, const std::string& field) {
        auto rep = gg::curve_report(family_of(text, field));
        py::dict d;
        d["m_plus"] = rep.m_plus;
        d["m_minus"] = rep.m_minus;
        d["two_m_identity"] = rep.two_m_identity;
        d["developable"] = rep.developable;
        d["equivalences_agree"] = rep.equivalences_agree;
        d["char2_dgamma_zero"] = verdict_of(rep.char2_dgamma_zero);
        return d;
      },
      py::arg("text"), py::arg("field") = "",
      "One-parameter family report.");

  m.def(
      "iterate",
      [](const std::string& text, const std::string& direction, int k,
         const std::string& field) {
        gg::MapDirection dir;
        if (direction == "gamma") {
          dir = gg::MapDirection::expand;
        } else if (direction == "sigma") {
          dir = gg::MapDirection::shrink;
        } else {
          throw gg::InputError("direction must be 'gamma' or 'sigma'");
        }
        py::list out;
        for (const auto& fam : gg::iterate(family_of(text, field), dir, k)) {
          out.append(family_dict(fam));
        }
        return out;
      },
      py::arg("text"), py::arg("direction"), py::arg("k"),
      py::arg("field") = "", "Iterated expanding/shrinking maps.");

  m.def(
      "maxdev",
      [](const std::string& text, const std::string& field) {
        auto fam = family_of(text, field);
        auto variety =
            gg::promote_fiber_params(gg::universal_projection(fam));
        return family_dict(gg::maximal_developable(variety));
      },
      py::arg("text"), py::arg("field") = "",
      "Maximal developable parameter space of a plane_dim = 0 variety.");

  m.def(
      "subst",
      [](const std::string& text, const std::string& poly,
         const std::string& field) {
        auto fam = family_of(text, field);
        std::vector<std::string> zs;
        for (int j = 0; j <= fam.ambient; ++j) {
          zs.push_back("Z" + std::to_string(j));
        }
        auto p = gg::poly_parse(poly, zs, fam.field());
        return gg::substitute_check(gg::universal_projection(fam), p);
      },
      py::arg("text"), py::arg("poly"), py::arg("field") = "",
      "Whether a homogeneous polynomial in Z0..ZN vanishes on the swept "
      "variety.");
}
