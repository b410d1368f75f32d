#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include <json.hpp>

#include "classalg/algebra.hpp"
#include "classalg/conjugacy.hpp"
#include "classalg/errors.hpp"
#include "classalg/group_algebra.hpp"
#include "classalg/literals.hpp"
#include "classalg/local_bijection.hpp"
#include "classalg/surface.hpp"
#include "classalg/version.hpp"

namespace classalg {

using json = nlohmann::ordered_json;

inline json coeff_json(const Int& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(v);
  return v.str();  // beyond 64 bits, keep exactness as a string
}

inline json family_json(const FamilyDescriptor& family) {
  json j;
  if (family.is_product()) {
    j["kind"] = "product";
    j["m"] = family.rows();
  } else {
    j["kind"] = "full";
    j["labels"] = family.labels();
  }
  return j;
}

inline json class_json(const ConjugacyClass& c) {
  json j;
  j["family"] = family_json(c.family());
  j["n"] = c.ambient();
  j["rep"] = c.rep().to_literal(false);
  return j;
}

inline json algebra_json(const AlgebraElement& u) {
  json j;
  j["family"] = family_json(u.family());
  json terms = json::array();
  for (const auto& [c, a] : u.terms()) {
    json t;
    t["n"] = c.ambient();
    t["rep"] = c.rep().to_literal(false);
    t["coeff"] = coeff_json(a);
    terms.push_back(std::move(t));
  }
  j["terms"] = std::move(terms);
  return j;
}

inline std::string algebra_text(const AlgebraElement& u) {
  if (u.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [c, a] : u.terms()) {
    Int coeff = a;
    if (first) {
      if (coeff < 0) { out += "- "; coeff = -coeff; }
    } else {
      out += coeff < 0 ? " - " : " + ";
      if (coeff < 0) coeff = -coeff;
    }
    out += coeff.str() + "*B[" + c.key() + "]";
    first = false;
  }
  return out;
}

inline json local_bijection_json(const LocalBijection& t) {
  json j;
  j["N"] = t.ambient();
  j["Omega"] = t.support();
  j["body"] = t.trivial_extension().to_literal();
  return j;
}

inline json stability_report_json(const StabilityReport& report) {
  json j;
  j["family"] = family_json(report.family);
  j["g"] = class_json(report.g);
  j["h"] = class_json(report.h);
  json constants = json::array();
  for (const auto& [r, coeff] : report.constants) {
    json c;
    c["r"] = class_json(r);
    c["coeff"] = coeff_json(coeff);
    constants.push_back(std::move(c));
  }
  j["constants"] = std::move(constants);
  json checks = json::array();
  for (const auto& check : report.checks) {
    json c;
    c["N"] = check.ambient;
    c["pass"] = check.pass;
    c["lhs_terms"] = check.lhs_terms;
    c["rhs_terms"] = check.rhs_terms;
    checks.push_back(std::move(c));
  }
  j["checks"] = std::move(checks);
  return j;
}

inline std::string stability_report_text(const StabilityReport& report) {
  std::string out = "constants for B[" + report.g.key() + "] * B[" + report.h.key() + "]:\n";
  for (const auto& [r, coeff] : report.constants)
    out += "  " + coeff.str() + "*B[" + r.key() + "]\n";
  for (const auto& check : report.checks)
    out += "N=" + std::to_string(check.ambient) + ": " + (check.pass ? "ok" : "MISMATCH") +
           " (lhs terms " + std::to_string(check.lhs_terms) + ", rhs terms " +
           std::to_string(check.rhs_terms) + ")\n";
  out += report.all_pass() ? "verified\n" : "FAILED\n";
  return out;
}

// All structure constants for basis pairs with ambients <= n_max, as CSV with
// header family,g,h,r,coeff. Rows are ordered by (g, h, r) in class order, so
// reruns are byte-identical.
inline std::string structure_constant_table_csv(const FamilyDescriptor& family, int n_max,
                                                const StarOptions& opt = {},
                                                bool override_guard = false) {
  std::vector<ConjugacyClass> basis;
  for (int n = 0; n <= n_max; ++n) {
    auto classes = class_enumerate(family, n, override_guard);
    basis.insert(basis.end(), classes.begin(), classes.end());
  }
  const std::string family_str = family.to_string();
  std::string out = "family,g,h,r,coeff\n";
  for (const auto& g : basis)
    for (const auto& h : basis) {
      auto product = star(AlgebraElement::basis(g), AlgebraElement::basis(h), opt);
      for (const auto& [r, coeff] : product.terms())
        out += family_str + "," + g.key() + "," + h.key() + "," + r.key() + "," + coeff.str() + "\n";
    }
  return out;
}

inline json table_manifest_json(const FamilyDescriptor& family, int n_max) {
  json j;
  j["family"] = family.to_string();
  j["n_max"] = n_max;
  j["version"] = std::string(kVersion);
  return j;
}

inline json surface_json(const CheckerSurface& s) {
  json j;
  j["N"] = s.triangles;
  j["red"] = s.red.images();
  j["yellow"] = s.yellow.images();
  auto topology = surface_topology(s);
  json t;
  json comps = json::array();
  for (const auto& comp : topology.components) {
    json c;
    c["faces"] = comp.faces;
    c["edges"] = comp.edges;
    c["vertices"] = comp.vertices;
    c["chi"] = comp.euler;
    c["genus"] = comp.genus;
    comps.push_back(std::move(c));
  }
  t["components"] = std::move(comps);
  t["faces"] = topology.faces;
  t["edges"] = topology.edges;
  t["vertices"] = topology.vertices;
  t["chi"] = topology.euler;
  j["topology"] = std::move(t);
  return j;
}

// Face-adjacency multigraph: one node per triangle, one edge per gluing.
inline std::string surface_dot(const CheckerSurface& s) {
  std::string out = "graph checker_surface {\n";
  for (int i = 1; i <= s.triangles; ++i) out += "  p" + std::to_string(i) + ";\n";
  for (int i = 1; i <= s.triangles; ++i) out += "  m" + std::to_string(i) + ";\n";
  for (int i = 1; i <= s.triangles; ++i)
    out += "  p" + std::to_string(i) + " -- m" + std::to_string(s.red.apply(i)) + " [color=red];\n";
  for (int i = 1; i <= s.triangles; ++i)
    out += "  p" + std::to_string(i) + " -- m" + std::to_string(s.yellow.apply(i)) + " [color=yellow];\n";
  for (int i = 1; i <= s.triangles; ++i)
    out += "  p" + std::to_string(i) + " -- m" + std::to_string(i) + " [color=blue];\n";
  out += "}\n";
  return out;
}

inline std::string surface_export(const CheckerSurface& s, const std::string& format) {
  if (format == "json") return surface_json(s).dump() + "\n";
  if (format == "dot") return surface_dot(s);
  throw unsupported_format("unknown surface export format '" + format + "'");
}

inline CheckerSurface surface_parse_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw parse_error(std::string("bad surface JSON: ") + e.what());
  }
  if (!j.contains("N") || !j.contains("red") || !j.contains("yellow"))
    throw parse_error("surface JSON needs N, red and yellow fields");
  const int n = j["N"].get<int>();
  auto red = Permutation::from_images(j["red"].get<std::vector<int>>());
  auto yellow = Permutation::from_images(j["yellow"].get<std::vector<int>>());
  return CheckerSurface(n, std::move(red), std::move(yellow));
}

}  // namespace classalg
