#include <catch2/catch_amalgamated.hpp>

#include "classalg/serialize.hpp"
#include "helpers.hpp"

using classalg::AlgebraElement;
using classalg::CheckerSurface;
using classalg::FamilyDescriptor;
using classalg::Int;
using classalg::LocalBijection;
using classalg::Permutation;
using classalg::algebra_json;
using classalg::algebra_text;
using classalg::canonicalize;
using classalg::coeff_json;
using classalg::parse_element;
using classalg::star;
using classalg::structure_constant_table_csv;
using classalg::surface_export;
using classalg::surface_parse_json;
using classalg::verify_stability;

namespace {
const FamilyDescriptor s1 = FamilyDescriptor::product(1);

AlgebraElement bvec(const FamilyDescriptor& family, const std::string& literal) {
  return AlgebraElement::basis(canonicalize(parse_element(family, literal)));
}
}  // namespace

TEST_CASE("coefficients stay exact in JSON") {
  CHECK(coeff_json(Int(42)).is_number_integer());
  CHECK(coeff_json(Int(-7)).get<std::int64_t>() == -7);
  Int huge("9223372036854775807");
  CHECK(coeff_json(huge).is_number_integer());
  CHECK(coeff_json(huge + 1).is_string());
  CHECK(coeff_json(huge + 1).get<std::string>() == "9223372036854775808");
}

TEST_CASE("algebra elements render deterministically") {
  auto product = star(bvec(s1, "(1 2)"), bvec(s1, "(1 2)"));
  CHECK(algebra_text(product) == "2*B[e@2] + 4*B[(1 2 3)@3] + 1*B[(1 2)(3 4)@4]");
  CHECK(algebra_json(product).dump() ==
        R"js({"family":{"kind":"product","m":1},"terms":[{"n":2,"rep":"e","coeff":2},)js"
        R"js({"n":3,"rep":"(1 2 3)","coeff":4},{"n":4,"rep":"(1 2)(3 4)","coeff":1}]})js");

  CHECK(algebra_text(AlgebraElement::zero(s1)) == "0");
  auto mixed = bvec(s1, "(1 2)") - Int(2) * bvec(s1, "e@1");
  CHECK(algebra_text(mixed) == "- 2*B[e@1] + 1*B[(1 2)@2]");
}

TEST_CASE("family JSON carries the shape") {
  CHECK(classalg::family_json(FamilyDescriptor::product(2)).dump() ==
        R"({"kind":"product","m":2})");
  CHECK(classalg::family_json(FamilyDescriptor::full({"x", "y"})).dump() ==
        R"({"kind":"full","labels":["x","y"]})");
}

TEST_CASE("structure constant tables are frozen byte for byte") {
  const std::string csv = structure_constant_table_csv(s1, 1);
  CHECK(csv ==
        "family,g,h,r,coeff\n"
        "s1,e@0,e@0,e@0,1\n"
        "s1,e@0,e@1,e@1,1\n"
        "s1,e@1,e@0,e@1,1\n"
        "s1,e@1,e@1,e@1,1\n"
        "s1,e@1,e@1,e@2,1\n");
  CHECK(structure_constant_table_csv(s1, 2) == structure_constant_table_csv(s1, 2));

  auto manifest = classalg::table_manifest_json(s1, 2);
  CHECK(manifest.dump() == R"({"family":"s1","n_max":2,"version":"0.1.0"})");
}

TEST_CASE("stability reports") {
  auto t = canonicalize(parse_element(s1, "(1 2)"));
  auto report = verify_stability(t, t, 0, 2);
  CHECK(classalg::stability_report_text(report) ==
        "constants for B[(1 2)@2] * B[(1 2)@2]:\n"
        "  2*B[e@2]\n"
        "  4*B[(1 2 3)@3]\n"
        "  1*B[(1 2)(3 4)@4]\n"
        "N=0: ok (lhs terms 0, rhs terms 0)\n"
        "N=1: ok (lhs terms 0, rhs terms 0)\n"
        "N=2: ok (lhs terms 1, rhs terms 1)\n"
        "verified\n");
  auto j = classalg::stability_report_json(report);
  CHECK(j["constants"].size() == 3);
  CHECK(j["checks"].size() == 3);
  CHECK(j["checks"][2]["pass"].get<bool>());
  CHECK(j["g"]["rep"].get<std::string>() == "(1 2)");
}

TEST_CASE("local bijections serialize with their support") {
  auto t = LocalBijection(parse_element(s1, "(1 2)@3"), {1, 2});
  CHECK(classalg::local_bijection_json(t).dump() == R"({"N":3,"Omega":[1,2],"body":"(1 2)@3"})");
}

TEST_CASE("surface JSON is exact and parses back") {
  CheckerSurface sphere(1, Permutation::identity(1), Permutation::identity(1));
  const std::string text = surface_export(sphere, "json");
  CHECK(text ==
        R"({"N":1,"red":[1],"yellow":[1],"topology":{"components":[{"faces":2,"edges":3,)"
        R"("vertices":3,"chi":2,"genus":0}],"faces":2,"edges":3,"vertices":3,"chi":2}})"
        "\n");
  CHECK(surface_parse_json(text) == sphere);

  CHECK_THROWS_AS(surface_parse_json("not json"), classalg::parse_error);
  CHECK_THROWS_AS(surface_parse_json(R"({"N":1,"red":[1]})"), classalg::parse_error);
}

TEST_CASE("surface DOT lists triangles then gluings") {
  CheckerSurface sphere(1, Permutation::identity(1), Permutation::identity(1));
  CHECK(surface_export(sphere, "dot") ==
        "graph checker_surface {\n"
        "  p1;\n"
        "  m1;\n"
        "  p1 -- m1 [color=red];\n"
        "  p1 -- m1 [color=yellow];\n"
        "  p1 -- m1 [color=blue];\n"
        "}\n");

  CheckerSurface twisted(2, Permutation::from_cycles("(1 2)", 2), Permutation::identity(2));
  auto dot = surface_export(twisted, "dot");
  CHECK(dot.find("p1 -- m2 [color=red];") != std::string::npos);
  CHECK(dot.find("p2 -- m2 [color=yellow];") != std::string::npos);

  CHECK_THROWS_AS(surface_export(sphere, "svg"), classalg::unsupported_format);
}
