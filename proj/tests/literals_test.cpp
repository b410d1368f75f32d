#include <catch2/catch_amalgamated.hpp>

#include "classalg/literals.hpp"
#include "helpers.hpp"

using classalg::FamilyDescriptor;
using classalg::parse_element;
using classalg::parse_family;

TEST_CASE("family literals") {
  CHECK(parse_family("s1") == FamilyDescriptor::product(1));
  CHECK(parse_family("s2") == FamilyDescriptor::product(2));
  CHECK(parse_family("sm:5") == FamilyDescriptor::product(5));
  CHECK(parse_family("full:a,b") == FamilyDescriptor::full({"a", "b"}));
  CHECK(parse_family("full:x") == FamilyDescriptor::full({"x"}));

  CHECK_THROWS_AS(parse_family("s3"), classalg::parse_error);
  CHECK_THROWS_AS(parse_family("sm:0"), classalg::parse_error);
  CHECK_THROWS_AS(parse_family("sm:two"), classalg::parse_error);
  CHECK_THROWS_AS(parse_family("full:"), classalg::parse_error);
  CHECK_THROWS_AS(parse_family("full:a,"), classalg::parse_error);
  CHECK_THROWS_AS(parse_family("full:a,,b"), classalg::parse_error);
  CHECK_THROWS_AS(parse_family(""), classalg::parse_error);
}

TEST_CASE("element literals fix their ambient from context or suffix") {
  auto s1 = FamilyDescriptor::product(1);
  CHECK(parse_element(s1, "(1 2)").ambient() == 2);
  CHECK(parse_element(s1, "(1 2)@5").ambient() == 5);
  CHECK(parse_element(s1, "e@0").ambient() == 0);
  CHECK(parse_element(s1, "e@3") == classalg::GroupElement::identity(s1, 3));
  CHECK_THROWS_AS(parse_element(s1, "(1 3)@2"), classalg::range_error);
  CHECK_THROWS_AS(parse_element(s1, "(1 2)@-1"), classalg::parse_error);
  CHECK_THROWS_AS(parse_element(s1, "(1 2)@x"), classalg::parse_error);
}

TEST_CASE("row counts must match the family") {
  auto s2 = FamilyDescriptor::product(2);
  auto g = parse_element(s2, "(1 2)|(2 3)");
  CHECK(g.ambient() == 3);
  CHECK(g.rows()[0] == classalg::Permutation::from_cycles("(1 2)", 3));
  CHECK(g.rows()[1] == classalg::Permutation::from_cycles("(2 3)", 3));

  CHECK_THROWS_AS(parse_element(s2, "(1 2)"), classalg::parse_error);
  CHECK_THROWS_AS(parse_element(s2, "(1 2)|e|e"), classalg::parse_error);
  CHECK_THROWS_AS(parse_element(FamilyDescriptor::product(1), "(1 2)|e"), classalg::parse_error);
}

TEST_CASE("full-family literals mix labels and columns") {
  auto fx = FamilyDescriptor::full({"x", "y"});
  auto g = parse_element(fx, "(x 1)(y 2)");
  CHECK(g.ambient() == 2);
  CHECK(g.apply(classalg::Point::fixed("x")) == classalg::Point::column(1, 1));
  CHECK(g.to_literal() == "(x 1)(y 2)@2");

  CHECK(parse_element(fx, "(x y)").ambient() == 0);
  CHECK(parse_element(fx, "(x y)@2").ambient() == 2);

  CHECK_THROWS_AS(parse_element(fx, "(x z)"), classalg::parse_error);
  CHECK_THROWS_AS(parse_element(fx, "(x 1)(x 2)"), classalg::duplicate_entry);
  CHECK_THROWS_AS(parse_element(FamilyDescriptor::product(1), "(x 1)"), classalg::parse_error);
}

TEST_CASE("literals round-trip") {
  std::mt19937 rng(501);
  for (const auto& family : {FamilyDescriptor::product(1), FamilyDescriptor::product(2),
                             FamilyDescriptor::product(3), FamilyDescriptor::full({"x"}),
                             FamilyDescriptor::full({"ab", "c_d"})}) {
    for (int n = 0; n <= 4; ++n)
      for (int trial = 0; trial < 10; ++trial) {
        auto g = testhelp::random_element(rng, family, n);
        CHECK(parse_element(family, g.to_literal()) == g);
      }
  }
}
