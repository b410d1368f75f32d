#include <catch2/catch_amalgamated.hpp>

#include "classalg/conjugacy.hpp"
#include "classalg/literals.hpp"
#include "helpers.hpp"

using classalg::FamilyDescriptor;
using classalg::GroupElement;
using classalg::canonicalize;
using classalg::class_enumerate;
using classalg::class_inverse;
using classalg::conjugacy_orbit;
using classalg::parse_element;

namespace {
const FamilyDescriptor s1 = FamilyDescriptor::product(1);
const FamilyDescriptor s2 = FamilyDescriptor::product(2);
}  // namespace

TEST_CASE("the canonical representative is the least conjugate") {
  std::mt19937 rng(101);
  for (int trial = 0; trial < 40; ++trial) {
    auto g = testhelp::random_element(rng, s2, 4);
    auto orbit = conjugacy_orbit(g);
    CHECK(canonicalize(g).rep() == orbit.front());
  }
}

TEST_CASE("canonical form is a class invariant") {
  std::mt19937 rng(102);
  for (const auto& family : {s1, s2, FamilyDescriptor::full({"a"})}) {
    for (int trial = 0; trial < 30; ++trial) {
      auto g = testhelp::random_element(rng, family, 4);
      auto tau = testhelp::random_permutation(rng, 4);
      CHECK(canonicalize(g) == canonicalize(g.conjugated_by_columns(tau)));
      CHECK(canonicalize(canonicalize(g).rep()) == canonicalize(g));
    }
  }
}

TEST_CASE("canonical equality agrees with the brute-force oracle") {
  std::mt19937 rng(103);
  for (int trial = 0; trial < 60; ++trial) {
    auto a = testhelp::random_element(rng, s2, 3);
    auto b = testhelp::random_element(rng, s2, 3);
    CHECK((canonicalize(a) == canonicalize(b)) == testhelp::same_class_brute(a, b));
  }
}

TEST_CASE("the ambient cap stops runaway canonical searches") {
  CHECK_THROWS_AS(canonicalize(GroupElement::identity(s1, 11)), classalg::cap_exceeded);
  CHECK_NOTHROW(canonicalize(GroupElement::identity(s1, 3), 3));
  CHECK_THROWS_AS(canonicalize(GroupElement::identity(s1, 4), 3), classalg::cap_exceeded);
}

TEST_CASE("class keys are parseable literals") {
  std::mt19937 rng(104);
  for (const auto& family : {s1, s2, FamilyDescriptor::full({"x"})}) {
    for (int trial = 0; trial < 20; ++trial) {
      auto c = canonicalize(testhelp::random_element(rng, family, 3));
      CHECK(parse_element(family, c.key()) == c.rep());
    }
  }
}

TEST_CASE("class listings are sorted and frozen at small sizes") {
  auto s1_classes = class_enumerate(s1, 3);
  REQUIRE(s1_classes.size() == 3);
  CHECK(s1_classes[0].key() == "e@3");
  CHECK(s1_classes[1].key() == "(2 3)@3");
  CHECK(s1_classes[2].key() == "(1 2 3)@3");

  auto s2_classes = class_enumerate(s2, 2);
  REQUIRE(s2_classes.size() == 4);
  CHECK(s2_classes[0].key() == "e|e@2");
  CHECK(s2_classes[1].key() == "e|(1 2)@2");
  CHECK(s2_classes[2].key() == "(1 2)|e@2");
  CHECK(s2_classes[3].key() == "(1 2)|(1 2)@2");

  auto fx_classes = class_enumerate(FamilyDescriptor::full({"x"}), 2);
  REQUIRE(fx_classes.size() == 4);
  CHECK(fx_classes[0].key() == "e@2");
  CHECK(fx_classes[1].key() == "(1 2)@2");
  CHECK(fx_classes[2].key() == "(x 1)@2");
  CHECK(fx_classes[3].key() == "(x 1 2)@2");
}

TEST_CASE("class counts match the partition and orbit-count oracles") {
  const int partitions[] = {1, 1, 2, 3, 5, 7, 11};
  for (int n = 0; n <= 6; ++n) CHECK(class_enumerate(s1, n).size() == partitions[n]);

  for (int n = 0; n <= 4; ++n)
    CHECK(static_cast<long long>(class_enumerate(s2, n).size()) ==
          testhelp::burnside_tuple_classes(n, 2));

  // full family at n=1 has a trivial reference subgroup: classes = elements
  CHECK(class_enumerate(FamilyDescriptor::full({"x", "y"}), 1).size() == 6);
}

TEST_CASE("orbit sizes partition the group") {
  for (int n = 0; n <= 3; ++n) {
    long long total = 0;
    for (const auto& c : class_enumerate(s2, n)) total += conjugacy_orbit(c.rep()).size();
    CHECK(total == testhelp::factorial(n) * testhelp::factorial(n));
  }
}

TEST_CASE("enumeration guards trip and can be overridden") {
  CHECK_THROWS_AS(class_enumerate(s1, 7), classalg::cap_exceeded);
  CHECK(class_enumerate(s1, 7, true).size() == 15);  // partitions of 7
  CHECK_THROWS_AS(class_enumerate(FamilyDescriptor::full({"a", "b", "c"}), 5),
                  classalg::cap_exceeded);
}

TEST_CASE("class inverse is an involution") {
  for (int n = 0; n <= 3; ++n)
    for (const auto& c : class_enumerate(s2, n)) {
      CHECK(class_inverse(class_inverse(c)) == c);
      CHECK(testhelp::same_class_brute(class_inverse(c).rep(), c.rep().inverse()));
    }

  // a class the inverse actually moves
  auto fxy = FamilyDescriptor::full({"x", "y"});
  auto c = canonicalize(parse_element(fxy, "(x y 1)@1"));
  CHECK(class_inverse(c).key() == "(x 1 y)@1");
  CHECK(class_inverse(c) != c);
}

TEST_CASE("classes of different families never compare equal") {
  auto a = canonicalize(GroupElement::identity(s1, 1));
  auto b = canonicalize(GroupElement::identity(FamilyDescriptor::full({"x"}), 1));
  CHECK(a != b);
}
