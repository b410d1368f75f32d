#include <catch2/catch_amalgamated.hpp>

#include "classalg/permutation.hpp"
#include "helpers.hpp"

using classalg::Permutation;

TEST_CASE("cycle notation parses") {
  auto p = Permutation::from_cycles("(1 2 3)", 3);
  CHECK(p.images() == std::vector<int>{2, 3, 1});

  auto q = Permutation::from_cycles("(1 2)(3 4)", 5);
  CHECK(q.apply(1) == 2);
  CHECK(q.apply(2) == 1);
  CHECK(q.apply(3) == 4);
  CHECK(q.apply(5) == 5);

  CHECK(Permutation::from_cycles("e", 4) == Permutation::identity(4));
  CHECK(Permutation::from_cycles("  e  ", 0).degree() == 0);
}

TEST_CASE("bad cycle notation is rejected") {
  CHECK_THROWS_AS(Permutation::from_cycles("(1 2", 3), classalg::parse_error);
  CHECK_THROWS_AS(Permutation::from_cycles("1 2)", 3), classalg::parse_error);
  CHECK_THROWS_AS(Permutation::from_cycles("", 3), classalg::parse_error);
  CHECK_THROWS_AS(Permutation::from_cycles("(1 4)", 3), classalg::range_error);
  CHECK_THROWS_AS(Permutation::from_cycles("(0 1)", 3), classalg::parse_error);
  CHECK_THROWS_AS(Permutation::from_cycles("(1 2)(2 3)", 3), classalg::duplicate_entry);
  CHECK_THROWS_AS(Permutation::from_cycles("e (1 2)", 3), classalg::parse_error);
}

TEST_CASE("image lists must be bijections") {
  CHECK_THROWS_AS(Permutation::from_images({1, 1}), classalg::duplicate_entry);
  CHECK_THROWS_AS(Permutation::from_images({0, 1}), classalg::range_error);
  CHECK_THROWS_AS(Permutation::from_images({1, 3}), classalg::range_error);
}

TEST_CASE("composition applies the right factor first") {
  auto a = Permutation::from_cycles("(1 2)", 3);
  auto b = Permutation::from_cycles("(1 3)", 3);
  CHECK((a * b) == Permutation::from_cycles("(1 3 2)", 3));
  CHECK((b * a) == Permutation::from_cycles("(1 2 3)", 3));
  CHECK_THROWS_AS(a * Permutation::identity(4), classalg::degree_mismatch);
}

TEST_CASE("group laws hold on all of degree 4") {
  const auto perms = testhelp::all_permutations(4);
  const auto id = Permutation::identity(4);
  for (const auto& p : perms) {
    CHECK(p * p.inverse() == id);
    CHECK(p.inverse() * p == id);
    CHECK(p * id == p);
  }
  std::mt19937 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    auto p = testhelp::random_permutation(rng, 4);
    auto q = testhelp::random_permutation(rng, 4);
    auto r = testhelp::random_permutation(rng, 4);
    CHECK((p * q) * r == p * (q * r));
    for (int x = 1; x <= 4; ++x) CHECK((p * q).apply(x) == p.apply(q.apply(x)));
  }
}

TEST_CASE("embedding fixes the new points") {
  auto p = Permutation::from_cycles("(1 2)", 2).embedded(5);
  CHECK(p.degree() == 5);
  CHECK(p.apply(2) == 1);
  CHECK(p.apply(5) == 5);
  CHECK_THROWS_AS(p.embedded(3), classalg::shrink_not_allowed);
}

TEST_CASE("cycle decomposition and rendering") {
  auto p = Permutation::from_cycles("(2 5)(1 3 4)", 6);
  CHECK(p.cycles() == std::vector<std::vector<int>>{{1, 3, 4}, {2, 5}});
  CHECK(p.cycle_string() == "(1 3 4)(2 5)");
  CHECK(p.cycle_count_including_fixed() == 3);  // the two cycles plus the fixed 6
  CHECK(Permutation::identity(3).cycle_string() == "e");
  CHECK(Permutation::identity(3).cycle_count_including_fixed() == 3);

  std::mt19937 rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    auto q = testhelp::random_permutation(rng, 6);
    CHECK(Permutation::from_cycles(q.cycle_string(), 6) == q);
  }
}

TEST_CASE("apply rejects out-of-range points") {
  auto p = Permutation::identity(3);
  CHECK_THROWS_AS(p.apply(0), classalg::point_out_of_range);
  CHECK_THROWS_AS(p.apply(4), classalg::point_out_of_range);
}
