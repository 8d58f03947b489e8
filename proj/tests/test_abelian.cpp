#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "fpg/abelian.hpp"
#include "fpg/format.hpp"

using namespace fpg;

namespace {
IntMatrix from_rows(std::size_t rows, std::size_t cols,
                    std::vector<long> entries) {
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      m.at(i, j) = entries[i * cols + j];
  return m;
}
}  // namespace

TEST_CASE("smith normal form of diag(2,3) is diag(1,6)") {
  IntMatrix m = from_rows(2, 2, {2, 0, 0, 3});
  SmithResult r = smith_normal_form(m);
  CHECK(r.d.at(0, 0) == 1);
  CHECK(r.d.at(1, 1) == 6);
  CHECK(verify_smith(m, r));
}

TEST_CASE("smith normal form basics") {
  SECTION("zero matrix") {
    IntMatrix m(2, 3);
    SmithResult r = smith_normal_form(m);
    CHECK(r.d == m);
    CHECK(verify_smith(m, r));
  }
  SECTION("identity-like") {
    IntMatrix m = IntMatrix::identity(3);
    SmithResult r = smith_normal_form(m);
    CHECK(r.d == m);
    CHECK(verify_smith(m, r));
  }
  SECTION("negative entries normalize to nonnegative diagonal") {
    IntMatrix m = from_rows(2, 2, {-4, 0, 0, -6});
    SmithResult r = smith_normal_form(m);
    CHECK(r.d.at(0, 0) == 2);
    CHECK(r.d.at(1, 1) == 12);
    CHECK(verify_smith(m, r));
  }
  SECTION("rectangular with rank deficiency") {
    // rows generate the lattice spanned by (2,4,6) and (4,8,12): rank 1, d1=2.
    IntMatrix m = from_rows(2, 3, {2, 4, 6, 4, 8, 12});
    SmithResult r = smith_normal_form(m);
    CHECK(r.d.at(0, 0) == 2);
    CHECK(r.d.at(1, 1) == 0);
    CHECK(verify_smith(m, r));
  }
  SECTION("divisibility chain enforced") {
    IntMatrix m = from_rows(3, 3, {2, 0, 0, 0, 6, 0, 0, 0, 10});
    SmithResult r = smith_normal_form(m);
    CHECK(r.d.at(0, 0) == 2);
    CHECK(r.d.at(1, 1) == 2);
    CHECK(r.d.at(2, 2) == 30);
    CHECK(verify_smith(m, r));
  }
}

TEST_CASE("smith normal form randomized against transform check") {
  std::mt19937_64 rng(20260823ull);
  std::uniform_int_distribution<int> dim(1, 6), val(-9, 9);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t rows = dim(rng), cols = dim(rng);
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = val(rng);
    SmithResult r = smith_normal_form(m);
    CHECK(verify_smith(m, r));
  }
}

TEST_CASE("relation matrix rows are exponent vectors") {
  GroupPresentation p{"P", {"a", "b"}, {power_word(0, 2),
                                        commutator(letter_word(pos(0)),
                                                   letter_word(pos(1)))}};
  IntMatrix m = relation_matrix(p);
  REQUIRE(m.rows == 2);
  REQUIRE(m.cols == 2);
  CHECK(m.at(0, 0) == 2);
  CHECK(m.at(0, 1) == 0);
  CHECK(m.at(1, 0) == 0);  // commutators abelianize to zero
  CHECK(m.at(1, 1) == 0);
}

TEST_CASE("abelian invariants of standard presentations") {
  SECTION("free abelian of rank 2") {
    GroupPresentation p{"Z2", {"a", "b"}, {}};
    AbelianInvariants inv = abelian_invariants(p);
    CHECK(inv.free_rank == 2);
    CHECK(inv.torsion.empty());
  }
  SECTION("Z/2 x Z/3 collapses to Z/6") {
    GroupPresentation p{"P", {"a", "b"}, {power_word(0, 2), power_word(1, 3)}};
    AbelianInvariants inv = abelian_invariants(p);
    CHECK(inv.free_rank == 0);
    REQUIRE(inv.torsion.size() == 1);
    CHECK(inv.torsion[0] == 6);
  }
  SECTION("trivial presentation") {
    GroupPresentation p{"T", {}, {}};
    AbelianInvariants inv = abelian_invariants(p);
    CHECK(inv.free_rank == 0);
    CHECK(inv.torsion.empty());
  }
  SECTION("alternating-type presentation is perfect") {
    GroupPresentation p = parse_presentation(
        "group a5\ngens a b\nrel a^2\nrel b^3\nrel a b a b a b a b a b\n");
    AbelianInvariants inv = abelian_invariants(p);
    CHECK(inv.free_rank == 0);
    CHECK(inv.torsion.empty());
    CHECK(is_perfect(p));
  }
  SECTION("infinite cyclic is not perfect") {
    GroupPresentation p{"Z", {"a"}, {}};
    CHECK_FALSE(is_perfect(p));
    CHECK(abelian_invariants(p).free_rank == 1);
  }
}

TEST_CASE("abelian word problem") {
  GroupPresentation p{"P", {"a", "b"}, {power_word(0, 2), power_word(1, 3)}};
  // a^2 b^3 lies in the relation lattice.
  CHECK(abelian_word_problem(p, concat(power_word(0, 2), power_word(1, 3))));
  // a b does not (1 not divisible by 2 in the a-coordinate after transform).
  CHECK_FALSE(abelian_word_problem(p, Word{{pos(0), pos(1)}}));
  // Commutator words always die in the abelianization.
  CHECK(abelian_word_problem(
      p, commutator(letter_word(pos(0)), letter_word(pos(1)))));
  CHECK(abelian_word_problem(p, Word{}));
  // With no relators only freely-trivial exponent vectors pass.
  GroupPresentation f{"F", {"a", "b"}, {}};
  CHECK_FALSE(abelian_word_problem(f, Word{{pos(0)}}));
  CHECK(abelian_word_problem(
      f, commutator(letter_word(pos(0)), letter_word(pos(1)))));
}
