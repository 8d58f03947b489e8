#include <catch2/catch_amalgamated.hpp>

#include "fpg/presentation.hpp"
#include "fpg/word.hpp"

using namespace fpg;

TEST_CASE("free reduction cancels adjacent inverse pairs") {
  // a b b^-1 a^-1 a  ->  a
  Word w{{pos(0), pos(1), neg(1), neg(0), pos(0)}};
  CHECK(w.raw_length() == 5);
  Word r = free_reduce(w);
  CHECK(r == Word{{pos(0)}});
  CHECK(free_reduce(r) == r);  // idempotent
}

TEST_CASE("free reduction handles nested cancellation") {
  // a b c c^-1 b^-1 a^-1 -> empty
  Word w{{pos(0), pos(1), pos(2), neg(2), neg(1), neg(0)}};
  CHECK(free_reduce(w).empty());
  CHECK(free_reduce(Word{}).empty());
}

TEST_CASE("inverse reverses and flips signs") {
  Word w{{pos(0), neg(1), pos(2)}};
  CHECK(w.inverse() == Word{{neg(2), pos(1), neg(0)}});
  CHECK(free_reduce(concat(w, w.inverse())).empty());
}

TEST_CASE("commutator uses the u^-1 v^-1 u v convention") {
  Word u{{pos(0)}}, v{{pos(1)}};
  CHECK(commutator(u, v) == Word{{neg(0), neg(1), pos(0), pos(1)}});
  // [u, u] reduces to the empty word.
  CHECK(free_reduce(commutator(u, u)).empty());
}

TEST_CASE("power_word expands raw letters") {
  CHECK(power_word(3, 4).raw_length() == 4);
  CHECK(power_word(3, -2) == Word{{neg(3), neg(3)}});
  CHECK(power_word(3, 0).empty());
}

TEST_CASE("exponent vector") {
  Word w{{pos(0), pos(1), neg(0), pos(1), pos(1)}};
  CHECK(exponent_vector(w, 3) == std::vector<std::int64_t>{0, 3, 0});
  CHECK_THROWS_AS(exponent_vector(w, 1), std::out_of_range);
}

TEST_CASE("generator name validation") {
  CHECK(valid_generator_name("a"));
  CHECK(valid_generator_name("qhat"));
  CHECK(valid_generator_name("r_12"));
  CHECK_FALSE(valid_generator_name("1"));
  CHECK_FALSE(valid_generator_name(""));
  CHECK_FALSE(valid_generator_name("a^2"));
  CHECK_FALSE(valid_generator_name("a b"));
}

TEST_CASE("presentation check rejects duplicates and stray letters") {
  GroupPresentation p;
  p.name = "bad";
  p.gens = {"a", "a"};
  CHECK_THROWS_AS(p.check(), std::invalid_argument);
  p.gens = {"a"};
  p.relators = {Word{{pos(1)}}};
  CHECK_THROWS_AS(p.check(), std::invalid_argument);
  p.relators = {Word{{pos(0)}}};
  CHECK_NOTHROW(p.check());
}

TEST_CASE("apply_hom substitutes images and reduces") {
  // a -> xy, b -> y^-1
  Homomorphism h{{Word{{pos(0), pos(1)}}, Word{{neg(1)}}}};
  // ab -> x y y^-1 -> x
  CHECK(apply_hom(h, Word{{pos(0), pos(1)}}) == Word{{pos(0)}});
  // a^-1 -> y^-1 x^-1
  CHECK(apply_hom(h, Word{{neg(0)}}) == Word{{neg(1), neg(0)}});
  CHECK(apply_hom(h, Word{}).empty());
  CHECK_THROWS_AS(apply_hom(h, Word{{pos(5)}}), std::out_of_range);
}

TEST_CASE("free product renames clashing generators with primes") {
  GroupPresentation p{"P", {"a"}, {power_word(0, 2)}};
  GroupPresentation q{"Q", {"a"}, {power_word(0, 3)}};
  GroupPresentation fp = free_product(p, q);
  CHECK(fp.gens == std::vector<std::string>{"a", "a'"});
  REQUIRE(fp.relators.size() == 2);
  CHECK(fp.relators[0] == power_word(0, 2));
  CHECK(fp.relators[1] == power_word(1, 3));  // shifted into the new index
  CHECK(fp.name == "P*Q");
  fp.check();
}

TEST_CASE("direct product with a cyclic group appends a central z") {
  GroupPresentation p{"P", {"a"}, {power_word(0, 2)}};
  GroupPresentation d = direct_product_with_cyclic(p, 3);
  CHECK(d.gens == std::vector<std::string>{"a", "z"});
  REQUIRE(d.relators.size() == 3);
  CHECK(d.relators[0] == power_word(0, 2));
  CHECK(d.relators[1] == power_word(1, 3));
  CHECK(d.relators[2] ==
        commutator(letter_word(pos(0)), letter_word(pos(1))));
  // Name clash: an existing z forces a primed name.
  GroupPresentation pz{"Pz", {"z"}, {}};
  CHECK(direct_product_with_cyclic(pz, 2).gens ==
        std::vector<std::string>{"z", "z'"});
  CHECK_THROWS_AS(direct_product_with_cyclic(p, 0), std::invalid_argument);
}

TEST_CASE("abelianized presentation appends ordered commutators") {
  GroupPresentation p{"P", {"a", "b", "c"}, {}};
  GroupPresentation ab = abelianized_presentation(p);
  REQUIRE(ab.relators.size() == 3);
  CHECK(ab.relators[0] ==
        commutator(letter_word(pos(0)), letter_word(pos(1))));
  CHECK(ab.relators[1] ==
        commutator(letter_word(pos(0)), letter_word(pos(2))));
  CHECK(ab.relators[2] ==
        commutator(letter_word(pos(1)), letter_word(pos(2))));
}

TEST_CASE("special semigroup form decomposition") {
  SemigroupPresentation sg;
  sg.name = "t";
  sg.s_letters = {"h", "s0"};
  sg.q_letters = {"q"};
  SgWord w{0, 1, 2, 1, 0};  // h s0 q s0 h
  SpecialForm f = special_form(sg, w);
  CHECK(f.f == SgWord{0, 1});
  CHECK(f.q == 2);
  CHECK(f.g == SgWord{1, 0});
  CHECK_THROWS_AS(special_form(sg, SgWord{0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(special_form(sg, SgWord{2, 2}), std::invalid_argument);
}
