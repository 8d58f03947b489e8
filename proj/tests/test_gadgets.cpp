#include <catch2/catch_amalgamated.hpp>

#include <stdexcept>

#include "fpg/abelian.hpp"
#include "fpg/format.hpp"
#include "fpg/gadgets.hpp"
#include "fpg/zoo.hpp"

using namespace fpg;

TEST_CASE("pi pins the composed counting identities") {
  const GroupPresentation p = pi(zoo_loop(), 0);
  CHECK(p.name == "Pi(loop,0)");
  // loop: 12 semigroup relations -> 3+4+12+3 = 22 group generators and
  // 3*13 + 36 + 3 = 78 relators; the Gordon layer adds 3 and 22+3.
  CHECK(p.gens.size() == 25);
  CHECK(p.relators.size() == 103);
  CHECK(is_perfect(p));
  CHECK(print_presentation(pi(zoo_loop(), 0)) == print_presentation(p));

  const GroupPresentation small = pi(zoo_halt1(), 0);
  CHECK(small.gens.size() == 20);
  CHECK(small.relators.size() == 68);
  CHECK(is_perfect(small));
}

TEST_CASE("pi rejects machines without the two-symbol alphabet") {
  TuringMachine m = zoo_halt1();
  m.alphabet.push_back("s2");
  m.name = "wide";
  CHECK_THROWS_AS(pi(m, 0), std::invalid_argument);
}

TEST_CASE("nth_prime starts at two and proceeds by trial division") {
  CHECK(nth_prime(0) == 2);
  CHECK(nth_prime(1) == 3);
  CHECK(nth_prime(2) == 5);
  CHECK(nth_prime(5) == 13);
  CHECK(nth_prime(10) == 31);
}

TEST_CASE("psi and phi differ only in the cyclic modulus") {
  const GroupPresentation ps = psi(zoo_halt1(), 2);
  const GroupPresentation ph = phi_family(zoo_halt1(), 2);
  CHECK(ps.name == "Psi(halt1,2)");
  CHECK(ph.name == "Phi(halt1,2)");
  // pi(halt1, i): 20 generators, 68 relators. The product adds z, z^m and
  // one commutator per generator; the outer Gordon layer adds 3 and 21+3.
  CHECK(ps.gens.size() == 24);
  CHECK(ph.gens.size() == 24);
  CHECK(ps.relators.size() == 113);
  CHECK(ph.relators.size() == 113);
  CHECK(print_word(ps.relators[68], ps.gens) == "z^5");
  CHECK(print_word(ph.relators[68], ph.gens) == "z^2");
  // The outer Gordon word is the b generator of the inner layer.
  CHECK(print_word(ps.relators[91], ps.gens) ==
        "a'^-3 b^-1 b'^-1 b b' a'^3 c'^-3 b'^-1 c'^3");
  CHECK(is_perfect(ps));
  CHECK(is_perfect(ph));
}

TEST_CASE("free products fold left and keep merged invariants") {
  CHECK_THROWS_AS(free_product_family({}), std::invalid_argument);

  GroupPresentation a;
  a.name = "A";
  a.gens = {"a"};
  a.relators = {parse_word("a^2", a)};
  GroupPresentation b;
  b.name = "B";
  b.gens = {"b"};
  b.relators = {parse_word("b^3", b)};
  GroupPresentation f;
  f.name = "F";
  f.gens = {"c"};

  CHECK(print_presentation(free_product_family({a})) ==
        print_presentation(a));

  const GroupPresentation q = free_product_family({a, b, f});
  CHECK(q.name == "A*B*F");
  CHECK(q.gens == std::vector<std::string>{"a", "b", "c"});
  CHECK(q.relators.size() == 2);
  const AbelianInvariants inv = abelian_invariants(q);
  CHECK(inv.free_rank == 1);
  REQUIRE(inv.torsion.size() == 1);
  CHECK(inv.torsion[0] == 6);
}

TEST_CASE("the adversary report names a factor the sample word misses") {
  const AdversaryReport rep = adversary_demo(1, {zoo_loop(), zoo_loop()});
  REQUIRE(rep.factors.size() == 2);
  CHECK(rep.factors[0].name == "Pi(loop,0)");
  CHECK(rep.factors[1].name == "Pi(loop,1)");
  CHECK(rep.product.gens.size() == 50);
  CHECK(rep.sample.raw_length() == 1);
  CHECK(rep.untouched_factor == 1);
  CHECK(rep.narrative.find("Pi(loop,1)") != std::string::npos);
  CHECK(rep.narrative.find("misses factor 1") != std::string::npos);
  for (const GroupPresentation& f : rep.factors) CHECK(is_perfect(f));
  CHECK(is_perfect(rep.product));

  CHECK_THROWS_AS(adversary_demo(0, {zoo_loop()}), std::invalid_argument);
  CHECK_THROWS_AS(adversary_demo(2, {zoo_loop(), zoo_loop()}),
                  std::invalid_argument);
}
