#include <catch2/catch_amalgamated.hpp>

#include "fpg/cantor.hpp"
#include "fpg/machine.hpp"
#include "fpg/zoo.hpp"

using namespace fpg;

TEST_CASE("validation accepts the zoo and rejects structural defects") {
  CHECK_NOTHROW(validate(zoo_halt1()));
  CHECK_NOTHROW(validate(zoo_flip2()));
  CHECK_NOTHROW(validate(zoo_mover()));
  CHECK_NOTHROW(validate(zoo_loop()));

  TuringMachine m = zoo_halt1();
  SECTION("nondeterminism") {
    m.quads.push_back({0, 1, ActType::MoveLeft, 0, 0});
    CHECK_THROWS_AS(validate(m), std::invalid_argument);
  }
  SECTION("transition out of the halt state") {
    m.quads.push_back({1, 0, ActType::MoveRight, 0, 0});
    CHECK_THROWS_AS(validate(m), std::invalid_argument);
  }
  SECTION("bad indices") {
    m.quads.push_back({0, 7, ActType::Write, 0, 0});
    CHECK_THROWS_AS(validate(m), std::invalid_argument);
  }
  SECTION("duplicate names across alphabet and states") {
    m.states = {"s1", "qh"};
    CHECK_THROWS_AS(validate(m), std::invalid_argument);
  }
  SECTION("partial machines are statically fine") {
    // halt1 has no rule for (q1, s0); that is a run-time matter.
    CHECK_NOTHROW(validate(zoo_halt1()));
  }
}

TEST_CASE("phi input is n+1 ones") {
  CHECK(phi_input(0) == std::vector<std::uint32_t>{1});
  CHECK(phi_input(3) == std::vector<std::uint32_t>(4, 1));
}

TEST_CASE("halt1 halts in one step") {
  RunTrace t = run(zoo_halt1(), phi_input(2), 100);
  CHECK(t.halted);
  CHECK(t.steps_taken == 1);
  REQUIRE(t.configs.size() == 2);
  CHECK(t.configs.back().state == zoo_halt1().halt_state());
  CHECK(t.configs.back().left.empty());
  CHECK(t.configs.back().right == std::vector<std::uint32_t>{1, 1, 1});
}

TEST_CASE("mover walks the block and halts on the blank") {
  const std::uint64_t n = 3;
  RunTrace t = run(zoo_mover(), phi_input(n), 100);
  CHECK(t.halted);
  CHECK(t.steps_taken == n + 2);  // n+1 moves plus the final write
  const Configuration& hc = t.configs.back();
  CHECK(hc.left == std::vector<std::uint32_t>(n + 1, 1));
  CHECK(hc.right == std::vector<std::uint32_t>{0});  // materialized blank
}

TEST_CASE("loop exhausts its budget without halting") {
  RunTrace t = run(zoo_loop(), phi_input(0), 25);
  CHECK_FALSE(t.halted);
  CHECK(t.steps_taken == 25);
  CHECK(t.configs.size() == 26);
  // The tape keeps growing with materialized blanks; nothing is trimmed.
  CHECK(t.configs.back().left.size() == 25);
  CHECK_FALSE(t.configs.back().right.empty());
}

TEST_CASE("a machine with no applicable quadruple raises Stuck") {
  TuringMachine m = zoo_halt1();  // no rule for scanning s0
  CHECK_THROWS_AS(run(m, {0}, 10), StuckError);
}

TEST_CASE("move left materializes a blank at the left end") {
  TuringMachine m;
  m.name = "left";
  m.alphabet = {"s0", "s1"};
  m.states = {"q1", "qh"};
  m.quads = {{0, 1, ActType::MoveLeft, 0, 1}};
  RunTrace t = run(m, phi_input(0), 10);
  CHECK(t.halted);
  const Configuration& hc = t.configs.back();
  CHECK(hc.left.empty());
  CHECK(hc.right == std::vector<std::uint32_t>{0, 1});
}

TEST_CASE("cantor pairing") {
  CHECK(cantor_pair(0, 0) == 0);
  CHECK(cantor_pair(1, 2) == 8);
  CHECK(cantor_unpair(8) == std::pair<std::uint64_t, std::uint64_t>{1, 2});
  for (std::uint64_t z = 0; z < 500; ++z) {
    auto [x, y] = cantor_unpair(z);
    CHECK(cantor_pair(x, y) == z);
  }
  for (std::uint64_t x = 0; x < 20; ++x)
    for (std::uint64_t y = 0; y < 20; ++y) {
      auto [a, b] = cantor_unpair(cantor_pair(x, y));
      CHECK(a == x);
      CHECK(b == y);
    }
}

TEST_CASE("cantor tuples fold left") {
  CHECK(cantor_tuple({5}) == 5);
  CHECK(cantor_tuple({1, 2}) == 8);
  CHECK(cantor_tuple({1, 2, 3}) == cantor_pair(8, 3));
  CHECK(cantor_untuple(cantor_pair(8, 3), 3) ==
        std::vector<std::uint64_t>({1, 2, 3}));
  CHECK_THROWS_AS(cantor_tuple({}), std::invalid_argument);
  // Large values survive the integer square root.
  const std::uint64_t big = 3037000000ull;  // near sqrt(2^63)
  auto [x, y] = cantor_unpair(big * 1000);
  CHECK(cantor_pair(x, y) == big * 1000);
}
