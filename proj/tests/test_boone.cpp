#include <catch2/catch_amalgamated.hpp>

#include <stdexcept>

#include "fpg/abelian.hpp"
#include "fpg/boone.hpp"
#include "fpg/boone_lift.hpp"
#include "fpg/format.hpp"
#include "fpg/post.hpp"
#include "fpg/schema.hpp"
#include "fpg/zoo.hpp"

using namespace fpg;

namespace {

Letter gen(const BooneGroup& b, const std::string& name, std::int32_t sign) {
  auto i = b.p.gen_index(name);
  REQUIRE(i.has_value());
  return Letter{*i, sign};
}

}  // namespace

TEST_CASE("the one-step halter yields 17 generators and 48 relators") {
  const BooneGroup b = boone_encode(zoo_halt1());
  CHECK(b.p.name == "B(halt1)");
  CHECK(b.p.gens ==
        std::vector<std::string>{"h", "s0", "s1", "q", "qhat", "q1", "qh",
                                 "r1", "r2", "r3", "r4", "r5", "r6", "r7", "x",
                                 "t", "k"});
  REQUIRE(b.p.relators.size() == 48);
  REQUIRE(b.splits.size() == 48);
  CHECK(b.num_s == 3);
  CHECK(b.num_q == 4);
  CHECK(b.num_rel == 7);
  CHECK(b.idx_tx() == 31);
  CHECK(b.idx_kx() == 39);
  CHECK(b.idx_final() == 47);

  // Every relator is exactly its split recombined.
  for (std::size_t i = 0; i < b.splits.size(); ++i) {
    Word recomb = b.splits[i].lhs;
    recomb.append(b.splits[i].rhs.inverse());
    CHECK(b.p.relators[i] == recomb);
  }
}

TEST_CASE("relator families have the advertised shapes") {
  const BooneGroup b = boone_encode(zoo_halt1());
  auto lhs = [&](std::uint32_t i) { return print_word(b.splits[i].lhs, b.p.gens); };
  auto rhs = [&](std::uint32_t i) { return print_word(b.splits[i].rhs, b.p.gens); };

  CHECK(lhs(b.idx_doubling(1)) == "x s0");
  CHECK(rhs(b.idx_doubling(1)) == "s0 x^2");
  CHECK(lhs(b.idx_carry(0, 0)) == "r1^-1 x h r1");
  CHECK(rhs(b.idx_carry(0, 0)) == "h x");
  // Relation 0 is q1 s1 = qh s1: F and H empty, G = K = s1.
  CHECK(lhs(b.idx_main(0)) == "r1^-1 x^2 q1 x s1 r1");
  CHECK(rhs(b.idx_main(0)) == "x qh s1 x");
  // Relation 6 is h qhat h = q.
  CHECK(lhs(b.idx_main(6)) == "r7^-1 x^2 h qhat x h r7");
  CHECK(rhs(b.idx_main(6)) == "x q");
  CHECK(lhs(b.idx_tx()) == "t x");
  CHECK(rhs(b.idx_tx()) == "x t");
  CHECK(lhs(b.idx_kr(3)) == "k r4");
  CHECK(rhs(b.idx_kr(3)) == "r4 k");
  CHECK(lhs(b.idx_final()) == "q^-1 t^-1 q k^-1 q^-1 t q k");
  CHECK(b.splits[b.idx_final()].rhs.empty());
}

TEST_CASE("beta words have raw length 4n+20 on unary inputs and never reduce") {
  const BooneGroup b = boone_encode(zoo_halt1());
  for (std::uint64_t n : {0, 1, 2, 5, 9}) {
    const Word beta = beta_for_input(b, phi_input(n));
    CHECK(beta.raw_length() == 4 * n + 20);
    CHECK(free_reduce(beta) == beta);
  }
}

TEST_CASE("the Boone group abelianizes with x dead and t, k alive") {
  const BooneGroup b = boone_encode(zoo_halt1());
  CHECK(abelian_word_problem(b.p, letter_word(pos(b.x))));
  CHECK_FALSE(abelian_word_problem(b.p, letter_word(pos(b.t))));
  CHECK_FALSE(abelian_word_problem(b.p, letter_word(pos(b.k))));
  // Commutators die in any abelianization.
  CHECK(abelian_word_problem(b.p, beta_for_input(b, phi_input(3))));
}

TEST_CASE("x letters cross s letters with doubling in both directions") {
  const BooneGroup b = boone_encode(zoo_halt1());
  const Letter X = pos(b.x);
  const Letter S0 = gen(b, "s0", +1);

  RelatorRewriter rp(b, Word{{X, S0}});
  lift_detail::cross_right(b, rp, 0);
  CHECK(rp.cur_word() == Word{{S0, X, X}});
  CHECK(rp.invariant_holds());
  lift_detail::cross_left(b, rp, 0);
  CHECK(rp.cur_word() == Word{{X, S0}});
  CHECK(rp.invariant_holds());

  RelatorRewriter rn(b, Word{{X.inverse(), S0}});
  lift_detail::cross_right(b, rn, 0);
  CHECK(rn.cur_word() == Word{{S0, X.inverse(), X.inverse()}});
  CHECK(rn.invariant_holds());
  lift_detail::cross_left(b, rn, 0);
  CHECK(rn.cur_word() == Word{{X.inverse(), S0}});
  CHECK(rn.invariant_holds());
}

TEST_CASE("U and V decorations round-trip against their x-power forms") {
  const BooneGroup b = boone_encode(zoo_halt1());
  const Letter X = pos(b.x);
  const Letter S0 = gen(b, "s0", +1), S1 = gen(b, "s1", +1);

  // [s0 s1, x^6] <-> U(s0 s1) = x s0 x s1 (6 = 2^3 - 2).
  const Word ustart{{S0, S1, X, X, X, X, X, X}};
  RelatorRewriter ru(b, ustart);
  lift_detail::u_decorate(b, ru, 0, 2);
  CHECK(ru.cur_word() == Word{{X, S0, X, S1}});
  CHECK(ru.invariant_holds());
  lift_detail::u_undecorate(b, ru, 0, 2);
  CHECK(ru.cur_word() == ustart);
  CHECK(ru.invariant_holds());

  // [s0 s1, x^3] <-> V(s0 s1) = s0 x s1 x (3 = 2^2 - 1).
  const Word vstart{{S0, S1, X, X, X}};
  RelatorRewriter rv(b, vstart);
  lift_detail::v_decorate(b, rv, 0, 2);
  CHECK(rv.cur_word() == Word{{S0, X, S1, X}});
  CHECK(rv.invariant_holds());
  lift_detail::v_undecorate(b, rv, 0, 2);
  CHECK(rv.cur_word() == vstart);
  CHECK(rv.invariant_holds());
}

TEST_CASE("the rewriter rejects pattern mismatches and bad cancellations") {
  const BooneGroup b = boone_encode(zoo_halt1());
  const Letter X = pos(b.x);
  const Letter S0 = gen(b, "s0", +1);
  RelatorRewriter rw(b, Word{{S0, X}});
  CHECK_THROWS_AS(rw.apply_lr(b.idx_doubling(1), 0), std::logic_error);
  CHECK_THROWS_AS(rw.apply_rl(b.idx_doubling(1), 0), std::logic_error);
  CHECK_THROWS_AS(rw.cancel_pair(0), std::logic_error);
  CHECK_THROWS_AS(rw.insert_pair(5, X), std::logic_error);
}

TEST_CASE("a forward step lifts to a checked conjugation identity") {
  const BooneGroup b = boone_encode(zoo_halt1());
  const SgWord w = input_word(b.post, phi_input(0));  // h q1 s1 h
  const StepLift sl = lift_derivation_step(b, w, {0, StepDir::LR, 1});
  CHECK(print_word(sl.x_part, b.p.gens) == "x^-2 r1 x");
  CHECK(print_word(sl.next_sigma, b.p.gens) == "h qh s1 h");
  CHECK(print_word(sl.y_part, b.p.gens) == "x^3 r1^-1 x^-6");

  // The emitted factors prove sigma => x_part next y_part.
  Word claim = sl.x_part;
  claim.append(sl.next_sigma);
  claim.append(sl.y_part);
  Word prod = cert_product(b.p, sl.factors);
  prod.append(claim);
  CHECK(freely_equal(prod, group_word_of(b, w)));
}

TEST_CASE("a backward step lifts through the mirrored phase chain") {
  const BooneGroup b = boone_encode(zoo_halt1());
  const SgWord w = {0, 6, 2, 0};  // h qh s1 h
  const StepLift sl = lift_derivation_step(b, w, {0, StepDir::RL, 1});
  CHECK(print_word(sl.x_part, b.p.gens) == "x^-1 r1^-1 x^2");
  CHECK(print_word(sl.next_sigma, b.p.gens) == "h q1 s1 h");
  CHECK(print_word(sl.y_part, b.p.gens) == "x^6 r1 x^-3");

  Word claim = sl.x_part;
  claim.append(sl.next_sigma);
  claim.append(sl.y_part);
  Word prod = cert_product(b.p, sl.factors);
  prod.append(claim);
  CHECK(freely_equal(prod, group_word_of(b, w)));
}

TEST_CASE("halting computations lift to verified beta certificates") {
  struct Case {
    TuringMachine m;
    std::uint64_t n;
  };
  const std::vector<Case> cases = {
      {zoo_halt1(), 0}, {zoo_halt1(), 1}, {zoo_halt1(), 2}, {zoo_flip2(), 0},
      {zoo_flip2(), 1}, {zoo_mover(), 0}, {zoo_mover(), 1}, {zoo_mover(), 2},
      {zoo_mover(), 3},
  };
  for (const Case& c : cases) {
    CAPTURE(c.m.name, c.n);
    const BooneGroup b = boone_encode(c.m);
    const auto input = phi_input(c.n);
    const RunTrace tr = run(c.m, input, 1000);
    REQUIRE(tr.halted);
    const Derivation d = derive_from_trace(c.m, b.post, tr);
    const TrivialityCertificate cert = certificate_from_derivation(b, d);
    CHECK(cert.target == beta_for_input(b, input));
    CHECK(verify_certificate(b.p, cert));
  }
}

TEST_CASE("the empty derivation at q lifts to one final-relator entry") {
  const BooneGroup b = boone_encode(zoo_halt1());
  const Derivation d{SgWord{b.post.q}, SgWord{b.post.q}, {}};
  const TrivialityCertificate cert = certificate_from_derivation(b, d);
  REQUIRE(cert.entries.size() == 1);
  CHECK(cert.entries[0].relator == b.idx_final());
  CHECK(cert.entries[0].conjugator.empty());
  CHECK(verify_certificate(b.p, cert));
}

TEST_CASE("derivations that backtrack still lift") {
  const TuringMachine m = zoo_halt1();
  const BooneGroup b = boone_encode(m);
  const auto input = phi_input(0);
  const RunTrace tr = run(m, input, 10);
  Derivation d = derive_from_trace(m, b.post, tr);
  // Take one step forward and immediately undo it before proceeding.
  d.steps.insert(d.steps.begin(), {0, StepDir::RL, 1});
  d.steps.insert(d.steps.begin(), {0, StepDir::LR, 1});
  REQUIRE(verify_derivation(b.post.sg, d));
  const TrivialityCertificate cert = certificate_from_derivation(b, d);
  CHECK(cert.target == beta_for_input(b, input));
  CHECK(verify_certificate(b.p, cert));
}

TEST_CASE("bad derivations are rejected before any lifting") {
  const TuringMachine m = zoo_halt1();
  const BooneGroup b = boone_encode(m);
  const RunTrace tr = run(m, phi_input(0), 10);
  const Derivation good = derive_from_trace(m, b.post, tr);

  Derivation wrong_end = good;
  wrong_end.end = SgWord{b.post.qhat};
  CHECK_THROWS_AS(certificate_from_derivation(b, wrong_end),
                  std::invalid_argument);

  Derivation bad_step = good;
  bad_step.steps[0].offset += 1;
  CHECK_THROWS_AS(certificate_from_derivation(b, bad_step),
                  std::invalid_argument);

  Derivation short_walk = good;
  short_walk.steps.pop_back();
  CHECK_THROWS_AS(certificate_from_derivation(b, short_walk),
                  std::invalid_argument);
}

TEST_CASE("relation schema fingerprints are pinned") {
  CHECK(post_schema_checksum() == 0x5dd1fe42b81bcf4cull);
  CHECK(boone_schema_checksum() == 0x7f271145b6378bf7ull);
}
