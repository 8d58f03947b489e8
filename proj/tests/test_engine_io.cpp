#include <catch2/catch_amalgamated.hpp>

#include <stdexcept>
#include <string>
#include <vector>

#include "fpg/engine_io.hpp"
#include "fpg/engines.hpp"
#include "fpg/format.hpp"

using namespace fpg;

namespace {

GroupPresentation make_group(const std::string& name,
                             std::vector<std::string> gens,
                             const std::vector<std::string>& relator_texts) {
  GroupPresentation p;
  p.name = name;
  p.gens = std::move(gens);
  for (const auto& t : relator_texts) p.relators.push_back(parse_word(t, p));
  p.check();
  return p;
}

}  // namespace

TEST_CASE("abelian invariants round-trip and reject malformed input") {
  AbelianInvariants inv;
  inv.free_rank = 2;
  inv.torsion = {mpz_class(2), mpz_class(6)};
  const std::string text = print_abelian_invariants(inv);
  CHECK(text == "free-rank 2\ntorsion 2 6\n");
  const AbelianInvariants back = parse_abelian_invariants(text);
  CHECK(back.free_rank == 2);
  REQUIRE(back.torsion.size() == 2);
  CHECK(back.torsion[0] == 2);
  CHECK(back.torsion[1] == 6);
  CHECK(print_abelian_invariants(back) == text);

  // A perfect group prints an empty torsion list on a bare keyword line.
  AbelianInvariants perfect;
  const std::string ptext = print_abelian_invariants(perfect);
  CHECK(ptext == "free-rank 0\ntorsion\n");
  const AbelianInvariants pback = parse_abelian_invariants(ptext);
  CHECK(pback.free_rank == 0);
  CHECK(pback.torsion.empty());
  CHECK(print_abelian_invariants(pback) == ptext);

  CHECK_THROWS_AS(parse_abelian_invariants(""), ParseError);
  try {
    parse_abelian_invariants("free-rank 1\nbogus\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line == 2);
  }
  try {
    parse_abelian_invariants("free-rank 1\ntorsion x\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line == 2);
    CHECK(std::string(e.what()).find("torsion coefficient") !=
          std::string::npos);
  }
}

TEST_CASE("closed coset tables round-trip byte-identically") {
  const GroupPresentation c5 = make_group("C5", {"a"}, {"a^5"});
  const auto t = coset_enumerate(c5, {}, Budget{.steps = 10000});
  REQUIRE(t.has_value());
  REQUIRE(t->closed);
  REQUIRE(t->rows == 5);

  const std::string text = print_coset_table(*t);
  const CosetTable back = parse_coset_table(text);
  CHECK(back.rows == t->rows);
  CHECK(back.num_gens == t->num_gens);
  CHECK(back.closed);
  CHECK(back.act == t->act);
  CHECK(coset_table_consistent(c5, {}, back));
  CHECK(print_coset_table(back) == text);
}

TEST_CASE("only closed coset tables are printable") {
  CosetTable open;
  open.num_gens = 1;
  open.rows = 1;
  open.act = {0, 0};
  open.closed = false;
  CHECK_THROWS_AS(print_coset_table(open), std::invalid_argument);
}

TEST_CASE("coset table parser rejects malformed input with line numbers") {
  CHECK_THROWS_AS(parse_coset_table("garbage\n"), ParseError);

  // Row count promised by the header must match the body.
  try {
    parse_coset_table("table 2 1\nrow 2 2\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("row lines") != std::string::npos);
  }
  // Entries must stay inside [1, rows].
  try {
    parse_coset_table("table 2 1\nrow 2 2\nrow 9 1\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line == 3);
    CHECK(std::string(e.what()).find("out of range") != std::string::npos);
  }
  // Each row line carries exactly one entry per column.
  try {
    parse_coset_table("table 1 2\nrow 1 1\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line == 2);
  }
}

TEST_CASE("closed-table triviality proofs round-trip and verify") {
  const GroupPresentation p = make_group("T", {"a"}, {"a"});
  const auto out = triviality_semi(p, Budget{.steps = 10000});
  REQUIRE(out.proof.has_value());
  REQUIRE(out.proof->kind == TrivialProof::Kind::closed_table);
  CHECK(verify_trivial_proof(p, *out.proof));

  const std::string text = print_trivial_proof(*out.proof, p);
  CHECK(text == "proof closed-table\ntable 1 1\nrow 1 1\n");
  const TrivialProof back = parse_trivial_proof(text, p);
  CHECK(back.kind == TrivialProof::Kind::closed_table);
  CHECK(verify_trivial_proof(p, back));
  CHECK(print_trivial_proof(back, p) == text);

  // A closed table with more than one coset is not a triviality proof.
  CHECK_THROWS_AS(
      parse_trivial_proof("proof closed-table\ntable 2 1\nrow 2 2\nrow 1 1\n",
                          p),
      ParseError);
  CHECK_THROWS_AS(parse_trivial_proof("", p), ParseError);
  CHECK_THROWS_AS(parse_trivial_proof("proof wat\n", p), ParseError);
}

TEST_CASE("generator-certificate triviality proofs round-trip and verify") {
  // a b = 1 and a b^2 = 1 force b = 1 and then a = 1.
  const GroupPresentation p = make_group("T2", {"a", "b"}, {"a b", "a b^2"});
  TrivialProof pr;
  pr.kind = TrivialProof::Kind::generator_certificates;
  pr.strategy = "assembled by hand";
  for (std::size_t g = 0; g < p.gens.size(); ++g) {
    const Word target{{pos(static_cast<std::int32_t>(g))}};
    auto cert = find_certificate(p, target, Budget{.steps = 100000});
    REQUIRE(cert.has_value());
    pr.gen_certs.push_back(std::move(*cert));
  }
  REQUIRE(verify_trivial_proof(p, pr));

  const std::string text = print_trivial_proof(pr, p);
  const TrivialProof back = parse_trivial_proof(text, p);
  CHECK(back.kind == TrivialProof::Kind::generator_certificates);
  REQUIRE(back.gen_certs.size() == 2);
  CHECK(verify_trivial_proof(p, back));
  CHECK(print_trivial_proof(back, p) == text);

  // The count line must cover every generator.
  std::string doctored = text;
  doctored.replace(doctored.find("certificates 2"), 14, "certificates 1");
  CHECK_THROWS_AS(parse_trivial_proof(doctored, p), ParseError);

  // Dropping a block leaves fewer blocks than the count promises.
  const std::string truncated =
      text.substr(0, text.find("target", text.find("target") + 1));
  CHECK_THROWS_AS(parse_trivial_proof(truncated, p), ParseError);

  // A verifying proof for the wrong presentation is rejected semantically.
  const GroupPresentation q = make_group("Q", {"a", "b"}, {"a", "b"});
  const TrivialProof wrong = parse_trivial_proof(text, q);
  CHECK_FALSE(verify_trivial_proof(q, wrong));
}

TEST_CASE("isomorphism witnesses round-trip and verify") {
  const GroupPresentation p = make_group("C2", {"a"}, {"a^2"});
  const GroupPresentation q = make_group("C2b", {"b"}, {"b^2"});
  const auto out = iso_search(p, q, Budget{.steps = 1000000});
  REQUIRE(out.witness.has_value());
  REQUIRE(verify_iso_witness(p, q, *out.witness));

  const std::string text = print_iso_witness(*out.witness, p, q);
  const IsoWitness back = parse_iso_witness(text, p, q);
  CHECK(verify_iso_witness(p, q, back));
  CHECK(print_iso_witness(back, p, q) == text);

  CHECK_THROWS_AS(parse_iso_witness(text + "junk\n", p, q), ParseError);
  try {
    parse_iso_witness("forward 1\n", p, q);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line == 2);
  }
}

TEST_CASE("identity witness on a two-generator group round-trips") {
  const GroupPresentation p = make_group("P", {"a", "b"}, {"a^2", "b^3"});
  const auto out = iso_search(p, p, Budget{.steps = 2000000});
  REQUIRE(out.witness.has_value());
  REQUIRE(verify_iso_witness(p, p, *out.witness));
  CHECK(out.witness->forward_relator_certs.size() == 2);
  CHECK(out.witness->forward_inverse_certs.size() == 2);

  const std::string text = print_iso_witness(*out.witness, p, p);
  const IsoWitness back = parse_iso_witness(text, p, p);
  CHECK(verify_iso_witness(p, p, back));
  CHECK(print_iso_witness(back, p, p) == text);
}

TEST_CASE("witness sections may be empty for free groups") {
  const GroupPresentation p = make_group("F", {"x"}, {});
  const GroupPresentation q = make_group("G", {"y"}, {});
  IsoWitness w;
  w.forward = {Word{{pos(0)}}};
  w.backward = {Word{{pos(0)}}};
  w.forward_inverse_certs.push_back(TrivialityCertificate{});
  w.backward_inverse_certs.push_back(TrivialityCertificate{});

  const std::string text = print_iso_witness(w, p, q);
  const IsoWitness back = parse_iso_witness(text, p, q);
  CHECK(back.forward_relator_certs.empty());
  CHECK(back.backward_relator_certs.empty());
  REQUIRE(back.forward_inverse_certs.size() == 1);
  CHECK(back.forward_inverse_certs[0].entries.empty());
  CHECK(print_iso_witness(back, p, q) == text);
}
