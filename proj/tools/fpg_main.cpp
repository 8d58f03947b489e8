// fpg — command-line front end for the finitely presented group toolkit.
//
// Subcommands:
//   forge  post|boone|gordon|pi|psi|phi|product|abelianize   constructions
//   prove  trivial-word|trivial-group|derivation|certificate proofs
//   solve  abelian-wp|simple-wp                              word problems
//   search iso|normal-gen                                    searches
//   demo   adversary                                         Thm-style demo
//
// Exit codes: 0 = proven / success, 2 = Unknown (budget or search space
// exhausted without a decision), 1 = input error.  All file output is
// written atomically; reruns with identical inputs are byte-identical.

#include <cstdio>
#include <cstdint>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "fpg/boone.hpp"
#include "fpg/boone_lift.hpp"
#include "fpg/engine_io.hpp"
#include "fpg/engines.hpp"
#include "fpg/format.hpp"
#include "fpg/gadgets.hpp"
#include "fpg/gordon.hpp"
#include "fpg/machine.hpp"
#include "fpg/post.hpp"
#include "fpg/schema.hpp"
#include "fpg/zoo.hpp"

namespace {

using namespace fpg;

constexpr int kExitProven = 0;
constexpr int kExitInputError = 1;
constexpr int kExitUnknown = 2;

std::string hex64(std::uint64_t v) {
  char buf[20];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(v));
  return buf;
}

std::string version_string() {
  return "fpg 1.0.0\npost-schema-checksum " + hex64(post_schema_checksum()) +
         "\nboone-schema-checksum " + hex64(boone_schema_checksum()) + "\n";
}

struct EngineOpts {
  std::uint64_t budget = 1'000'000;
  std::uint64_t wall_ms = 0;
  bool deterministic = false;
};

void add_engine_opts(CLI::App* sub, EngineOpts& eo) {
  sub->add_option("--budget", eo.budget, "step ceiling for the search")
      ->capture_default_str();
  sub->add_option("--wall-ms", eo.wall_ms,
                  "wall-clock ceiling in milliseconds (0 = none)");
  sub->add_flag("--deterministic", eo.deterministic,
                "pin the documented deterministic schedule (engines are "
                "always deterministic; accepted for compatibility)");
}

Budget to_budget(const EngineOpts& eo) {
  Budget b;
  b.steps = eo.budget;
  if (eo.wall_ms > 0) b.wall_ms = eo.wall_ms;
  return b;
}

GroupPresentation load_group(const std::string& path) {
  GroupPresentation p = parse_presentation(read_text_file(path));
  p.check();
  return p;
}

TuringMachine load_machine(const std::string& path) {
  TuringMachine m = parse_machine(read_text_file(path));
  validate(m);
  return m;
}

// Command-line words have no file line to point at; strip the parser's
// line prefix so the diagnostic names the option instead.
Word parse_cli_word(const std::string& text, const GroupPresentation& p) {
  try {
    return parse_word(text, p);
  } catch (const ParseError& e) {
    std::string msg = e.what();
    if (const auto pos = msg.find(": ");
        pos != std::string::npos && msg.rfind("line 0:", 0) == 0)
      msg = msg.substr(pos + 2);
    throw std::invalid_argument("--word: " + msg);
  }
}

// Writes to the file when a path was given (atomically), else to stdout.
void emit(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
  } else {
    write_text_file_atomic(out_path, text);
    std::cout << "wrote " << out_path << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "finitely presented groups: machine encodings, perfect-group "
      "constructions, and budgeted semi-decision engines"};
  app.set_version_flag("--version", version_string());
  app.require_subcommand(1);
  int code = kExitProven;

  // ----- forge -------------------------------------------------------------
  auto* forge = app.add_subcommand("forge", "construct presentations");
  forge->require_subcommand(1);

  {
    auto o = std::make_shared<std::pair<std::string, std::string>>();
    auto* c = forge->add_subcommand(
        "post", "special semigroup presentation of a machine");
    c->add_option("--machine", o->first, "machine file")->required();
    c->add_option("--out", o->second, "output file (default stdout)");
    c->callback([o, &code] {
      emit(o->second, print_semigroup(post_encode(load_machine(o->first)).sg));
      code = kExitProven;
    });
  }
  {
    auto o = std::make_shared<std::pair<std::string, std::string>>();
    auto* c = forge->add_subcommand("boone",
                                    "Boone group presentation of a machine");
    c->add_option("--machine", o->first, "machine file")->required();
    c->add_option("--out", o->second, "output file (default stdout)");
    c->callback([o, &code] {
      emit(o->second,
           print_presentation(boone_encode(load_machine(o->first)).p));
      code = kExitProven;
    });
  }
  {
    struct Opts {
      std::string in, word, out;
    };
    auto o = std::make_shared<Opts>();
    auto* c = forge->add_subcommand(
        "gordon", "perfect extension killing exactly the given word's data");
    c->add_option("--in", o->in, "base presentation file")->required();
    c->add_option("--word", o->word, "defining word over the base generators")
        ->required();
    c->add_option("--out", o->out, "output file (default stdout)");
    c->callback([o, &code] {
      const GroupPresentation p = load_group(o->in);
      emit(o->out, print_presentation(gordon(p, parse_cli_word(o->word, p))));
      code = kExitProven;
    });
  }
  const auto add_indexed = [&](const std::string& name, const std::string& help,
                               GroupPresentation (*make)(const TuringMachine&,
                                                         std::uint64_t)) {
    struct Opts {
      std::string machine, out;
      std::uint64_t n = 0;
    };
    auto o = std::make_shared<Opts>();
    auto* c = forge->add_subcommand(name, help);
    c->add_option("--machine", o->machine, "machine file")->required();
    c->add_option("--n", o->n, "family index")->capture_default_str();
    c->add_option("--out", o->out, "output file (default stdout)");
    c->callback([o, make, &code] {
      emit(o->out, print_presentation(make(load_machine(o->machine), o->n)));
      code = kExitProven;
    });
  };
  add_indexed("pi", "pipeline presentation: trivial iff the machine halts on n",
              [](const TuringMachine& m, std::uint64_t n) { return pi(m, n); });
  add_indexed("psi",
              "pi twisted by the n-th prime cyclic factor (order-detecting "
              "family)",
              [](const TuringMachine& m, std::uint64_t n) { return psi(m, n); });
  add_indexed("phi",
              "pi twisted by a fixed order-2 cyclic factor (torsion-detecting "
              "family)",
              [](const TuringMachine& m, std::uint64_t n) {
                return phi_family(m, n);
              });
  {
    auto o = std::make_shared<std::pair<std::vector<std::string>, std::string>>();
    auto* c = forge->add_subcommand("product", "free product of presentations");
    c->add_option("--in", o->first, "presentation files (repeatable)")
        ->required()
        ->expected(-1);
    c->add_option("--out", o->second, "output file (default stdout)");
    c->callback([o, &code] {
      std::vector<GroupPresentation> ps;
      for (const auto& path : o->first) ps.push_back(load_group(path));
      emit(o->second, print_presentation(free_product_family(ps)));
      code = kExitProven;
    });
  }
  {
    auto o = std::make_shared<std::pair<std::string, std::string>>();
    auto* c = forge->add_subcommand(
        "abelianize", "abelian invariants (Smith normal form) of a group");
    c->add_option("--in", o->first, "presentation file")->required();
    c->add_option("--out", o->second, "output file (default stdout)");
    c->callback([o, &code] {
      emit(o->second,
           print_abelian_invariants(abelian_invariants(load_group(o->first))));
      code = kExitProven;
    });
  }

  // ----- prove -------------------------------------------------------------
  auto* prove = app.add_subcommand("prove", "produce or check proofs");
  prove->require_subcommand(1);

  {
    struct Opts {
      std::string in, word, out;
      EngineOpts eo;
    };
    auto o = std::make_shared<Opts>();
    auto* c = prove->add_subcommand(
        "trivial-word", "search for a triviality certificate for a word");
    c->add_option("--in", o->in, "presentation file")->required();
    c->add_option("--word", o->word, "word over the generators")->required();
    c->add_option("--out", o->out, "certificate output file");
    add_engine_opts(c, o->eo);
    c->callback([o, &code] {
      const GroupPresentation p = load_group(o->in);
      const Word w = parse_cli_word(o->word, p);
      const auto cert = find_certificate(p, w, to_budget(o->eo));
      if (!cert) {
        std::cout << "unknown: no certificate found within "
                  << o->eo.budget << " steps\n";
        code = kExitUnknown;
        return;
      }
      std::cout << "trivial: certificate with " << cert->entries.size()
                << " conjugate-of-relator factors\n";
      if (!o->out.empty()) emit(o->out, print_certificate(*cert, p));
      code = kExitProven;
    });
  }
  {
    struct Opts {
      std::string in, out;
      EngineOpts eo;
    };
    auto o = std::make_shared<Opts>();
    auto* c = prove->add_subcommand(
        "trivial-group", "semi-decide triviality of the presented group");
    c->add_option("--in", o->in, "presentation file")->required();
    c->add_option("--out", o->out, "proof output file");
    add_engine_opts(c, o->eo);
    c->callback([o, &code] {
      const GroupPresentation p = load_group(o->in);
      const auto out = triviality_semi(p, to_budget(o->eo));
      if (out.proof) {
        std::cout << "trivial: " << out.reason << " (" << out.steps_used
                  << " steps)\n";
        if (!o->out.empty()) emit(o->out, print_trivial_proof(*out.proof, p));
        code = kExitProven;
      } else {
        std::cout << "unknown: " << out.reason << "\n";
        code = kExitUnknown;
      }
    });
  }
  {
    struct Opts {
      std::string machine, semigroup, derivation, out;
      std::uint64_t input = 0;
      EngineOpts eo;
    };
    auto o = std::make_shared<Opts>();
    auto* c = prove->add_subcommand(
        "derivation",
        "derive (from a halting run) or check a semigroup derivation");
    c->add_option("--machine", o->machine,
                  "machine file (produce mode: run on input n)");
    c->add_option("--input", o->input,
                  "input size n; the tape holds n+1 marked cells")
        ->capture_default_str();
    c->add_option("--semigroup", o->semigroup,
                  "semigroup presentation file (check mode)");
    c->add_option("--derivation", o->derivation,
                  "derivation file to check (check mode)");
    c->add_option("--out", o->out, "derivation output file (produce mode)");
    add_engine_opts(c, o->eo);
    c->callback([o, &code] {
      if (!o->derivation.empty()) {
        if (o->semigroup.empty())
          throw std::invalid_argument(
              "--derivation needs --semigroup for context");
        const SemigroupPresentation sg =
            parse_semigroup(read_text_file(o->semigroup));
        const Derivation d =
            parse_derivation(read_text_file(o->derivation), sg);
        if (verify_derivation(sg, d)) {
          std::cout << "derivation verifies: " << d.steps.size()
                    << " rewrite steps\n";
          code = kExitProven;
        } else {
          std::cerr << "derivation does not verify\n";
          code = kExitInputError;
        }
        return;
      }
      if (o->machine.empty())
        throw std::invalid_argument(
            "need --machine (produce) or --semigroup/--derivation (check)");
      const TuringMachine m = load_machine(o->machine);
      const RunTrace trace = run(m, phi_input(o->input), o->eo.budget);
      if (!trace.halted) {
        std::cout << "unknown: machine still running after " << o->eo.budget
                  << " steps\n";
        code = kExitUnknown;
        return;
      }
      const PostEncoding enc = post_encode(m);
      const Derivation d = derive_from_trace(m, enc, trace);
      if (!verify_derivation(enc.sg, d))
        throw std::logic_error("internal: derived derivation failed to verify");
      std::cout << "halting run of " << trace.steps_taken
                << " machine steps maps to a verified derivation with "
                << d.steps.size() << " rewrite steps\n";
      if (!o->out.empty()) emit(o->out, print_derivation(d, enc.sg));
      code = kExitProven;
    });
  }
  {
    struct Opts {
      std::string machine, group, cert, out;
      std::uint64_t input = 0;
      EngineOpts eo;
    };
    auto o = std::make_shared<Opts>();
    auto* c = prove->add_subcommand(
        "certificate",
        "lift a halting run to a Boone-group certificate, or check one");
    c->add_option("--machine", o->machine,
                  "machine file (produce mode: certificate for beta(input))");
    c->add_option("--input", o->input,
                  "input size n; the tape holds n+1 marked cells")
        ->capture_default_str();
    c->add_option("--group", o->group, "presentation file (check mode)");
    c->add_option("--certificate", o->cert,
                  "certificate file to check (check mode)");
    c->add_option("--out", o->out, "certificate output file (produce mode)");
    add_engine_opts(c, o->eo);
    c->callback([o, &code] {
      if (!o->cert.empty()) {
        if (o->group.empty())
          throw std::invalid_argument(
              "--certificate needs --group for context");
        const GroupPresentation p = load_group(o->group);
        const TrivialityCertificate cert =
            parse_certificate(read_text_file(o->cert), p);
        const CertCheck res = check_certificate(p, cert);
        if (res.ok) {
          std::cout << "certificate verifies: target "
                    << print_word(cert.target, p.gens) << ", "
                    << cert.entries.size() << " entries\n";
          code = kExitProven;
        } else {
          std::cerr << "certificate does not verify: " << res.reason << "\n";
          code = kExitInputError;
        }
        return;
      }
      if (o->machine.empty())
        throw std::invalid_argument(
            "need --machine (produce) or --group/--certificate (check)");
      const TuringMachine m = load_machine(o->machine);
      const RunTrace trace = run(m, phi_input(o->input), o->eo.budget);
      if (!trace.halted) {
        std::cout << "unknown: machine still running after " << o->eo.budget
                  << " steps\n";
        code = kExitUnknown;
        return;
      }
      const BooneGroup b = boone_encode(m);
      const Derivation d = derive_from_trace(m, b.post, trace);
      const TrivialityCertificate cert = certificate_from_derivation(b, d);
      if (!verify_certificate(b.p, cert))
        throw std::logic_error("internal: lifted certificate failed to verify");
      std::cout << "certificate with " << cert.entries.size()
                << " entries proves beta trivial for input " << o->input
                << "\n";
      if (!o->out.empty()) emit(o->out, print_certificate(cert, b.p));
      code = kExitProven;
    });
  }

  // ----- solve -------------------------------------------------------------
  auto* solve = app.add_subcommand("solve", "decide word problems");
  solve->require_subcommand(1);

  {
    auto o = std::make_shared<std::pair<std::string, std::string>>();
    auto* c = solve->add_subcommand(
        "abelian-wp", "word problem in the abelianization (always decides)");
    c->add_option("--in", o->first, "presentation file")->required();
    c->add_option("--word", o->second, "word over the generators")->required();
    c->callback([o, &code] {
      const GroupPresentation p = load_group(o->first);
      const Word w = parse_cli_word(o->second, p);
      if (abelian_word_problem(p, w))
        std::cout << "trivial in the abelianization\n";
      else
        std::cout << "nontrivial in the abelianization (hence nontrivial in "
                     "the group)\n";
      code = kExitProven;
    });
  }
  {
    struct Opts {
      std::string in, word, out;
      EngineOpts eo;
    };
    auto o = std::make_shared<Opts>();
    auto* c = solve->add_subcommand(
        "simple-wp",
        "word problem under the promise that the group is nontrivial simple");
    c->add_option("--in", o->in, "presentation file")->required();
    c->add_option("--word", o->word, "word over the generators")->required();
    c->add_option("--out", o->out,
                  "certificate output file (when the winning strategy "
                  "produced one)");
    add_engine_opts(c, o->eo);
    c->callback([o, &code] {
      const GroupPresentation p = load_group(o->in);
      const Word w = parse_cli_word(o->word, p);
      const WpOutcome out = simple_wp(p, w, to_budget(o->eo));
      switch (out.answer) {
        case WpAnswer::trivial:
          std::cout << "trivial (" << out.strategy << "): " << out.reason
                    << "\n";
          break;
        case WpAnswer::nontrivial:
          std::cout << "nontrivial (" << out.strategy << "): " << out.reason
                    << "\n";
          break;
        case WpAnswer::unknown:
          std::cout << "unknown: " << out.reason << "\n";
          code = kExitUnknown;
          return;
      }
      if (!o->out.empty() && out.word_cert)
        emit(o->out, print_certificate(*out.word_cert, p));
      code = kExitProven;
    });
  }

  // ----- search ------------------------------------------------------------
  auto* search = app.add_subcommand("search", "dovetailed witness searches");
  search->require_subcommand(1);

  {
    struct Opts {
      std::string left, right, out;
      EngineOpts eo;
    };
    auto o = std::make_shared<Opts>();
    auto* c = search->add_subcommand(
        "iso", "explicit isomorphism between two presentations");
    c->add_option("left", o->left, "first presentation file")->required();
    c->add_option("right", o->right, "second presentation file")->required();
    c->add_option("--out", o->out, "witness output file");
    add_engine_opts(c, o->eo);
    c->callback([o, &code] {
      const GroupPresentation p = load_group(o->left);
      const GroupPresentation q = load_group(o->right);
      const IsoOutcome out = iso_search(p, q, to_budget(o->eo));
      if (!out.witness) {
        std::cout << "unknown: " << out.reason << "\n";
        code = kExitUnknown;
        return;
      }
      std::cout << "isomorphic: " << out.reason << "\n";
      for (std::size_t i = 0; i < p.gens.size(); ++i)
        std::cout << "  " << p.gens[i] << " -> "
                  << print_word(out.witness->forward[i], q.gens) << "\n";
      if (!o->out.empty()) emit(o->out, print_iso_witness(*out.witness, p, q));
      code = kExitProven;
    });
  }
  {
    struct Opts {
      std::string in, out, proof_out;
      EngineOpts eo;
    };
    auto o = std::make_shared<Opts>();
    auto* c = search->add_subcommand(
        "normal-gen", "one word whose normal closure is the whole group");
    c->add_option("--in", o->in, "presentation file")->required();
    c->add_option("--out", o->out, "witness word output file");
    c->add_option("--proof-out", o->proof_out,
                  "triviality proof of the augmented presentation");
    add_engine_opts(c, o->eo);
    c->callback([o, &code] {
      const GroupPresentation p = load_group(o->in);
      const NormalGenOutcome out =
          normal_generator_search(p, to_budget(o->eo));
      if (!out.witness) {
        std::cout << "unknown: " << out.reason << "\n";
        code = kExitUnknown;
        return;
      }
      std::cout << "witness " << print_word(*out.witness, p.gens) << "\n"
                << out.reason << "\n";
      if (!o->out.empty())
        emit(o->out, print_word(*out.witness, p.gens) + "\n");
      if (!o->proof_out.empty() && out.proof) {
        GroupPresentation aug = p;
        aug.relators.push_back(*out.witness);
        emit(o->proof_out, print_trivial_proof(*out.proof, aug));
      }
      code = kExitProven;
    });
  }

  // ----- demo --------------------------------------------------------------
  auto* demo = app.add_subcommand("demo", "worked adversarial constructions");
  demo->require_subcommand(1);

  {
    struct Opts {
      std::vector<std::string> machines;
      std::string out;
      std::uint64_t k = 1;
    };
    auto o = std::make_shared<Opts>();
    auto* c = demo->add_subcommand(
        "adversary",
        "free product of k+1 pipeline groups defeating any k-question "
        "nontrivial-element picker");
    c->add_option("--k", o->k, "number of questions the picker may ask")
        ->capture_default_str();
    c->add_option("--machine", o->machines,
                  "machine files (exactly k+1, repeatable)")
        ->required()
        ->expected(-1);
    c->add_option("--out", o->out, "product presentation output file");
    c->callback([o, &code] {
      std::vector<TuringMachine> ms;
      for (const auto& path : o->machines) ms.push_back(load_machine(path));
      const AdversaryReport rep = adversary_demo(o->k, ms);
      std::cout << rep.narrative;
      if (!o->out.empty()) emit(o->out, print_presentation(rep.product));
      code = kExitProven;
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInputError;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return code;
}
