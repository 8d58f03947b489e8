#pragma once

// Deterministic quadruple Turing machines and their simulation. A quadruple
// is (state, scanned symbol) -> action, where the action either writes a
// symbol and switches state, or moves the head one cell left/right and
// switches state. Tape alphabet symbol 0 is the blank; the tape is blank
// outside the explicitly stored segment and blank cells are materialized on
// demand (never trimmed), so configurations grow monotonically.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace fpg {

enum class ActType { Write, MoveLeft, MoveRight };

struct Quad {
  std::uint32_t state;
  std::uint32_t sym;
  ActType act;
  std::uint32_t write_sym;  // used when act == Write
  std::uint32_t next;
};

// States: index 0 is the start state, the last index is the halt state.
struct TuringMachine {
  std::string name;
  std::vector<std::string> alphabet;  // alphabet[0] is the blank
  std::vector<std::string> states;
  std::vector<Quad> quads;

  std::uint32_t start_state() const { return 0; }
  std::uint32_t halt_state() const {
    return static_cast<std::uint32_t>(states.size() - 1);
  }
};

// Structural validation. Determinism and no exits from the halt state are
// required; totality is not — a run that reaches a configuration with no
// applicable quadruple fails at simulation time (StuckError), not here.
inline void validate(const TuringMachine& m) {
  if (m.alphabet.empty())
    throw std::invalid_argument("machine needs at least the blank symbol");
  if (m.states.size() < 2)
    throw std::invalid_argument("machine needs distinct start and halt states");
  std::vector<std::string> all = m.alphabet;
  all.insert(all.end(), m.states.begin(), m.states.end());
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = i + 1; j < all.size(); ++j)
      if (all[i] == all[j])
        throw std::invalid_argument("duplicate symbol/state name: " + all[i]);
  std::vector<char> seen(m.states.size() * m.alphabet.size(), 0);
  for (const Quad& q : m.quads) {
    if (q.state >= m.states.size() || q.sym >= m.alphabet.size() ||
        q.next >= m.states.size() ||
        (q.act == ActType::Write && q.write_sym >= m.alphabet.size()))
      throw std::invalid_argument("quadruple index out of range");
    if (q.state == m.halt_state())
      throw std::invalid_argument("quadruple leaves the halt state");
    char& slot = seen[q.state * m.alphabet.size() + q.sym];
    if (slot) throw std::invalid_argument("nondeterministic quadruple pair");
    slot = 1;
  }
}

// Tape split at the head: `left` is the tape left of the head (leftmost cell
// first), `right` begins with the scanned cell. During simulation `right` is
// kept nonempty by materializing blanks.
struct Configuration {
  std::vector<std::uint32_t> left;
  std::uint32_t state = 0;
  std::vector<std::uint32_t> right;

  friend bool operator==(const Configuration&, const Configuration&) = default;
};

struct StuckError : std::runtime_error {
  explicit StuckError(const std::string& what) : std::runtime_error(what) {}
};

enum class StepOutcome { Stepped, Halted };

// Advance one step in place. Returns Halted (without changing c) when c is in
// the halt state; throws StuckError when no quadruple applies.
inline StepOutcome step(const TuringMachine& m, Configuration& c) {
  if (c.state == m.halt_state()) return StepOutcome::Halted;
  if (c.right.empty()) c.right.push_back(0);
  const std::uint32_t scanned = c.right.front();
  for (const Quad& q : m.quads) {
    if (q.state != c.state || q.sym != scanned) continue;
    switch (q.act) {
      case ActType::Write:
        c.right.front() = q.write_sym;
        break;
      case ActType::MoveLeft:
        if (c.left.empty()) c.left.push_back(0);
        c.right.insert(c.right.begin(), c.left.back());
        c.left.pop_back();
        break;
      case ActType::MoveRight:
        c.left.push_back(scanned);
        c.right.erase(c.right.begin());
        if (c.right.empty()) c.right.push_back(0);
        break;
    }
    c.state = q.next;
    return StepOutcome::Stepped;
  }
  throw StuckError("no quadruple applies in state " + m.states[c.state] +
                   " scanning " + m.alphabet[scanned]);
}

struct RunTrace {
  std::vector<Configuration> configs;  // configs[0] is the initial one
  bool halted = false;                 // false means the budget ran out
  std::uint64_t steps_taken = 0;
};

inline Configuration initial_configuration(const TuringMachine& m,
                                           std::vector<std::uint32_t> input) {
  Configuration c;
  c.state = m.start_state();
  c.right = std::move(input);
  if (c.right.empty()) c.right.push_back(0);
  for (std::uint32_t s : c.right)
    if (s >= m.alphabet.size())
      throw std::invalid_argument("input symbol out of range");
  return c;
}

// Run from the standard initial configuration for at most `budget` steps.
inline RunTrace run(const TuringMachine& m, std::vector<std::uint32_t> input,
                    std::uint64_t budget) {
  RunTrace t;
  Configuration c = initial_configuration(m, std::move(input));
  t.configs.push_back(c);
  while (t.steps_taken < budget) {
    if (step(m, c) == StepOutcome::Halted) {
      t.halted = true;
      return t;
    }
    t.configs.push_back(c);
    ++t.steps_taken;
  }
  t.halted = c.state == m.halt_state();
  return t;
}

// The standard unary input: n+1 copies of symbol 1.
inline std::vector<std::uint32_t> phi_input(std::uint64_t n) {
  return std::vector<std::uint32_t>(n + 1, 1);
}

}  // namespace fpg
