#pragma once

// Small reference machines used across tests, demos, and the acceptance
// harness. All share the alphabet {s0 (blank), s1}, state q1 as start and qh
// as halt, and are chosen so the words flanking the head stay short (the
// group-theoretic constructions downstream blow up exponentially in flank
// length).

#include "fpg/machine.hpp"

namespace fpg {

// Halts in one step on any input s1^{n+1}: overwrite the scanned cell.
inline TuringMachine zoo_halt1() {
  TuringMachine m;
  m.name = "halt1";
  m.alphabet = {"s0", "s1"};
  m.states = {"q1", "qh"};
  m.quads = {{0, 1, ActType::Write, 1, 1}};
  return m;
}

// Flips the scanned 1 to 0, then back to 1, and halts (two steps).
inline TuringMachine zoo_flip2() {
  TuringMachine m;
  m.name = "flip2";
  m.alphabet = {"s0", "s1"};
  m.states = {"q1", "q2", "qh"};
  m.quads = {{0, 1, ActType::Write, 0, 1}, {1, 0, ActType::Write, 1, 2}};
  return m;
}

// Walks right across the input block and halts on the first blank
// (n + 2 steps on s1^{n+1}).
inline TuringMachine zoo_mover() {
  TuringMachine m;
  m.name = "mover";
  m.alphabet = {"s0", "s1"};
  m.states = {"q1", "qh"};
  m.quads = {{0, 1, ActType::MoveRight, 0, 0},
             {0, 0, ActType::Write, 0, 1}};
  return m;
}

// Never halts: moves right forever on both symbols.
inline TuringMachine zoo_loop() {
  TuringMachine m;
  m.name = "loop";
  m.alphabet = {"s0", "s1"};
  m.states = {"q1", "qh"};
  m.quads = {{0, 1, ActType::MoveRight, 0, 0},
             {0, 0, ActType::MoveRight, 0, 0}};
  return m;
}

}  // namespace fpg
