#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "sfa/types.hpp"

namespace sfa {

struct Transition {
  StateId from;
  char letter;
  StateId to;

  friend auto operator<=>(const Transition&, const Transition&) = default;
};

// Finite automaton (Q, I, T, F) over an alphabet, viewed as a labeled
// digraph. Immutable after construction; transitions form a set (duplicate
// triples are collapsed) and are kept sorted by (from, letter, to) so the
// out-transitions of a state are a contiguous range.
class Automaton {
 public:
  Automaton(Alphabet alphabet, StateId num_states,
            std::vector<StateId> initial, std::vector<StateId> final_states,
            std::vector<Transition> transitions);

  const Alphabet& alphabet() const { return alphabet_; }
  StateId num_states() const { return num_states_; }
  const std::vector<StateId>& initial() const { return initial_; }
  const std::vector<StateId>& final_states() const { return final_; }
  const std::vector<Transition>& transitions() const { return transitions_; }

  std::span<const Transition> out(StateId q) const;
  std::size_t out_degree(StateId q) const;
  // Number of transition triples entering q. Parallel transitions between the
  // same state pair on distinct letters each count.
  std::size_t in_degree(StateId q) const;

  bool is_initial(StateId q) const;
  bool is_final(StateId q) const;

  friend bool operator==(const Automaton&, const Automaton&) = default;

 private:
  Alphabet alphabet_;
  StateId num_states_ = 0;
  std::vector<StateId> initial_;
  std::vector<StateId> final_;
  std::vector<Transition> transitions_;
  std::vector<std::size_t> out_begin_;  // size num_states_+1
  std::vector<std::size_t> in_degree_;
};

// Raw product automaton on Q1 x Q2 with a recoverable pair map:
// pairs[id] = (state of a1, state of a2).
struct Product {
  Automaton automaton;
  std::vector<std::pair<StateId, StateId>> pairs;
};

Product product(const Automaton& a1, const Automaton& a2);

// Trim restriction with the surviving original ids: kept[new_id] = old_id,
// ascending, so renumbering is stable.
struct Trimmed {
  Automaton automaton;
  std::vector<StateId> kept;
};

Trimmed trim(const Automaton& a);

bool is_deterministic(const Automaton& a);
bool accepts(const Automaton& a, const Word& w);

// States with indegree >= 2 (branch points going in), ascending.
std::vector<StateId> bpi_set(const Automaton& a);

// counts[i] = number of states with outdegree exactly i. Sized to cover both
// the alphabet cardinality and the largest outdegree actually present.
struct BpoHistogram {
  std::vector<std::size_t> counts;

  std::size_t state_total() const;
  std::size_t transition_total() const;
};

BpoHistogram bpo_histogram(const Automaton& a);

}  // namespace sfa
