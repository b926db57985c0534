#pragma once

#include <cstddef>
#include <vector>

#include "sfa/automaton.hpp"
#include "sfa/types.hpp"

namespace sfa {

// Finite set of nonempty generator words over a shared alphabet. Words are
// kept sorted and deduplicated; the empty word is rejected.
class GeneratorSet {
 public:
  GeneratorSet(Alphabet alphabet, std::vector<Word> words);

  const Alphabet& alphabet() const { return alphabet_; }
  const std::vector<Word>& words() const { return words_; }
  std::size_t size() const { return words_.size(); }
  bool empty() const { return words_.empty(); }

  friend bool operator==(const GeneratorSet&, const GeneratorSet&) = default;

 private:
  Alphabet alphabet_;
  std::vector<Word> words_;
};

// True iff no word is a proper prefix of another word in the set.
bool is_prefix_set(const GeneratorSet& x);

// A validated semi-flower automaton: trim, unique initial state equal to the
// unique final state, and every cycle through that state (the digraph with
// the root removed is acyclic).
class Sfa {
 public:
  const Automaton& automaton() const { return automaton_; }
  StateId root() const { return root_; }
  bool deterministic() const { return deterministic_; }

 private:
  Sfa(Automaton a, StateId root, bool det)
      : automaton_(std::move(a)), root_(root), deterministic_(det) {}

  friend Sfa validate_semi_flower(Automaton a);

  Automaton automaton_;
  StateId root_;
  bool deterministic_;
};

// Checks the semi-flower conditions and wraps the automaton. Throws NotTrim,
// NotMonoidal, or CycleAvoidsRoot (with a witness cycle) on violation.
Sfa validate_semi_flower(Automaton a);

// Builds an SFA accepting X*. Prefix sets get the trie construction with all
// word ends identified with the root (deterministic, at most one branch point
// going in); other sets get the flower construction with one fresh petal per
// word. The empty set yields the one-state automaton accepting only the empty
// word.
Sfa build_sfa(const GeneratorSet& x);

struct SimpleCycle {
  std::vector<StateId> states;  // starts and ends at the root
  Word label;
};

struct CycleInventory {
  std::vector<SimpleCycle> cycles;  // sorted by (label, state sequence)
  std::vector<Word> labels;         // sorted, deduplicated
};

// Enumerates every simple cycle through the root. Exact; throws
// BudgetExceeded once more than cap cycles are found.
CycleInventory simple_cycles(const Sfa& s, std::size_t cap = kDefaultBudget);

// Cycle labels of a deterministic SFA: the unique minimal generating set of
// the accepted submonoid. Throws NotDeterministic otherwise, where only the
// upper bound from the rank formula is available.
std::vector<Word> minimal_generators(const Sfa& s,
                                     std::size_t cap = kDefaultBudget);

}  // namespace sfa
