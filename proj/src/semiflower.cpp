#include "sfa/semiflower.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <utility>

namespace sfa {

GeneratorSet::GeneratorSet(Alphabet alphabet, std::vector<Word> words)
    : alphabet_(std::move(alphabet)), words_(std::move(words)) {
  for (const Word& w : words_) {
    if (w.empty()) {
      throw Error("the empty word is not a valid generator");
    }
    if (!alphabet_.contains_word(w)) {
      throw Error("generator '" + w + "' uses letters outside alphabet '" +
                  alphabet_.letters() + "'");
    }
  }
  std::sort(words_.begin(), words_.end());
  words_.erase(std::unique(words_.begin(), words_.end()), words_.end());
}

bool is_prefix_set(const GeneratorSet& x) {
  // Words are sorted, so a proper prefix is always adjacent to some word it
  // prefixes.
  const auto& ws = x.words();
  for (std::size_t i = 1; i < ws.size(); ++i) {
    const Word& u = ws[i - 1];
    const Word& w = ws[i];
    if (u.size() < w.size() && w.compare(0, u.size(), u) == 0) return false;
  }
  return true;
}

Sfa validate_semi_flower(Automaton a) {
  if (a.initial().size() != 1 || a.final_states().size() != 1 ||
      a.initial() != a.final_states()) {
    throw NotMonoidal(
        "automaton is not monoidal: needs a unique initial state equal to the "
        "unique final state");
  }
  const StateId root = a.initial().front();

  Trimmed t = trim(a);
  if (t.automaton.num_states() != a.num_states()) {
    throw NotTrim("automaton is not trim: " +
                  std::to_string(a.num_states() - t.automaton.num_states()) +
                  " state(s) are not on any initial-to-final path");
  }

  // Off-root digraph must be acyclic. Iterative DFS with colors; a back edge
  // yields a witness cycle.
  const std::size_t n = static_cast<std::size_t>(a.num_states());
  std::vector<int> color(n, 0);  // 0 unseen, 1 on stack, 2 done
  color[static_cast<std::size_t>(root)] = 2;
  std::vector<StateId> path;
  for (StateId start = 0; start < a.num_states(); ++start) {
    if (color[static_cast<std::size_t>(start)] != 0) continue;
    struct Frame {
      StateId state;
      std::size_t next;
    };
    std::vector<Frame> stack{{start, 0}};
    color[static_cast<std::size_t>(start)] = 1;
    path.assign(1, start);
    while (!stack.empty()) {
      Frame& f = stack.back();
      auto ts = a.out(f.state);
      bool descended = false;
      while (f.next < ts.size()) {
        StateId to = ts[f.next++].to;
        if (to == root) continue;
        int& c = color[static_cast<std::size_t>(to)];
        if (c == 1) {
          auto it = std::find(path.begin(), path.end(), to);
          std::vector<StateId> witness(it, path.end());
          witness.push_back(to);
          throw CycleAvoidsRoot(
              "cycle avoids the initial-final state (enters state " +
                  std::to_string(to) + ")",
              std::move(witness));
        }
        if (c == 0) {
          c = 1;
          stack.push_back({to, 0});
          path.push_back(to);
          descended = true;
          break;
        }
      }
      if (!descended) {
        color[static_cast<std::size_t>(f.state)] = 2;
        path.pop_back();
        stack.pop_back();
      }
    }
  }

  bool det = is_deterministic(a);
  return Sfa(std::move(a), root, det);
}

namespace {

Sfa build_trie_sfa(const GeneratorSet& x) {
  // Trie of X with every word end identified with the root. Prefix property
  // guarantees word ends are trie leaves, so the merge adds no out-arcs to
  // the root and the result stays deterministic.
  std::vector<std::map<char, StateId>> children(1);
  std::vector<Transition> transitions;
  for (const Word& w : x.words()) {
    StateId node = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
      char c = w[i];
      if (i + 1 == w.size()) {
        transitions.push_back({node, c, 0});
        break;
      }
      auto [it, inserted] = children[static_cast<std::size_t>(node)].try_emplace(
          c, static_cast<StateId>(children.size()));
      if (inserted) {
        children.emplace_back();
        transitions.push_back({node, c, it->second});
      }
      node = it->second;
    }
  }
  return validate_semi_flower(
      Automaton(x.alphabet(), static_cast<StateId>(children.size()), {0}, {0},
                std::move(transitions)));
}

Sfa build_flower_sfa(const GeneratorSet& x) {
  // One fresh simple path per word, all sharing only the root.
  StateId next = 1;
  std::vector<Transition> transitions;
  for (const Word& w : x.words()) {
    StateId node = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
      StateId to = (i + 1 == w.size()) ? 0 : next++;
      transitions.push_back({node, w[i], to});
      node = to;
    }
  }
  return validate_semi_flower(
      Automaton(x.alphabet(), next, {0}, {0}, std::move(transitions)));
}

}  // namespace

Sfa build_sfa(const GeneratorSet& x) {
  if (x.empty()) {
    return validate_semi_flower(Automaton(x.alphabet(), 1, {0}, {0}, {}));
  }
  return is_prefix_set(x) ? build_trie_sfa(x) : build_flower_sfa(x);
}

CycleInventory simple_cycles(const Sfa& s, std::size_t cap) {
  if (cap == 0) throw Error("cycle enumeration cap must be positive");
  const Automaton& a = s.automaton();
  const StateId root = s.root();

  CycleInventory inv;
  // Off-root digraph is acyclic, so a depth-first walk that only stops at the
  // root enumerates exactly the simple cycles.
  struct Frame {
    StateId state;
    std::size_t next;
  };
  std::vector<Frame> stack{{root, 0}};
  std::vector<StateId> path{root};
  Word label;
  const std::size_t depth_limit = static_cast<std::size_t>(a.num_states()) + 1;
  while (!stack.empty()) {
    Frame& f = stack.back();
    auto ts = a.out(f.state);
    if (f.next < ts.size()) {
      const Transition& t = ts[f.next++];
      if (t.to == root) {
        if (inv.cycles.size() >= cap) {
          throw BudgetExceeded("simple cycle count exceeds cap " +
                                   std::to_string(cap),
                               cap);
        }
        SimpleCycle c;
        c.states = path;
        c.states.push_back(root);
        c.label = label + t.letter;
        inv.cycles.push_back(std::move(c));
      } else {
        if (stack.size() >= depth_limit) {
          throw Error("off-root walk exceeded the state count; automaton is "
                      "not a valid SFA");
        }
        label.push_back(t.letter);
        path.push_back(t.to);
        stack.push_back({t.to, 0});
      }
    } else {
      stack.pop_back();
      path.pop_back();
      if (!label.empty()) label.pop_back();
    }
  }

  std::sort(inv.cycles.begin(), inv.cycles.end(),
            [](const SimpleCycle& l, const SimpleCycle& r) {
              if (l.label != r.label) return l.label < r.label;
              return l.states < r.states;
            });
  for (const SimpleCycle& c : inv.cycles) inv.labels.push_back(c.label);
  inv.labels.erase(std::unique(inv.labels.begin(), inv.labels.end()),
                   inv.labels.end());
  return inv;
}

std::vector<Word> minimal_generators(const Sfa& s, std::size_t cap) {
  if (!s.deterministic()) {
    throw NotDeterministic(
        "minimal generators are only canonical for deterministic SFA; use the "
        "rank bound instead");
  }
  return simple_cycles(s, cap).labels;
}

}  // namespace sfa
