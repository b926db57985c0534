#include "sfa/oracles.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>
#include <string>

namespace sfa::oracles {

CycleCensus brute_cycle_rank(const Sfa& s, std::size_t cap) {
  if (cap == 0) throw Error("enumeration cap must be positive");
  const Automaton& a = s.automaton();
  const StateId root = s.root();

  CycleCensus census;
  std::set<Word> labels;
  std::vector<char> visited(static_cast<std::size_t>(a.num_states()), 0);
  Word label;

  // Plain backtracking over the full digraph; no structural shortcuts.
  std::function<void(StateId)> walk = [&](StateId q) {
    for (const Transition& t : a.out(q)) {
      if (t.to == root) {
        if (census.cycle_count >= cap) {
          throw BudgetExceeded(
              "simple cycle count exceeds cap " + std::to_string(cap), cap);
        }
        ++census.cycle_count;
        labels.insert(label + t.letter);
      } else if (!visited[static_cast<std::size_t>(t.to)]) {
        visited[static_cast<std::size_t>(t.to)] = 1;
        label.push_back(t.letter);
        walk(t.to);
        label.pop_back();
        visited[static_cast<std::size_t>(t.to)] = 0;
      }
    }
  };
  if (a.num_states() > 0) {
    visited[static_cast<std::size_t>(root)] = 1;
    walk(root);
  }

  census.labels.assign(labels.begin(), labels.end());
  census.label_count = census.labels.size();
  return census;
}

bool in_star(const GeneratorSet& x, const Word& w) {
  std::vector<char> reach(w.size() + 1, 0);
  reach[0] = 1;
  for (std::size_t i = 1; i <= w.size(); ++i) {
    for (const Word& g : x.words()) {
      if (g.size() <= i && reach[i - g.size()] &&
          w.compare(i - g.size(), g.size(), g) == 0) {
        reach[i] = 1;
        break;
      }
    }
  }
  return reach[w.size()] != 0;
}

std::vector<Word> brute_minimal_generators(const GeneratorSet& x,
                                           std::size_t max_len) {
  // M = X* restricted to length <= max_len, built by closure.
  std::set<Word> members;
  std::deque<Word> queue;
  for (const Word& g : x.words()) {
    if (g.size() <= max_len && members.insert(g).second) queue.push_back(g);
  }
  while (!queue.empty()) {
    Word w = std::move(queue.front());
    queue.pop_front();
    for (const Word& g : x.words()) {
      if (w.size() + g.size() > max_len) continue;
      Word wg = w + g;
      if (members.insert(wg).second) queue.push_back(std::move(wg));
    }
  }

  std::vector<Word> minimal;
  for (const Word& w : members) {
    bool composite = false;
    for (std::size_t cut = 1; cut + 1 <= w.size() && !composite; ++cut) {
      if (members.count(w.substr(0, cut)) && members.count(w.substr(cut))) {
        composite = true;
      }
    }
    if (!composite) minimal.push_back(w);
  }
  return minimal;
}

std::size_t brute_simple_paths(const Automaton& a, StateId from, StateId to,
                               std::size_t cap) {
  std::size_t found = 0;
  std::vector<char> visited(static_cast<std::size_t>(a.num_states()), 0);
  std::function<void(StateId)> walk = [&](StateId q) {
    for (const Transition& t : a.out(q)) {
      if (t.to == to) {
        if (found >= cap) {
          throw BudgetExceeded(
              "simple path count exceeds cap " + std::to_string(cap), cap);
        }
        ++found;
        continue;
      }
      if (!visited[static_cast<std::size_t>(t.to)]) {
        visited[static_cast<std::size_t>(t.to)] = 1;
        walk(t.to);
        visited[static_cast<std::size_t>(t.to)] = 0;
      }
    }
  };
  if (a.num_states() == 0) return 0;
  visited[static_cast<std::size_t>(from)] = 1;
  walk(from);
  return found;
}

GeneratorSet random_generator_set(std::mt19937_64& rng, const Alphabet& a,
                                  std::size_t max_words, std::size_t max_len,
                                  bool prefix_only) {
  std::uniform_int_distribution<std::size_t> word_count(1, max_words);
  std::uniform_int_distribution<std::size_t> word_len(1, max_len);
  std::uniform_int_distribution<std::size_t> letter(0, a.size() - 1);
  for (;;) {
    std::vector<Word> words;
    std::size_t n = word_count(rng);
    for (std::size_t i = 0; i < n; ++i) {
      Word w;
      std::size_t len = word_len(rng);
      for (std::size_t j = 0; j < len; ++j) {
        w.push_back(a.letters()[letter(rng)]);
      }
      words.push_back(std::move(w));
    }
    GeneratorSet x(a, std::move(words));
    if (!prefix_only || is_prefix_set(x)) return x;
  }
}

std::vector<GeneratorSet> enumerate_generator_sets(const InstanceSpec& spec) {
  if (spec.alphabet.size() < 1 || spec.alphabet.size() > 3) {
    throw Error("instance alphabet must have 1 to 3 letters");
  }
  if (spec.max_words < 1 || spec.max_words > 6) {
    throw Error("instance word count bound must be 1 to 6");
  }
  if (spec.max_word_len < 1 || spec.max_word_len > 5) {
    throw Error("instance word length bound must be 1 to 5");
  }

  // Word pool in (length, lexicographic) order.
  std::vector<Word> pool;
  std::vector<Word> layer{Word()};
  for (std::size_t len = 1; len <= spec.max_word_len; ++len) {
    std::vector<Word> next;
    for (const Word& w : layer) {
      for (char c : spec.alphabet.letters()) next.push_back(w + c);
    }
    std::sort(next.begin(), next.end());
    pool.insert(pool.end(), next.begin(), next.end());
    layer = std::move(next);
  }

  std::vector<std::vector<std::size_t>> combos;
  std::vector<std::size_t> current;
  std::function<void(std::size_t)> pick = [&](std::size_t start) {
    if (!current.empty()) {
      if (combos.size() >= spec.universe_cap) {
        throw BudgetExceeded("exhaustive universe exceeds cap " +
                                 std::to_string(spec.universe_cap),
                             spec.universe_cap);
      }
      combos.push_back(current);
    }
    if (current.size() == spec.max_words) return;
    for (std::size_t i = start; i < pool.size(); ++i) {
      current.push_back(i);
      pick(i + 1);
      current.pop_back();
    }
  };
  pick(0);

  std::vector<std::pair<std::size_t, std::vector<Word>>> keyed;
  keyed.reserve(combos.size());
  for (const auto& combo : combos) {
    std::size_t total = 0;
    std::vector<Word> words;
    for (std::size_t i : combo) {
      total += pool[i].size();
      words.push_back(pool[i]);
    }
    std::sort(words.begin(), words.end());
    keyed.emplace_back(total, std::move(words));
  }
  std::sort(keyed.begin(), keyed.end());

  std::vector<GeneratorSet> sets;
  sets.reserve(keyed.size());
  for (auto& [total, words] : keyed) {
    GeneratorSet x(spec.alphabet, std::move(words));
    if (spec.prefix_only && !is_prefix_set(x)) continue;
    sets.push_back(std::move(x));
  }
  return sets;
}

InstanceStream::InstanceStream(InstanceSpec spec) : spec_(std::move(spec)) {
  if (spec_.mode == InstanceMode::ExhaustiveOrdered) {
    sets_ = enumerate_generator_sets(spec_);
  } else {
    std::mt19937_64 rng(spec_.seed);
    random_pairs_.reserve(spec_.count);
    for (std::size_t i = 0; i < spec_.count; ++i) {
      GeneratorSet h = random_generator_set(rng, spec_.alphabet,
                                            spec_.max_words,
                                            spec_.max_word_len,
                                            spec_.prefix_only);
      GeneratorSet k = random_generator_set(rng, spec_.alphabet,
                                            spec_.max_words,
                                            spec_.max_word_len,
                                            spec_.prefix_only);
      random_pairs_.emplace_back(std::move(h), std::move(k));
    }
  }
}

std::size_t InstanceStream::size() const {
  if (spec_.mode == InstanceMode::ExhaustiveOrdered) {
    return sets_.size() * sets_.size();
  }
  return random_pairs_.size();
}

Instance InstanceStream::at(std::size_t index) const {
  if (index >= size()) throw Error("instance index out of range");
  if (spec_.mode == InstanceMode::ExhaustiveOrdered) {
    const GeneratorSet& h = sets_[index / sets_.size()];
    const GeneratorSet& k = sets_[index % sets_.size()];
    return {h, k, is_prefix_set(h), is_prefix_set(k)};
  }
  const auto& [h, k] = random_pairs_[index];
  return {h, k, is_prefix_set(h), is_prefix_set(k)};
}

InstanceStream generate_instances(InstanceSpec spec) {
  return InstanceStream(std::move(spec));
}

}  // namespace sfa::oracles
