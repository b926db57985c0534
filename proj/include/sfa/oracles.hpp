#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "sfa/semiflower.hpp"
#include "sfa/types.hpp"

namespace sfa::oracles {

// Brute-force reference implementations. These deliberately share no code
// with the main pipeline: cycle enumeration is a plain backtracking DFS over
// the full digraph, and word membership is a dynamic-programming
// factorization over the generator set.

struct CycleCensus {
  std::size_t cycle_count = 0;
  std::size_t label_count = 0;
  std::vector<Word> labels;  // sorted, deduplicated
};

CycleCensus brute_cycle_rank(const Sfa& s, std::size_t cap = kDefaultBudget);

// w in X*, decided by factorization over prefixes of w.
bool in_star(const GeneratorSet& x, const Word& w);

// Minimal generators of X* up to the given length: the words of
// (M \ {eps}) \ (M \ {eps})^2 where M = X* restricted to length <= max_len.
// Complete for prefix sets once max_len covers the longest generator; a
// heuristic cutoff otherwise.
std::vector<Word> brute_minimal_generators(const GeneratorSet& x,
                                           std::size_t max_len);

inline std::size_t default_oracle_length(const GeneratorSet& x) {
  std::size_t longest = 0;
  for (const Word& w : x.words()) longest = std::max(longest, w.size());
  return 2 * longest;
}

// Simple paths (all states distinct) from one state to another, every arc
// counted individually. from == to counts the simple cycles through that
// state instead.
std::size_t brute_simple_paths(const Automaton& a, StateId from, StateId to,
                               std::size_t cap = kDefaultBudget);

enum class InstanceMode { Random, ExhaustiveOrdered };

struct InstanceSpec {
  Alphabet alphabet;             // cardinality 1..3
  std::size_t max_words = 3;     // <= 6
  std::size_t max_word_len = 3;  // <= 5
  std::uint64_t seed = 0;
  InstanceMode mode = InstanceMode::ExhaustiveOrdered;
  std::size_t count = 0;  // pairs drawn in random mode
  bool prefix_only = false;
  std::size_t universe_cap = kDefaultBudget;  // exhaustive-universe guard
};

struct Instance {
  GeneratorSet h;
  GeneratorSet k;
  bool h_prefix = false;
  bool k_prefix = false;
};

// Reproducible stream of generator-set pairs. Exhaustive mode walks the
// ordered universe row-major; random mode draws `count` pairs from the seed.
class InstanceStream {
 public:
  explicit InstanceStream(InstanceSpec spec);

  std::size_t size() const;
  Instance at(std::size_t index) const;

  // Exhaustive universe in (total length, lexicographic) order.
  const std::vector<GeneratorSet>& universe() const { return sets_; }

 private:
  InstanceSpec spec_;
  std::vector<GeneratorSet> sets_;
  std::vector<std::pair<GeneratorSet, GeneratorSet>> random_pairs_;
};

InstanceStream generate_instances(InstanceSpec spec);

// Single random generator set; used by the stream and directly by property
// tests that vary the alphabet per instance.
GeneratorSet random_generator_set(std::mt19937_64& rng, const Alphabet& a,
                                  std::size_t max_words, std::size_t max_len,
                                  bool prefix_only);

// Exhaustive universe of generator sets for the spec box, ordered by
// (total length, lexicographic word tuple).
std::vector<GeneratorSet> enumerate_generator_sets(const InstanceSpec& spec);

}  // namespace sfa::oracles
