#include "sfa/automaton.hpp"

#include <algorithm>
#include <deque>
#include <string>

namespace sfa {

namespace {

void check_state(StateId q, StateId n, const char* role) {
  if (q < 0 || q >= n) {
    throw Error(std::string(role) + " state id " + std::to_string(q) +
                " out of range [0, " + std::to_string(n) + ")");
  }
}

std::vector<StateId> sorted_unique(std::vector<StateId> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace

Automaton::Automaton(Alphabet alphabet, StateId num_states,
                     std::vector<StateId> initial,
                     std::vector<StateId> final_states,
                     std::vector<Transition> transitions)
    : alphabet_(std::move(alphabet)),
      num_states_(num_states),
      initial_(sorted_unique(std::move(initial))),
      final_(sorted_unique(std::move(final_states))),
      transitions_(std::move(transitions)) {
  if (num_states_ < 0) throw Error("negative state count");
  for (StateId q : initial_) check_state(q, num_states_, "initial");
  for (StateId q : final_) check_state(q, num_states_, "final");

  std::sort(transitions_.begin(), transitions_.end());
  transitions_.erase(std::unique(transitions_.begin(), transitions_.end()),
                     transitions_.end());
  for (const Transition& t : transitions_) {
    check_state(t.from, num_states_, "transition source");
    check_state(t.to, num_states_, "transition target");
    if (!alphabet_.contains(t.letter)) {
      throw Error(std::string("transition letter '") + t.letter +
                  "' not in alphabet '" + alphabet_.letters() + "'");
    }
  }

  out_begin_.assign(static_cast<std::size_t>(num_states_) + 1, 0);
  in_degree_.assign(static_cast<std::size_t>(num_states_), 0);
  for (const Transition& t : transitions_) {
    ++out_begin_[static_cast<std::size_t>(t.from) + 1];
    ++in_degree_[static_cast<std::size_t>(t.to)];
  }
  for (std::size_t i = 1; i < out_begin_.size(); ++i) {
    out_begin_[i] += out_begin_[i - 1];
  }
}

std::span<const Transition> Automaton::out(StateId q) const {
  check_state(q, num_states_, "query");
  std::size_t b = out_begin_[static_cast<std::size_t>(q)];
  std::size_t e = out_begin_[static_cast<std::size_t>(q) + 1];
  return {transitions_.data() + b, e - b};
}

std::size_t Automaton::out_degree(StateId q) const { return out(q).size(); }

std::size_t Automaton::in_degree(StateId q) const {
  check_state(q, num_states_, "query");
  return in_degree_[static_cast<std::size_t>(q)];
}

bool Automaton::is_initial(StateId q) const {
  return std::binary_search(initial_.begin(), initial_.end(), q);
}

bool Automaton::is_final(StateId q) const {
  return std::binary_search(final_.begin(), final_.end(), q);
}

Product product(const Automaton& a1, const Automaton& a2) {
  if (a1.alphabet() != a2.alphabet()) {
    throw AlphabetMismatch("product requires identical alphabets ('" +
                           a1.alphabet().letters() + "' vs '" +
                           a2.alphabet().letters() + "')");
  }
  const StateId n1 = a1.num_states();
  const StateId n2 = a2.num_states();
  auto encode = [n2](StateId p, StateId q) { return p * n2 + q; };

  std::vector<std::pair<StateId, StateId>> pairs;
  pairs.reserve(static_cast<std::size_t>(n1) * static_cast<std::size_t>(n2));
  for (StateId p = 0; p < n1; ++p) {
    for (StateId q = 0; q < n2; ++q) {
      pairs.emplace_back(p, q);
    }
  }

  std::vector<StateId> initial;
  for (StateId p : a1.initial()) {
    for (StateId q : a2.initial()) initial.push_back(encode(p, q));
  }
  std::vector<StateId> final_states;
  for (StateId p : a1.final_states()) {
    for (StateId q : a2.final_states()) final_states.push_back(encode(p, q));
  }

  std::vector<Transition> transitions;
  for (StateId p = 0; p < n1; ++p) {
    for (const Transition& t1 : a1.out(p)) {
      for (StateId q = 0; q < n2; ++q) {
        for (const Transition& t2 : a2.out(q)) {
          if (t1.letter == t2.letter) {
            transitions.push_back(
                {encode(p, q), t1.letter, encode(t1.to, t2.to)});
          }
        }
      }
    }
  }

  return {Automaton(a1.alphabet(), n1 * n2, std::move(initial),
                    std::move(final_states), std::move(transitions)),
          std::move(pairs)};
}

Trimmed trim(const Automaton& a) {
  const std::size_t n = static_cast<std::size_t>(a.num_states());

  std::vector<char> accessible(n, 0);
  std::deque<StateId> queue(a.initial().begin(), a.initial().end());
  for (StateId q : a.initial()) accessible[static_cast<std::size_t>(q)] = 1;
  while (!queue.empty()) {
    StateId q = queue.front();
    queue.pop_front();
    for (const Transition& t : a.out(q)) {
      if (!accessible[static_cast<std::size_t>(t.to)]) {
        accessible[static_cast<std::size_t>(t.to)] = 1;
        queue.push_back(t.to);
      }
    }
  }

  std::vector<std::vector<StateId>> rev(n);
  for (const Transition& t : a.transitions()) {
    rev[static_cast<std::size_t>(t.to)].push_back(t.from);
  }
  std::vector<char> coaccessible(n, 0);
  queue.assign(a.final_states().begin(), a.final_states().end());
  for (StateId q : a.final_states()) {
    coaccessible[static_cast<std::size_t>(q)] = 1;
  }
  while (!queue.empty()) {
    StateId q = queue.front();
    queue.pop_front();
    for (StateId p : rev[static_cast<std::size_t>(q)]) {
      if (!coaccessible[static_cast<std::size_t>(p)]) {
        coaccessible[static_cast<std::size_t>(p)] = 1;
        queue.push_back(p);
      }
    }
  }

  std::vector<StateId> kept;
  std::vector<StateId> new_id(n, -1);
  for (std::size_t q = 0; q < n; ++q) {
    if (accessible[q] && coaccessible[q]) {
      new_id[q] = static_cast<StateId>(kept.size());
      kept.push_back(static_cast<StateId>(q));
    }
  }

  std::vector<StateId> initial;
  for (StateId q : a.initial()) {
    if (new_id[static_cast<std::size_t>(q)] >= 0) {
      initial.push_back(new_id[static_cast<std::size_t>(q)]);
    }
  }
  std::vector<StateId> final_states;
  for (StateId q : a.final_states()) {
    if (new_id[static_cast<std::size_t>(q)] >= 0) {
      final_states.push_back(new_id[static_cast<std::size_t>(q)]);
    }
  }
  std::vector<Transition> transitions;
  for (const Transition& t : a.transitions()) {
    StateId f = new_id[static_cast<std::size_t>(t.from)];
    StateId to = new_id[static_cast<std::size_t>(t.to)];
    if (f >= 0 && to >= 0) transitions.push_back({f, t.letter, to});
  }

  return {Automaton(a.alphabet(), static_cast<StateId>(kept.size()),
                    std::move(initial), std::move(final_states),
                    std::move(transitions)),
          std::move(kept)};
}

bool is_deterministic(const Automaton& a) {
  if (a.initial().size() != 1) return false;
  for (StateId q = 0; q < a.num_states(); ++q) {
    auto ts = a.out(q);
    for (std::size_t i = 1; i < ts.size(); ++i) {
      if (ts[i].letter == ts[i - 1].letter) return false;
    }
  }
  return true;
}

bool accepts(const Automaton& a, const Word& w) {
  if (!a.alphabet().contains_word(w)) {
    throw AlphabetMismatch("word '" + w + "' uses letters outside alphabet '" +
                           a.alphabet().letters() + "'");
  }
  std::vector<char> current(static_cast<std::size_t>(a.num_states()), 0);
  for (StateId q : a.initial()) current[static_cast<std::size_t>(q)] = 1;
  for (char c : w) {
    std::vector<char> next(current.size(), 0);
    bool any = false;
    for (StateId q = 0; q < a.num_states(); ++q) {
      if (!current[static_cast<std::size_t>(q)]) continue;
      for (const Transition& t : a.out(q)) {
        if (t.letter == c) {
          next[static_cast<std::size_t>(t.to)] = 1;
          any = true;
        }
      }
    }
    if (!any) return false;
    current = std::move(next);
  }
  for (StateId q : a.final_states()) {
    if (current[static_cast<std::size_t>(q)]) return true;
  }
  return false;
}

std::vector<StateId> bpi_set(const Automaton& a) {
  std::vector<StateId> out;
  for (StateId q = 0; q < a.num_states(); ++q) {
    if (a.in_degree(q) >= 2) out.push_back(q);
  }
  return out;
}

std::size_t BpoHistogram::state_total() const {
  std::size_t s = 0;
  for (std::size_t c : counts) s += c;
  return s;
}

std::size_t BpoHistogram::transition_total() const {
  std::size_t s = 0;
  for (std::size_t i = 0; i < counts.size(); ++i) s += i * counts[i];
  return s;
}

BpoHistogram bpo_histogram(const Automaton& a) {
  std::size_t size = a.alphabet().size() + 1;
  for (StateId q = 0; q < a.num_states(); ++q) {
    size = std::max(size, a.out_degree(q) + 1);
  }
  BpoHistogram h;
  h.counts.assign(size, 0);
  for (StateId q = 0; q < a.num_states(); ++q) {
    ++h.counts[a.out_degree(q)];
  }
  return h;
}

}  // namespace sfa
