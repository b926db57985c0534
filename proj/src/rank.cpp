#include "sfa/rank.hpp"

#include <stdexcept>
#include <string>

namespace sfa {

RankReport rank_from_kappa(const KappaProfile& p) {
  RankReport report;
  report.order = p.order;
  report.rank_value = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    BigCount c = BigCount(p.root_arcs[i]) * p.paths_to_root[i];
    report.rank_value += c;
    report.contributions.push_back(std::move(c));
  }
  report.cycle_count = report.rank_value;
  return report;
}

RankReport rank(const Sfa& s, std::size_t cap) {
  const Automaton& a = s.automaton();
  if (bpi_set(a).empty()) {
    // Without branch points the automaton is a single cycle or the trivial
    // one-state machine, so the rank is 1 or 0. Enumeration confirms.
    std::size_t cycles = simple_cycles(s, cap).cycles.size();
    if (cycles > 1) {
      throw std::logic_error("branch-point-free SFA with multiple cycles");
    }
    RankReport report;
    report.rank_value = a.transitions().empty() ? 0 : 1;
    report.cycle_count = cycles;
    report.exact = true;
    report.generator_count = cycles;
    if (report.rank_value != report.cycle_count) {
      throw std::logic_error("cycle census disagrees with rank 0/1 rule");
    }
    return report;
  }

  Bpr b = build_bpr(s, cap);
  TopologicalOrder ord = topological_order(b);
  KappaProfile profile = kappa_profile(b, ord);
  RankReport report = rank_from_kappa(profile);
  report.exact = s.deterministic();
  return report;
}

EdgeIdentity edge_identity(const Sfa& s) {
  if (!s.deterministic()) {
    throw NotDeterministic("edge identity is stated for deterministic SFA");
  }
  const Automaton& a = s.automaton();
  EdgeIdentity id;
  id.lhs = static_cast<long long>(a.transitions().size()) -
           static_cast<long long>(a.num_states());
  BpoHistogram h = bpo_histogram(a);
  for (std::size_t i = 2; i < h.counts.size(); ++i) {
    id.rhs += static_cast<long long>(h.counts[i] * (i - 1));
  }
  id.holds = id.lhs == id.rhs;
  return id;
}

RankReport single_bpi_rank(const Sfa& s) {
  const Automaton& a = s.automaton();
  std::vector<StateId> bpis = bpi_set(a);
  if (bpis.size() != 1) {
    throw BpiCountMismatch("expected exactly one branch point going in, got " +
                           std::to_string(bpis.size()));
  }
  Bpr b = build_bpr(s);
  std::size_t k1 = b.multiplicity(s.root(), bpis.front());
  long long expected = static_cast<long long>(a.transitions().size()) -
                       static_cast<long long>(a.num_states()) + 1;
  if (expected < 0 || k1 != static_cast<std::size_t>(expected)) {
    throw std::logic_error(
        "root arc count disagrees with |F| - |Q| + 1 on a single-branch-point "
        "SFA");
  }
  RankReport report;
  report.rank_value = k1;
  report.cycle_count = k1;
  report.exact = s.deterministic();
  report.contributions = {BigCount(k1)};
  report.order = {bpis.front()};
  return report;
}

BigCount correction_term(const KappaProfile& p) {
  if (p.size() == 0) {
    throw BpiCountMismatch("correction term needs at least one branch point");
  }
  BigCount total = 0;
  for (std::size_t i = 1; i < p.size(); ++i) {  // position i+1 in 1-based terms
    BigCount ki(p.root_arcs[i]);
    BigCount ki1(p.arcs[i][0]);
    total += (ki - 1) * (ki1 - 1);
    for (std::size_t j = 1; j < i; ++j) {
      total += BigCount(p.arcs[i][j]) * (ki * p.paths_to_root[j] - 1);
    }
  }
  return total;
}

LemmaEdgeRank lemma_edge_rank(const Sfa& s, std::size_t cap) {
  const Automaton& a = s.automaton();
  if (bpi_set(a).empty()) {
    throw BpiCountMismatch("edge-rank lemma needs at least one branch point");
  }
  Bpr b = build_bpr(s, cap);
  KappaProfile profile = kappa_profile(b, topological_order(b));

  LemmaEdgeRank out;
  out.lhs = BigCount(a.transitions().size()) - BigCount(a.num_states()) + 1;
  out.rhs = rank_from_kappa(profile).rank_value - correction_term(profile);
  out.holds = out.lhs >= out.rhs;
  out.equality = out.lhs == out.rhs;
  return out;
}

BigCount rank_via_bpo(const Sfa& s, std::size_t cap) {
  if (!s.deterministic()) {
    throw NotDeterministic("this rank route is stated for deterministic SFA");
  }
  const Automaton& a = s.automaton();
  if (bpi_set(a).empty()) {
    throw BpiCountMismatch("this rank route needs at least one branch point");
  }
  Bpr b = build_bpr(s, cap);
  KappaProfile profile = kappa_profile(b, topological_order(b));

  BigCount total = correction_term(profile);
  BpoHistogram h = bpo_histogram(a);
  for (std::size_t t = 2; t < h.counts.size(); ++t) {
    total += BigCount(h.counts[t]) * BigCount(t - 1);
  }
  return total + 1;
}

SequenceBound sequence_inequality(const std::vector<std::size_t>& c,
                                  const std::vector<std::size_t>& d) {
  if (c.size() != d.size() || c.empty()) {
    throw LengthMismatch("sequences must have equal nonzero length");
  }
  const std::size_t n = c.size();
  SequenceBound out;
  out.lhs = 0;
  for (std::size_t t = 2; t <= n; ++t) {
    BigCount ctail = 0, dtail = 0;
    for (std::size_t r = t; r <= n; ++r) {
      ctail += c[r - 1];
      dtail += d[r - 1];
    }
    out.lhs += BigCount(t - 1) * ctail * dtail;
  }
  BigCount cw = 0, dw = 0;
  for (std::size_t i = 2; i <= n; ++i) {
    cw += BigCount(i - 1) * c[i - 1];
    dw += BigCount(i - 1) * d[i - 1];
  }
  out.rhs = cw * dw;
  out.holds = out.lhs <= out.rhs;
  return out;
}

BpoBound bpo_product_bound(const Automaton& a1, const Automaton& a2,
                           std::size_t t) {
  if (!is_deterministic(a1) || !is_deterministic(a2)) {
    throw NotDeterministic("the branch-out bound is stated for deterministic "
                           "automata");
  }
  if (a1.alphabet() != a2.alphabet()) {
    throw AlphabetMismatch("the branch-out bound needs a shared alphabet");
  }
  const std::size_t n = a1.alphabet().size();
  if (t < 1 || t > n) {
    throw Error("outdegree index must be between 1 and the alphabet size");
  }

  BpoHistogram hp = bpo_histogram(product(a1, a2).automaton);
  BpoHistogram h1 = bpo_histogram(a1);
  BpoHistogram h2 = bpo_histogram(a2);

  BpoBound out;
  out.lhs = t < hp.counts.size() ? hp.counts[t] : 0;
  BigCount ctail = 0, dtail = 0;
  for (std::size_t r = t; r <= n; ++r) {
    ctail += h1.counts[r];
    dtail += h2.counts[r];
  }
  out.rhs = ctail * dtail;
  out.holds = BigCount(out.lhs) <= out.rhs;
  return out;
}

}  // namespace sfa
