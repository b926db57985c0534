#include "sfa/hnp.hpp"

#include <stdexcept>

namespace sfa {

std::string to_string(Classification c) {
  switch (c) {
    case Classification::Case1NoBpi:
      return "Case1-NoBpi";
    case Classification::Case2OneBpi:
      return "Case2-OneBpi";
    case Classification::Case2TwoBpi:
      return "Case2-TwoBpi";
    case Classification::GeneralMBpi:
      return "General-mBpi";
    case Classification::InapplicableNotSfa:
      return "Inapplicable-NotSFA";
    case Classification::InapplicableNondeterministic:
      return "Inapplicable-Nondeterministic";
  }
  throw std::logic_error("unknown classification");
}

BigCount ghn_bound(const KappaProfile& p, const BigCount& rank_h,
                   const BigCount& rank_k) {
  BigCount s = p.size() >= 1 ? correction_term(p) : BigCount(0);
  return s + reduced_rank(rank_h) * reduced_rank(rank_k);
}

bool sufficient_condition(const Bpr& b, const TopologicalOrder& ord) {
  const std::size_t m = ord.sequence.size();
  if (m <= 1) return true;

  // Off-root condensation; all-paths reachability and path counts are DAG
  // dynamic programming over positions, multiplicity-weighted.
  const auto& nodes = b.nodes();
  const std::size_t n = nodes.size();
  const std::size_t root = b.node_index(b.root());
  std::vector<std::vector<std::size_t>> mult(n, std::vector<std::size_t>(n));
  for (const BprArc& arc : b.arcs()) {
    std::size_t u = b.node_index(arc.from);
    if (u == root) continue;
    ++mult[u][b.node_index(arc.to)];
  }

  // (a) no path between distinct non-first branch points.
  std::vector<std::vector<char>> reach(n, std::vector<char>(n, 0));
  for (std::size_t u = 0; u < n; ++u) {
    std::vector<std::size_t> stack{u};
    while (!stack.empty()) {
      std::size_t v = stack.back();
      stack.pop_back();
      for (std::size_t w = 0; w < n; ++w) {
        if (mult[v][w] != 0 && !reach[u][w]) {
          reach[u][w] = 1;
          stack.push_back(w);
        }
      }
    }
  }
  for (std::size_t i = 1; i < m; ++i) {
    for (std::size_t j = 1; j < m; ++j) {
      if (i == j) continue;
      if (reach[b.node_index(ord.sequence[i])]
               [b.node_index(ord.sequence[j])]) {
        return false;
      }
    }
  }

  // (b) exactly one off-root simple path from each non-first branch point to
  // the first. Off-root the graph is acyclic, so path counts memoize.
  const std::size_t target = b.node_index(ord.sequence.front());
  std::vector<BigCount> count(n, BigCount(-1));
  auto paths = [&](auto&& self, std::size_t u) -> BigCount {
    if (count[u] >= 0) return count[u];
    BigCount total = 0;
    for (std::size_t w = 0; w < n; ++w) {
      if (mult[u][w] == 0) continue;
      if (w == target) {
        total += mult[u][w];
      } else if (w != root) {
        total += BigCount(mult[u][w]) * self(self, w);
      }
      // an arc into the root that is not the target is a dead end
    }
    count[u] = total;
    return total;
  };
  for (std::size_t i = 1; i < m; ++i) {
    if (paths(paths, b.node_index(ord.sequence[i])) != 1) return false;
  }
  return true;
}

Classification case_classify(const Automaton& product_trim, const Sfa& ah,
                             const Sfa& ak) {
  if (!ah.deterministic() || !ak.deterministic()) {
    return Classification::InapplicableNondeterministic;
  }
  if (bpi_set(ah.automaton()).empty() || bpi_set(ak.automaton()).empty()) {
    // The trimmed product of deterministic factors then carries no branch
    // point and accepts a cyclic submonoid.
    Sfa p = validate_semi_flower(product_trim);
    if (!bpi_set(p.automaton()).empty()) {
      throw std::logic_error(
          "branch-point-free factor produced a branching product");
    }
    return Classification::Case1NoBpi;
  }
  std::size_t m = 0;
  try {
    Sfa p = validate_semi_flower(product_trim);
    m = bpi_set(p.automaton()).size();
  } catch (const Error&) {
    return Classification::InapplicableNotSfa;
  }
  if (m <= 1) return Classification::Case2OneBpi;
  if (m == 2) return Classification::Case2TwoBpi;
  return Classification::GeneralMBpi;
}

bool verify_hnp_direct(const HnpReport& report) {
  if (!report.rank_intersection.has_value()) {
    throw UndefinedRank(
        "intersection rank is undefined; the pipeline was inapplicable");
  }
  return reduced_rank(*report.rank_intersection) <=
         report.reduced_h() * report.reduced_k();
}

HnpReport analyze(const GeneratorSet& xh, const GeneratorSet& xk,
                  std::size_t cap) {
  if (xh.alphabet() != xk.alphabet()) {
    throw AlphabetMismatch("both generator sets must share one alphabet ('" +
                           xh.alphabet().letters() + "' vs '" +
                           xk.alphabet().letters() + "')");
  }

  HnpReport r;
  r.generators_h = xh.words();
  r.generators_k = xk.words();

  Sfa ah = build_sfa(xh);
  Sfa ak = build_sfa(xk);
  r.rank_h = rank(ah, cap).rank_value;
  r.rank_k = rank(ak, cap).rank_value;
  r.factor_ranks_exact = ah.deterministic() && ak.deterministic();

  Product raw = product(ah.automaton(), ak.automaton());
  r.product_states = static_cast<std::size_t>(raw.automaton.num_states());
  r.product_transitions = raw.automaton.transitions().size();
  Trimmed trimmed = trim(raw.automaton);
  r.trim_states = static_cast<std::size_t>(trimmed.automaton.num_states());
  r.trim_transitions = trimmed.automaton.transitions().size();
  r.product_bpi_count = bpi_set(trimmed.automaton).size();

  r.classification = case_classify(trimmed.automaton, ah, ak);

  std::optional<Sfa> psfa;
  try {
    psfa = validate_semi_flower(trimmed.automaton);
  } catch (const Error&) {
    return r;
  }

  RankReport inter = rank(*psfa, cap);
  r.rank_intersection = inter.rank_value;
  r.intersection_exact = inter.exact;

  Bpr b = build_bpr(psfa, cap);
  TopologicalOrder ord = topological_order(b);
  if (!ord.sequence.empty()) {
    KappaProfile profile = kappa_profile(b, ord);
    r.correction = correction_term(profile);
    r.bound = ghn_bound(profile, r.rank_h, r.rank_k);
  } else {
    r.correction = 0;
    r.bound = r.reduced_h() * r.reduced_k();
  }

  if (r.factor_ranks_exact) {
    r.sufficient = sufficient_condition(b, ord);
    r.hnp = verify_hnp_direct(r);
    if (*r.sufficient && !*r.hnp) {
      throw std::logic_error(
          "sufficient condition held but the rank inequality failed");
    }
  }
  return r;
}

}  // namespace sfa
