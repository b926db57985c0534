#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "sfa/bpr.hpp"
#include "sfa/semiflower.hpp"
#include "sfa/types.hpp"

namespace sfa {

// Rank of the accepted submonoid. rank_value equals the simple-cycle count
// of the automaton; it is the exact rank when the SFA is deterministic and
// an upper bound otherwise.
struct RankReport {
  BigCount rank_value;
  bool exact = false;
  std::vector<BigCount> contributions;  // per branch point, in order
  BigCount cycle_count;
  std::optional<std::size_t> generator_count;
  std::vector<StateId> order;

  BigCount reduced() const { return reduced_rank(rank_value); }
};

// rank_value = sum_i root_arcs[i] * paths_to_root[i]. The exact flag is left
// false; callers set it from determinism.
RankReport rank_from_kappa(const KappaProfile& p);

// Full pipeline: no branch points gives rank 0 (no transitions) or 1;
// otherwise BPR -> topological order -> profile -> formula.
RankReport rank(const Sfa& s, std::size_t cap = kDefaultBudget);

// |F| - |Q| = sum_{i>=2} |BPO_i| * (i-1), an identity for deterministic SFA.
struct EdgeIdentity {
  long long lhs = 0;
  long long rhs = 0;
  bool holds = false;
};

EdgeIdentity edge_identity(const Sfa& s);

// Rank bound for an SFA with exactly one branch point going in:
// root_arcs[0] = |F| - |Q| + 1. Exact when deterministic.
RankReport single_bpi_rank(const Sfa& s);

// The correction sum
//   S = sum_{i=2..m} [ (k_i - 1)(k_{i1} - 1)
//                      + sum_{j=2..i-1} k_{ij} (k_i * pbar_j - 1) ]
// where k are the profile's arc counts and pbar the path counts. Can be
// negative on profiles with branch points unreachable from the root.
BigCount correction_term(const KappaProfile& p);

// |F| - |Q| + 1 >= rank - S, with equality for deterministic SFA.
struct LemmaEdgeRank {
  BigCount lhs;
  BigCount rhs;
  bool holds = false;
  bool equality = false;
};

LemmaEdgeRank lemma_edge_rank(const Sfa& s, std::size_t cap = kDefaultBudget);

// Alternative route to the rank of a deterministic SFA with m >= 1 branch
// points: S + sum_{t>=2} |BPO_t| * (t-1) + 1.
BigCount rank_via_bpo(const Sfa& s, std::size_t cap = kDefaultBudget);

// For natural sequences c, d of equal length n (1-indexed as c[0] = c_1):
// sum_{t=2..n} (t-1) (sum_{r>=t} c_r)(sum_{s>=t} d_s)
//   <= (sum_i (i-1) c_i)(sum_j (j-1) d_j).
struct SequenceBound {
  BigCount lhs;
  BigCount rhs;
  bool holds = false;
};

SequenceBound sequence_inequality(const std::vector<std::size_t>& c,
                                  const std::vector<std::size_t>& d);

// |BPO_t(a1 x a2)| <= sum_{t<=r,s<=n} |BPO_r(a1)| * |BPO_s(a2)| for
// deterministic automata over a shared alphabet of size n, 1 <= t <= n.
struct BpoBound {
  std::size_t lhs = 0;
  BigCount rhs;
  bool holds = false;
};

BpoBound bpo_product_bound(const Automaton& a1, const Automaton& a2,
                           std::size_t t);

}  // namespace sfa
