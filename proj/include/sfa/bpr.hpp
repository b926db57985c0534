#pragma once

#include <compare>
#include <cstddef>
#include <vector>

#include "sfa/semiflower.hpp"
#include "sfa/types.hpp"

namespace sfa {

struct BprArc {
  StateId from;
  StateId to;
  Word label;

  friend auto operator<=>(const BprArc&, const BprArc&) = default;
};

// Condensed multigraph of an SFA on the root plus its branch points going
// in. Each arc witnesses one simple path of the automaton whose intermediate
// states avoid those nodes, labeled by the path's word.
class Bpr {
 public:
  Bpr(StateId root, std::vector<StateId> nodes, std::vector<BprArc> arcs);

  StateId root() const { return root_; }
  const std::vector<StateId>& nodes() const { return nodes_; }  // ascending
  const std::vector<BprArc>& arcs() const { return arcs_; }     // sorted

  bool is_node(StateId q) const;
  std::size_t node_index(StateId q) const;
  std::size_t multiplicity(StateId from, StateId to) const;
  std::size_t in_multiplicity(StateId to) const;

  // The root counts as a branch point when it keeps indegree >= 2; arcs into
  // a node preserve the source automaton's indegree.
  bool root_is_branch_point() const { return in_multiplicity(root_) >= 2; }

  // Branch-point nodes: all nodes except the root, unless the root is itself
  // a branch point, in which case all nodes.
  std::vector<StateId> branch_points() const;

 private:
  StateId root_;
  std::vector<StateId> nodes_;
  std::vector<BprArc> arcs_;
  std::vector<std::vector<std::size_t>> mult_;  // node_index x node_index
};

Bpr build_bpr(const Sfa& s, std::size_t cap = kDefaultBudget);

// Branch points in a linear order with the root least: arcs between listed
// nodes only run from later to earlier positions. The root appears (first)
// only when it is itself a branch point.
struct TopologicalOrder {
  std::vector<StateId> sequence;
};

// Deterministic linear extension: among emittable nodes, lowest original
// state id first. Throws CycleDetected if the off-root condensation is not
// acyclic (impossible for the BPR of a valid SFA).
TopologicalOrder topological_order(const Bpr& b);

bool is_valid_topological_order(const Bpr& b,
                                const std::vector<StateId>& sequence);

// Arc counts of a BPR under a fixed topological order of its m branch
// points, 0-indexed by position: root_arcs[i] counts arcs root -> q_{i+1},
// arcs[i][j] counts arcs q_{i+1} -> q_{j+1}, and paths_to_root[i] is the
// number of simple paths q_{i+1} -> root obtained by the recursion
//   paths_to_root[0] = 1,
//   paths_to_root[i] = sum_{j<i} arcs[i][j] * paths_to_root[j].
struct KappaProfile {
  std::vector<StateId> order;
  bool root_is_branch_point = false;
  std::vector<std::size_t> root_arcs;
  std::vector<std::vector<std::size_t>> arcs;
  std::vector<BigCount> paths_to_root;

  std::size_t size() const { return root_arcs.size(); }

  // Builds a profile from raw counts (synthetic or measured), validating the
  // triangular shape and running the path recursion. order defaults to
  // positions 1..m.
  static KappaProfile from_counts(std::vector<std::size_t> root_arcs,
                                  std::vector<std::vector<std::size_t>> arcs,
                                  bool root_is_branch_point = false,
                                  std::vector<StateId> order = {});
};

// Counts arcs per the order and runs the path recursion. Throws InvalidOrder
// when the sequence is not a valid topological order of b.
KappaProfile kappa_profile(const Bpr& b, const TopologicalOrder& ord);

// Facts about the first branch point q1: it has exactly one simple path to
// the root, every simple cycle visits it, and it leads every valid
// topological order. Violations are reported, not thrown; they indicate an
// upstream bug.
struct FirstBpiReport {
  StateId first = -1;
  std::size_t paths_to_root = 0;
  Word unique_path_label;
  std::size_t cycles_checked = 0;
  std::size_t cycles_missing_first = 0;
  bool first_in_every_order = false;
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
};

FirstBpiReport first_bpi_facts(const Sfa& s, const Bpr& b,
                               const TopologicalOrder& ord,
                               std::size_t cap = kDefaultBudget);

}  // namespace sfa
