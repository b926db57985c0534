#include "sfa/bpr.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace sfa {

Bpr::Bpr(StateId root, std::vector<StateId> nodes, std::vector<BprArc> arcs)
    : root_(root), nodes_(std::move(nodes)), arcs_(std::move(arcs)) {
  std::sort(nodes_.begin(), nodes_.end());
  nodes_.erase(std::unique(nodes_.begin(), nodes_.end()), nodes_.end());
  if (!is_node(root_)) throw Error("BPR nodes must contain the root");
  std::sort(arcs_.begin(), arcs_.end());
  mult_.assign(nodes_.size(), std::vector<std::size_t>(nodes_.size(), 0));
  for (const BprArc& arc : arcs_) {
    if (!is_node(arc.from) || !is_node(arc.to)) {
      throw Error("BPR arc endpoint is not a node");
    }
    if (arc.label.empty()) throw Error("BPR arc labels must be nonempty");
    ++mult_[node_index(arc.from)][node_index(arc.to)];
  }
}

bool Bpr::is_node(StateId q) const {
  return std::binary_search(nodes_.begin(), nodes_.end(), q);
}

std::size_t Bpr::node_index(StateId q) const {
  auto it = std::lower_bound(nodes_.begin(), nodes_.end(), q);
  if (it == nodes_.end() || *it != q) throw Error("not a BPR node");
  return static_cast<std::size_t>(it - nodes_.begin());
}

std::size_t Bpr::multiplicity(StateId from, StateId to) const {
  return mult_[node_index(from)][node_index(to)];
}

std::size_t Bpr::in_multiplicity(StateId to) const {
  std::size_t j = node_index(to);
  std::size_t total = 0;
  for (std::size_t i = 0; i < nodes_.size(); ++i) total += mult_[i][j];
  return total;
}

std::vector<StateId> Bpr::branch_points() const {
  std::vector<StateId> out;
  for (StateId q : nodes_) {
    if (q != root_ || root_is_branch_point()) out.push_back(q);
  }
  return out;
}

Bpr build_bpr(const Sfa& s, std::size_t cap) {
  if (cap == 0) throw Error("path enumeration cap must be positive");
  const Automaton& a = s.automaton();

  std::vector<StateId> nodes = bpi_set(a);
  if (!std::binary_search(nodes.begin(), nodes.end(), s.root())) {
    nodes.push_back(s.root());
  }
  std::vector<char> is_hub(static_cast<std::size_t>(a.num_states()), 0);
  for (StateId q : nodes) is_hub[static_cast<std::size_t>(q)] = 1;

  // One arc per simple path between hub nodes with all intermediate states
  // outside the hub set. Intermediates cannot repeat (a repeat would close a
  // cycle avoiding the root), so the walk needs no visited marks.
  std::vector<BprArc> arcs;
  const std::size_t depth_limit = static_cast<std::size_t>(a.num_states()) + 1;
  for (StateId start : nodes) {
    struct Frame {
      StateId state;
      std::size_t next;
    };
    std::vector<Frame> stack{{start, 0}};
    Word label;
    while (!stack.empty()) {
      Frame& f = stack.back();
      auto ts = a.out(f.state);
      if (f.next < ts.size()) {
        const Transition& t = ts[f.next++];
        if (is_hub[static_cast<std::size_t>(t.to)]) {
          if (arcs.size() >= cap) {
            throw BudgetExceeded(
                "BPR arc count exceeds cap " + std::to_string(cap), cap);
          }
          arcs.push_back({start, t.to, label + t.letter});
        } else {
          if (stack.size() >= depth_limit) {
            throw Error("hub-free walk exceeded the state count; automaton "
                        "is not a valid SFA");
          }
          label.push_back(t.letter);
          stack.push_back({t.to, 0});
        }
      } else {
        stack.pop_back();
        if (!label.empty()) label.pop_back();
      }
    }
  }

  return Bpr(s.root(), std::move(nodes), std::move(arcs));
}

TopologicalOrder topological_order(const Bpr& b) {
  const auto& nodes = b.nodes();
  const std::size_t n = nodes.size();
  const std::size_t root = b.node_index(b.root());

  // Off-root condensation: drop arcs leaving the root. A node may be emitted
  // once all its successors are emitted, so the root (no successors left)
  // goes first and arcs between emitted nodes always run later -> earlier.
  std::vector<std::set<std::size_t>> succ(n);
  std::vector<std::vector<std::size_t>> pred(n);
  for (const BprArc& arc : b.arcs()) {
    std::size_t u = b.node_index(arc.from);
    std::size_t v = b.node_index(arc.to);
    if (u == root) continue;
    if (succ[u].insert(v).second) pred[v].push_back(u);
  }

  std::vector<std::size_t> pending(n);
  std::vector<char> emitted(n, 0);
  for (std::size_t u = 0; u < n; ++u) pending[u] = succ[u].size();
  if (pending[root] != 0) {
    throw CycleDetected("root keeps outgoing arcs after the off-root cut");
  }

  std::vector<StateId> sequence;
  sequence.reserve(n);
  auto emit = [&](std::size_t u) {
    emitted[u] = 1;
    sequence.push_back(nodes[u]);
    for (std::size_t p : pred[u]) {
      if (pending[p] > 0) --pending[p];
    }
  };
  emit(root);
  for (std::size_t done = 1; done < n; ++done) {
    std::size_t picked = n;
    for (std::size_t u = 0; u < n; ++u) {
      if (!emitted[u] && pending[u] == 0) {
        picked = u;  // nodes are ascending by id, first hit is the lowest
        break;
      }
    }
    if (picked == n) {
      throw CycleDetected(
          "off-root condensation contains a cycle; the source automaton is "
          "not a valid SFA");
    }
    emit(picked);
  }

  if (!b.root_is_branch_point()) sequence.erase(sequence.begin());
  return {std::move(sequence)};
}

bool is_valid_topological_order(const Bpr& b,
                                const std::vector<StateId>& sequence) {
  std::vector<StateId> expected = b.branch_points();
  std::vector<StateId> given = sequence;
  std::sort(given.begin(), given.end());
  if (given != expected) return false;
  if (b.root_is_branch_point() &&
      (sequence.empty() || sequence.front() != b.root())) {
    return false;
  }
  for (std::size_t i = 0; i < sequence.size(); ++i) {
    if (sequence[i] == b.root()) continue;
    for (std::size_t j = i; j < sequence.size(); ++j) {
      if (b.multiplicity(sequence[i], sequence[j]) != 0) return false;
    }
  }
  return true;
}

KappaProfile KappaProfile::from_counts(
    std::vector<std::size_t> root_arcs,
    std::vector<std::vector<std::size_t>> arcs, bool root_is_branch_point,
    std::vector<StateId> order) {
  const std::size_t m = root_arcs.size();
  if (arcs.size() != m) throw InvalidOrder("arc matrix must be m x m");
  for (const auto& row : arcs) {
    if (row.size() != m) throw InvalidOrder("arc matrix must be m x m");
  }
  for (std::size_t i = 1; i < m; ++i) {
    for (std::size_t j = i; j < m; ++j) {
      if (arcs[i][j] != 0) {
        throw InvalidOrder("arcs must run from later to earlier positions");
      }
    }
  }
  if (m > 0) {
    for (std::size_t j = 0; j < m; ++j) {
      std::size_t expected = root_is_branch_point ? root_arcs[j] : 0;
      if (arcs[0][j] != expected) {
        throw InvalidOrder(
            root_is_branch_point
                ? "first row must repeat the root arc counts when the root "
                  "is a branch point"
                : "first branch point cannot reach later positions");
      }
    }
  }

  KappaProfile p;
  p.root_is_branch_point = root_is_branch_point;
  p.root_arcs = std::move(root_arcs);
  p.arcs = std::move(arcs);
  if (order.empty()) {
    for (std::size_t i = 0; i < m; ++i) {
      order.push_back(static_cast<StateId>(i + 1));
    }
  } else if (order.size() != m) {
    throw InvalidOrder("order length must match the profile size");
  }
  p.order = std::move(order);

  p.paths_to_root.assign(m, BigCount(0));
  if (m > 0) {
    p.paths_to_root[0] = 1;
    for (std::size_t i = 1; i < m; ++i) {
      BigCount total = 0;
      for (std::size_t j = 0; j < i; ++j) {
        total += BigCount(p.arcs[i][j]) * p.paths_to_root[j];
      }
      p.paths_to_root[i] = std::move(total);
    }
  }
  return p;
}

KappaProfile kappa_profile(const Bpr& b, const TopologicalOrder& ord) {
  if (!is_valid_topological_order(b, ord.sequence)) {
    throw InvalidOrder("sequence is not a topological order of this BPR");
  }
  const std::size_t m = ord.sequence.size();
  std::vector<std::size_t> root_arcs(m);
  std::vector<std::vector<std::size_t>> arcs(m, std::vector<std::size_t>(m));
  for (std::size_t i = 0; i < m; ++i) {
    root_arcs[i] = b.multiplicity(b.root(), ord.sequence[i]);
    for (std::size_t j = 0; j < m; ++j) {
      arcs[i][j] = b.multiplicity(ord.sequence[i], ord.sequence[j]);
    }
  }
  return KappaProfile::from_counts(std::move(root_arcs), std::move(arcs),
                                   b.root_is_branch_point(), ord.sequence);
}

FirstBpiReport first_bpi_facts(const Sfa& s, const Bpr& b,
                               const TopologicalOrder& ord, std::size_t cap) {
  if (ord.sequence.empty()) {
    throw BpiCountMismatch("first-branch-point facts need at least one");
  }
  FirstBpiReport report;
  const StateId first = ord.sequence.front();
  report.first = first;

  // (i) exactly one simple path from q1 to the root, found over BPR arcs.
  if (first == b.root()) {
    report.paths_to_root = 1;  // the null path
  } else {
    std::vector<std::pair<std::size_t, Word>> found;
    std::vector<StateId> path{first};
    auto walk = [&](auto&& self, StateId at, const Word& label) -> void {
      for (const BprArc& arc : b.arcs()) {
        if (arc.from != at) continue;
        if (arc.to == b.root()) {
          found.emplace_back(found.size(), label + arc.label);
          continue;
        }
        if (std::find(path.begin(), path.end(), arc.to) != path.end()) {
          continue;
        }
        path.push_back(arc.to);
        self(self, arc.to, label + arc.label);
        path.pop_back();
      }
    };
    walk(walk, first, Word());
    report.paths_to_root = found.size();
    if (found.size() == 1) report.unique_path_label = found.front().second;
  }
  if (report.paths_to_root != 1) {
    report.violations.push_back(
        "expected exactly one simple path from the first branch point to the "
        "root, found " +
        std::to_string(report.paths_to_root));
  }

  // (ii) every simple cycle visits q1.
  CycleInventory inv = simple_cycles(s, cap);
  report.cycles_checked = inv.cycles.size();
  for (const SimpleCycle& c : inv.cycles) {
    if (std::find(c.states.begin(), c.states.end(), first) == c.states.end()) {
      ++report.cycles_missing_first;
    }
  }
  if (report.cycles_missing_first != 0) {
    report.violations.push_back(
        std::to_string(report.cycles_missing_first) +
        " simple cycle(s) avoid the first branch point");
  }

  // (iii) q1 leads every valid order: every other branch point reaches q1 in
  // the off-root condensation.
  report.first_in_every_order = true;
  const auto& nodes = b.nodes();
  const std::size_t n = nodes.size();
  std::vector<std::vector<std::size_t>> adj(n);
  for (const BprArc& arc : b.arcs()) {
    if (arc.from == b.root()) continue;
    adj[b.node_index(arc.from)].push_back(b.node_index(arc.to));
  }
  const std::size_t target = b.node_index(first);
  for (StateId q : ord.sequence) {
    if (q == first) continue;
    std::vector<char> seen(n, 0);
    std::vector<std::size_t> stack{b.node_index(q)};
    seen[b.node_index(q)] = 1;
    bool reached = false;
    while (!stack.empty() && !reached) {
      std::size_t u = stack.back();
      stack.pop_back();
      for (std::size_t v : adj[u]) {
        if (v == target) {
          reached = true;
          break;
        }
        if (!seen[v]) {
          seen[v] = 1;
          stack.push_back(v);
        }
      }
    }
    if (!reached) {
      report.first_in_every_order = false;
      report.violations.push_back(
          "branch point " + std::to_string(q) +
          " cannot reach the first branch point off-root, so another valid "
          "order could lead with it");
    }
  }

  return report;
}

}  // namespace sfa
