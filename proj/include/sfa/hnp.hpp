#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "sfa/bpr.hpp"
#include "sfa/rank.hpp"
#include "sfa/semiflower.hpp"
#include "sfa/types.hpp"

namespace sfa {

enum class Classification {
  Case1NoBpi,
  Case2OneBpi,
  Case2TwoBpi,
  GeneralMBpi,
  InapplicableNotSfa,
  InapplicableNondeterministic,
};

std::string to_string(Classification c);

// Verdict of the intersection pipeline for H = X_H* and K = X_K*.
// Factor ranks are exact for prefix inputs and upper bounds otherwise;
// rank_intersection is present exactly when the trimmed product validates as
// an SFA, and the HNP verdict only when every rank involved is exact.
struct HnpReport {
  Classification classification = Classification::InapplicableNotSfa;

  std::vector<Word> generators_h;
  std::vector<Word> generators_k;

  BigCount rank_h;
  BigCount rank_k;
  bool factor_ranks_exact = false;

  std::size_t product_states = 0;
  std::size_t product_transitions = 0;
  std::size_t trim_states = 0;
  std::size_t trim_transitions = 0;
  std::size_t product_bpi_count = 0;

  std::optional<BigCount> rank_intersection;
  bool intersection_exact = false;

  std::optional<BigCount> correction;  // S
  std::optional<BigCount> bound;       // S + reduced(H) * reduced(K)
  std::optional<bool> sufficient;
  std::optional<bool> hnp;

  BigCount reduced_h() const { return reduced_rank(rank_h); }
  BigCount reduced_k() const { return reduced_rank(rank_k); }
};

// Full pipeline: build both SFAs, form and trim the product, classify, and
// when the trimmed product is a valid SFA compute its rank, the correction
// term, the bound, and the sufficient condition.
HnpReport analyze(const GeneratorSet& xh, const GeneratorSet& xk,
                  std::size_t cap = kDefaultBudget);

// S + reduced(rank_h) * reduced(rank_k), evaluated on the trimmed product's
// profile.
BigCount ghn_bound(const KappaProfile& p, const BigCount& rank_h,
                   const BigCount& rank_k);

// True iff (a) no off-root path connects two distinct non-first branch
// points, and (b) each non-first branch point has exactly one off-root
// simple path to the first one. Implies a vanishing correction term.
bool sufficient_condition(const Bpr& b, const TopologicalOrder& ord);

// Case bucketing of the trimmed product against the two factor SFAs.
Classification case_classify(const Automaton& product_trim, const Sfa& ah,
                             const Sfa& ak);

// reduced(H cap K) <= reduced(H) * reduced(K), from the report's ranks.
// Throws UndefinedRank when the pipeline was inapplicable.
bool verify_hnp_direct(const HnpReport& report);

}  // namespace sfa
