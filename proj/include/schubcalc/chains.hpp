#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "schubcalc/permutation.hpp"
#include "schubcalc/polynomial.hpp"

namespace schubcalc {

/// Saturated chain u = v_0 -> v_1 -> ... -> v_p in Bruhat order.
struct Chain {
  Permutation start;
  std::vector<CoverEdge> edges;

  const Permutation& end() const { return edges.empty() ? start : edges.back().target; }
  /// prod (x_a - x_b) over the covers.
  Polynomial weight() const;
};

struct LabeledStep {
  CoverEdge edge;
  int label = 1;

  friend bool operator==(const LabeledStep&, const LabeledStep&) = default;
};

/// Chain of k-Bruhat covers u ->^{d_1} v_1 ->^{d_2} ... ->^{d_p} w.
struct LabeledChain {
  Permutation start;
  std::vector<LabeledStep> steps;

  const Permutation& end() const { return steps.empty() ? start : steps.back().edge.target; }
  std::vector<int> labels() const;
  /// prod (x_a - x_b) over the covers.
  Polynomial weight() const;
  /// prod X_{d_i}.
  Polynomial label_weight() const;
  /// Consecutive edges compose, each is a cover, each label is admissible.
  bool is_well_formed() const;

  friend bool operator==(const LabeledChain&, const LabeledChain&) = default;
};

/// A total order on the positive integers: the listed values come first in
/// the listed order, then everything else in the usual order.
class TotalOrder {
 public:
  TotalOrder() = default;
  /// Throws InputError on repeated or non-positive entries.
  explicit TotalOrder(std::vector<int> preferred);

  const std::vector<int>& preferred() const { return preferred_; }
  bool precedes(int a, int b) const;  // strict
  bool is_weakly_increasing(std::span<const int> labels) const;

 private:
  std::pair<int, int> key(int value) const;

  std::vector<int> preferred_;
};

/// Every saturated chain from u to w inside S_n; empty unless u <= w.
std::vector<Chain> enumerate_chains(const Permutation& u, const Permutation& w, int n);

/// Labeled chains from u to w whose label vector is exactly `labels`.
std::vector<LabeledChain> enumerate_labeled_chains(const Permutation& u, const Permutation& w,
                                                   std::span<const int> labels, int n);

/// Labeled chains from u to w with every admissible label choice.
std::vector<LabeledChain> all_labeled_chains(const Permutation& u, const Permutation& w, int n);

std::uint64_t count_chains(const Permutation& u, const Permutation& w, int n);
std::uint64_t count_labeled_chains(const Permutation& u, const Permutation& w,
                                   std::span<const int> labels, int n);
/// Labeled chains with any admissible labels: sum over chains of prod (b - a).
std::uint64_t count_all_labeled_chains(const Permutation& u, const Permutation& w, int n);

/// Skew dual Schubert polynomial (1/p!) sum over chains of prod mu(edge).
/// dual_schubert(identity, w, n) is D_w.
Polynomial dual_schubert(const Permutation& u, const Permutation& w, int n);

/// The same polynomial as (1/p!) sum over labeled chains of X_{d_1} ... X_{d_p}.
Polynomial dual_schubert_labeled(const Permutation& u, const Permutation& w, int n);

/// Labeled chains whose label sequence is weakly increasing under `order`.
std::vector<LabeledChain> increasing_chains(const Permutation& u, const Permutation& w,
                                            const TotalOrder& order, int n);

/// c^w_{uv} for every v with a nonzero coefficient. Checks that
/// sum_v c^w_{uv} D_v reproduces D_{u,w} and throws InconsistencyError if not.
std::map<Permutation, std::uint64_t> skew_expand(const Permutation& u, const Permutation& w,
                                                 int n);

struct ChainSymmetryReport {
  Permutation u;
  Permutation w;
  std::vector<int> labels;
  int support = 0;
  std::map<Permutation, std::uint64_t> coefficients;
  // |C_d(u,w)| against sum_v c^w_{uv} |C_d(1,v)|.
  std::uint64_t labeled_lhs = 0;
  std::uint64_t labeled_rhs = 0;
  // The same identity summed over every label vector: labeled chains with
  // any admissible labels, i.e. chains weighted by prod (b - a).
  std::uint64_t any_label_lhs = 0;
  std::uint64_t any_label_rhs = 0;

  bool pass() const { return labeled_lhs == labeled_rhs && any_label_lhs == any_label_rhs; }
};

ChainSymmetryReport verify_chain_symmetry(const Permutation& u, const Permutation& w,
                                          std::span<const int> labels, int n);

struct LabelPermutationReport {
  Permutation u;
  Permutation w;
  std::vector<int> labels;
  int support = 0;
  /// |C_{d'}(u,w)| for every distinct rearrangement d' of the labels.
  std::vector<std::pair<std::vector<int>, std::uint64_t>> counts;

  bool pass() const;
};

LabelPermutationReport verify_label_permutation(const Permutation& u, const Permutation& w,
                                                std::span<const int> labels, int n);

struct IncreasingReport {
  Permutation u;
  Permutation w;
  TotalOrder order;
  int support = 0;
  Polynomial dual;        // D_{u,w}
  Polynomial bar_dual;    // bar(D_{u,w})
  Polynomial chain_sum;   // sum over increasing chains of X_d / alpha(d)!
  Polynomial lr_sum;      // sum_v c^w_{uv} bar(D_v)

  bool bar_matches_chain_sum() const { return bar_dual == chain_sum; }
  bool bar_matches_lr_sum() const { return bar_dual == lr_sum; }
  bool chain_sum_matches_lr_sum() const { return chain_sum == lr_sum; }
  bool chain_sum_matches_dual() const { return chain_sum == dual; }
  bool pass() const {
    return bar_matches_chain_sum() && bar_matches_lr_sum() && chain_sum_matches_lr_sum();
  }
};

/// alpha(d)! = prod over values i of (#{j : d_j = i})!.
Integer content_factorial(std::span<const int> labels);

IncreasingReport verify_increasing(const Permutation& u, const Permutation& w,
                                   const TotalOrder& order, int n);

}  // namespace schubcalc
