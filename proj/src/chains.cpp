#include "schubcalc/chains.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "schubcalc/errors.hpp"
#include "schubcalc/schubert.hpp"

namespace schubcalc {

namespace {

Polynomial edge_weight(const CoverEdge& e) {
  return Polynomial::variable(e.t.a) - Polynomial::variable(e.t.b);
}

void check_support(const Permutation& u, const Permutation& w, int n) {
  if (n < u.support() || n < w.support()) {
    throw InputError("support bound " + std::to_string(n) + " does not contain " +
                     u.to_string() + " and " + w.to_string());
  }
}

// Depth-first walk over saturated chains from u to w, pruned by Bruhat
// comparison against w. The filter returns the labels to branch on for an
// edge at a given depth (empty prunes the edge); the visitor sees every
// complete chain.
class ChainWalker {
 public:
  using LabelFilter = std::function<std::vector<int>(const CoverEdge&, std::size_t depth)>;
  using Visitor = std::function<void(const std::vector<LabeledStep>&)>;

  ChainWalker(const Permutation& w, int n, LabelFilter filter, Visitor visit)
      : w_(w), n_(n), target_len_(length(w)), filter_(std::move(filter)), visit_(std::move(visit)) {}

  void run(const Permutation& u) {
    if (length(u) > target_len_ || !bruhat_leq(u, w_, n_)) return;
    walk(u, length(u));
  }

 private:
  void walk(const Permutation& v, int len) {
    if (len == target_len_) {
      if (v == w_) visit_(path_);
      return;
    }
    for (const auto& e : bruhat_covers(v, n_)) {
      if (!bruhat_leq(e.target, w_, n_)) continue;
      for (int label : filter_(e, path_.size())) {
        path_.push_back({e, label});
        walk(e.target, len + 1);
        path_.pop_back();
      }
    }
  }

  const Permutation& w_;
  int n_;
  int target_len_;
  LabelFilter filter_;
  Visitor visit_;
  std::vector<LabeledStep> path_;
};

std::vector<int> all_labels(const CoverEdge& e) {
  std::vector<int> out;
  for (int d = e.label_lo(); d <= e.label_hi(); ++d) out.push_back(d);
  return out;
}

}  // namespace

Polynomial Chain::weight() const {
  Polynomial p = Polynomial::constant(1);
  for (const auto& e : edges) p = p * edge_weight(e);
  return p;
}

std::vector<int> LabeledChain::labels() const {
  std::vector<int> d;
  d.reserve(steps.size());
  for (const auto& s : steps) d.push_back(s.label);
  return d;
}

Polynomial LabeledChain::weight() const {
  Polynomial p = Polynomial::constant(1);
  for (const auto& s : steps) p = p * edge_weight(s.edge);
  return p;
}

Polynomial LabeledChain::label_weight() const {
  Polynomial p = Polynomial::constant(1);
  for (const auto& s : steps) p = p * x_difference(s.label);
  return p;
}

bool LabeledChain::is_well_formed() const {
  Permutation current = start;
  for (const auto& s : steps) {
    const auto& e = s.edge;
    if (e.source != current) return false;
    if (e.t.a < 1 || e.t.a >= e.t.b) return false;
    if (e.target != e.source.swap_positions(e.t.a, e.t.b)) return false;
    if (length(e.target) != length(e.source) + 1) return false;
    if (!e.admits(s.label)) return false;
    current = e.target;
  }
  return true;
}

TotalOrder::TotalOrder(std::vector<int> preferred) : preferred_(std::move(preferred)) {
  std::set<int> seen;
  for (int v : preferred_) {
    if (v < 1) throw InputError("order entries must be positive");
    if (!seen.insert(v).second) throw InputError("order entries must be distinct");
  }
}

std::pair<int, int> TotalOrder::key(int value) const {
  auto it = std::find(preferred_.begin(), preferred_.end(), value);
  if (it != preferred_.end()) return {0, static_cast<int>(it - preferred_.begin())};
  return {1, value};
}

bool TotalOrder::precedes(int a, int b) const { return key(a) < key(b); }

bool TotalOrder::is_weakly_increasing(std::span<const int> labels) const {
  for (std::size_t i = 0; i + 1 < labels.size(); ++i) {
    if (precedes(labels[i + 1], labels[i])) return false;
  }
  return true;
}

std::vector<Chain> enumerate_chains(const Permutation& u, const Permutation& w, int n) {
  check_support(u, w, n);
  std::vector<Chain> out;
  ChainWalker walker(
      w, n, [](const CoverEdge& e, std::size_t) { return std::vector<int>{e.label_lo()}; },
      [&](const std::vector<LabeledStep>& path) {
        Chain c{u, {}};
        for (const auto& s : path) c.edges.push_back(s.edge);
        out.push_back(std::move(c));
      });
  walker.run(u);
  return out;
}

std::vector<LabeledChain> enumerate_labeled_chains(const Permutation& u, const Permutation& w,
                                                   std::span<const int> labels, int n) {
  check_support(u, w, n);
  std::vector<LabeledChain> out;
  if (static_cast<int>(labels.size()) != length(w) - length(u)) return out;
  ChainWalker walker(
      w, n,
      [labels](const CoverEdge& e, std::size_t depth) {
        return e.admits(labels[depth]) ? std::vector<int>{labels[depth]} : std::vector<int>{};
      },
      [&](const std::vector<LabeledStep>& path) { out.push_back({u, path}); });
  walker.run(u);
  return out;
}

std::vector<LabeledChain> all_labeled_chains(const Permutation& u, const Permutation& w, int n) {
  check_support(u, w, n);
  std::vector<LabeledChain> out;
  ChainWalker walker(
      w, n, [](const CoverEdge& e, std::size_t) { return all_labels(e); },
      [&](const std::vector<LabeledStep>& path) { out.push_back({u, path}); });
  walker.run(u);
  return out;
}

std::uint64_t count_chains(const Permutation& u, const Permutation& w, int n) {
  check_support(u, w, n);
  std::uint64_t count = 0;
  ChainWalker walker(
      w, n, [](const CoverEdge& e, std::size_t) { return std::vector<int>{e.label_lo()}; },
      [&](const std::vector<LabeledStep>&) { ++count; });
  walker.run(u);
  return count;
}

std::uint64_t count_labeled_chains(const Permutation& u, const Permutation& w,
                                   std::span<const int> labels, int n) {
  check_support(u, w, n);
  if (static_cast<int>(labels.size()) != length(w) - length(u)) return 0;
  std::uint64_t count = 0;
  ChainWalker walker(
      w, n,
      [labels](const CoverEdge& e, std::size_t depth) {
        return e.admits(labels[depth]) ? std::vector<int>{labels[depth]} : std::vector<int>{};
      },
      [&](const std::vector<LabeledStep>&) { ++count; });
  walker.run(u);
  return count;
}

std::uint64_t count_all_labeled_chains(const Permutation& u, const Permutation& w, int n) {
  std::uint64_t total = 0;
  for (const auto& c : enumerate_chains(u, w, n)) {
    std::uint64_t choices = 1;
    for (const auto& e : c.edges) choices *= static_cast<std::uint64_t>(e.t.b - e.t.a);
    total += choices;
  }
  return total;
}

Polynomial dual_schubert(const Permutation& u, const Permutation& w, int n) {
  check_support(u, w, n);
  const int p = length(w) - length(u);
  if (p < 0 || !bruhat_leq(u, w, n)) return Polynomial{};
  // Sum over chains by levels: each element carries the total weight of the
  // chains from u that end at it.
  std::map<Permutation, Polynomial> level{{u, Polynomial::constant(1)}};
  for (int step = 0; step < p; ++step) {
    std::map<Permutation, Polynomial> next;
    for (const auto& [v, f] : level) {
      for (const auto& e : bruhat_covers(v, n)) {
        if (!bruhat_leq(e.target, w, n)) continue;
        next[e.target] += f * (Polynomial::variable(e.t.a) - Polynomial::variable(e.t.b));
      }
    }
    level = std::move(next);
  }
  return level[w] * Rational(Integer(1), factorial(static_cast<unsigned>(p)));
}

Polynomial dual_schubert_labeled(const Permutation& u, const Permutation& w, int n) {
  Polynomial sum;
  for (const auto& c : all_labeled_chains(u, w, n)) sum += c.label_weight();
  const int p = length(w) - length(u);
  if (p < 0) return Polynomial{};
  return sum * Rational(Integer(1), factorial(static_cast<unsigned>(p)));
}

std::vector<LabeledChain> increasing_chains(const Permutation& u, const Permutation& w,
                                            const TotalOrder& order, int n) {
  auto chains = all_labeled_chains(u, w, n);
  std::erase_if(chains, [&order](const LabeledChain& c) {
    return !order.is_weakly_increasing(c.labels());
  });
  return chains;
}

std::map<Permutation, std::uint64_t> skew_expand(const Permutation& u, const Permutation& w,
                                                 int n) {
  check_support(u, w, n);
  std::map<Permutation, std::uint64_t> coeffs;
  const int p = length(w) - length(u);
  if (p >= 0) {
    for (const auto& v : permutations_of_length(p, n)) {
      if (!bruhat_leq(v, w, n)) continue;
      if (auto c = lr_coefficient(u, v, w); c != 0) coeffs.emplace(v, c);
    }
  }
  Polynomial reconstructed;
  for (const auto& [v, c] : coeffs) reconstructed += dual_schubert(Permutation{}, v, n) * Rational(c);
  if (reconstructed != dual_schubert(u, w, n)) {
    throw InconsistencyError("skew expansion of D_{" + u.to_string() + "," + w.to_string() +
                             "} does not reconstruct");
  }
  return coeffs;
}

ChainSymmetryReport verify_chain_symmetry(const Permutation& u, const Permutation& w,
                                          std::span<const int> labels, int n) {
  ChainSymmetryReport r{u, w, {labels.begin(), labels.end()}, n, skew_expand(u, w, n)};
  r.labeled_lhs = count_labeled_chains(u, w, labels, n);
  r.any_label_lhs = count_all_labeled_chains(u, w, n);
  const Permutation id;
  for (const auto& [v, c] : r.coefficients) {
    r.labeled_rhs += c * count_labeled_chains(id, v, labels, n);
    r.any_label_rhs += c * count_all_labeled_chains(id, v, n);
  }
  return r;
}

bool LabelPermutationReport::pass() const {
  return std::all_of(counts.begin(), counts.end(),
                     [this](const auto& entry) { return entry.second == counts.front().second; });
}

LabelPermutationReport verify_label_permutation(const Permutation& u, const Permutation& w,
                                                std::span<const int> labels, int n) {
  LabelPermutationReport r{u, w, {labels.begin(), labels.end()}, n, {}};
  std::vector<int> d = r.labels;
  std::sort(d.begin(), d.end());
  do {
    r.counts.emplace_back(d, count_labeled_chains(u, w, d, n));
  } while (std::next_permutation(d.begin(), d.end()));
  return r;
}

Integer content_factorial(std::span<const int> labels) {
  std::map<int, unsigned> content;
  for (int d : labels) ++content[d];
  Integer r = 1;
  for (const auto& [value, mult] : content) r *= factorial(mult);
  return r;
}

IncreasingReport verify_increasing(const Permutation& u, const Permutation& w,
                                   const TotalOrder& order, int n) {
  IncreasingReport r;
  r.u = u;
  r.w = w;
  r.order = order;
  r.support = n;
  r.dual = dual_schubert(u, w, n);
  r.bar_dual = bar_transform(r.dual);
  for (const auto& c : increasing_chains(u, w, order, n)) {
    r.chain_sum += c.label_weight() * Rational(Integer(1), content_factorial(c.labels()));
  }
  for (const auto& [v, c] : skew_expand(u, w, n)) {
    r.lr_sum += bar_transform(dual_schubert(Permutation{}, v, n)) * Rational(c);
  }
  return r;
}

}  // namespace schubcalc
