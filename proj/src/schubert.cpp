#include "schubcalc/schubert.hpp"

#include <algorithm>
#include <tuple>

#include "schubcalc/chains.hpp"
#include "schubcalc/errors.hpp"

namespace schubcalc {

ExponentVector CompatibleSequence::weight() const {
  ExponentVector e;
  for (int i : top) e = e + ExponentVector::variable(i);
  return e;
}

bool CompatibleSequence::is_compatible() const {
  if (top.size() != bottom.size()) return false;
  for (std::size_t j = 0; j < top.size(); ++j) {
    if (top[j] < 1 || top[j] > bottom[j]) return false;
    if (j + 1 < top.size()) {
      if (top[j] > top[j + 1]) return false;
      if (bottom[j] < bottom[j + 1] && top[j] == top[j + 1]) return false;
    }
  }
  return true;
}

namespace {

void extend_top(const std::vector<int>& word, std::vector<int>& top,
                std::vector<CompatibleSequence>& out) {
  const std::size_t j = top.size();
  if (j == word.size()) {
    out.push_back({top, word});
    return;
  }
  int lo = 1;
  if (j > 0) lo = word[j - 1] < word[j] ? top[j - 1] + 1 : top[j - 1];
  for (int i = lo; i <= word[j]; ++i) {
    top.push_back(i);
    extend_top(word, top, out);
    top.pop_back();
  }
}

}  // namespace

std::vector<CompatibleSequence> compatible_sequences(const Permutation& w) {
  std::vector<CompatibleSequence> out;
  for (const auto& word : reduced_words(w)) {
    std::vector<int> top;
    extend_top(word, top, out);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Polynomial schubert(const Permutation& w) {
  Polynomial p;
  for (const auto& c : compatible_sequences(w)) p.add_term(c.weight(), 1);
  return p;
}

Polynomial divided_difference(const Polynomial& f, int i) {
  if (i < 1) throw InputError("divided difference index must be positive");
  Polynomial out(f.alphabet());
  for (const auto& [e, c] : f.terms()) {
    const unsigned p = e[i];
    const unsigned q = e[i + 1];
    if (p == q) continue;
    // x_i^p x_{i+1}^q - x_i^q x_{i+1}^p over x_i - x_{i+1}, for p > q, is
    // (x_i x_{i+1})^q * sum_{t=0}^{p-q-1} x_i^t x_{i+1}^{p-q-1-t}; the sign
    // flips when p < q.
    const unsigned hi = std::max(p, q);
    const unsigned lo = std::min(p, q);
    const Rational sign = p > q ? 1 : -1;
    std::vector<unsigned> base(std::max(e.size(), i + 1), 0u);
    for (int v = 1; v <= e.size(); ++v) base[v - 1] = e[v];
    for (unsigned t = 0; t < hi - lo; ++t) {
      base[i - 1] = lo + t;
      base[i] = lo + (hi - lo - 1 - t);
      out.add_term(ExponentVector(base), sign * c);
    }
  }
  return out;
}

Polynomial schubert_oracle(const Permutation& w) {
  const int n = std::max(w.support(), 1);
  std::vector<unsigned> staircase(n, 0u);
  for (int i = 1; i < n; ++i) staircase[i - 1] = static_cast<unsigned>(n - i);
  // Walk up from w to w0 by ascents, then come back down with divided
  // differences: S_{v} = d_i S_{v s_i} whenever v(i) < v(i+1).
  std::vector<int> ascents;
  Permutation v = w;
  for (bool moved = true; moved;) {
    moved = false;
    for (int i = 1; i < n; ++i) {
      if (v(i) < v(i + 1)) {
        ascents.push_back(i);
        v = v.swap_positions(i, i + 1);
        moved = true;
        break;
      }
    }
  }
  Polynomial f = Polynomial::monomial(ExponentVector(std::move(staircase)));
  for (auto it = ascents.rbegin(); it != ascents.rend(); ++it) f = divided_difference(f, *it);
  return f;
}

int monk_support_bound(int k, const Permutation& v) { return std::max(v.support(), k) + 1; }

std::vector<Permutation> monk_expand(int k, const Permutation& v, int n) {
  if (k < 1) throw InputError("Monk index must be positive");
  if (n < monk_support_bound(k, v)) {
    throw InputError("support bound " + std::to_string(n) +
                     " cannot contain all k-Bruhat covers; need at least " +
                     std::to_string(monk_support_bound(k, v)));
  }
  std::vector<Permutation> out;
  for (auto& e : k_bruhat_covers(v, k, n)) out.push_back(std::move(e.target));
  std::sort(out.begin(), out.end());
  return out;
}

Multiset iterated_monk(std::span<const int> labels, const Permutation& u, int n) {
  Multiset current{{u, 1}};
  for (int k : labels) {
    Multiset next;
    for (const auto& [v, mult] : current) {
      for (auto& w : monk_expand(k, v, n)) next[std::move(w)] += mult;
    }
    current = std::move(next);
  }
  return current;
}

const MonkPair* MonkMatching::forward(int j, const CompatibleSequence& source) const {
  for (const auto& p : pairs) {
    if (p.j == j && p.source == source) return &p;
  }
  return nullptr;
}

const MonkPair* MonkMatching::backward(const Permutation& target,
                                       const CompatibleSequence& image) const {
  for (const auto& p : pairs) {
    if (p.target == target && p.image == image) return &p;
  }
  return nullptr;
}

MonkMatching monk_match(int k, const Permutation& v, int n) {
  const auto targets = monk_expand(k, v, n);

  using Left = std::pair<int, CompatibleSequence>;
  using Right = std::pair<Permutation, CompatibleSequence>;
  std::map<ExponentVector, std::vector<Left>> left;
  std::map<ExponentVector, std::vector<Right>> right;

  const auto rc_v = compatible_sequences(v);
  for (int j = 1; j <= k; ++j) {
    for (const auto& c : rc_v) {
      left[c.weight() + ExponentVector::variable(j)].emplace_back(j, c);
    }
  }
  for (const auto& w : targets) {
    for (auto& c : compatible_sequences(w)) right[c.weight()].emplace_back(w, std::move(c));
  }

  if (left.size() != right.size()) {
    throw InconsistencyError("Monk weight classes differ for k=" + std::to_string(k) +
                             ", v=" + v.to_string());
  }
  MonkMatching m{k, v, {}};
  for (auto& [weight, lhs] : left) {
    auto it = right.find(weight);
    if (it == right.end() || it->second.size() != lhs.size()) {
      throw InconsistencyError("Monk weight class size mismatch for k=" + std::to_string(k) +
                               ", v=" + v.to_string());
    }
    auto& rhs = it->second;
    std::sort(lhs.begin(), lhs.end());
    std::sort(rhs.begin(), rhs.end());
    for (std::size_t i = 0; i < lhs.size(); ++i) {
      m.pairs.push_back({lhs[i].first, lhs[i].second, rhs[i].first, rhs[i].second});
    }
  }
  std::sort(m.pairs.begin(), m.pairs.end(), [](const MonkPair& a, const MonkPair& b) {
    return std::tie(a.j, a.source) < std::tie(b.j, b.source);
  });
  return m;
}

std::uint64_t lr_coefficient(const Permutation& u, const Permutation& v, const Permutation& w) {
  if (length(u) + length(v) != length(w)) return 0;
  const Rational c =
      inner_product(schubert(u) * schubert(v), dual_schubert(Permutation{}, w, std::max(w.support(), 1)));
  if (c.get_den() != 1 || c < 0) {
    throw InconsistencyError("LR coefficient for (" + u.to_string() + ", " + v.to_string() +
                             ", " + w.to_string() + ") is " + c.get_str());
  }
  return c.get_num().get_ui();
}

}  // namespace schubcalc
