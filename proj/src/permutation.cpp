#include "schubcalc/permutation.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <set>

#include "schubcalc/errors.hpp"

namespace schubcalc {

Permutation::Permutation(std::vector<int> window) : window_(std::move(window)) {
  const int n = static_cast<int>(window_.size());
  std::vector<bool> seen(n + 1, false);
  for (int v : window_) {
    if (v < 1 || v > n || seen[v]) {
      throw InputError("window is not a permutation of 1.." + std::to_string(n));
    }
    seen[v] = true;
  }
  trim();
}

Permutation Permutation::simple(int k) {
  if (k < 1) throw InputError("simple transposition index must be positive");
  std::vector<int> w(k + 1);
  std::iota(w.begin(), w.end(), 1);
  std::swap(w[k - 1], w[k]);
  return Permutation(std::move(w));
}

Permutation Permutation::parse(std::string_view text) {
  std::vector<int> w;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view field = text.substr(pos, comma - pos);
    while (!field.empty() && field.front() == ' ') field.remove_prefix(1);
    while (!field.empty() && field.back() == ' ') field.remove_suffix(1);
    int value = 0;
    auto [end, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (field.empty() || ec != std::errc() || end != field.data() + field.size()) {
      throw InputError("malformed permutation entry '" + std::string(field) + "'");
    }
    if (value < 1) throw InputError("permutation entries must be positive");
    w.push_back(value);
    pos = comma + 1;
  }
  return Permutation(std::move(w));
}

std::vector<int> Permutation::window(int n) const {
  std::vector<int> w(std::max(n, support()));
  for (int i = 1; i <= static_cast<int>(w.size()); ++i) w[i - 1] = (*this)(i);
  return w;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(window_.size());
  for (std::size_t i = 0; i < window_.size(); ++i) inv[window_[i] - 1] = static_cast<int>(i) + 1;
  return Permutation(std::move(inv));
}

Permutation Permutation::swap_positions(int a, int b) const {
  if (a < 1 || b < 1) throw InputError("transposition positions must be positive");
  std::vector<int> w = window(std::max(a, b));
  std::swap(w[a - 1], w[b - 1]);
  Permutation r;
  r.window_ = std::move(w);
  r.trim();
  return r;
}

std::string Permutation::to_string() const {
  if (window_.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < window_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(window_[i]);
  }
  return s;
}

void Permutation::trim() {
  while (!window_.empty() && window_.back() == static_cast<int>(window_.size())) {
    window_.pop_back();
  }
}

Permutation compose(const Permutation& p, const Permutation& q) {
  const int n = std::max(p.support(), q.support());
  std::vector<int> r(n);
  for (int i = 1; i <= n; ++i) r[i - 1] = p(q(i));
  return Permutation(std::move(r));
}

int length(const Permutation& w) {
  auto win = w.window();
  int inv = 0;
  for (std::size_t i = 0; i < win.size(); ++i) {
    for (std::size_t j = i + 1; j < win.size(); ++j) inv += win[i] > win[j];
  }
  return inv;
}

namespace {

// Peels right descents: every reduced word of w ends in some descent i, and
// the rest is a reduced word of w s_i.
void collect_words(const Permutation& w, std::vector<int>& suffix,
                   std::vector<std::vector<int>>& out) {
  if (w.is_identity()) {
    out.emplace_back(suffix.rbegin(), suffix.rend());
    return;
  }
  for (int i = 1; i < w.support(); ++i) {
    if (w(i) > w(i + 1)) {
      suffix.push_back(i);
      collect_words(w.swap_positions(i, i + 1), suffix, out);
      suffix.pop_back();
    }
  }
}

}  // namespace

std::vector<std::vector<int>> reduced_words(const Permutation& w) {
  std::vector<std::vector<int>> out;
  std::vector<int> suffix;
  collect_words(w, suffix, out);
  std::sort(out.begin(), out.end());
  return out;
}

Permutation from_word(std::span<const int> word) {
  Permutation w;
  for (int a : word) w = w.swap_positions(a, a + 1);
  return w;
}

std::vector<CoverEdge> bruhat_covers(const Permutation& u, int n) {
  if (n < u.support()) {
    throw InputError("support bound " + std::to_string(n) + " smaller than support of " +
                     u.to_string());
  }
  std::vector<CoverEdge> edges;
  for (int a = 1; a <= n; ++a) {
    for (int b = a + 1; b <= n; ++b) {
      const int lo = u(a);
      const int hi = u(b);
      if (lo > hi) continue;
      bool blocked = false;
      for (int c = a + 1; c < b && !blocked; ++c) blocked = lo < u(c) && u(c) < hi;
      if (!blocked) edges.push_back({u, u.swap_positions(a, b), {a, b}});
    }
  }
  return edges;
}

std::vector<CoverEdge> k_bruhat_covers(const Permutation& u, int k, int n) {
  auto edges = bruhat_covers(u, n);
  std::erase_if(edges, [k](const CoverEdge& e) { return !(e.t.a <= k && k < e.t.b); });
  return edges;
}

bool bruhat_leq(const Permutation& u, const Permutation& w, int n) {
  if (n < u.support() || n < w.support()) {
    throw InputError("support bound too small for Bruhat comparison");
  }
  // u <= w iff #{j <= i : u(j) >= k} <= #{j <= i : w(j) >= k} for all i, k.
  for (int k = 1; k <= n; ++k) {
    int cu = 0;
    int cw = 0;
    for (int i = 1; i <= n; ++i) {
      cu += u(i) >= k;
      cw += w(i) >= k;
      if (cu > cw) return false;
    }
  }
  return true;
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> w(std::max(n, 0));
  std::iota(w.begin(), w.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

std::vector<Permutation> permutations_of_length(int len, int n) {
  std::set<Permutation> level{Permutation{}};
  for (int step = 0; step < len; ++step) {
    std::set<Permutation> next;
    for (const auto& v : level) {
      for (auto& e : bruhat_covers(v, n)) next.insert(std::move(e.target));
    }
    level = std::move(next);
  }
  // Trimmed-window order coincides with padded-window order.
  return {level.begin(), level.end()};
}

std::optional<Transposition> transposition_between(const Permutation& source,
                                                   const Permutation& target) {
  const int n = std::max(source.support(), target.support());
  std::vector<int> diff;
  for (int i = 1; i <= n; ++i) {
    if (source(i) != target(i)) diff.push_back(i);
  }
  if (diff.size() != 2) return std::nullopt;
  if (source(diff[0]) != target(diff[1]) || source(diff[1]) != target(diff[0])) {
    return std::nullopt;
  }
  return Transposition{diff[0], diff[1]};
}

}  // namespace schubcalc
