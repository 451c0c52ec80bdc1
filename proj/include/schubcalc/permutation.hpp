#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace schubcalc {

/// A permutation of the positive integers fixing all but finitely many points.
///
/// Stored in one-line notation over positions 1..n with trailing fixed points
/// trimmed, so two permutations compare equal exactly when they agree as maps.
/// The identity has an empty window.
class Permutation {
 public:
  Permutation() = default;

  /// Builds from a one-line window; throws InputError unless the window is a
  /// rearrangement of {1, ..., n}.
  explicit Permutation(std::vector<int> window);

  static Permutation identity() { return {}; }
  /// The simple transposition s_k = (k, k+1).
  static Permutation simple(int k);
  /// Parses "3,1,2". Rejects repeated, missing or non-positive entries.
  static Permutation parse(std::string_view text);

  /// Image of the point i >= 1.
  int operator()(int i) const {
    return i <= static_cast<int>(window_.size()) ? window_[i - 1] : i;
  }

  /// Largest non-fixed point, or 0 for the identity.
  int support() const { return static_cast<int>(window_.size()); }
  bool is_identity() const { return window_.empty(); }
  std::span<const int> window() const { return window_; }
  /// Window padded with fixed points to length n (n >= support()).
  std::vector<int> window(int n) const;

  Permutation inverse() const;

  /// Right multiplication by the transposition (a, b): swaps the values at
  /// positions a and b.
  Permutation swap_positions(int a, int b) const;

  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& lhs, const Permutation& rhs) {
    return lhs.window_ <=> rhs.window_;
  }

 private:
  void trim();

  std::vector<int> window_;
};

struct Transposition {
  int a = 1;
  int b = 2;

  friend auto operator<=>(const Transposition&, const Transposition&) = default;
};

/// A Bruhat cover source -> target = source(a, b). Label d is admissible
/// exactly when a <= d < b.
struct CoverEdge {
  Permutation source;
  Permutation target;
  Transposition t;

  int label_lo() const { return t.a; }
  int label_hi() const { return t.b - 1; }
  bool admits(int label) const { return t.a <= label && label < t.b; }

  friend bool operator==(const CoverEdge&, const CoverEdge&) = default;
};

/// r(i) = p(q(i)).
Permutation compose(const Permutation& p, const Permutation& q);

/// Number of inversions.
int length(const Permutation& w);

/// All reduced words (a_1, ..., a_p) with w = s_{a_1} ... s_{a_p}, in
/// lexicographic order.
std::vector<std::vector<int>> reduced_words(const Permutation& w);

/// Replays a word from the identity by successive right multiplication.
Permutation from_word(std::span<const int> word);

/// All covers of u whose target lies in S_n, sorted by (a, b).
std::vector<CoverEdge> bruhat_covers(const Permutation& u, int n);

/// The covers with a <= k < b.
std::vector<CoverEdge> k_bruhat_covers(const Permutation& u, int k, int n);

/// Bruhat comparison via the rank-matrix criterion.
bool bruhat_leq(const Permutation& u, const Permutation& w, int n);

/// Every element of S_n, lexicographic by window.
std::vector<Permutation> all_permutations(int n);

/// Elements of S_n of the given length, lexicographic by window.
std::vector<Permutation> permutations_of_length(int len, int n);

/// The transposition (a, b) with target = source(a, b), if one exists.
std::optional<Transposition> transposition_between(const Permutation& source,
                                                   const Permutation& target);

}  // namespace schubcalc

template <>
struct std::hash<schubcalc::Permutation> {
  std::size_t operator()(const schubcalc::Permutation& p) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (int v : p.window()) h = (h ^ static_cast<std::size_t>(v)) * 1099511628211ULL;
    return h;
  }
};
