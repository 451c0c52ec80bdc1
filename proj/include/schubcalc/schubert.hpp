#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "schubcalc/permutation.hpp"
#include "schubcalc/polynomial.hpp"

namespace schubcalc {

/// A reduced compatible sequence: a reduced word `bottom` of some w together
/// with indices `top` such that
///   top is weakly increasing, top[j] <= bottom[j], and
///   top[j] < top[j+1] whenever bottom[j] < bottom[j+1].
/// Contributes the monomial x_{top[0]} ... x_{top[p-1]} to S_w.
struct CompatibleSequence {
  std::vector<int> top;
  std::vector<int> bottom;

  ExponentVector weight() const;
  bool is_compatible() const;

  friend auto operator<=>(const CompatibleSequence&, const CompatibleSequence&) = default;
  friend bool operator==(const CompatibleSequence&, const CompatibleSequence&) = default;
};

/// RC(w), sorted.
std::vector<CompatibleSequence> compatible_sequences(const Permutation& w);

/// S_w as the weight generating function of RC(w).
Polynomial schubert(const Permutation& w);

/// S_w by divided differences from x_1^{n-1} x_2^{n-2} ... x_{n-1}. Shares no
/// code with schubert().
Polynomial schubert_oracle(const Permutation& w);

/// (f - s_i f) / (x_i - x_{i+1}).
Polynomial divided_difference(const Polynomial& f, int i);

/// Smallest support bound that contains every k-Bruhat cover of v.
int monk_support_bound(int k, const Permutation& v);

/// Targets of the k-Bruhat covers of v, sorted. Throws InputError when n is
/// below monk_support_bound(k, v).
std::vector<Permutation> monk_expand(int k, const Permutation& v, int n);

/// Permutation -> number of labeled chains u ->^d w.
using Multiset = std::map<Permutation, std::uint64_t>;

/// Applies monk_expand with labels d[0], d[1], ... accumulating multiplicity.
Multiset iterated_monk(std::span<const int> labels, const Permutation& u, int n);

/// One pair of a Monk bijection: (j, source) in [k] x RC(v) is sent to
/// image in RC(target).
struct MonkPair {
  int j = 1;
  CompatibleSequence source;
  Permutation target;
  CompatibleSequence image;
};

/// Certificate of a weight-preserving bijection
///   [k] x RC(v) -> union over v ->^k w of RC(w)
/// with weight(image) = x_j * weight(source).
struct MonkMatching {
  int k = 1;
  Permutation v;
  std::vector<MonkPair> pairs;

  const MonkPair* forward(int j, const CompatibleSequence& source) const;
  const MonkPair* backward(const Permutation& target, const CompatibleSequence& image) const;
};

/// Canonical Monk bijection: both sides are grouped by weight, sorted
/// lexicographically ((j, sequence) on the left, (w, sequence) on the right)
/// and paired in order. Throws InconsistencyError if a weight class has
/// different sizes on the two sides.
MonkMatching monk_match(int k, const Permutation& v, int n);

/// c^w_{uv} = <S_u S_v, D_w>. Throws InconsistencyError unless the pairing is
/// a non-negative integer.
std::uint64_t lr_coefficient(const Permutation& u, const Permutation& v, const Permutation& w);

}  // namespace schubcalc
