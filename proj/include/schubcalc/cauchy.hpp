#pragma once

#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "schubcalc/chains.hpp"
#include "schubcalc/permutation.hpp"
#include "schubcalc/polynomial.hpp"
#include "schubcalc/schubert.hpp"

namespace schubcalc {

struct BiwordLetter {
  int index = 1;  // i_j, the x variable
  int label = 1;  // d_j, the Y variable

  friend auto operator<=>(const BiwordLetter&, const BiwordLetter&) = default;
};

/// A bounded biword (i_1 ... i_n ; d_1 ... d_n) with i_j <= d_j. Indexes the
/// monomial x_{i_1} Y_{d_1} ... x_{i_n} Y_{d_n} in the expansion of
/// (x_1 y_1 + x_2 y_2 + ...)^n with y_i = Y_i + Y_{i+1} + ...
struct BoundedBiword {
  std::vector<BiwordLetter> letters;

  bool is_bounded() const;
  std::vector<int> indices() const;
  std::vector<int> labels() const;
  int max_label() const;

  friend auto operator<=>(const BoundedBiword&, const BoundedBiword&) = default;
  friend bool operator==(const BoundedBiword&, const BoundedBiword&) = default;
};

/// All biwords of length n with labels <= m; there are (m(m+1)/2)^n of them.
std::vector<BoundedBiword> enumerate_bounded_biwords(int n, int m);

/// (record, chain) pair produced by insertion. The record lies in RC(target),
/// the chain runs from the identity to target.
struct InsertionResult {
  CompatibleSequence record;
  LabeledChain chain;
  Permutation target;

  friend bool operator==(const InsertionResult&, const InsertionResult&) = default;
};

/// Support bound that contains every intermediate cover: max label + length + 1.
int insertion_support_bound(const BoundedBiword& b);

/// Inserts the letters one at a time. Letter (i, d) applies the Monk
/// bijection for k = d to (i, current record), producing a d-Bruhat cover of
/// the current permutation labeled d together with the new record.
InsertionResult insert(const BoundedBiword& b, int n);

/// Undoes insert. Throws InputError when the pair is not in the image.
BoundedBiword inverse_insert(const InsertionResult& r, int n);

/// Polynomial in x and y, keyed by paired exponent vectors.
class BivariatePolynomial {
 public:
  using Key = std::pair<ExponentVector, ExponentVector>;
  using TermMap = std::map<Key, Rational>;

  static BivariatePolynomial constant(const Rational& c);
  /// f(x) g(y); the alphabets of f and g are ignored.
  static BivariatePolynomial product(const Polynomial& f, const Polynomial& g);

  const TermMap& terms() const { return terms_; }
  void add_term(const Key& key, const Rational& c);

  BivariatePolynomial& operator+=(const BivariatePolynomial& other);
  friend BivariatePolynomial operator*(const BivariatePolynomial& a, const BivariatePolynomial& b);
  BivariatePolynomial& operator*=(const Rational& c);

  std::string to_string() const;

  friend bool operator==(const BivariatePolynomial&, const BivariatePolynomial&) = default;

 private:
  TermMap terms_;
};

struct CauchyReport {
  int m = 1;
  int p = 0;
  int support = 0;
  BivariatePolynomial lhs;  // (x_1 y_1 + ... + x_m y_m)^p / p!
  BivariatePolynomial rhs;  // sum_w P_m S_w(x) P_m D_w(y)
  std::vector<Permutation> contributing;

  bool pass() const { return lhs == rhs; }
};

/// Degree-p part of the Cauchy identity in m variables. The right side is
/// summed over length-p permutations in S_{m+p+1} and recomputed in
/// S_{m+p+2}; a change throws InconsistencyError.
CauchyReport verify_cauchy(int m, int p);

/// <S_u, D_w>.
Rational duality_pairing(const Permutation& u, const Permutation& w);

struct DualityReport {
  int n = 1;
  std::size_t pairs = 0;
  std::vector<std::tuple<Permutation, Permutation, Rational>> failures;

  bool pass() const { return failures.empty(); }
};

/// Checks <S_u, D_w> = [u == w] for all u, w in S_n.
DualityReport verify_duality(int n);

}  // namespace schubcalc
