#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace schubcalc {

using Rational = mpq_class;
using Integer = mpz_class;

Integer factorial(unsigned n);

/// Exponents of a monomial, indexed from variable 1, trailing zeros trimmed.
class ExponentVector {
 public:
  ExponentVector() = default;
  explicit ExponentVector(std::vector<unsigned> exponents);

  /// The monomial of a single variable x_index^power.
  static ExponentVector variable(int index, unsigned power = 1);

  /// Exponent of variable i (1-based); zero beyond the stored range.
  unsigned operator[](int i) const {
    return i >= 1 && i <= size() ? exps_[i - 1] : 0u;
  }
  int size() const { return static_cast<int>(exps_.size()); }
  std::span<const unsigned> exponents() const { return exps_; }

  unsigned degree() const;
  /// alpha! = prod alpha_i!
  Integer factorial() const;

  ExponentVector operator+(const ExponentVector& other) const;

  friend bool operator==(const ExponentVector&, const ExponentVector&) = default;
  friend auto operator<=>(const ExponentVector&, const ExponentVector&) = default;

 private:
  void trim();

  std::vector<unsigned> exps_;
};

/// Graded lexicographic: higher total degree first, then lexicographically
/// larger exponent vectors first. This is the display order.
struct GradedLexGreater {
  bool operator()(const ExponentVector& lhs, const ExponentVector& rhs) const;
};

enum class Alphabet { x, y };

char alphabet_letter(Alphabet a);

/// Sparse multivariate polynomial with exact rational coefficients in one of
/// two alphabets (x_1, x_2, ... or y_1, y_2, ...). Zero coefficients are never
/// stored, so equality is term-map equality.
class Polynomial {
 public:
  using TermMap = std::map<ExponentVector, Rational, GradedLexGreater>;

  Polynomial() = default;
  explicit Polynomial(Alphabet alphabet) : alphabet_(alphabet) {}

  static Polynomial constant(const Rational& c, Alphabet alphabet = Alphabet::x);
  static Polynomial monomial(const ExponentVector& e, const Rational& c = 1,
                             Alphabet alphabet = Alphabet::x);
  static Polynomial variable(int index, Alphabet alphabet = Alphabet::x);

  Alphabet alphabet() const { return alphabet_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Coefficient of x^e (zero if absent).
  Rational coefficient(const ExponentVector& e) const;

  /// Largest total degree, or -1 for the zero polynomial.
  int degree() const;
  bool is_homogeneous() const;
  /// Largest variable index appearing.
  int max_variable() const;

  /// Adds c * x^e in place.
  void add_term(const ExponentVector& e, const Rational& c);

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
  friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
  friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);
  friend Polynomial operator*(Polynomial lhs, const Rational& c) { return lhs *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial rhs) { return rhs *= c; }
  Polynomial operator-() const { return *this * Rational(-1); }

  Polynomial pow(unsigned n) const;

  /// Same terms, relabeled to another alphabet.
  Polynomial with_alphabet(Alphabet alphabet) const;

  /// Renders terms in graded-lex order, e.g. "1/2*x1^2*x2 - x1*x3 + 3".
  std::string to_string() const;
  /// Accepts exactly the grammar produced by to_string (whitespace is free).
  static Polynomial parse(std::string_view text);

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void check_alphabet(const Polynomial& other) const;

  Alphabet alphabet_ = Alphabet::x;
  TermMap terms_;
};

Polynomial scale(const Polynomial& f, const Rational& c);

/// <f, g> = f(d/dx_1, d/dx_2, ...) g evaluated at zero; on monomials
/// <x^a, x^b> = [a == b] a!.
Rational inner_product(const Polynomial& f, const Polynomial& g);

/// Sets every variable of index > n to zero.
Polynomial project(const Polynomial& f, int n);

/// Term-wise x^a -> (p!/a!) x^a with p the term's total degree.
Polynomial bar_transform(const Polynomial& f);

/// X_d = x_d - x_{d+1} (or Y_d in the y alphabet).
Polynomial x_difference(int d, Alphabet alphabet = Alphabet::x);

/// Renders a single coefficient-monomial pair, used by the bivariate printer.
std::string render_monomial(const ExponentVector& e, Alphabet alphabet);

}  // namespace schubcalc
