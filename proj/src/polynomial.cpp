#include "schubcalc/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <optional>

#include "schubcalc/errors.hpp"

namespace schubcalc {

Integer factorial(unsigned n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

ExponentVector::ExponentVector(std::vector<unsigned> exponents) : exps_(std::move(exponents)) {
  trim();
}

ExponentVector ExponentVector::variable(int index, unsigned power) {
  if (index < 1) throw InputError("variable index must be positive");
  std::vector<unsigned> e(index, 0u);
  e[index - 1] = power;
  return ExponentVector(std::move(e));
}

unsigned ExponentVector::degree() const {
  return std::accumulate(exps_.begin(), exps_.end(), 0u);
}

Integer ExponentVector::factorial() const {
  Integer r = 1;
  for (unsigned e : exps_) r *= schubcalc::factorial(e);
  return r;
}

ExponentVector ExponentVector::operator+(const ExponentVector& other) const {
  std::vector<unsigned> e(std::max(exps_.size(), other.exps_.size()), 0u);
  for (std::size_t i = 0; i < exps_.size(); ++i) e[i] += exps_[i];
  for (std::size_t i = 0; i < other.exps_.size(); ++i) e[i] += other.exps_[i];
  return ExponentVector(std::move(e));
}

void ExponentVector::trim() {
  while (!exps_.empty() && exps_.back() == 0) exps_.pop_back();
}

bool GradedLexGreater::operator()(const ExponentVector& lhs, const ExponentVector& rhs) const {
  const unsigned dl = lhs.degree();
  const unsigned dr = rhs.degree();
  if (dl != dr) return dl > dr;
  const int n = std::max(lhs.size(), rhs.size());
  for (int i = 1; i <= n; ++i) {
    if (lhs[i] != rhs[i]) return lhs[i] > rhs[i];
  }
  return false;
}

char alphabet_letter(Alphabet a) { return a == Alphabet::x ? 'x' : 'y'; }

Polynomial Polynomial::constant(const Rational& c, Alphabet alphabet) {
  return monomial(ExponentVector{}, c, alphabet);
}

Polynomial Polynomial::monomial(const ExponentVector& e, const Rational& c, Alphabet alphabet) {
  Polynomial p(alphabet);
  p.add_term(e, c);
  return p;
}

Polynomial Polynomial::variable(int index, Alphabet alphabet) {
  return monomial(ExponentVector::variable(index), 1, alphabet);
}

Rational Polynomial::coefficient(const ExponentVector& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

int Polynomial::degree() const {
  // Graded order puts the largest degree first.
  return terms_.empty() ? -1 : static_cast<int>(terms_.begin()->first.degree());
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  const unsigned d = terms_.begin()->first.degree();
  return terms_.rbegin()->first.degree() == d;
}

int Polynomial::max_variable() const {
  int n = 0;
  for (const auto& [e, c] : terms_) n = std::max(n, e.size());
  return n;
}

void Polynomial::add_term(const ExponentVector& e, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void Polynomial::check_alphabet(const Polynomial& other) const {
  if (alphabet_ != other.alphabet_) throw InputError("alphabet mismatch");
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  check_alphabet(other);
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  check_alphabet(other);
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, coeff] : terms_) coeff *= c;
  return *this;
}

Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
  lhs.check_alphabet(rhs);
  Polynomial out(lhs.alphabet_);
  for (const auto& [ea, ca] : lhs.terms_) {
    for (const auto& [eb, cb] : rhs.terms_) out.add_term(ea + eb, ca * cb);
  }
  return out;
}

Polynomial Polynomial::pow(unsigned n) const {
  Polynomial r = constant(1, alphabet_);
  for (unsigned i = 0; i < n; ++i) r = r * *this;
  return r;
}

Polynomial Polynomial::with_alphabet(Alphabet alphabet) const {
  Polynomial p = *this;
  p.alphabet_ = alphabet;
  return p;
}

std::string render_monomial(const ExponentVector& e, Alphabet alphabet) {
  std::string s;
  for (int i = 1; i <= e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!s.empty()) s += '*';
    s += alphabet_letter(alphabet);
    s += std::to_string(i);
    if (e[i] > 1) s += '^' + std::to_string(e[i]);
  }
  return s;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    const bool negative = c < 0;
    Rational mag = abs(c);
    if (first) {
      if (negative) s += '-';
    } else {
      s += negative ? " - " : " + ";
    }
    first = false;
    const std::string mono = render_monomial(e, alphabet_);
    if (mono.empty()) {
      s += mag.get_str();
    } else if (mag == 1) {
      s += mono;
    } else {
      s += mag.get_str() + '*' + mono;
    }
  }
  return s;
}

namespace {

class PolynomialParser {
 public:
  explicit PolynomialParser(std::string_view text) {
    for (char ch : text) {
      if (!std::isspace(static_cast<unsigned char>(ch))) src_ += ch;
    }
  }

  Polynomial parse() {
    if (src_.empty()) fail("empty polynomial");
    std::vector<std::pair<ExponentVector, Rational>> terms;
    bool negative = false;
    if (peek() == '-') {
      negative = true;
      ++pos_;
    }
    while (true) {
      auto [e, c] = term();
      terms.emplace_back(std::move(e), negative ? Rational(-c) : c);
      if (pos_ == src_.size()) break;
      const char op = src_[pos_++];
      if (op != '+' && op != '-') fail("expected '+' or '-'");
      negative = op == '-';
    }
    Polynomial p(alphabet_.value_or(Alphabet::x));
    for (const auto& [e, c] : terms) p.add_term(e, c);
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw InputError("polynomial parse error at offset " + std::to_string(pos_) + ": " + why);
  }

  char peek() const { return pos_ < src_.size() ? src_[pos_] : '\0'; }

  unsigned long number() {
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected digits");
    if (pos_ - start > 9) fail("integer field too long");
    return std::stoul(src_.substr(start, pos_ - start));
  }

  std::string digits() {
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected digits");
    return src_.substr(start, pos_ - start);
  }

  std::pair<ExponentVector, Rational> term() {
    Rational c = 1;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      std::string num = digits();
      if (peek() == '/') {
        ++pos_;
        std::string den = digits();
        if (Integer(den) == 0) fail("zero denominator");
        c = Rational(Integer(num), Integer(den));
        c.canonicalize();
      } else {
        c = Rational(Integer(num));
      }
      if (peek() != '*') return {ExponentVector{}, c};
      ++pos_;
    }
    ExponentVector e;
    while (true) {
      e = e + factor();
      if (peek() != '*') break;
      ++pos_;
    }
    return {e, c};
  }

  ExponentVector factor() {
    const char letter = peek();
    Alphabet a;
    if (letter == 'x') {
      a = Alphabet::x;
    } else if (letter == 'y') {
      a = Alphabet::y;
    } else {
      fail("expected a variable");
    }
    if (alphabet_ && *alphabet_ != a) fail("mixed alphabets");
    alphabet_ = a;
    ++pos_;
    const auto index = number();
    if (index == 0) fail("variable index must be positive");
    unsigned long power = 1;
    if (peek() == '^') {
      ++pos_;
      power = number();
    }
    return ExponentVector::variable(static_cast<int>(index), static_cast<unsigned>(power));
  }

  std::string src_;
  std::size_t pos_ = 0;
  std::optional<Alphabet> alphabet_;
};

}  // namespace

Polynomial Polynomial::parse(std::string_view text) { return PolynomialParser(text).parse(); }

Polynomial scale(const Polynomial& f, const Rational& c) { return f * c; }

Rational inner_product(const Polynomial& f, const Polynomial& g) {
  if (f.alphabet() != g.alphabet()) throw InputError("alphabet mismatch");
  Rational sum = 0;
  const auto& small = f.terms().size() <= g.terms().size() ? f : g;
  const auto& large = &small == &f ? g : f;
  for (const auto& [e, c] : small.terms()) {
    auto it = large.terms().find(e);
    if (it != large.terms().end()) sum += c * it->second * Rational(e.factorial());
  }
  return sum;
}

Polynomial project(const Polynomial& f, int n) {
  Polynomial out(f.alphabet());
  for (const auto& [e, c] : f.terms()) {
    bool survives = true;
    for (int i = n + 1; i <= e.size() && survives; ++i) survives = e[i] == 0;
    if (survives) out.add_term(e, c);
  }
  return out;
}

Polynomial bar_transform(const Polynomial& f) {
  Polynomial out(f.alphabet());
  for (const auto& [e, c] : f.terms()) {
    Rational multiplier(factorial(e.degree()), e.factorial());
    multiplier.canonicalize();
    out.add_term(e, c * multiplier);
  }
  return out;
}

Polynomial x_difference(int d, Alphabet alphabet) {
  return Polynomial::variable(d, alphabet) - Polynomial::variable(d + 1, alphabet);
}

}  // namespace schubcalc
