#include "schubcalc/cauchy.hpp"

#include <algorithm>

#include "schubcalc/errors.hpp"

namespace schubcalc {

bool BoundedBiword::is_bounded() const {
  return std::all_of(letters.begin(), letters.end(), [](const BiwordLetter& l) {
    return l.index >= 1 && l.index <= l.label;
  });
}

std::vector<int> BoundedBiword::indices() const {
  std::vector<int> out;
  for (const auto& l : letters) out.push_back(l.index);
  return out;
}

std::vector<int> BoundedBiword::labels() const {
  std::vector<int> out;
  for (const auto& l : letters) out.push_back(l.label);
  return out;
}

int BoundedBiword::max_label() const {
  int m = 0;
  for (const auto& l : letters) m = std::max(m, l.label);
  return m;
}

std::vector<BoundedBiword> enumerate_bounded_biwords(int n, int m) {
  std::vector<BiwordLetter> alphabet;
  for (int d = 1; d <= m; ++d) {
    for (int i = 1; i <= d; ++i) alphabet.push_back({i, d});
  }
  std::sort(alphabet.begin(), alphabet.end());
  std::vector<BoundedBiword> words{BoundedBiword{}};
  for (int step = 0; step < n; ++step) {
    std::vector<BoundedBiword> next;
    next.reserve(words.size() * alphabet.size());
    for (const auto& w : words) {
      for (const auto& letter : alphabet) {
        BoundedBiword longer = w;
        longer.letters.push_back(letter);
        next.push_back(std::move(longer));
      }
    }
    words = std::move(next);
  }
  return words;
}

int insertion_support_bound(const BoundedBiword& b) {
  return b.max_label() + static_cast<int>(b.letters.size()) + 1;
}

InsertionResult insert(const BoundedBiword& b, int n) {
  if (!b.is_bounded()) throw InputError("biword is not bounded (need 1 <= i_j <= d_j)");
  InsertionResult r;
  for (const auto& [i, d] : b.letters) {
    const MonkMatching match = monk_match(d, r.target, n);
    const MonkPair* pair = match.forward(i, r.record);
    if (pair == nullptr) {
      throw InconsistencyError("Monk bijection has no image for the current record");
    }
    const auto t = transposition_between(r.target, pair->target);
    if (!t) throw InconsistencyError("Monk image is not a transposition away");
    CoverEdge edge{r.target, pair->target, *t};
    if (!edge.admits(d)) throw InconsistencyError("Monk image is not a d-Bruhat cover");
    r.chain.steps.push_back({std::move(edge), d});
    r.record = pair->image;
    r.target = pair->target;
  }
  return r;
}

BoundedBiword inverse_insert(const InsertionResult& r, int n) {
  if (!r.chain.start.is_identity()) throw InputError("insertion chain must start at the identity");
  if (!r.chain.is_well_formed()) throw InputError("insertion chain is not a labeled Bruhat chain");
  if (r.chain.end() != r.target) throw InputError("insertion chain does not end at the target");
  if (from_word(r.record.bottom) != r.target || !r.record.is_compatible() ||
      static_cast<int>(r.record.bottom.size()) != length(r.target)) {
    throw InputError("record is not a reduced compatible sequence of the target");
  }
  BoundedBiword b;
  b.letters.resize(r.chain.steps.size());
  CompatibleSequence record = r.record;
  for (std::size_t s = r.chain.steps.size(); s-- > 0;) {
    const auto& step = r.chain.steps[s];
    const MonkMatching match = monk_match(step.label, step.edge.source, n);
    const MonkPair* pair = match.backward(step.edge.target, record);
    if (pair == nullptr) throw InputError("pair is not in the image of insertion");
    b.letters[s] = {pair->j, step.label};
    record = pair->source;
  }
  if (!record.top.empty()) throw InputError("record did not shrink to the empty sequence");
  return b;
}

namespace {

struct BivariateOrder {
  bool operator()(const BivariatePolynomial::Key& a, const BivariatePolynomial::Key& b) const {
    GradedLexGreater g;
    if (g(a.first, b.first)) return true;
    if (g(b.first, a.first)) return false;
    return g(a.second, b.second);
  }
};

}  // namespace

BivariatePolynomial BivariatePolynomial::constant(const Rational& c) {
  BivariatePolynomial p;
  p.add_term({}, c);
  return p;
}

BivariatePolynomial BivariatePolynomial::product(const Polynomial& f, const Polynomial& g) {
  BivariatePolynomial p;
  for (const auto& [ef, cf] : f.terms()) {
    for (const auto& [eg, cg] : g.terms()) p.add_term({ef, eg}, cf * cg);
  }
  return p;
}

void BivariatePolynomial::add_term(const Key& key, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

BivariatePolynomial& BivariatePolynomial::operator+=(const BivariatePolynomial& other) {
  for (const auto& [k, c] : other.terms_) add_term(k, c);
  return *this;
}

BivariatePolynomial operator*(const BivariatePolynomial& a, const BivariatePolynomial& b) {
  BivariatePolynomial out;
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) {
      out.add_term({ka.first + kb.first, ka.second + kb.second}, ca * cb);
    }
  }
  return out;
}

BivariatePolynomial& BivariatePolynomial::operator*=(const Rational& c) {
  if (c == 0) terms_.clear();
  for (auto& [k, coeff] : terms_) coeff *= c;
  return *this;
}

std::string BivariatePolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<Key, Rational>> sorted(terms_.begin(), terms_.end());
  std::sort(sorted.begin(), sorted.end(),
            [](const auto& a, const auto& b) { return BivariateOrder{}(a.first, b.first); });
  std::string s;
  bool first = true;
  for (const auto& [key, c] : sorted) {
    if (first) {
      if (c < 0) s += '-';
    } else {
      s += c < 0 ? " - " : " + ";
    }
    first = false;
    std::string mono = render_monomial(key.first, Alphabet::x);
    const std::string ymono = render_monomial(key.second, Alphabet::y);
    if (!ymono.empty()) mono += (mono.empty() ? "" : "*") + ymono;
    const Rational mag = abs(c);
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

BivariatePolynomial cauchy_rhs(int m, int p, int n, std::vector<Permutation>* contributing) {
  BivariatePolynomial rhs;
  for (const auto& w : permutations_of_length(p, n)) {
    const Polynomial sx = project(schubert(w), m);
    if (sx.is_zero()) continue;
    const Polynomial dy = project(dual_schubert(Permutation{}, w, n), m);
    if (dy.is_zero()) continue;
    rhs += BivariatePolynomial::product(sx, dy);
    if (contributing) contributing->push_back(w);
  }
  return rhs;
}

}  // namespace

CauchyReport verify_cauchy(int m, int p) {
  if (m < 1 || p < 0) throw InputError("verify_cauchy needs m >= 1 and p >= 0");
  CauchyReport r;
  r.m = m;
  r.p = p;
  r.support = m + p + 1;

  BivariatePolynomial kernel;
  for (int i = 1; i <= m; ++i) {
    kernel.add_term({ExponentVector::variable(i), ExponentVector::variable(i)}, 1);
  }
  r.lhs = BivariatePolynomial::constant(1);
  for (int i = 0; i < p; ++i) r.lhs = r.lhs * kernel;
  r.lhs *= Rational(Integer(1), factorial(static_cast<unsigned>(p)));

  r.rhs = cauchy_rhs(m, p, r.support, &r.contributing);
  if (cauchy_rhs(m, p, r.support + 1, nullptr) != r.rhs) {
    throw InconsistencyError("Cauchy right-hand side changed between support bounds " +
                             std::to_string(r.support) + " and " + std::to_string(r.support + 1));
  }
  return r;
}

Rational duality_pairing(const Permutation& u, const Permutation& w) {
  return inner_product(schubert(u), dual_schubert(Permutation{}, w, std::max(w.support(), 1)));
}

DualityReport verify_duality(int n) {
  if (n < 1) throw InputError("verify_duality needs n >= 1");
  DualityReport r;
  r.n = n;
  const auto perms = all_permutations(n);
  std::vector<Polynomial> s;
  std::vector<Polynomial> d;
  for (const auto& w : perms) {
    s.push_back(schubert(w));
    d.push_back(dual_schubert(Permutation{}, w, n));
  }
  for (std::size_t i = 0; i < perms.size(); ++i) {
    for (std::size_t j = 0; j < perms.size(); ++j) {
      const Rational value = inner_product(s[i], d[j]);
      ++r.pairs;
      if (value != (i == j ? 1 : 0)) r.failures.emplace_back(perms[i], perms[j], value);
    }
  }
  return r;
}

}  // namespace schubcalc
