#include "socmod/poly.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_map>

#include "socmod/errors.hpp"

namespace socmod {

PolyRing::PolyRing(Field field, std::vector<std::string> vars) : field_(field), vars_(std::move(vars)) {
  if (vars_.empty()) throw StructuralError("a ring needs at least one variable");
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (vars_[i] == vars_[j]) throw StructuralError("duplicate variable '" + vars_[i] + "'");
    }
  }
}

int PolyRing::var_index(std::string_view name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (vars_[i] == name) return static_cast<int>(i);
  }
  return -1;
}

namespace {

bool term_greater(const Term& a, const Term& b) { return grevlex(a.mono, b.mono) > 0; }

PolyRingPtr pick_ring(const Poly& a, const Poly& b) { return a.ring() ? a.ring() : b.ring(); }

}  // namespace

const PolyRingPtr& common_ring(const Poly& a, const Poly& b) {
  if (!a.ring()) return b.ring();
  if (!b.ring() || a.ring() == b.ring() || *a.ring() == *b.ring()) return a.ring();
  throw StructuralError("polynomials from different rings");
}

Poly::Poly(PolyRingPtr ring, std::vector<Term> terms) : ring_(std::move(ring)) {
  const Field& f = ring_->field();
  for (auto& t : terms) {
    if (t.mono.size() != ring_->nvars()) throw StructuralError("exponent vector length does not match ring");
    t.coeff = f.from(t.coeff);
  }
  std::sort(terms.begin(), terms.end(), term_greater);
  for (auto& t : terms) {
    if (!terms_.empty() && terms_.back().mono == t.mono) {
      terms_.back().coeff = f.add(terms_.back().coeff, t.coeff);
      if (terms_.back().coeff == 0) terms_.pop_back();
    } else if (t.coeff != 0) {
      terms_.push_back(std::move(t));
    }
  }
}

Poly Poly::constant(PolyRingPtr ring, const Scalar& c) {
  Monomial one(ring->nvars());
  return monomial(std::move(ring), std::move(one), c);
}

Poly Poly::variable(PolyRingPtr ring, std::size_t index) {
  Monomial m = Monomial::variable(ring->nvars(), index);
  return monomial(std::move(ring), std::move(m), 1);
}

Poly Poly::monomial(PolyRingPtr ring, Monomial m, const Scalar& c) {
  std::vector<Term> t;
  t.push_back({std::move(m), c});
  return Poly(std::move(ring), std::move(t));
}

Poly Poly::from_canonical(PolyRingPtr ring, std::vector<Term> terms) {
  Poly r(std::move(ring));
  r.terms_ = std::move(terms);
  return r;
}

Scalar Poly::constant_term() const {
  if (terms_.empty() || !terms_.back().mono.is_one()) return 0;
  return terms_.back().coeff;
}

int Poly::degree() const { return terms_.empty() ? -1 : terms_.front().mono.degree(); }

int Poly::min_degree() const {
  int d = -1;
  for (const auto& t : terms_) {
    if (d < 0 || t.mono.degree() < d) d = t.mono.degree();
  }
  return d;
}

bool Poly::is_homogeneous() const {
  return terms_.empty() || terms_.front().mono.degree() == terms_.back().mono.degree();
}

Scalar Poly::coefficient(const Monomial& m) const {
  for (const auto& t : terms_) {
    if (t.mono == m) return t.coeff;
  }
  return 0;
}

Poly Poly::operator-() const {
  Poly r(ring_);
  r.terms_ = terms_;
  for (auto& t : r.terms_) t.coeff = ring_->field().neg(t.coeff);
  return r;
}

namespace {

Poly merge(const Poly& a, const Poly& b, bool subtract) {
  const PolyRingPtr& ring = common_ring(a, b);
  if (!ring) return Poly();
  const Field& f = ring->field();
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  auto ia = a.terms().begin(), ea = a.terms().end();
  auto ib = b.terms().begin(), eb = b.terms().end();
  while (ia != ea || ib != eb) {
    std::strong_ordering c = std::strong_ordering::less;
    if (ia == ea) {
      c = std::strong_ordering::less;
    } else if (ib == eb) {
      c = std::strong_ordering::greater;
    } else {
      c = grevlex(ia->mono, ib->mono);
    }
    if (c > 0) {
      out.push_back(*ia++);
    } else if (c < 0) {
      out.push_back({ib->mono, subtract ? f.neg(ib->coeff) : ib->coeff});
      ++ib;
    } else {
      Scalar s = subtract ? f.sub(ia->coeff, ib->coeff) : f.add(ia->coeff, ib->coeff);
      if (s != 0) out.push_back({ia->mono, std::move(s)});
      ++ia;
      ++ib;
    }
  }
  return Poly::from_canonical(ring, std::move(out));
}

}  // namespace

Poly operator+(const Poly& a, const Poly& b) { return merge(a, b, false); }
Poly operator-(const Poly& a, const Poly& b) { return merge(a, b, true); }

Poly operator*(const Poly& a, const Poly& b) {
  const PolyRingPtr& ring = common_ring(a, b);
  if (!ring || a.is_zero() || b.is_zero()) return Poly(pick_ring(a, b));
  const Field& f = ring->field();
  std::unordered_map<Monomial, Scalar, MonomialHash> acc;
  acc.reserve(a.size() * b.size());
  for (const auto& ta : a.terms()) {
    for (const auto& tb : b.terms()) {
      Monomial m = ta.mono * tb.mono;
      Scalar c = f.mul(ta.coeff, tb.coeff);
      auto [it, inserted] = acc.try_emplace(std::move(m), c);
      if (!inserted) it->second = f.add(it->second, c);
    }
  }
  std::vector<Term> terms;
  terms.reserve(acc.size());
  for (auto& [m, c] : acc) {
    if (c != 0) terms.push_back({m, c});
  }
  std::sort(terms.begin(), terms.end(), term_greater);
  return Poly::from_canonical(ring, std::move(terms));
}

Poly Poly::scaled(const Scalar& c) const {
  if (!ring_ || c == 0) return Poly(ring_);
  Poly r(ring_);
  r.terms_ = terms_;
  for (auto& t : r.terms_) t.coeff = ring_->field().mul(t.coeff, c);
  return r;
}

Poly Poly::times_monomial(const Monomial& m, const Scalar& c) const {
  if (!ring_ || c == 0) return Poly(ring_);
  Poly r(ring_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.mono * m, ring_->field().mul(t.coeff, c)});
  return r;
}

Poly Poly::monic() const {
  if (terms_.empty()) return *this;
  return scaled(ring_->field().inv(terms_.front().coeff));
}

bool operator==(const Poly& a, const Poly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  if (a.is_zero()) return true;
  common_ring(a, b);
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (!(a.terms_[i].mono == b.terms_[i].mono) || a.terms_[i].coeff != b.terms_[i].coeff) return false;
  }
  return true;
}

std::string monomial_to_string(const Monomial& m, const std::vector<std::string>& vars) {
  std::string s;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!s.empty()) s += '*';
    s += vars[i];
    if (m[i] > 1) s += '^' + std::to_string(m[i]);
  }
  return s.empty() ? "1" : s;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& t : terms_) {
    Scalar c = t.coeff;
    bool negative = ring_->field().is_rationals() && c < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) s += '-';
    } else {
      s += negative ? " - " : " + ";
    }
    first = false;
    if (t.mono.is_one()) {
      s += c.get_str();
    } else {
      if (c != 1) s += c.get_str() + "*";
      s += monomial_to_string(t.mono, ring_->vars());
    }
  }
  return s;
}

// Recursive-descent parser: expr := term (('+'|'-') term)*;
// term := factor ('*' factor)*; factor := atom ('^' INT)?; atom := NUM ('/' NUM)? | VAR | '(' expr ')' | '-' factor.
namespace {

class PolyParser {
 public:
  PolyParser(const PolyRingPtr& ring, std::string_view text) : ring_(ring), text_(text) {}

  Poly parse() {
    Poly p = expr();
    skip();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) {
    throw StructuralError("cannot parse polynomial '" + std::string(text_) + "': " + msg);
  }
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  mpz_class integer() {
    skip();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return mpz_class(std::string(text_.substr(start, pos_ - start)));
  }
  Poly expr() {
    Poly p = term();
    for (;;) {
      if (eat('+')) {
        p += term();
      } else if (eat('-')) {
        p -= term();
      } else {
        return p;
      }
    }
  }
  Poly term() {
    Poly p = factor();
    while (eat('*')) p *= factor();
    return p;
  }
  Poly factor() {
    if (eat('-')) return -factor();
    Poly base = atom();
    if (eat('^')) {
      mpz_class e = integer();
      if (e > 1000) fail("exponent too large");
      Poly r = Poly::constant(ring_, 1);
      for (long i = 0; i < e.get_si(); ++i) r *= base;
      return r;
    }
    return base;
  }
  Poly atom() {
    skip();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Poly p = expr();
      if (!eat(')')) fail("expected ')'");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mpq_class q(integer());
      std::size_t save = pos_;
      if (eat('/')) {
        skip();
        if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
          mpz_class den = integer();
          if (den == 0) fail("zero denominator");
          q = mpq_class(q.get_num(), den);
          q.canonicalize();
        } else {
          pos_ = save;
        }
      }
      return Poly::constant(ring_, ring_->field().from(q));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      std::string_view name = text_.substr(start, pos_ - start);
      int idx = ring_->var_index(name);
      if (idx < 0) fail("unknown variable '" + std::string(name) + "'");
      return Poly::variable(ring_, static_cast<std::size_t>(idx));
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  const PolyRingPtr& ring_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(const PolyRingPtr& ring, std::string_view text) { return PolyParser(ring, text).parse(); }

}  // namespace socmod
