#include "socmod/monomial.hpp"

#include <algorithm>
#include <cassert>

#include "socmod/errors.hpp"

namespace socmod {

Monomial::Monomial(std::vector<int> exps) : exp_(std::move(exps)) {
  for (int e : exp_) {
    if (e < 0) throw StructuralError("negative exponent in monomial");
    degree_ += e;
  }
}

Monomial Monomial::variable(std::size_t nvars, std::size_t index) {
  Monomial m(nvars);
  m.exp_.at(index) = 1;
  m.degree_ = 1;
  return m;
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < exp_.size(); ++i) {
    if (exp_[i] > other.exp_[i]) return false;
  }
  return true;
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t i = 0; i < exp_.size(); ++i) {
    if (exp_[i] > 0 && other.exp_[i] > 0) return false;
  }
  return true;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial r(exp_.size());
  for (std::size_t i = 0; i < exp_.size(); ++i) {
    r.exp_[i] = std::max(exp_[i], other.exp_[i]);
    r.degree_ += r.exp_[i];
  }
  return r;
}

Monomial Monomial::quotient(const Monomial& divisor) const {
  assert(divisor.divides(*this));
  Monomial r(exp_.size());
  for (std::size_t i = 0; i < exp_.size(); ++i) r.exp_[i] = exp_[i] - divisor.exp_[i];
  r.degree_ = degree_ - divisor.degree_;
  return r;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r(a.exp_.size());
  for (std::size_t i = 0; i < a.exp_.size(); ++i) r.exp_[i] = a.exp_[i] + b.exp_[i];
  r.degree_ = a.degree_ + b.degree_;
  return r;
}

std::size_t Monomial::hash() const {
  std::size_t h = 0x9e3779b97f4a7c15ull;
  for (int e : exp_) h = (h ^ static_cast<std::size_t>(e)) * 0x100000001b3ull;
  return h;
}

std::strong_ordering grevlex(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() <=> b.degree();
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return b[i] <=> a[i];
  }
  return std::strong_ordering::equal;
}

std::strong_ordering MonomialOrder::compare(std::size_t pos_a, const Monomial& a, std::size_t pos_b,
                                            const Monomial& b) const {
  if (module_rule == ModuleRule::position_over_term) {
    if (pos_a != pos_b) return pos_b <=> pos_a;
    return grevlex(a, b);
  }
  auto c = grevlex(a, b);
  if (c != 0) return c;
  return pos_b <=> pos_a;
}

std::strong_ordering compare_monomials(const MonomialOrder& order, const Monomial& a, const Monomial& b) {
  if (a.size() != b.size()) throw StructuralError("monomial length mismatch");
  return order.compare(0, a, 0, b);
}

std::vector<Monomial> monomials_of_degree(std::size_t nvars, int deg) {
  std::vector<Monomial> out;
  if (nvars == 0) {
    if (deg == 0) out.emplace_back(0);
    return out;
  }
  std::vector<int> e(nvars, 0);
  // Enumerate compositions of deg into nvars parts.
  auto rec = [&](auto&& self, std::size_t i, int left) -> void {
    if (i + 1 == nvars) {
      e[i] = left;
      out.emplace_back(e);
      return;
    }
    for (int k = left; k >= 0; --k) {
      e[i] = k;
      self(self, i + 1, left - k);
    }
  };
  rec(rec, 0, deg);
  std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) { return grevlex(a, b) > 0; });
  return out;
}

}  // namespace socmod
