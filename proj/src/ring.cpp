#include "socmod/ring.hpp"

#include <map>
#include <mutex>

#include "socmod/errors.hpp"

namespace socmod {

LocalRing::LocalRing(Field field, std::vector<std::string> vars, std::vector<std::string> relations, bool cm)
    : base_(std::make_shared<const PolyRing>(field, std::move(vars))), cm_(cm) {
  for (const auto& r : relations) relations_.push_back(parse_poly(base_, r));
  validate();
}

LocalRing::LocalRing(PolyRingPtr base, std::vector<Poly> relations, bool cm)
    : base_(std::move(base)), relations_(std::move(relations)), cm_(cm) {
  validate();
}

void LocalRing::validate() {
  std::vector<Poly> kept;
  for (auto& r : relations_) {
    common_ring(r, Poly(base_));
    if (r.is_zero()) continue;
    if (!r.in_max_ideal()) {
      throw DomainError("relation " + r.to_string() + " has a nonzero constant term; relations must lie in m");
    }
    kept.push_back(std::move(r));
  }
  relations_ = std::move(kept);
}

std::string LocalRing::to_string() const {
  std::string s = field().name() + "[";
  for (std::size_t i = 0; i < nvars(); ++i) {
    if (i) s += ",";
    s += base_->vars()[i];
  }
  s += "]";
  if (!relations_.empty()) {
    s += " / (";
    for (std::size_t i = 0; i < relations_.size(); ++i) {
      if (i) s += ", ";
      s += relations_[i].to_string();
    }
    s += ")";
  }
  return s;
}

Ring make_ring(Field field, std::vector<std::string> vars, std::vector<std::string> relations, bool cm) {
  return std::make_shared<const LocalRing>(field, std::move(vars), std::move(relations), cm);
}

long binomial(long n, long k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

int Ambient::rank() const { return static_cast<int>(binomial(rank_f + sym_degree - 1, sym_degree)); }

const std::vector<Monomial>& sym_basis(int r, int s) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::vector<Monomial>> cache;
  std::lock_guard lock(mu);
  auto [it, inserted] = cache.try_emplace({r, s});
  if (inserted) it->second = monomials_of_degree(static_cast<std::size_t>(r), s);
  return it->second;
}

int sym_index(int r, const Monomial& t) {
  const auto& basis = sym_basis(r, t.degree());
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (basis[i] == t) return static_cast<int>(i);
  }
  throw StructuralError("monomial not in symmetric-power basis");
}

FreeElement::FreeElement(Ambient ambient, std::vector<Poly> components)
    : ambient_(ambient), components_(std::move(components)) {
  if (static_cast<int>(components_.size()) != ambient_.rank()) {
    throw StructuralError("free element has " + std::to_string(components_.size()) + " components, expected " +
                          std::to_string(ambient_.rank()));
  }
  for (std::size_t i = 1; i < components_.size(); ++i) common_ring(components_[0], components_[i]);
}

FreeElement FreeElement::zero(const Ring& ring, Ambient ambient) {
  return FreeElement(ambient, std::vector<Poly>(static_cast<std::size_t>(ambient.rank()), ring->zero()));
}

FreeElement FreeElement::basis_vector(const Ring& ring, Ambient ambient, int index) {
  FreeElement e = zero(ring, ambient);
  e.components_.at(static_cast<std::size_t>(index)) = ring->one();
  return e;
}

bool FreeElement::is_zero() const {
  for (const auto& c : components_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

bool FreeElement::in_max_ideal_times_ambient() const {
  for (const auto& c : components_) {
    if (!c.in_max_ideal()) return false;
  }
  return true;
}

bool FreeElement::is_homogeneous() const {
  int deg = -1;
  for (const auto& c : components_) {
    if (c.is_zero()) continue;
    if (!c.is_homogeneous()) return false;
    if (deg >= 0 && c.degree() != deg) return false;
    deg = c.degree();
  }
  return true;
}

int FreeElement::degree() const {
  int deg = -1;
  for (const auto& c : components_) deg = std::max(deg, c.degree());
  return deg;
}

FreeElement FreeElement::operator-() const {
  FreeElement r = *this;
  for (auto& c : r.components_) c = -c;
  return r;
}

namespace {

void check_same_ambient(const FreeElement& a, const FreeElement& b) {
  if (!(a.ambient() == b.ambient())) throw StructuralError("free elements from different free modules");
}

}  // namespace

FreeElement operator+(const FreeElement& a, const FreeElement& b) {
  check_same_ambient(a, b);
  FreeElement r = a;
  for (std::size_t i = 0; i < r.components_.size(); ++i) r.components_[i] += b.components_[i];
  return r;
}

FreeElement operator-(const FreeElement& a, const FreeElement& b) {
  check_same_ambient(a, b);
  FreeElement r = a;
  for (std::size_t i = 0; i < r.components_.size(); ++i) r.components_[i] -= b.components_[i];
  return r;
}

FreeElement FreeElement::scaled(const Poly& c) const {
  FreeElement r = *this;
  for (auto& x : r.components_) x = x * c;
  return r;
}

bool operator==(const FreeElement& a, const FreeElement& b) {
  return a.ambient_ == b.ambient_ && a.components_ == b.components_;
}

std::string FreeElement::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < components_.size(); ++i) {
    if (i) s += ", ";
    s += components_[i].to_string();
  }
  return s + ")";
}

FreeElement sym_product(const FreeElement& u, const FreeElement& v) {
  if (u.ambient().rank_f != v.ambient().rank_f) throw StructuralError("product of elements of different free modules");
  const int r = u.ambient().rank_f;
  const int a = u.ambient().sym_degree;
  const int b = v.ambient().sym_degree;
  Ambient target{r, a + b};
  const auto& basis_a = sym_basis(r, a);
  const auto& basis_b = sym_basis(r, b);
  PolyRingPtr ring;
  for (const auto& c : u.components()) {
    if (c.ring()) ring = c.ring();
  }
  for (const auto& c : v.components()) {
    if (c.ring()) ring = c.ring();
  }
  std::vector<Poly> comps(static_cast<std::size_t>(target.rank()), Poly(ring));
  for (std::size_t i = 0; i < basis_a.size(); ++i) {
    if (u[i].is_zero()) continue;
    for (std::size_t j = 0; j < basis_b.size(); ++j) {
      if (v[j].is_zero()) continue;
      int k = sym_index(r, basis_a[i] * basis_b[j]);
      comps[static_cast<std::size_t>(k)] += u[i] * v[j];
    }
  }
  return FreeElement(target, std::move(comps));
}

}  // namespace socmod
