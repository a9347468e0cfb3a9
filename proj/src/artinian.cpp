#include "socmod/artinian.hpp"

#include <deque>
#include <map>
#include <mutex>

#include "socmod/errors.hpp"

namespace socmod {

namespace {

std::vector<FreeElement> monomial_generators(const Ring& ring, int degree) {
  std::vector<FreeElement> out;
  for (const auto& m : monomials_of_degree(ring->nvars(), degree)) {
    out.push_back(FreeElement::from_poly(Poly::monomial(ring->poly_ring(), m, 1)));
  }
  return out;
}

}  // namespace

TruncatedAlgebra::TruncatedAlgebra(Ring ring, int level) : ring_(std::move(ring)), level_(level) {
  if (level_ < 1) throw StructuralError("truncation level must be positive");
  auto gens = monomial_generators(ring_, level_);
  gb_ = buchberger(ring_, {1, 1}, gens);
  std::vector<Monomial> leads;
  for (const auto& e : gb_->elements()) leads.push_back(e.front().mono);
  for (int deg = 0; deg < level_; ++deg) {
    for (auto& m : monomials_of_degree(ring_->nvars(), deg)) {
      bool standard = true;
      for (const auto& l : leads) {
        if (l.divides(m)) {
          standard = false;
          break;
        }
      }
      if (standard) {
        index_.emplace(m, basis_.size());
        basis_.push_back(std::move(m));
      }
    }
  }
  mult_.resize(ring_->nvars());
  for (std::size_t v = 0; v < ring_->nvars(); ++v) {
    Monomial xv = Monomial::variable(ring_->nvars(), v);
    for (const auto& b : basis_) mult_[v].push_back(coords(Poly::monomial(ring_->poly_ring(), b * xv, 1)));
  }
}

std::shared_ptr<const TruncatedAlgebra> TruncatedAlgebra::get(const Ring& ring, int level) {
  static std::mutex mu;
  static std::map<std::pair<std::string, int>, std::shared_ptr<const TruncatedAlgebra>> cache;
  std::lock_guard lock(mu);
  auto key = std::make_pair(ring->to_string(), level);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  auto alg = std::make_shared<const TruncatedAlgebra>(ring, level);
  cache.emplace(key, alg);
  return alg;
}

TruncatedAlgebra::Sparse TruncatedAlgebra::coords(const Poly& f) const {
  Sparse out;
  if (f.is_zero()) return out;
  Poly r = gb_->normal_form(f);
  for (const auto& t : r.terms()) {
    auto it = index_.find(t.mono);
    if (it == index_.end()) throw StructuralError("normal form left the truncation basis");
    out.emplace_back(it->second, t.coeff);
  }
  return out;
}

Poly TruncatedAlgebra::lift(const DenseVec& v, std::size_t offset) const {
  std::vector<Term> terms;
  for (std::size_t b = 0; b < basis_.size(); ++b) {
    if (v[offset + b] != 0) terms.push_back({basis_[b], v[offset + b]});
  }
  return Poly(ring_->poly_ring(), std::move(terms));
}

DenseVec TruncatedAlgebra::embed(const FreeElement& f) const {
  const std::size_t d = dim();
  DenseVec out(static_cast<std::size_t>(f.rank()) * d);
  for (std::size_t p = 0; p < static_cast<std::size_t>(f.rank()); ++p) {
    for (auto& [b, c] : coords(f[p])) out[p * d + b] = c;
  }
  return out;
}

FreeElement TruncatedAlgebra::lift(const DenseVec& v, Ambient ambient) const {
  std::vector<Poly> comps;
  for (int p = 0; p < ambient.rank(); ++p) comps.push_back(lift(v, static_cast<std::size_t>(p) * dim()));
  return FreeElement(ambient, std::move(comps));
}

DenseVec TruncatedAlgebra::times_var(std::size_t var, const DenseVec& v) const {
  const Field& k = ring_->field();
  const std::size_t d = dim();
  DenseVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    std::size_t p = i / d, b = i % d;
    for (const auto& [t, c] : mult_[var][b]) out[p * d + t] = k.add(out[p * d + t], k.mul(c, v[i]));
  }
  return out;
}

DenseVec TruncatedAlgebra::times(const Poly& f, const DenseVec& v) const {
  const Field& k = ring_->field();
  DenseVec out(v.size());
  for (const auto& t : f.terms()) {
    if (t.mono.degree() >= level_) continue;
    DenseVec w = v;
    for (std::size_t var = 0; var < t.mono.size(); ++var) {
      for (int e = 0; e < t.mono[var]; ++e) w = times_var(var, w);
    }
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (w[i] != 0) out[i] = k.add(out[i], k.mul(t.coeff, w[i]));
    }
  }
  return out;
}

namespace {

std::mutex policy_mu;
TruncPolicy policy;

}  // namespace

void set_trunc_policy(TruncPolicy p) {
  if (p.cap < 1) throw DomainError("truncation cap must be positive");
  if (p.fixed_level && *p.fixed_level < 1) throw DomainError("truncation level must be positive");
  std::lock_guard lock(policy_mu);
  policy = p;
}

TruncPolicy trunc_policy() {
  std::lock_guard lock(policy_mu);
  return policy;
}

int certificate_level(const Ring& ring, std::span<const Poly> ideal, int min_level) {
  const int cap = trunc_policy().cap;
  if (ideal_has_unit(ideal)) return min_level;
  if (!locally_finite_colength(ring, ideal)) throw DomainError("not m-primary");
  for (int k = std::max(min_level, 1); k <= cap; ++k) {
    std::vector<Poly> gens(ideal.begin(), ideal.end());
    for (const auto& m : monomials_of_degree(ring->nvars(), k + 1)) {
      gens.push_back(Poly::monomial(ring->poly_ring(), m, 1));
    }
    auto gb = ideal_basis(ring, gens);
    bool ok = true;
    for (const auto& m : monomials_of_degree(ring->nvars(), k)) {
      if (!gb->normal_form(Poly::monomial(ring->poly_ring(), m, 1)).is_zero()) {
        ok = false;
        break;
      }
    }
    if (ok) return k;
  }
  throw ResourceError("truncation level exceeds cap " + std::to_string(cap));
}

namespace {

std::vector<Poly> ideal_square(std::span<const Poly> c) {
  std::vector<Poly> out;
  for (std::size_t i = 0; i < c.size(); ++i) {
    for (std::size_t j = i; j < c.size(); ++j) out.push_back(c[i] * c[j]);
  }
  return out;
}

}  // namespace

int certify_truncation(const Submodule& n) {
  auto sq = ideal_square(n.certificate());
  return certificate_level(n.ring(), sq, 2);
}

int working_level(const Submodule& n) {
  auto& c = n.caches();
  int intrinsic;
  {
    std::lock_guard lock(c.mu);
    if (c.level) {
      intrinsic = *c.level;
    } else {
      intrinsic = -1;
    }
  }
  TruncPolicy pol = trunc_policy();
  if (intrinsic < 0) {
    intrinsic = certificate_level(n.ring(), n.certificate(), 1);
    std::lock_guard lock(c.mu);
    c.level = intrinsic;
  }
  if (intrinsic > pol.cap) throw ResourceError("truncation level exceeds cap " + std::to_string(pol.cap));
  if (pol.fixed_level) {
    if (*pol.fixed_level < intrinsic) {
      throw DomainError("fixed truncation level " + std::to_string(*pol.fixed_level) + " is below the certified level " +
                        std::to_string(intrinsic));
    }
    return *pol.fixed_level;
  }
  return intrinsic;
}

namespace {

// Smallest subspace containing the seeds and closed under every x_i.
Echelon closure(const TruncatedAlgebra& alg, std::size_t width, std::vector<DenseVec> seeds) {
  Echelon e(alg.ring()->field(), width);
  std::deque<DenseVec> work(std::make_move_iterator(seeds.begin()), std::make_move_iterator(seeds.end()));
  while (!work.empty()) {
    DenseVec v = std::move(work.front());
    work.pop_front();
    if (!e.insert(v)) continue;
    for (std::size_t i = 0; i < alg.ring()->nvars(); ++i) work.push_back(alg.times_var(i, v));
  }
  return e;
}

}  // namespace

std::shared_ptr<const Echelon> truncated_span(const Submodule& n, int level) {
  auto& c = n.caches();
  {
    std::lock_guard lock(c.mu);
    auto it = c.spans.find(level);
    if (it != c.spans.end()) return it->second;
  }
  auto alg = TruncatedAlgebra::get(n.ring(), level);
  std::vector<DenseVec> seeds;
  for (const auto& g : n.generators()) seeds.push_back(alg->embed(g));
  auto span = std::make_shared<const Echelon>(closure(*alg, static_cast<std::size_t>(n.rank()) * alg->dim(), seeds));
  std::lock_guard lock(c.mu);
  return c.spans.emplace(level, span).first->second;
}

Echelon truncated_span_max_ideal_times(const Submodule& n, int level) {
  auto alg = TruncatedAlgebra::get(n.ring(), level);
  std::vector<DenseVec> seeds;
  for (const auto& g : n.generators()) {
    DenseVec v = alg->embed(g);
    for (std::size_t i = 0; i < n.ring()->nvars(); ++i) seeds.push_back(alg->times_var(i, v));
  }
  return closure(*alg, static_cast<std::size_t>(n.rank()) * alg->dim(), std::move(seeds));
}

long colength_trunc(const Submodule& n) {
  int k = working_level(n);
  auto alg = TruncatedAlgebra::get(n.ring(), k);
  auto span = truncated_span(n, k);
  return static_cast<long>(static_cast<std::size_t>(n.rank()) * alg->dim() - span->rank());
}

Module colon_socle_trunc(const Submodule& n) {
  int k = working_level(n);
  auto alg = TruncatedAlgebra::get(n.ring(), k);
  auto span = truncated_span(n, k);
  const std::size_t width = static_cast<std::size_t>(n.rank()) * alg->dim();
  const std::size_t nv = n.ring()->nvars();
  std::vector<DenseVec> images;
  images.reserve(width);
  for (std::size_t j = 0; j < width; ++j) {
    DenseVec e(width);
    e[j] = 1;
    DenseVec img;
    img.reserve(nv * width);
    for (std::size_t i = 0; i < nv; ++i) {
      DenseVec r = span->remainder(alg->times_var(i, e));
      img.insert(img.end(), r.begin(), r.end());
    }
    images.push_back(std::move(img));
  }
  auto ker = kernel(n.ring()->field(), images, nv * width);
  Echelon grow = *span;
  std::vector<FreeElement> gens = n.generators();
  for (auto& v : ker) {
    if (grow.insert(v)) gens.push_back(alg->lift(v, n.ambient()));
  }
  return make_module(n.ring(), n.ambient(), std::move(gens), n.certificate());
}

bool member_trunc(const FreeElement& f, const Submodule& v) {
  if (!(f.ambient() == v.ambient())) throw StructuralError("element and module live in different free modules");
  int k = working_level(v);
  auto alg = TruncatedAlgebra::get(v.ring(), k);
  return truncated_span(v, k)->contains(alg->embed(f));
}

bool contained_trunc(const Submodule& u, const Submodule& v) {
  if (!(u.ambient() == v.ambient())) throw StructuralError("modules live in different free modules");
  int k = working_level(v);
  auto alg = TruncatedAlgebra::get(v.ring(), k);
  auto span = truncated_span(v, k);
  for (const auto& g : u.generators()) {
    if (!span->contains(alg->embed(g))) return false;
  }
  return true;
}

bool subspace_equal(const Submodule& u, const Submodule& v) { return contained_trunc(u, v) && contained_trunc(v, u); }

}  // namespace socmod
