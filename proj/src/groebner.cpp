#include "socmod/groebner.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <unordered_map>

#include "socmod/errors.hpp"

namespace socmod {

namespace {

class Reducer {
 public:
  Reducer(const Field& field, MonomialOrder order) : field_(field), order_(order) {}

  bool greater(const ModTerm& a, const ModTerm& b) const {
    return order_.compare(a.pos, a.mono, b.pos, b.mono) > 0;
  }

  void sort(ModVec& v) const {
    std::sort(v.begin(), v.end(), [this](const ModTerm& a, const ModTerm& b) { return greater(a, b); });
  }

  // p[start..] - c * m * g; the order is multiplicative so m * g stays sorted.
  ModVec sub_scaled(const ModVec& p, std::size_t start, const Scalar& c, const Monomial& m, const ModVec& g) const {
    ModVec out;
    out.reserve(p.size() - start + g.size());
    std::size_t i = start, j = 0;
    while (i < p.size() || j < g.size()) {
      if (j == g.size()) {
        out.push_back(p[i++]);
        continue;
      }
      ModTerm shifted{g[j].pos, g[j].mono * m, field_.mul(c, g[j].coeff)};
      if (i == p.size()) {
        shifted.coeff = field_.neg(shifted.coeff);
        out.push_back(std::move(shifted));
        ++j;
        continue;
      }
      auto cmp = order_.compare(p[i].pos, p[i].mono, shifted.pos, shifted.mono);
      if (cmp > 0) {
        out.push_back(p[i++]);
      } else if (cmp < 0) {
        shifted.coeff = field_.neg(shifted.coeff);
        out.push_back(std::move(shifted));
        ++j;
      } else {
        Scalar s = field_.sub(p[i].coeff, shifted.coeff);
        if (s != 0) out.push_back({p[i].pos, p[i].mono, std::move(s)});
        ++i;
        ++j;
      }
    }
    return out;
  }

  // Full reduction of p by the elements of basis (skipping index `skip`).
  ModVec normal_form(ModVec p, const std::vector<ModVec>& basis, std::size_t skip = SIZE_MAX) const {
    ModVec rem;
    std::size_t start = 0;
    while (start < p.size()) {
      const ModTerm& lt = p[start];
      const ModVec* divisor = nullptr;
      for (std::size_t k = 0; k < basis.size(); ++k) {
        if (k == skip || basis[k].empty()) continue;
        const ModTerm& gl = basis[k].front();
        if (gl.pos == lt.pos && gl.mono.divides(lt.mono)) {
          divisor = &basis[k];
          break;
        }
      }
      if (!divisor) {
        rem.push_back(lt);
        ++start;
        continue;
      }
      const ModTerm& gl = divisor->front();
      Scalar c = field_.div(lt.coeff, gl.coeff);
      Monomial m = lt.mono.quotient(gl.mono);
      p = sub_scaled(p, start, c, m, *divisor);
      start = 0;
    }
    return rem;
  }

  ModVec monic(ModVec v) const {
    if (v.empty()) return v;
    Scalar inv = field_.inv(v.front().coeff);
    for (auto& t : v) t.coeff = field_.mul(t.coeff, inv);
    return v;
  }

  ModVec spoly(const ModVec& f, const ModVec& g) const {
    const ModTerm& lf = f.front();
    const ModTerm& lg = g.front();
    Monomial l = lf.mono.lcm(lg.mono);
    ModVec left;
    left.reserve(f.size());
    Monomial mf = l.quotient(lf.mono);
    Scalar cf = field_.inv(lf.coeff);
    for (const auto& t : f) left.push_back({t.pos, t.mono * mf, field_.mul(t.coeff, cf)});
    return sub_scaled(left, 0, field_.inv(lg.coeff), l.quotient(lg.mono), g);
  }

  const Field& field() const { return field_; }

 private:
  const Field& field_;
  MonomialOrder order_;
};

ModVec to_modvec(const FreeElement& f, const Reducer& red) {
  ModVec v;
  for (std::size_t p = 0; p < f.components().size(); ++p) {
    for (const auto& t : f[p].terms()) v.push_back({p, t.mono, t.coeff});
  }
  red.sort(v);
  return v;
}

FreeElement from_modvec(const ModVec& v, const Ring& ring, Ambient ambient) {
  std::vector<std::vector<Term>> comps(static_cast<std::size_t>(ambient.rank()));
  for (const auto& t : v) comps.at(t.pos).push_back({t.mono, t.coeff});
  std::vector<Poly> polys;
  polys.reserve(comps.size());
  for (auto& c : comps) polys.emplace_back(ring->poly_ring(), std::move(c));
  return FreeElement(ambient, std::move(polys));
}

struct PairKey {
  int degree;
  std::size_t pos;
  Monomial lcm;
  std::size_t i, j;
};

std::vector<ModVec> run_buchberger(std::vector<ModVec> input, const Reducer& red, bool rank_one) {
  std::vector<ModVec> g;
  auto cmp = [&red](const PairKey& a, const PairKey& b) {
    if (a.degree != b.degree) return a.degree < b.degree;
    ModTerm ta{a.pos, a.lcm, 1}, tb{b.pos, b.lcm, 1};
    if (red.greater(tb, ta)) return true;
    if (red.greater(ta, tb)) return false;
    if (a.j != b.j) return a.j < b.j;
    return a.i < b.i;
  };
  std::set<PairKey, decltype(cmp)> queue(cmp);
  std::set<std::pair<std::size_t, std::size_t>> pending;

  auto add_element = [&](ModVec h) {
    std::size_t k = g.size();
    g.push_back(red.monic(std::move(h)));
    const ModTerm& lk = g[k].front();
    for (std::size_t i = 0; i < k; ++i) {
      const ModTerm& li = g[i].front();
      if (li.pos != lk.pos) continue;
      // Product criterion, valid for ideals only.
      if (rank_one && li.mono.coprime(lk.mono)) continue;
      Monomial l = li.mono.lcm(lk.mono);
      queue.insert(PairKey{l.degree(), lk.pos, l, i, k});
      pending.insert({i, k});
    }
  };

  for (auto& f : input) {
    ModVec r = red.normal_form(std::move(f), g);
    if (!r.empty()) add_element(std::move(r));
  }

  while (!queue.empty()) {
    PairKey key = *queue.begin();
    queue.erase(queue.begin());
    pending.erase({key.i, key.j});
    // Chain criterion: some other lead term divides the lcm and both
    // companion pairs have already been treated.
    bool skip = false;
    for (std::size_t k = 0; k < g.size() && !skip; ++k) {
      if (k == key.i || k == key.j) continue;
      const ModTerm& lk = g[k].front();
      if (lk.pos != key.pos || !lk.mono.divides(key.lcm)) continue;
      auto ik = std::minmax(key.i, k);
      auto jk = std::minmax(key.j, k);
      if (!pending.count({ik.first, ik.second}) && !pending.count({jk.first, jk.second})) skip = true;
    }
    if (skip) continue;
    ModVec r = red.normal_form(red.spoly(g[key.i], g[key.j]), g);
    if (!r.empty()) add_element(std::move(r));
  }

  // Minimalize: drop elements whose lead term is divisible by another's.
  std::vector<bool> keep(g.size(), true);
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = 0; j < g.size() && keep[i]; ++j) {
      if (i == j || !keep[j]) continue;
      const ModTerm& li = g[i].front();
      const ModTerm& lj = g[j].front();
      if (lj.pos == li.pos && lj.mono.divides(li.mono) && (!(lj.mono == li.mono) || j < i)) keep[i] = false;
    }
  }
  std::vector<ModVec> minimal;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (keep[i]) minimal.push_back(std::move(g[i]));
  }
  // Interreduce tails.
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    ModVec head{minimal[i].front()};
    ModVec tail(minimal[i].begin() + 1, minimal[i].end());
    ModVec reduced = red.normal_form(std::move(tail), minimal, i);
    head.insert(head.end(), reduced.begin(), reduced.end());
    minimal[i] = red.monic(std::move(head));
  }
  std::sort(minimal.begin(), minimal.end(),
            [&red](const ModVec& a, const ModVec& b) { return red.greater(b.front(), a.front()); });
  return minimal;
}

// ---- cache -------------------------------------------------------------

std::string term_key(const ModTerm& t) {
  std::string s = std::to_string(t.pos) + ":";
  for (std::size_t i = 0; i < t.mono.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(t.mono[i]);
  }
  return s + ":" + t.coeff.get_str();
}

std::string vec_key(const ModVec& v) {
  std::string s;
  for (const auto& t : v) s += term_key(t) + ";";
  return s;
}

ModVec parse_vec(const std::string& line, std::size_t nvars) {
  ModVec v;
  std::stringstream ss(line);
  std::string item;
  while (std::getline(ss, item, ';')) {
    if (item.empty()) continue;
    auto c1 = item.find(':');
    auto c2 = item.rfind(':');
    std::vector<int> exps;
    std::stringstream es(item.substr(c1 + 1, c2 - c1 - 1));
    std::string e;
    while (std::getline(es, e, ',')) exps.push_back(std::stoi(e));
    if (exps.size() != nvars) throw Error("corrupt Groebner cache entry");
    Scalar c(item.substr(c2 + 1));
    c.canonicalize();
    v.push_back({std::stoul(item.substr(0, c1)), Monomial(std::move(exps)), c});
  }
  return v;
}

struct Cache {
  std::mutex mu;
  std::unordered_map<std::string, GroebnerPtr> memory;
  std::filesystem::path dir;
};

Cache& cache() {
  static Cache c;
  return c;
}

std::filesystem::path disk_path(const std::filesystem::path& dir, const std::string& key) {
  std::ostringstream name;
  name << std::hex << std::hash<std::string>{}(key) << ".gb";
  return dir / name.str();
}

}  // namespace

void set_groebner_cache_directory(std::filesystem::path dir) {
  std::lock_guard lock(cache().mu);
  if (!dir.empty()) std::filesystem::create_directories(dir);
  cache().dir = std::move(dir);
}

void clear_groebner_cache() {
  std::lock_guard lock(cache().mu);
  cache().memory.clear();
}

std::size_t groebner_cache_size() {
  std::lock_guard lock(cache().mu);
  return cache().memory.size();
}

GroebnerBasis::GroebnerBasis(Ring ring, Ambient ambient, MonomialOrder order, std::vector<ModVec> elements)
    : ring_(std::move(ring)), ambient_(ambient), order_(order), elements_(std::move(elements)) {}

std::vector<FreeElement> GroebnerBasis::generators() const {
  std::vector<FreeElement> out;
  out.reserve(elements_.size());
  for (const auto& v : elements_) out.push_back(from_modvec(v, ring_, ambient_));
  return out;
}

FreeElement GroebnerBasis::normal_form(const FreeElement& f) const {
  if (!(f.ambient() == ambient_)) throw StructuralError("normal form in a different free module");
  Reducer red(ring_->field(), order_);
  return from_modvec(red.normal_form(to_modvec(f, red), elements_), ring_, ambient_);
}

Poly GroebnerBasis::normal_form(const Poly& f) const {
  if (ambient_.rank() != 1) throw StructuralError("polynomial normal form needs a rank-one basis");
  return normal_form(FreeElement(ambient_, {f}))[0];
}

bool GroebnerBasis::spairs_reduce_to_zero() const {
  Reducer red(ring_->field(), order_);
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    for (std::size_t j = i + 1; j < elements_.size(); ++j) {
      if (elements_[i].front().pos != elements_[j].front().pos) continue;
      if (!red.normal_form(red.spoly(elements_[i], elements_[j]), elements_).empty()) return false;
    }
  }
  return true;
}

bool GroebnerBasis::zero_dimensional() const {
  std::size_t n = ring_->nvars();
  std::vector<bool> pure(n, false);
  for (const auto& v : elements_) {
    const Monomial& m = v.front().mono;
    if (m.is_one()) return true;
    std::size_t support = 0, idx = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (m[i] > 0) {
        ++support;
        idx = i;
      }
    }
    if (support == 1) pure[idx] = true;
  }
  return std::all_of(pure.begin(), pure.end(), [](bool b) { return b; });
}

std::string GroebnerBasis::to_string() const {
  std::string s = "{";
  auto gens = generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i) s += ", ";
    s += ambient_.rank() == 1 ? gens[i][0].to_string() : gens[i].to_string();
  }
  return s + "}";
}

GroebnerPtr buchberger(const Ring& ring, Ambient ambient, std::span<const FreeElement> gens, MonomialOrder order,
                       int relation_positions) {
  Reducer red(ring->field(), order);
  const int rank = ambient.rank();
  const int rel_pos = relation_positions < 0 ? rank : std::min(relation_positions, rank);
  std::vector<ModVec> input;
  for (const auto& f : gens) {
    if (!(f.ambient() == ambient)) throw StructuralError("generator outside the ambient free module");
    ModVec v = to_modvec(f, red);
    if (!v.empty()) input.push_back(std::move(v));
  }
  for (int p = 0; p < rel_pos; ++p) {
    for (const auto& r : ring->relations()) {
      ModVec v;
      for (const auto& t : r.terms()) v.push_back({static_cast<std::size_t>(p), t.mono, t.coeff});
      input.push_back(std::move(v));
    }
  }

  std::string key = ring->to_string() + "|" + std::to_string(ambient.rank_f) + "," +
                    std::to_string(ambient.sym_degree) + "|" +
                    (order.module_rule == ModuleRule::position_over_term ? "pot" : "top") + "|" +
                    std::to_string(rel_pos) + "|";
  for (const auto& v : input) key += vec_key(v) + "#";

  Cache& c = cache();
  std::filesystem::path path;
  {
    std::lock_guard lock(c.mu);
    if (auto it = c.memory.find(key); it != c.memory.end()) return it->second;
    if (!c.dir.empty()) path = disk_path(c.dir, key);
  }
  if (!path.empty() && std::filesystem::exists(path)) {
    std::ifstream in(path);
    std::string stored_key;
    std::getline(in, stored_key);
    if (stored_key == key) {
      std::vector<ModVec> elements;
      std::string line;
      while (std::getline(in, line)) elements.push_back(parse_vec(line, ring->nvars()));
      auto gb = std::make_shared<const GroebnerBasis>(ring, ambient, order, std::move(elements));
      std::lock_guard lock(c.mu);
      c.memory.emplace(key, gb);
      return gb;
    }
  }

  auto gb = std::make_shared<const GroebnerBasis>(ring, ambient, order, run_buchberger(input, red, rank == 1));
  if (!path.empty()) {
    std::ofstream out(path);
    out << key << "\n";
    for (const auto& v : gb->elements()) out << vec_key(v) << "\n";
  }
  std::lock_guard lock(c.mu);
  c.memory.emplace(key, gb);
  return gb;
}

GroebnerPtr ideal_basis(const Ring& ring, std::span<const Poly> gens) {
  std::vector<FreeElement> elems;
  elems.reserve(gens.size());
  for (const auto& g : gens) elems.push_back(FreeElement::from_poly(g));
  return buchberger(ring, {1, 1}, elems);
}

Poly reduce_mod_relations(const Ring& ring, const Poly& f) {
  if (ring->relations().empty() || f.is_zero()) return f;
  return ideal_basis(ring, {})->normal_form(f);
}

bool member(const Ring& ring, const FreeElement& f, std::span<const FreeElement> gens) {
  return buchberger(ring, f.ambient(), gens)->reduces_to_zero(f);
}

bool ideal_member(const Ring& ring, const Poly& f, std::span<const Poly> gens) {
  return ideal_basis(ring, gens)->normal_form(f).is_zero();
}

SyzygyModule syzygies(const Ring& ring, Ambient ambient, std::span<const FreeElement> gens) {
  const int r = ambient.rank();
  const int n = static_cast<int>(gens.size());
  SyzygyModule out{n, {}};
  if (n == 0) return out;
  // Position-over-term on F + G with F's positions first: basis elements with
  // lead position in G have vanishing F-part and carry the relations.
  Ambient big{r + n, 1};
  std::vector<FreeElement> aug;
  aug.reserve(gens.size());
  for (int j = 0; j < n; ++j) {
    std::vector<Poly> comps = gens[static_cast<std::size_t>(j)].components();
    for (int k = 0; k < n; ++k) comps.push_back(k == j ? ring->one() : ring->zero());
    aug.emplace_back(big, std::move(comps));
  }
  auto gb = buchberger(ring, big, aug, MonomialOrder{ModuleRule::position_over_term}, r);
  Ambient g_amb{n, 1};
  for (const auto& v : gb->elements()) {
    if (v.front().pos < static_cast<std::size_t>(r)) continue;
    std::vector<Poly> comps;
    comps.reserve(static_cast<std::size_t>(n));
    bool nonzero = false;
    FreeElement full = from_modvec(v, ring, big);
    for (int k = 0; k < n; ++k) {
      Poly c = reduce_mod_relations(ring, full[static_cast<std::size_t>(r + k)]);
      nonzero = nonzero || !c.is_zero();
      comps.push_back(std::move(c));
    }
    if (nonzero) out.generators.emplace_back(g_amb, std::move(comps));
  }
  return out;
}

SyzygyModule ideal_syzygies(const Ring& ring, std::span<const Poly> gens) {
  std::vector<FreeElement> elems;
  for (const auto& g : gens) elems.push_back(FreeElement::from_poly(g));
  return syzygies(ring, {1, 1}, elems);
}

std::vector<Poly> module_quotient(const Ring& ring, std::span<const FreeElement> u_gens, const FreeElement& f) {
  std::vector<FreeElement> gens;
  gens.push_back(f);
  gens.insert(gens.end(), u_gens.begin(), u_gens.end());
  auto syz = syzygies(ring, f.ambient(), gens);
  std::vector<Poly> out;
  for (const auto& s : syz.generators) {
    if (!s[0].is_zero()) out.push_back(s[0]);
  }
  return out;
}

std::vector<Poly> ideal_quotient(const Ring& ring, std::span<const Poly> ideal, const Poly& f) {
  std::vector<FreeElement> u;
  for (const auto& g : ideal) u.push_back(FreeElement::from_poly(g));
  return module_quotient(ring, u, FreeElement::from_poly(f));
}

std::vector<Poly> quotient_by_max_ideal(const Ring& ring, std::span<const Poly> ideal) {
  const int d = static_cast<int>(ring->nvars());
  Ambient amb{d, 1};
  std::vector<Poly> vars;
  for (int i = 0; i < d; ++i) vars.push_back(ring->var(static_cast<std::size_t>(i)));
  FreeElement f(amb, vars);
  std::vector<FreeElement> u;
  for (int i = 0; i < d; ++i) {
    for (const auto& c : ideal) {
      std::vector<Poly> comps(static_cast<std::size_t>(d), ring->zero());
      comps[static_cast<std::size_t>(i)] = c;
      u.emplace_back(amb, std::move(comps));
    }
  }
  return module_quotient(ring, u, f);
}

bool ideal_has_unit(std::span<const Poly> gens) {
  return std::any_of(gens.begin(), gens.end(), [](const Poly& g) { return !g.in_max_ideal(); });
}

bool locally_member(const Ring& ring, const FreeElement& f, std::span<const FreeElement> gens) {
  if (member(ring, f, gens)) return true;
  return ideal_has_unit(module_quotient(ring, gens, f));
}

bool locally_finite_colength(const Ring& ring, std::span<const Poly> ideal) {
  if (ideal_has_unit(ideal)) return true;
  auto gb = ideal_basis(ring, ideal);
  if (gb->zero_dimensional()) return true;
  // Saturate by m; the result avoids m exactly when m is an isolated point
  // of V(C).
  std::vector<Poly> current(ideal.begin(), ideal.end());
  auto current_gb = gb;
  for (int step = 0; step < 256; ++step) {
    std::vector<Poly> next = quotient_by_max_ideal(ring, current);
    if (ideal_has_unit(next)) return true;
    auto next_gb = ideal_basis(ring, next);
    if (next_gb->elements().size() == current_gb->elements().size() &&
        next_gb->to_string() == current_gb->to_string()) {
      return false;
    }
    current = std::move(next);
    current_gb = next_gb;
  }
  throw ResourceError("saturation did not stabilize");
}

int krull_dimension(const Ring& ring) {
  auto gb = ideal_basis(ring, {});
  const std::size_t n = ring->nvars();
  std::vector<Monomial> leads;
  for (const auto& v : gb->elements()) leads.push_back(v.front().mono);
  int best = 0;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    int size = __builtin_popcount(mask);
    if (size <= best) continue;
    bool independent = true;
    for (const auto& m : leads) {
      bool inside = true;
      for (std::size_t i = 0; i < n; ++i) {
        if (m[i] > 0 && !(mask & (1u << i))) inside = false;
      }
      if (inside) {
        independent = false;
        break;
      }
    }
    if (independent) best = size;
  }
  return best;
}

}  // namespace socmod
