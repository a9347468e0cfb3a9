#include "socmod/session.hpp"

#include <chrono>

#include "socmod/artinian.hpp"
#include "socmod/errors.hpp"
#include "socmod/homology.hpp"
#include "socmod/theorems.hpp"

namespace socmod {

using nlohmann::json;
using namespace script;

namespace {

struct Binding {
  Ring ring;
  std::vector<Poly> ideal;  // ideals only
  std::optional<PolyMatrix> matrix;
  Module module;
};

json empty_certificates() {
  return {{"K", nullptr}, {"colengths", json::object()}, {"mu", json::object()}, {"witnesses", json::array()}};
}

json report_json(const ClaimReport& r) {
  json cert = empty_certificates();
  for (auto it = r.certificates.begin(); it != r.certificates.end(); ++it) cert[it.key()] = it.value();
  return {{"verdict", to_string(r.verdict)}, {"certificates", cert}, {"result", r.result}, {"notes", r.notes}};
}

std::vector<std::string> strings(const std::vector<Poly>& v) {
  std::vector<std::string> out;
  for (const auto& p : v) out.push_back(p.to_string());
  return out;
}

const json* lookup(const json& report, const std::string& dotted) {
  auto walk = [&](const json* node) -> const json* {
    std::size_t start = 0;
    while (node) {
      std::size_t dot = dotted.find('.', start);
      std::string key = dotted.substr(start, dot == std::string::npos ? std::string::npos : dot - start);
      if (node->is_array() && !key.empty() && key.find_first_not_of("0123456789") == std::string::npos) {
        std::size_t idx = std::stoul(key);
        if (idx >= node->size()) return nullptr;
        node = &(*node)[idx];
      } else if (node->is_object() && node->contains(key)) {
        node = &(*node)[key];
      } else {
        return nullptr;
      }
      if (dot == std::string::npos) return node;
      start = dot + 1;
    }
    return nullptr;
  };
  for (const char* root : {"result", "certificates"}) {
    if (const json* hit = walk(&report[root])) return hit;
  }
  return walk(&report);
}

class Session {
 public:
  explicit Session(const SessionConfig& cfg) : cfg_(cfg) {}

  RunResult run(const Script& s) {
    RunResult out;
    TruncPolicy saved = trunc_policy();
    set_trunc_policy({cfg_.trunc_level, cfg_.trunc_cap});
    bool errored = false, mismatched = false;
    std::optional<std::size_t> last;
    for (std::size_t si = 0; si < s.statements.size(); ++si) {
      const Statement& st = s.statements[si];
      if (const auto* e = std::get_if<ExpectStmt>(&st.node)) {
        if (!last) continue;
        json& rep = out.reports[*last];
        bool met = check_expectation(*e, rep);
        rep["expectations"].push_back(
            {{"expect", print_statement(st)}, {"on_verdict", e->kind == ExpectStmt::Kind::verdict}, {"met", met}});
        if (!met) mismatched = true;
        if (!met && cfg_.fail_fast) break;
        continue;
      }
      auto t0 = std::chrono::steady_clock::now();
      json rep;
      bool emits = std::holds_alternative<CheckStmt>(st.node) || std::holds_alternative<ComputeStmt>(st.node);
      if (emits) last_module_.reset();
      try {
        rep = std::visit([&](const auto& node) { return exec(node); }, st.node);
      } catch (const std::exception& ex) {
        rep = {{"verdict", "error"}, {"certificates", empty_certificates()}, {"result", json::object()},
               {"notes", {ex.what()}}};
        emits = true;
      }
      if (!emits) continue;
      long ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
      json full = {{"command", print_statement(st)},
                   {"line", st.pos.line},
                   {"inputs", rep.value("inputs", json::object())},
                   {"verdict", rep["verdict"]},
                   {"certificates", rep["certificates"]},
                   {"result", rep["result"]},
                   {"notes", rep["notes"]},
                   {"expectations", json::array()},
                   {"elapsed_ms", cfg_.deterministic ? 0 : ms}};
      out.reports.push_back(std::move(full));
      last = out.reports.size() - 1;
      if (full_error(out.reports.back())) {
        errored = true;
        if (cfg_.fail_fast) break;
      }
    }
    // Unannotated checks must not fail.
    for (auto& rep : out.reports) {
      bool has_verdict_expect = false;
      for (const auto& e : rep["expectations"]) {
        has_verdict_expect = has_verdict_expect || e["on_verdict"].get<bool>();
      }
      if (!has_verdict_expect && rep["verdict"] == "fails") mismatched = true;
    }
    set_trunc_policy(saved);
    out.exit_code = errored ? 2 : mismatched ? 1 : 0;
    return out;
  }

  std::vector<std::pair<std::string, Module>> declarations(const Script& s) {
    std::vector<std::pair<std::string, Module>> out;
    for (const auto& st : s.statements) {
      std::string name = std::visit(
          [](const auto& n) -> std::string {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, IdealDecl> || std::is_same_v<T, MatrixDecl> ||
                          std::is_same_v<T, ModuleDecl> || std::is_same_v<T, RingDecl>) {
              return n.name;
            } else {
              return "";
            }
          },
          st.node);
      if (name.empty()) continue;
      try {
        std::visit([&](const auto& node) { return exec(node); }, st.node);
      } catch (const Error&) {
        continue;
      }
      if (env_[name].module) out.emplace_back(name, env_[name].module);
    }
    return out;
  }

 private:
  const SessionConfig& cfg_;
  std::map<std::string, Binding> env_;

  static bool full_error(const json& rep) { return rep["verdict"] == "error"; }

  const Binding& get(const std::string& name) {
    auto it = env_.find(name);
    if (it == env_.end()) throw StructuralError("binding '" + name + "' is unavailable after an earlier error");
    return it->second;
  }

  std::vector<Poly> parse_all(const Ring& ring, const Row& row) {
    std::vector<Poly> out;
    for (const auto& t : row) out.push_back(ring->parse(t));
    return out;
  }

  PolyMatrix matrix_of(const Ring& ring, const std::vector<Row>& rows) {
    std::vector<std::vector<Poly>> e;
    for (const auto& r : rows) e.push_back(parse_all(ring, r));
    return PolyMatrix(ring, std::move(e));
  }

  std::vector<FreeElement> elements(const Ring& ring, int rank, const std::vector<Row>& rows) {
    std::vector<FreeElement> out;
    for (const auto& r : rows) {
      if (static_cast<int>(r.size()) != rank) {
        throw StructuralError("element has " + std::to_string(r.size()) + " components, expected " +
                              std::to_string(rank));
      }
      out.emplace_back(Ambient{rank, 1}, parse_all(ring, r));
    }
    return out;
  }

  json exec(const RingDecl& d) {
    Field f = cfg_.field ? *cfg_.field : d.prime ? Field::prime(*d.prime) : Field::rationals();
    env_[d.name] = {make_ring(f, d.vars, d.relations, d.cm), {}, std::nullopt, nullptr};
    return {};
  }

  json exec(const IdealDecl& d) {
    const Ring& ring = get(d.ring).ring;
    auto gens = parse_all(ring, d.gens);
    env_[d.name] = {ring, gens, std::nullopt, make_ideal(ring, gens)};
    return {};
  }

  json exec(const MatrixDecl& d) {
    const Ring& ring = get(d.ring).ring;
    auto m = matrix_of(ring, d.rows);
    env_[d.name] = {ring, {}, m, columns_to_module(m)};
    return {};
  }

  json exec(const ModuleDecl& d) {
    const Ring& ring = get(d.ring).ring;
    Module m;
    switch (d.source) {
      case ModuleDecl::Source::cols_literal:
      case ModuleDecl::Source::cols_ref: {
        PolyMatrix mat = d.source == ModuleDecl::Source::cols_ref ? *get(d.matrix).matrix : matrix_of(ring, d.rows);
        if (static_cast<int>(mat.rows()) != d.rank) {
          throw StructuralError("matrix has " + std::to_string(mat.rows()) + " rows, expected " + std::to_string(d.rank));
        }
        m = columns_to_module(mat);
        break;
      }
      case ModuleDecl::Source::gens:
        m = make_module(ring, {d.rank, 1}, elements(ring, d.rank, d.rows));
        break;
    }
    env_[d.name] = {ring, {}, std::nullopt, m};
    return {};
  }

  json inputs(const std::string& name) {
    const Binding& b = get(name);
    return {{"ring", b.ring->to_string()}, {name, b.module->to_string()}};
  }

  json exec(const CheckStmt& c) {
    const Binding& b = get(c.target);
    const Module& n = b.module;
    json in = inputs(c.target);
    ClaimReport r;
    if (c.claim == "rn1") {
      std::optional<Module> m;
      if (!c.with.empty()) {
        m = get(c.with).module;
        in[c.with] = (*m)->to_string();
      }
      r = check_rn1(n, m);
    } else if (c.claim == "perfect") {
      r.claim = "perfect";
      try {
        auto p = is_perfect_matrix(n->matrix());
        r.result = {{"proper", p.proper}, {"grade", p.grade}, {"bound", p.bound}, {"perfect", p.perfect}};
        r.verdict = p.perfect ? Verdict::holds : Verdict::fails;
      } catch (const DomainError& e) {
        r.verdict = Verdict::hypothesis_not_met;
        r.notes.push_back(e.what());
      }
    } else if (c.claim == "prop23") {
      r = check_prop23(n, 8, cfg_.seed);
    } else if (c.claim == "cor25") {
      r = check_cor25(n);
    } else if (c.claim == "param") {
      r.claim = "param";
      auto p = is_parameter_module(*n);
      r.result = {{"colength", p.colength ? json(*p.colength) : json(nullptr)},
                  {"mu", p.mu},
                  {"d", p.d},
                  {"r", p.r},
                  {"bound", p.bound},
                  {"parameter", p.is_parameter}};
      if (p.analytic_spread) r.result["analytic_spread"] = *p.analytic_spread;
      if (p.colength) r.certificates["colengths"] = {{"F/N", *p.colength}};
      r.certificates["mu"] = {{"N", p.mu}};
      r.verdict = p.is_parameter ? Verdict::holds : Verdict::fails;
    } else if (c.claim == "thm51") {
      r = theorem51_report(n);
    } else if (c.claim == "socle-mult") {
      r = check_socle_multiplier(n);
    } else if (c.claim == "lemma43") {
      auto xs = elements(b.ring, n->ambient().rank_f, c.elems);
      std::optional<FreeElement> delta;
      if (c.delta) delta = elements(b.ring, n->ambient().rank_f, {*c.delta}).front();
      r = lemma43_witness(n, xs, delta);
    } else if (c.claim == "cor53") {
      r = cor53_report(b.ring, b.ideal);
    } else if (c.claim == "closed") {
      r = check_integrally_closed(n);
    } else if (c.claim == "rees-cm") {
      r = check_rees_cm(n);
    }
    json out = report_json(r);
    out["inputs"] = in;
    return out;
  }

  json exec(const ComputeStmt& c) {
    const Binding& b = get(c.target);
    const Module& n = b.module;
    ClaimReport r;
    r.claim = c.op;
    r.verdict = Verdict::computed;
    if (c.op == "socle") {
      Module m = colon_socle_trunc(*n);
      r.result = {{"M", m->to_string()}, {"soc_dim", soc_dim(*n)}};
      r.certificates["K"] = working_level(*n);
      r.certificates["colengths"] = {{"F/N", colength_trunc(*n)}, {"F/M", colength_trunc(*m)}};
      r.certificates["mu"] = {{"M", mingens(*m)}};
      last_module_ = m;
    } else if (c.op == "colength") {
      auto len = colength(*n);
      r.result["value"] = len ? json(*len) : json("infinite");
      if (len) r.certificates["K"] = working_level(*n);
    } else if (c.op == "mingens") {
      r.result["value"] = mingens(*n);
    } else if (c.op == "fitting") {
      if (c.arg < 0) throw DomainError("fitting index must be non-negative");
      auto mat = n->matrix();
      // Fitt_j(F/N) = I_{r-j}(N).
      long t = static_cast<long>(mat.rows()) - c.arg;
      std::vector<Poly> gens;
      if (t <= 0) {
        gens = {b.ring->one()};
      } else if (t > static_cast<long>(mat.cols())) {
        gens = {};
      } else {
        gens = fitting_ideal(mat, static_cast<std::size_t>(t))->ideal_generators();
      }
      r.result["generators"] = strings(gens);
    } else if (c.op == "resolve") {
      auto res = minimal_free_resolution(n->matrix());
      std::vector<std::string> maps;
      for (const auto& d : res.complex.maps) maps.push_back(d.to_string());
      r.result = {{"betti", res.betti}, {"maps", maps}, {"partial", res.partial}};
    } else if (c.op == "dual-image") {
      auto rep = dual_image_module(b.ring, b.ideal);
      r.result = {{"betti", rep.resolution.betti}, {"phi", rep.phi.to_string()}, {"N", rep.n->to_string()},
                  {"n", rep.n_gens},  {"mu", rep.parameter.mu},         {"parameter", rep.parameter.is_parameter}};
      if (rep.below_three) r.notes.push_back("n < 3");
      last_module_ = rep.n;
    } else if (c.op == "closure") {
      std::vector<NewtonEdge> edges;
      try {
        auto cl = monomial_integral_closure(b.ring, b.ideal, &edges);
        r.result["closure"] = strings(cl);
        json e = json::array();
        for (const auto& ed : edges) e.push_back({ed.p, ed.q, ed.c});
        r.certificates["witnesses"] = e;
        auto closed = integrally_closed(*n);
        if (closed) r.result["closed"] = *closed;
      } catch (const DomainError& e) {
        r.verdict = Verdict::undecided;
        r.notes.push_back(e.what());
      }
    } else if (c.op == "socdim") {
      r.result["value"] = soc_dim(*n);
      r.certificates["K"] = working_level(*n);
    }
    json out = report_json(r);
    out["inputs"] = inputs(c.target);
    return out;
  }

  json exec(const ExpectStmt&) { return {}; }

  // Module result (socle, dual image) of the last report; `expect equals` compares against it.
  std::optional<Module> last_module_;

  bool check_expectation(const ExpectStmt& e, const json& rep) {
    switch (e.kind) {
      case ExpectStmt::Kind::verdict:
        return rep["verdict"] == e.word;
      case ExpectStmt::Kind::field: {
        const json* v = lookup(rep, e.word);
        return v && *v == json::parse(e.value);
      }
      case ExpectStmt::Kind::equals: {
        if (!last_module_) return false;
        auto it = env_.find(e.word);
        if (it == env_.end()) return false;
        try {
          return subspace_equal(**last_module_, *it->second.module);
        } catch (const Error&) {
          return false;
        }
      }
    }
    return false;
  }
};

}  // namespace

RunResult run_script(const Script& s, const SessionConfig& cfg) { return Session(cfg).run(s); }

std::vector<std::pair<std::string, Module>> declared_modules(const Script& s, const SessionConfig& cfg) {
  return Session(cfg).declarations(s);
}

RunResult run_text(std::string_view text, const SessionConfig& cfg) {
  try {
    return run_script(parse_script(text), cfg);
  } catch (const ParseError& e) {
    RunResult r;
    r.exit_code = 2;
    r.parse_error = e.what();
    return r;
  }
}

}  // namespace socmod
