#include "socmod/script.hpp"

#include <cctype>
#include <map>
#include <sstream>

#include <json.hpp>

namespace socmod::script {

namespace {

std::string describe(SourcePos pos, const std::string& message, const std::set<std::string>& expected) {
  std::ostringstream out;
  out << pos.line << ":" << pos.col << ": " << message;
  if (!expected.empty()) {
    out << " (expected ";
    bool first = true;
    for (const auto& e : expected) {
      out << (first ? "" : ", ") << e;
      first = false;
    }
    out << ")";
  }
  return out.str();
}

}  // namespace

ParseError::ParseError(SourcePos p, const std::string& message, std::set<std::string> exp)
    : Error(describe(p, message, exp)), pos(p), expected(std::move(exp)) {}

const std::set<std::string> kClaims{"rn1",        "perfect", "prop23", "cor25", "param",  "thm51",
                                    "socle-mult", "lemma43", "cor53",  "closed", "rees-cm"};
const std::set<std::string> kComputeOps{"socle",      "colength", "mingens", "fitting",
                                        "resolve",    "dual-image", "closure", "socdim"};
const std::set<std::string> kVerdicts{"holds", "fails", "hypothesis-not-met", "undecided", "computed", "error"};

namespace {

enum class Kind { ring, ideal, matrix, module };

std::string kind_name(Kind k) {
  switch (k) {
    case Kind::ring: return "ring";
    case Kind::ideal: return "ideal";
    case Kind::matrix: return "matrix";
    case Kind::module: return "module";
  }
  return "?";
}

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

class Parser {
 public:
  explicit Parser(std::string_view text) : s_(text) {}

  Script run() {
    Script out;
    for (;;) {
      skip();
      if (eof()) break;
      out.statements.push_back(statement());
    }
    return out;
  }

 private:
  std::string_view s_;
  std::size_t i_ = 0;
  SourcePos pos_;
  std::map<std::string, std::pair<Kind, std::string>> names_;  // name -> kind, ring
  bool can_expect_ = false;

  bool eof() const { return i_ >= s_.size(); }
  char peek() const { return eof() ? '\0' : s_[i_]; }

  void advance() {
    if (s_[i_] == '\n') {
      ++pos_.line;
      pos_.col = 1;
    } else if ((static_cast<unsigned char>(s_[i_]) & 0xC0) != 0x80) {
      ++pos_.col;  // count code points, not UTF-8 continuation bytes
    }
    ++i_;
  }

  void skip() {
    while (!eof()) {
      if (std::isspace(static_cast<unsigned char>(peek()))) {
        advance();
      } else if (peek() == '#') {
        while (!eof() && peek() != '\n') advance();
      } else {
        break;
      }
    }
  }

  [[noreturn]] void fail(const std::string& msg, std::set<std::string> expected = {}) {
    throw ParseError(pos_, msg, std::move(expected));
  }

  std::string found() const {
    if (eof()) return "end of input";
    return "'" + std::string(1, peek()) + "'";
  }

  void expect_char(char c) {
    skip();
    if (peek() != c) fail("unexpected " + found(), {"'" + std::string(1, c) + "'"});
    advance();
  }

  bool accept_char(char c) {
    skip();
    if (peek() != c) return false;
    advance();
    return true;
  }

  // Identifier; `dashed` also admits inner '-' (claim and verdict words).
  std::string word(bool dashed, const char* what) {
    skip();
    if (!ident_start(peek())) fail("unexpected " + found(), {what});
    std::string out;
    while (!eof() && (ident_char(peek()) || (dashed && peek() == '-' && i_ + 1 < s_.size() && ident_start(s_[i_ + 1])))) {
      out.push_back(peek());
      advance();
    }
    return out;
  }

  std::string name() { return word(false, "name"); }

  // Object key or array index inside a dotted result key.
  std::string key_segment() {
    if (!ident_char(peek())) fail("unexpected " + found(), {"key"});
    std::string out;
    while (!eof() && ident_char(peek())) {
      out.push_back(peek());
      advance();
    }
    return out;
  }

  void keyword(const std::string& kw) {
    SourcePos at = (skip(), pos_);
    std::size_t save = i_;
    if (!ident_start(peek()) || word(false, "keyword") != kw) {
      i_ = save;
      pos_ = at;
      fail("unexpected " + found(), {"'" + kw + "'"});
    }
  }

  bool accept_keyword(const std::string& kw) {
    skip();
    std::size_t save = i_;
    SourcePos at = pos_;
    if (!ident_start(peek())) return false;
    if (word(false, "keyword") == kw) return true;
    i_ = save;
    pos_ = at;
    return false;
  }

  int integer() {
    skip();
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("unexpected " + found(), {"integer"});
    std::string digits;
    while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) {
      digits.push_back(peek());
      advance();
    }
    if (digits.size() > 9) fail("integer too large");
    return std::stoi(digits);
  }

  // Raw polynomial text up to a top-level ',', ')', ']' or ';'.
  std::string poly() {
    skip();
    SourcePos at = pos_;
    std::string out;
    int depth = 0;
    while (!eof()) {
      char c = peek();
      if (depth == 0 && (c == ',' || c == ')' || c == ']' || c == ';')) break;
      if (c == '#' || c == '\n') break;
      if (c == '(') ++depth;
      if (c == ')') --depth;
      out.push_back(c);
      advance();
    }
    while (!out.empty() && std::isspace(static_cast<unsigned char>(out.back()))) out.pop_back();
    if (out.empty()) throw ParseError(at, "unexpected " + found(), {"polynomial"});
    return out;
  }

  Row poly_list(char open, char close, bool allow_empty) {
    expect_char(open);
    Row out;
    if (allow_empty && accept_char(close)) return out;
    do {
      out.push_back(poly());
    } while (accept_char(','));
    expect_char(close);
    return out;
  }

  std::vector<Row> matrix_literal() {
    expect_char('[');
    std::vector<Row> rows;
    do {
      rows.push_back(poly_list('[', ']', false));
    } while (accept_char(','));
    expect_char(']');
    return rows;
  }

  std::vector<Row> element_list() {
    expect_char('[');
    std::vector<Row> out;
    if (accept_char(']')) return out;
    do {
      out.push_back(poly_list('(', ')', false));
    } while (accept_char(','));
    expect_char(']');
    return out;
  }

  void declare(SourcePos at, const std::string& n, Kind k, const std::string& ring) {
    if (names_.count(n)) throw ParseError(at, "name '" + n + "' is already declared");
    names_[n] = {k, ring};
  }

  std::string reference(std::initializer_list<Kind> kinds) {
    skip();
    SourcePos at = pos_;
    std::string n = name();
    auto it = names_.find(n);
    if (it == names_.end()) throw ParseError(at, "undeclared name '" + n + "'");
    for (Kind k : kinds) {
      if (it->second.first == k) return n;
    }
    std::set<std::string> want;
    for (Kind k : kinds) want.insert(kind_name(k));
    throw ParseError(at, "'" + n + "' is a " + kind_name(it->second.first), want);
  }

  std::string ring_of(const std::string& n) { return names_.at(n).second; }

  Statement statement() {
    skip();
    Statement st;
    st.pos = pos_;
    std::string kw = word(false, "statement");
    bool expectable = false;
    if (kw == "ring") {
      st.node = ring_decl(st.pos);
    } else if (kw == "ideal") {
      IdealDecl d;
      SourcePos at = (skip(), pos_);
      d.name = name();
      keyword("in");
      d.ring = reference({Kind::ring});
      expect_char('=');
      d.gens = poly_list('(', ')', true);
      declare(at, d.name, Kind::ideal, d.ring);
      st.node = d;
    } else if (kw == "matrix") {
      MatrixDecl d;
      SourcePos at = (skip(), pos_);
      d.name = name();
      keyword("in");
      d.ring = reference({Kind::ring});
      expect_char('=');
      d.rows = matrix_literal();
      declare(at, d.name, Kind::matrix, d.ring);
      st.node = d;
    } else if (kw == "module") {
      st.node = module_decl();
    } else if (kw == "check") {
      st.node = check_stmt();
      expectable = true;
    } else if (kw == "compute") {
      st.node = compute_stmt();
      expectable = true;
    } else if (kw == "expect") {
      if (!can_expect_) throw ParseError(st.pos, "'expect' must follow a check or compute statement");
      st.node = expect_stmt();
      expectable = true;
    } else {
      throw ParseError(st.pos, "unknown statement '" + kw + "'",
                       {"'check'", "'compute'", "'expect'", "'ideal'", "'matrix'", "'module'", "'ring'"});
    }
    expect_char(';');
    can_expect_ = expectable;
    return st;
  }

  RingDecl ring_decl(SourcePos) {
    RingDecl d;
    SourcePos at = (skip(), pos_);
    d.name = name();
    expect_char('=');
    skip();
    SourcePos fpos = pos_;
    std::string f = word(false, "field");
    if (f == "GF") {
      expect_char('(');
      SourcePos ppos = (skip(), pos_);
      int p = integer();
      if (p < 2) throw ParseError(ppos, "characteristic must be a prime");
      d.prime = static_cast<unsigned>(p);
      expect_char(')');
    } else if (f != "QQ") {
      throw ParseError(fpos, "unknown field '" + f + "'", {"'GF'", "'QQ'"});
    }
    expect_char('[');
    do {
      d.vars.push_back(name());
    } while (accept_char(','));
    expect_char(']');
    if (accept_char('/')) d.relations = poly_list('(', ')', false);
    d.cm = accept_keyword("cm");
    declare(at, d.name, Kind::ring, d.name);
    return d;
  }

  ModuleDecl module_decl() {
    ModuleDecl d;
    SourcePos at = (skip(), pos_);
    d.name = name();
    keyword("in");
    d.ring = reference({Kind::ring});
    expect_char('^');
    d.rank = integer();
    if (d.rank < 1) fail("rank must be positive");
    expect_char('=');
    skip();
    SourcePos src = pos_;
    std::string how = word(false, "'cols' or 'gens'");
    if (how == "cols") {
      skip();
      if (peek() == '[') {
        d.source = ModuleDecl::Source::cols_literal;
        d.rows = matrix_literal();
      } else {
        SourcePos mpos = pos_;
        d.source = ModuleDecl::Source::cols_ref;
        d.matrix = reference({Kind::matrix});
        if (ring_of(d.matrix) != d.ring) throw ParseError(mpos, "matrix '" + d.matrix + "' is over another ring");
      }
    } else if (how == "gens") {
      d.source = ModuleDecl::Source::gens;
      d.rows = element_list();
    } else {
      throw ParseError(src, "unexpected '" + how + "'", {"'cols'", "'gens'"});
    }
    declare(at, d.name, Kind::module, d.ring);
    return d;
  }

  CheckStmt check_stmt() {
    CheckStmt c;
    skip();
    SourcePos at = pos_;
    c.claim = word(true, "claim");
    if (!kClaims.count(c.claim)) throw ParseError(at, "unknown claim '" + c.claim + "'", kClaims);
    skip();
    SourcePos tpos = pos_;
    if (c.claim == "cor53") {
      c.target = reference({Kind::ideal});
    } else {
      c.target = reference({Kind::module, Kind::ideal});
    }
    if (accept_keyword("with")) {
      skip();
      SourcePos wpos = pos_;
      if (c.claim != "rn1") throw ParseError(wpos, "'with' applies to rn1 only");
      c.with = reference({Kind::module, Kind::ideal});
      if (ring_of(c.with) != ring_of(c.target)) throw ParseError(wpos, "'" + c.with + "' is over another ring");
    }
    if (c.claim == "lemma43") {
      keyword("gens");
      c.elems = element_list();
      if (c.elems.empty()) throw ParseError(tpos, "lemma43 needs at least one generator of V");
      if (accept_keyword("delta")) c.delta = poly_list('(', ')', false);
    }
    return c;
  }

  ComputeStmt compute_stmt() {
    ComputeStmt c;
    skip();
    SourcePos at = pos_;
    c.op = word(true, "operation");
    if (!kComputeOps.count(c.op)) throw ParseError(at, "unknown operation '" + c.op + "'", kComputeOps);
    if (c.op == "fitting") c.arg = integer();
    if (c.op == "dual-image" || c.op == "closure") {
      c.target = reference({Kind::ideal});
    } else {
      c.target = reference({Kind::module, Kind::ideal});
    }
    return c;
  }

  ExpectStmt expect_stmt() {
    ExpectStmt e;
    skip();
    SourcePos at = pos_;
    std::size_t save = i_;
    std::string w = word(true, "verdict or key");
    skip();
    if (w == "equals" && ident_start(peek())) {
      e.kind = ExpectStmt::Kind::equals;
      e.word = reference({Kind::module, Kind::ideal});
      return e;
    }
    if (peek() == '=' || peek() == '.') {
      // Dotted result key.
      i_ = save;
      pos_ = at;
      std::string key = name();
      while (accept_char('.')) key += "." + key_segment();
      e.kind = ExpectStmt::Kind::field;
      e.word = key;
      expect_char('=');
      skip();
      SourcePos vpos = pos_;
      std::string raw;
      int depth = 0;
      bool in_str = false;
      while (!eof() && (in_str || depth > 0 || peek() != ';')) {
        char c = peek();
        if (c == '"' && (raw.empty() || raw.back() != '\\')) in_str = !in_str;
        if (!in_str && (c == '[' || c == '{')) ++depth;
        if (!in_str && (c == ']' || c == '}')) --depth;
        if (!in_str && c == '\n') break;
        raw.push_back(c);
        advance();
      }
      auto v = nlohmann::json::parse(raw, nullptr, false);
      if (v.is_discarded()) throw ParseError(vpos, "malformed value", {"JSON literal"});
      e.value = v.dump();
      return e;
    }
    if (!kVerdicts.count(w)) throw ParseError(at, "unknown verdict '" + w + "'", kVerdicts);
    e.kind = ExpectStmt::Kind::verdict;
    e.word = w;
    return e;
  }
};

std::string join(const Row& r, const char* sep = ", ") {
  std::string out;
  for (std::size_t i = 0; i < r.size(); ++i) out += (i ? sep : "") + r[i];
  return out;
}

std::string rows_text(const std::vector<Row>& rows) {
  std::string out = "[";
  for (std::size_t i = 0; i < rows.size(); ++i) out += (i ? ", [" : "[") + join(rows[i]) + "]";
  return out + "]";
}

std::string elems_text(const std::vector<Row>& rows) {
  std::string out = "[";
  for (std::size_t i = 0; i < rows.size(); ++i) out += (i ? ", (" : "(") + join(rows[i]) + ")";
  return out + "]";
}

struct Printer {
  std::string operator()(const RingDecl& d) const {
    std::string out = "ring " + d.name + " = " + (d.prime ? "GF(" + std::to_string(*d.prime) + ")" : "QQ") + "[" +
                      join(d.vars, ",") + "]";
    if (!d.relations.empty()) out += " / (" + join(d.relations) + ")";
    if (d.cm) out += " cm";
    return out + ";";
  }
  std::string operator()(const IdealDecl& d) const {
    return "ideal " + d.name + " in " + d.ring + " = (" + join(d.gens) + ");";
  }
  std::string operator()(const MatrixDecl& d) const {
    return "matrix " + d.name + " in " + d.ring + " = " + rows_text(d.rows) + ";";
  }
  std::string operator()(const ModuleDecl& d) const {
    std::string out = "module " + d.name + " in " + d.ring + "^" + std::to_string(d.rank) + " = ";
    switch (d.source) {
      case ModuleDecl::Source::cols_literal: out += "cols " + rows_text(d.rows); break;
      case ModuleDecl::Source::cols_ref: out += "cols " + d.matrix; break;
      case ModuleDecl::Source::gens: out += "gens " + elems_text(d.rows); break;
    }
    return out + ";";
  }
  std::string operator()(const CheckStmt& c) const {
    std::string out = "check " + c.claim + " " + c.target;
    if (!c.with.empty()) out += " with " + c.with;
    if (!c.elems.empty()) out += " gens " + elems_text(c.elems);
    if (c.delta) out += " delta (" + join(*c.delta) + ")";
    return out + ";";
  }
  std::string operator()(const ComputeStmt& c) const {
    std::string out = "compute " + c.op;
    if (c.op == "fitting") out += " " + std::to_string(c.arg);
    return out + " " + c.target + ";";
  }
  std::string operator()(const ExpectStmt& e) const {
    switch (e.kind) {
      case ExpectStmt::Kind::verdict: return "expect " + e.word + ";";
      case ExpectStmt::Kind::equals: return "expect equals " + e.word + ";";
      case ExpectStmt::Kind::field: return "expect " + e.word + " = " + e.value + ";";
    }
    return "";
  }
};

}  // namespace

Script parse_script(std::string_view text) { return Parser(text).run(); }

std::string print_statement(const Statement& s) { return std::visit(Printer{}, s.node); }

std::string print_script(const Script& s) {
  std::string out;
  for (const auto& st : s.statements) {
    if (std::holds_alternative<ExpectStmt>(st.node)) out += "  ";
    out += print_statement(st) + "\n";
  }
  return out;
}

}  // namespace socmod::script
