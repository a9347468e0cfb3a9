#pragma once

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "socmod/errors.hpp"

namespace socmod::script {

struct SourcePos {
  int line = 1;
  int col = 1;
};

class ParseError : public Error {
 public:
  ParseError(SourcePos pos, const std::string& message, std::set<std::string> expected = {});
  SourcePos pos;
  std::set<std::string> expected;
};

// Polynomials are kept as source text; the ring parses them at run time.
using Row = std::vector<std::string>;

struct RingDecl {
  std::string name;
  std::optional<unsigned> prime;  // GF(p); empty for QQ
  std::vector<std::string> vars;
  std::vector<std::string> relations;
  bool cm = false;
  bool operator==(const RingDecl&) const = default;
};

struct IdealDecl {
  std::string name, ring;
  Row gens;
  bool operator==(const IdealDecl&) const = default;
};

struct MatrixDecl {
  std::string name, ring;
  std::vector<Row> rows;
  bool operator==(const MatrixDecl&) const = default;
};

struct ModuleDecl {
  enum class Source { cols_literal, cols_ref, gens };
  std::string name, ring;
  int rank = 1;
  Source source = Source::cols_literal;
  std::vector<Row> rows;  // matrix rows, or one Row per generator for gens
  std::string matrix;     // cols_ref
  bool operator==(const ModuleDecl&) const = default;
};

// check CLAIM TARGET [with M] [gens [...]] [delta (...)];
struct CheckStmt {
  std::string claim, target;
  std::string with;
  std::vector<Row> elems;
  std::optional<Row> delta;
  bool operator==(const CheckStmt&) const = default;
};

// compute OP [INT] TARGET;
struct ComputeStmt {
  std::string op, target;
  int arg = 0;
  bool operator==(const ComputeStmt&) const = default;
};

// expect VERDICT; | expect KEY = VALUE; | expect equals NAME;
struct ExpectStmt {
  enum class Kind { verdict, field, equals };
  Kind kind = Kind::verdict;
  std::string word;   // verdict, dotted key, or module name
  std::string value;  // JSON text for Kind::field
  bool operator==(const ExpectStmt&) const = default;
};

using Node = std::variant<RingDecl, IdealDecl, MatrixDecl, ModuleDecl, CheckStmt, ComputeStmt, ExpectStmt>;

struct Statement {
  SourcePos pos;
  Node node;
  bool operator==(const Statement& o) const { return node == o.node; }
};

struct Script {
  std::vector<Statement> statements;
  bool operator==(const Script&) const = default;
};

extern const std::set<std::string> kClaims;
extern const std::set<std::string> kComputeOps;
extern const std::set<std::string> kVerdicts;

// Syntax plus name resolution: every reference must be declared earlier
// with the right kind.
Script parse_script(std::string_view text);
std::string print_script(const Script& s);
std::string print_statement(const Statement& s);

}  // namespace socmod::script
