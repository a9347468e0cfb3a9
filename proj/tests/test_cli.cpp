#include <doctest.h>

#include <fstream>
#include <sstream>

#include "socmod/artinian.hpp"
#include "socmod/script.hpp"
#include "socmod/session.hpp"

using namespace socmod;
using namespace socmod::script;
using nlohmann::json;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

SessionConfig golden_config() {
  SessionConfig cfg;
  cfg.deterministic = true;
  return cfg;
}

std::string parse_error(std::string_view text) {
  try {
    parse_script(text);
  } catch (const ParseError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("declarations parse") {
  auto s = parse_script("ring A = QQ[x,y];");
  REQUIRE(s.statements.size() == 1);
  const auto& r = std::get<RingDecl>(s.statements[0].node);
  CHECK(r.name == "A");
  CHECK(r.vars.size() == 2);
  CHECK(r.relations.empty());
  CHECK(!r.prime);

  auto q = parse_script("ring B = QQ[x,y,z] / (z^2 - x*y); module N in B^2 = cols [[x,y,z,0],[0,x,y,z]];");
  REQUIRE(q.statements.size() == 2);
  CHECK(std::get<RingDecl>(q.statements[0].node).relations == Row{"z^2 - x*y"});
  const auto& m = std::get<ModuleDecl>(q.statements[1].node);
  CHECK(m.rank == 2);
  CHECK(m.rows.size() == 2);
  CHECK(m.rows[0] == Row{"x", "y", "z", "0"});

  auto g = parse_script("ring F = GF(7)[t] cm; # trailing comment\n ideal I in F = ();");
  CHECK(*std::get<RingDecl>(g.statements[0].node).prime == 7);
  CHECK(std::get<RingDecl>(g.statements[0].node).cm);
  CHECK(std::get<IdealDecl>(g.statements[1].node).gens.empty());
  CHECK(parse_script("").statements.empty());
  CHECK(parse_script("  # only a comment\n").statements.empty());
}

TEST_CASE("parse errors carry positions") {
  CHECK(parse_error("check rn1 N;") == "1:11: undeclared name 'N'");
  CHECK(parse_error("ring A = QQ[x,y]") == "1:17: unexpected end of input (expected ';')");
  CHECK(parse_error("ring A = ZZ[x];") == "1:10: unknown field 'ZZ' (expected 'GF', 'QQ')");
  CHECK(parse_error("ring A = QQ[x];\nring A = QQ[y];") == "2:6: name 'A' is already declared");
  CHECK(parse_error("ring A = QQ[x];\nideal I in A = (x);\ncheck cor53 A;").rfind("3:13: 'A' is a ring", 0) == 0);
  CHECK(parse_error("ring A = QQ[x];\nideal I in A = (x);\ncheck foo I;").rfind("3:7: unknown claim 'foo'", 0) == 0);
  CHECK(parse_error("expect holds;") == "1:1: 'expect' must follow a check or compute statement");
  CHECK(parse_error("ring A = QQ[x];\nideal I in A = (x);\ncheck rn1 I;\nexpect maybe;").rfind("4:8: unknown verdict", 0) == 0);
  CHECK(parse_error("ring A = QQ[x];\nideal I in A = (x, );").rfind("2:20: unexpected ')'", 0) == 0);
  CHECK(parse_error("ring A = QQ[x];\nmodule N in A^2 = rows [[x]];").rfind("2:19: unexpected 'rows'", 0) == 0);
  // Deterministic: same input, same message.
  CHECK(parse_error("ring A = QQ[x]") == parse_error("ring A = QQ[x]"));
}

TEST_CASE("corpus round trip") {
  const auto& corpus = bundled_corpus();
  CHECK(corpus.size() == 9);
  for (const auto& [name, text] : corpus) {
    CAPTURE(name);
    auto ast = parse_script(text);
    std::string printed = print_script(ast);
    CHECK(parse_script(printed) == ast);
    CHECK(print_script(parse_script(printed)) == printed);
  }
}

TEST_CASE("empty script") {
  auto r = run_text("", {});
  CHECK(r.reports.empty());
  CHECK(r.exit_code == 0);
}

TEST_CASE("rank two socle script") {
  auto r = run_text(bundled_corpus().at("example_5_4.sml"), golden_config());
  REQUIRE(r.reports.size() == 3);
  CHECK(r.reports[0]["result"]["value"] == 2);
  CHECK(r.reports[1]["expectations"][0]["met"] == true);
  CHECK(r.reports[2]["verdict"] == "holds");
  CHECK(r.exit_code == 0);
  for (const auto& rep : r.reports) {
    for (const char* k : {"command", "inputs", "verdict", "certificates", "elapsed_ms"}) CHECK(rep.contains(k));
    for (const char* k : {"K", "colengths", "mu", "witnesses"}) CHECK(rep["certificates"].contains(k));
  }
}

TEST_CASE("square matrix script") {
  auto r = run_text(bundled_corpus().at("example_2_4.sml"), golden_config());
  REQUIRE(r.reports.size() == 2);
  CHECK(r.reports[1]["verdict"] == "hypothesis-not-met");
  CHECK(r.reports[1]["certificates"]["witnesses"][0]["relation"] == json({"(0, 1)", "(-1, 0)"}));
  CHECK(r.exit_code == 0);
}

TEST_CASE("golden reports") {
  for (const auto& [name, text] : bundled_corpus()) {
    CAPTURE(name);
    std::string stem = name.substr(0, name.size() - 4);
    std::string golden = slurp(std::string(SOCMOD_SOURCE_DIR) + "/tests/golden/" + stem + ".json");
    REQUIRE(!golden.empty());
    auto r = run_text(text, golden_config());
    CHECK(r.exit_code == 0);
    CHECK(r.reports.dump(2) + "\n" == golden);
  }
}

TEST_CASE("exit codes") {
  const char* base = "ring A = QQ[x,y];\nideal I in A = (x, y);\n";
  CHECK(run_text(std::string(base) + "check rn1 I;\nexpect fails;", {}).exit_code == 0);
  CHECK(run_text(std::string(base) + "check rn1 I;\nexpect holds;", {}).exit_code == 1);
  // A failing verdict without an annotation is a mismatch.
  CHECK(run_text(std::string(base) + "check rn1 I;", {}).exit_code == 1);
  CHECK(run_text(std::string(base) + "compute colength I;\nexpect value = 1;", {}).exit_code == 0);
  CHECK(run_text(std::string(base) + "compute colength I;\nexpect value = 2;", {}).exit_code == 1);
  CHECK(run_text("ring A = QQ[x];\nideal I in A = (x +* 1);\ncheck rn1 I;", {}).exit_code == 2);
  CHECK(run_text("check", {}).exit_code == 2);
  CHECK(!run_text("check", {}).parse_error.empty());

  // Engine errors are per statement; execution continues.
  auto r = run_text("ring A = QQ[x];\nideal I in A = (x +* 1);\nideal J in A = (x);\ncompute colength I;\n"
                    "compute colength J;",
                    {});
  REQUIRE(r.reports.size() == 3);
  CHECK(r.reports[0]["command"] == "ideal I in A = (x +* 1);");
  CHECK(r.reports[0]["verdict"] == "error");
  CHECK(r.reports[1]["verdict"] == "error");
  CHECK(r.reports[2]["result"]["value"] == 1);
  CHECK(r.exit_code == 2);

  SessionConfig ff;
  ff.fail_fast = true;
  auto f = run_text(std::string(base) + "check rn1 I;\nexpect holds;\ncompute colength I;", ff);
  CHECK(f.reports.size() == 1);
  CHECK(f.exit_code == 1);
}

TEST_CASE("session configuration") {
  SessionConfig gf;
  gf.field = Field::prime(32003);
  auto r = run_text(bundled_corpus().at("example_5_4.sml"), gf);
  CHECK(r.exit_code == 0);
  CHECK(r.reports[0]["inputs"]["ring"].get<std::string>().rfind("GF(32003)", 0) == 0);

  SessionConfig low;
  low.trunc_level = 2;
  auto t = run_text("ring A = QQ[x,y];\nideal I in A = (x^2, y^2);\ncompute colength I;", low);
  CHECK(t.reports[0]["verdict"] == "error");
  CHECK(t.exit_code == 2);
  // The process-wide policy is restored afterwards.
  CHECK(!trunc_policy().fixed_level);

  SessionConfig cap;
  cap.trunc_cap = 2;  // m^3 ⊆ (x^2, y^2) needs K = 3
  CHECK(run_text("ring A = QQ[x,y];\nideal I in A = (x^2, y^2);\ncompute colength I;", cap).exit_code == 2);
}

TEST_CASE("remaining commands") {
  auto r = run_text(
      "ring A = QQ[x,y];\n"
      "matrix P in A = [[x, y, 0], [0, x, y]];\n"
      "module N in A^2 = cols P;\n"
      "compute mingens N;\n"
      "compute fitting 0 N;\n"
      "compute fitting 1 N;\n"
      "compute resolve N;\n"
      "check param N;\n"
      "ideal I in A = (x^2, y^2);\n"
      "ideal M in A = (x^2, x*y, y^2);\n"
      "check rn1 I with M;\n"
      "  expect holds;\n",
      golden_config());
  REQUIRE(r.reports.size() == 6);
  CHECK(r.reports[0]["result"]["value"] == 3);
  CHECK(r.reports[1]["result"]["generators"].size() == 3);
  CHECK(r.reports[2]["result"]["generators"] == json({"x", "y"}));
  CHECK(r.reports[3]["result"]["betti"] == json({2, 3, 1}));
  CHECK(r.reports[4]["verdict"] == "holds");
  CHECK(r.reports[5]["inputs"].contains("M"));
  CHECK(r.exit_code == 0);

  auto e = run_text("ring A = QQ[x,y];\nmodule N in A^2 = gens [(x)];", {});
  CHECK(e.exit_code == 2);
}
