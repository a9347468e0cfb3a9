#include <unistd.h>

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "socmod/groebner.hpp"
#include "socmod/session.hpp"

namespace {

struct Style {
  bool color = false;
  std::string paint(const std::string& text, const char* code) const {
    return color ? std::string("\033[") + code + "m" + text + "\033[0m" : text;
  }
  std::string verdict(const std::string& v) const {
    if (v == "holds") return paint(v, "32");
    if (v == "fails") return paint(v, "31");
    if (v == "error") return paint(v, "1;31");
    if (v == "hypothesis-not-met") return paint(v, "33");
    return v;
  }
};

std::string read_source(const std::string& path) {
  if (path == "-") {
    std::ostringstream s;
    s << std::cin.rdbuf();
    return s.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void print_text(std::ostream& out, const std::string& name, const socmod::RunResult& r, const Style& st) {
  out << st.paint(name, "1") << "\n";
  if (!r.parse_error.empty()) {
    out << "  " << st.paint("parse error", "1;31") << " " << r.parse_error << "\n";
    return;
  }
  for (const auto& rep : r.reports) {
    std::string v = rep["verdict"];
    std::string pad(v.size() < 20 ? 20 - v.size() : 1, ' ');
    out << "  " << st.verdict(v) << pad << rep["command"].get<std::string>();
    if (!rep["certificates"]["K"].is_null()) out << "  K=" << rep["certificates"]["K"];
    out << "  " << rep["elapsed_ms"] << " ms\n";
    if (!rep["result"].empty()) out << "      " << rep["result"].dump() << "\n";
    for (const auto& n : rep["notes"]) out << "      note: " << n.get<std::string>() << "\n";
    for (const auto& e : rep["expectations"]) {
      bool met = e["met"];
      out << "      " << (met ? st.paint("ok  ", "32") : st.paint("FAIL", "31")) << " "
          << e["expect"].get<std::string>() << "\n";
    }
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"socmod: socle modules, reductions and perfect matrices"};
  std::vector<std::string> files;
  std::string field = "", trunc = "auto", out_path, cache_dir;
  int trunc_cap = 64;
  unsigned seed = 1;
  bool json_out = false, fail_fast = false, corpus = false, deterministic = false, format = false;
  app.add_option("files", files, "Script files (.sml); '-' reads stdin");
  app.add_option("--field", field, "Override the field of every ring: qq or gf:p");
  app.add_option("--trunc", trunc, "Truncation level: auto or a fixed K")->capture_default_str();
  app.add_option("--trunc-cap", trunc_cap, "Largest truncation level tried")->capture_default_str();
  app.add_flag("--json", json_out, "Emit JSON reports");
  app.add_flag("--fail-fast", fail_fast, "Stop at the first error or failed expectation");
  app.add_flag("--corpus", corpus, "Run the bundled example scripts");
  app.add_option("--seed", seed, "Seed for randomized relation sampling")->capture_default_str();
  app.add_option("--out", out_path, "Write output to FILE instead of stdout");
  app.add_option("--cache", cache_dir, "Directory for the Groebner basis cache");
  app.add_flag("--deterministic", deterministic, "Report elapsed_ms as 0");
  app.add_flag("--format", format, "Print the parsed scripts in canonical form and exit");
  CLI11_PARSE(app, argc, argv);

  socmod::SessionConfig cfg;
  cfg.trunc_cap = trunc_cap;
  cfg.seed = seed;
  cfg.fail_fast = fail_fast;
  cfg.deterministic = deterministic;
  try {
    if (field == "qq") {
      cfg.field = socmod::Field::rationals();
    } else if (field.rfind("gf:", 0) == 0) {
      cfg.field = socmod::Field::prime(static_cast<std::uint32_t>(std::stoul(field.substr(3))));
    } else if (!field.empty()) {
      throw std::invalid_argument("--field expects qq or gf:p");
    }
    if (trunc != "auto") cfg.trunc_level = std::stoi(trunc);
  } catch (const std::exception& e) {
    std::cerr << "socmod: " << e.what() << "\n";
    return 2;
  }
  if (!cache_dir.empty()) socmod::set_groebner_cache_directory(cache_dir);

  std::vector<std::pair<std::string, std::string>> sources;
  if (corpus) {
    for (const auto& [name, text] : socmod::bundled_corpus()) sources.emplace_back(name, text);
  }
  for (const auto& f : files) {
    try {
      sources.emplace_back(f, read_source(f));
    } catch (const std::exception& e) {
      std::cerr << "socmod: " << e.what() << "\n";
      return 2;
    }
  }

  std::ofstream file_out;
  if (!out_path.empty()) {
    file_out.open(out_path, std::ios::binary);
    if (!file_out) {
      std::cerr << "socmod: cannot write " << out_path << "\n";
      return 2;
    }
  }
  std::ostream& out = out_path.empty() ? std::cout : file_out;

  if (format) {
    int code = 0;
    for (const auto& [name, text] : sources) {
      try {
        out << socmod::script::print_script(socmod::script::parse_script(text));
      } catch (const socmod::script::ParseError& e) {
        std::cerr << name << ":" << e.what() << "\n";
        code = 2;
      }
    }
    return code;
  }

  Style style;
  style.color = out_path.empty() && !json_out && std::getenv("NO_COLOR") == nullptr && isatty(STDOUT_FILENO);
  int code = 0;
  nlohmann::json merged = nlohmann::json::object();
  bool single = sources.size() == 1 && !corpus;
  for (const auto& [name, text] : sources) {
    auto r = socmod::run_text(text, cfg);
    code = std::max(code, r.exit_code);
    if (!r.parse_error.empty()) std::cerr << name << ":" << r.parse_error << "\n";
    if (json_out) {
      if (single) {
        out << r.reports.dump(2) << "\n";
      } else {
        merged[name] = r.parse_error.empty() ? r.reports : nlohmann::json({{"parse_error", r.parse_error}});
      }
    } else {
      print_text(out, name, r, style);
    }
    if (code != 0 && fail_fast) break;
  }
  if (json_out && !single) out << merged.dump(2) << "\n";
  return code;
}
