// Command-line front end; talks to the library only through the C API.

#include "sortlat/sortlat.h"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

enum Exit { kOk = 0, kTheoremFailure = 1, kUsage = 2, kInconsistent = 3 };

struct Failure {
  int code;
  std::string message;
};

struct Owned {
  char* p = nullptr;
  ~Owned() { sortlat_free(p); }
  std::string str() const { return p ? p : ""; }
};

using LatticePtr = std::unique_ptr<sortlat_lattice, decltype(&sortlat_lattice_destroy)>;

void check(sortlat_status st) {
  if (st == SORTLAT_OK) return;
  const int code = st == SORTLAT_ERR_INVARIANT ? kTheoremFailure : kUsage;
  throw Failure{code, std::string(sortlat_status_string(st)) + ": " + sortlat_last_error()};
}

struct Config {
  std::string diagram;
  std::string gamma;
  std::optional<int> cap;
  std::string format;
  std::string output;
  std::vector<std::string> suites{"all"};
  int field_n = 0;
};

std::vector<std::string> gammas(const Config& c) {
  if (c.gamma.empty()) return {""};
  if (c.gamma != "all") return {c.gamma};
  Owned list;
  check(sortlat_coxeter_elements(c.diagram.c_str(), &list.p));
  std::vector<std::string> out;
  std::istringstream in(list.str());
  for (std::string line; std::getline(in, line);) out.push_back(line.substr(0, line.find('\t')));
  return out;
}

LatticePtr build(const Config& c, const std::string& gamma) {
  sortlat_lattice* raw = nullptr;
  check(sortlat_lattice_create(c.diagram.c_str(), gamma.empty() ? nullptr : gamma.c_str(), c.cap.value_or(-1), &raw));
  return LatticePtr(raw, &sortlat_lattice_destroy);
}

std::string header(const Config& c, const std::string& gamma, std::size_t count) {
  return count > 1 ? "# " + c.diagram + " gamma=" + gamma + "\n" : "";
}

unsigned suite_mask(const std::vector<std::string>& names) {
  unsigned mask = 0;
  for (const auto& s : names) {
    if (s == "sb") mask |= SORTLAT_SUITE_SB;
    else if (s == "mobius") mask |= SORTLAT_SUITE_MOBIUS;
    else if (s == "properties") mask |= SORTLAT_SUITE_PROPERTIES;
    else if (s == "antimatroid") mask |= SORTLAT_SUITE_ANTIMATROID;
    else if (s == "birkhoff") mask |= SORTLAT_SUITE_BIRKHOFF;
    else if (s == "all") mask |= SORTLAT_SUITE_ALL;
  }
  return mask;
}

int run(const std::string& command, const Config& c, std::string& out) {
  if (command == "field") {
    Owned p;
    check(sortlat_field_minpoly(c.field_n, &p.p));
    out = p.str() + "\n";
    return kOk;
  }
  if (command == "scan") {
    int sound = 0, consistent = 0;
    Owned p;
    check(sortlat_scan(c.diagram.c_str(), c.format == "json", &sound, &consistent, &p.p));
    out = p.str();
    return !sound ? kTheoremFailure : !consistent ? kInconsistent : kOk;
  }

  const auto list = gammas(c);
  int code = kOk;
  for (const auto& gamma : list) {
    const std::string head = header(c, gamma, list.size());
    if (command == "oracle-diff") {
      int agree = 0;
      Owned p;
      check(sortlat_oracle_diff(c.diagram.c_str(), gamma.empty() ? nullptr : gamma.c_str(), c.cap.value_or(-1),
                                &agree, &p.p));
      out += head + p.str();
      if (!agree) code = kTheoremFailure;
      continue;
    }
    const LatticePtr lattice = build(c, gamma);
    Owned p;
    if (command == "verify") {
      int passed = 0;
      check(sortlat_lattice_verify(lattice.get(), suite_mask(c.suites), &passed, &p.p));
      out += head + p.str();
      if (!passed) code = kTheoremFailure;
    } else {
      const std::string format = !c.format.empty() ? c.format : command == "lattice" ? "dot" : "text";
      if (format == "dot") check(sortlat_lattice_dot(lattice.get(), &p.p));
      else if (format == "json") check(sortlat_lattice_json(lattice.get(), &p.p));
      else check(sortlat_lattice_text(lattice.get(), &p.p));
      out += head + p.str();
    }
  }
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bruhat lattices of gamma-sortable elements"};
  app.require_subcommand(1);
  Config c;

  const std::string diagram_help = "diagram: A3, B4, D4, E6, F4, H3, H4, I2(5), tC2 or \"rank=3; 1-2; 2-3:4\"";
  auto add_common = [&](CLI::App* sub, bool with_format) {
    sub->add_option("diagram", c.diagram, diagram_help)->required();
    sub->add_option("--gamma", c.gamma, "comma-separated permutation of 1..n, or 'all'");
    sub->add_option("--cap", c.cap, "maximum length (required for infinite groups)")->check(CLI::NonNegativeNumber);
    if (with_format) sub->add_option("--format", c.format, "dot, json or text")->check(CLI::IsMember({"dot", "json", "text"}));
    sub->add_option("--output,-o", c.output, "write to a file instead of stdout");
  };

  auto* enumerate = app.add_subcommand("enumerate", "list the sortable elements");
  add_common(enumerate, true);
  auto* lattice = app.add_subcommand("lattice", "export the lattice with its letter labeling");
  add_common(lattice, true);
  auto* verify = app.add_subcommand("verify", "run verification suites");
  add_common(verify, false);
  verify->add_option("--suite", c.suites, "sb, mobius, properties, antimatroid, birkhoff or all")
      ->check(CLI::IsMember({"sb", "mobius", "properties", "antimatroid", "birkhoff", "all"}));
  auto* scan = app.add_subcommand("scan", "compare forbidden patterns with distributivity for every Coxeter element");
  scan->add_option("diagram", c.diagram, diagram_help)->required();
  scan->add_option("--format", c.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  scan->add_option("--output,-o", c.output, "write to a file instead of stdout");
  auto* diff = app.add_subcommand("oracle-diff", "compare against brute-force oracles");
  add_common(diff, false);
  auto* field = app.add_subcommand("field", "minimal polynomial of 2cos(pi/N)");
  field->add_option("N", c.field_n, "N >= 1")->required()->check(CLI::PositiveNumber);
  field->add_option("--output,-o", c.output, "write to a file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  std::string out;
  int code = kOk;
  try {
    code = run(command, c, out);
  } catch (const Failure& f) {
    std::cerr << "error: " << f.message << "\n";
    return f.code;
  }

  if (c.output.empty()) {
    std::cout << out;
  } else {
    std::ofstream file(c.output, std::ios::binary);
    if (!(file << out)) {
      std::cerr << "error: cannot write " << c.output << "\n";
      return kUsage;
    }
  }
  return code;
}
