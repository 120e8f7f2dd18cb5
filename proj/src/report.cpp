#include "sortlat/report.hpp"

#include "sortlat/errors.hpp"

#include <json.hpp>

#include <sstream>

namespace sortlat {

namespace {

using nlohmann::ordered_json;

std::string gamma_string(const GammaContext& ctx) {
  std::string out;
  for (Generator s : ctx.gamma_word()) out += (out.empty() ? "" : ",") + std::to_string(s + 1);
  return out;
}

std::string escape_dot(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

std::string yn(bool b) { return b ? "y" : "n"; }

}  // namespace

std::string lattice_dot(const BruhatLattice& lattice) {
  const auto& ctx = lattice.context();
  std::ostringstream out;
  out << "digraph B_gamma {\n";
  out << "  label=\"" << escape_dot(ctx.diagram().name()) << " gamma=" << gamma_string(ctx);
  if (lattice.cap()) out << " cap=" << *lattice.cap();
  out << "\";\n  rankdir=BT;\n  node [shape=plaintext];\n";
  for (std::size_t i = 0; i < lattice.size(); ++i)
    out << "  n" << i + 1 << " [label=\"" << escape_dot(lattice.word(static_cast<int>(i))) << "\"];\n";
  for (const Cover& c : hasse(lattice))
    out << "  n" << c.lower + 1 << " -> n" << c.upper + 1 << " [label=\"" << format_generator(c.label.letter)
        << "\"];\n";
  out << "}\n";
  return out.str();
}

std::string lattice_json(const BruhatLattice& lattice, int indent) {
  const auto& ctx = lattice.context();
  ordered_json j;
  j["group"] = ctx.diagram().name();
  ordered_json gamma = ordered_json::array();
  for (Generator s : ctx.gamma_word()) gamma.push_back(s + 1);
  j["gamma_word"] = gamma;
  j["element_count"] = lattice.size();
  j["edge_count"] = lattice.covers().size();

  ordered_json props = ordered_json::object();
  if (!lattice.cap()) {
    const LatticeProperties p = lattice_properties(lattice);
    props["graded"] = p.graded;
    props["upper_semimodular"] = p.upper_semimodular;
    props["meet_semidistributive"] = p.meet_semidistributive;
    props["join_distributive"] = p.join_distributive;
    props["distributive"] = p.distributive;
    props["diamonds_four"] = p.diamonds_four;
    props["antimatroid"] = antimatroid_check(lattice).ok();
  }
  j["properties"] = props;

  ordered_json hist = {{"-1", 0}, {"0", 0}, {"1", 0}};
  for (const auto& [value, count] : MobiusTable(lattice).histogram()) hist[std::to_string(value)] = count;
  j["mobius_histogram"] = hist;

  const SbReport sb = verify_sb(lattice);
  ordered_json violations = ordered_json::array();
  for (const SbViolation& v : sb.violations)
    violations.push_back({{"p", lattice.word(v.p)},
                          {"p1", lattice.word(v.p1)},
                          {"p2", lattice.word(v.p2)},
                          {"axiom", v.axiom},
                          {"detail", v.detail}});
  j["sb_violations"] = violations;
  j["sb_inconclusive"] = sb.inconclusive;
  j["cap"] = lattice.cap() ? ordered_json(*lattice.cap()) : ordered_json(nullptr);

  ordered_json elements = ordered_json::array();
  for (std::size_t i = 0; i < lattice.size(); ++i) elements.push_back(lattice.word(static_cast<int>(i)));
  j["elements"] = elements;
  ordered_json edges = ordered_json::array();
  for (const Cover& c : hasse(lattice))
    edges.push_back({{"from", lattice.word(c.lower)}, {"to", lattice.word(c.upper)},
                     {"label", format_generator(c.label.letter)}});
  j["edges"] = edges;
  return j.dump(indent) + "\n";
}

std::string lattice_text(const BruhatLattice& lattice) {
  std::ostringstream out;
  out << lattice.size() << " sortable elements\n";
  for (std::size_t i = 0; i < lattice.size(); ++i) out << lattice.word(static_cast<int>(i)) << "\n";
  return out.str();
}

std::string scan_json(const ScanReport& report, int indent) {
  ordered_json j;
  j["group"] = report.group;
  ordered_json rows = ordered_json::array();
  for (const ScanRow& r : report.rows) {
    ordered_json row;
    row["orientation"] = r.orientation.describe();
    ordered_json word = ordered_json::array();
    for (Generator s : r.word) word.push_back(s + 1);
    row["gamma_word"] = word;
    if (r.match) {
      ordered_json witness = ordered_json::array();
      for (Generator s : r.match->witness) witness.push_back(format_generator(s));
      row["pattern"] = pattern_name(r.match->pattern);
      row["witness"] = witness;
    } else {
      row["pattern"] = nullptr;
    }
    row["distributive"] = r.distributive;
    row["consistent"] = r.consistent();
    row["element_count"] = r.element_count;
    rows.push_back(row);
  }
  j["rows"] = rows;
  j["sound"] = report.sound();
  j["consistent"] = report.consistent();
  j["distributive_count"] = report.distributive_count();
  return j.dump(indent) + "\n";
}

SuiteOutcome run_suites(const BruhatLattice& lattice, unsigned suites) {
  SuiteOutcome out;
  std::ostringstream text;
  const bool capped = lattice.cap().has_value();
  auto line = [&](const char* name, bool ok, const std::string& detail) {
    text << (ok ? "ok   " : "FAIL ") << name << ": " << detail << "\n";
    out.passed = out.passed && ok;
  };

  if (suites & kSuiteSb) {
    const SbReport r = verify_sb(lattice);
    std::ostringstream d;
    d << r.diamonds << " diamonds, " << r.chains << " chains, " << r.violations.size() << " violations";
    if (r.inconclusive) d << ", " << r.inconclusive << " beyond cap";
    for (std::size_t i = 0; i < r.violations.size() && i < 5; ++i) {
      const SbViolation& v = r.violations[i];
      d << "\n     axiom " << v.axiom << " at " << lattice.word(v.p) << " < " << lattice.word(v.p1) << ", "
        << lattice.word(v.p2) << ": " << v.detail;
    }
    line("sb", r.ok(), d.str());
  }
  if (suites & kSuiteMobius) {
    bool ok = true;
    std::ostringstream d;
    for (const auto& [value, count] : MobiusTable(lattice).histogram()) {
      d << (d.tellp() > 0 ? ", " : "") << "mu=" << value << ": " << count;
      ok = ok && value >= -1 && value <= 1;
    }
    line("mobius", ok, d.str());
  }
  if (suites & kSuiteProperties) {
    if (capped) {
      text << "skip properties: capped lattice\n";
    } else {
      const LatticeProperties p = lattice_properties(lattice);
      const bool ok = p.graded && p.upper_semimodular && p.meet_semidistributive && p.join_distributive &&
                      p.diamonds_four;
      line("properties", ok,
           "graded " + yn(p.graded) + ", upper semimodular " + yn(p.upper_semimodular) +
               ", meet-semidistributive " + yn(p.meet_semidistributive) + ", four-element diamonds " +
               yn(p.diamonds_four) + ", distributive " + yn(p.distributive));
    }
  }
  if (suites & kSuiteAntimatroid) {
    if (capped) {
      text << "skip antimatroid: capped lattice\n";
    } else {
      const AntimatroidReport r = antimatroid_check(lattice);
      std::string d = "empty set " + yn(r.contains_empty) + ", union-closed " + yn(r.union_closed) +
                      ", accessible " + yn(r.accessible) + ", exchange " + yn(r.exchange);
      for (const auto& v : r.violations) d += "\n     " + v;
      line("antimatroid", r.ok(), d);
    }
  }
  if (suites & kSuiteBirkhoff) {
    if (capped) {
      text << "skip birkhoff: capped lattice\n";
    } else {
      const bool distributive = lattice_properties(lattice).distributive;
      const BirkhoffReport r = birkhoff_analysis(lattice);
      std::ostringstream d;
      d << r.join_irreducibles.size() << " join-irreducibles, ";
      if (r.ideal_count > lattice.size())
        d << "more than " << lattice.size() << " ideals";
      else
        d << r.ideal_count << " ideals";
      if (distributive)
        d << ", ideal lattice " << (r.ideal_lattice_isomorphic ? "isomorphic" : "NOT isomorphic");
      else
        d << ", not distributive";
      line("birkhoff", !distributive || r.ideal_lattice_isomorphic, d.str());
    }
  }
  out.text = text.str();
  return out;
}

}  // namespace sortlat
