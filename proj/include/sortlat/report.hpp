#pragma once

// Serialized views of lattices and scans (DOT, JSON, plain text) and the
// verification suites shared by the C API and the command line.

#include "sortlat/orient.hpp"

#include <string>

namespace sortlat {

/// rankdir=BT, nodes n1.. in lattice order labeled by sorting words, edges
/// labeled by the b_gamma letter.
std::string lattice_dot(const BruhatLattice& lattice);

/// {group, gamma_word, element_count, edge_count, properties, mobius_histogram,
///  sb_violations, cap} plus the element and edge lists.
std::string lattice_json(const BruhatLattice& lattice, int indent = 2);

/// One sorting word per line, preceded by the element count.
std::string lattice_text(const BruhatLattice& lattice);

std::string scan_json(const ScanReport& report, int indent = 2);

enum Suite : unsigned {
  kSuiteSb = 1U << 0,
  kSuiteMobius = 1U << 1,
  kSuiteProperties = 1U << 2,
  kSuiteAntimatroid = 1U << 3,
  kSuiteBirkhoff = 1U << 4,
  kSuiteAll = (1U << 5) - 1,
};

struct SuiteOutcome {
  bool passed = true;
  std::string text;  // one line per suite
};

/// Properties, antimatroid and Birkhoff suites are skipped on capped lattices.
SuiteOutcome run_suites(const BruhatLattice& lattice, unsigned suites);

}  // namespace sortlat
