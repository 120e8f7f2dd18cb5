#include "sortlat/sortlat.h"

#include "sortlat/errors.hpp"
#include "sortlat/oracle.hpp"
#include "sortlat/report.hpp"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <iterator>
#include <set>
#include <sstream>

struct sortlat_lattice {
  sortlat::BruhatLattice lattice;
};

namespace {

thread_local std::string last_error;

char* dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

template <class F>
sortlat_status guard(F&& f) {
  try {
    f();
    last_error.clear();
    return SORTLAT_OK;
  } catch (const sortlat::ParseError& e) {
    last_error = e.what();
    return SORTLAT_ERR_PARSE;
  } catch (const sortlat::InvalidArgument& e) {
    last_error = e.what();
    return SORTLAT_ERR_INVALID_ARGUMENT;
  } catch (const sortlat::CapRequired& e) {
    last_error = e.what();
    return SORTLAT_ERR_CAP_REQUIRED;
  } catch (const sortlat::CapExceeded& e) {
    last_error = e.what();
    return SORTLAT_ERR_CAP_EXCEEDED;
  } catch (const sortlat::LimitExceeded& e) {
    last_error = e.what();
    return SORTLAT_ERR_LIMIT_EXCEEDED;
  } catch (const sortlat::InvariantViolation& e) {
    last_error = e.what();
    return SORTLAT_ERR_INVARIANT;
  } catch (const std::exception& e) {
    last_error = e.what();
    return SORTLAT_ERR_INTERNAL;
  } catch (...) {
    last_error = "unknown error";
    return SORTLAT_ERR_INTERNAL;
  }
}

sortlat_status null_arg(const char* what) {
  last_error = std::string("null argument: ") + what;
  return SORTLAT_ERR_NULL;
}

std::string default_gamma(const char* diagram, const char* gamma) {
  if (gamma) return gamma;
  const int n = sortlat::parse_diagram(diagram).rank();
  std::string out;
  for (int i = 1; i <= n; ++i) out += (i > 1 ? "," : "") + std::to_string(i);
  return out;
}

std::optional<int> to_cap(int cap) { return cap < 0 ? std::nullopt : std::optional<int>(cap); }

std::string oracle_report(const sortlat::BruhatLattice& lattice, bool& agree) {
  using namespace sortlat;
  std::ostringstream out;
  auto line = [&](const char* name, std::size_t mismatches, std::size_t checked) {
    out << (mismatches ? "FAIL " : "ok   ") << name << ": " << checked << " checked, " << mismatches
        << " mismatches\n";
    agree = agree && mismatches == 0;
  };
  const auto& ctx = lattice.context();
  const auto n = static_cast<int>(lattice.size());

  if (ctx.group().is_finite() && !lattice.cap()) {
    const GroupTable table = ctx.group().enumerate(kDefaultScanOrderLimit);
    const auto naive = oracle::naive_sortables(table, ctx.gamma_word());
    std::set<std::string> lib_words, naive_words;
    for (int i = 0; i < n; ++i) lib_words.insert(lattice.word(i));
    std::size_t position_mismatches = 0;
    for (const auto& s : naive) {
      naive_words.insert(s.word);
      if (oracle::exhaustive_sorting_positions(table, ctx.gamma_word(), s.element) != s.positions)
        ++position_mismatches;
      const auto idx = lattice.find(s.word);
      if (idx && lattice.alpha(*idx).to_vector() != s.positions) ++position_mismatches;
    }
    std::vector<std::string> diff;
    std::set_symmetric_difference(lib_words.begin(), lib_words.end(), naive_words.begin(), naive_words.end(),
                                  std::back_inserter(diff));
    line("sortable set", diff.size(), naive.size());
    line("sorting positions", position_mismatches, naive.size());
  }

  const auto order = oracle::naive_order(lattice);
  std::size_t order_bad = 0, meet_bad = 0;
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      if (order[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] != lattice.leq(u, v)) ++order_bad;
      if (oracle::naive_meet(lattice, order, u, v) != lattice.meet(u, v)) ++meet_bad;
    }
  line("bruhat order", order_bad, static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  line("meet", meet_bad, static_cast<std::size_t>(n) * static_cast<std::size_t>(n));

  const OrientedDiagram oriented = orientation_from_word(ctx);
  const auto fast = find_forbidden(oriented);
  const auto slow = oracle::brute_force_forbidden(oriented);
  const bool same = fast.has_value() == slow.has_value() &&
                    (!fast || (fast->pattern == slow->pattern && fast->witness == slow->witness));
  line("forbidden pattern", same ? 0 : 1, 1);
  return out.str();
}

}  // namespace

extern "C" {

const char* sortlat_last_error(void) { return last_error.c_str(); }

const char* sortlat_status_string(sortlat_status status) {
  switch (status) {
    case SORTLAT_OK: return "ok";
    case SORTLAT_ERR_NULL: return "null argument";
    case SORTLAT_ERR_PARSE: return "parse error";
    case SORTLAT_ERR_INVALID_ARGUMENT: return "invalid argument";
    case SORTLAT_ERR_CAP_REQUIRED: return "cap required";
    case SORTLAT_ERR_CAP_EXCEEDED: return "cap exceeded";
    case SORTLAT_ERR_LIMIT_EXCEEDED: return "limit exceeded";
    case SORTLAT_ERR_INVARIANT: return "invariant violation";
    case SORTLAT_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

void sortlat_free(char* s) { std::free(s); }

sortlat_status sortlat_field_minpoly(int n, char** out) {
  if (!out) return null_arg("out");
  return guard([&] {
    if (n < 1) throw sortlat::InvalidArgument("N must be positive");
    *out = dup(sortlat::format_polynomial(sortlat::minimal_polynomial(static_cast<unsigned>(n))));
  });
}

sortlat_status sortlat_diagram_rank(const char* diagram, int* rank) {
  if (!diagram) return null_arg("diagram");
  if (!rank) return null_arg("rank");
  return guard([&] { *rank = sortlat::parse_diagram(diagram).rank(); });
}

sortlat_status sortlat_coxeter_elements(const char* diagram, char** out) {
  if (!diagram) return null_arg("diagram");
  if (!out) return null_arg("out");
  return guard([&] {
    std::string text;
    for (const auto& e : sortlat::enumerate_coxeter_elements(sortlat::parse_diagram(diagram))) {
      std::string word;
      for (sortlat::Generator s : e.word) word += (word.empty() ? "" : ",") + std::to_string(s + 1);
      text += word + "\t" + e.orientation.describe() + "\n";
    }
    *out = dup(text);
  });
}

sortlat_status sortlat_lattice_create(const char* diagram, const char* gamma, int cap, sortlat_lattice** out) {
  if (!diagram) return null_arg("diagram");
  if (!out) return null_arg("out");
  *out = nullptr;
  return guard([&] {
    auto ctx = sortlat::GammaContext::parse(diagram, default_gamma(diagram, gamma));
    *out = new sortlat_lattice{sortlat::BruhatLattice::build(std::move(ctx), to_cap(cap))};
  });
}

void sortlat_lattice_destroy(sortlat_lattice* lattice) { delete lattice; }

sortlat_status sortlat_lattice_counts(const sortlat_lattice* lattice, size_t* elements, size_t* edges) {
  if (!lattice) return null_arg("lattice");
  return guard([&] {
    if (elements) *elements = lattice->lattice.size();
    if (edges) *edges = lattice->lattice.covers().size();
  });
}

sortlat_status sortlat_lattice_element_word(const sortlat_lattice* lattice, size_t index, char** out) {
  if (!lattice) return null_arg("lattice");
  if (!out) return null_arg("out");
  return guard([&] {
    if (index >= lattice->lattice.size()) throw sortlat::InvalidArgument("element index out of range");
    *out = dup(lattice->lattice.word(static_cast<int>(index)));
  });
}

sortlat_status sortlat_lattice_dot(const sortlat_lattice* lattice, char** out) {
  if (!lattice) return null_arg("lattice");
  if (!out) return null_arg("out");
  return guard([&] { *out = dup(sortlat::lattice_dot(lattice->lattice)); });
}

sortlat_status sortlat_lattice_json(const sortlat_lattice* lattice, char** out) {
  if (!lattice) return null_arg("lattice");
  if (!out) return null_arg("out");
  return guard([&] { *out = dup(sortlat::lattice_json(lattice->lattice)); });
}

sortlat_status sortlat_lattice_text(const sortlat_lattice* lattice, char** out) {
  if (!lattice) return null_arg("lattice");
  if (!out) return null_arg("out");
  return guard([&] { *out = dup(sortlat::lattice_text(lattice->lattice)); });
}

sortlat_status sortlat_lattice_verify(const sortlat_lattice* lattice, unsigned suites, int* passed,
                                      char** report) {
  if (!lattice) return null_arg("lattice");
  if (!passed) return null_arg("passed");
  return guard([&] {
    const auto outcome = sortlat::run_suites(lattice->lattice, suites);
    *passed = outcome.passed ? 1 : 0;
    if (report) *report = dup(outcome.text);
  });
}

sortlat_status sortlat_scan(const char* diagram, int json, int* sound, int* consistent, char** out) {
  if (!diagram) return null_arg("diagram");
  return guard([&] {
    const auto report = sortlat::scan_conjecture(sortlat::parse_diagram(diagram));
    if (sound) *sound = report.sound() ? 1 : 0;
    if (consistent) *consistent = report.consistent() ? 1 : 0;
    if (out) *out = dup(json ? sortlat::scan_json(report) : sortlat::format_scan_table(report));
  });
}

sortlat_status sortlat_oracle_diff(const char* diagram, const char* gamma, int cap, int* agree, char** report) {
  if (!diagram) return null_arg("diagram");
  if (!agree) return null_arg("agree");
  return guard([&] {
    auto ctx = sortlat::GammaContext::parse(diagram, default_gamma(diagram, gamma));
    const auto lattice = sortlat::BruhatLattice::build(std::move(ctx), to_cap(cap));
    bool ok = true;
    const std::string text = oracle_report(lattice, ok);
    *agree = ok ? 1 : 0;
    if (report) *report = dup(text);
  });
}

}  // extern "C"
