#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace mvalg {

/// One verdict of an axiom checker. A failing entry carries the
/// lexicographically least violating tuple (element names, in the axiom's
/// variable order).
struct ReportEntry {
  std::string axiom;
  bool pass = false;
  std::vector<std::string> counterexample;
};

class Report {
public:
  std::vector<ReportEntry> entries;

  bool passed() const;
  const ReportEntry* find(std::string_view axiom) const;
  std::vector<std::string> failing_axioms() const;

  /// Entries are kept sorted by axiom id; checkers call this once assembled.
  void sort_entries();

  std::string render() const;
};

}  // namespace mvalg
