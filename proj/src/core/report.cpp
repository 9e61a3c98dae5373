#include "core/report.hpp"

#include <algorithm>
#include <sstream>

namespace mvalg {

bool Report::passed() const {
  return std::all_of(entries.begin(), entries.end(),
                     [](const ReportEntry& e) { return e.pass; });
}

const ReportEntry* Report::find(std::string_view axiom) const {
  for (const auto& e : entries)
    if (e.axiom == axiom) return &e;
  return nullptr;
}

std::vector<std::string> Report::failing_axioms() const {
  std::vector<std::string> out;
  for (const auto& e : entries)
    if (!e.pass) out.push_back(e.axiom);
  return out;
}

void Report::sort_entries() {
  std::stable_sort(entries.begin(), entries.end(),
                   [](const ReportEntry& a, const ReportEntry& b) {
                     return a.axiom < b.axiom;
                   });
}

std::string Report::render() const {
  std::ostringstream os;
  for (const auto& e : entries) {
    os << (e.pass ? "[pass] " : "[FAIL] ") << e.axiom;
    if (!e.pass && !e.counterexample.empty()) {
      os << "  at (";
      for (std::size_t i = 0; i < e.counterexample.size(); ++i) {
        if (i) os << ", ";
        os << e.counterexample[i];
      }
      os << ")";
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace mvalg
