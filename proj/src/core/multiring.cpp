#include "core/multiring.hpp"

#include <set>

#include "core/errors.hpp"

namespace mvalg {

ElemSet FiniteMultiring::plus_all(const ElemSet& xs, int c) const {
  ElemSet out(size());
  for (int x = xs.first(); x >= 0; x = xs.next(x)) out |= plus(x, c);
  return out;
}

ElemSet FiniteMultiring::plus_sets(const ElemSet& xs, const ElemSet& ys) const {
  ElemSet out(size());
  for (int x = xs.first(); x >= 0; x = xs.next(x))
    for (int y = ys.first(); y >= 0; y = ys.next(y)) out |= plus(x, y);
  return out;
}

ElemSet FiniteMultiring::times_set(int a, const ElemSet& xs) const {
  ElemSet out(size());
  for (int x = xs.first(); x >= 0; x = xs.next(x)) out.set(times(a, x));
  return out;
}

int FiniteMultiring::index_of(const std::string& elem_name) const {
  for (int i = 0; i < size(); ++i)
    if (elems[i] == elem_name) return i;
  return -1;
}

bool FiniteMultiring::tables_equal(const FiniteMultiring& o) const {
  return size() == o.size() && zero == o.zero && one == o.one &&
         neg == o.neg && mul_table == o.mul_table && add_table == o.add_table;
}

void FiniteMultiring::validate() const {
  const int n = size();
  if (n < 1) throw UsageError("multiring needs a nonempty carrier");
  std::set<std::string> seen(elems.begin(), elems.end());
  if (static_cast<int>(seen.size()) != n)
    throw UsageError("duplicate element name");
  auto in_range = [n](int i) { return i >= 0 && i < n; };
  if (!in_range(zero) || !in_range(one))
    throw UsageError("zero/one out of range");
  if (static_cast<int>(neg.size()) != n) throw UsageError("neg table not total");
  for (int v : neg)
    if (!in_range(v)) throw UsageError("neg entry out of range");
  if (static_cast<int>(mul_table.size()) != n * n)
    throw UsageError("mul table not total");
  for (int v : mul_table)
    if (!in_range(v)) throw UsageError("mul entry out of range");
  if (static_cast<int>(add_table.size()) != n * n)
    throw UsageError("add table not total");
  for (const ElemSet& s : add_table) {
    if (s.universe() != n) throw UsageError("add cell has wrong width");
    if (s.empty()) throw UsageError("add cell is empty");
  }
}

ElemSet plus_set(const FiniteMultiring& A, int a, int b) {
  if (a < 0 || a >= A.size() || b < 0 || b >= A.size())
    throw UsageError("plus_set: index out of range");
  return A.plus(a, b);
}

ElemSet rep_set(const FiniteMultiring& A, int a, int b) {
  if (a < 0 || a >= A.size() || b < 0 || b >= A.size())
    throw UsageError("rep_set: index out of range");
  ElemSet out(A.size());
  for (int d = 0; d < A.size(); ++d) {
    int d2 = A.sq(d);
    if (A.plus(A.times(d2, a), A.times(d2, b)).test(d)) out.set(d);
  }
  return out;
}

std::vector<ElemSet> rep_table(const FiniteMultiring& A) {
  const int n = A.size();
  std::vector<ElemSet> t(n * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[a * n + b] = rep_set(A, a, b);
  return t;
}

std::vector<ElemSet> transversal_from_rep(int n, const std::vector<int>& neg,
                                          const std::vector<ElemSet>& d) {
  std::vector<ElemSet> t(n * n, ElemSet(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const ElemSet& base = d[a * n + b];
      for (int x = base.first(); x >= 0; x = base.next(x)) {
        if (d[neg[x] * n + b].test(neg[a]) && d[a * n + neg[x]].test(neg[b]))
          t[a * n + b].set(x);
      }
    }
  return t;
}

ElemSet transversal_set(const FiniteMultiring& A, int a, int b) {
  if (a < 0 || a >= A.size() || b < 0 || b >= A.size())
    throw UsageError("transversal_set: index out of range");
  ElemSet out(A.size());
  const ElemSet base = rep_set(A, a, b);
  for (int x = base.first(); x >= 0; x = base.next(x)) {
    if (rep_set(A, A.neg[x], b).test(A.neg[a]) &&
        rep_set(A, a, A.neg[x]).test(A.neg[b]))
      out.set(x);
  }
  return out;
}

}  // namespace mvalg
