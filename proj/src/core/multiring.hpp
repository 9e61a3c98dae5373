#pragma once

#include <string>
#include <vector>

#include "core/elemset.hpp"

namespace mvalg {

/// Finite carrier with set-valued addition, single-valued multiplication,
/// negation and designated 0 and 1. Deliberately permissive: algebraic laws
/// are checked by the axiom suite, not assumed, so invalid candidates are
/// representable. Element identity is the index; names are for I/O.
class FiniteMultiring {
public:
  std::string name;
  std::vector<std::string> elems;
  int zero = -1;
  int one = -1;
  std::vector<int> neg;            // length n
  std::vector<int> mul_table;      // n*n, row-major
  std::vector<ElemSet> add_table;  // n*n, row-major, cells nonempty

  int size() const { return static_cast<int>(elems.size()); }
  int minus_one() const { return neg[one]; }

  int times(int a, int b) const { return mul_table[a * size() + b]; }
  const ElemSet& plus(int a, int b) const { return add_table[a * size() + b]; }
  ElemSet& plus_mut(int a, int b) { return add_table[a * size() + b]; }
  int sq(int a) const { return times(a, a); }

  /// Union of x + c over x in xs.
  ElemSet plus_all(const ElemSet& xs, int c) const;
  /// Union of x + y over x in xs, y in ys.
  ElemSet plus_sets(const ElemSet& xs, const ElemSet& ys) const;
  /// {a*x : x in xs}.
  ElemSet times_set(int a, const ElemSet& xs) const;

  int index_of(const std::string& elem_name) const;

  /// Tables, constants and carrier size coincide (names ignored).
  bool tables_equal(const FiniteMultiring& o) const;

  /// Structural well-formedness: totality, index ranges, nonempty add cells,
  /// distinct names. Throws UsageError.
  void validate() const;
};

/// The table entry a + b, with bounds checking.
ElemSet plus_set(const FiniteMultiring& A, int a, int b);

/// Representation set D(a,b) = {d : d in d^2*a + d^2*b}.
ElemSet rep_set(const FiniteMultiring& A, int a, int b);

/// Transversal representation set: members x of D(a,b) with
/// -a in D(-x,b) and -b in D(a,-x).
ElemSet transversal_set(const FiniteMultiring& A, int a, int b);

/// Full n*n table of rep_set values.
std::vector<ElemSet> rep_table(const FiniteMultiring& A);

/// Transversal closure of an arbitrary n*n representation table, under the
/// given negation.
std::vector<ElemSet> transversal_from_rep(int n, const std::vector<int>& neg,
                                          const std::vector<ElemSet>& d);

}  // namespace mvalg
