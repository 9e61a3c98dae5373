#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "core/elemset.hpp"

namespace mvalg {

using SignRow = std::vector<std::int8_t>;  // entries in {-1,0,1}

/// Abstract real spectrum candidate: a point set X and sign functions
/// G subset of {-1,0,1}^X. Rows are kept sorted (with -1 < 0 < 1) and
/// distinct; value sets are computed pointwise.
class ARSData {
public:
  std::string name;
  std::vector<std::string> points;
  std::vector<SignRow> funcs;

  int point_count() const { return static_cast<int>(points.size()); }
  int size() const { return static_cast<int>(funcs.size()); }

  /// Index of the constant function with the given sign, or -1.
  int index_of_const(int sign) const;
  /// Index of the pointwise product of funcs[f] and funcs[g], or -1 when G is
  /// not closed under it.
  int product_index(int f, int g) const;
  int index_of_row(const SignRow& row) const;

  /// D(a,b): all c with a(x)c(x)>0 or b(x)c(x)>0 or c(x)=0 at every point.
  ElemSet value_set(int a, int b) const;
  /// Dt(a,b): as value_set but a zero of c forces b(x) = -a(x).
  ElemSet trans_value_set(int a, int b) const;

  std::string func_name(int f) const;

  /// Sorts rows canonically; throws on duplicates/out-of-range entries.
  void canonicalize();
  void validate() const;
};

}  // namespace mvalg
