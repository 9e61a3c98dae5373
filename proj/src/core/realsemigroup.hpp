#pragma once

#include <string>
#include <vector>

#include "core/elemset.hpp"

namespace mvalg {

/// Which ternary relation the `rel` table stores as primitive.
enum class RsPresentation { D, Dt };

/// Finite ternary-semigroup carrier with constants 1, 0, -1 and a primitive
/// ternary representation relation. In the D presentation `rel` holds
/// d in D(a,b); in the Dt presentation it holds the transversal relation and
/// D is derived as D(a,b) = {c : c in Dt(c^2 a, c^2 b)}.
class RealSemigroupData {
public:
  std::string name;
  std::vector<std::string> elems;
  int one = -1;
  int zero = -1;
  int minus_one = -1;
  std::vector<int> mul_table;  // n*n
  std::vector<ElemSet> rel;    // n*n cells; rel[a*n+b] = {d : (d,a,b)}
  RsPresentation presentation = RsPresentation::D;

  int size() const { return static_cast<int>(elems.size()); }
  int times(int a, int b) const { return mul_table[a * size() + b]; }
  int neg_of(int a) const { return times(minus_one, a); }
  int sq(int a) const { return times(a, a); }
  int index_of(const std::string& elem_name) const;

  /// Canonical representation relation (primitive or derived).
  std::vector<ElemSet> d_rel() const;
  /// Canonical transversal relation (primitive or via the (trans) closure).
  std::vector<ElemSet> dt_rel() const;

  void validate() const;
};

/// Transversal representation set Dt(a,b) of G.
ElemSet rs_trans_rep_set(const RealSemigroupData& G, int a, int b);

/// D(a,b) = {c : c in Dt(c^2 a, c^2 b)} for an explicit Dt table.
std::vector<ElemSet> rep_from_transversal(const RealSemigroupData& G,
                                          const std::vector<ElemSet>& dt);

}  // namespace mvalg
