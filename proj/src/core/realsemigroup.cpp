#include "core/realsemigroup.hpp"

#include <set>

#include "core/errors.hpp"
#include "core/multiring.hpp"

namespace mvalg {

int RealSemigroupData::index_of(const std::string& elem_name) const {
  for (int i = 0; i < size(); ++i)
    if (elems[i] == elem_name) return i;
  return -1;
}

std::vector<ElemSet> rep_from_transversal(const RealSemigroupData& G,
                                          const std::vector<ElemSet>& dt) {
  const int n = G.size();
  std::vector<ElemSet> d(n * n, ElemSet(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        int c2 = G.sq(c);
        if (dt[G.times(c2, a) * n + G.times(c2, b)].test(c)) d[a * n + b].set(c);
      }
  return d;
}

std::vector<ElemSet> RealSemigroupData::d_rel() const {
  if (presentation == RsPresentation::D) return rel;
  return rep_from_transversal(*this, rel);
}

std::vector<ElemSet> RealSemigroupData::dt_rel() const {
  if (presentation == RsPresentation::Dt) return rel;
  std::vector<int> neg(size());
  for (int i = 0; i < size(); ++i) neg[i] = neg_of(i);
  return transversal_from_rep(size(), neg, rel);
}

ElemSet rs_trans_rep_set(const RealSemigroupData& G, int a, int b) {
  if (a < 0 || a >= G.size() || b < 0 || b >= G.size())
    throw UsageError("rs_trans_rep_set: index out of range");
  return G.dt_rel()[a * G.size() + b];
}

void RealSemigroupData::validate() const {
  const int n = size();
  if (n < 1) throw UsageError("realsemigroup needs a nonempty carrier");
  std::set<std::string> seen(elems.begin(), elems.end());
  if (static_cast<int>(seen.size()) != n)
    throw UsageError("duplicate element name");
  auto in_range = [n](int i) { return i >= 0 && i < n; };
  if (!in_range(one) || !in_range(zero) || !in_range(minus_one))
    throw UsageError("constant out of range");
  if (static_cast<int>(mul_table.size()) != n * n)
    throw UsageError("mul table not total");
  for (int v : mul_table)
    if (!in_range(v)) throw UsageError("mul entry out of range");
  if (static_cast<int>(rel.size()) != n * n) throw UsageError("rel not total");
  for (const ElemSet& s : rel)
    if (s.universe() != n) throw UsageError("rel cell has wrong width");
}

}  // namespace mvalg
