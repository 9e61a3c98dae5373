#include "core/ars.hpp"

#include <algorithm>
#include <set>

#include "core/errors.hpp"

namespace mvalg {

int ARSData::index_of_const(int sign) const {
  SignRow row(points.size(), static_cast<std::int8_t>(sign));
  return index_of_row(row);
}

int ARSData::index_of_row(const SignRow& row) const {
  auto it = std::lower_bound(funcs.begin(), funcs.end(), row);
  if (it != funcs.end() && *it == row)
    return static_cast<int>(it - funcs.begin());
  return -1;
}

int ARSData::product_index(int f, int g) const {
  SignRow prod(points.size());
  for (std::size_t x = 0; x < points.size(); ++x)
    prod[x] = static_cast<std::int8_t>(funcs[f][x] * funcs[g][x]);
  return index_of_row(prod);
}

ElemSet ARSData::value_set(int a, int b) const {
  ElemSet out(size());
  for (int c = 0; c < size(); ++c) {
    bool ok = true;
    for (int x = 0; x < point_count() && ok; ++x) {
      int av = funcs[a][x], bv = funcs[b][x], cv = funcs[c][x];
      ok = av * cv > 0 || bv * cv > 0 || cv == 0;
    }
    if (ok) out.set(c);
  }
  return out;
}

ElemSet ARSData::trans_value_set(int a, int b) const {
  ElemSet out(size());
  for (int c = 0; c < size(); ++c) {
    bool ok = true;
    for (int x = 0; x < point_count() && ok; ++x) {
      int av = funcs[a][x], bv = funcs[b][x], cv = funcs[c][x];
      ok = av * cv > 0 || bv * cv > 0 || (cv == 0 && bv == -av);
    }
    if (ok) out.set(c);
  }
  return out;
}

std::string ARSData::func_name(int f) const {
  std::string s = "(";
  for (std::size_t x = 0; x < points.size(); ++x) {
    if (x) s += ",";
    s += std::to_string(static_cast<int>(funcs[f][x]));
  }
  return s + ")";
}

void ARSData::canonicalize() {
  std::sort(funcs.begin(), funcs.end());
  validate();
}

void ARSData::validate() const {
  if (points.empty()) throw UsageError("ars needs a nonempty point set");
  std::set<std::string> seen(points.begin(), points.end());
  if (seen.size() != points.size()) throw UsageError("duplicate point name");
  for (const SignRow& row : funcs) {
    if (row.size() != points.size()) throw UsageError("sign row wrong length");
    for (int v : row)
      if (v < -1 || v > 1) throw UsageError("sign entry outside {-1,0,1}");
  }
  for (std::size_t i = 0; i + 1 < funcs.size(); ++i) {
    if (funcs[i] == funcs[i + 1]) throw UsageError("duplicate sign row");
    if (funcs[i] > funcs[i + 1]) throw UsageError("sign rows not canonical");
  }
}

}  // namespace mvalg
