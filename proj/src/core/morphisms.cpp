#include "core/morphisms.hpp"

#include <algorithm>
#include <numeric>

#include "core/errors.hpp"

namespace mvalg {

namespace {

void require_map_shape(int src_size, int dst_size, std::span<const int> map) {
  if (static_cast<int>(map.size()) != src_size)
    throw UsageError("morphism map length does not match source carrier");
  for (int v : map)
    if (v < 0 || v >= dst_size)
      throw UsageError("morphism map entry out of range");
}

// Backtracking over total maps with unit propagation through the
// single-valued operations. Constants are seeded before the search, so
// every branch starts from the prune-on-constants state.
struct MapSearch {
  int n, m;
  std::vector<int> map;        // -1 = unassigned
  std::vector<char> used;      // iso mode only
  std::vector<int> trail;
  bool injective = false;

  // single-valued constraints: for assigned a, f(una[a]) must be unb[f(a)]
  // (negation) and products propagate pairwise.
  const std::vector<int>* src_neg = nullptr;
  const std::vector<int>* dst_neg = nullptr;
  const std::vector<int>* src_mul = nullptr;
  const std::vector<int>* dst_mul = nullptr;

  explicit MapSearch(int n_, int m_, bool inj)
      : n(n_), m(m_), map(n_, -1), used(m_, 0), injective(inj) {}

  bool assign(int a, int v) {
    if (map[a] != -1) return map[a] == v;
    if (injective && used[v]) return false;
    map[a] = v;
    used[v] = 1;
    trail.push_back(a);
    if (src_neg && !assign((*src_neg)[a], (*dst_neg)[v])) return false;
    if (src_mul) {
      for (int b = 0; b < n; ++b) {
        if (map[b] == -1) continue;
        if (!assign((*src_mul)[a * n + b], (*dst_mul)[v * m + map[b]]))
          return false;
        if (!assign((*src_mul)[b * n + a], (*dst_mul)[map[b] * m + v]))
          return false;
      }
    }
    return true;
  }

  void rollback(std::size_t mark) {
    while (trail.size() > mark) {
      int a = trail.back();
      trail.pop_back();
      used[map[a]] = 0;
      map[a] = -1;
    }
  }

  template <class Accept>
  void run(Accept&& accept) {
    int a = 0;
    while (a < n && map[a] != -1) ++a;
    if (a == n) {
      accept(map);
      return;
    }
    for (int v = 0; v < m; ++v) {
      std::size_t mark = trail.size();
      if (assign(a, v)) run(accept);
      rollback(mark);
    }
  }
};

}  // namespace

bool is_morphism(const FiniteMultiring& src, const FiniteMultiring& dst,
                 std::span<const int> map) {
  require_map_shape(src.size(), dst.size(), map);
  if (map[src.zero] != dst.zero || map[src.one] != dst.one) return false;
  const int n = src.size();
  for (int a = 0; a < n; ++a)
    if (map[src.neg[a]] != dst.neg[map[a]]) return false;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (map[src.times(a, b)] != dst.times(map[a], map[b])) return false;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const ElemSet& cell = src.plus(a, b);
      const ElemSet& img = dst.plus(map[a], map[b]);
      for (int c = cell.first(); c >= 0; c = cell.next(c))
        if (!img.test(map[c])) return false;
    }
  return true;
}

bool is_morphism(const RealSemigroupData& src, const RealSemigroupData& dst,
                 std::span<const int> map) {
  require_map_shape(src.size(), dst.size(), map);
  if (map[src.one] != dst.one || map[src.zero] != dst.zero ||
      map[src.minus_one] != dst.minus_one)
    return false;
  const int n = src.size();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (map[src.times(a, b)] != dst.times(map[a], map[b])) return false;
  const auto d_src = src.d_rel();
  const auto d_dst = dst.d_rel();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const ElemSet& cell = d_src[a * n + b];
      const ElemSet& img = d_dst[map[a] * dst.size() + map[b]];
      for (int d = cell.first(); d >= 0; d = cell.next(d))
        if (!img.test(map[d])) return false;
    }
  return true;
}

bool is_strong_embedding(const FiniteMultiring& src,
                         const FiniteMultiring& dst,
                         std::span<const int> map) {
  require_map_shape(src.size(), dst.size(), map);
  std::vector<char> hit(dst.size(), 0);
  for (int v : map) {
    if (hit[v]) return false;
    hit[v] = 1;
  }
  if (!is_morphism(src, dst, map)) return false;
  const int n = src.size();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const ElemSet& img = dst.plus(map[a], map[b]);
      for (int c = 0; c < n; ++c)
        if (img.test(map[c]) && !src.plus(a, b).test(c)) return false;
    }
  return true;
}

std::vector<std::vector<int>> enumerate_morphisms(const FiniteMultiring& A,
                                                  const FiniteMultiring& B,
                                                  EnumMode mode) {
  std::vector<std::vector<int>> out;
  if (mode == EnumMode::Iso && A.size() != B.size()) return out;
  MapSearch s(A.size(), B.size(), mode == EnumMode::Iso);
  s.src_neg = &A.neg;
  s.dst_neg = &B.neg;
  s.src_mul = &A.mul_table;
  s.dst_mul = &B.mul_table;
  if (!s.assign(A.zero, B.zero) || !s.assign(A.one, B.one)) return out;
  s.run([&](const std::vector<int>& map) {
    if (mode == EnumMode::Iso) {
      if (is_strong_embedding(A, B, map)) out.push_back(map);
    } else {
      if (is_morphism(A, B, map)) out.push_back(map);
    }
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<int>> enumerate_morphisms(const RealSemigroupData& A,
                                                  const RealSemigroupData& B,
                                                  EnumMode mode) {
  std::vector<std::vector<int>> out;
  if (mode == EnumMode::Iso && A.size() != B.size()) return out;
  const auto d_a = A.d_rel();
  const auto d_b = B.d_rel();
  MapSearch s(A.size(), B.size(), mode == EnumMode::Iso);
  s.src_mul = &A.mul_table;
  s.dst_mul = &B.mul_table;
  if (!s.assign(A.zero, B.zero) || !s.assign(A.one, B.one) ||
      !s.assign(A.minus_one, B.minus_one))
    return out;
  const int n = A.size(), m = B.size();
  auto preserves = [&](const std::vector<int>& map) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        const ElemSet& cell = d_a[a * n + b];
        const ElemSet& img = d_b[map[a] * m + map[b]];
        for (int d = cell.first(); d >= 0; d = cell.next(d))
          if (!img.test(map[d])) return false;
      }
    return true;
  };
  auto reflects = [&](const std::vector<int>& map) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        const ElemSet& img = d_b[map[a] * m + map[b]];
        for (int d = 0; d < n; ++d)
          if (img.test(map[d]) && !d_a[a * n + b].test(d)) return false;
      }
    return true;
  };
  s.run([&](const std::vector<int>& map) {
    if (!preserves(map)) return;
    if (mode == EnumMode::Iso && !reflects(map)) return;
    out.push_back(map);
  });
  std::sort(out.begin(), out.end());
  return out;
}

bool ars_isomorphic(const ARSData& a, const ARSData& b) {
  if (a.point_count() != b.point_count() || a.size() != b.size()) return false;
  const int k = a.point_count();
  std::vector<int> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (int f = 0; f < a.size() && ok; ++f) {
      SignRow moved(k);
      for (int x = 0; x < k; ++x) moved[perm[x]] = a.funcs[f][x];
      ok = b.index_of_row(moved) >= 0;
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace mvalg
