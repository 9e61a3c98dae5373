#include "core/constructions.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "core/axioms.hpp"
#include "core/errors.hpp"
#include "core/morphisms.hpp"

namespace mvalg {

FiniteMultiring build_q2() {
  FiniteMultiring q;
  q.name = "q2";
  q.elems = {"-1", "0", "1"};
  const int m1 = 0, z = 1, p1 = 2;
  q.zero = z;
  q.one = p1;
  q.neg = {p1, z, m1};
  q.mul_table.assign(9, z);
  q.mul_table[m1 * 3 + m1] = p1;
  q.mul_table[m1 * 3 + p1] = m1;
  q.mul_table[p1 * 3 + m1] = m1;
  q.mul_table[p1 * 3 + p1] = p1;
  q.add_table.assign(9, ElemSet(3));
  for (int a = 0; a < 3; ++a) {
    q.plus_mut(a, z) = ElemSet::single(3, a);
    q.plus_mut(z, a) = ElemSet::single(3, a);
  }
  q.plus_mut(p1, p1) = ElemSet::single(3, p1);
  q.plus_mut(m1, m1) = ElemSet::single(3, m1);
  q.plus_mut(p1, m1) = ElemSet::full(3);
  q.plus_mut(m1, p1) = ElemSet::full(3);
  q.validate();
  return q;
}

FiniteMultiring build_z_mod(int n) {
  if (n < 1) throw UsageError("build_z_mod: modulus must be positive");
  FiniteMultiring A;
  A.name = "z" + std::to_string(n) + "-ring";
  for (int i = 0; i < n; ++i) A.elems.push_back(std::to_string(i));
  A.zero = 0;
  A.one = n > 1 ? 1 : 0;
  A.neg.resize(n);
  A.mul_table.resize(n * n);
  A.add_table.assign(n * n, ElemSet(n));
  for (int a = 0; a < n; ++a) {
    A.neg[a] = (n - a) % n;
    for (int b = 0; b < n; ++b) {
      A.mul_table[a * n + b] = (a * b) % n;
      A.plus_mut(a, b) = ElemSet::single(n, (a + b) % n);
    }
  }
  A.validate();
  return A;
}

FiniteMultiring product_power(std::span<const FiniteMultiring> factors) {
  if (factors.empty()) throw UsageError("product_power: no factors");
  const int k = static_cast<int>(factors.size());
  int n = 1;
  for (const auto& f : factors) n *= f.size();
  std::vector<std::vector<int>> tuples;
  tuples.reserve(n);
  std::vector<int> t(k, 0);
  while (true) {
    tuples.push_back(t);
    int i = k - 1;
    while (i >= 0 && ++t[i] == factors[i].size()) {
      t[i] = 0;
      --i;
    }
    if (i < 0) break;
  }
  auto index_of = [&](const std::vector<int>& tup) {
    int idx = 0;
    for (int i = 0; i < k; ++i) idx = idx * factors[i].size() + tup[i];
    return idx;
  };
  FiniteMultiring P;
  P.name = "product";
  for (const auto& tup : tuples) {
    std::string nm = "(";
    for (int i = 0; i < k; ++i) {
      if (i) nm += ",";
      nm += factors[i].elems[tup[i]];
    }
    P.elems.push_back(nm + ")");
  }
  std::vector<int> zt(k), ot(k);
  for (int i = 0; i < k; ++i) {
    zt[i] = factors[i].zero;
    ot[i] = factors[i].one;
  }
  P.zero = index_of(zt);
  P.one = index_of(ot);
  P.neg.resize(n);
  P.mul_table.resize(n * n);
  P.add_table.assign(n * n, ElemSet(n));
  std::vector<int> tmp(k);
  for (int a = 0; a < n; ++a) {
    for (int i = 0; i < k; ++i) tmp[i] = factors[i].neg[tuples[a][i]];
    P.neg[a] = index_of(tmp);
    for (int b = 0; b < n; ++b) {
      for (int i = 0; i < k; ++i)
        tmp[i] = factors[i].times(tuples[a][i], tuples[b][i]);
      P.mul_table[a * n + b] = index_of(tmp);
      ElemSet cell(n);
      for (int c = 0; c < n; ++c) {
        bool in = true;
        for (int i = 0; i < k && in; ++i)
          in = factors[i].plus(tuples[a][i], tuples[b][i]).test(tuples[c][i]);
        if (in) cell.set(c);
      }
      P.plus_mut(a, b) = cell;
    }
  }
  P.validate();
  return P;
}

FiniteMultiring power(const FiniteMultiring& A, int k) {
  if (k < 1) throw UsageError("power: exponent must be positive");
  std::vector<FiniteMultiring> fs(k, A);
  FiniteMultiring P = product_power(fs);
  P.name = A.name + "^" + std::to_string(k);
  return P;
}

std::vector<SignRow> sper(const FiniteMultiring& A) {
  FiniteMultiring q2 = build_q2();
  auto maps = enumerate_morphisms(A, q2, EnumMode::All);
  std::vector<SignRow> out;
  out.reserve(maps.size());
  for (const auto& m : maps) {
    SignRow sig(A.size());
    for (int a = 0; a < A.size(); ++a)
      sig[a] = static_cast<std::int8_t>(m[a] - 1);  // carrier is (-1,0,1)
    out.push_back(std::move(sig));
  }
  return out;
}

PreorderSubset preorder_closure(const FiniteMultiring& A, const ElemSet& gens) {
  const int n = A.size();
  ElemSet t(n);
  if (gens.universe() != n) throw UsageError("preorder_closure: bad universe");
  t |= gens;
  for (int a = 0; a < n; ++a) t.set(A.sq(a));
  bool grew = true;
  while (grew) {
    grew = false;
    for (int x = t.first(); x >= 0; x = t.next(x))
      for (int y = t.first(); y >= 0; y = t.next(y)) {
        int p = A.times(x, y);
        if (!t.test(p)) {
          t.set(p);
          grew = true;
        }
        const ElemSet& cell = A.plus(x, y);
        if (!cell.subset_of(t)) {
          t |= cell;
          grew = true;
        }
      }
  }
  return PreorderSubset{t, !t.test(A.minus_one())};
}

namespace {

// Distinct value tuples of the carrier under a set of signatures, in
// first-occurrence order, named after the least representative.
struct SignatureImage {
  std::vector<SignRow> tuples;      // one per class
  std::vector<int> cls;             // element -> class
  std::vector<int> rep;             // class -> least element
  std::map<SignRow, int> index;

  SignatureImage(const FiniteMultiring& A, const std::vector<SignRow>& sigs) {
    cls.resize(A.size());
    for (int a = 0; a < A.size(); ++a) {
      SignRow tup(sigs.size());
      for (std::size_t i = 0; i < sigs.size(); ++i) tup[i] = sigs[i][a];
      auto [it, fresh] = index.try_emplace(tup, static_cast<int>(tuples.size()));
      if (fresh) {
        tuples.push_back(tup);
        rep.push_back(a);
      }
      cls[a] = it->second;
    }
  }
};

}  // namespace

QuotientResult q_t(const FiniteMultiring& A, const PreorderSubset& T) {
  if (T.members.universe() != A.size())
    throw UsageError("q_t: preordering is over a different carrier");
  if (!T.proper) throw UsageError("q_t: improper preordering (-1 in T)");
  if (sums_of_squares(A).test(A.minus_one()))
    throw UsageError("q_t: -1 is a sum of squares");

  std::vector<SignRow> sigs;
  for (SignRow& s : sper(A)) {
    bool through = true;
    for (int x = T.members.first(); x >= 0 && through; x = T.members.next(x))
      through = s[x] >= 0;
    if (through) sigs.push_back(std::move(s));
  }

  SignatureImage img(A, sigs);
  const int m = static_cast<int>(img.tuples.size());
  FiniteMultiring Q;
  Q.name = "q_t(" + A.name + ")";
  for (int c = 0; c < m; ++c) Q.elems.push_back(A.elems[img.rep[c]]);
  Q.zero = img.cls[A.zero];
  Q.one = img.cls[A.one];
  Q.neg.resize(m);
  Q.mul_table.resize(m * m);
  Q.add_table.assign(m * m, ElemSet(m));
  for (int c = 0; c < m; ++c) {
    Q.neg[c] = img.cls[A.neg[img.rep[c]]];
    for (int d = 0; d < m; ++d)
      Q.mul_table[c * m + d] = img.cls[A.times(img.rep[c], img.rep[d])];
  }
  // union over representative pairs; coincides with the single-representative
  // rule whenever the quotient addition is well defined
  for (int a = 0; a < A.size(); ++a)
    for (int b = 0; b < A.size(); ++b) {
      const ElemSet& cell = A.plus(a, b);
      ElemSet& target = Q.add_table[img.cls[a] * m + img.cls[b]];
      for (int c = cell.first(); c >= 0; c = cell.next(c))
        target.set(img.cls[c]);
    }
  Q.validate();

  if (!check_multiring(Q).passed())
    throw Error("q_t: quotient is not a multiring");
  const int pts = static_cast<int>(sigs.size());
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      for (int c = 0; c < m; ++c) {
        bool pointwise = true;
        for (int i = 0; i < pts && pointwise; ++i) {
          int sa = img.tuples[a][i], sb = img.tuples[b][i],
              sc = img.tuples[c][i];
          // membership in the sign structure
          pointwise = sa == 1 && sb == -1 ? true
                      : sa == -1 && sb == 1 ? true
                      : sb == 0             ? sc == sa
                      : sa == 0             ? sc == sb
                                            : sc == sa;
        }
        if (Q.plus(a, b).test(c) != pointwise)
          throw Error("q_t: image is not strongly embedded in the power");
      }

  return QuotientResult{std::move(Q), img.cls};
}

QuotientResult q_red(const FiniteMultiring& A) {
  QuotientResult r = q_t(A, preorder_closure(A, sums_of_squares(A)));
  r.structure.name = "q_red(" + A.name + ")";
  return r;
}

QuotientResult marshall_quotient(const FiniteMultiring& A,
                                 const ElemSet& s_set) {
  const int n = A.size();
  if (s_set.universe() != n)
    throw UsageError("marshall_quotient: set over a different carrier");
  if (s_set.test(A.zero)) throw UsageError("marshall_quotient: 0 in S");
  if (!s_set.test(A.one)) throw UsageError("marshall_quotient: 1 not in S");
  for (int s = s_set.first(); s >= 0; s = s_set.next(s))
    for (int t = s_set.first(); t >= 0; t = s_set.next(t))
      if (!s_set.test(A.times(s, t)))
        throw UsageError("marshall_quotient: S not closed under product");

  // a ~ b iff as = bt for some s,t in S (transitive for multiplicative S)
  std::vector<int> uf(n);
  std::iota(uf.begin(), uf.end(), 0);
  auto find = [&](int a) {
    while (uf[a] != a) a = uf[a] = uf[uf[a]];
    return a;
  };
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      bool related = false;
      for (int s = s_set.first(); s >= 0 && !related; s = s_set.next(s))
        for (int t = s_set.first(); t >= 0 && !related; t = s_set.next(t))
          related = A.times(a, s) == A.times(b, t);
      if (related) uf[std::max(find(a), find(b))] = std::min(find(a), find(b));
    }

  std::vector<int> cls(n, -1), rep;
  for (int a = 0; a < n; ++a) {
    int r = find(a);
    if (cls[r] < 0) {
      cls[r] = static_cast<int>(rep.size());
      rep.push_back(r);
    }
    cls[a] = cls[r];
  }
  const int m = static_cast<int>(rep.size());

  FiniteMultiring Q;
  Q.name = "mquot(" + A.name + ")";
  for (int c = 0; c < m; ++c) Q.elems.push_back(A.elems[rep[c]]);
  Q.zero = cls[A.zero];
  Q.one = cls[A.one];
  Q.neg.resize(m);
  Q.mul_table.resize(m * m);
  Q.add_table.assign(m * m, ElemSet(m));
  for (int c = 0; c < m; ++c) {
    Q.neg[c] = cls[A.neg[rep[c]]];
    for (int d = 0; d < m; ++d)
      Q.mul_table[c * m + d] = cls[A.times(rep[c], rep[d])];
  }
  // class x in class a + class b iff xp in aq + br for some p,q,r in S
  for (int ca = 0; ca < m; ++ca)
    for (int cb = 0; cb < m; ++cb) {
      ElemSet cell(m);
      for (int cx = 0; cx < m; ++cx) {
        bool member = false;
        for (int q = s_set.first(); q >= 0 && !member; q = s_set.next(q))
          for (int r = s_set.first(); r >= 0 && !member; r = s_set.next(r)) {
            const ElemSet& sum = A.plus(A.times(rep[ca], q), A.times(rep[cb], r));
            for (int p = s_set.first(); p >= 0 && !member; p = s_set.next(p))
              member = sum.test(A.times(rep[cx], p));
          }
        if (member) cell.set(cx);
      }
      Q.add_table[ca * m + cb] = cell;
    }
  Q.validate();
  return QuotientResult{std::move(Q), cls};
}

FiniteMultiring z_sign_quotient(int bound) {
  if (bound < 1) throw UsageError("z_sign_quotient: bound must be >= 1");
  const long long cap = static_cast<long long>(bound) * bound;

  // nonzero sums of squares up to the bound
  std::vector<char> in_s(bound + 1, 0);
  for (long long k = 1; k * k <= bound; ++k) in_s[k * k] = 1;
  bool grew = true;
  while (grew) {
    grew = false;
    for (int x = 1; x <= bound; ++x)
      if (in_s[x])
        for (int y = 1; x + y <= bound; ++y)
          if (in_s[y] && !in_s[x + y]) {
            in_s[x + y] = 1;
            grew = true;
          }
  }
  std::vector<int> s_vals;
  for (int s = 1; s <= bound; ++s)
    if (in_s[s]) s_vals.push_back(s);

  const int width = 2 * bound + 1;
  auto slot = [&](long long v) { return static_cast<int>(v) + bound; };
  std::vector<int> uf(width);
  std::iota(uf.begin(), uf.end(), 0);
  auto find = [&](int a) {
    while (uf[a] != a) a = uf[a] = uf[uf[a]];
    return a;
  };
  for (long long a = -bound; a <= bound; ++a)
    for (long long b = a + 1; b <= bound; ++b) {
      bool related = false;
      for (int s : s_vals) {
        if (std::abs(a * s) > cap) continue;
        long long as = a * s;
        for (int t : s_vals) {
          if (b * t == as) {
            related = true;
            break;
          }
        }
        if (related) break;
      }
      if (related) {
        int ra = find(slot(a)), rb = find(slot(b));
        if (ra != rb) uf[std::max(ra, rb)] = std::min(ra, rb);
      }
    }

  // canonical representative: least absolute value, positive on ties
  std::vector<long long> best(width);
  std::vector<char> seen(width, 0);
  for (long long v = -bound; v <= bound; ++v) {
    int r = find(slot(v));
    if (!seen[r] || std::abs(v) < std::abs(best[r]) ||
        (std::abs(v) == std::abs(best[r]) && v > best[r])) {
      best[r] = v;
      seen[r] = 1;
    }
  }
  std::vector<long long> reps;
  for (int r = 0; r < width; ++r)
    if (seen[r] && find(r) == r) reps.push_back(best[r]);
  std::sort(reps.begin(), reps.end());
  const int m = static_cast<int>(reps.size());
  auto class_of = [&](long long v) {
    long long canon = best[find(slot(v))];
    return static_cast<int>(std::lower_bound(reps.begin(), reps.end(), canon) -
                            reps.begin());
  };

  FiniteMultiring Q;
  Q.name = "zsign" + std::to_string(bound);
  for (long long r : reps) Q.elems.push_back(std::to_string(r));
  Q.zero = class_of(0);
  Q.one = class_of(1);
  Q.neg.resize(m);
  Q.mul_table.resize(m * m);
  Q.add_table.assign(m * m, ElemSet(m));

  auto reduce = [&](long long v) -> int {
    if (v >= -bound && v <= bound) return class_of(v);
    for (long long c = -bound; c <= bound; ++c)
      for (int p : s_vals) {
        if (std::abs(c * p) > cap) continue;
        for (int q : s_vals)
          if (std::abs(v * q) <= cap && c * p == v * q)
            return class_of(c);
      }
    throw UsageError("z_sign_quotient: bound too small to reduce a product");
  };
  for (int a = 0; a < m; ++a) {
    Q.neg[a] = class_of(-reps[a]);
    for (int b = 0; b < m; ++b)
      Q.mul_table[a * m + b] = reduce(reps[a] * reps[b]);
  }

  // reach[v]: classes with a member x and p in S such that xp = v
  std::vector<ElemSet> reach(4 * cap + 1, ElemSet(m));
  for (long long x = -bound; x <= bound; ++x)
    for (int p : s_vals) {
      long long v = x * p;
      if (std::abs(v) <= 2 * cap) reach[v + 2 * cap].set(class_of(x));
    }
  std::vector<std::vector<long long>> members(m);
  for (long long v = -bound; v <= bound; ++v) members[class_of(v)].push_back(v);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      ElemSet cell(m);
      for (long long av : members[a])
        for (int q : s_vals) {
          if (std::abs(av * q) > cap) continue;
          for (long long bv : members[b])
            for (int r : s_vals) {
              if (std::abs(bv * r) > cap) continue;
              long long v = av * q + bv * r;
              if (std::abs(v) <= 2 * cap) cell |= reach[v + 2 * cap];
            }
        }
      if (cell.empty())
        throw UsageError(
            "z_sign_quotient: bound too small to witness addition");
      Q.add_table[a * m + b] = cell;
    }
  Q.validate();
  return Q;
}

GtResult g_t(const FiniteMultiring& A, const PreorderSubset& T) {
  if (T.members.universe() != A.size())
    throw UsageError("g_t: preordering is over a different carrier");
  std::vector<SignRow> sigs;
  for (SignRow& s : sper(A)) {
    bool through = true;
    for (int x = T.members.first(); x >= 0 && through; x = T.members.next(x))
      through = s[x] >= 0;
    if (through) sigs.push_back(std::move(s));
  }

  GtResult out;
  if (sigs.empty()) {
    out.degenerate = true;
    RealSemigroupData& G = out.rs;
    G.name = "g_t(" + A.name + ")";
    G.elems = {"0"};
    G.one = G.zero = G.minus_one = 0;
    G.mul_table = {0};
    G.rel = {ElemSet::full(1)};
    G.presentation = RsPresentation::D;
    return out;
  }

  SignatureImage img(A, sigs);
  const int m = static_cast<int>(img.tuples.size());
  const int pts = static_cast<int>(sigs.size());
  RealSemigroupData& G = out.rs;
  G.name = "g_t(" + A.name + ")";
  for (int c = 0; c < m; ++c) G.elems.push_back(A.elems[img.rep[c]]);
  G.one = img.cls[A.one];
  G.zero = img.cls[A.zero];
  G.minus_one = img.cls[A.minus_one()];
  G.mul_table.resize(m * m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      G.mul_table[a * m + b] = img.cls[A.times(img.rep[a], img.rep[b])];
  G.presentation = RsPresentation::D;
  G.rel.assign(m * m, ElemSet(m));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      ElemSet cell(m);
      for (int c = 0; c < m; ++c) {
        bool in = true;
        for (int i = 0; i < pts && in; ++i) {
          int av = img.tuples[a][i], bv = img.tuples[b][i],
              cv = img.tuples[c][i];
          in = av * cv > 0 || bv * cv > 0 || cv == 0;
        }
        if (in) cell.set(c);
      }
      G.rel[a * m + b] = cell;
    }
  G.validate();

  // induced surjection from the Marshall quotient by T \ {0}, when defined
  ElemSet s_set = T.members;
  s_set.reset(A.zero);
  bool multiplicative = s_set.test(A.one);
  for (int s = s_set.first(); s >= 0 && multiplicative; s = s_set.next(s))
    for (int t = s_set.first(); t >= 0 && multiplicative; t = s_set.next(t))
      multiplicative = s_set.test(A.times(s, t));
  if (multiplicative) {
    QuotientResult mq = marshall_quotient(A, s_set);
    std::vector<int> phi(mq.structure.size());
    for (int a = 0; a < A.size(); ++a) phi[mq.projection[a]] = img.cls[a];
    out.phi = std::move(phi);
    out.marshall = std::move(mq);
  }
  return out;
}

}  // namespace mvalg
