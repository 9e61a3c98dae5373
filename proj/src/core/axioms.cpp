#include "core/axioms.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <utility>

#include "core/errors.hpp"

namespace mvalg {

namespace {

// Lexicographic odometer over tuples; the first violation found is the least.
template <class Violated>
ReportEntry scan_axiom(const char* id, int arity, int n,
                       const std::vector<std::string>& names, Violated&& bad) {
  ReportEntry e{id, true, {}};
  std::vector<int> t(arity, 0);
  if (arity == 0) {
    e.pass = !bad(t.data());
    return e;
  }
  while (true) {
    if (bad(t.data())) {
      e.pass = false;
      for (int i : t) e.counterexample.push_back(names[i]);
      return e;
    }
    int k = arity - 1;
    while (k >= 0 && ++t[k] == n) {
      t[k] = 0;
      --k;
    }
    if (k < 0) break;
  }
  return e;
}

// ---------------------------------------------------------------- multiring

using MrPred = bool (*)(const FiniteMultiring&, const int*);
struct MrAxiom {
  const char* id;
  int arity;
  MrPred violated;
};

bool mr_add_comm(const FiniteMultiring& A, const int* t) {
  return !(A.plus(t[0], t[1]) == A.plus(t[1], t[0]));
}
bool mr_add_zero(const FiniteMultiring& A, const int* t) {
  return A.plus(t[1], A.zero).test(t[0]) != (t[0] == t[1]);
}
bool mr_exchange(const FiniteMultiring& A, const int* t) {
  int a = t[0], b = t[1], c = t[2];
  if (!A.plus(a, b).test(c)) return false;
  return !A.plus(c, A.neg[b]).test(a) || !A.plus(A.neg[a], c).test(b);
}
bool mr_add_assoc(const FiniteMultiring& A, const int* t) {
  int a = t[0], b = t[1], c = t[2];
  ElemSet lhs = A.plus_all(A.plus(a, b), c);
  ElemSet rhs(A.size());
  const ElemSet& bc = A.plus(b, c);
  for (int y = bc.first(); y >= 0; y = bc.next(y)) rhs |= A.plus(a, y);
  return !(lhs == rhs);
}
bool mr_mul_comm(const FiniteMultiring& A, const int* t) {
  return A.times(t[0], t[1]) != A.times(t[1], t[0]);
}
bool mr_mul_assoc(const FiniteMultiring& A, const int* t) {
  return A.times(A.times(t[0], t[1]), t[2]) !=
         A.times(t[0], A.times(t[1], t[2]));
}
bool mr_mul_one(const FiniteMultiring& A, const int* t) {
  return A.times(A.one, t[0]) != t[0] || A.times(t[0], A.one) != t[0];
}
bool mr_mul_zero(const FiniteMultiring& A, const int* t) {
  return A.times(A.zero, t[0]) != A.zero || A.times(t[0], A.zero) != A.zero;
}
bool mr_distrib(const FiniteMultiring& A, const int* t) {
  int a = t[0], b = t[1], c = t[2];
  const ElemSet& bc = A.plus(b, c);
  const ElemSet& target = A.plus(A.times(a, b), A.times(a, c));
  for (int x = bc.first(); x >= 0; x = bc.next(x))
    if (!target.test(A.times(a, x))) return true;
  return false;
}
bool mf_inverse(const FiniteMultiring& A, const int* t) {
  int a = t[0];
  if (a == A.zero) return false;
  for (int b = 0; b < A.size(); ++b)
    if (A.times(a, b) == A.one) return false;
  return true;
}

constexpr MrAxiom kMultiringAxioms[] = {
    {"MR1-add-comm", 2, mr_add_comm},   {"MR2-add-zero", 2, mr_add_zero},
    {"MR3-exchange", 3, mr_exchange},   {"MR4-add-assoc", 3, mr_add_assoc},
    {"MR5-mul-comm", 2, mr_mul_comm},   {"MR6-mul-assoc", 3, mr_mul_assoc},
    {"MR7-mul-one", 1, mr_mul_one},     {"MR8-mul-zero", 1, mr_mul_zero},
    {"MR9-distrib", 3, mr_distrib},
};
constexpr MrAxiom kMultifieldExtra[] = {{"MF0-inverse", 1, mf_inverse}};

// --------------------------------------------------- quadratically tuned

bool qt_cube(const FiniteMultiring& A, const int* t) {
  return A.times(A.sq(t[0]), t[0]) != t[0];
}
bool qt_one(const FiniteMultiring& A, const int* t) {
  return !A.plus(A.one, t[0]).test(A.one);
}
bool qt_cancel(const FiniteMultiring& A, const int* t) {
  int a = t[0], b = t[1], c = t[2], d = t[3], e = t[4];
  if (A.times(a, d) != A.times(b, d) || A.times(a, e) != A.times(b, e))
    return false;
  int c2 = A.sq(c);
  if (!A.plus(A.times(c2, d), A.times(c2, e)).test(c)) return false;
  return A.times(a, c) != A.times(b, c);
}
bool qt_descale(const FiniteMultiring& A, const int* t) {
  int a = t[0], b = t[1], c = t[2], d = t[3], e = t[4];
  int ce2 = A.sq(A.times(c, e)), de2 = A.sq(A.times(d, e));
  if (!A.plus(A.times(ce2, a), A.times(de2, b)).test(e)) return false;
  int e2 = A.sq(e);
  return !A.plus(A.times(e2, a), A.times(e2, b)).test(e);
}
bool qt_square(const FiniteMultiring& A, const int* t) {
  int a = t[0], b = t[1], c = t[2];
  int a2 = A.sq(a);
  if (!A.plus(A.times(a2, b), A.times(a2, c)).test(a)) return false;
  return !A.plus(A.sq(A.times(a, b)), A.sq(A.times(a, c))).test(a2);
}
bool qt_trans(const FiniteMultiring& A, const int* t) {
  int a = t[0], b = t[1], e = t[2];
  int e2 = A.sq(e), a2 = A.sq(a), b2 = A.sq(b);
  bool rhs = A.plus(A.times(a, e2), A.times(b, e2)).test(e) &&
             A.plus(A.times(b, a2), A.neg[A.times(e, a2)]).test(A.neg[a]) &&
             A.plus(A.times(a, b2), A.neg[A.times(e, b2)]).test(A.neg[b]);
  return A.plus(a, b).test(e) != rhs;
}

constexpr MrAxiom kQtAxioms[] = {
    {"QT0-cube", 1, qt_cube},    {"QT1-one", 1, qt_one},
    {"QT2-cancel", 5, qt_cancel}, {"QT3-descale", 5, qt_descale},
    {"QT4-square", 3, qt_square}, {"QT5-trans", 3, qt_trans},
};

// -------------------------------------------------------------- real reduced

bool rr_nonzero(const FiniteMultiring& A, const int*) {
  return A.one == A.zero;
}
bool rr_cube(const FiniteMultiring& A, const int* t) {
  return A.times(A.sq(t[0]), t[0]) != t[0];
}
bool rr_absorb(const FiniteMultiring& A, const int* t) {
  int a = t[0], b = t[1], c = t[2];
  return A.plus(a, A.times(a, A.sq(b))).test(c) && c != a;
}
bool rr_unique(const FiniteMultiring& A, const int* t) {
  int a = t[0], b = t[1], c = t[2], d = t[3];
  const ElemSet& s = A.plus(A.sq(a), A.sq(b));
  return s.test(c) && s.test(d) && c != d;
}
bool rr_sos(const FiniteMultiring& A, const int*) {
  return sums_of_squares(A).test(A.minus_one());
}
bool rr_consistent(const FiniteMultiring& A, const int*) {
  return real_reduced_corollary_form(A) != real_reduced_prop_form(A);
}

constexpr MrAxiom kRealReducedAxioms[] = {
    {"RR1-nonzero", 0, rr_nonzero}, {"RR2-cube", 1, rr_cube},
    {"RR3-absorb", 3, rr_absorb},   {"RR4-unique", 4, rr_unique},
    {"RR5-sos", 0, rr_sos},         {"RR6-consistent", 0, rr_consistent},
};

// ------------------------------------------------------------------ ternary

using TsPred = bool (*)(const RealSemigroupData&, const int*);
struct TsAxiom {
  const char* id;
  int arity;
  TsPred violated;
};

bool ts_unit(const RealSemigroupData& G, const int* t) {
  return G.times(G.one, t[0]) != t[0] || G.times(t[0], G.one) != t[0];
}
bool ts_comm(const RealSemigroupData& G, const int* t) {
  return G.times(t[0], t[1]) != G.times(t[1], t[0]);
}
bool ts_assoc(const RealSemigroupData& G, const int* t) {
  return G.times(G.times(t[0], t[1]), t[2]) !=
         G.times(t[0], G.times(t[1], t[2]));
}
bool ts_cube(const RealSemigroupData& G, const int* t) {
  return G.times(G.sq(t[0]), t[0]) != t[0];
}
bool ts_sign(const RealSemigroupData& G, const int*) {
  return G.minus_one == G.one || G.times(G.minus_one, G.minus_one) != G.one;
}
bool ts_zero(const RealSemigroupData& G, const int* t) {
  return G.times(t[0], G.zero) != G.zero || G.times(G.zero, t[0]) != G.zero;
}
bool ts_torsion(const RealSemigroupData& G, const int* t) {
  return G.times(G.minus_one, t[0]) == t[0] && t[0] != G.zero;
}

// TS1 spans three sub-laws; scanned unit, then commutativity, then
// associativity, so the re-evaluation arity identifies the sub-law.
ReportEntry scan_ts1(const RealSemigroupData& G) {
  ReportEntry e{"TS1-monoid", true, {}};
  for (auto [arity, pred] : {std::pair<int, TsPred>{1, ts_unit},
                             {2, ts_comm},
                             {3, ts_assoc}}) {
    ReportEntry sub = scan_axiom("TS1-monoid", arity, G.size(), G.elems,
                                 [&](const int* t) { return pred(G, t); });
    if (!sub.pass) return sub;
  }
  return e;
}

// ------------------------------------------------------- rs / prs axioms

struct RsCtx {
  const RealSemigroupData* G;
  int n;
  std::vector<ElemSet> D;
  std::vector<ElemSet> Dt;

  bool d(int x, int a, int b) const { return D[a * n + b].test(x); }
  bool dt(int x, int a, int b) const { return Dt[a * n + b].test(x); }
  int times(int a, int b) const { return G->times(a, b); }
  int neg(int a) const { return G->neg_of(a); }
  int sq(int a) const { return G->sq(a); }
};

RsCtx make_rs_ctx(const RealSemigroupData& G, RsPresentation pres) {
  RsCtx c{&G, G.size(), {}, {}};
  if (pres == RsPresentation::D) {
    c.D = G.d_rel();
    std::vector<int> neg(c.n);
    for (int i = 0; i < c.n; ++i) neg[i] = G.neg_of(i);
    c.Dt = transversal_from_rep(c.n, neg, c.D);
  } else {
    c.Dt = G.dt_rel();
    c.D = rep_from_transversal(G, c.Dt);
  }
  return c;
}

using RsPred = bool (*)(const RsCtx&, const int*);
struct RsAxiom {
  const char* id;
  int arity;
  RsPred violated;
};

bool rs_sym(const RsCtx& c, const int* t) {
  return c.d(t[2], t[0], t[1]) != c.d(t[2], t[1], t[0]);
}
bool rs_refl(const RsCtx& c, const int* t) { return !c.d(t[0], t[0], t[1]); }
bool rs_scale(const RsCtx& c, const int* t) {
  int a = t[0], b = t[1], cc = t[2], d = t[3];
  return c.d(a, b, cc) &&
         !c.d(c.times(a, d), c.times(b, d), c.times(cc, d));
}
bool rs_assoc(const RsCtx& c, const int* t) {
  int a = t[0], b = t[1], cc = t[2], d = t[3], e = t[4];
  if (!c.dt(a, b, cc) || !c.dt(cc, d, e)) return false;
  for (int x = 0; x < c.n; ++x)
    if (c.dt(x, b, d) && c.dt(a, x, e)) return false;
  return true;
}
bool rs_descale(const RsCtx& c, const int* t) {
  int a = t[0], b = t[1], cc = t[2], d = t[3], e = t[4];
  return c.d(e, c.times(c.sq(cc), a), c.times(c.sq(d), b)) && !c.d(e, a, b);
}
bool rs_cancel(const RsCtx& c, const int* t) {
  int a = t[0], b = t[1], cc = t[2], d = t[3], e = t[4];
  return c.times(a, d) == c.times(b, d) && c.times(a, e) == c.times(b, e) &&
         c.d(cc, d, e) && c.times(a, cc) != c.times(b, cc);
}
bool rs_trans_ax(const RsCtx& c, const int* t) {
  int a = t[0], b = t[1], cc = t[2];
  return c.d(cc, a, b) &&
         !c.dt(cc, c.times(c.sq(cc), a), c.times(c.sq(cc), b));
}
bool rs_zero(const RsCtx& c, const int* t) {
  int a = t[0], x = t[1];
  return c.dt(x, c.G->zero, a) != (x == a);
}
bool rs_square(const RsCtx& c, const int* t) {
  int a = t[0], b = t[1], cc = t[2];
  return c.d(a, b, cc) && !c.d(c.sq(a), c.sq(b), c.sq(cc));
}
bool rs_reduction(const RsCtx& c, const int* t) {
  int a = t[0], b = t[1];
  return a != b &&
         c.Dt[a * c.n + c.neg(b)].intersects(c.Dt[b * c.n + c.neg(a)]);
}

constexpr RsAxiom kRsAxioms[] = {
    {"RS0-sym", 3, rs_sym},       {"RS1-refl", 2, rs_refl},
    {"RS2-scale", 4, rs_scale},   {"RS3-assoc", 5, rs_assoc},
    {"RS4-descale", 5, rs_descale}, {"RS5-cancel", 5, rs_cancel},
    {"RS6-trans", 3, rs_trans_ax}, {"RS7p-zero", 2, rs_zero},
    {"RS8-square", 3, rs_square},
};
constexpr RsAxiom kRsReduction = {"RS7-reduction", 2, rs_reduction};

bool dt_sym(const RsCtx& c, const int* t) {
  return c.dt(t[0], t[1], t[2]) != c.dt(t[0], t[2], t[1]);
}
bool dt_neg(const RsCtx& c, const int* t) {
  int a = t[0], b = t[1], cc = t[2];
  return c.dt(a, b, cc) && !c.dt(c.neg(b), c.neg(a), cc);
}
bool dt_one(const RsCtx& c, const int* t) {
  return !c.dt(c.G->one, c.G->one, t[0]);
}
bool dt_scale(const RsCtx& c, const int* t) {
  int a = t[0], b = t[1], cc = t[2], d = t[3];
  return c.dt(a, b, cc) &&
         !c.dt(c.times(a, d), c.times(b, d), c.times(cc, d));
}
bool dt_assoc(const RsCtx& c, const int* t) { return rs_assoc(c, t); }
bool dt_cancel(const RsCtx& c, const int* t) {
  int a = t[0], b = t[1], cc = t[2], d = t[3], e = t[4];
  int c2 = c.sq(cc);
  return c.times(a, d) == c.times(b, d) && c.times(a, e) == c.times(b, e) &&
         c.dt(cc, c.times(c2, d), c.times(c2, e)) &&
         c.times(a, cc) != c.times(b, cc);
}
bool dt_descale(const RsCtx& c, const int* t) {
  int a = t[0], b = t[1], cc = t[2], d = t[3], e = t[4];
  int e2 = c.sq(e);
  return c.dt(e, c.times(c.sq(cc), c.times(e2, a)),
              c.times(c.sq(d), c.times(e2, b))) &&
         !c.dt(e, c.times(e2, a), c.times(e2, b));
}
bool dt_derive(const RsCtx& c, const int* t) {
  int a = t[0], b = t[1], cc = t[2];
  int c2 = c.sq(cc);
  return c.d(cc, a, b) && !c.dt(cc, c.times(c2, a), c.times(c2, b));
}
bool dt_square(const RsCtx& c, const int* t) {
  int a = t[0], b = t[1], cc = t[2];
  int a2 = c.sq(a);
  return c.dt(a, c.times(a2, b), c.times(a2, cc)) &&
         !c.dt(a2, c.sq(c.times(a, b)), c.sq(c.times(a, cc)));
}
bool dt_zero(const RsCtx& c, const int* t) { return rs_zero(c, t); }

constexpr RsAxiom kDtAxioms[] = {
    {"DT00-sym", 3, dt_sym},      {"DT01-neg", 3, dt_neg},
    {"DT02-one", 1, dt_one},      {"DT03-scale", 4, dt_scale},
    {"DT04-assoc", 5, dt_assoc},  {"DT05-cancel", 5, dt_cancel},
    {"DT06-descale", 5, dt_descale}, {"DT07-derive", 3, dt_derive},
    {"DT08-square", 3, dt_square}, {"DT09-zero", 2, dt_zero},
};
constexpr RsAxiom kDtReduction = {"DT10-reduction", 2, rs_reduction};

// Monoid-level precondition for the representation axioms: TS1, TS2, TS4,
// TS5. TS3 stays out on purpose (see header).
std::optional<ReportEntry> ts_precondition(const RealSemigroupData& G,
                                           const char* id) {
  ReportEntry sub = scan_ts1(G);
  const char* failed = sub.pass ? nullptr : "TS1-monoid";
  if (sub.pass) {
    struct {
      const char* id;
      int arity;
      TsPred pred;
    } rest[] = {{"TS2-cube", 1, ts_cube},
                {"TS4-zero", 1, ts_zero},
                {"TS5-torsion", 1, ts_torsion}};
    for (const auto& ax : rest) {
      sub = scan_axiom(ax.id, ax.arity, G.size(), G.elems,
                       [&](const int* t) { return ax.pred(G, t); });
      if (!sub.pass) {
        failed = ax.id;
        break;
      }
    }
  }
  if (!failed) return std::nullopt;
  ReportEntry e{id, false, {}};
  e.counterexample.push_back(failed);
  for (const auto& name : sub.counterexample) e.counterexample.push_back(name);
  return e;
}

Report check_rep_axioms(const RealSemigroupData& G, RsPresentation pres,
                        bool with_reduction) {
  Report r;
  const char* pre_id =
      pres == RsPresentation::D ? "RS-pre-ts" : "DT-pre-ts";
  if (auto pre = ts_precondition(G, pre_id)) {
    r.entries.push_back(*pre);
    return r;
  }
  r.entries.push_back(ReportEntry{pre_id, true, {}});
  RsCtx ctx = make_rs_ctx(G, pres);
  auto run = [&](const RsAxiom& ax) {
    r.entries.push_back(scan_axiom(ax.id, ax.arity, G.size(), G.elems,
                                   [&](const int* t) {
                                     return ax.violated(ctx, t);
                                   }));
  };
  if (pres == RsPresentation::D) {
    for (const auto& ax : kRsAxioms) run(ax);
    if (with_reduction) run(kRsReduction);
  } else {
    for (const auto& ax : kDtAxioms) run(ax);
    if (with_reduction) run(kDtReduction);
  }
  r.sort_entries();
  return r;
}

}  // namespace

// ------------------------------------------------------------- public api

ElemSet sums_of_squares(const FiniteMultiring& A) {
  const int n = A.size();
  ElemSet s(n);
  for (int a = 0; a < n; ++a) s.set(A.sq(a));
  bool grew = true;
  while (grew) {
    grew = false;
    for (int x = s.first(); x >= 0; x = s.next(x))
      for (int y = s.first(); y >= 0; y = s.next(y)) {
        const ElemSet& cell = A.plus(x, y);
        if (!cell.subset_of(s)) {
          s |= cell;
          grew = true;
        }
      }
  }
  return s;
}

Report check_multiring(const FiniteMultiring& A) {
  Report r;
  for (const auto& ax : kMultiringAxioms)
    r.entries.push_back(scan_axiom(ax.id, ax.arity, A.size(), A.elems,
                                   [&](const int* t) {
                                     return ax.violated(A, t);
                                   }));
  r.sort_entries();
  return r;
}

Report check_multifield(const FiniteMultiring& A) {
  Report r = check_multiring(A);
  for (const auto& ax : kMultifieldExtra)
    r.entries.push_back(scan_axiom(ax.id, ax.arity, A.size(), A.elems,
                                   [&](const int* t) {
                                     return ax.violated(A, t);
                                   }));
  r.sort_entries();
  return r;
}

Report check_ts(const RealSemigroupData& G) {
  Report r;
  r.entries.push_back(scan_ts1(G));
  struct {
    const char* id;
    int arity;
    TsPred pred;
  } rest[] = {{"TS2-cube", 1, ts_cube},
              {"TS3-sign", 0, ts_sign},
              {"TS4-zero", 1, ts_zero},
              {"TS5-torsion", 1, ts_torsion}};
  for (const auto& ax : rest)
    r.entries.push_back(scan_axiom(ax.id, ax.arity, G.size(), G.elems,
                                   [&](const int* t) {
                                     return ax.pred(G, t);
                                   }));
  r.sort_entries();
  return r;
}

Report check_prs(const RealSemigroupData& G, RsPresentation pres) {
  return check_rep_axioms(G, pres, false);
}
Report check_prs(const RealSemigroupData& G) {
  return check_prs(G, G.presentation);
}

Report check_rs(const RealSemigroupData& G, RsPresentation pres) {
  return check_rep_axioms(G, pres, true);
}
Report check_rs(const RealSemigroupData& G) {
  return check_rs(G, G.presentation);
}

namespace {

ReportEntry multiring_pre_entry(const FiniteMultiring& A, const char* id) {
  Report mr = check_multiring(A);
  ReportEntry e{id, mr.passed(), {}};
  if (!e.pass) {
    for (const auto& entry : mr.entries) {
      if (entry.pass) continue;
      e.counterexample.push_back(entry.axiom);
      for (const auto& name : entry.counterexample)
        e.counterexample.push_back(name);
      break;
    }
  }
  return e;
}

}  // namespace

Report check_qt(const FiniteMultiring& A) {
  Report r;
  r.entries.push_back(multiring_pre_entry(A, "QT-pre"));
  for (const auto& ax : kQtAxioms)
    r.entries.push_back(scan_axiom(ax.id, ax.arity, A.size(), A.elems,
                                   [&](const int* t) {
                                     return ax.violated(A, t);
                                   }));
  r.sort_entries();
  return r;
}

Report check_real_reduced(const FiniteMultiring& A) {
  Report r;
  r.entries.push_back(multiring_pre_entry(A, "RR-pre"));
  for (const auto& ax : kRealReducedAxioms)
    r.entries.push_back(scan_axiom(ax.id, ax.arity, A.size(), A.elems,
                                   [&](const int* t) {
                                     return ax.violated(A, t);
                                   }));
  r.sort_entries();
  return r;
}

bool real_reduced_corollary_form(const FiniteMultiring& A) {
  const int n = A.size();
  if (A.one == A.zero) return false;
  for (int a = 0; a < n; ++a)
    if (A.times(A.sq(a), a) != a) return false;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const ElemSet& cell = A.plus(a, A.times(a, A.sq(b)));
      if (!(cell == ElemSet::single(n, a))) return false;
      if (A.plus(A.sq(a), A.sq(b)).count() != 1) return false;
    }
  return true;
}

bool real_reduced_prop_form(const FiniteMultiring& A) {
  const int n = A.size();
  if (sums_of_squares(A).test(A.minus_one())) return false;
  for (int a = 0; a < n; ++a)
    if (A.times(A.sq(a), a) != a) return false;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (!(A.plus(a, A.times(a, A.sq(b))) == ElemSet::single(n, a)))
        return false;
      if (A.plus(A.sq(a), A.sq(b)).count() != 1) return false;
    }
  return true;
}

// --------------------------------------------------------------------- ars

namespace {

struct ArsCtx {
  const ARSData* S;
  int n;
  std::vector<ElemSet> D;
  std::vector<ElemSet> Dt;
};

ArsCtx make_ars_ctx(const ARSData& S) {
  ArsCtx c{&S, S.size(), {}, {}};
  c.D.resize(c.n * c.n);
  c.Dt.resize(c.n * c.n);
  for (int a = 0; a < c.n; ++a)
    for (int b = 0; b < c.n; ++b) {
      c.D[a * c.n + b] = S.value_set(a, b);
      c.Dt[a * c.n + b] = S.trans_value_set(a, b);
    }
  return c;
}

ReportEntry ars_ax1(const ARSData& S) {
  ReportEntry e{"AX1", true, {}};
  for (int sign : {-1, 0, 1}) {
    if (S.index_of_const(sign) < 0) {
      e.pass = false;
      e.counterexample = {"missing constant " + std::to_string(sign)};
      return e;
    }
  }
  for (int f = 0; f < S.size(); ++f)
    for (int g = 0; g < S.size(); ++g)
      if (S.product_index(f, g) < 0) {
        e.pass = false;
        e.counterexample = {S.func_name(f), S.func_name(g)};
        return e;
      }
  for (int x = 0; x < S.point_count(); ++x)
    for (int y = x + 1; y < S.point_count(); ++y) {
      bool separated = false;
      for (int f = 0; f < S.size() && !separated; ++f)
        separated = S.funcs[f][x] != S.funcs[f][y];
      if (!separated) {
        e.pass = false;
        e.counterexample = {S.points[x], S.points[y]};
        return e;
      }
    }
  return e;
}

// Enumerates every submonoid P with P u -P = G, -1 not in P, D(P,P) in P and
// the prime condition, by branching element-by-element with closure
// propagation; each qualifying P must be a point cone.
struct Ax2Search {
  const ARSData& S;
  const ArsCtx& ctx;
  bool cone_nonneg;
  std::vector<int> neg_idx;
  std::vector<char> st;  // 0 undecided, 1 in, 2 out
  std::vector<int> ins;
  std::vector<int> work;
  std::vector<std::vector<int>> violations;

  Ax2Search(const ARSData& s, const ArsCtx& c, bool nonneg)
      : S(s), ctx(c), cone_nonneg(nonneg), neg_idx(s.size()), st(s.size(), 0) {
    for (int f = 0; f < S.size(); ++f) {
      SignRow row(S.points.size());
      for (std::size_t x = 0; x < S.points.size(); ++x)
        row[x] = static_cast<std::int8_t>(-S.funcs[f][x]);
      neg_idx[f] = S.index_of_row(row);
    }
    st[S.index_of_const(-1)] = 2;
    mark_in(S.index_of_const(1));
    for (int f = 0; f < S.size(); ++f)
      if (neg_idx[f] == f) mark_in(f);  // P u -P = G puts self-negatives in P
  }

  bool mark_in(int f) {
    if (st[f] == 2) return false;
    if (st[f] == 1) return true;
    st[f] = 1;
    ins.push_back(f);
    work.push_back(f);
    return true;
  }

  bool close_pair(int f, int g) {
    int p = S.product_index(f, g);
    if (p < 0 || !mark_in(p)) return false;
    const ElemSet& val = ctx.D[f * ctx.n + g];
    for (int h = val.first(); h >= 0; h = val.next(h))
      if (!mark_in(h)) return false;
    return true;
  }

  bool propagate() {
    while (!work.empty()) {
      int f = work.back();
      work.pop_back();
      for (std::size_t i = 0; i < ins.size(); ++i)
        if (!close_pair(f, ins[i]) || !close_pair(ins[i], f)) return false;
    }
    return true;
  }

  bool qualifies() const {
    for (int f = 0; f < S.size(); ++f)
      if (st[f] != 1 && st[neg_idx[f]] != 1) return false;
    auto in_support = [&](int f) {  // P n -P
      return st[f] == 1 && st[neg_idx[f]] == 1;
    };
    for (int f = 0; f < S.size(); ++f)
      for (int g = 0; g < S.size(); ++g) {
        int p = S.product_index(f, g);
        if (p >= 0 && in_support(p) && !in_support(f) && !in_support(g))
          return false;
      }
    return true;
  }

  bool matches_some_cone() const {
    for (int x = 0; x < S.point_count(); ++x) {
      bool match = true;
      for (int f = 0; f < S.size() && match; ++f) {
        bool in_cone = cone_nonneg ? S.funcs[f][x] >= 0 : S.funcs[f][x] <= 0;
        match = in_cone == (st[f] == 1);
      }
      if (match) return true;
    }
    return false;
  }

  void search() {
    if (!propagate()) return;
    int g = -1;
    for (int i = 0; i < S.size(); ++i)
      if (st[i] == 0) {
        g = i;
        break;
      }
    if (g < 0) {
      if (qualifies() && !matches_some_cone()) record();
      return;
    }
    int ng = neg_idx[g];
    auto saved_st = st;
    auto saved_ins = ins;
    auto branch = [&](int sg, int sng) {
      bool ok = sg == 1 ? mark_in(g) : (st[g] = 2, true);
      if (ok && sng != 0) ok = sng == 1 ? mark_in(ng) : (st[ng] = 2, true);
      if (ok) search();
      st = saved_st;
      ins = saved_ins;
      work.clear();
    };
    if (ng != g && st[ng] == 0) {
      branch(1, 2);
      branch(2, 1);
      branch(1, 1);
    } else if (st[ng] == 2) {
      branch(1, 0);  // partner out: g forced in
    } else {
      branch(1, 0);
      branch(2, 0);
    }
  }

  void record() {
    std::vector<int> members;
    for (int f = 0; f < S.size(); ++f)
      if (st[f] == 1) members.push_back(f);
    violations.push_back(std::move(members));
  }
};

bool ax2_enumerable(const ARSData& S) {
  if (S.index_of_const(-1) < 0 || S.index_of_const(0) < 0 ||
      S.index_of_const(1) < 0)
    return false;
  for (int f = 0; f < S.size(); ++f) {
    SignRow row(S.points.size());
    for (std::size_t x = 0; x < S.points.size(); ++x)
      row[x] = static_cast<std::int8_t>(-S.funcs[f][x]);
    if (S.index_of_row(row) < 0) return false;
  }
  return true;
}

}  // namespace

Report check_ars(const ARSData& S, const ArsOptions& opt) {
  Report r;
  ArsCtx ctx = make_ars_ctx(S);
  r.entries.push_back(ars_ax1(S));

  // AX2 needs the constants and product/negation closure; when those are
  // missing the defect is already reported under AX1.
  ReportEntry ax2{"AX2", true, {}};
  if (ax2_enumerable(S)) {
    Ax2Search search(S, ctx, opt.cone_nonneg);
    search.search();
    if (!search.violations.empty()) {
      ax2.pass = false;
      std::sort(search.violations.begin(), search.violations.end());
      for (int f : search.violations.front())
        ax2.counterexample.push_back(S.func_name(f));
    }
  }
  r.entries.push_back(ax2);

  const int n = S.size();
  auto member_names = [&](const int* t, int k) {
    std::vector<std::string> out;
    for (int i = 0; i < k; ++i) out.push_back(S.func_name(t[i]));
    return out;
  };

  ReportEntry ax3a{"AX3a", true, {}};
  {
    std::vector<int> t(4, 0);
    bool done = false;
    while (!done) {
      int a = t[0], b = t[1], c = t[2], p = t[3];
      bool premise = false;
      const ElemSet& bc = ctx.D[b * n + c];
      for (int q = bc.first(); q >= 0 && !premise; q = bc.next(q))
        premise = ctx.D[a * n + q].test(p);
      if (premise) {
        bool concl = false;
        const ElemSet& ab = ctx.D[a * n + b];
        for (int rr = ab.first(); rr >= 0 && !concl; rr = ab.next(rr))
          concl = ctx.D[rr * n + c].test(p);
        if (!concl) {
          ax3a.pass = false;
          ax3a.counterexample = member_names(t.data(), 4);
          break;
        }
      }
      int k = 3;
      while (k >= 0 && ++t[k] == n) {
        t[k] = 0;
        --k;
      }
      done = k < 0;
    }
  }
  r.entries.push_back(ax3a);

  ReportEntry ax3b{"AX3b", true, {}};
  for (int a = 0; a < n && ax3b.pass; ++a)
    for (int b = 0; b < n && ax3b.pass; ++b)
      if (ctx.Dt[a * n + b].empty()) {
        ax3b.pass = false;
        ax3b.counterexample = {S.func_name(a), S.func_name(b)};
      }
  r.entries.push_back(ax3b);

  ReportEntry ax3{"AX3", true, {}};
  {
    std::vector<int> t(4, 0);
    bool done = false;
    while (!done) {
      int a = t[0], b = t[1], c = t[2], p = t[3];
      bool premise = false;
      const ElemSet& bc = ctx.Dt[b * n + c];
      for (int q = bc.first(); q >= 0 && !premise; q = bc.next(q))
        premise = ctx.Dt[a * n + q].test(p);
      if (premise) {
        bool concl = false;
        const ElemSet& ab = ctx.Dt[a * n + b];
        for (int rr = ab.first(); rr >= 0 && !concl; rr = ab.next(rr))
          concl = ctx.Dt[rr * n + c].test(p);
        if (!concl) {
          ax3.pass = false;
          ax3.counterexample = member_names(t.data(), 4);
          break;
        }
      }
      int k = 3;
      while (k >= 0 && ++t[k] == n) {
        t[k] = 0;
        --k;
      }
      done = k < 0;
    }
  }
  r.entries.push_back(ax3);

  r.sort_entries();
  return r;
}

// ----------------------------------------------------------- re-evaluation

bool axiom_violated(const FiniteMultiring& A, std::string_view id,
                    std::span<const int> tuple) {
  for (const auto& ax : kMultiringAxioms)
    if (id == ax.id) return ax.violated(A, tuple.data());
  for (const auto& ax : kMultifieldExtra)
    if (id == ax.id) return ax.violated(A, tuple.data());
  for (const auto& ax : kQtAxioms)
    if (id == ax.id) return ax.violated(A, tuple.data());
  for (const auto& ax : kRealReducedAxioms)
    if (id == ax.id) return ax.violated(A, tuple.data());
  throw UsageError("unknown multiring axiom id: " + std::string(id));
}

bool axiom_violated(const RealSemigroupData& G, RsPresentation pres,
                    std::string_view id, std::span<const int> tuple) {
  if (id == "TS1-monoid") {
    switch (tuple.size()) {
      case 1: return ts_unit(G, tuple.data());
      case 2: return ts_comm(G, tuple.data());
      case 3: return ts_assoc(G, tuple.data());
      default: throw UsageError("TS1 tuple arity");
    }
  }
  if (id == "TS2-cube") return ts_cube(G, tuple.data());
  if (id == "TS3-sign") return ts_sign(G, tuple.data());
  if (id == "TS4-zero") return ts_zero(G, tuple.data());
  if (id == "TS5-torsion") return ts_torsion(G, tuple.data());
  RsCtx ctx = make_rs_ctx(G, pres);
  for (const auto& ax : kRsAxioms)
    if (id == ax.id) return ax.violated(ctx, tuple.data());
  if (id == kRsReduction.id) return kRsReduction.violated(ctx, tuple.data());
  for (const auto& ax : kDtAxioms)
    if (id == ax.id) return ax.violated(ctx, tuple.data());
  if (id == kDtReduction.id) return kDtReduction.violated(ctx, tuple.data());
  throw UsageError("unknown semigroup axiom id: " + std::string(id));
}

}  // namespace mvalg
