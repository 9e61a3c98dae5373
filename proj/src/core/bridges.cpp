#include "core/bridges.hpp"

#include <algorithm>

#include "core/axioms.hpp"
#include "core/constructions.hpp"
#include "core/errors.hpp"
#include "core/morphisms.hpp"

namespace mvalg {

FiniteMultiring prs_to_mr_unchecked(const RealSemigroupData& G) {
  const int n = G.size();
  FiniteMultiring A;
  A.name = G.name;
  A.elems = G.elems;
  A.zero = G.zero;
  A.one = G.one;
  A.neg.resize(n);
  for (int a = 0; a < n; ++a) A.neg[a] = G.neg_of(a);
  A.mul_table = G.mul_table;
  A.add_table = G.dt_rel();
  A.validate();  // empty transversal cells cannot form a multiring
  return A;
}

FiniteMultiring prs_to_mr(const RealSemigroupData& G) {
  Report r = check_prs(G);
  if (!r.passed())
    throw CheckFailure("prs_to_mr: input fails the pre-real-semigroup axioms",
                       std::move(r));
  return prs_to_mr_unchecked(G);
}

RealSemigroupData mr_to_prs_unchecked(const FiniteMultiring& A) {
  RealSemigroupData G;
  G.name = A.name;
  G.elems = A.elems;
  G.one = A.one;
  G.zero = A.zero;
  G.minus_one = A.minus_one();
  G.mul_table = A.mul_table;
  G.presentation = RsPresentation::D;
  G.rel = rep_table(A);
  G.validate();
  return G;
}

RealSemigroupData mr_to_prs(const FiniteMultiring& A) {
  Report r = check_qt(A);
  if (!r.passed())
    throw CheckFailure("mr_to_prs: input fails the quadratically tuned axioms",
                       std::move(r));
  return mr_to_prs_unchecked(A);
}

FiniteMultiring ars_to_mr(const ARSData& S) {
  Report r = check_ars(S);
  if (!r.passed())
    throw CheckFailure("ars_to_mr: input fails the spectrum axioms",
                       std::move(r));
  const int n = S.size();
  FiniteMultiring A;
  A.name = S.name;
  for (int f = 0; f < n; ++f) A.elems.push_back(S.func_name(f));
  A.zero = S.index_of_const(0);
  A.one = S.index_of_const(1);
  A.neg.resize(n);
  const int m1 = S.index_of_const(-1);
  for (int f = 0; f < n; ++f) A.neg[f] = S.product_index(m1, f);
  A.mul_table.resize(n * n);
  A.add_table.resize(n * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      A.mul_table[a * n + b] = S.product_index(a, b);
      A.add_table[a * n + b] = S.trans_value_set(a, b);
    }
  A.validate();
  return A;
}

ARSData mr_to_ars(const FiniteMultiring& A) {
  Report r = check_real_reduced(A);
  if (!r.passed())
    throw CheckFailure("mr_to_ars: input fails the real reduced axioms",
                       std::move(r));
  auto sigs = sper(A);
  ARSData S;
  S.name = A.name;
  for (std::size_t i = 0; i < sigs.size(); ++i)
    S.points.push_back("x" + std::to_string(i));
  for (int a = 0; a < A.size(); ++a) {
    SignRow row(sigs.size());
    for (std::size_t i = 0; i < sigs.size(); ++i) row[i] = sigs[i][a];
    S.funcs.push_back(std::move(row));
  }
  S.canonicalize();  // throws on a repeated row: evaluation not injective
  return S;
}

namespace {

void add_entry(Report& r, std::string id, bool pass,
               std::vector<std::string> note = {}) {
  r.entries.push_back(ReportEntry{std::move(id), pass, std::move(note)});
}

}  // namespace

Report roundtrip_report(std::span<const FiniteMultiring> qt_items,
                        std::span<const RealSemigroupData> rs_items) {
  Report r;
  for (const auto& G : rs_items) {
    bool ok = false;
    std::vector<std::string> note;
    try {
      RealSemigroupData back = mr_to_prs(prs_to_mr(G));
      ok = back.rel == G.d_rel();
    } catch (const CheckFailure&) {
      note = {"bridge rejected input"};
    }
    add_entry(r, "RT-rel-" + G.name, ok, std::move(note));
    if (check_rs(G).passed()) {
      bool red = false;
      try {
        red = check_real_reduced(prs_to_mr(G)).passed();
      } catch (const CheckFailure&) {
      }
      add_entry(r, "RT-red-" + G.name, red);
    }
  }
  for (const auto& A : qt_items) {
    bool ok = false;
    std::vector<std::string> note;
    try {
      FiniteMultiring back = prs_to_mr(mr_to_prs(A));
      ok = back.add_table == A.add_table;
    } catch (const CheckFailure&) {
      note = {"bridge rejected input"};
    }
    add_entry(r, "RT-add-" + A.name, ok, std::move(note));
    if (check_real_reduced(A).passed()) {
      bool rs_ok = false;
      try {
        rs_ok = check_rs(mr_to_prs(A)).passed();
      } catch (const CheckFailure&) {
      }
      add_entry(r, "RT-rs-" + A.name, rs_ok);
    }
  }
  // multiring morphisms between quadratically tuned items coincide with the
  // D-preserving maps of the associated semigroups
  for (const auto& A : qt_items)
    for (const auto& B : qt_items) {
      bool ok = false;
      try {
        auto mr_maps = enumerate_morphisms(A, B, EnumMode::All);
        auto rs_maps = enumerate_morphisms(mr_to_prs_unchecked(A),
                                           mr_to_prs_unchecked(B),
                                           EnumMode::All);
        ok = mr_maps == rs_maps;
      } catch (const Error&) {
      }
      add_entry(r, "RT-mor-" + A.name + "->" + B.name, ok);
    }
  r.sort_entries();
  return r;
}

Report duality_check(const RealSemigroupData& G) {
  Report pre = check_rs(G);
  if (!pre.passed())
    throw CheckFailure("duality_check: input fails the real semigroup axioms",
                       std::move(pre));
  Report r;
  try {
    FiniteMultiring a1 = prs_to_mr(G);
    add_entry(r, "DU1-mr-real-reduced", check_real_reduced(a1).passed());
    ARSData s = mr_to_ars(a1);
    add_entry(r, "DU2-ars", check_ars(s).passed());
    FiniteMultiring a2 = ars_to_mr(s);
    RealSemigroupData g2 = mr_to_prs(a2);
    add_entry(r, "DU3-iso",
              !enumerate_morphisms(G, g2, EnumMode::Iso).empty());
  } catch (const Error& e) {
    add_entry(r, "DU-aborted", false, {e.what()});
  }
  r.sort_entries();
  return r;
}

Report duality_check(const ARSData& S) {
  Report pre = check_ars(S);
  if (!pre.passed())
    throw CheckFailure("duality_check: input fails the spectrum axioms",
                       std::move(pre));
  Report r;
  try {
    FiniteMultiring a = ars_to_mr(S);
    add_entry(r, "DU1-mr-real-reduced", check_real_reduced(a).passed());
    ARSData s2 = mr_to_ars(a);
    add_entry(r, "DU3-iso", ars_isomorphic(S, s2));
  } catch (const Error& e) {
    add_entry(r, "DU-aborted", false, {e.what()});
  }
  r.sort_entries();
  return r;
}

Report duality_check(const FiniteMultiring& A) {
  Report pre = check_real_reduced(A);
  if (!pre.passed())
    throw CheckFailure("duality_check: input fails the real reduced axioms",
                       std::move(pre));
  Report r;
  try {
    ARSData s = mr_to_ars(A);
    add_entry(r, "DU2-ars", check_ars(s).passed());
    FiniteMultiring a2 = ars_to_mr(s);
    add_entry(r, "DU3-iso",
              !enumerate_morphisms(A, a2, EnumMode::Iso).empty());
  } catch (const Error& e) {
    add_entry(r, "DU-aborted", false, {e.what()});
  }
  r.sort_entries();
  return r;
}

}  // namespace mvalg
