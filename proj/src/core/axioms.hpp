#pragma once

#include <span>
#include <string_view>

#include "core/ars.hpp"
#include "core/multiring.hpp"
#include "core/realsemigroup.hpp"
#include "core/report.hpp"

namespace mvalg {

/// Least subset containing every square and closed under membership in sums;
/// monotone fixpoint.
ElemSet sums_of_squares(const FiniteMultiring& A);

/// Commutative-multigroup laws, monoid laws, zero absorption and weak
/// distributivity. One entry per axiom, least violating tuple on failure.
Report check_multiring(const FiniteMultiring& A);
/// check_multiring plus multiplicative inverses for nonzero elements.
Report check_multifield(const FiniteMultiring& A);

/// Ternary-semigroup laws TS1..TS5.
Report check_ts(const RealSemigroupData& G);

/// Pre-real-semigroup axioms, in either presentation. The monoid-level
/// precondition (TS1, TS2, TS4, TS5) short-circuits the report when violated;
/// TS3 is deliberately not part of it, since the quadratically tuned
/// counterparts may identify 1 and -1 (standalone check_ts still reports it).
Report check_prs(const RealSemigroupData& G, RsPresentation pres);
Report check_prs(const RealSemigroupData& G);  // structure's own presentation

/// check_prs plus the Reduction axiom.
Report check_rs(const RealSemigroupData& G, RsPresentation pres);
Report check_rs(const RealSemigroupData& G);

/// Quadratically tuned multiring axioms QT0..QT5, with the multiring check as
/// a reported precondition entry.
Report check_qt(const FiniteMultiring& A);

/// Real reduced multiring characterization: 1 != 0, cubes, absorption,
/// uniqueness of square sums, -1 outside the square-sum closure, plus a
/// consistency entry comparing the two printed characterizations.
Report check_real_reduced(const FiniteMultiring& A);

bool real_reduced_corollary_form(const FiniteMultiring& A);
bool real_reduced_prop_form(const FiniteMultiring& A);

struct ArsOptions {
  /// Orders are matched against {a : a(x) >= 0}; the as-written variant uses
  /// {a : a(x) <= 0}.
  bool cone_nonneg = true;
};

/// Abstract-real-spectrum axioms AX1, AX2, AX3a, AX3b, AX3.
Report check_ars(const ARSData& S, const ArsOptions& opt = {});

/// Re-evaluate one axiom against an explicit tuple (for counterexample
/// replay). Throws UsageError for unknown ids.
bool axiom_violated(const FiniteMultiring& A, std::string_view id,
                    std::span<const int> tuple);
bool axiom_violated(const RealSemigroupData& G, RsPresentation pres,
                    std::string_view id, std::span<const int> tuple);

}  // namespace mvalg
