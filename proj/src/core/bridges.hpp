#pragma once

#include <span>

#include "core/ars.hpp"
#include "core/multiring.hpp"
#include "core/realsemigroup.hpp"
#include "core/report.hpp"

namespace mvalg {

/// Multiring on the same carrier with a + b = Dt(a,b). Rejects inputs failing
/// check_prs (CheckFailure carries the report).
FiniteMultiring prs_to_mr(const RealSemigroupData& G);
FiniteMultiring prs_to_mr_unchecked(const RealSemigroupData& G);

/// Semigroup with the derived representation relation d in d^2 a + d^2 b.
/// Rejects inputs failing check_qt.
RealSemigroupData mr_to_prs(const FiniteMultiring& A);
RealSemigroupData mr_to_prs_unchecked(const FiniteMultiring& A);

/// Multiring on the function set of a spectrum, addition by transversal
/// value sets. Rejects inputs failing check_ars.
FiniteMultiring ars_to_mr(const ARSData& S);

/// Spectrum of a real reduced multiring: points are its signatures, functions
/// the evaluation rows. Rejects inputs failing check_real_reduced.
ARSData mr_to_ars(const FiniteMultiring& A);

/// Instance-level functor verification over a corpus: translation round trips
/// recover the tables, restricted translations land in the reduced classes,
/// and morphism sets correspond.
Report roundtrip_report(std::span<const FiniteMultiring> qt_items,
                        std::span<const RealSemigroupData> rs_items);

/// Four-step duality loop back to an isomorphic copy. Rejects inputs failing
/// check_rs (resp. check_ars, check_real_reduced).
Report duality_check(const RealSemigroupData& G);
Report duality_check(const ARSData& S);
Report duality_check(const FiniteMultiring& A);

}  // namespace mvalg
