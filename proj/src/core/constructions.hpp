#pragma once

#include <optional>
#include <span>
#include <vector>

#include "core/ars.hpp"
#include "core/multiring.hpp"
#include "core/realsemigroup.hpp"

namespace mvalg {

/// The sign structure on {-1, 0, 1}: usual multiplication and negation,
/// x + 0 = {x}, 1+1 = {1}, -1+-1 = {-1}, 1+-1 = {-1,0,1}.
FiniteMultiring build_q2();

/// Z/n with singleton addition, as a multiring.
FiniteMultiring build_z_mod(int n);

/// Componentwise product; a tuple is a member of a sum iff it is so in every
/// coordinate.
FiniteMultiring product_power(std::span<const FiniteMultiring> factors);
FiniteMultiring power(const FiniteMultiring& A, int k);

/// Signatures of A: every morphism into the sign structure, as the vector of
/// signs it assigns to the carrier. Deterministic (lexicographic) order.
std::vector<SignRow> sper(const FiniteMultiring& A);

struct PreorderSubset {
  ElemSet members;
  bool proper = false;  // -1 outside the closure
};

/// Least superset of gens containing every square, closed under
/// multiplication and under membership in sums.
PreorderSubset preorder_closure(const FiniteMultiring& A, const ElemSet& gens);

struct QuotientResult {
  FiniteMultiring structure;
  std::vector<int> projection;  // source index -> class index
};

/// Image of A under its signatures through T: carrier is the distinct value
/// tuples over {sigma : sigma(T) >= 0}, addition transported cellwise.
/// Requires T proper and -1 outside the square-sum closure; the result is
/// verified to be a multiring strongly embedded in the matching power of the
/// sign structure.
QuotientResult q_t(const FiniteMultiring& A, const PreorderSubset& T);
QuotientResult q_red(const FiniteMultiring& A);

/// Quotient by a multiplicative subset (1 in S, 0 not in S): a ~ b when
/// as = bt for some s, t in S; membership in sums by witness search.
QuotientResult marshall_quotient(const FiniteMultiring& A, const ElemSet& s_set);

/// Bounded-witness quotient of the integers in [-bound, bound] by the
/// sum-of-squares multiplier relation; stabilizes to the sign structure as
/// the bound grows.
FiniteMultiring z_sign_quotient(int bound);

struct GtResult {
  RealSemigroupData rs;
  bool degenerate = false;  // empty signature set through T
  /// Marshall quotient by T \ {0} and the induced surjection onto the
  /// semigroup carrier; absent when T \ {0} is not multiplicative.
  std::optional<QuotientResult> marshall;
  std::vector<int> phi;  // marshall class -> rs element, when marshall is set
};

/// Sign-function semigroup of A through T, with D computed pointwise.
GtResult g_t(const FiniteMultiring& A, const PreorderSubset& T);

}  // namespace mvalg
