#pragma once

#include <span>
#include <vector>

#include "core/ars.hpp"
#include "core/multiring.hpp"
#include "core/realsemigroup.hpp"

namespace mvalg {

enum class EnumMode { All, Iso };

/// Multiring morphism laws: f(0)=0, f(1)=1, f(-a)=-f(a), f(ab)=f(a)f(b),
/// and c in a+b implies f(c) in f(a)+f(b).
bool is_morphism(const FiniteMultiring& src, const FiniteMultiring& dst,
                 std::span<const int> map);

/// Semigroup-with-D morphism laws: constants 1, 0, -1 preserved,
/// f(ab)=f(a)f(b), and d in D(a,b) implies f(d) in D(f(a),f(b)).
bool is_morphism(const RealSemigroupData& src, const RealSemigroupData& dst,
                 std::span<const int> map);

/// Injective morphism that also reflects additive membership.
bool is_strong_embedding(const FiniteMultiring& src,
                         const FiniteMultiring& dst,
                         std::span<const int> map);

/// All morphisms of the requested mode, as map arrays in lexicographic order.
/// Iso mode: bijections preserving and reflecting membership (resp. D).
std::vector<std::vector<int>> enumerate_morphisms(const FiniteMultiring& A,
                                                  const FiniteMultiring& B,
                                                  EnumMode mode);
std::vector<std::vector<int>> enumerate_morphisms(const RealSemigroupData& A,
                                                  const RealSemigroupData& B,
                                                  EnumMode mode);

/// Isomorphism of candidate spectra: a point bijection carrying the function
/// rows of one onto the other.
bool ars_isomorphic(const ARSData& a, const ARSData& b);

}  // namespace mvalg
