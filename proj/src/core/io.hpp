#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "core/ars.hpp"
#include "core/multiring.hpp"
#include "core/realsemigroup.hpp"

namespace mvalg {

/// A parsed structure file of any kind.
struct Structure {
  std::variant<FiniteMultiring, RealSemigroupData, ARSData> v;

  std::string kind() const;
  const std::string& name() const;

  const FiniteMultiring* multiring() const {
    return std::get_if<FiniteMultiring>(&v);
  }
  const RealSemigroupData* semigroup() const {
    return std::get_if<RealSemigroupData>(&v);
  }
  const ARSData* ars() const { return std::get_if<ARSData>(&v); }
};

/// Parses and validates a JSON structure file. Errors carry the offending
/// field path. Round-trips bit-identically through serialize on canonical
/// files; serialize(parse(.)) canonicalizes otherwise.
Structure parse_structure(std::string_view text);

std::string serialize(const FiniteMultiring& A);
std::string serialize(const RealSemigroupData& G);
std::string serialize(const ARSData& S);
std::string serialize(const Structure& s);

}  // namespace mvalg
