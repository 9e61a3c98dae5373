#pragma once

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "core/multiring.hpp"

namespace mvalg {

/// Nonempty coefficient tuple over a fixed ambient structure.
struct QForm {
  std::shared_ptr<const FiniteMultiring> ambient;
  std::vector<int> entries;

  int dim() const { return static_cast<int>(entries.size()); }
};

QForm make_form(std::shared_ptr<const FiniteMultiring> ambient,
                std::vector<int> entries);

enum class IsoMode { Strong, Weak };

/// Product of the entries, left to right.
int form_disc(const QForm& f);
QForm form_scale(int a, const QForm& f);
QForm form_sum(const QForm& f, const QForm& g);
/// Row-major entry products: left index outer, right index inner.
QForm form_tensor(const QForm& f, const QForm& g);
/// result[i] = entries[perm[i]]; perm must be a permutation of 0..dim-1.
QForm form_permute(const QForm& f, std::span<const int> perm);

/// Certificate for an isometry: the chosen x, y, z_3..z_n and the three
/// sub-isometries at each inductive step; leaves are the dimension <= 2 base
/// facts, replayable against the ambient tables.
struct WitnessNode {
  int x = -1;
  int y = -1;
  std::vector<int> zs;
  std::shared_ptr<const WitnessNode> sub1, sub2, sub3;

  bool leaf() const { return !sub1; }
};

struct IsoResult {
  bool isometric = false;
  std::shared_ptr<const WitnessNode> witness;  // set on success
};

/// Top-down memoized search. Unequal dimensions decide false; distinct
/// ambients are a usage error. Witness choices are searched lexicographically
/// in (x, y, z_3, ...), first success kept.
IsoResult iso_decide(const QForm& f, const QForm& g, IsoMode mode);

/// Bottom-up dynamic program over all tuple pairs of the dimension; an
/// independent cross-check of iso_decide for small instances. Throws
/// UsageError when the pair table would exceed `pair_limit` entries.
bool iso_oracle(const QForm& f, const QForm& g, IsoMode mode,
                std::size_t pair_limit = std::size_t(1) << 24);

bool witness_valid(const QForm& f, const QForm& g, IsoMode mode,
                   const WitnessNode& w);
std::string witness_render(const QForm& f, const QForm& g, IsoMode mode,
                           const WitnessNode& w);

std::string form_render(const QForm& f);

}  // namespace mvalg
