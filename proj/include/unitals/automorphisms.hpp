#pragma once

#include <optional>
#include <string>
#include <vector>

#include "unitals/unital.hpp"

namespace unitals {

/// A bijection on point indices.
struct PointPermutation {
  std::vector<int> image;

  bool is_identity() const;
  auto operator<=>(const PointPermutation&) const = default;
};

/// (f * g)(x) = f(g(x)).
PointPermutation compose(const PointPermutation& f, const PointPermutation& g);
PointPermutation inverse(const PointPermutation& f);

/// "(1 4 7)(2 5)" with fixed points omitted; "()" for the identity.
std::string cycle_notation(const PointPermutation& f);

/// True iff the permutation maps the block set onto itself.
/// Throws LengthMismatch when the image length is not the point count.
bool is_automorphism(const Unital& u, const PointPermutation& pi);

/// The full group T_[c] of automorphisms fixing the center and fixing every
/// block through the center setwise, found by constraint propagation over
/// candidate images of one reference point. Sorted by image vector, so the
/// identity comes first.
///
/// use_semiregular_pruning exploits the fact that a translation fixing any
/// second point is the identity; disabling it searches the same space without
/// that cut (for cross-checks).
std::vector<PointPermutation> translations_with_center(
    const Unital& u, int center, bool use_semiregular_pruning = true);

/// True iff |T_[c]| = order for every center c.
bool admits_all_translations(const Unital& u);

struct IsomorphismResult {
  std::optional<PointPermutation> map;  ///< carries blocks of a onto blocks of b
  std::string reason;                   ///< set when map is empty
};

/// Exhaustive backtracking search for a block-preserving point bijection.
/// Mismatched parameters give a definite "none with reason", not an error.
IsomorphismResult find_isomorphism(const Unital& a, const Unital& b);

}  // namespace unitals
