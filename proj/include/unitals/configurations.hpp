#pragma once

#include <array>
#include <optional>
#include <vector>

#include "unitals/unital.hpp"

namespace unitals {

/// Four pairwise-intersecting blocks whose six pairwise intersection points
/// are distinct, so each of the six points lies on exactly two of the four
/// blocks. blocks is sorted ascending; points[k] is the intersection of the
/// k-th block pair in the order (01, 02, 03, 12, 13, 23).
struct ONanWitness {
  std::array<int, 4> blocks;
  std::array<int, 6> points;
};

/// Exhaustive search over any pair-unique incidence structure. Returns the
/// witness with the lexicographically least sorted block quadruple, or
/// nothing. No false negatives.
std::optional<ONanWitness> find_onan(const Unital& u, int threads = 1);

/// Re-derives the six intersection points and checks the witness against the
/// structure; used to replay reported configurations.
bool validate_onan(const Unital& u, const ONanWitness& w);

/// All blocks missing x that meet every block joining x with a point of the
/// given block. The block itself always qualifies. Sorted ascending.
/// Throws PointOnBlock when x lies on the block.
std::vector<int> x_parallel_blocks(const Unital& u, int block_id, int x);

/// True iff candidate misses x and meets every block joining x with a point
/// of base. Single-candidate form of x_parallel_blocks.
bool is_x_parallel(const Unital& u, int candidate, int base, int x);

}  // namespace unitals
