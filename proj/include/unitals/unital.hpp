#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace unitals {

/// A block, stored as a sorted list of point indices.
using Block = std::vector<int>;

enum class ViolationKind { BlockSize, PointRange, PairMissing, PairDuplicated };

std::string to_string(ViolationKind k);

struct DesignViolation {
  ViolationKind kind;
  int block_a = -1;  ///< offending block index into the candidate list
  int block_b = -1;  ///< second block for PairDuplicated
  int point_a = -1;
  int point_b = -1;
  std::string describe() const;
};

/// Result of checking the 2-(q^3+1, q+1, 1) design axioms.
struct DesignReport {
  bool pass = false;
  std::vector<DesignViolation> violations;
  long long v = 0;  ///< q^3 + 1
  long long b = 0;  ///< number of blocks given
  long long r = 0;  ///< blocks per point; meaningful only when pass
};

/// Full scan of an arbitrary block list against the unital design axioms for
/// order q (v = q^3+1 points, blocks of q+1 distinct in-range points, every
/// point pair covered exactly once). Collects every violation; never throws.
DesignReport verify_design(const std::vector<Block>& candidate, int q);

/// An incidence structure with at most one block through each point pair.
/// Canonical storage: each block sorted, block list sorted lexicographically,
/// so structural equality is list equality. Immutable after construction;
/// concurrent reads are safe.
///
/// The constructor enforces only what every operation relies on (index range,
/// no repeated points, pair uniqueness). Whether the structure is an actual
/// unital design is verify()'s business; this split lets the same type carry
/// relaxed linear-space inputs such as the Fano control.
class Unital {
 public:
  Unital(int order, int num_points, std::vector<Block> blocks);

  int order() const { return order_; }
  int num_points() const { return num_points_; }
  int num_blocks() const { return static_cast<int>(blocks_.size()); }
  const Block& block(int id) const { return blocks_[id]; }
  const std::vector<Block>& blocks() const { return blocks_; }
  const std::vector<int>& blocks_through(int p) const { return through_[p]; }

  bool incident(int block_id, int p) const {
    return incidence_[static_cast<std::size_t>(block_id) * num_points_ + p] != 0;
  }

  /// Id of the unique block containing x and y, or -1 when the pair is not
  /// covered (possible only for relaxed inputs). Throws SamePoint on x == y.
  int joining_block(int x, int y) const;

  /// Id of the block equal to the given sorted point list, or -1.
  int find_block(const Block& sorted_block) const;

  DesignReport verify() const { return verify_design(blocks_, order_); }

  bool operator==(const Unital& o) const = default;

 private:
  int order_ = 0;
  int num_points_ = 0;
  std::vector<Block> blocks_;
  std::vector<std::vector<int>> through_;
  std::vector<int32_t> pair_block_;   // v x v, -1 when uncovered
  std::vector<uint8_t> incidence_;    // b x v
};

/// Blocks relabeled through a point bijection, re-canonicalized.
Unital relabel(const Unital& u, const std::vector<int>& perm);

enum class LoadMode {
  Strict,       ///< full UNITAL v1 checks: v = q^3+1, block size q+1
  LinearSpace,  ///< relaxed: any v, any block size >= 2; pairs still unique
};

/// Reads a UNITAL v1 file. Throws ParseError / VersionError.
Unital load_unital(const std::string& path, LoadMode mode = LoadMode::Strict);

/// Writes the canonical UNITAL v1 form; load(save(u)) == u byte for byte.
void save_unital(const Unital& u, const std::string& path);

/// Header and raw integer rows with no structural checks beyond syntax;
/// feed to verify_design to diagnose broken files.
struct RawUnitalFile {
  int q = 0;
  int declared_points = 0;
  std::vector<Block> blocks;
};
RawUnitalFile load_raw(const std::string& path);

}  // namespace unitals
