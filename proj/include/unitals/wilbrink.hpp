#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "unitals/automorphisms.hpp"
#include "unitals/configurations.hpp"
#include "unitals/unital.hpp"

namespace unitals {

enum class WilbrinkCondition { I, II, III };
std::string to_string(WilbrinkCondition c);

struct SweepMode {
  bool exhaustive = true;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;

  static SweepMode full() { return {true, 0, 0}; }
  static SweepMode sampled(std::uint64_t n, std::uint64_t s) {
    return {false, n, s};
  }
};

/// Condition II counterexample: x off L, the block joining x and y meets L,
/// yet no block through y is x-parallel to L.
struct ConditionIIWitness {
  int block_l = -1;
  int x = -1;
  int y = -1;
};

/// Condition III counterexample: blocks m[i] through x, points y[i], z[i] on
/// m[i] off x; z0 v z_i is x-parallel to y0 v y_i for i = 1, 2 but z1 v z2 is
/// not x-parallel to y1 v y2.
struct ConditionIIIWitness {
  int x = -1;
  std::array<int, 3> m{-1, -1, -1};
  std::array<int, 3> y{-1, -1, -1};
  std::array<int, 3> z{-1, -1, -1};
};

struct ConditionReport {
  WilbrinkCondition condition = WilbrinkCondition::I;
  bool holds = false;
  std::optional<ONanWitness> onan_witness;
  std::optional<ConditionIIWitness> ii_witness;
  std::optional<ConditionIIIWitness> iii_witness;
  bool exhaustive = true;
  std::uint64_t samples = 0;  ///< sampled mode: requested premise checks
  std::uint64_t seed = 0;     ///< sampled mode: echoed seed
  std::uint64_t instances_checked = 0;
  std::uint64_t premise_hits = 0;
  std::uint64_t trivial_cases = 0;  ///< II: instances with y on L
  bool used_uniqueness_shortcut = false;
};

/// No O'Nan configurations. Always exhaustive.
ConditionReport check_condition_i(const Unital& u, int threads = 1);

/// For every block L, x off L and y != x whose joining block with x meets L,
/// some block through y is x-parallel to L. The y-on-L instances hold
/// trivially (L itself) and are tallied separately, not counted.
/// Reads the condition's unbound symbol B as L.
ConditionReport check_condition_ii(const Unital& u,
                                   SweepMode mode = SweepMode::full(),
                                   int threads = 1);

enum class ShortcutPolicy {
  Auto,     ///< uniqueness shortcut when the structure is O'Nan-free,
            ///< full enumeration otherwise
  Force,    ///< shortcut unconditionally; PrecedenceError when unsound
  Disable,  ///< full enumeration
};

/// Coherence of x-parallelism across block triples through a common point.
/// The uniqueness shortcut derives each z_i from the unique x-parallel block
/// through z0, which is sound only without O'Nan configurations; onan_free
/// passes that knowledge in when the caller already has it.
ConditionReport check_condition_iii(const Unital& u,
                                    SweepMode mode = SweepMode::full(),
                                    ShortcutPolicy policy = ShortcutPolicy::Auto,
                                    int threads = 1,
                                    std::optional<bool> onan_free = std::nullopt);

enum class Verdict { Classical, NotClassical, Undetermined };
std::string to_string(Verdict v);

struct ClassifyOptions {
  std::uint64_t samples = 1'000'000;   ///< for sampled sweeps at q >= 4
  std::optional<std::uint64_t> seed;   ///< required when sampling kicks in
  int threads = 1;
};

struct ClassificationVerdict {
  bool translations_ok = false;
  bool onan_free = false;
  std::vector<ConditionReport> conditions;
  std::optional<PointPermutation> iso_witness;
  Verdict verdict = Verdict::Undetermined;
  std::string detail;
  std::string consistency_alert;  ///< nonempty when the results contradict the theorem
};

/// Checks the hypotheses (all translations, no O'Nan configurations); when
/// both hold, runs conditions II and III and searches for an isomorphism onto
/// the classical unital of the same order. Verdict is classical only with a
/// validated witness; failed hypotheses give undetermined.
ClassificationVerdict classify(const Unital& u, const ClassifyOptions& opts = {});

/// Replay helpers: true when the recorded violation reproduces.
bool reverify_condition_ii_witness(const Unital& u, const ConditionIIWitness& w);
bool reverify_condition_iii_witness(const Unital& u, const ConditionIIIWitness& w);

}  // namespace unitals
