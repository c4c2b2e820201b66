#include "unitals/configurations.hpp"

#include <atomic>
#include <climits>
#include <stdexcept>

#include "unitals/errors.hpp"
#include "unitals/parallel.hpp"

namespace unitals {

namespace {

// meet[i*b + j] = the point where blocks i and j intersect, -1 if disjoint.
// Well defined because the structure is pair-unique.
std::vector<int32_t> block_meet_table(const Unital& u) {
  const std::size_t b = static_cast<std::size_t>(u.num_blocks());
  std::vector<int32_t> meet(b * b, -1);
  for (int p = 0; p < u.num_points(); ++p) {
    const std::vector<int>& through = u.blocks_through(p);
    for (std::size_t i = 0; i < through.size(); ++i)
      for (std::size_t j = i + 1; j < through.size(); ++j) {
        meet[static_cast<std::size_t>(through[i]) * b + through[j]] = p;
        meet[static_cast<std::size_t>(through[j]) * b + through[i]] = p;
      }
  }
  return meet;
}

}  // namespace

std::optional<ONanWitness> find_onan(const Unital& u, int threads) {
  const int b = u.num_blocks();
  if (b < 4) return std::nullopt;
  const std::vector<int32_t> meet = block_meet_table(u);
  auto meet_at = [&](int i, int j) {
    return meet[static_cast<std::size_t>(i) * b + j];
  };

  threads = std::max(1, std::min(resolve_threads(threads), b));
  std::vector<std::optional<ONanWitness>> found(threads);
  // least first-block id found so far; lets other workers cut off early
  std::atomic<int> best_first{INT_MAX};

  // A witness is located when (i, j, k) are its three least blocks and l its
  // largest. For fixed i the scan over j, then k, then minimal l yields the
  // lexicographically least quadruple starting at i, so the first hit per
  // worker is that worker's best and can stop it.
  run_workers(threads, [&](int t) {
    for (int i = t; i < b; i += threads) {
      if (i > best_first.load(std::memory_order_relaxed)) break;
      for (int j = i + 1; j < b; ++j) {
        int p = meet_at(i, j);
        if (p < 0) continue;
        for (int k = j + 1; k < b; ++k) {
          int a = meet_at(i, k);
          if (a < 0 || a == p) continue;
          int c = meet_at(j, k);
          if (c < 0 || c == p || c == a) continue;
          int lbest = INT_MAX;
          for (int u1 : u.block(i)) {
            if (u1 == p || u1 == a) continue;
            for (int w1 : u.block(j)) {
              if (w1 == p || w1 == c) continue;
              int l = u.joining_block(u1, w1);
              if (l <= k) continue;  // covered when the triple is (i,j,l)-sorted
              int d = meet_at(l, k);
              if (d < 0 || d == a || d == c) continue;
              lbest = std::min(lbest, l);
            }
          }
          if (lbest == INT_MAX) continue;
          ONanWitness w;
          w.blocks = {i, j, k, lbest};
          w.points = {p, a, meet_at(i, lbest), c, meet_at(j, lbest),
                      meet_at(k, lbest)};
          found[t] = w;
          int cur = best_first.load(std::memory_order_relaxed);
          while (i < cur &&
                 !best_first.compare_exchange_weak(cur, i,
                                                   std::memory_order_relaxed)) {
          }
          return;
        }
      }
    }
  });

  std::optional<ONanWitness> best;
  for (const auto& w : found)
    if (w && (!best || w->blocks < best->blocks)) best = w;
  return best;
}

bool validate_onan(const Unital& u, const ONanWitness& w) {
  for (int i = 0; i < 4; ++i) {
    if (w.blocks[i] < 0 || w.blocks[i] >= u.num_blocks()) return false;
    for (int j = 0; j < i; ++j)
      if (w.blocks[i] == w.blocks[j]) return false;
  }
  // six distinct pairwise intersection points matching the stated ones
  int k = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j, ++k) {
      int pt = w.points[k];
      if (pt < 0 || pt >= u.num_points()) return false;
      if (!u.incident(w.blocks[i], pt) || !u.incident(w.blocks[j], pt))
        return false;
    }
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j)
      if (w.points[i] == w.points[j]) return false;
  // each point on exactly two of the four blocks
  for (int pt : w.points) {
    int on = 0;
    for (int blk : w.blocks)
      if (u.incident(blk, pt)) ++on;
    if (on != 2) return false;
  }
  return true;
}

bool is_x_parallel(const Unital& u, int candidate, int base, int x) {
  if (u.incident(base, x)) throw PointOnBlock(x, base);
  if (u.incident(candidate, x)) return false;
  std::vector<char> marked(u.num_blocks(), 0);
  int need = 0;
  for (int p : u.block(base)) {
    int j = u.joining_block(x, p);
    if (j >= 0) {
      marked[j] = 1;
      ++need;
    }
  }
  int hits = 0;
  for (int y : u.block(candidate)) {
    int j = u.joining_block(x, y);
    if (j >= 0 && marked[j]) ++hits;
  }
  return hits == need;
}

std::vector<int> x_parallel_blocks(const Unital& u, int block_id, int x) {
  if (block_id < 0 || block_id >= u.num_blocks())
    throw std::out_of_range("block id out of range");
  if (x < 0 || x >= u.num_points())
    throw std::out_of_range("point index out of range");
  if (u.incident(block_id, x)) throw PointOnBlock(x, block_id);

  std::vector<char> marked(u.num_blocks(), 0);
  int need = 0;
  for (int p : u.block(block_id)) {
    int j = u.joining_block(x, p);
    if (j >= 0) {
      marked[j] = 1;
      ++need;
    }
  }
  std::vector<int> out;
  for (int c = 0; c < u.num_blocks(); ++c) {
    if (u.incident(c, x)) continue;
    int hits = 0;
    for (int y : u.block(c)) {
      int j = u.joining_block(x, y);
      if (j >= 0 && marked[j]) ++hits;
    }
    if (hits == need) out.push_back(c);
  }
  return out;
}

}  // namespace unitals
