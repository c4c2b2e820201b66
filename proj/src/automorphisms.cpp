#include "unitals/automorphisms.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "unitals/errors.hpp"

namespace unitals {

bool PointPermutation::is_identity() const {
  for (int i = 0; i < static_cast<int>(image.size()); ++i)
    if (image[i] != i) return false;
  return true;
}

PointPermutation compose(const PointPermutation& f, const PointPermutation& g) {
  if (f.image.size() != g.image.size())
    throw LengthMismatch(g.image.size(), f.image.size());
  PointPermutation r;
  r.image.resize(f.image.size());
  for (std::size_t i = 0; i < g.image.size(); ++i) r.image[i] = f.image[g.image[i]];
  return r;
}

PointPermutation inverse(const PointPermutation& f) {
  PointPermutation r;
  r.image.assign(f.image.size(), -1);
  for (std::size_t i = 0; i < f.image.size(); ++i) r.image[f.image[i]] = static_cast<int>(i);
  return r;
}

std::string cycle_notation(const PointPermutation& f) {
  const int n = static_cast<int>(f.image.size());
  std::vector<char> done(n, 0);
  std::ostringstream os;
  bool any = false;
  for (int i = 0; i < n; ++i) {
    if (done[i] || f.image[i] == i) continue;
    os << "(";
    int j = i;
    bool first = true;
    while (!done[j]) {
      done[j] = 1;
      os << (first ? "" : " ") << j;
      first = false;
      j = f.image[j];
    }
    os << ")";
    any = true;
  }
  return any ? os.str() : "()";
}

bool is_automorphism(const Unital& u, const PointPermutation& pi) {
  const int v = u.num_points();
  if (static_cast<int>(pi.image.size()) != v)
    throw LengthMismatch(pi.image.size(), v);
  std::vector<char> hit(v, 0);
  for (int y : pi.image) {
    if (y < 0 || y >= v || hit[y]) return false;
    hit[y] = 1;
  }
  Block img;
  for (const Block& blk : u.blocks()) {
    img.clear();
    for (int p : blk) img.push_back(pi.image[p]);
    std::sort(img.begin(), img.end());
    if (u.find_block(img) < 0) return false;
  }
  return true;
}

namespace {

// Backtracking search for block-preserving point maps from `from` onto `to`,
// with optional pre-assigned points and pre-determined block images. Candidate
// images are narrowed through the images of blocks that already have two
// mapped points (or were pre-determined); singleton candidate sets propagate
// without branching. Every completion is re-validated against the block lists
// before it is emitted.
class MappingSearch {
 public:
  MappingSearch(const Unital& from, const Unital& to)
      : from_(from),
        to_(to),
        v_(from.num_points()),
        map_(v_, -1),
        used_(v_, 0),
        block_img_(from.num_blocks(), -1),
        block_img_owner_(to.num_blocks(), -1),
        first_mapped_(from.num_blocks(), -1) {}

  // Only meaningful when from == to: reject any p -> p with p not pre-seeded.
  void forbid_new_fixed_points() { forbid_fixed_ = true; }

  // Pre-assign a point image. Must be called before run().
  bool seed_point(int p, int img) { return assign(p, img); }

  // Pin the image of a block (setwise). Must be called before run().
  bool seed_block(int blk, int img) {
    if (block_img_[blk] >= 0) return block_img_[blk] == img;
    if (block_img_owner_[img] >= 0) return false;
    if (to_.block(img).size() != from_.block(blk).size()) return false;
    block_img_[blk] = img;
    block_img_owner_[img] = blk;
    return true;
  }

  // Explores the whole tree; calls sink(map) for every completion.
  // sink returns false to stop the search.
  template <class Sink>
  void run(Sink&& sink) {
    stop_ = false;
    dfs(sink);
  }

 private:
  bool assign(int p, int img) {
    if (map_[p] == img) return true;
    if (map_[p] != -1 || used_[img]) return false;
    if (forbid_fixed_ && p == img) return false;
    map_[p] = img;
    used_[img] = 1;
    for (int blk : from_.blocks_through(p)) {
      if (block_img_[blk] >= 0) {
        if (!to_.incident(block_img_[blk], img)) return false;
        continue;
      }
      if (first_mapped_[blk] < 0) {
        first_mapped_[blk] = p;
        continue;
      }
      int target = to_.joining_block(map_[first_mapped_[blk]], img);
      if (target < 0 || block_img_owner_[target] >= 0) return false;
      if (to_.block(target).size() != from_.block(blk).size()) return false;
      block_img_[blk] = target;
      block_img_owner_[target] = blk;
      // a freshly determined image constrains the block's unmapped points
      for (int pp : from_.block(blk))
        if (map_[pp] < 0) pending_.push_back(pp);
    }
    return true;
  }

  // Candidate images of p: intersection of the determined block images
  // through p, minus used points. Empty optional = no determined block yet.
  // Narrowing stops once a single candidate remains; assign() re-validates
  // against every block, so a doomed singleton just fails there.
  std::optional<std::vector<int>> candidates(int p) const {
    std::optional<std::vector<int>> cands;
    for (int blk : from_.blocks_through(p)) {
      int img = block_img_[blk];
      if (img < 0) continue;
      if (!cands) {
        cands.emplace();
        cands->reserve(to_.block(img).size());
        for (int y : to_.block(img))
          if (!used_[y] && !(forbid_fixed_ && y == p)) cands->push_back(y);
      } else {
        auto keep = std::remove_if(cands->begin(), cands->end(), [&](int y) {
          return !to_.incident(img, y);
        });
        cands->erase(keep, cands->end());
      }
      if (cands->size() <= 1) break;
    }
    return cands;
  }

  // Number of undetermined blocks through p that already carry one mapped
  // point; assigning p determines each of them, so higher is better to
  // branch on.
  int propagation_score(int p) const {
    int score = 0;
    for (int blk : from_.blocks_through(p))
      if (block_img_[blk] < 0 && first_mapped_[blk] >= 0) ++score;
    return score;
  }

  struct Snapshot {
    std::vector<int> map;
    std::vector<char> used;
    std::vector<int> block_img;
    std::vector<int> block_img_owner;
    std::vector<int> first_mapped;
  };

  Snapshot save() const {
    return {map_, used_, block_img_, block_img_owner_, first_mapped_};
  }
  void restore(const Snapshot& s) {
    map_ = s.map;
    used_ = s.used;
    block_img_ = s.block_img;
    block_img_owner_ = s.block_img_owner;
    first_mapped_ = s.first_mapped;
  }

  template <class Sink>
  void dfs(Sink& sink) {
    if (stop_) return;

    for (;;) {
      // drain the cheap queue first: points on freshly determined blocks
      while (!pending_.empty()) {
        int p = pending_.back();
        pending_.pop_back();
        if (map_[p] >= 0) continue;
        auto cands = candidates(p);
        if (!cands) continue;
        if (cands->empty()) return;
        if (cands->size() == 1 && !assign(p, (*cands)[0])) return;
      }

      // full sweep before branching: catches points whose candidate sets
      // shrank through used-up images rather than block determinations
      int branch_p = -1, branch_score = -1;
      std::vector<int> branch_cands;
      std::vector<std::pair<int, int>> forced;
      bool all_mapped = true;
      for (int p = 0; p < v_; ++p) {
        if (map_[p] >= 0) continue;
        all_mapped = false;
        auto cands = candidates(p);
        if (!cands) continue;  // unconstrained so far
        if (cands->empty()) return;
        if (cands->size() == 1) {
          forced.emplace_back(p, (*cands)[0]);
          continue;
        }
        // branch where an assignment determines the most new block images;
        // a narrow candidate set alone propagates nothing
        int score = propagation_score(p);
        if (branch_p < 0 || score > branch_score ||
            (score == branch_score && cands->size() < branch_cands.size())) {
          branch_p = p;
          branch_score = score;
          branch_cands = std::move(*cands);
        }
      }
      if (!forced.empty()) {
        // a batched assignment can invalidate a later one; that is a real
        // contradiction, because candidate sets only shrink
        for (auto [p, img] : forced)
          if (map_[p] < 0 && !assign(p, img)) return;
        continue;
      }
      if (all_mapped) {
        PointPermutation pi{map_};
        if (verify(pi) && !sink(pi)) stop_ = true;
        return;
      }
      if (branch_p < 0) {
        // no point constrained yet: branch on the first unmapped point
        for (int p = 0; p < v_; ++p)
          if (map_[p] < 0) {
            branch_p = p;
            break;
          }
        for (int y = 0; y < v_; ++y)
          if (!used_[y] && !(forbid_fixed_ && y == branch_p))
            branch_cands.push_back(y);
      }
      Snapshot snap = save();
      for (int y : branch_cands) {
        if (stop_) return;
        bool ok = assign(branch_p, y);
        if (ok) dfs(sink);
        pending_.clear();
        restore(snap);
      }
      return;
    }
  }

  // Independent completion check: every block maps onto a block.
  bool verify(const PointPermutation& pi) const {
    Block img;
    for (const Block& blk : from_.blocks()) {
      img.clear();
      for (int p : blk) img.push_back(pi.image[p]);
      std::sort(img.begin(), img.end());
      if (to_.find_block(img) < 0) return false;
    }
    return true;
  }

  const Unital& from_;
  const Unital& to_;
  int v_;
  std::vector<int> map_;
  std::vector<char> used_;
  std::vector<int> block_img_;
  std::vector<int> block_img_owner_;
  std::vector<int> first_mapped_;
  std::vector<int> pending_;  ///< unmapped points on freshly determined blocks
  bool forbid_fixed_ = false;
  bool stop_ = false;
};

}  // namespace

std::vector<PointPermutation> translations_with_center(
    const Unital& u, int center, bool use_semiregular_pruning) {
  const int v = u.num_points();
  if (center < 0 || center >= v) throw std::out_of_range("center out of range");
  if (u.blocks_through(center).empty())
    throw std::invalid_argument("center lies on no block");

  const int base_block = u.blocks_through(center).front();
  int ref = -1;
  for (int p : u.block(base_block))
    if (p != center) {
      ref = p;
      break;
    }

  std::vector<PointPermutation> out;
  for (int y : u.block(base_block)) {
    if (y == center) continue;
    if (use_semiregular_pruning && y == ref) {
      // a translation fixing a second point is the identity
      PointPermutation id;
      id.image.resize(v);
      for (int i = 0; i < v; ++i) id.image[i] = i;
      out.push_back(std::move(id));
      continue;
    }
    MappingSearch search(u, u);
    bool ok = search.seed_point(center, center);
    for (int blk : u.blocks_through(center)) ok = ok && search.seed_block(blk, blk);
    if (use_semiregular_pruning && y != ref) search.forbid_new_fixed_points();
    ok = ok && search.seed_point(ref, y);
    if (!ok) continue;
    search.run([&](const PointPermutation& pi) {
      out.push_back(pi);
      return true;  // keep going: collect every completion
    });
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool admits_all_translations(const Unital& u) {
  const int q = u.order();
  for (int c = 0; c < u.num_points(); ++c)
    if (static_cast<int>(translations_with_center(u, c).size()) != q) return false;
  return true;
}

IsomorphismResult find_isomorphism(const Unital& a, const Unital& b) {
  std::ostringstream why;
  if (a.order() != b.order() || a.num_points() != b.num_points() ||
      a.num_blocks() != b.num_blocks()) {
    why << "order mismatch: (q=" << a.order() << ", v=" << a.num_points()
        << ", b=" << a.num_blocks() << ") vs (q=" << b.order()
        << ", v=" << b.num_points() << ", b=" << b.num_blocks() << ")";
    return {std::nullopt, why.str()};
  }
  // trivial candidate first: canonical storage makes equality a list compare
  if (a.blocks() == b.blocks()) {
    PointPermutation id;
    id.image.resize(a.num_points());
    for (int i = 0; i < a.num_points(); ++i) id.image[i] = i;
    return {std::move(id), {}};
  }
  MappingSearch search(a, b);
  std::optional<PointPermutation> found;
  search.run([&](const PointPermutation& pi) {
    found = pi;
    return false;  // first completion suffices
  });
  if (found) return {std::move(found), {}};
  return {std::nullopt, "no isomorphism exists"};
}

}  // namespace unitals
