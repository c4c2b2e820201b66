#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "unitals/automorphisms.hpp"
#include "unitals/classical.hpp"
#include "unitals/errors.hpp"

using unitals::PointPermutation;
using unitals::Unital;

namespace {

PointPermutation identity(int v) {
  PointPermutation pi;
  pi.image.resize(v);
  for (int i = 0; i < v; ++i) pi.image[i] = i;
  return pi;
}

// Independent oracle for T_[c] at q = 2: run through all 8! permutations of
// the non-center points and keep the ones that are automorphisms fixing every
// block through the center setwise.
std::set<std::vector<int>> brute_force_translations(const Unital& u, int c) {
  const int v = u.num_points();
  std::vector<int> others;
  for (int p = 0; p < v; ++p)
    if (p != c) others.push_back(p);
  std::vector<int> target = others;
  std::set<std::vector<int>> found;
  std::sort(target.begin(), target.end());
  do {
    std::vector<int> image(v);
    image[c] = c;
    for (std::size_t i = 0; i < others.size(); ++i) image[others[i]] = target[i];
    bool ok = true;
    for (int blk : u.blocks_through(c)) {
      unitals::Block img;
      for (int p : u.block(blk)) img.push_back(image[p]);
      std::sort(img.begin(), img.end());
      if (img != u.block(blk)) {
        ok = false;
        break;
      }
    }
    if (ok && unitals::is_automorphism(u, PointPermutation{image}))
      found.insert(image);
  } while (std::next_permutation(target.begin(), target.end()));
  return found;
}

}  // namespace

TEST_CASE("is_automorphism basics") {
  Unital u = unitals::classical_unital(2);
  CHECK(unitals::is_automorphism(u, identity(9)));

  // a transposition of two arbitrary points breaks some block
  PointPermutation swap = identity(9);
  std::swap(swap.image[0], swap.image[1]);
  CHECK_FALSE(unitals::is_automorphism(u, swap));

  PointPermutation bad;
  bad.image = {0, 1, 2};
  CHECK_THROWS_AS(unitals::is_automorphism(u, bad), unitals::LengthMismatch);

  PointPermutation not_bijective = identity(9);
  not_bijective.image[3] = 4;
  CHECK_FALSE(unitals::is_automorphism(u, not_bijective));
}

TEST_CASE("translation matrices induce automorphisms") {
  unitals::FieldTables gf = unitals::FieldTables::build(2);
  Unital u = unitals::classical_unital(gf);
  std::vector<unitals::ProjPoint> pts = unitals::isotropic_points(gf);
  for (const unitals::Matrix3& m : unitals::translation_matrices(gf)) {
    PointPermutation pi{unitals::induced_point_permutation(m, pts, gf)};
    CHECK(unitals::is_automorphism(u, pi));
  }
}

TEST_CASE("translation search matches the 8!-permutation oracle at q = 2") {
  Unital u = unitals::classical_unital(2);
  for (int c : {0, 4}) {
    CAPTURE(c);
    std::set<std::vector<int>> brute = brute_force_translations(u, c);
    std::vector<PointPermutation> group = unitals::translations_with_center(u, c);
    std::set<std::vector<int>> got;
    for (const PointPermutation& pi : group) got.insert(pi.image);
    CHECK(got == brute);
    CHECK(group.size() == 2);
  }
}

TEST_CASE("translation group sizes are q for every center") {
  for (int q : {2, 3}) {
    CAPTURE(q);
    Unital u = unitals::classical_unital(q);
    for (int c = 0; c < u.num_points(); ++c) {
      std::vector<PointPermutation> group = unitals::translations_with_center(u, c);
      CHECK(static_cast<int>(group.size()) == q);
      CHECK(group.front().is_identity());  // sorted, identity first
    }
  }
}

TEST_CASE("semiregularity: nonidentity translations fix only the center") {
  for (int q : {2, 3}) {
    CAPTURE(q);
    Unital u = unitals::classical_unital(q);
    for (int c = 0; c < u.num_points(); c += 3)
      for (const PointPermutation& tau : unitals::translations_with_center(u, c)) {
        if (tau.is_identity()) continue;
        CHECK(tau.image[c] == c);
        for (int p = 0; p < u.num_points(); ++p)
          if (p != c) CHECK(tau.image[p] != p);
      }
  }
}

TEST_CASE("pruned and unpruned searches agree") {
  Unital u2 = unitals::classical_unital(2);
  for (int c = 0; c < u2.num_points(); ++c)
    CHECK(unitals::translations_with_center(u2, c, true) ==
          unitals::translations_with_center(u2, c, false));
  Unital u3 = unitals::classical_unital(3);
  for (int c : {0, 7, 19})
    CHECK(unitals::translations_with_center(u3, c, true) ==
          unitals::translations_with_center(u3, c, false));
}

TEST_CASE("T_[c] is a group acting transitively on each block through c") {
  for (int q : {2, 3}) {
    CAPTURE(q);
    Unital u = unitals::classical_unital(q);
    for (int c : {0, 1}) {
      std::vector<PointPermutation> group = unitals::translations_with_center(u, c);
      std::set<std::vector<int>> members;
      for (const PointPermutation& pi : group) members.insert(pi.image);
      for (const PointPermutation& a : group) {
        CHECK(members.count(unitals::inverse(a).image) == 1);
        for (const PointPermutation& b : group)
          CHECK(members.count(unitals::compose(a, b).image) == 1);
      }
      // |T_[c]| = q means transitivity on B \ {c} for every block B through c
      for (int blk : u.blocks_through(c))
        for (int w : u.block(blk)) {
          if (w == c) continue;
          for (int y : u.block(blk)) {
            if (y == c) continue;
            bool mapped = false;
            for (const PointPermutation& tau : group)
              mapped = mapped || tau.image[w] == y;
            CHECK(mapped);
          }
        }
    }
  }
}

TEST_CASE("conjugation covariance: a T_[c] a^-1 = T_[a(c)]") {
  Unital u = unitals::classical_unital(2);
  // take a nonidentity translation from another center as the automorphism
  PointPermutation alpha = unitals::translations_with_center(u, 3).back();
  REQUIRE_FALSE(alpha.is_identity());
  for (int c : {0, 1, 5}) {
    int image_center = alpha.image[c];
    std::set<std::vector<int>> expected;
    for (const PointPermutation& tau :
         unitals::translations_with_center(u, image_center))
      expected.insert(tau.image);
    std::set<std::vector<int>> conjugated;
    PointPermutation alpha_inv = unitals::inverse(alpha);
    for (const PointPermutation& tau : unitals::translations_with_center(u, c))
      conjugated.insert(
          unitals::compose(alpha, unitals::compose(tau, alpha_inv)).image);
    CHECK(conjugated == expected);
  }
}

TEST_CASE("admits_all_translations on classical unitals and relabelings") {
  CHECK(unitals::admits_all_translations(unitals::classical_unital(2)));
  CHECK(unitals::admits_all_translations(unitals::classical_unital(3)));

  Unital u = unitals::classical_unital(2);
  std::vector<int> perm(u.num_points());
  for (int i = 0; i < u.num_points(); ++i) perm[i] = i;
  std::mt19937 rng(4242);
  std::shuffle(perm.begin(), perm.end(), rng);
  CHECK(unitals::admits_all_translations(unitals::relabel(u, perm)));
}

TEST_CASE("a mutilated structure does not admit all translations") {
  Unital u = unitals::classical_unital(2);
  std::vector<unitals::Block> blocks(u.blocks().begin() + 1, u.blocks().end());
  Unital mut(2, 9, blocks);
  CHECK_FALSE(unitals::admits_all_translations(mut));
}

TEST_CASE("find_isomorphism: trivial, mismatch, relabeled recovery") {
  Unital u2 = unitals::classical_unital(2);
  Unital u3 = unitals::classical_unital(3);

  unitals::IsomorphismResult self = unitals::find_isomorphism(u2, u2);
  REQUIRE(self.map.has_value());
  CHECK(self.map->is_identity());

  unitals::IsomorphismResult mismatch = unitals::find_isomorphism(u2, u3);
  CHECK_FALSE(mismatch.map.has_value());
  CHECK(mismatch.reason.find("order mismatch") != std::string::npos);

  std::mt19937 rng(31415);
  for (int q : {2, 3}) {
    CAPTURE(q);
    Unital u = unitals::classical_unital(q);
    std::vector<int> perm(u.num_points());
    for (int i = 0; i < u.num_points(); ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    Unital r = unitals::relabel(u, perm);
    unitals::IsomorphismResult res = unitals::find_isomorphism(r, u);
    REQUIRE(res.map.has_value());
    CHECK(unitals::relabel(r, res.map->image) == u);
  }
}

TEST_CASE("find_isomorphism: exhaustive none on same-shape structures") {
  // same parameters, different intersection pattern: no bijection works
  Unital a(2, 6, {{0, 1, 2}, {2, 3, 4}});
  Unital b(2, 6, {{0, 1, 2}, {3, 4, 5}});
  unitals::IsomorphismResult res = unitals::find_isomorphism(a, b);
  CHECK_FALSE(res.map.has_value());
  CHECK(res.reason == "no isomorphism exists");
}

TEST_CASE("cycle notation") {
  PointPermutation id = identity(5);
  CHECK(unitals::cycle_notation(id) == "()");
  PointPermutation pi;
  pi.image = {1, 2, 0, 4, 3};
  CHECK(unitals::cycle_notation(pi) == "(0 1 2)(3 4)");
}
