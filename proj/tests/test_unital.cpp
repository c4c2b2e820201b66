#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <set>
#include <sstream>

#include "unitals/classical.hpp"
#include "unitals/errors.hpp"
#include "unitals/unital.hpp"

using unitals::Block;
using unitals::DesignReport;
using unitals::Unital;
using unitals::ViolationKind;

namespace {

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / name;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

bool has_kind(const DesignReport& rep, ViolationKind k) {
  for (const auto& viol : rep.violations)
    if (viol.kind == k) return true;
  return false;
}

// 2-(7,3,1): the Fano plane, used as the standard relaxed-mode control.
std::vector<Block> fano_blocks() {
  return {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {1, 3, 5},
          {1, 4, 6}, {2, 3, 6}, {2, 4, 5}};
}

}  // namespace

TEST_CASE("verify_design accepts the classical unital of order 3") {
  Unital u = unitals::classical_unital(3);
  DesignReport rep = unitals::verify_design(u.blocks(), 3);
  CHECK(rep.pass);
  CHECK(rep.v == 28);
  CHECK(rep.b == 63);
  CHECK(rep.r == 9);
}

TEST_CASE("verify_design flags mutations with the right class") {
  Unital u = unitals::classical_unital(2);
  std::vector<Block> blocks = u.blocks();

  SUBCASE("deleted block -> pair-missing") {
    std::vector<Block> mut(blocks.begin() + 1, blocks.end());
    DesignReport rep = unitals::verify_design(mut, 2);
    CHECK_FALSE(rep.pass);
    CHECK(has_kind(rep, ViolationKind::PairMissing));
    // the witness pair comes from the deleted block
    const Block& gone = blocks[0];
    bool witnessed = false;
    for (const auto& viol : rep.violations)
      if (viol.kind == ViolationKind::PairMissing) {
        bool a_in = std::find(gone.begin(), gone.end(), viol.point_a) != gone.end();
        bool b_in = std::find(gone.begin(), gone.end(), viol.point_b) != gone.end();
        witnessed = witnessed || (a_in && b_in);
      }
    CHECK(witnessed);
  }

  SUBCASE("duplicated block -> pair-duplicated") {
    std::vector<Block> mut = blocks;
    mut.push_back(blocks[3]);
    DesignReport rep = unitals::verify_design(mut, 2);
    CHECK_FALSE(rep.pass);
    CHECK(has_kind(rep, ViolationKind::PairDuplicated));
    CHECK_FALSE(has_kind(rep, ViolationKind::PairMissing));
  }

  SUBCASE("truncated block -> block-size and pair-missing") {
    std::vector<Block> mut = blocks;
    mut[5].pop_back();
    DesignReport rep = unitals::verify_design(mut, 2);
    CHECK_FALSE(rep.pass);
    CHECK(has_kind(rep, ViolationKind::BlockSize));
    CHECK(has_kind(rep, ViolationKind::PairMissing));
  }

  SUBCASE("out-of-range index -> point-range") {
    std::vector<Block> mut = blocks;
    mut[0][0] = 99;
    DesignReport rep = unitals::verify_design(mut, 2);
    CHECK_FALSE(rep.pass);
    CHECK(has_kind(rep, ViolationKind::PointRange));
  }

  SUBCASE("empty input -> all pairs missing") {
    DesignReport rep = unitals::verify_design({}, 2);
    CHECK_FALSE(rep.pass);
    CHECK(rep.violations.size() == 36);
  }
}

TEST_CASE("joining_block covers every pair of the order-2 unital") {
  Unital u = unitals::classical_unital(2);
  for (int x = 0; x < u.num_points(); ++x)
    for (int y = x + 1; y < u.num_points(); ++y) {
      int blk = u.joining_block(x, y);
      REQUIRE(blk >= 0);
      CHECK(u.incident(blk, x));
      CHECK(u.incident(blk, y));
      CHECK(u.joining_block(y, x) == blk);
    }
  CHECK_THROWS_AS(u.joining_block(3, 3), unitals::SamePoint);
}

TEST_CASE("per-point counts and pair index totals") {
  for (int q : {2, 3}) {
    CAPTURE(q);
    Unital u = unitals::classical_unital(q);
    long long size_sum = 0;
    for (const Block& blk : u.blocks()) size_sum += blk.size();
    CHECK(size_sum == static_cast<long long>(u.num_points()) * q * q);
    for (int p = 0; p < u.num_points(); ++p)
      CHECK(static_cast<int>(u.blocks_through(p).size()) == q * q);
  }
}

TEST_CASE("constructor rejects broken structures") {
  CHECK_THROWS_AS(Unital(2, 9, {{0, 1, 2}, {0, 1, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(Unital(2, 9, {{0, 0, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(Unital(2, 9, {{0, 1, 9}}), std::invalid_argument);
  CHECK_THROWS_AS(Unital(2, 9, {{7}}), std::invalid_argument);
}

TEST_CASE("canonical storage: construction order does not matter") {
  Unital a(2, 9, {{2, 1, 0}, {3, 4, 0}});
  Unital b(2, 9, {{0, 3, 4}, {0, 1, 2}});
  CHECK(a == b);
  CHECK(a.block(0) == Block{0, 1, 2});
  CHECK(a.find_block({0, 3, 4}) == 1);
  CHECK(a.find_block({1, 3, 4}) == -1);
}

TEST_CASE("save/load round trip is byte identical") {
  Unital u = unitals::classical_unital(2);
  auto p1 = temp_file("unitals_rt1.unital");
  auto p2 = temp_file("unitals_rt2.unital");
  unitals::save_unital(u, p1.string());
  Unital loaded = unitals::load_unital(p1.string());
  CHECK(loaded == u);
  unitals::save_unital(loaded, p2.string());
  CHECK(slurp(p1) == slurp(p2));
  std::remove(p1.string().c_str());
  std::remove(p2.string().c_str());
}

TEST_CASE("loader error paths") {
  auto path = temp_file("unitals_load_err.unital");
  auto write = [&](const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    out << text;
  };

  SUBCASE("unknown version") {
    write("UNITAL v2\norder 2\npoints 9\nblocks 0\n");
    CHECK_THROWS_AS(unitals::load_unital(path.string()), unitals::VersionError);
  }
  SUBCASE("garbage header") {
    write("DESIGN v1\n");
    CHECK_THROWS_AS(unitals::load_unital(path.string()), unitals::ParseError);
  }
  SUBCASE("block length mismatch for the order") {
    write("UNITAL v1\norder 3\npoints 28\nblocks 1\n0 1 2\n");
    CHECK_THROWS_AS(unitals::load_unital(path.string()), unitals::ParseError);
  }
  SUBCASE("point count inconsistent with order") {
    write("UNITAL v1\norder 2\npoints 7\nblocks 0\n");
    CHECK_THROWS_AS(unitals::load_unital(path.string()), unitals::ParseError);
  }
  SUBCASE("line number is reported") {
    write("UNITAL v1\norder 2\npoints 9\nblocks 2\n0 1 2\n0 3\n");
    try {
      unitals::load_unital(path.string());
      FAIL("expected ParseError");
    } catch (const unitals::ParseError& e) {
      CHECK(e.line == 6);
    }
  }
  SUBCASE("malformed index") {
    write("UNITAL v1\norder 2\npoints 9\nblocks 1\n0 1 x\n");
    CHECK_THROWS_AS(unitals::load_unital(path.string()), unitals::ParseError);
  }
  SUBCASE("missing file") {
    CHECK_THROWS_AS(unitals::load_unital("/nonexistent/u.unital"),
                    unitals::ParseError);
  }
  SUBCASE("order beyond the supported range") {
    write("UNITAL v1\norder 9999\npoints 10\nblocks 0\n");
    CHECK_THROWS_AS(unitals::load_unital(path.string()), unitals::ParseError);
    CHECK_THROWS_AS(unitals::load_raw(path.string()), unitals::ParseError);
  }
  std::remove(path.string().c_str());
}

TEST_CASE("linear-space mode loads the Fano plane, strict mode refuses") {
  auto path = temp_file("unitals_fano.unital");
  {
    std::ofstream out(path, std::ios::binary);
    out << "UNITAL v1\norder 2\npoints 7\nblocks 7\n";
    for (const Block& blk : fano_blocks())
      out << blk[0] << " " << blk[1] << " " << blk[2] << "\n";
  }
  CHECK_THROWS_AS(unitals::load_unital(path.string()), unitals::ParseError);
  Unital fano = unitals::load_unital(path.string(), unitals::LoadMode::LinearSpace);
  CHECK(fano.num_points() == 7);
  CHECK(fano.num_blocks() == 7);
  // not a unital design: r = 3 != q^2
  CHECK_FALSE(fano.verify().pass);
  std::remove(path.string().c_str());
}

TEST_CASE("load_raw defers structure checks to verify_design") {
  auto path = temp_file("unitals_raw.unital");
  {
    std::ofstream out(path, std::ios::binary);
    out << "UNITAL v1\norder 2\npoints 9\nblocks 2\n0 1\n0 1 2 3\n";
  }
  unitals::RawUnitalFile raw = unitals::load_raw(path.string());
  CHECK(raw.q == 2);
  CHECK(raw.blocks.size() == 2);
  DesignReport rep = unitals::verify_design(raw.blocks, raw.q);
  CHECK_FALSE(rep.pass);
  CHECK(has_kind(rep, ViolationKind::BlockSize));
  std::remove(path.string().c_str());
}

TEST_CASE("relabel by a seeded random bijection preserves the design") {
  Unital u = unitals::classical_unital(2);
  std::vector<int> perm(u.num_points());
  for (int i = 0; i < u.num_points(); ++i) perm[i] = i;
  std::mt19937 rng(20240811);
  std::shuffle(perm.begin(), perm.end(), rng);
  Unital r = unitals::relabel(u, perm);
  CHECK(r.verify().pass);
  CHECK(r.num_blocks() == u.num_blocks());
}
