#include "unitals/unital.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "unitals/errors.hpp"

namespace unitals {

std::string to_string(ViolationKind k) {
  switch (k) {
    case ViolationKind::BlockSize: return "block-size";
    case ViolationKind::PointRange: return "point-range";
    case ViolationKind::PairMissing: return "pair-missing";
    case ViolationKind::PairDuplicated: return "pair-duplicated";
  }
  return "?";
}

std::string DesignViolation::describe() const {
  std::ostringstream os;
  os << to_string(kind);
  switch (kind) {
    case ViolationKind::BlockSize:
      os << " block " << block_a;
      break;
    case ViolationKind::PointRange:
      os << " block " << block_a << " point " << point_a;
      break;
    case ViolationKind::PairMissing:
      os << " points " << point_a << " " << point_b;
      break;
    case ViolationKind::PairDuplicated:
      os << " points " << point_a << " " << point_b << " blocks " << block_a
         << " " << block_b;
      break;
  }
  return os.str();
}

DesignReport verify_design(const std::vector<Block>& candidate, int q) {
  DesignReport rep;
  const long long v = static_cast<long long>(q) * q * q + 1;
  rep.v = v;
  rep.b = static_cast<long long>(candidate.size());

  // first pass: block sizes and index ranges
  for (int bi = 0; bi < static_cast<int>(candidate.size()); ++bi) {
    const Block& blk = candidate[bi];
    Block in_range;
    for (int p : blk) {
      if (p < 0 || p >= v)
        rep.violations.push_back(
            {ViolationKind::PointRange, bi, -1, p, -1});
      else
        in_range.push_back(p);
    }
    std::sort(in_range.begin(), in_range.end());
    in_range.erase(std::unique(in_range.begin(), in_range.end()),
                   in_range.end());
    if (static_cast<int>(in_range.size()) != q + 1)
      rep.violations.push_back({ViolationKind::BlockSize, bi, -1, -1, -1});
  }

  // second pass: pair coverage over all v(v-1)/2 pairs
  std::vector<int32_t> cover(static_cast<std::size_t>(v) * v, -1);
  for (int bi = 0; bi < static_cast<int>(candidate.size()); ++bi) {
    const Block& blk = candidate[bi];
    for (std::size_t i = 0; i < blk.size(); ++i) {
      if (blk[i] < 0 || blk[i] >= v) continue;
      for (std::size_t j = i + 1; j < blk.size(); ++j) {
        if (blk[j] < 0 || blk[j] >= v) continue;
        int x = blk[i], y = blk[j];
        if (x == y) continue;
        if (x > y) std::swap(x, y);
        int32_t& slot = cover[static_cast<std::size_t>(x) * v + y];
        if (slot < 0)
          slot = bi;
        else
          rep.violations.push_back(
              {ViolationKind::PairDuplicated, static_cast<int>(slot), bi, x, y});
      }
    }
  }
  for (long long x = 0; x < v; ++x)
    for (long long y = x + 1; y < v; ++y)
      if (cover[static_cast<std::size_t>(x) * v + y] < 0)
        rep.violations.push_back({ViolationKind::PairMissing, -1, -1,
                                  static_cast<int>(x), static_cast<int>(y)});

  rep.pass = rep.violations.empty();
  if (rep.pass) rep.r = static_cast<long long>(q) * q;
  return rep;
}

Unital::Unital(int order, int num_points, std::vector<Block> blocks)
    : order_(order), num_points_(num_points), blocks_(std::move(blocks)) {
  if (num_points_ < 2) throw std::invalid_argument("need at least two points");
  for (Block& blk : blocks_) {
    std::sort(blk.begin(), blk.end());
    if (blk.size() < 2) throw std::invalid_argument("block with fewer than two points");
    for (std::size_t i = 0; i < blk.size(); ++i) {
      if (blk[i] < 0 || blk[i] >= num_points_)
        throw std::invalid_argument("point index out of range: " +
                                    std::to_string(blk[i]));
      if (i > 0 && blk[i] == blk[i - 1])
        throw std::invalid_argument("repeated point in block: " +
                                    std::to_string(blk[i]));
    }
  }
  std::sort(blocks_.begin(), blocks_.end());

  const std::size_t v = static_cast<std::size_t>(num_points_);
  through_.assign(v, {});
  pair_block_.assign(v * v, -1);
  incidence_.assign(blocks_.size() * v, 0);
  for (int bi = 0; bi < static_cast<int>(blocks_.size()); ++bi) {
    const Block& blk = blocks_[bi];
    for (std::size_t i = 0; i < blk.size(); ++i) {
      through_[blk[i]].push_back(bi);
      incidence_[static_cast<std::size_t>(bi) * v + blk[i]] = 1;
      for (std::size_t j = i + 1; j < blk.size(); ++j) {
        int32_t& slot = pair_block_[static_cast<std::size_t>(blk[i]) * v + blk[j]];
        if (slot >= 0)
          throw std::invalid_argument(
              "pair covered twice: " + std::to_string(blk[i]) + " " +
              std::to_string(blk[j]));
        slot = bi;
        pair_block_[static_cast<std::size_t>(blk[j]) * v + blk[i]] = bi;
      }
    }
  }
}

int Unital::joining_block(int x, int y) const {
  if (x == y) throw SamePoint(x);
  if (x < 0 || x >= num_points_ || y < 0 || y >= num_points_)
    throw std::out_of_range("point index out of range");
  return pair_block_[static_cast<std::size_t>(x) * num_points_ + y];
}

int Unital::find_block(const Block& sorted_block) const {
  auto it = std::lower_bound(blocks_.begin(), blocks_.end(), sorted_block);
  if (it != blocks_.end() && *it == sorted_block)
    return static_cast<int>(it - blocks_.begin());
  return -1;
}

Unital relabel(const Unital& u, const std::vector<int>& perm) {
  if (static_cast<int>(perm.size()) != u.num_points())
    throw LengthMismatch(perm.size(), u.num_points());
  std::vector<Block> blocks;
  blocks.reserve(u.num_blocks());
  for (const Block& blk : u.blocks()) {
    Block img;
    img.reserve(blk.size());
    for (int p : blk) img.push_back(perm[p]);
    blocks.push_back(std::move(img));
  }
  return Unital(u.order(), u.num_points(), std::move(blocks));
}

namespace {

constexpr const char* kHeader = "UNITAL v1";
// Files beyond this order would drive the quadratic pair structures out of
// desk scale; the documented working range is q <= 16.
constexpr long long kMaxFileOrder = 16;

struct Parser {
  std::ifstream in;
  int lineno = 0;

  explicit Parser(const std::string& path) : in(path, std::ios::binary) {
    if (!in) throw ParseError(0, "cannot open file");
  }

  std::string next_line() {
    std::string line;
    if (!std::getline(in, line)) throw ParseError(lineno + 1, "unexpected end of file");
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return line;
  }

  long long keyword_line(const std::string& key) {
    std::string line = next_line();
    std::istringstream is(line);
    std::string word;
    long long value = -1;
    if (!(is >> word >> value) || word != key || value < 0 || (is >> word))
      throw ParseError(lineno, "expected \"" + key + " <n>\"");
    return value;
  }
};

void parse_header(Parser& ps) {
  std::string line = ps.next_line();
  if (line == kHeader) return;
  if (line.rfind("UNITAL ", 0) == 0) throw VersionError(line);
  throw ParseError(1, "expected \"" + std::string(kHeader) + "\"");
}

}  // namespace

Unital load_unital(const std::string& path, LoadMode mode) {
  Parser ps(path);
  parse_header(ps);
  long long q = ps.keyword_line("order");
  long long v = ps.keyword_line("points");
  long long b = ps.keyword_line("blocks");
  if (q < 2) throw ParseError(2, "order must be at least 2");
  if (q > kMaxFileOrder)
    throw ParseError(2, "order exceeds the supported range (16)");
  if (mode == LoadMode::Strict && v != q * q * q + 1)
    throw ParseError(3, "points must equal order^3 + 1");
  if (v < 2 || v > (1 << 24)) throw ParseError(3, "unreasonable point count");

  std::vector<Block> blocks;
  blocks.reserve(static_cast<std::size_t>(b));
  for (long long i = 0; i < b; ++i) {
    std::string line = ps.next_line();
    std::istringstream is(line);
    Block blk;
    long long p;
    while (is >> p) {
      if (p < 0 || p >= v)
        throw ParseError(ps.lineno, "point index out of range: " + std::to_string(p));
      blk.push_back(static_cast<int>(p));
    }
    if (!is.eof()) throw ParseError(ps.lineno, "malformed point index");
    if (mode == LoadMode::Strict && static_cast<long long>(blk.size()) != q + 1)
      throw ParseError(ps.lineno, "block length must be order + 1");
    if (blk.size() < 2) throw ParseError(ps.lineno, "block with fewer than two points");
    Block sorted = blk;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw ParseError(ps.lineno, "repeated point in block");
    blocks.push_back(std::move(sorted));
  }
  std::string extra;
  if (std::getline(ps.in, extra) && !extra.empty())
    throw ParseError(ps.lineno + 1, "trailing content after last block");

  try {
    return Unital(static_cast<int>(q), static_cast<int>(v), std::move(blocks));
  } catch (const std::invalid_argument& e) {
    throw ParseError(0, e.what());
  }
}

void save_unital(const Unital& u, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << kHeader << "\n";
  out << "order " << u.order() << "\n";
  out << "points " << u.num_points() << "\n";
  out << "blocks " << u.num_blocks() << "\n";
  for (const Block& blk : u.blocks()) {
    for (std::size_t i = 0; i < blk.size(); ++i)
      out << (i ? " " : "") << blk[i];
    out << "\n";
  }
  if (!out) throw std::runtime_error("write failure on " + path);
}

RawUnitalFile load_raw(const std::string& path) {
  Parser ps(path);
  parse_header(ps);
  RawUnitalFile raw;
  long long q = ps.keyword_line("order");
  if (q < 2) throw ParseError(2, "order must be at least 2");
  if (q > kMaxFileOrder)
    throw ParseError(2, "order exceeds the supported range (16)");
  raw.q = static_cast<int>(q);
  raw.declared_points = static_cast<int>(ps.keyword_line("points"));
  long long b = ps.keyword_line("blocks");
  for (long long i = 0; i < b; ++i) {
    std::string line = ps.next_line();
    std::istringstream is(line);
    Block blk;
    long long p;
    while (is >> p) blk.push_back(static_cast<int>(p));
    if (!is.eof()) throw ParseError(ps.lineno, "malformed point index");
    raw.blocks.push_back(std::move(blk));
  }
  return raw;
}

}  // namespace unitals
