#pragma once

#include <stdexcept>
#include <string>

namespace unitals {

/// Order passed to a field or unital construction is not p^e.
struct NotPrimePower : std::invalid_argument {
  explicit NotPrimePower(long long q)
      : std::invalid_argument("not a prime power: " + std::to_string(q)) {}
};

/// joining_block(x, x) is undefined.
struct SamePoint : std::invalid_argument {
  explicit SamePoint(int x)
      : std::invalid_argument("joining block of point " + std::to_string(x) +
                              " with itself") {}
};

/// x_parallel_blocks requires the reference point off the block.
struct PointOnBlock : std::invalid_argument {
  PointOnBlock(int point, int block)
      : std::invalid_argument("point " + std::to_string(point) +
                              " lies on block " + std::to_string(block)) {}
};

/// Permutation length differs from the point count.
struct LengthMismatch : std::invalid_argument {
  LengthMismatch(std::size_t got, std::size_t want)
      : std::invalid_argument("permutation has " + std::to_string(got) +
                              " entries, expected " + std::to_string(want)) {}
};

/// Uniqueness shortcut forced on a structure that has O'Nan configurations.
struct PrecedenceError : std::logic_error {
  PrecedenceError()
      : std::logic_error(
            "uniqueness shortcut requires an O'Nan-free structure") {}
};

/// Syntax or consistency error in a unital file; line is 1-based, 0 = unknown.
struct ParseError : std::runtime_error {
  int line;
  ParseError(int line_, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line_) + ": " + msg),
        line(line_) {}
};

/// Unknown format version in the file header.
struct VersionError : std::runtime_error {
  explicit VersionError(const std::string& header)
      : std::runtime_error("unsupported header: \"" + header + "\"") {}
};

}  // namespace unitals
