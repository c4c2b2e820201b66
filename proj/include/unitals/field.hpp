#pragma once

#include <string>
#include <vector>

namespace unitals {

/// True iff q = p^e for a prime p and e >= 1. Outputs p and e when requested.
bool is_prime_power(long long q, int* prime = nullptr, int* exponent = nullptr);

/// Arithmetic tables for GF(q^2) together with its subfield GF(q) and the
/// conjugation s -> s^q.
///
/// Elements are dense indices 0..q^2-1: 0 is the field zero, 1 the field one,
/// and the subfield GF(q) occupies indices 0..q-1 (exactly the fixed set of
/// the conjugation). Construction is deterministic: GF(q) is built from the
/// prime field with the lexicographically smallest monic irreducible
/// polynomial (coefficients compared from the highest degree down), and
/// GF(q^2) = GF(q)[t]/(f) with f the lexicographically smallest monic
/// irreducible quadratic over GF(q).
///
/// Immutable after construction; concurrent reads are safe.
class FieldTables {
 public:
  /// Builds the tables for GF(q^2). Throws NotPrimePower for unusable q.
  static FieldTables build(int q);

  int q() const { return q_; }
  int size() const { return n_; }
  int characteristic() const { return p_; }

  int add(int a, int b) const { return add_[a * n_ + b]; }
  int mul(int a, int b) const { return mul_[a * n_ + b]; }
  int neg(int a) const { return neg_[a]; }
  int sub(int a, int b) const { return add(a, neg(b)); }
  int inv(int a) const;
  int conj(int a) const { return conj_[a]; }
  int trace(int a) const { return add(a, conj(a)); }
  int norm(int a) const { return mul(a, conj(a)); }
  int pow(int a, long long e) const;

  /// Membership in the designated copy of GF(q), the fixed field of conj.
  bool in_subfield(int a) const { return a < q_; }

  /// The quadratic used for GF(q^2) = GF(q)[t]/(f), e.g. "t^2 + t + 2".
  /// Coefficients are subfield element indices.
  std::string extension_poly() const;
  /// The polynomial behind the GF(q) construction itself ("u^2 + 1" style,
  /// coefficients in the prime field); empty when q is prime.
  std::string base_poly() const;

 private:
  FieldTables() = default;

  int q_ = 0, n_ = 0, p_ = 0, e_ = 0;
  int ext_c1_ = 0, ext_c0_ = 0;       // f = t^2 + c1 t + c0 over GF(q)
  std::vector<int> base_poly_;        // monic irreducible behind GF(q), low first
  std::vector<int> add_, mul_;        // n x n, row-major
  std::vector<int> neg_, inv_, conj_;
};

}  // namespace unitals
