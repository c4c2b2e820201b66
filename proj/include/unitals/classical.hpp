#pragma once

#include <array>
#include <compare>
#include <vector>

#include "unitals/field.hpp"
#include "unitals/unital.hpp"

namespace unitals {

/// A point of PG(2, q^2): homogeneous coordinates over GF(q^2), normalized so
/// the first nonzero coordinate is 1. Normalization is canonical, so equal
/// points compare equal and the lexicographic order on coords is total.
struct ProjPoint {
  std::array<int, 3> coords{0, 0, 0};
  auto operator<=>(const ProjPoint&) const = default;
};

/// Normalizes a coordinate triple; throws std::invalid_argument on (0,0,0).
ProjPoint normalize_point(std::array<int, 3> raw, const FieldTables& gf);

/// x0 conj(y2) - x1 conj(y1) + x2 conj(y0).
int hermitian_form(const std::array<int, 3>& x, const std::array<int, 3>& y,
                   const FieldTables& gf);

/// All points of PG(2, q^2) in lexicographic order; size q^4 + q^2 + 1.
std::vector<ProjPoint> projective_points(const FieldTables& gf);

/// All p with hermitian_form(p, p) = 0, lexicographic; size q^3 + 1.
std::vector<ProjPoint> isotropic_points(const FieldTables& gf);
std::vector<ProjPoint> isotropic_points(int q);

/// The points of the projective line through two distinct points; q^2 + 1
/// normalized points.
std::vector<ProjPoint> line_through(const ProjPoint& a, const ProjPoint& b,
                                    const FieldTables& gf);

/// The Hermitian unital of order q: isotropic points (index = position in the
/// lexicographic point list), blocks cut out by secant lines.
Unital classical_unital(int q);
Unital classical_unital(const FieldTables& gf);

/// 3x3 matrix over GF(q^2), row-major. Acts on points on the right:
/// row vector times matrix, then renormalize.
struct Matrix3 {
  std::array<int, 9> m{1, 0, 0, 0, 1, 0, 0, 0, 1};
  auto operator<=>(const Matrix3&) const = default;
};

Matrix3 mat_mul(const Matrix3& a, const Matrix3& b, const FieldTables& gf);
std::array<int, 3> apply_matrix(const std::array<int, 3>& row, const Matrix3& m,
                                const FieldTables& gf);
/// Scales the matrix so its first nonzero entry is 1; canonical representative
/// of the projective class.
Matrix3 normalize_matrix(const Matrix3& m, const FieldTables& gf);

/// The q^3 upper-unitriangular matrices [[1,x,z],[0,1,conj(x)],[0,0,1]] with
/// trace(z) = norm(x). All stabilize the isotropic point set and fix (0,0,1).
std::vector<Matrix3> xi_subgroup(const FieldTables& gf);
std::vector<Matrix3> xi_subgroup(int q);

/// The q matrices [[1,0,z],[0,1,0],[0,0,1]] with trace(z) = 0; these induce
/// the translations of the classical unital with center (0,0,1).
std::vector<Matrix3> translation_matrices(const FieldTables& gf);
std::vector<Matrix3> translation_matrices(int q);

/// The permutation of isotropic-point indices induced by a matrix that maps
/// the isotropic set onto itself; throws std::invalid_argument otherwise.
std::vector<int> induced_point_permutation(const Matrix3& m,
                                           const std::vector<ProjPoint>& pts,
                                           const FieldTables& gf);

/// True iff the group generated by xi_subgroup plus the coordinate reversal
/// (x0,x1,x2) -> (x2,x1,x0) is transitive on ordered pairs of distinct
/// isotropic points. Orbit computation; intended for q <= 4.
bool check_two_transitive(int q);

}  // namespace unitals
