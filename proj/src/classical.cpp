#include "unitals/classical.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>

#include "unitals/errors.hpp"

namespace unitals {

ProjPoint normalize_point(std::array<int, 3> raw, const FieldTables& gf) {
  for (int i = 0; i < 3; ++i) {
    if (raw[i] == 0) continue;
    int s = gf.inv(raw[i]);
    ProjPoint p;
    for (int j = 0; j < 3; ++j) p.coords[j] = gf.mul(raw[j], s);
    return p;
  }
  throw std::invalid_argument("zero vector has no projective point");
}

int hermitian_form(const std::array<int, 3>& x, const std::array<int, 3>& y,
                   const FieldTables& gf) {
  int t0 = gf.mul(x[0], gf.conj(y[2]));
  int t1 = gf.mul(x[1], gf.conj(y[1]));
  int t2 = gf.mul(x[2], gf.conj(y[0]));
  return gf.add(gf.sub(t0, t1), t2);
}

std::vector<ProjPoint> projective_points(const FieldTables& gf) {
  const int n = gf.size();
  std::vector<ProjPoint> pts;
  pts.reserve(static_cast<std::size_t>(n) * n + n + 1);
  pts.push_back(ProjPoint{{0, 0, 1}});
  for (int t = 0; t < n; ++t) pts.push_back(ProjPoint{{0, 1, t}});
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) pts.push_back(ProjPoint{{1, a, b}});
  return pts;
}

std::vector<ProjPoint> isotropic_points(const FieldTables& gf) {
  std::vector<ProjPoint> pts;
  for (const ProjPoint& p : projective_points(gf))
    if (hermitian_form(p.coords, p.coords, gf) == 0) pts.push_back(p);
  return pts;
}

std::vector<ProjPoint> isotropic_points(int q) {
  FieldTables gf = FieldTables::build(q);
  return isotropic_points(gf);
}

std::vector<ProjPoint> line_through(const ProjPoint& a, const ProjPoint& b,
                                    const FieldTables& gf) {
  if (a == b) throw std::invalid_argument("line through equal points");
  std::vector<ProjPoint> line;
  line.reserve(gf.size() + 1);
  line.push_back(b);
  for (int lam = 0; lam < gf.size(); ++lam) {
    std::array<int, 3> v;
    for (int j = 0; j < 3; ++j) v[j] = gf.add(a.coords[j], gf.mul(lam, b.coords[j]));
    line.push_back(normalize_point(v, gf));
  }
  return line;
}

Unital classical_unital(const FieldTables& gf) {
  std::vector<ProjPoint> pts = isotropic_points(gf);
  const int v = static_cast<int>(pts.size());
  std::map<ProjPoint, int> index;
  for (int i = 0; i < v; ++i) index.emplace(pts[i], i);

  std::set<Block> blocks;
  for (int i = 0; i < v; ++i)
    for (int j = i + 1; j < v; ++j) {
      Block blk;
      for (const ProjPoint& p : line_through(pts[i], pts[j], gf)) {
        auto it = index.find(p);
        if (it != index.end()) blk.push_back(it->second);
      }
      std::sort(blk.begin(), blk.end());
      blocks.insert(std::move(blk));
    }
  return Unital(gf.q(), v, {blocks.begin(), blocks.end()});
}

Unital classical_unital(int q) {
  FieldTables gf = FieldTables::build(q);
  return classical_unital(gf);
}

Matrix3 mat_mul(const Matrix3& a, const Matrix3& b, const FieldTables& gf) {
  Matrix3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      int s = 0;
      for (int k = 0; k < 3; ++k) s = gf.add(s, gf.mul(a.m[i * 3 + k], b.m[k * 3 + j]));
      r.m[i * 3 + j] = s;
    }
  return r;
}

std::array<int, 3> apply_matrix(const std::array<int, 3>& row, const Matrix3& m,
                                const FieldTables& gf) {
  std::array<int, 3> r;
  for (int j = 0; j < 3; ++j) {
    int s = 0;
    for (int i = 0; i < 3; ++i) s = gf.add(s, gf.mul(row[i], m.m[i * 3 + j]));
    r[j] = s;
  }
  return r;
}

Matrix3 normalize_matrix(const Matrix3& m, const FieldTables& gf) {
  for (int e : m.m) {
    if (e == 0) continue;
    int s = gf.inv(e);
    Matrix3 r;
    for (int i = 0; i < 9; ++i) r.m[i] = gf.mul(m.m[i], s);
    return r;
  }
  throw std::invalid_argument("zero matrix");
}

std::vector<Matrix3> xi_subgroup(const FieldTables& gf) {
  std::vector<Matrix3> out;
  for (int x = 0; x < gf.size(); ++x) {
    int nx = gf.norm(x);
    for (int z = 0; z < gf.size(); ++z) {
      if (gf.trace(z) != nx) continue;
      Matrix3 m;
      m.m = {1, x, z, 0, 1, gf.conj(x), 0, 0, 1};
      out.push_back(m);
    }
  }
  return out;
}

std::vector<Matrix3> xi_subgroup(int q) {
  FieldTables gf = FieldTables::build(q);
  return xi_subgroup(gf);
}

std::vector<Matrix3> translation_matrices(const FieldTables& gf) {
  std::vector<Matrix3> out;
  for (int z = 0; z < gf.size(); ++z) {
    if (gf.trace(z) != 0) continue;
    Matrix3 m;
    m.m = {1, 0, z, 0, 1, 0, 0, 0, 1};
    out.push_back(m);
  }
  return out;
}

std::vector<Matrix3> translation_matrices(int q) {
  FieldTables gf = FieldTables::build(q);
  return translation_matrices(gf);
}

std::vector<int> induced_point_permutation(const Matrix3& m,
                                           const std::vector<ProjPoint>& pts,
                                           const FieldTables& gf) {
  std::map<ProjPoint, int> index;
  for (int i = 0; i < static_cast<int>(pts.size()); ++i) index.emplace(pts[i], i);
  std::vector<int> perm(pts.size());
  for (int i = 0; i < static_cast<int>(pts.size()); ++i) {
    ProjPoint img = normalize_point(apply_matrix(pts[i].coords, m, gf), gf);
    auto it = index.find(img);
    if (it == index.end())
      throw std::invalid_argument("matrix does not preserve the point set");
    perm[i] = it->second;
  }
  return perm;
}

bool check_two_transitive(int q) {
  FieldTables gf = FieldTables::build(q);
  std::vector<ProjPoint> pts = isotropic_points(gf);
  const int n = static_cast<int>(pts.size());

  std::vector<std::vector<int>> gens;
  for (const Matrix3& m : xi_subgroup(gf))
    gens.push_back(induced_point_permutation(m, pts, gf));
  Matrix3 swap02;
  swap02.m = {0, 0, 1, 0, 1, 0, 1, 0, 0};
  gens.push_back(induced_point_permutation(swap02, pts, gf));

  // orbit of one ordered pair under the generated group; doubly transitive
  // iff it reaches all n(n-1) ordered pairs of distinct points
  std::vector<char> seen(static_cast<std::size_t>(n) * n, 0);
  std::deque<std::pair<int, int>> queue;
  auto push = [&](int a, int b) {
    std::size_t k = static_cast<std::size_t>(a) * n + b;
    if (!seen[k]) {
      seen[k] = 1;
      queue.emplace_back(a, b);
    }
  };
  push(0, 1);
  std::size_t reached = 0;
  while (!queue.empty()) {
    auto [a, b] = queue.front();
    queue.pop_front();
    ++reached;
    for (const std::vector<int>& g : gens) push(g[a], g[b]);
  }
  return reached == static_cast<std::size_t>(n) * (n - 1);
}

}  // namespace unitals
