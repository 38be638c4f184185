#include "qkflag/correlators.hpp"

#include <algorithm>
#include <string>

#include "qkflag/errors.hpp"
#include "qkflag/kring.hpp"

namespace qkflag {

namespace {

std::string degree_name(CurveDegree d) { return "(" + std::to_string(d.d1) + "," + std::to_string(d.d2) + ")"; }

bool direct_family(SchubertIndex u1, SchubertIndex u2, CurveDegree d, int n) {
  if (d == kDegreeZero || d == kDegreeL1L2) return true;
  if (d == kDegreeL2) return u1.j + u2.j <= n + 2;
  if (d.d1 == 1 && d.d2 >= 2) return true;
  return d.d1 >= 2 && d.d2 >= 2;
}

int direct_value(SchubertIndex u1, SchubertIndex u2, SchubertIndex w, CurveDegree d, int n) {
  if (d == kDegreeZero) return static_cast<int>(k_product(u1, u2, n).coefficient(w).value());
  if (d == kDegreeL2) {
    const int s = u1.i + u2.i;
    if (s < n + 1) return 0;
    if (s == n + 1) return w == SchubertIndex{1, 2};
    return w == SchubertIndex{s - n, 1};
  }
  if (d.d1 == 1 && d.d2 >= 2) return w == SchubertIndex{std::min(n, u1.i + u2.i), 1};
  return w == SchubertIndex{n, 1};
}

void check_degree(CurveDegree d) {
  if (d.d1 < 0 || d.d2 < 0) throw UnsupportedDegree("negative degree " + degree_name(d));
}

}  // namespace

int two_point(SchubertIndex u, SchubertIndex w, CurveDegree degree, int n) {
  require_valid(u, n);
  require_valid(w, n);
  const int i = u.i, j = u.j;
  if (degree == kDegreeL1) {
    return (j < n && w == SchubertIndex{n, j}) || (j == n && w == SchubertIndex{n - 1, n});
  }
  if (degree == kDegreeL2) {
    return (i > 1 && w == SchubertIndex{i, 1}) || (i == 1 && w == SchubertIndex{1, 2});
  }
  if (degree == kDegreeL1L2) return w == SchubertIndex{n, 1};
  throw UnsupportedDegree("no two-point closed form in degree " + degree_name(degree));
}

int three_point_projective(int i1, int i2, int i3, int d, int m) {
  if (m < 1) throw InvalidRank("projective dimension must be positive");
  for (int i : {i1, i2, i3}) {
    if (i < 1 || i > m + 1) throw InvalidIndex("projective Schubert index out of range: " + std::to_string(i));
  }
  if (d < 1) throw UnsupportedDegree("projective correlators need degree at least 1");
  return (d == 1 && i1 + i2 + i3 < m + 2) ? 0 : 1;
}

Integer three_point_incidence(SchubertIndex u1, SchubertIndex u2, SchubertIndex w, CurveDegree degree, int n) {
  require_valid(u1, n);
  require_valid(u2, n);
  require_valid(w, n);
  check_degree(degree);
  if (direct_family(u1, u2, degree, n)) return direct_value(u1, u2, w, degree, n);
  const auto a = dual_index(u1, n), b = dual_index(u2, n), c = dual_index(w, n);
  const CurveDegree swapped{degree.d2, degree.d1};
  if (direct_family(a, b, swapped, n)) return direct_value(a, b, c, swapped, n);
  throw UnsupportedDegree("no three-point closed form for " + to_string(u1) + ", " + to_string(u2) + " in degree " +
                          degree_name(degree));
}

bool is_supported(const CorrelatorQuery& q, int n) {
  try {
    evaluate(q, n);
    return true;
  } catch (const UnsupportedDegree&) {
    return false;
  }
}

CorrelatorQuery symmetry_transform(const CorrelatorQuery& q, int n) {
  CorrelatorQuery out;
  for (const auto& u : q.inputs) out.inputs.push_back(dual_index(u, n));
  out.dual_output = dual_index(q.dual_output, n);
  out.degree = {q.degree.d2, q.degree.d1};
  return out;
}

Integer evaluate(const CorrelatorQuery& q, int n) {
  if (q.inputs.size() == 1) return two_point(q.inputs[0], q.dual_output, q.degree, n);
  if (q.inputs.size() == 2) return three_point_incidence(q.inputs[0], q.inputs[1], q.dual_output, q.degree, n);
  throw ShapeMismatch("correlator queries take one or two O-classes");
}

KClass quantum_part_from_correlators(Hyperplane h, SchubertIndex v, CurveDegree degree, int n) {
  require_valid(v, n);
  const auto hu = hyperplane_index(h, n);
  const auto basis = enumerate_basis(RankData(n));
  auto three = [&](SchubertIndex w, CurveDegree d) { return three_point_incidence(hu, v, w, d, n); };
  auto two = [&](SchubertIndex a, SchubertIndex b, CurveDegree d) { return Integer(two_point(a, b, d, n)); };

  KClass out;
  if (degree == kDegreeL1 || degree == kDegreeL2) {
    for (const auto& w : basis) {
      out.add(w, three(w, degree));
      const Integer c0 = three(w, kDegreeZero);
      if (c0 == 0) continue;
      for (const auto& w2 : basis) out.add(w2, -(c0 * two(w, w2, degree)));
    }
    return out;
  }
  if (degree != kDegreeL1L2) throw UnsupportedDegree("reconstruction covers l1, l2 and l1+l2 only");
  for (const auto& w : basis) {
    out.add(w, three(w, kDegreeL1L2));
    const Integer a = three(w, kDegreeL1);
    const Integer b = three(w, kDegreeL2);
    const Integer c0 = three(w, kDegreeZero);
    for (const auto& w2 : basis) {
      out.add(w2, -(a * two(w, w2, kDegreeL2)));
      out.add(w2, -(b * two(w, w2, kDegreeL1)));
      out.add(w2, -(c0 * two(w, w2, kDegreeL1L2)));
      if (c0 == 0) continue;
      const Integer x = two(w, w2, kDegreeL1);
      const Integer y = two(w, w2, kDegreeL2);
      if (x == 0 && y == 0) continue;
      for (const auto& w3 : basis) {
        out.add(w3, c0 * (x * two(w2, w3, kDegreeL2) + y * two(w2, w3, kDegreeL1)));
      }
    }
  }
  return out;
}

}  // namespace qkflag
