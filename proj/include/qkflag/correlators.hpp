#pragma once

#include <vector>

#include "qkflag/basis.hpp"
#include "qkflag/poly.hpp"
#include "qkflag/qkring.hpp"

namespace qkflag {

// Inputs are O-classes, dual_output is an I-class. One input: two-point; two inputs: three-point.
struct CorrelatorQuery {
  std::vector<SchubertIndex> inputs;
  SchubertIndex dual_output;
  CurveDegree degree;
  bool operator==(const CorrelatorQuery&) const = default;
};

// <O_u, I_w>_d for d in {l1, l2, l1+l2}
int two_point(SchubertIndex u, SchubertIndex w, CurveDegree degree, int n);

// <L_{i1}, L_{i2}, L_{i3}>_d on P^m, d >= 1
int three_point_projective(int i1, int i2, int i3, int d, int m);

// <O_{u1}, O_{u2}, I_w>_d
Integer three_point_incidence(SchubertIndex u1, SchubertIndex u2, SchubertIndex w, CurveDegree degree, int n);

// true when the query has a closed form, directly or after dualizing
bool is_supported(const CorrelatorQuery& q, int n);

CorrelatorQuery symmetry_transform(const CorrelatorQuery& q, int n);
Integer evaluate(const CorrelatorQuery& q, int n);

// Degree-d part of O_h * O_v with the Novikov monomial stripped, d in {l1, l2, l1+l2}.
KClass quantum_part_from_correlators(Hyperplane h, SchubertIndex v, CurveDegree degree, int n);

}  // namespace qkflag
