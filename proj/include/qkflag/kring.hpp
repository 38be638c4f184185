#pragma once

#include "qkflag/basis.hpp"
#include "qkflag/poly.hpp"

namespace qkflag {

// O_u . O_v in K(X). Out-of-range and O_{a,a} terms vanish.
KClass k_product(SchubertIndex u, SchubertIndex v, int n);
KClass k_class_product(const KClass& a, const KClass& b, int n);

// [X(u)] . [X(v)] in the Chow ring, in the basis of Schubert cycles.
ChowClass chow_product(SchubertIndex u, SchubertIndex v, int n);

}  // namespace qkflag
