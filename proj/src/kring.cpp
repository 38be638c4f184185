#include "qkflag/kring.hpp"

namespace qkflag {

namespace {

void add_if_valid(KClass& out, int a, int b, int n, Integer c) {
  SchubertIndex w{a, b};
  if (is_valid(w, n)) out.add(w, c);
}

}  // namespace

KClass k_product(SchubertIndex u, SchubertIndex v, int n) {
  require_valid(u, n);
  require_valid(v, n);
  const int k = u.i, p = u.j, i = v.i, j = v.j;
  KClass out;
  if (i + k - n >= j + p || i < j || k < p) {
    add_if_valid(out, i + k - n, j + p - 1, n, 1);
  } else {
    add_if_valid(out, i + k - n - 1, j + p - 1, n, 1);
    add_if_valid(out, i + k - n, j + p, n, 1);
    add_if_valid(out, i + k - n - 1, j + p, n, -1);
  }
  return out;
}

KClass k_class_product(const KClass& a, const KClass& b, int n) {
  KClass out;
  for (const auto& [u, x] : a.terms()) {
    for (const auto& [v, y] : b.terms()) out += k_product(u, v, n).scaled(x * y);
  }
  return out;
}

ChowClass chow_product(SchubertIndex u, SchubertIndex v, int n) {
  require_valid(u, n);
  require_valid(v, n);
  const int k = u.i, l = u.j, i = v.i, j = v.j;
  ChowClass out;
  if (i + k <= n || j + l >= n + 2) return out;
  const int a = i + k - n;
  const int b = j + l - 1;
  if (1 <= a && a <= b && b <= n && i > j && k > l) {
    add_if_valid(out, a - 1, b, n, 1);
    add_if_valid(out, a, b + 1, n, 1);
  } else {
    add_if_valid(out, a, b, n, 1);
  }
  return out;
}

}  // namespace qkflag
