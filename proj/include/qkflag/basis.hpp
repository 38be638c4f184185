#pragma once

#include <compare>
#include <string>
#include <vector>

namespace qkflag {

// Schubert index (i,j): the coset of permutations sending 1 to i and n to j.
// Lexicographic order on (i,j) coincides with the reference linear order.
struct SchubertIndex {
  int i = 0;
  int j = 0;

  auto operator<=>(const SchubertIndex&) const = default;
};

class RankData {
 public:
  explicit RankData(int n);

  int n() const { return n_; }
  int size() const { return n_ * (n_ - 1); }
  int dim() const { return 2 * n_ - 3; }

  SchubertIndex unit() const { return {n_, 1}; }
  SchubertIndex point() const { return {1, n_}; }
  SchubertIndex h1() const { return {n_ - 1, 1}; }
  SchubertIndex h2() const { return {n_, 2}; }

 private:
  int n_;
};

bool is_valid(SchubertIndex w, int n);
void require_valid(SchubertIndex w, int n);

std::vector<SchubertIndex> enumerate_basis(const RankData& rank);

// 0-based position in the basis.
int linear_index(SchubertIndex w, int n);
SchubertIndex from_linear(int t, int n);

int length(SchubertIndex w, int n);
int codim(SchubertIndex w, int n);
SchubertIndex dual_index(SchubertIndex w, int n);

std::string to_string(SchubertIndex w);

}  // namespace qkflag
