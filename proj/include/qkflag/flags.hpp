#pragma once

#include <vector>

#include "qkflag/poly.hpp"

namespace qkflag {

// 0 < i_1 < ... < i_m < n
class FlagShape {
 public:
  FlagShape(std::vector<int> dims, int n);
  // ambient dimension i_m + 1
  explicit FlagShape(std::vector<int> dims);

  const std::vector<int>& dims() const { return dims_; }
  int m() const { return static_cast<int>(dims_.size()); }
  int n() const { return n_; }
  // 1-based; i_0 = 0 and i_{m+1} = n
  int i(int k) const;

 private:
  std::vector<int> dims_;
  int n_;
};

struct AdmissibleSequenceSet {
  std::vector<std::vector<int>> a;  // a[k-1] has length i_k
  std::vector<int> d;

  static AdmissibleSequenceSet from_sequences(std::vector<std::vector<int>> seqs);
  bool operator==(const AdmissibleSequenceSet&) const = default;
};

bool is_admissible(const AdmissibleSequenceSet& A, const FlagShape& I);
long long spread(const AdmissibleSequenceSet& A);

AdmissibleSequenceSet balanced_construct(const FlagShape& I, const std::vector<int>& d);
AdmissibleSequenceSet brute_force_balanced(const FlagShape& I, const std::vector<int>& d, int bound);

// k is 1-based, 1 < k <= m
bool splitting_predicate(const FlagShape& I, const std::vector<int>& d, int k);

struct StabilizationInput {
  std::vector<int> dims;  // n_1 < ... < n_m
  int n = 0;
  std::vector<int> d;  // d_1..d_m
  int k = 1;
  int r = 0;
};

bool theorem_conditions(const StabilizationInput& s);

Integer binomial(int n, int k);
Integer vandermonde_sum(int n, int m, int N);

inline constexpr int kDecompositionCap = 64;

// sum of (-1)^r over ordered decompositions (d,e) = (d0,e0) + sum of r nonzero steps
Integer alternating_decomposition_sum(int d, int e, int d0, int e0);

}  // namespace qkflag
