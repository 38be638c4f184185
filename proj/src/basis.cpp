#include "qkflag/basis.hpp"

#include "qkflag/errors.hpp"

namespace qkflag {

RankData::RankData(int n) : n_(n) {
  if (n < 3) throw InvalidRank("rank must be at least 3, got " + std::to_string(n));
}

bool is_valid(SchubertIndex w, int n) {
  return w.i >= 1 && w.i <= n && w.j >= 1 && w.j <= n && w.i != w.j;
}

void require_valid(SchubertIndex w, int n) {
  if (n < 3) throw InvalidRank("rank must be at least 3, got " + std::to_string(n));
  if (!is_valid(w, n)) {
    throw InvalidIndex("invalid Schubert index " + to_string(w) + " for n=" + std::to_string(n));
  }
}

std::vector<SchubertIndex> enumerate_basis(const RankData& rank) {
  std::vector<SchubertIndex> out;
  out.reserve(rank.size());
  for (int t = 0; t < rank.size(); ++t) out.push_back(from_linear(t, rank.n()));
  return out;
}

int linear_index(SchubertIndex w, int n) {
  require_valid(w, n);
  int t = (w.j > w.i) ? (w.i - 1) * (n - 1) + w.j - 1 : (w.i - 1) * (n - 1) + w.j;
  return t - 1;
}

SchubertIndex from_linear(int t, int n) {
  if (n < 3) throw InvalidRank("rank must be at least 3, got " + std::to_string(n));
  if (t < 0 || t >= n * (n - 1)) throw InvalidIndex("linear index out of range: " + std::to_string(t));
  int k = t + 1;
  int i = (k + n - 2) / (n - 1);
  int r = k - (i - 1) * (n - 1);
  int j = r < i ? r : r + 1;
  return {i, j};
}

int length(SchubertIndex w, int n) {
  require_valid(w, n);
  return w.i < w.j ? w.i - 1 + n - w.j : n + w.i - w.j - 2;
}

int codim(SchubertIndex w, int n) { return 2 * n - 3 - length(w, n); }

SchubertIndex dual_index(SchubertIndex w, int n) {
  require_valid(w, n);
  return {n - w.j + 1, n - w.i + 1};
}

std::string to_string(SchubertIndex w) {
  return "O_" + std::to_string(w.i) + "," + std::to_string(w.j);
}

}  // namespace qkflag
