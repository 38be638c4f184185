#include "qkflag/flags.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>

#include "qkflag/errors.hpp"

namespace qkflag {

namespace {

int floor_div(int a, int b) {
  int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

int ceil_div(int a, int b) { return -floor_div(-a, b); }

void check_degrees(const FlagShape& I, const std::vector<int>& d) {
  if (static_cast<int>(d.size()) != I.m()) throw ShapeMismatch("degree vector length differs from the flag shape");
  for (int x : d) {
    if (x < 0) throw ShapeMismatch("degrees must be nonnegative");
  }
}

// nondecreasing, sum total, length l, smallest entries first
std::vector<int> fill(int total, int l) {
  const int q = ceil_div(total, l);
  const int low = q * l - total;
  std::vector<int> out(low, q - 1);
  out.resize(l, q);
  return out;
}

void nondecreasing(int total, int len, int lo, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (len == 0) {
    if (total == 0) out.push_back(cur);
    return;
  }
  for (int x = lo; x * len <= total; ++x) {
    cur.push_back(x);
    nondecreasing(total - x, len - 1, x, cur, out);
    cur.pop_back();
  }
}

}  // namespace

FlagShape::FlagShape(std::vector<int> dims, int n) : dims_(std::move(dims)), n_(n) {
  if (dims_.empty()) throw ShapeMismatch("flag shape needs at least one dimension");
  int prev = 0;
  for (int x : dims_) {
    if (x <= prev) throw ShapeMismatch("flag dimensions must be positive and strictly increasing");
    prev = x;
  }
  if (prev >= n_) throw ShapeMismatch("largest flag dimension must be below n");
}

FlagShape::FlagShape(std::vector<int> dims) : FlagShape(dims, dims.empty() ? 0 : dims.back() + 1) {}

int FlagShape::i(int k) const {
  if (k == 0) return 0;
  if (k == m() + 1) return n_;
  if (k < 0 || k > m() + 1) throw InvalidIndex("flag index out of range: " + std::to_string(k));
  return dims_[k - 1];
}

AdmissibleSequenceSet AdmissibleSequenceSet::from_sequences(std::vector<std::vector<int>> seqs) {
  AdmissibleSequenceSet out;
  for (const auto& s : seqs) out.d.push_back(std::accumulate(s.begin(), s.end(), 0));
  out.a = std::move(seqs);
  return out;
}

bool is_admissible(const AdmissibleSequenceSet& A, const FlagShape& I) {
  if (static_cast<int>(A.a.size()) != I.m() || static_cast<int>(A.d.size()) != I.m()) {
    throw ShapeMismatch("sequence count differs from the flag shape");
  }
  for (int k = 1; k <= I.m(); ++k) {
    if (static_cast<int>(A.a[k - 1].size()) != I.i(k)) {
      throw ShapeMismatch("sequence " + std::to_string(k) + " has the wrong length");
    }
  }
  for (int k = 0; k < I.m(); ++k) {
    const auto& s = A.a[k];
    long long sum = 0;
    for (std::size_t j = 0; j < s.size(); ++j) {
      if (s[j] < 0) return false;
      if (j + 1 < s.size() && s[j] > s[j + 1]) return false;
      sum += s[j];
    }
    if (sum != A.d[k]) return false;
    if (k + 1 < I.m()) {
      for (std::size_t j = 0; j < s.size(); ++j) {
        if (A.a[k + 1][j] > s[j]) return false;
      }
    }
  }
  return true;
}

long long spread(const AdmissibleSequenceSet& A) {
  long long total = 0;
  for (const auto& s : A.a) {
    for (std::size_t p = 0; p < s.size(); ++p) {
      for (std::size_t l = 0; l < p; ++l) total += s[p] - s[l];
    }
  }
  return total;
}

AdmissibleSequenceSet balanced_construct(const FlagShape& I, const std::vector<int>& d) {
  check_degrees(I, d);
  AdmissibleSequenceSet out;
  out.d = d;
  out.a.push_back(fill(d[0], I.i(1)));
  for (int k = 2; k <= I.m(); ++k) {
    const auto& prev = out.a.back();
    const int ik = I.i(k);
    const int dk = d[k - 1];
    int r = 0;
    for (std::size_t j = 0; j < prev.size(); ++j) {
      if (static_cast<long long>(prev[j]) * ik <= dk) r = static_cast<int>(j) + 1;
    }
    auto carried = [&](int upto) { return std::accumulate(prev.begin(), prev.begin() + upto, 0); };
    for (int guard = 0; guard <= ik; ++guard) {
      const int rem = dk - carried(r);
      int R = r;
      for (int j = r; j < static_cast<int>(prev.size()); ++j) {
        if (static_cast<long long>(prev[j]) * (ik - r) <= rem) R = j + 1;
      }
      if (R == r) break;
      r = R;
    }
    const int rem = dk - carried(r);
    std::vector<int> next(prev.begin(), prev.begin() + r);
    const auto tail = fill(rem, ik - r);
    next.insert(next.end(), tail.begin(), tail.end());
    out.a.push_back(std::move(next));
  }
  return out;
}

AdmissibleSequenceSet brute_force_balanced(const FlagShape& I, const std::vector<int>& d, int bound) {
  check_degrees(I, d);
  if (std::accumulate(d.begin(), d.end(), 0) > bound) throw BoundExceeded("degree sum exceeds enumeration bound");
  std::vector<std::vector<std::vector<int>>> options(I.m());
  for (int k = 0; k < I.m(); ++k) {
    std::vector<int> cur;
    nondecreasing(d[k], I.i(k + 1), 0, cur, options[k]);
  }

  std::optional<long long> best;
  int ties = 0;
  AdmissibleSequenceSet best_set;
  AdmissibleSequenceSet cur;
  cur.d = d;
  auto search = [&](auto&& self, int k) -> void {
    if (k == I.m()) {
      const long long s = spread(cur);
      if (!best || s < *best) {
        best = s;
        ties = 1;
        best_set = cur;
      } else if (s == *best) {
        ++ties;
      }
      return;
    }
    for (const auto& seq : options[k]) {
      if (k > 0) {
        const auto& prev = cur.a.back();
        bool ok = true;
        for (std::size_t j = 0; j < prev.size() && ok; ++j) ok = seq[j] <= prev[j];
        if (!ok) continue;
      }
      cur.a.push_back(seq);
      self(self, k + 1);
      cur.a.pop_back();
    }
  };
  search(search, 0);
  if (!best) throw ShapeMismatch("no admissible set exists for this degree vector");
  if (ties > 1) throw NonUniqueMinimizer(std::to_string(ties) + " admissible sets attain the minimal spread");
  return best_set;
}

bool splitting_predicate(const FlagShape& I, const std::vector<int>& d, int k) {
  check_degrees(I, d);
  if (k <= 1 || k > I.m()) throw InvalidIndex("splitting index must satisfy 1 < k <= m");
  auto deg = [&](int p) { return p == 0 ? 0 : d[p - 1]; };
  for (int p = 1; p < k; ++p) {
    const long long need = static_cast<long long>(I.i(k)) * ceil_div(deg(p) - deg(p - 1), I.i(p) - I.i(p - 1));
    if (deg(k) < need) return false;
  }
  return true;
}

bool theorem_conditions(const StabilizationInput& s) {
  const FlagShape shape(s.dims, s.n);
  const int m = shape.m();
  if (static_cast<int>(s.d.size()) != m) throw ShapeMismatch("degree vector length differs from the flag shape");
  if (s.k < 1 || s.k > m) throw ShapeMismatch("stabilization index must lie in [1, m]");
  if (s.r < 0) throw ShapeMismatch("r must be nonnegative");
  auto deg = [&](int p) { return (p == 0 || p == m + 1) ? 0 : s.d[p - 1]; };
  auto dim = [&](int p) { return shape.i(p); };
  const int k = s.k;

  for (int p = 1; p < k; ++p) {
    if (deg(k) < static_cast<long long>(dim(k)) * ceil_div(deg(p) - deg(p - 1), dim(p) - dim(p - 1))) return false;
  }
  if (deg(k - 1) > floor_div(deg(k + 1), dim(k + 1))) return false;
  const long long step = dim(k) - dim(k - 1);
  const long long bound =
      s.r * step + deg(k - 1) + step * (floor_div(deg(k + 1) - deg(k - 1), dim(k + 1) - dim(k - 1)) + 1);
  return deg(k) >= bound;
}

Integer binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  Integer out = 1;
  for (int t = 1; t <= k; ++t) {
    // exact at every step: out * (n-k+t) is divisible by t
    out *= Integer(n - k + t);
    out = Integer(out.value() / t);
  }
  return out;
}

Integer vandermonde_sum(int n, int m, int N) {
  if (n < 0 || m < 0 || N < 0) throw InvalidIndex("vandermonde_sum takes nonnegative integers");
  Integer total = 0;
  for (int k = 0; k <= std::min(n, N); ++k) {
    const int p = N - k;
    if (p > m) continue;
    total += binomial(n, k) * binomial(m, p);
  }
  return total;
}

Integer alternating_decomposition_sum(int d, int e, int d0, int e0) {
  if (d < 0 || e < 0 || d0 < 0 || e0 < 0) throw InvalidIndex("alternating_decomposition_sum takes nonnegative integers");
  const int a = d - d0;
  const int b = e - e0;
  if (a < 0 || b < 0) return 0;
  if (a > kDecompositionCap || b > kDecompositionCap) throw BoundExceeded("decomposition enumeration cap exceeded");
  // f(x,y): signed count of ordered decompositions of (x,y) into nonzero steps
  std::vector<std::vector<Integer>> f(a + 1, std::vector<Integer>(b + 1));
  for (int x = 0; x <= a; ++x) {
    for (int y = 0; y <= b; ++y) {
      Integer v = (x == 0 && y == 0) ? 1 : 0;
      for (int sx = 0; sx <= x; ++sx) {
        for (int sy = 0; sy <= y; ++sy) {
          if (sx == 0 && sy == 0) continue;
          v -= f[x - sx][y - sy];
        }
      }
      f[x][y] = v;
    }
  }
  return f[a][b];
}

}  // namespace qkflag
