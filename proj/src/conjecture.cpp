#include "qkflag/conjecture.hpp"

#include <functional>

#include "qkflag/errors.hpp"
#include "qkflag/parallel.hpp"

namespace qkflag {

namespace {

int floor_div(int a, int b) {
  int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

int mod(int a, int n) { return ((a % n) + n) % n; }

}  // namespace

Translation translate(int idx, SchubertIndex u, SchubertIndex v, int n) {
  require_valid(u, n);
  require_valid(v, n);
  int a = 0, b = 0;
  switch (idx) {
    case 0:
      a = u.i + v.i - 1, b = u.j + v.j - 2;
      break;
    case 1:
      a = u.i + v.i - 2, b = u.j + v.j - 2;
      break;
    case 2:
      a = u.i + v.i - 1, b = u.j + v.j - 1;
      break;
    case 3:
      a = u.i + v.i - 2, b = u.j + v.j - 1;
      break;
    default:
      throw InvalidIndex("translation index must be 0..3");
  }
  SchubertIndex w{mod(a, n) + 1, mod(b, n) + 1};
  return {w, w.i == w.j};
}

int degree_operator(int idx, SchubertIndex u, SchubertIndex v, SchubertIndex w, int n) {
  if (idx == 1) return 1 - floor_div(u.i + v.i - w.i, n);
  if (idx == 2) return floor_div(u.j + v.j - w.j, n);
  throw InvalidIndex("degree operator index must be 1 or 2");
}

CurveDegree degree_operators(SchubertIndex u, SchubertIndex v, SchubertIndex w, int n) {
  return {degree_operator(1, u, v, w, n), degree_operator(2, u, v, w, n)};
}

int delta(SchubertIndex u, SchubertIndex v, SchubertIndex w, int n) {
  if (w.i == w.j) throw DegenerateTarget("degenerate target (" + std::to_string(w.i) + "," + std::to_string(w.j) + ")");
  const auto d = degree_operators(u, v, w, n);
  const int e = codim(w, n) - codim(u, n) - codim(v, n) + d.chern_integral(n);
  return e % 2 == 0 ? 1 : 0;
}

std::string to_string(ConjectureGate g) { return g == ConjectureGate::literal ? "literal" : "flipped"; }

QKClass conjectured_product(SchubertIndex u, SchubertIndex v, int n, ConjectureGate gate) {
  QKClass out;
  auto add = [&](SchubertIndex w, Integer c) {
    if (c == 0) return;
    const auto d = degree_operators(u, v, w, n);
    if (d.d1 < 0 || d.d2 < 0) throw UnsupportedDegree("negative degree operator at " + to_string(w));
    out.add(w, NovikovPolynomial::monomial(d, c));
  };
  const auto t0 = translate(0, u, v, n);
  if (!t0.degenerate) add(t0.w, delta(u, v, t0.w, n));

  const auto t1 = translate(1, u, v, n);
  int gate_value = 0;
  if (!t1.degenerate) {
    const int d1 = delta(u, v, t1.w, n);
    gate_value = gate == ConjectureGate::literal ? 1 - d1 : d1;
  }
  if (gate_value == 0) return out;
  const auto t2 = translate(2, u, v, n);
  const auto t3 = translate(3, u, v, n);
  add(t1.w, gate_value);
  if (!t2.degenerate) add(t2.w, gate_value);
  if (!t3.degenerate) add(t3.w, -gate_value);
  return out;
}

namespace {

using Producer = std::function<QKClass(SchubertIndex, SchubertIndex, std::vector<DegreeAnomaly>&)>;

DiffReport diff_against(const MultiplicationTable& table, const Producer& produce, std::string source, unsigned jobs) {
  const int n = table.n();
  const int N = table.size();
  DiffReport report;
  report.n = n;
  report.source = std::move(source);
  std::vector<std::vector<ConjectureMismatch>> rows(N);
  std::vector<std::vector<DegreeAnomaly>> anomalies(N);
  std::vector<std::size_t> bad_pairs(N, 0);
  parallel_for(N, jobs, [&](std::size_t a) {
    const auto u = from_linear(static_cast<int>(a), n);
    for (int b = 0; b < N; ++b) {
      const auto v = from_linear(b, n);
      const auto expected = table.product(u, v);
      const auto got = produce(u, v, anomalies[a]);
      if (expected == got) continue;
      ++bad_pairs[a];
      for (int c = 0; c < N; ++c) {
        const auto w = from_linear(c, n);
        const auto x = expected.coefficient(w);
        const auto y = got.coefficient(w);
        if (x == y) continue;
        auto degrees = x.support();
        for (auto d : y.support()) degrees.insert(d);
        for (auto d : degrees) {
          if (x.coefficient(d) != y.coefficient(d)) rows[a].push_back({u, v, w, d, x.coefficient(d), y.coefficient(d)});
        }
      }
    }
  });
  for (int a = 0; a < N; ++a) {
    for (auto& m : rows[a]) report.mismatches.push_back(m);
    for (auto& x : anomalies[a]) report.anomalies.push_back(x);
    report.pairs_mismatched += bad_pairs[a];
  }
  report.pairs_compared = static_cast<std::size_t>(N) * N;
  return report;
}

}  // namespace

DiffReport compare_with_table(const MultiplicationTable& table, ConjectureGate gate, unsigned jobs) {
  const int n = table.n();
  Producer produce = [n, gate](SchubertIndex u, SchubertIndex v, std::vector<DegreeAnomaly>& anomalies) {
    for (int idx = 0; idx < 4; ++idx) {
      const auto t = translate(idx, u, v, n);
      if (t.degenerate) continue;
      const auto d = degree_operators(u, v, t.w, n);
      if (d.d1 < 0 || d.d1 > 1 || d.d2 < 0 || d.d2 > 1) anomalies.push_back({u, v, idx, t.w, d});
    }
    try {
      return conjectured_product(u, v, n, gate);
    } catch (const UnsupportedDegree&) {
      return QKClass();
    }
  };
  return diff_against(table, produce, "conjecture-" + to_string(gate), jobs);
}

DiffReport compare_tables(const MultiplicationTable& table, const MultiplicationTable& other) {
  if (table.n() != other.n()) throw RankMismatch("tables have different ranks");
  Producer produce = [&other](SchubertIndex u, SchubertIndex v, std::vector<DegreeAnomaly>&) {
    return other.product(u, v);
  };
  return diff_against(table, produce, "table", 1);
}

}  // namespace qkflag
