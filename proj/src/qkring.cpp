#include "qkflag/qkring.hpp"

#include "qkflag/errors.hpp"
#include "qkflag/kring.hpp"
#include "qkflag/parallel.hpp"

namespace qkflag {

SchubertIndex hyperplane_index(Hyperplane h, int n) {
  return h == Hyperplane::h1 ? SchubertIndex{n - 1, 1} : SchubertIndex{n, 2};
}

std::string to_string(Hyperplane h) { return h == Hyperplane::h1 ? "h1" : "h2"; }

PolyMatrix::PolyMatrix(int size) : size_(size), data_(static_cast<std::size_t>(size) * size) {}

PolyMatrix PolyMatrix::identity(int size) {
  PolyMatrix m(size);
  for (int i = 0; i < size; ++i) m.at(i, i) = NovikovPolynomial(1);
  return m;
}

PolyMatrix PolyMatrix::multiply(const PolyMatrix& o, unsigned jobs) const {
  if (size_ != o.size_) throw ShapeMismatch("matrix sizes differ");
  PolyMatrix out(size_);
  parallel_for(static_cast<std::size_t>(size_), jobs, [&](std::size_t jj) {
    const int j = static_cast<int>(jj);
    for (int k = 0; k < size_; ++k) {
      const auto& b = o.at(k, j);
      if (b.is_zero()) continue;
      for (int i = 0; i < size_; ++i) {
        const auto& a = at(i, k);
        if (!a.is_zero()) out.at(i, j) += a * b;
      }
    }
  });
  return out;
}

PolyMatrix& PolyMatrix::operator+=(const PolyMatrix& o) {
  if (size_ != o.size_) throw ShapeMismatch("matrix sizes differ");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

PolyMatrix& PolyMatrix::operator-=(const PolyMatrix& o) {
  if (size_ != o.size_) throw ShapeMismatch("matrix sizes differ");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

PolyMatrix PolyMatrix::scaled(const NovikovPolynomial& p) const {
  PolyMatrix out(size_);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] * p;
  return out;
}

QKClass PolyMatrix::column(int col, int n) const {
  QKClass out;
  for (int r = 0; r < size_; ++r) out.add(from_linear(r, n), at(r, col));
  return out;
}

void PolyMatrix::set_column(int col, const QKClass& c, int n) {
  for (int r = 0; r < size_; ++r) at(r, col) = NovikovPolynomial();
  for (const auto& [w, p] : c.terms()) at(linear_index(w, n), col) = p;
}

namespace {

QKClass term(SchubertIndex w, CurveDegree d, Integer c = 1) {
  return QKClass::single(w, NovikovPolynomial::monomial(d, c));
}

QKClass classical_part(Hyperplane h, SchubertIndex v, int n) {
  return to_quantum(k_product(hyperplane_index(h, n), v, n));
}

}  // namespace

QKClass quantum_correction(Hyperplane h, SchubertIndex v, int n) {
  require_valid(v, n);
  const int k = v.i, p = v.j;
  QKClass out;
  if (h == Hyperplane::h1) {
    if (k == 1 && p == n) {
      out += term({n - 1, n}, kDegreeL1);
      out += term({n, 1}, kDegreeL1L2) - term({n - 1, 1}, kDegreeL1L2);
    } else if (k == 1) {
      out += term({n, p}, kDegreeL1);
    } else if (k == 2 && p == 1) {
      out += term({n, 1}, kDegreeL1) - term({n, 2}, kDegreeL1);
    }
  } else {
    if (k == 1 && p == n) {
      out += term({1, 2}, kDegreeL2);
      out += term({n, 1}, kDegreeL1L2) - term({n, 2}, kDegreeL1L2);
    } else if (p == n) {
      out += term({k, 1}, kDegreeL2);
    } else if (k == n && p == n - 1) {
      out += term({n, 1}, kDegreeL2) - term({n - 1, 1}, kDegreeL2);
    }
  }
  return out;
}

QKClass chevalley_apply(Hyperplane h, SchubertIndex v, int n) {
  return classical_part(h, v, n) + quantum_correction(h, v, n);
}

std::optional<QKClass> chevalley_displayed_row(Hyperplane h, SchubertIndex v, int n) {
  require_valid(v, n);
  const int k = v.i, p = v.j;
  auto cls = [n](int a, int b, CurveDegree d, Integer c = 1) {
    SchubertIndex w{a, b};
    return is_valid(w, n) ? term(w, d, c) : QKClass();
  };
  if (h == Hyperplane::h1) {
    if (k == 1 && p == n) {
      return cls(n - 1, n, kDegreeL1) + cls(n, 1, kDegreeL1L2) - cls(n - 1, 1, kDegreeL1L2);
    }
    if (k == 1) return cls(n, p, kDegreeL1);
    if (k == 2 && p == 1) return cls(1, 2, kDegreeZero) + cls(n, 1, kDegreeL1) - cls(n - 1, 1, kDegreeL1);
    if (k != p + 1) return cls(k - 1, p, kDegreeZero);
    if (1 < p && p < n - 1) {
      return cls(p - 1, p, kDegreeZero) + cls(p, p + 1, kDegreeZero) - cls(p - 1, p + 1, kDegreeZero);
    }
    return std::nullopt;
  }
  if (k == 1 && p == n) {
    return cls(1, 2, kDegreeL2) + cls(n, 1, kDegreeL1L2) - cls(n, 2, kDegreeL1L2);
  }
  if (k > 1 && p == n) return cls(k, 1, kDegreeL2);
  if (k == n && p == n - 1) return cls(n - 1, n, kDegreeZero) + cls(n, 1, kDegreeL2) - cls(n, 2, kDegreeL2);
  if (p < n && k != p + 1) return cls(k, p + 1, kDegreeZero);
  if (1 < k && k < n - 1) {
    return cls(p, p + 1, kDegreeZero) + cls(p - 1, p, kDegreeZero) - cls(p - 1, p + 1, kDegreeZero);
  }
  return std::nullopt;
}

QKClass chevalley_apply(Hyperplane h, SchubertIndex v, int n, const ChevalleyRules& rules) {
  const int k = v.i, p = v.j;
  const bool row3 = (h == Hyperplane::h1 && k == 2 && p == 1) || (h == Hyperplane::h2 && k == n && p == n - 1);
  const bool h2_row5 = h == Hyperplane::h2 && k == p + 1 && 1 < k && k < n - 1;
  if ((rules.prop_row3 && row3) || (rules.prop_h2_row5 && h2_row5)) {
    if (auto displayed = chevalley_displayed_row(h, v, n)) return *displayed;
  }
  return chevalley_apply(h, v, n);
}

ChevalleyOperator chevalley_operator(Hyperplane h, int n, const ChevalleyRules& rules) {
  RankData rank(n);
  ChevalleyOperator op{h, PolyMatrix(rank.size())};
  for (int c = 0; c < rank.size(); ++c) op.matrix.set_column(c, chevalley_apply(h, from_linear(c, n), n, rules), n);
  return op;
}

MultiplicationTable::MultiplicationTable(int n, std::vector<PolyMatrix> matrices)
    : n_(RankData(n).n()), matrices_(std::move(matrices)) {
  if (static_cast<int>(matrices_.size()) != size()) throw ShapeMismatch("table needs one matrix per basis element");
  for (const auto& m : matrices_) {
    if (m.size() != size()) throw ShapeMismatch("table matrix has wrong size");
  }
}

const PolyMatrix& MultiplicationTable::matrix(SchubertIndex u) const { return matrices_[linear_index(u, n_)]; }

const NovikovPolynomial& MultiplicationTable::entry(SchubertIndex u, SchubertIndex v, SchubertIndex w) const {
  return matrix(u).at(linear_index(w, n_), linear_index(v, n_));
}

QKClass MultiplicationTable::product(SchubertIndex u, SchubertIndex v) const {
  return matrix(u).column(linear_index(v, n_), n_);
}

MultiplicationTable build_table(int n, const TableOptions& options) {
  RankData rank(n);
  const int size = rank.size();
  const unsigned jobs = options.jobs;
  const PolyMatrix id = PolyMatrix::identity(size);
  const PolyMatrix H1 = chevalley_operator(Hyperplane::h1, n, options.rules).matrix;
  const PolyMatrix H2 = chevalley_operator(Hyperplane::h2, n, options.rules).matrix;
  const PolyMatrix J = H2 - id;

  std::vector<PolyMatrix> M(size);
  auto at = [&](int i, int j) -> PolyMatrix& { return M[linear_index({i, j}, n)]; };

  at(n, 1) = id;
  for (int k = n - 1; k >= 2; --k) at(k, 1) = H1.multiply(at(k + 1, 1), jobs);
  for (int k = 2; k <= n; ++k) {
    for (int p = 2; p < k; ++p) at(k, p) = H2.multiply(at(k, p - 1), jobs);
  }
  if (options.step_c == StepC::reference) {
    at(1, 2) = H1.multiply(at(2, 1), jobs) + J.scaled(NovikovPolynomial::q1());
  } else {
    at(1, 2) = H1.multiply(at(2, 1), jobs) - (id - H1).scaled(NovikovPolynomial::q1());
  }
  for (int p = 2; p < n; ++p) at(p, p + 1) = H1.multiply(at(p + 1, p), jobs) + J.multiply(at(p - 1, p), jobs);
  for (int p = 3; p <= n; ++p) {
    for (int k = p - 2; k >= 1; --k) at(k, p) = H1.multiply(at(k + 1, p), jobs);
  }
  return MultiplicationTable(n, std::move(M));
}

QKClass qk_product(SchubertIndex u, SchubertIndex v, int n, const MultiplicationTable& table) {
  if (table.n() != n) {
    throw RankMismatch("table built for n=" + std::to_string(table.n()) + ", queried with n=" + std::to_string(n));
  }
  return table.product(u, v);
}

DegreeBoundReport degree_bound_check(const MultiplicationTable& table) {
  const int n = table.n();
  DegreeBoundReport report;
  report.n = n;
  for (Hyperplane h : {Hyperplane::h1, Hyperplane::h2}) {
    const auto& m = table.matrix(hyperplane_index(h, n));
    for (int c = 0; c < table.size(); ++c) {
      for (int r = 0; r < table.size(); ++r) {
        for (const auto& t : m.at(r, c).terms()) {
          if (t.degree.d1 > 1 || t.degree.d2 > 1) {
            report.violations.push_back({h, from_linear(c, n), from_linear(r, n), t.degree});
          }
        }
      }
    }
  }
  report.pass = report.violations.empty();
  for (int u = 0; u < table.size(); ++u) {
    const auto& m = table.matrix_at(u);
    for (int c = 0; c < table.size(); ++c) {
      for (int r = 0; r < table.size(); ++r) {
        for (const auto& t : m.at(r, c).terms()) {
          report.max_d1 = std::max(report.max_d1, t.degree.d1);
          report.max_d2 = std::max(report.max_d2, t.degree.d2);
        }
      }
    }
  }
  return report;
}

}  // namespace qkflag
