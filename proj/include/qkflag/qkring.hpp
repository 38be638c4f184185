#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qkflag/basis.hpp"
#include "qkflag/poly.hpp"

namespace qkflag {

enum class Hyperplane { h1, h2 };

SchubertIndex hyperplane_index(Hyperplane h, int n);
std::string to_string(Hyperplane h);

// Dense N x N matrix over Z[Q1,Q2]; column v holds the image of O_v.
class PolyMatrix {
 public:
  PolyMatrix() = default;
  explicit PolyMatrix(int size);
  static PolyMatrix identity(int size);

  int size() const { return size_; }
  const NovikovPolynomial& at(int row, int col) const { return data_[row * size_ + col]; }
  NovikovPolynomial& at(int row, int col) { return data_[row * size_ + col]; }

  PolyMatrix multiply(const PolyMatrix& o, unsigned jobs = 1) const;
  PolyMatrix& operator+=(const PolyMatrix& o);
  PolyMatrix& operator-=(const PolyMatrix& o);
  friend PolyMatrix operator+(PolyMatrix a, const PolyMatrix& b) { return a += b; }
  friend PolyMatrix operator-(PolyMatrix a, const PolyMatrix& b) { return a -= b; }
  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) { return a.multiply(b); }
  PolyMatrix scaled(const NovikovPolynomial& p) const;
  bool operator==(const PolyMatrix&) const = default;

  QKClass column(int col, int n) const;
  void set_column(int col, const QKClass& c, int n);

 private:
  int size_ = 0;
  std::vector<NovikovPolynomial> data_;
};

// Which reading of the displayed Chevalley case table to use where it departs
// from classical product plus degree-part corrections.
struct ChevalleyRules {
  bool prop_row3 = false;     // h1*(2,1) and h2*(n,n-1) as displayed
  bool prop_h2_row5 = false;  // h2*(p+1,p) as displayed
  bool operator==(const ChevalleyRules&) const = default;
};

QKClass quantum_correction(Hyperplane h, SchubertIndex v, int n);
QKClass chevalley_apply(Hyperplane h, SchubertIndex v, int n);
QKClass chevalley_apply(Hyperplane h, SchubertIndex v, int n, const ChevalleyRules& rules);
// The displayed case table; nullopt where its guards leave (k,p) uncovered.
std::optional<QKClass> chevalley_displayed_row(Hyperplane h, SchubertIndex v, int n);

struct ChevalleyOperator {
  Hyperplane which;
  PolyMatrix matrix;
};

ChevalleyOperator chevalley_operator(Hyperplane h, int n, const ChevalleyRules& rules = {});

// Variant of the M_{1,2} recurrence.
enum class StepC {
  reference,       // H1 M_{2,1} + Q1 (H2 - Id)
  algorithm_text,  // H1 M_{2,1} - Q1 (Id - H1)
};

struct TableOptions {
  ChevalleyRules rules;
  StepC step_c = StepC::reference;
  unsigned jobs = 1;
};

class MultiplicationTable {
 public:
  MultiplicationTable(int n, std::vector<PolyMatrix> matrices);

  int n() const { return n_; }
  int size() const { return n_ * (n_ - 1); }
  const PolyMatrix& matrix(SchubertIndex u) const;
  const PolyMatrix& matrix_at(int t) const { return matrices_[t]; }
  // coefficient of O_w in O_u * O_v
  const NovikovPolynomial& entry(SchubertIndex u, SchubertIndex v, SchubertIndex w) const;
  QKClass product(SchubertIndex u, SchubertIndex v) const;
  bool operator==(const MultiplicationTable&) const = default;

 private:
  int n_;
  std::vector<PolyMatrix> matrices_;
};

MultiplicationTable build_table(int n, const TableOptions& options = {});
QKClass qk_product(SchubertIndex u, SchubertIndex v, int n, const MultiplicationTable& table);

struct DegreeBoundViolation {
  Hyperplane which;
  SchubertIndex v;
  SchubertIndex w;
  CurveDegree degree;
};

struct DegreeBoundReport {
  int n = 0;
  bool pass = true;
  std::vector<DegreeBoundViolation> violations;
  int max_d1 = 0;  // over the whole table
  int max_d2 = 0;
};

DegreeBoundReport degree_bound_check(const MultiplicationTable& table);

}  // namespace qkflag
