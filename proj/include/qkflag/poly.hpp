#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <ostream>
#include <set>
#include <vector>

#include "qkflag/basis.hpp"

namespace qkflag {

// Exact integer; every operation throws ArithmeticOverflow instead of wrapping.
class Integer {
 public:
  constexpr Integer() = default;
  constexpr Integer(std::int64_t v) : v_(v) {}  // NOLINT(google-explicit-constructor)

  constexpr std::int64_t value() const { return v_; }

  Integer& operator+=(Integer o);
  Integer& operator-=(Integer o);
  Integer& operator*=(Integer o);
  friend Integer operator+(Integer a, Integer b) { return a += b; }
  friend Integer operator-(Integer a, Integer b) { return a -= b; }
  friend Integer operator*(Integer a, Integer b) { return a *= b; }
  Integer operator-() const;

  friend constexpr auto operator<=>(Integer, Integer) = default;
  friend constexpr bool operator==(Integer, Integer) = default;

 private:
  std::int64_t v_ = 0;
};

std::ostream& operator<<(std::ostream& os, Integer x);

// d1 l1 + d2 l2
struct CurveDegree {
  int d1 = 0;
  int d2 = 0;

  auto operator<=>(const CurveDegree&) const = default;
  CurveDegree operator+(CurveDegree o) const { return {d1 + o.d1, d2 + o.d2}; }
  bool dominates(CurveDegree o) const { return d1 >= o.d1 && d2 >= o.d2; }
  // integral of c1(T_X) over the class
  int chern_integral(int n) const { return (d1 + d2) * (n - 1); }
};

inline constexpr CurveDegree kDegreeZero{0, 0};
inline constexpr CurveDegree kDegreeL1{1, 0};
inline constexpr CurveDegree kDegreeL2{0, 1};
inline constexpr CurveDegree kDegreeL1L2{1, 1};

class NovikovPolynomial {
 public:
  struct Term {
    CurveDegree degree;
    Integer coeff;
    bool operator==(const Term&) const = default;
  };

  NovikovPolynomial() = default;
  explicit NovikovPolynomial(Integer c);

  static NovikovPolynomial monomial(CurveDegree d, Integer c = 1);
  static NovikovPolynomial q1() { return monomial(kDegreeL1); }
  static NovikovPolynomial q2() { return monomial(kDegreeL2); }

  // sorted by degree, no zero coefficients
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Integer coefficient(CurveDegree d) const;
  Integer constant_term() const { return coefficient(kDegreeZero); }
  NovikovPolynomial degree_part(CurveDegree d) const;
  std::set<CurveDegree> support() const;

  NovikovPolynomial& operator+=(const NovikovPolynomial& o);
  NovikovPolynomial& operator-=(const NovikovPolynomial& o);
  NovikovPolynomial operator-() const;
  friend NovikovPolynomial operator+(NovikovPolynomial a, const NovikovPolynomial& b) { return a += b; }
  friend NovikovPolynomial operator-(NovikovPolynomial a, const NovikovPolynomial& b) { return a -= b; }
  friend NovikovPolynomial operator*(const NovikovPolynomial& a, const NovikovPolynomial& b);
  NovikovPolynomial& operator*=(const NovikovPolynomial& o) { return *this = *this * o; }
  bool operator==(const NovikovPolynomial&) const = default;

  // adds c Q^d in place
  void add_term(CurveDegree d, Integer c);

 private:
  void merge(const NovikovPolynomial& o, bool negate);
  std::vector<Term> terms_;
};

enum class PolyOp { add, sub, mul };
NovikovPolynomial poly_arith(const NovikovPolynomial& a, const NovikovPolynomial& b, PolyOp op);

inline bool scalar_is_zero(Integer x) { return x == 0; }
inline bool scalar_is_zero(const NovikovPolynomial& p) { return p.is_zero(); }

// Finitely supported combination of Schubert classes, kept canonical.
template <class Scalar>
class Combination {
 public:
  using Map = std::map<SchubertIndex, Scalar>;

  Combination() = default;

  static Combination single(SchubertIndex w, Scalar s = Scalar(1)) {
    Combination c;
    c.add(w, s);
    return c;
  }

  void add(SchubertIndex w, const Scalar& s) {
    if (scalar_is_zero(s)) return;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
      terms_.emplace(w, s);
      return;
    }
    it->second += s;
    if (scalar_is_zero(it->second)) terms_.erase(it);
  }

  Scalar coefficient(SchubertIndex w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Scalar() : it->second;
  }

  const Map& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Combination& operator+=(const Combination& o) {
    for (const auto& [w, s] : o.terms_) add(w, s);
    return *this;
  }
  Combination& operator-=(const Combination& o) {
    for (const auto& [w, s] : o.terms_) add(w, -s);
    return *this;
  }
  friend Combination operator+(Combination a, const Combination& b) { return a += b; }
  friend Combination operator-(Combination a, const Combination& b) { return a -= b; }

  Combination scaled(const Scalar& s) const {
    Combination out;
    for (const auto& [w, x] : terms_) out.add(w, x * s);
    return out;
  }

  bool operator==(const Combination&) const = default;

 private:
  Map terms_;
};

using KClass = Combination<Integer>;
using ChowClass = Combination<Integer>;
using QKClass = Combination<NovikovPolynomial>;

KClass classical_limit(const QKClass& c);
QKClass to_quantum(const KClass& c);
// coefficient of Q^d, as an integer class
KClass degree_part(const QKClass& c, CurveDegree d);
std::set<CurveDegree> degree_support(const QKClass& c);
QKClass times_monomial(const KClass& c, CurveDegree d);

}  // namespace qkflag
