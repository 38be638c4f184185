#include "qkflag/poly.hpp"

#include <algorithm>

#include "qkflag/errors.hpp"

namespace qkflag {

Integer& Integer::operator+=(Integer o) {
  if (__builtin_add_overflow(v_, o.v_, &v_)) throw ArithmeticOverflow("integer overflow in addition");
  return *this;
}

Integer& Integer::operator-=(Integer o) {
  if (__builtin_sub_overflow(v_, o.v_, &v_)) throw ArithmeticOverflow("integer overflow in subtraction");
  return *this;
}

Integer& Integer::operator*=(Integer o) {
  if (__builtin_mul_overflow(v_, o.v_, &v_)) throw ArithmeticOverflow("integer overflow in multiplication");
  return *this;
}

Integer Integer::operator-() const { return Integer(0) - *this; }

std::ostream& operator<<(std::ostream& os, Integer x) { return os << x.value(); }

NovikovPolynomial::NovikovPolynomial(Integer c) {
  if (c != 0) terms_.push_back({kDegreeZero, c});
}

NovikovPolynomial NovikovPolynomial::monomial(CurveDegree d, Integer c) {
  NovikovPolynomial p;
  if (c != 0) p.terms_.push_back({d, c});
  return p;
}

bool NovikovPolynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].degree == kDegreeZero);
}

Integer NovikovPolynomial::coefficient(CurveDegree d) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), d,
                             [](const Term& t, CurveDegree x) { return t.degree < x; });
  return (it != terms_.end() && it->degree == d) ? it->coeff : Integer(0);
}

NovikovPolynomial NovikovPolynomial::degree_part(CurveDegree d) const { return monomial(d, coefficient(d)); }

std::set<CurveDegree> NovikovPolynomial::support() const {
  std::set<CurveDegree> s;
  for (const auto& t : terms_) s.insert(t.degree);
  return s;
}

void NovikovPolynomial::merge(const NovikovPolynomial& o, bool negate) {
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end() || (a != terms_.end() && a->degree < b->degree)) {
      out.push_back(*a++);
    } else if (a == terms_.end() || b->degree < a->degree) {
      out.push_back({b->degree, negate ? -b->coeff : b->coeff});
      ++b;
    } else {
      Integer c = negate ? a->coeff - b->coeff : a->coeff + b->coeff;
      if (c != 0) out.push_back({a->degree, c});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
}

NovikovPolynomial& NovikovPolynomial::operator+=(const NovikovPolynomial& o) {
  merge(o, false);
  return *this;
}

NovikovPolynomial& NovikovPolynomial::operator-=(const NovikovPolynomial& o) {
  merge(o, true);
  return *this;
}

NovikovPolynomial NovikovPolynomial::operator-() const {
  NovikovPolynomial p;
  p.terms_.reserve(terms_.size());
  for (const auto& t : terms_) p.terms_.push_back({t.degree, -t.coeff});
  return p;
}

void NovikovPolynomial::add_term(CurveDegree d, Integer c) {
  if (c == 0) return;
  *this += monomial(d, c);
}

NovikovPolynomial operator*(const NovikovPolynomial& a, const NovikovPolynomial& b) {
  NovikovPolynomial out;
  if (a.is_zero() || b.is_zero()) return out;
  std::vector<NovikovPolynomial::Term> raw;
  raw.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& x : a.terms_) {
    for (const auto& y : b.terms_) raw.push_back({x.degree + y.degree, x.coeff * y.coeff});
  }
  std::stable_sort(raw.begin(), raw.end(), [](const auto& x, const auto& y) { return x.degree < y.degree; });
  for (const auto& t : raw) {
    if (!out.terms_.empty() && out.terms_.back().degree == t.degree) {
      out.terms_.back().coeff += t.coeff;
    } else {
      out.terms_.push_back(t);
    }
  }
  std::erase_if(out.terms_, [](const auto& t) { return t.coeff == 0; });
  return out;
}

NovikovPolynomial poly_arith(const NovikovPolynomial& a, const NovikovPolynomial& b, PolyOp op) {
  switch (op) {
    case PolyOp::add:
      return a + b;
    case PolyOp::sub:
      return a - b;
    case PolyOp::mul:
      return a * b;
  }
  return {};
}

KClass classical_limit(const QKClass& c) { return degree_part(c, kDegreeZero); }

KClass degree_part(const QKClass& c, CurveDegree d) {
  KClass out;
  for (const auto& [w, p] : c.terms()) out.add(w, p.coefficient(d));
  return out;
}

QKClass to_quantum(const KClass& c) { return times_monomial(c, kDegreeZero); }

QKClass times_monomial(const KClass& c, CurveDegree d) {
  QKClass out;
  for (const auto& [w, x] : c.terms()) out.add(w, NovikovPolynomial::monomial(d, x));
  return out;
}

std::set<CurveDegree> degree_support(const QKClass& c) {
  std::set<CurveDegree> s;
  for (const auto& [w, p] : c.terms()) {
    for (const auto& t : p.terms()) s.insert(t.degree);
  }
  return s;
}

}  // namespace qkflag
