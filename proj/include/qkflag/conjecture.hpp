#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "qkflag/basis.hpp"
#include "qkflag/poly.hpp"
#include "qkflag/qkring.hpp"

namespace qkflag {

struct Translation {
  SchubertIndex w;  // components in [1,n]; may coincide
  bool degenerate = false;
};

Translation translate(int idx, SchubertIndex u, SchubertIndex v, int n);

// idx 1: 1 - floor((i+k-s)/n); idx 2: floor((j+p-t)/n)
int degree_operator(int idx, SchubertIndex u, SchubertIndex v, SchubertIndex w, int n);
CurveDegree degree_operators(SchubertIndex u, SchubertIndex v, SchubertIndex w, int n);

// 1 when codim w - codim u - codim v + (d1+d2)(n-1) is even
int delta(SchubertIndex u, SchubertIndex v, SchubertIndex w, int n);

enum class ConjectureGate {
  literal,  // bracket weighted by 1 - Delta(u,v,t1)
  flipped,  // bracket weighted by Delta(u,v,t1)
};

std::string to_string(ConjectureGate g);

QKClass conjectured_product(SchubertIndex u, SchubertIndex v, int n, ConjectureGate gate = ConjectureGate::literal);

struct ConjectureMismatch {
  SchubertIndex u;
  SchubertIndex v;
  SchubertIndex w;
  CurveDegree degree;
  Integer table;
  Integer conjecture;
};

struct DegreeAnomaly {
  SchubertIndex u;
  SchubertIndex v;
  int target = 0;
  SchubertIndex w;
  CurveDegree degree;
};

struct DiffReport {
  int n = 0;
  std::string source;
  std::size_t pairs_compared = 0;
  std::size_t pairs_mismatched = 0;
  std::vector<ConjectureMismatch> mismatches;
  std::vector<DegreeAnomaly> anomalies;
  bool empty() const { return mismatches.empty() && anomalies.empty(); }
};

DiffReport compare_with_table(const MultiplicationTable& table, ConjectureGate gate = ConjectureGate::literal,
                              unsigned jobs = 1);
// entrywise diff of two tables; "conjecture" holds the second
DiffReport compare_tables(const MultiplicationTable& table, const MultiplicationTable& other);

}  // namespace qkflag
