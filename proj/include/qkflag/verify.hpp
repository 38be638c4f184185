#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "qkflag/qkring.hpp"

namespace qkflag {

struct Counterexample {
  std::string kind;
  SchubertIndex u;
  SchubertIndex v;
  SchubertIndex w;
  CurveDegree degree;
  Integer coefficient;
  Integer expected;  // sign for positivity, reference value otherwise
  // for associativity, w is the third factor and the entry is the first differing output
};

struct VerificationReport {
  std::string check;
  int n = 0;
  bool pass = true;
  std::size_t examined = 0;
  std::vector<Counterexample> counterexamples;
  std::vector<std::string> notes;
};

struct VerifyOptions {
  int assoc_max = 5;  // associativity is swept only for n <= assoc_max
  unsigned jobs = 1;
};

VerificationReport positivity_check(const MultiplicationTable& table, const VerifyOptions& options = {});
VerificationReport ring_axiom_checks(const MultiplicationTable& table, const VerifyOptions& options = {});
VerificationReport classical_consistency_check(const MultiplicationTable& table, const VerifyOptions& options = {});
VerificationReport degree_check(const MultiplicationTable& table);
VerificationReport chevalley_check(const MultiplicationTable& table, const VerifyOptions& options = {});

// sign (+1/-1) the positivity rule demands of N_{u,v}^{w,d}
int positivity_sign(SchubertIndex u, SchubertIndex v, SchubertIndex w, CurveDegree d, int n);

struct ArbitrationCandidate {
  std::string name;
  TableOptions options;
  std::size_t classical_mismatches = 0;
  std::size_t commutativity_mismatches = 0;
  bool same_as_default = false;  // the variant changes no entry at this n
  bool adopted = false;
};

struct ArbitrationReport {
  int n = 0;
  std::vector<ArbitrationCandidate> candidates;
  // the default passes both oracles and every other passing candidate builds the same table
  bool default_confirmed = false;
};

ArbitrationReport arbitrate_chevalley(int n, const VerifyOptions& options = {});

std::size_t count_classical_mismatches(const MultiplicationTable& table, unsigned jobs = 1);
std::size_t count_commutativity_mismatches(const MultiplicationTable& table);

}  // namespace qkflag
