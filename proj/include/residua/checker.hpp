#pragma once

#include <functional>

#include "residua/congruence.hpp"
#include "residua/metric.hpp"
#include "residua/residue.hpp"

namespace residua {

// One executable invariant: returns a counterexample description, or
// nothing when the sampled instance satisfies the predicate.
struct Axiom {
  std::string name;
  std::string anchor;  // lemma tag quoted in reports
  std::function<std::optional<std::string>(const ModelDesc&, Rng&)> check;
};

struct Suite {
  std::string name;
  std::vector<Axiom> axioms;
  bool expected_fail = false;
  std::string witness_desc;  // for expected-fail suites: the pinned witness
};

struct AxiomResult {
  std::string name;
  std::string anchor;
  long long passed = 0;
  long long failed = 0;
  std::string first_counterexample;
};

struct SuiteReport {
  std::string model;
  std::string suite;
  long long trials = 0;
  uint64_t seed = 0;
  std::vector<AxiomResult> axioms;
  bool expected_fail = false;
  bool all_passed = true;  // zero failures across axioms
  bool ok = true;          // outcome matches the suite's expectation
};

const std::vector<std::string>& suite_names();
const Suite& suite_by_name(const std::string& name);
bool suite_applicable(const Suite& suite, const ModelDesc& model);

// Deterministic in (model, suite, trials, seed); per-trial RNG streams are
// derived from (seed, axiom, trial), so results do not depend on order.
SuiteReport run_suite(const ModelDesc& model, const Suite& suite,
                      long long trials, uint64_t seed);

// Seeded sampler; moduli over small primes with exponents in [-3, 3],
// representatives of bounded height.
QsElem sample_elem(const ModelDesc& model, Rng& rng);

// Brute-force median over the finite divisor enumeration; rational residue
// models only, throws Unsupported when the search space is not finite/small.
QsElem oracle_median(const QsElem& x, const QsElem& y, const QsElem& z);

// All lattice values in [eps, delta] (exponentwise boxes); caps the count.
std::vector<LElem> divisor_interval(const LElem& delta, size_t cap = 200000);

}  // namespace residua
