#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "contactalg/darboux.hpp"
#include "contactalg/transforms.hpp"

namespace contactalg {

// Deterministic generator for the randomized sweeps; fixed algorithm so a
// seed reproduces the same cases everywhere.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  std::uint64_t below(std::uint64_t bound) {
    return bound == 0 ? 0 : next() % bound;
  }
  long range(long lo, long hi) {  // inclusive
    return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

 private:
  std::uint64_t state_;
};

Rational random_rational(SplitMix64& rng, bool allow_zero = true);
Multivector random_multivector(SplitMix64& rng, int dim, int degree);
Poly random_poly(SplitMix64& rng, int num_vars, int max_total_degree);

// Zero elements of mismatched nominal degree still compare equal.
bool same_element(const Multivector& a, const Multivector& b);
bool same_element(const PolyMultivector& a, const PolyMultivector& b);

inline const std::uint64_t kDefaultSeed = 0x5eed5eedull;

struct SuiteRecord {
  std::string suite;
  int n = 0;
  int k = -1;
  long m = 0;
  bool has_m = false;
  int i = -1;
  bool has_i = false;
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  long checks = 0;
  std::vector<SuiteRecord> violations;

  bool passed() const { return violations.empty(); }
  void merge(SuiteReport other);
  void record_violation(int n, int k, std::string detail);
  void record_violation(int n, int k, long m, int i, std::string detail);
};

// The suites behind `verify`. Each runs its identities exhaustively or on
// seeded random cases and reports every violation found.

// (lower.raise - raise.lower) X = (n-k) X on every basis k-vector.
SuiteReport run_commutator_suite(int n_max);

// The iterated commutator and the lower^s raise^r rules on seeded random
// elements, including all r < s vanishing cases.
SuiteReport run_s2eq3_suite(int n_max, std::uint64_t seed,
                            int cases_per_cell = 100);

// Decomposition round-trip + primitivity on every basis element, compared
// against a dense linear-solve oracle; includes the exactness rank sweep.
SuiteReport run_decompose_suite(int n_max);

// Invertibility criterion against dense matrix nonsingularity for random and
// constructed-degenerate coefficient vectors.
SuiteReport run_prop22_suite(int n_max, std::uint64_t seed,
                             int random_per_cell = 50,
                             int constructed_per_cell = 10);

// Eigenvalue sum vs closed form, default-family positivity, and the
// sufficiency rows of the invertibility tables.
SuiteReport run_closedform_suite(int n_max = 6, int sufficiency_n_max = 4);

// Constructive splitting: hand-worked cases, random certified sections,
// lift independence, and the degree-1 contact-field identity.
SuiteReport run_darboux_suite(std::uint64_t seed, int sections_per_cell = 25,
                              int max_poly_degree = 2);

// Pinned table verdicts, duality closure, and the even-twist embedding.
SuiteReport run_duality_suite(int n_max = 3, long m_lo = -40, long m_hi = 20);

// Finer pieces (used directly by the acceptance harness).
SuiteReport check_lefschetz_oracle(int n_max);
SuiteReport check_exactness_ranks(int n_max);
SuiteReport check_closed_forms(int n_max);
SuiteReport check_default_positivity(int n_max);
SuiteReport check_sufficiency(int n_max);
SuiteReport check_pinned_verdicts();
SuiteReport check_duality_closure(int n_max, long m_lo, long m_hi);
SuiteReport check_even_embedding(int n_max, long m_lo, long m_hi);
SuiteReport check_darboux_handworked();
SuiteReport check_splitting_random(std::uint64_t seed, int sections_per_cell,
                                   int max_poly_degree);

}  // namespace contactalg
