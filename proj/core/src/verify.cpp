#include "contactalg/verify.hpp"

#include <algorithm>
#include <utility>

#include "contactalg/contact.hpp"
#include "contactalg/linsolve.hpp"
#include "contactalg/vanishing.hpp"

namespace contactalg {

Rational random_rational(SplitMix64& rng, bool allow_zero) {
  long num = rng.range(-4, 4);
  if (!allow_zero && num == 0) num = 1;
  return make_rational(num, rng.range(1, 4));
}

Multivector random_multivector(SplitMix64& rng, int dim, int degree) {
  Multivector out(dim, degree, false);
  for (IndexSet s : degree_basis(dim, degree))
    if (rng.below(2) == 0) out.add_term(s, random_rational(rng, false));
  return out;
}

Poly random_poly(SplitMix64& rng, int num_vars, int max_total_degree) {
  Poly out;
  const int terms = static_cast<int>(rng.below(3)) + 1;
  for (int t = 0; t < terms; ++t) {
    Poly::Monomial mono(static_cast<std::size_t>(num_vars), 0);
    int budget = static_cast<int>(rng.below(static_cast<std::uint64_t>(max_total_degree) + 1));
    for (int b = 0; b < budget; ++b)
      ++mono[static_cast<std::size_t>(rng.below(static_cast<std::uint64_t>(num_vars)))];
    out.add_term(std::move(mono), random_rational(rng, false));
  }
  return out;
}

bool same_element(const Multivector& a, const Multivector& b) {
  if (a.is_zero() && b.is_zero()) return true;
  return a.degree() == b.degree() && a.is_dual() == b.is_dual() &&
         a.terms() == b.terms();
}

bool same_element(const PolyMultivector& a, const PolyMultivector& b) {
  if (a.is_zero() && b.is_zero()) return true;
  return a.degree() == b.degree() && a.is_dual() == b.is_dual() &&
         a.terms() == b.terms();
}

void SuiteReport::merge(SuiteReport other) {
  checks += other.checks;
  violations.insert(violations.end(),
                    std::make_move_iterator(other.violations.begin()),
                    std::make_move_iterator(other.violations.end()));
}

void SuiteReport::record_violation(int n, int k, std::string detail) {
  SuiteRecord rec;
  rec.suite = suite;
  rec.n = n;
  rec.k = k;
  rec.detail = std::move(detail);
  violations.push_back(std::move(rec));
}

void SuiteReport::record_violation(int n, int k, long m, int i,
                                   std::string detail) {
  SuiteRecord rec;
  rec.suite = suite;
  rec.n = n;
  rec.k = k;
  rec.m = m;
  rec.has_m = true;
  rec.i = i;
  rec.has_i = i >= 0;
  rec.detail = std::move(detail);
  violations.push_back(std::move(rec));
}

namespace {

Multivector raise_times(const SymplecticModel& model, Multivector X, int r) {
  for (int j = 0; j < r; ++j) X = lefschetz_raise(model, X);
  return X;
}

Multivector lower_times(const SymplecticModel& model, Multivector X, int s) {
  for (int j = 0; j < s; ++j) X = lefschetz_lower(model, X);
  return X;
}

// Coordinates of X over the degree basis, in mask order.
std::vector<Rational> dense_coords(const Multivector& X,
                                   const std::vector<IndexSet>& basis) {
  std::vector<Rational> out;
  out.reserve(basis.size());
  for (IndexSet s : basis) out.push_back(X.coefficient(s));
  return out;
}

// Primitive part of a random element (the r = 0 component); may be zero.
Multivector random_primitive(SplitMix64& rng, const SymplecticModel& model,
                             int degree) {
  const Multivector X = random_multivector(rng, model.dim(), degree);
  for (const auto& [r, part] : lefschetz_decompose(model, X).parts)
    if (r == 0) return part;
  return Multivector(model.dim(), degree, false);
}

// sum_{s<=r} c_s * r!/(r-s)! * (n-k+r+1)...(n-k+r+s), the eigenvalue sum
// without the component-range restriction (the closed-form identity holds
// for every r up to floor(k/2)).
Rational eigenvalue_sum(int n, int k, int r, const std::vector<Rational>& cs) {
  Rational value = 0;
  for (int s = 0; s <= r && s < static_cast<int>(cs.size()); ++s)
    value += cs[static_cast<std::size_t>(s)] * falling_product(Rational(r), s) *
             rising_product(Rational(n - k + r + 1), s);
  return value;
}

}  // namespace

SuiteReport run_commutator_suite(int n_max) {
  SuiteReport report;
  report.suite = "commutator";
  for (int n = 1; n <= n_max; ++n) {
    const SymplecticModel model(n);
    for (int k = 0; k <= 2 * n; ++k) {
      for (IndexSet s : degree_basis(model.dim(), k)) {
        const Multivector X = Multivector::monomial(model.dim(), s, 1);
        Multivector lhs = lefschetz_lower(model, lefschetz_raise(model, X));
        if (k >= 2)
          lhs -= lefschetz_raise(model, lefschetz_lower(model, X));
        ++report.checks;
        if (!same_element(lhs, X.scaled(Rational(n - k))))
          report.record_violation(n, k, "commutator identity failed on " +
                                            to_string(X));
      }
    }
  }
  return report;
}

SuiteReport run_s2eq3_suite(int n_max, std::uint64_t seed, int cases_per_cell) {
  SuiteReport report;
  report.suite = "s2eq3";
  for (int n = 1; n <= n_max; ++n) {
    const SymplecticModel model(n);
    for (int k = 0; k <= 2 * n; ++k) {
      SplitMix64 rng(seed ^ (static_cast<std::uint64_t>(n) << 32) ^
                     static_cast<std::uint64_t>(k));
      for (int c = 0; c < cases_per_cell; ++c) {
        const Multivector X = random_multivector(rng, model.dim(), k);
        const int r = static_cast<int>(rng.range(1, n + 2));

        // Iterated commutator on arbitrary X.
        Multivector lhs =
            lefschetz_lower(model, raise_times(model, X, r));
        if (k >= 2)
          lhs -= raise_times(model, lefschetz_lower(model, X), r);
        const Rational factor = Rational(r) * Rational(n - k - r + 1);
        const Multivector rhs = raise_times(model, X, r - 1).scaled(factor);
        ++report.checks;
        if (!same_element(lhs, rhs))
          report.record_violation(n, k, "iterated commutator failed (r=" +
                                            std::to_string(r) + ")");

        // lower^s raise^r on a primitive element, including r < s.
        if (k > n) continue;  // no nonzero primitive elements above degree n
        const Multivector P = random_primitive(rng, model, k);
        const int rr = static_cast<int>(rng.range(0, n + 2));
        const int ss = static_cast<int>(rng.range(0, rr + 2));
        const Multivector lhs2 =
            lower_times(model, raise_times(model, P, rr), ss);
        ++report.checks;
        if (rr >= ss) {
          const Rational c2 = Rational(factorial(rr)) /
                              Rational(factorial(rr - ss)) *
                              rising_product(Rational(n - k - rr + 1), ss);
          const Multivector rhs2 =
              raise_times(model, P, rr - ss).scaled(c2);
          if (!same_element(lhs2, rhs2))
            report.record_violation(n, k, "lower^s raise^r rule failed (r=" +
                                              std::to_string(rr) + ", s=" +
                                              std::to_string(ss) + ")");
        } else if (!lhs2.is_zero()) {
          report.record_violation(n, k, "lower^s raise^r should vanish for r<s");
        }
      }
    }
  }
  return report;
}

SuiteReport check_lefschetz_oracle(int n_max) {
  SuiteReport report;
  report.suite = "decompose";
  for (int n = 1; n <= n_max; ++n) {
    const SymplecticModel model(n);
    for (int k = 0; k <= 2 * n; ++k) {
      const int r_min = std::max(0, k - n);
      const int r_max = k / 2;
      const std::vector<IndexSet> basis = degree_basis(model.dim(), k);

      // Dense oracle: solve [reconstruction; primitivity] for the component
      // coordinates and require a unique solution.
      std::vector<std::vector<IndexSet>> block_basis;
      int cols = 0;
      for (int r = r_min; r <= r_max; ++r) {
        block_basis.push_back(degree_basis(model.dim(), k - 2 * r));
        cols += static_cast<int>(block_basis.back().size());
      }
      std::vector<std::vector<IndexSet>> prim_basis;
      int prim_rows = 0;
      for (int r = r_min; r <= r_max; ++r) {
        prim_basis.push_back(degree_basis(model.dim(), k - 2 * r - 2));
        prim_rows += static_cast<int>(prim_basis.back().size());
      }
      RationalMatrix system(static_cast<int>(basis.size()) + prim_rows, cols);
      int col = 0;
      for (int r = r_min; r <= r_max; ++r) {
        const auto& block = block_basis[static_cast<std::size_t>(r - r_min)];
        const auto& prim = prim_basis[static_cast<std::size_t>(r - r_min)];
        int prim_offset = static_cast<int>(basis.size());
        for (int rr = r_min; rr < r; ++rr)
          prim_offset += static_cast<int>(
              prim_basis[static_cast<std::size_t>(rr - r_min)].size());
        for (IndexSet s : block) {
          const Multivector unit = Multivector::monomial(model.dim(), s, 1);
          const auto image = dense_coords(raise_times(model, unit, r), basis);
          for (std::size_t row = 0; row < image.size(); ++row)
            system.at(static_cast<int>(row), col) = image[row];
          if (!prim.empty()) {
            const auto lowered =
                dense_coords(lefschetz_lower(model, unit), prim);
            for (std::size_t row = 0; row < lowered.size(); ++row)
              system.at(prim_offset + static_cast<int>(row), col) = lowered[row];
          }
          ++col;
        }
      }

      for (IndexSet xs : basis) {
        const Multivector X = Multivector::monomial(model.dim(), xs, 1);
        const LefschetzComponents parts = lefschetz_decompose(model, X);
        ++report.checks;

        bool cell_ok = same_element(reassemble(model, parts), X);
        for (const auto& [r, part] : parts.parts) {
          if (r < r_min || r > r_max || part.degree() != k - 2 * r ||
              !is_primitive(model, part))
            cell_ok = false;
        }
        if (!cell_ok) {
          report.record_violation(n, k, "decomposition of " + to_string(X) +
                                            " is not a primitive resolution");
          continue;
        }

        std::vector<Rational> rhs(
            static_cast<std::size_t>(basis.size() + prim_rows));
        const auto xcoords = dense_coords(X, basis);
        std::copy(xcoords.begin(), xcoords.end(), rhs.begin());
        auto solution = system.solve_unique(rhs);
        if (!solution) {
          report.record_violation(n, k, "oracle system inconsistent for " +
                                            to_string(X));
          continue;
        }
        int offset = 0;
        for (int r = r_min; r <= r_max; ++r) {
          const auto& block = block_basis[static_cast<std::size_t>(r - r_min)];
          Multivector expected(model.dim(), k - 2 * r, false);
          for (std::size_t b = 0; b < block.size(); ++b)
            expected.add_term(block[b],
                              (*solution)[static_cast<std::size_t>(offset) + b]);
          offset += static_cast<int>(block.size());
          Multivector actual(model.dim(), k - 2 * r, false);
          for (const auto& [pr, part] : parts.parts)
            if (pr == r) actual = part;
          if (!same_element(actual, expected))
            report.record_violation(
                n, k, "component r=" + std::to_string(r) +
                          " differs from the dense oracle for " + to_string(X));
        }
      }
    }
  }
  return report;
}

SuiteReport run_decompose_suite(int n_max) {
  SuiteReport report = check_lefschetz_oracle(n_max);
  report.merge(check_exactness_ranks(n_max));
  return report;
}

SuiteReport check_exactness_ranks(int n_max) {
  SuiteReport report;
  report.suite = "decompose";
  for (int n = 1; n <= n_max; ++n) {
    const ContactSpace space(n);
    for (int k = 0; k <= space.dim(); ++k) {
      const ExactnessDims dims = exactness_dims(space, k);
      ++report.checks;
      if (dims.kernel + dims.image != dims.total ||
          dims.kernel != binomial(2 * n, k).get_si() ||
          dims.total != binomial(2 * n + 1, k).get_si() ||
          dims.image != binomial(2 * n, k - 1).get_si()) {
        report.record_violation(n, k, "stated exactness dimensions are wrong");
        continue;
      }
      if (k == 0) continue;
      const std::vector<IndexSet> domain = degree_basis(space.dim(), k);
      const std::vector<IndexSet> target = degree_basis(2 * n, k - 1);
      RationalMatrix matrix(static_cast<int>(target.size()),
                            static_cast<int>(domain.size()));
      for (std::size_t c = 0; c < domain.size(); ++c) {
        const Multivector image = gamma_contract(
            space, Multivector::monomial(space.dim(), domain[c], 1));
        const auto coords = dense_coords(image, target);
        for (std::size_t r = 0; r < coords.size(); ++r)
          matrix.at(static_cast<int>(r), static_cast<int>(c)) = coords[r];
      }
      ++report.checks;
      if (matrix.rank() != dims.image)
        report.record_violation(n, k, "contraction rank differs from C(2n,k-1)");
    }
  }
  return report;
}

SuiteReport run_prop22_suite(int n_max, std::uint64_t seed, int random_per_cell,
                             int constructed_per_cell) {
  SuiteReport report;
  report.suite = "prop22";
  for (int n = 1; n <= n_max; ++n) {
    const SymplecticModel model(n);
    for (int k = 1; k <= 2 * n; ++k) {
      SplitMix64 rng(seed ^ (static_cast<std::uint64_t>(n) << 40) ^
                     (static_cast<std::uint64_t>(k) << 8));
      const std::vector<IndexSet> basis = degree_basis(model.dim(), k);
      const int count = k / 2 + 1;
      const int r_min = std::max(0, k - n);

      auto dense_nonsingular = [&](const std::vector<Rational>& cs) {
        RationalMatrix matrix(static_cast<int>(basis.size()),
                              static_cast<int>(basis.size()));
        for (std::size_t c = 0; c < basis.size(); ++c) {
          const Multivector image = apply_transform(
              model, cs, Multivector::monomial(model.dim(), basis[c], 1));
          const auto coords = dense_coords(image, basis);
          for (std::size_t r = 0; r < coords.size(); ++r)
            matrix.at(static_cast<int>(r), static_cast<int>(c)) = coords[r];
        }
        return matrix.rank() == static_cast<int>(basis.size());
      };

      auto check_vector = [&](const std::vector<Rational>& cs,
                              const char* what) {
        ++report.checks;
        if (is_invertible(n, k, cs) != dense_nonsingular(cs))
          report.record_violation(
              n, k, std::string("invertibility criterion disagrees with the "
                                "dense matrix (") +
                        what + ")");
      };

      for (int c = 0; c < random_per_cell; ++c) {
        std::vector<Rational> cs;
        for (int i = 0; i < count; ++i) cs.push_back(random_rational(rng));
        check_vector(cs, "random");
      }
      for (int c = 0; c < constructed_per_cell; ++c) {
        // Force one eigenvalue over the existing component range to zero.
        const int r_star = static_cast<int>(rng.range(r_min, k / 2));
        std::vector<Rational> cs(static_cast<std::size_t>(count));
        for (int s = 0; s < count; ++s) cs[static_cast<std::size_t>(s)] =
            random_rational(rng);
        Rational partial = 0;
        for (int s = 0; s < r_star; ++s)
          partial += cs[static_cast<std::size_t>(s)] *
                     falling_product(Rational(r_star), s) *
                     rising_product(Rational(n - k + r_star + 1), s);
        cs[static_cast<std::size_t>(r_star)] =
            -partial / extraction_constant(n, k, r_star);
        ++report.checks;
        if (is_invertible(n, k, cs) || dense_nonsingular(cs))
          report.record_violation(n, k,
                                  "constructed degenerate vector at r=" +
                                      std::to_string(r_star) +
                                      " was not detected as singular");
      }
    }
  }
  return report;
}

SuiteReport check_closed_forms(int n_max) {
  SuiteReport report;
  report.suite = "closedform";
  for (int n = 1; n <= n_max; ++n) {
    for (int k = 2; k <= 2 * n; ++k) {
      for (long m = -n - k - 6; m <= n + 6; ++m) {
        const CoefficientFamily twisted{FamilyKind::kTwisted, n, k, m};
        if (is_well_defined(twisted)) {
          const auto cs = coefficients(twisted);
          for (int r = 1; r <= k / 2; ++r) {
            ++report.checks;
            if (eigenvalue_sum(n, k, r, cs) !=
                closed_form_eigenvalue(n, k, r, Rational(m)))
              report.record_violation(n, k, m, -1,
                                      "twisted eigenvalue sum differs from the "
                                      "closed form at r=" + std::to_string(r));
          }
        }
        const CoefficientFamily half{FamilyKind::kHalfTwisted, n, k, m};
        if (is_well_defined(half)) {
          const auto cs = coefficients(half);
          const Rational t = twist_of(half);
          for (int r = 1; r <= k / 2; ++r) {
            ++report.checks;
            if (eigenvalue_sum(n, k, r, cs) !=
                closed_form_eigenvalue(n, k, r, t))
              report.record_violation(n, k, m, -1,
                                      "half-twisted eigenvalue sum differs from "
                                      "the closed form at r=" + std::to_string(r));
          }
        }
      }
    }
  }
  return report;
}

SuiteReport check_default_positivity(int n_max) {
  SuiteReport report;
  report.suite = "closedform";
  for (int n = 1; n <= n_max; ++n) {
    for (int k = 0; k <= 2 * n; ++k) {
      const EigenvalueTable table =
          eigenvalue_table(CoefficientFamily::defaults(n, k));
      ++report.checks;
      for (const Rational& value : table.values)
        if (sgn(value) <= 0)
          report.record_violation(n, k, "default eigenvalue not positive");
    }
  }
  return report;
}

SuiteReport check_sufficiency(int n_max) {
  SuiteReport report;
  report.suite = "closedform";
  for (int n = 1; n <= n_max; ++n) {
    for (int k = 1; k <= 2 * n + 1; ++k) {
      for (long m = -40; m <= 20; ++m) {
        const bool in_table = (m <= -n - k / 2 - 2) ||
                              (k <= n && -n - 1 <= m && m <= -k - 1) ||
                              (m >= -(k / 2));
        if (in_table) {
          const CoefficientFamily family{FamilyKind::kTwisted, n, k, m};
          ++report.checks;
          if (!is_well_defined(family) || !is_invertible(family))
            report.record_violation(n, k, m, -1,
                                    "twisted table row fails invertibility");
        }
        if ((m % 2 != 0) &&
            (m <= -2 * n - 2 * (k / 2) - 3 || m >= -2 * n - 3)) {
          const CoefficientFamily family{FamilyKind::kHalfTwisted, n, k, m};
          ++report.checks;
          if (!is_well_defined(family) || !is_invertible(family))
            report.record_violation(n, k, m, -1,
                                    "half-twisted table row fails invertibility");
        }
      }
    }
  }
  return report;
}

SuiteReport run_closedform_suite(int n_max, int sufficiency_n_max) {
  SuiteReport report = check_closed_forms(n_max);
  report.merge(check_default_positivity(n_max));
  report.merge(check_sufficiency(sufficiency_n_max));
  report.suite = "closedform";
  return report;
}

SuiteReport check_pinned_verdicts() {
  SuiteReport report;
  report.suite = "duality";
  struct SplitCase {
    int n, k;
    long m;
    bool cp;
    bool expect;
    const char* rule;  // must be among the matches when expect is true
  };
  const SplitCase split_cases[] = {
      {2, 1, 0, false, true, "T3.2-row3"},
      {2, 2, -3, false, true, "T3.2-row2"},
      {2, 4, -5, false, false, nullptr},
      {1, 1, -5, true, true, "T4.2s-odd-row2"},
      {1, 1, 0, true, true, "T4.2s-even-row3"},
      {2, 2, -6, true, true, "T4.2s-even-row2"},
  };
  for (const auto& c : split_cases) {
    const Verdict verdict =
        c.cp ? splitting_ok_cp(c.n, c.k, c.m) : splitting_ok(c.n, c.k, c.m);
    ++report.checks;
    bool ok = verdict.matched == c.expect;
    if (ok && c.rule)
      ok = std::find(verdict.rules.begin(), verdict.rules.end(),
                     std::string(c.rule)) != verdict.rules.end();
    if (!ok)
      report.record_violation(c.n, c.k, c.m, -1, "splitting verdict mismatch");
  }

  struct VanishCase {
    int n, k, i;
    long m;
    TableId table;
    bool expect;
    const char* rule;
  };
  const VanishCase vanish_cases[] = {
      {2, 1, 2, -4, TableId::kKahlerPositive, true, "T4.1-pos-row1"},
      {2, 1, 5, -2, TableId::kKahlerPositive, true, "T4.1-pos-row2"},
      {2, 1, 1, -1, TableId::kKahlerPositive, false, nullptr},
      {1, 1, 0, -3, TableId::kCp, true, "T4.2-odd-row2"},
      {1, 1, 2, -2, TableId::kCp, true, "T4.2-even-row4"},
      {1, 1, 0, 0, TableId::kCp, false, nullptr},
  };
  for (const auto& c : vanish_cases) {
    const Verdict verdict = query_table(c.table, c.n, c.k, c.m, c.i);
    ++report.checks;
    bool ok = verdict.matched == c.expect;
    if (ok && c.rule)
      ok = std::find(verdict.rules.begin(), verdict.rules.end(),
                     std::string(c.rule)) != verdict.rules.end();
    if (!ok)
      report.record_violation(c.n, c.k, c.m, c.i, "vanishing verdict mismatch");
  }

  // The duality index map is an involution.
  for (int n = 1; n <= 3; ++n) {
    for (int k = 1; k <= 2 * n + 1; ++k) {
      for (int i = 0; i <= 2 * n + 1; ++i) {
        for (long m = -6; m <= 6; ++m) {
          auto [di, dm] = serre_dual_cp(n, k, m, i);
          ++report.checks;
          if (serre_dual_cp(n, k, dm, di) != std::pair<int, long>{i, m})
            report.record_violation(n, k, m, i, "duality map is not involutive");
        }
      }
    }
  }
  ++report.checks;
  if (serre_dual_cp(1, 1, 0, 0) != std::pair<int, long>{3, -6})
    report.record_violation(1, 1, 0, 0, "duality map value");
  ++report.checks;
  if (serre_dual_cp(2, 2, -4, 1) != std::pair<int, long>{4, -6})
    report.record_violation(2, 2, -4, 1, "duality map value");
  return report;
}

SuiteReport check_duality_closure(int n_max, long m_lo, long m_hi) {
  SuiteReport report;
  report.suite = "duality";
  const ClosureReport closure = duality_closure_check(n_max, m_lo, m_hi);
  report.checks += closure.checked;
  for (const ClosureViolation& v : closure.violations)
    report.record_violation(v.n, v.k, v.m, v.i,
                            "vanishing verdict is not closed under duality");
  return report;
}

SuiteReport check_even_embedding(int n_max, long m_lo, long m_hi) {
  SuiteReport report;
  report.suite = "duality";
  for (int n = 1; n <= n_max; ++n) {
    for (int k = 1; k <= 2 * n + 1; ++k) {
      for (long m = m_lo; m <= m_hi; ++m) {
        if (m % 2 != 0) continue;
        ++report.checks;
        if (splitting_ok_cp(n, k, m).matched !=
            splitting_ok(n, k, m / 2).matched)
          report.record_violation(n, k, m, -1,
                                  "even-twist table differs from the halved "
                                  "splitting table");
      }
    }
  }
  return report;
}

SuiteReport run_duality_suite(int n_max, long m_lo, long m_hi) {
  SuiteReport report = check_pinned_verdicts();
  report.merge(check_duality_closure(n_max, m_lo, m_hi));
  report.merge(check_even_embedding(n_max, m_lo, m_hi));
  report.suite = "duality";
  return report;
}

namespace {

PolyMultivector random_frame_section(SplitMix64& rng, const DarbouxModel& model,
                                     int degree, int max_poly_degree) {
  PolyMultivector out(2 * model.n, degree, false);
  for (IndexSet s : degree_basis(2 * model.n, degree)) {
    if (rng.below(2) == 0) continue;
    out.add_term(s, random_poly(rng, model.dim(), max_poly_degree));
  }
  return out;
}

// Splitting output for an explicitly chosen lift Y (gamma0 . Y must be the
// expansion of s); used to certify lift independence.
PolyMultivector splitting_with_lift(const DarbouxModel& model, int k,
                                    const PolyMultivector& s_coord,
                                    const PolyMultivector& Y) {
  const PolyMultivector equation = restrict_to_distribution(
      model, weighted_flat(model, k, Y) + correction_form(model, k, s_coord));
  return Y - frame_expand(model,
                          solve_distribution_flat(model, k, equation));
}

}  // namespace

SuiteReport check_darboux_handworked() {
  SuiteReport report;
  report.suite = "darboux";
  {
    const DarbouxModel model(1);

    // s = 1 picks out the transverse direction.
    const PolyMultivector one =
        PolyMultivector::scalar(2 * model.n, Poly(1), false);
    const PolyMultivector X1 = splitting_section(model, 1, one);
    ++report.checks;
    if (!same_element(X1, reeb(model)))
      report.record_violation(1, 1, "splitting of the constant section is not "
                                    "the transverse direction");

    // s = z1 gives (1/2) z1 d0 + (1/2) d2.
    PolyMultivector s(2 * model.n, 0, false);
    s.add_term(IndexSet(), Poly::variable(1));
    const PolyMultivector X2 = splitting_section(model, 1, s);
    PolyMultivector expected(model.dim(), 1, false);
    expected.add_term(IndexSet::of({1}),
                      Poly::variable(1) * make_rational(1, 2));
    expected.add_term(IndexSet::of({3}), Poly(make_rational(1, 2)));
    ++report.checks;
    if (!same_element(X2, expected))
      report.record_violation(1, 1, "hand-worked linear section mismatch");

    for (const PolyMultivector* Xp : {&X1, &X2}) {
      const PolyMultivector& X = *Xp;
      const PolyMultivector s_used = Xp == &X1 ? one : s;
      const SplittingResiduals res = splitting_residuals(model, 1, s_used, X);
      ++report.checks;
      if (!res.lift.is_zero() || !res.equation.is_zero())
        report.record_violation(1, 1, "hand-worked residuals are nonzero");
    }

    // Degree-1 contact-field identity for the constant section:
    // {interior(X1, dgamma0) + d(gamma0 . X1)}|_D = 0.
    const PolyMultivector dg = dgamma0(model);
    PolyMultivector interior(model.dim(), 1, true);
    for (const auto& [s1, c1] : X1.terms())
      interior += contract_index(s1.indices().front(), dg).scaled(c1);
    const PolyMultivector paired = contract(gamma0(model), X1);
    PolyMultivector value =
        PolyMultivector::scalar(model.dim(), paired.coefficient(IndexSet()), true);
    const PolyMultivector field_eq =
        restrict_to_distribution(model, interior + exterior_d(model, value));
    ++report.checks;
    if (!field_eq.is_zero())
      report.record_violation(1, 1, "contact-field identity failed");
  }

  // Structure constants of the restricted two-form, for n = 1 and 2.
  for (int n = 1; n <= 2; ++n) {
    const DarbouxModel model(n);
    PolyMultivector expected(2 * n, 2, true);
    for (int i = 1; i <= n; ++i)
      expected.add_term(IndexSet::of({2 * i - 1, 2 * i}), Poly(2));
    ++report.checks;
    if (!same_element(restrict_to_distribution(model, dgamma0(model)), expected))
      report.record_violation(n, 2, "restricted two-form structure constants");
  }
  return report;
}

SuiteReport check_splitting_random(std::uint64_t seed, int sections_per_cell,
                                   int max_poly_degree) {
  SuiteReport report;
  report.suite = "darboux";
  for (int n = 1; n <= 2; ++n) {
    const DarbouxModel model(n);
    for (int k = 1; k <= 3; ++k) {
      SplitMix64 rng(seed ^ (static_cast<std::uint64_t>(n) << 20) ^
                     (static_cast<std::uint64_t>(k) << 4));
      for (int c = 0; c < sections_per_cell; ++c) {
        const PolyMultivector s =
            random_frame_section(rng, model, k - 1, max_poly_degree);
        const PolyMultivector X = splitting_section(model, k, s);
        const SplittingResiduals res = splitting_residuals(model, k, s, X);
        ++report.checks;
        if (!res.lift.is_zero())
          report.record_violation(n, k, "contraction residual is nonzero");
        ++report.checks;
        if (!res.equation.is_zero())
          report.record_violation(n, k, "splitting equation residual is nonzero");

        // Lift independence: perturb the lift by an element of the
        // distribution's k-th power.
        const PolyMultivector perturbation = frame_expand(
            model, random_frame_section(rng, model, k, max_poly_degree));
        const PolyMultivector s_coord = frame_expand(model, s);
        const PolyMultivector Y =
            wedge(reeb(model), s_coord) + perturbation;
        const PolyMultivector X_alt = splitting_with_lift(model, k, s_coord, Y);
        ++report.checks;
        if (!same_element(X_alt, X))
          report.record_violation(n, k, "output depends on the choice of lift");
      }
    }
  }
  return report;
}

SuiteReport run_darboux_suite(std::uint64_t seed, int sections_per_cell,
                              int max_poly_degree) {
  SuiteReport report = check_darboux_handworked();
  report.merge(check_splitting_random(seed, sections_per_cell, max_poly_degree));
  report.suite = "darboux";
  return report;
}

}  // namespace contactalg
