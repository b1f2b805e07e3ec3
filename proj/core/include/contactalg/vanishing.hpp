#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace contactalg {

// One row of a condition table: a pure predicate over (n, k, m, i) with a
// stable identifier and its rendered condition. Splitting rows ignore i.
struct TableRule {
  std::string id;
  std::string condition;
  std::function<bool(int n, int k, long m, int i)> matches;
};

// Every matching row, not just the first. For cohomology queries `matched`
// false means "not covered by the tables" - the rows are sufficient
// conditions and never certify non-vanishing.
struct Verdict {
  bool matched = false;
  std::vector<std::string> rules;
};

const std::vector<TableRule>& splitting_rules();          // degree/twist rows
const std::vector<TableRule>& splitting_rules_cp();       // projective-space rows
const std::vector<TableRule>& kahler_rules(int c1_sign);  // +1 or -1
const std::vector<TableRule>& cp_rules();                 // parity-dispatched rows

// Twisted k-vector splitting conditions (1 <= k <= 2n+1).
Verdict splitting_ok(int n, int k, long m);

// Same on odd projective space, with the line-bundle twist counted in
// hyperplane powers; even twists reduce to splitting_ok at m/2.
Verdict splitting_ok_cp(int n, int k, long m);

// Cohomology vanishing tables; c1_sign is +1 or -1.
Verdict vanishes_kahler(int n, int k, long m, int i, int c1_sign);
Verdict vanishes_cp(int n, int k, long m, int i);

// The index map (i, m) -> (2n+1-i, -m-2n-2-2k) pairing projective-space
// queries with their duals; an involution.
std::pair<int, long> serre_dual_cp(int n, int k, long m, int i);

struct ClosureViolation {
  int n, k, i;
  long m;
};

struct ClosureReport {
  long checked = 0;
  std::vector<ClosureViolation> violations;
  bool passed() const { return violations.empty(); }
};

// Sweeps every projective-space query in range and reports those whose
// verdict is positive while the dual query's is not (expected empty).
ClosureReport duality_closure_check(int n_max, long m_lo, long m_hi);

enum class TableId { kKahlerPositive, kKahlerNegative, kCp };

// Parses "kahler+", "kahler-", "cp".
TableId parse_table_id(const std::string& token);
Verdict query_table(TableId table, int n, int k, long m, int i);

// Prints a verdict grid over (k, m, i) for fixed n: text blocks per k with
// m rows and i columns ('V' matched, '.' not), or line-delimited JSON records
// {n, k, m, i, verdict, rules}.
void emit_table(std::ostream& os, TableId table, int n, int k_lo, int k_hi,
                long m_lo, long m_hi, int i_lo, int i_hi, bool structured);

}  // namespace contactalg
