#ifndef MFP_HARNESS_HPP_
#define MFP_HARNESS_HPP_

#include <map>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "mfp/numeric.hpp"

namespace mfp {

// One row of an identity check. `lhs` and `rhs` are exact integers rendered
// as decimal strings (or comma-joined rows for the matrix cross check);
// `methods` names the computations that ran, with ":skipped" suffixes for
// enumeration legs beyond their row caps. A row passes only on exact
// equality of every method that ran.
struct IdentityRow {
  int index = 0;
  std::string lhs;
  std::string rhs;
  std::vector<std::string> methods;
  std::string verdict;  // "pass" | "fail" | "skipped"
};

struct IdentityReport {
  std::string identity;
  std::map<std::string, std::int64_t> params;
  std::vector<IdentityRow> rows;

  // Any single failing row fails the whole report.
  bool passed() const;
};

// Matrix identity on weighted Motzkin paths: the recurrence matrix for (k, t)
// times the column (1, 1+t, 1+t+t^2, ...) equals (1, k, k^2, ...). Rows
// i <= 9 are additionally cross-checked against brute-force weighted path
// sums.
IdentityReport verify_weighted_identity(int k, int t, int rows);

// Rooted-composition identity: sum_j j * a_{i,j} = 4^{i-1}, checked against
// the matrix dot product, a direct count of rooted compositions (i <= 9), and
// the image of phi on the whole set (i <= 7).
IdentityReport verify_rooted_sum(int i);

// Cameron-Nkwanta identity
//   binom(i-1, m) 4^{i-1-m} = sum_j (j/i) binom(j+m, 2m+1) binom(2i, i-j),
// cross-checked for i <= 8, m <= 2 by enumerating marked partial 2-Motzkin
// configurations and free 3-Motzkin paths with m dotted steps.
IdentityReport verify_cameron(int i, int m);

// The generalization binom(i-1, m) k^{i-1-m} = sum_j a_{i,j,k-2} binom(j+m, 2m+1)
// with a_{i,j,k-2} the partial (k-2)-Motzkin counts; enumeration leg for i <= 8.
IdentityReport verify_cameron_general(int i, int m, int k);

// Colored-Dyck matrix identity: first column the (t^2-t)-Dyck weights, other
// columns by the colored recurrence, times the column (t^j - (t-1)^j), equals
// ((t^2+t)^{i-1}). Cross-checked for t in {2,3}, i <= 5 by enumerating the
// sigma domain.
IdentityReport verify_colored(int t, int rows);

// Three-way oracle: recurrence matrix == Riordan matrix == brute-force path
// counts, entrywise. Requires rows <= 9 (the enumeration leg).
IdentityReport cross_check_matrix(int k, int t, int rows);

nlohmann::json report_to_json(const IdentityReport& report);
std::string report_to_table(const IdentityReport& report);

}  // namespace mfp

#endif  // MFP_HARNESS_HPP_
