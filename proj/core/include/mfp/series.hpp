#ifndef MFP_SERIES_HPP_
#define MFP_SERIES_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "mfp/numeric.hpp"

namespace mfp {

// A formal power series truncated at x^order, with exact rational
// coefficients. Arithmetic never silently changes the truncation order:
// binary operations carry the minimum of the operand orders.
class TruncatedSeries {
 public:
  TruncatedSeries() : coeffs_(1) {}
  explicit TruncatedSeries(int order);
  explicit TruncatedSeries(std::vector<Rational> coeffs);

  static TruncatedSeries constant(const Rational& value, int order);
  static TruncatedSeries monomial(const Rational& value, int degree, int order);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Rational& operator[](int n) const { return coeffs_[static_cast<std::size_t>(n)]; }
  Rational& coeff(int n) { return coeffs_[static_cast<std::size_t>(n)]; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  TruncatedSeries truncated(int order) const;
  TruncatedSeries scaled(const Rational& factor) const;
  TruncatedSeries pow(int exponent) const;  // exponent >= 0

  // Composition this(inner); requires inner(0) == 0.
  TruncatedSeries compose(const TruncatedSeries& inner) const;

  bool is_integral() const;
  // Coefficients as exact integers; throws std::domain_error if any
  // coefficient has a denominator.
  std::vector<Int> integer_coefficients() const;

  friend TruncatedSeries operator+(const TruncatedSeries&, const TruncatedSeries&);
  friend TruncatedSeries operator-(const TruncatedSeries&, const TruncatedSeries&);
  friend TruncatedSeries operator*(const TruncatedSeries&, const TruncatedSeries&);
  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

 private:
  std::vector<Rational> coeffs_;  // c_0 .. c_order
};

// The unique series with f(0) = 1 satisfying f = 1 + alpha x f + beta x^2 f^2,
// by the division-free coefficient recurrence
//   f_n = alpha f_{n-1} + beta * sum_{p+q=n-2} f_p f_q.
// Its n-th coefficient is the weighted count of Motzkin paths of length n
// with horizontal weight alpha and down weight beta.
TruncatedSeries solve_motzkin_gf(std::int64_t alpha, std::int64_t beta, int order);

// Power-series expansion of numer(x)/denom(x); requires denom(0) != 0.
// Polynomials are coefficient vectors, constant term first.
TruncatedSeries rational_series(const std::vector<Int>& numer, const std::vector<Int>& denom, int order);

// A Riordan array (g, f): g with g_0 = 1, f with f_0 = 0 and f_1 != 0. Entry
// (i, j) of the associated infinite lower triangular matrix is [x^i] g f^j
// with 0-based indices.
struct RiordanArray {
  TruncatedSeries g;
  TruncatedSeries f;

  RiordanArray(TruncatedSeries g, TruncatedSeries f);  // validates the shape
};

// Lower triangular matrix of exact integers; row i (1-based) has i entries.
class TriangularMatrix {
 public:
  TriangularMatrix() = default;
  explicit TriangularMatrix(std::vector<std::vector<Int>> rows);

  int rows() const { return static_cast<int>(rows_.size()); }
  // 1-based (i, j); zero above the diagonal.
  const Int& entry(int i, int j) const;
  const std::vector<std::vector<Int>>& data() const { return rows_; }

  friend bool operator==(const TriangularMatrix&, const TriangularMatrix&) = default;

 private:
  std::vector<std::vector<Int>> rows_;
};

// Rows 1..n with entry (i, j) = [x^{i-1}] g f^{j-1}: a 1-based display of the
// 0-based Riordan entries, matching the matrix identities' layout. Throws
// std::domain_error on a non-integral entry.
TriangularMatrix riordan_matrix(const RiordanArray& array, int rows);

// The matrix whose first column holds the weighted Motzkin counts for
// (horizontal, down) = (k-t-1, t) and whose other columns follow
//   m_{i,j} = m_{i-1,j-1} + (k-t-1) m_{i-1,j} + t m_{i-1,j+1}.
// Requires k >= 2 and 1 <= t <= k-1.
TriangularMatrix recurrence_matrix(int k, int t, int rows);

// Exact row-by-row dot products; v must supply at least rows(M) entries.
std::vector<Int> matrix_vector_product(const TriangularMatrix& m, std::span<const Int> v);

nlohmann::json series_to_json(const TruncatedSeries& s);
TruncatedSeries series_from_json(const nlohmann::json& j);
nlohmann::json matrix_to_json(const TriangularMatrix& m);
std::string matrix_to_csv(const TriangularMatrix& m);

}  // namespace mfp

#endif  // MFP_SERIES_HPP_
