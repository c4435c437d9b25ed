#include "mfp/series.hpp"

#include <vector>

#include "doctest.h"
#include "mfp/numeric.hpp"

using namespace mfp;

namespace {

std::vector<Int> ints(std::initializer_list<long long> values) {
  return std::vector<Int>(values.begin(), values.end());
}

TruncatedSeries poly(std::initializer_list<long long> coeffs, int order) {
  TruncatedSeries s(order);
  int i = 0;
  for (long long c : coeffs) s.coeff(i++) = c;
  return s;
}

}  // namespace

TEST_CASE("series arithmetic is exact and order-aware") {
  const TruncatedSeries one_plus_x = poly({1, 1}, 4);
  const TruncatedSeries one_minus_x = poly({1, -1}, 4);
  CHECK(one_plus_x * one_minus_x == poly({1, 0, -1}, 4));
  CHECK(one_plus_x.pow(2) == poly({1, 2, 1}, 4));
  CHECK(one_plus_x.scaled(0) == TruncatedSeries(4));
  CHECK((poly({1}, 7) + poly({0, 1}, 3)).order() == 3);  // min of operand orders
  CHECK(one_plus_x - one_plus_x == TruncatedSeries(4));
}

TEST_CASE("quadratic functional equation solutions") {
  const auto coeffs = [](const TruncatedSeries& s) { return s.integer_coefficients(); };
  CHECK(coeffs(solve_motzkin_gf(2, 1, 4)) == ints({1, 2, 5, 14, 42}));
  CHECK(coeffs(solve_motzkin_gf(3, 2, 4)) == ints({1, 3, 11, 45, 197}));
  CHECK(coeffs(solve_motzkin_gf(1, 1, 4)) == ints({1, 1, 2, 4, 9}));
  CHECK(coeffs(solve_motzkin_gf(3, 1, 4)) == ints({1, 3, 10, 36, 137}));

  SUBCASE("solution satisfies f = 1 + a x f + b x^2 f^2 coefficientwise") {
    for (const auto& [a, b] : std::vector<std::pair<int, int>>{{2, 1}, {3, 2}, {1, 1}, {3, 1}, {5, 4}}) {
      const TruncatedSeries f = solve_motzkin_gf(a, b, 16);
      const TruncatedSeries x = TruncatedSeries::monomial(1, 1, 16);
      const TruncatedSeries x2 = TruncatedSeries::monomial(1, 2, 16);
      const TruncatedSeries rhs =
          TruncatedSeries::constant(1, 16) + x.scaled(a) * f + x2.scaled(b) * f * f;
      CHECK(f == rhs);
    }
  }
}

TEST_CASE("rational series expansion") {
  const auto coeffs = [](const TruncatedSeries& s) { return s.integer_coefficients(); };
  CHECK(coeffs(rational_series({1}, {1, -2, 1}, 4)) == ints({1, 2, 3, 4, 5}));
  CHECK(coeffs(rational_series({1}, {1, -3, 2}, 4)) == ints({1, 3, 7, 15, 31}));
  CHECK(coeffs(rational_series({1}, {1, -2, 1}, 3)) == ints({1, 2, 3, 4}));
  CHECK_THROWS_AS(rational_series({1}, {0, 1}, 3), std::domain_error);

  SUBCASE("non-integral coefficients are representable but flagged") {
    const TruncatedSeries half = rational_series({1}, {2, -1}, 3);
    CHECK(half[0] == Rational(1, 2));
    CHECK_FALSE(half.is_integral());
    CHECK_THROWS_AS(half.integer_coefficients(), std::domain_error);
  }
}

TEST_CASE("composition plugs one series into another") {
  const int order = 12;
  SUBCASE("Catalan route to powers of four") {
    const TruncatedSeries g = solve_motzkin_gf(2, 1, order);
    const TruncatedSeries f = TruncatedSeries::monomial(1, 1, order) * g;
    const TruncatedSeries a = rational_series({1}, {1, -2, 1}, order);
    const TruncatedSeries b = g * a.compose(f);
    for (int n = 0; n <= order; ++n) CHECK(b[n] == int_pow(4, static_cast<unsigned>(n)));
  }
  SUBCASE("Schroder route to powers of six") {
    const TruncatedSeries g = solve_motzkin_gf(3, 2, order);
    const TruncatedSeries f = TruncatedSeries::monomial(1, 1, order) * g;
    const TruncatedSeries a = rational_series({1}, {1, -3, 2}, order);
    const TruncatedSeries b = g * a.compose(f);
    for (int n = 0; n <= order; ++n) CHECK(b[n] == int_pow(6, static_cast<unsigned>(n)));
  }
  SUBCASE("composing with zero picks the constant term") {
    const TruncatedSeries a = poly({7, 3, 9}, 5);
    CHECK(a.compose(TruncatedSeries(5)) == TruncatedSeries::constant(7, 5));
  }
  SUBCASE("inner series must vanish at zero") {
    CHECK_THROWS_AS(poly({1, 1}, 3).compose(poly({1}, 3)), std::domain_error);
  }
}

TEST_CASE("riordan matrices reproduce the classic triangles") {
  const int rows = 5;
  const TruncatedSeries g_cat = solve_motzkin_gf(2, 1, rows - 1);
  const TruncatedSeries f_cat = TruncatedSeries::monomial(1, 1, rows - 1) * g_cat;
  const TriangularMatrix cat = riordan_matrix(RiordanArray(g_cat, f_cat), rows);
  CHECK(cat.data() == std::vector<std::vector<Int>>{
                          {1}, {2, 1}, {5, 4, 1}, {14, 14, 6, 1}, {42, 48, 27, 8, 1}});
  CHECK(cat.entry(5, 2) == 48);
  CHECK(cat.entry(2, 5) == 0);

  const TruncatedSeries g_sch = solve_motzkin_gf(3, 2, rows - 1);
  const TruncatedSeries f_sch = TruncatedSeries::monomial(1, 1, rows - 1) * g_sch;
  const TriangularMatrix sch = riordan_matrix(RiordanArray(g_sch, f_sch), rows);
  CHECK(sch.data() == std::vector<std::vector<Int>>{
                          {1}, {3, 1}, {11, 6, 1}, {45, 31, 9, 1}, {197, 156, 60, 12, 1}});

  SUBCASE("riordan array shape is validated") {
    CHECK_THROWS_AS(RiordanArray(poly({2}, 3), poly({0, 1}, 3)), std::invalid_argument);
    CHECK_THROWS_AS(RiordanArray(poly({1}, 3), poly({1, 1}, 3)), std::invalid_argument);
    CHECK_THROWS_AS(RiordanArray(poly({1}, 3), poly({0, 0, 1}, 3)), std::invalid_argument);
  }

  SUBCASE("non-integral entries fail loudly") {
    TruncatedSeries g = poly({1}, 3);
    g.coeff(1) = Rational(1, 2);
    const TruncatedSeries f = TruncatedSeries::monomial(1, 1, 3);
    CHECK_THROWS_AS(riordan_matrix(RiordanArray(g, f), 4), std::domain_error);
  }
}

TEST_CASE("recurrence matrices match their displayed rows") {
  CHECK(recurrence_matrix(4, 1, 3).data() ==
        std::vector<std::vector<Int>>{{1}, {2, 1}, {5, 4, 1}});
  CHECK(recurrence_matrix(6, 2, 4).data() ==
        std::vector<std::vector<Int>>{{1}, {3, 1}, {11, 6, 1}, {45, 31, 9, 1}});
  CHECK(recurrence_matrix(5, 1, 5).data().back() == std::vector<Int>{137, 132, 57, 12, 1});
  CHECK(recurrence_matrix(3, 1, 5).data() ==
        std::vector<std::vector<Int>>{{1}, {1, 1}, {2, 2, 1}, {4, 5, 3, 1}, {9, 12, 9, 4, 1}});
  CHECK_THROWS_AS(recurrence_matrix(1, 1, 3), std::invalid_argument);
  CHECK_THROWS_AS(recurrence_matrix(4, 4, 3), std::invalid_argument);

  SUBCASE("recurrence equals riordan for a parameter grid") {
    for (int t = 1; t <= 4; ++t) {
      for (int k = t + 1; k <= t + 5; ++k) {
        const int rows = 12;
        const TruncatedSeries g = solve_motzkin_gf(k - t - 1, t, rows - 1);
        const TruncatedSeries f = TruncatedSeries::monomial(1, 1, rows - 1) * g;
        CHECK(recurrence_matrix(k, t, rows) == riordan_matrix(RiordanArray(g, f), rows));
      }
    }
  }

  SUBCASE("closed form for the k=4, t=1 triangle") {
    const TriangularMatrix m = recurrence_matrix(4, 1, 12);
    for (int i = 1; i <= 12; ++i)
      for (int j = 1; j <= i; ++j)
        CHECK(m.entry(i, j) == exact_div(Int(j) * binomial(2 * i, i - j), i));
  }
}

TEST_CASE("matrix-vector products are exact") {
  const TriangularMatrix motzkin = recurrence_matrix(3, 1, 5);
  const std::vector<Int> ladder = ints({1, 2, 3, 4, 5});
  CHECK(matrix_vector_product(motzkin, ladder) == ints({1, 3, 9, 27, 81}));

  const TriangularMatrix sch = recurrence_matrix(6, 2, 5);
  CHECK(matrix_vector_product(sch, ints({1, 3, 7, 15, 31})) == ints({1, 6, 36, 216, 1296}));

  const TriangularMatrix identity{{{1}, {0, 1}, {0, 0, 1}}};
  CHECK(matrix_vector_product(identity, ints({4, 5, 6})) == ints({4, 5, 6}));

  CHECK_THROWS_AS(matrix_vector_product(sch, ints({1, 2})), std::invalid_argument);
}

TEST_CASE("series and matrix serialization") {
  const TruncatedSeries half = rational_series({1}, {2, -1}, 2);
  CHECK(series_to_json(half).dump() == R"({"coeffs":["1/2","1/4","1/8"]})");
  CHECK(series_from_json(series_to_json(half)) == half);

  const TriangularMatrix m = recurrence_matrix(4, 1, 3);
  CHECK(matrix_to_json(m).dump() == R"({"rows":[["1"],["2","1"],["5","4","1"]]})");
  CHECK(matrix_to_csv(m) == "1\n2,1\n5,4,1\n");
}
