#include "mfp/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace mfp {

TruncatedSeries::TruncatedSeries(int order) {
  if (order < 0) throw std::invalid_argument("TruncatedSeries: order must be >= 0");
  coeffs_.assign(static_cast<std::size_t>(order) + 1, Rational(0));
}

TruncatedSeries::TruncatedSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw std::invalid_argument("TruncatedSeries: need at least the constant term");
}

TruncatedSeries TruncatedSeries::constant(const Rational& value, int order) {
  TruncatedSeries s(order);
  s.coeffs_[0] = value;
  return s;
}

TruncatedSeries TruncatedSeries::monomial(const Rational& value, int degree, int order) {
  if (degree < 0) throw std::invalid_argument("TruncatedSeries::monomial: degree must be >= 0");
  TruncatedSeries s(order);
  if (degree <= order) s.coeffs_[static_cast<std::size_t>(degree)] = value;
  return s;
}

TruncatedSeries TruncatedSeries::truncated(int order) const {
  if (order < 0) throw std::invalid_argument("TruncatedSeries::truncated: order must be >= 0");
  TruncatedSeries s(order);
  const int n = std::min(order, this->order());
  for (int i = 0; i <= n; ++i) s.coeffs_[static_cast<std::size_t>(i)] = coeffs_[static_cast<std::size_t>(i)];
  return s;
}

TruncatedSeries TruncatedSeries::scaled(const Rational& factor) const {
  TruncatedSeries s = *this;
  for (Rational& c : s.coeffs_) c *= factor;
  return s;
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
  TruncatedSeries s(std::min(a.order(), b.order()));
  for (int i = 0; i <= s.order(); ++i) s.coeffs_[i] = a[i] + b[i];
  return s;
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
  TruncatedSeries s(std::min(a.order(), b.order()));
  for (int i = 0; i <= s.order(); ++i) s.coeffs_[i] = a[i] - b[i];
  return s;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  TruncatedSeries s(std::min(a.order(), b.order()));
  for (int i = 0; i <= s.order(); ++i) {
    Rational acc = 0;
    for (int p = 0; p <= i; ++p) acc += a[p] * b[i - p];
    s.coeffs_[i] = acc;
  }
  return s;
}

TruncatedSeries TruncatedSeries::pow(int exponent) const {
  if (exponent < 0) throw std::invalid_argument("TruncatedSeries::pow: exponent must be >= 0");
  TruncatedSeries result = TruncatedSeries::constant(1, order());
  TruncatedSeries base = *this;
  while (exponent != 0) {
    if (exponent & 1) result = result * base;
    base = base * base;
    exponent >>= 1;
  }
  return result;
}

TruncatedSeries TruncatedSeries::compose(const TruncatedSeries& inner) const {
  if (inner[0] != 0) throw std::domain_error("TruncatedSeries::compose: inner series must vanish at 0");
  const int n = std::min(order(), inner.order());
  // Horner evaluation of sum_k c_k inner^k, truncated throughout.
  TruncatedSeries result = TruncatedSeries::constant(coeffs_[static_cast<std::size_t>(order())], n);
  const TruncatedSeries inner_t = inner.truncated(n);
  for (int k = order() - 1; k >= 0; --k)
    result = result * inner_t + TruncatedSeries::constant(coeffs_[static_cast<std::size_t>(k)], n);
  return result;
}

bool TruncatedSeries::is_integral() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const Rational& c) { return denominator(c) == 1; });
}

std::vector<Int> TruncatedSeries::integer_coefficients() const {
  std::vector<Int> out;
  out.reserve(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (denominator(coeffs_[i]) != 1)
      throw std::domain_error("TruncatedSeries: coefficient of x^" + std::to_string(i) + " is not an integer");
    out.push_back(numerator(coeffs_[i]));
  }
  return out;
}

TruncatedSeries solve_motzkin_gf(std::int64_t alpha, std::int64_t beta, int order) {
  if (order < 0) throw std::invalid_argument("solve_motzkin_gf: order must be >= 0");
  std::vector<Int> f(static_cast<std::size_t>(order) + 1);
  f[0] = 1;
  for (int n = 1; n <= order; ++n) {
    Int acc = alpha * f[static_cast<std::size_t>(n - 1)];
    Int conv = 0;
    for (int p = 0; p <= n - 2; ++p) conv += f[static_cast<std::size_t>(p)] * f[static_cast<std::size_t>(n - 2 - p)];
    acc += beta * conv;
    f[static_cast<std::size_t>(n)] = acc;
  }
  std::vector<Rational> coeffs(f.begin(), f.end());
  return TruncatedSeries(std::move(coeffs));
}

TruncatedSeries rational_series(const std::vector<Int>& numer, const std::vector<Int>& denom, int order) {
  if (order < 0) throw std::invalid_argument("rational_series: order must be >= 0");
  if (denom.empty() || denom[0] == 0) throw std::domain_error("rational_series: denominator must not vanish at 0");
  std::vector<Rational> c(static_cast<std::size_t>(order) + 1);
  const Rational d0 = Rational(denom[0]);
  for (int n = 0; n <= order; ++n) {
    Rational acc = n < static_cast<int>(numer.size()) ? Rational(numer[static_cast<std::size_t>(n)]) : Rational(0);
    for (int k = 1; k <= n && k < static_cast<int>(denom.size()); ++k)
      acc -= Rational(denom[static_cast<std::size_t>(k)]) * c[static_cast<std::size_t>(n - k)];
    c[static_cast<std::size_t>(n)] = acc / d0;
  }
  return TruncatedSeries(std::move(c));
}

RiordanArray::RiordanArray(TruncatedSeries g_in, TruncatedSeries f_in)
    : g(std::move(g_in)), f(std::move(f_in)) {
  if (g[0] != 1) throw std::invalid_argument("RiordanArray: g must have constant term 1");
  if (f[0] != 0) throw std::invalid_argument("RiordanArray: f must have constant term 0");
  if (f.order() < 1 || f[1] == 0) throw std::invalid_argument("RiordanArray: f must have a nonzero linear term");
}

TriangularMatrix::TriangularMatrix(std::vector<std::vector<Int>> rows) : rows_(std::move(rows)) {
  for (std::size_t i = 0; i < rows_.size(); ++i)
    if (rows_[i].size() != i + 1)
      throw std::invalid_argument("TriangularMatrix: row " + std::to_string(i + 1) + " must have " +
                                  std::to_string(i + 1) + " entries");
}

const Int& TriangularMatrix::entry(int i, int j) const {
  static const Int zero = 0;
  if (i < 1 || i > rows() || j < 1) throw std::out_of_range("TriangularMatrix::entry: index out of range");
  if (j > i) return zero;
  return rows_[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
}

TriangularMatrix riordan_matrix(const RiordanArray& array, int rows) {
  if (rows < 1) throw std::invalid_argument("riordan_matrix: need at least one row");
  const int order = rows - 1;
  if (array.g.order() < order || array.f.order() < order)
    throw std::invalid_argument("riordan_matrix: series order too small for requested rows");
  std::vector<std::vector<Int>> out(static_cast<std::size_t>(rows));
  for (int i = 0; i < rows; ++i) out[static_cast<std::size_t>(i)].resize(static_cast<std::size_t>(i) + 1);
  TruncatedSeries column = array.g.truncated(order);
  const TruncatedSeries f = array.f.truncated(order);
  for (int j = 1; j <= rows; ++j) {
    const std::vector<Int> coeffs = column.integer_coefficients();
    for (int i = j; i <= rows; ++i)
      out[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = coeffs[static_cast<std::size_t>(i - 1)];
    if (j < rows) column = column * f;
  }
  return TriangularMatrix(std::move(out));
}

TriangularMatrix recurrence_matrix(int k, int t, int rows) {
  if (k < 2 || t < 1 || t > k - 1)
    throw std::invalid_argument("recurrence_matrix: need k >= 2 and 1 <= t <= k-1");
  if (rows < 1) throw std::invalid_argument("recurrence_matrix: need at least one row");
  const std::int64_t a = k - t - 1;
  const std::vector<Int> first = solve_motzkin_gf(a, t, rows - 1).integer_coefficients();
  std::vector<std::vector<Int>> m(static_cast<std::size_t>(rows));
  for (int i = 1; i <= rows; ++i) {
    auto& row = m[static_cast<std::size_t>(i - 1)];
    row.resize(static_cast<std::size_t>(i));
    row[0] = first[static_cast<std::size_t>(i - 1)];
    if (i == 1) continue;
    const auto& prev = m[static_cast<std::size_t>(i - 2)];
    const auto at = [&](int j) -> Int {
      return j >= 1 && j <= i - 1 ? prev[static_cast<std::size_t>(j - 1)] : Int(0);
    };
    for (int j = 2; j <= i; ++j) row[static_cast<std::size_t>(j - 1)] = at(j - 1) + a * at(j) + t * at(j + 1);
  }
  return TriangularMatrix(std::move(m));
}

std::vector<Int> matrix_vector_product(const TriangularMatrix& m, std::span<const Int> v) {
  if (static_cast<int>(v.size()) < m.rows())
    throw std::invalid_argument("matrix_vector_product: vector shorter than the matrix");
  std::vector<Int> out(static_cast<std::size_t>(m.rows()));
  for (int i = 1; i <= m.rows(); ++i) {
    Int acc = 0;
    for (int j = 1; j <= i; ++j) acc += m.entry(i, j) * v[static_cast<std::size_t>(j - 1)];
    out[static_cast<std::size_t>(i - 1)] = acc;
  }
  return out;
}

namespace {

std::string rational_str(const Rational& q) {
  const Int num = numerator(q);
  const Int den = denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Rational rational_from_str(const std::string& s) {
  const auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(Int(s));
  return Rational(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
}

}  // namespace

nlohmann::json series_to_json(const TruncatedSeries& s) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const Rational& c : s.coefficients()) coeffs.push_back(rational_str(c));
  return nlohmann::json{{"coeffs", std::move(coeffs)}};
}

TruncatedSeries series_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("coeffs") || !j["coeffs"].is_array() || j["coeffs"].empty())
    throw std::invalid_argument("series_from_json: expected {\"coeffs\": [...]}");
  std::vector<Rational> coeffs;
  for (const auto& e : j["coeffs"]) {
    if (!e.is_string()) throw std::invalid_argument("series_from_json: coefficients must be strings");
    coeffs.push_back(rational_from_str(e.get<std::string>()));
  }
  return TruncatedSeries(std::move(coeffs));
}

nlohmann::json matrix_to_json(const TriangularMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : m.data()) {
    nlohmann::json r = nlohmann::json::array();
    for (const Int& e : row) r.push_back(e.str());
    rows.push_back(std::move(r));
  }
  return nlohmann::json{{"rows", std::move(rows)}};
}

std::string matrix_to_csv(const TriangularMatrix& m) {
  std::string out;
  for (const auto& row : m.data()) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j > 0) out.push_back(',');
      out += row[j].str();
    }
    out.push_back('\n');
  }
  return out;
}

}  // namespace mfp
