#include "mfp/harness.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "mfp/bijections.hpp"
#include "mfp/paths.hpp"
#include "mfp/series.hpp"

namespace mfp {

namespace {

constexpr int kEnumRowCap = 9;   // brute-force legs run up to this row
constexpr int kPhiRowCap = 7;    // phi image checked up to this semilength
constexpr int kMarkedRowCap = 8; // marked-configuration legs
constexpr int kMarkCap = 2;
constexpr int kSigmaRowCap = 5;  // sigma-domain legs
constexpr int kSigmaTCap = 3;

std::string join_row(const std::vector<Int>& row) {
  std::string out;
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (i > 0) out.push_back(',');
    out += row[i].str();
  }
  return out;
}

IdentityRow make_row(int index, const Int& lhs, const Int& rhs, std::vector<std::string> methods,
                     bool extra_ok = true) {
  IdentityRow row;
  row.index = index;
  row.lhs = lhs.str();
  row.rhs = rhs.str();
  row.methods = std::move(methods);
  row.verdict = (lhs == rhs && extra_ok) ? "pass" : "fail";
  return row;
}

// Geometric column 1, 1+t, 1+t+t^2, ... of the weighted identities.
std::vector<Int> geometric_column(int t, int rows) {
  std::vector<Int> v(static_cast<std::size_t>(rows));
  Int acc = 0, power = 1;
  for (int j = 0; j < rows; ++j) {
    acc += power;
    power *= t;
    v[static_cast<std::size_t>(j)] = acc;
  }
  return v;
}

}  // namespace

bool IdentityReport::passed() const {
  return std::all_of(rows.begin(), rows.end(),
                     [](const IdentityRow& r) { return r.verdict != "fail"; });
}

IdentityReport verify_weighted_identity(int k, int t, int rows) {
  if (rows < 1) throw std::invalid_argument("verify_weighted_identity: need at least one row");
  const WeightSpec w = WeightSpec::from_kt(k, t);  // validates k, t
  IdentityReport report;
  report.identity = "weighted";
  report.params = {{"k", k}, {"t", t}, {"rows", rows}};

  const TriangularMatrix m = recurrence_matrix(k, t, rows);
  const std::vector<Int> column = geometric_column(t, rows);
  const std::vector<Int> lhs = matrix_vector_product(m, column);

  for (int i = 1; i <= rows; ++i) {
    const Int rhs = int_pow(k, static_cast<unsigned>(i - 1));
    std::vector<std::string> methods{"recurrence-matrix", "power"};
    bool extra_ok = true;
    if (i <= kEnumRowCap) {
      Int by_paths = 0;
      for (int j = 1; j <= i; ++j)
        by_paths += count_weighted(PathClass::partial_motzkin(j - 1), i - 1, w) *
                    column[static_cast<std::size_t>(j - 1)];
      methods.push_back("enumeration");
      extra_ok = by_paths == lhs[static_cast<std::size_t>(i - 1)];
    } else {
      methods.push_back("enumeration:skipped");
    }
    report.rows.push_back(make_row(i, lhs[static_cast<std::size_t>(i - 1)], rhs, std::move(methods), extra_ok));
  }
  return report;
}

IdentityReport verify_rooted_sum(int max_i) {
  if (max_i < 1) throw std::invalid_argument("verify_rooted_sum: need i >= 1");
  IdentityReport report;
  report.identity = "rooted-sum";
  report.params = {{"i", max_i}};

  const TriangularMatrix m = recurrence_matrix(4, 1, max_i);
  for (int i = 1; i <= max_i; ++i) {
    Int by_matrix = 0;
    for (int j = 1; j <= i; ++j) by_matrix += Int(j) * m.entry(i, j);
    const Int rhs = int_pow(4, static_cast<unsigned>(i - 1));
    std::vector<std::string> methods{"recurrence-matrix", "power"};
    bool extra_ok = true;

    if (i <= kEnumRowCap) {
      Int count = 0;
      for_each_composition(2 * i, std::nullopt, /*rooted=*/true, [&](const Composition&) { ++count; });
      methods.push_back("composition-count");
      extra_ok = count == by_matrix;
    } else {
      methods.push_back("composition-count:skipped");
    }

    if (i <= kPhiRowCap) {
      // phi must map the rooted compositions onto all words of length i-1.
      std::set<std::string> words;
      bool phi_ok = true;
      Int count = 0;
      for_each_composition(2 * i, std::nullopt, /*rooted=*/true, [&](const Composition& c) {
        ++count;
        const std::string word = phi(c);
        phi_ok = phi_ok && static_cast<int>(word.size()) == i - 1 && words.insert(word).second;
      });
      phi_ok = phi_ok && Int(words.size()) == rhs && count == rhs;
      methods.push_back("phi-image");
      extra_ok = extra_ok && phi_ok;
    } else {
      methods.push_back("phi-image:skipped");
    }

    report.rows.push_back(make_row(i, by_matrix, rhs, std::move(methods), extra_ok));
  }
  return report;
}

namespace {

// (j/i) * C(2i, i-j), the count of partial 2-Motzkin paths of length i-1
// ending at level j-1; always an exact integer.
Int catalan_triangle_entry(int i, int j) { return exact_div(Int(j) * binomial(2 * i, i - j), i); }

}  // namespace

IdentityReport verify_cameron(int max_i, int m) {
  if (max_i < 1 || m < 0) throw std::invalid_argument("verify_cameron: need i >= 1 and m >= 0");
  IdentityReport report;
  report.identity = "cameron";
  report.params = {{"i", max_i}, {"m", m}};

  for (int i = 1; i <= max_i; ++i) {
    const Int lhs = binomial(i - 1, m) * int_pow(4, static_cast<unsigned>(i - 1 - m >= 0 ? i - 1 - m : 0));
    Int rhs = 0;
    for (int j = 1; j <= i; ++j)
      rhs += catalan_triangle_entry(i, j) * binomial(j + m, 2 * m + 1);
    std::vector<std::string> methods{"binomial-power", "closed-form"};
    bool extra_ok = true;

    if (i <= kMarkedRowCap && m <= kMarkCap) {
      Int configs = 0;
      for (int j = 1; j <= i; ++j)
        for_each_marked_path(i - 1, j - 1, m, [&](const MarkedPartialPath&) { ++configs; });
      methods.push_back("marked-enumeration");
      extra_ok = configs == rhs;

      Int dotted = 0;
      for_each_h_colored(PathClass::free_motzkin(), i - 1, 3, [&](const LatticePath& p) {
        const long count = std::count_if(p.steps.begin(), p.steps.end(), [](const Step& s) {
          return s.dir == Dir::Horizontal && s.color == 3;
        });
        if (count == m) ++dotted;
      });
      methods.push_back("dotted-enumeration");
      extra_ok = extra_ok && dotted == lhs;
    } else {
      methods.push_back("marked-enumeration:skipped");
      methods.push_back("dotted-enumeration:skipped");
    }

    report.rows.push_back(make_row(i, lhs, rhs, std::move(methods), extra_ok));
  }
  return report;
}

IdentityReport verify_cameron_general(int max_i, int m, int k) {
  if (max_i < 1 || m < 0) throw std::invalid_argument("verify_cameron_general: need i >= 1 and m >= 0");
  if (k < 2) throw std::invalid_argument("verify_cameron_general: need k >= 2");
  IdentityReport report;
  report.identity = "cameron-general";
  report.params = {{"i", max_i}, {"m", m}, {"k", k}};

  // Partial (k-2)-Motzkin counts are the entries of the (k, 1) matrix.
  const TriangularMatrix a = recurrence_matrix(k, 1, max_i);
  const WeightSpec w{k - 2, 1};

  for (int i = 1; i <= max_i; ++i) {
    const Int lhs = binomial(i - 1, m) * int_pow(k, static_cast<unsigned>(i - 1 - m >= 0 ? i - 1 - m : 0));
    Int rhs = 0;
    for (int j = 1; j <= i; ++j) rhs += a.entry(i, j) * binomial(j + m, 2 * m + 1);
    std::vector<std::string> methods{"binomial-power", "recurrence-matrix"};
    bool extra_ok = true;

    if (i <= kMarkedRowCap) {
      Int by_paths = 0;
      for (int j = 1; j <= i; ++j)
        by_paths += count_weighted(PathClass::partial_motzkin(j - 1), i - 1, w) *
                    binomial(j + m, 2 * m + 1);
      methods.push_back("enumeration");
      extra_ok = by_paths == rhs;
    } else {
      methods.push_back("enumeration:skipped");
    }

    report.rows.push_back(make_row(i, lhs, rhs, std::move(methods), extra_ok));
  }
  return report;
}

IdentityReport verify_colored(int t, int rows) {
  if (t < 2) throw std::invalid_argument("verify_colored: t must be >= 2");
  if (rows < 1) throw std::invalid_argument("verify_colored: need at least one row");
  IdentityReport report;
  report.identity = "colored";
  report.params = {{"t", t}, {"rows", rows}};

  const int up_colors = t * t - t;
  // First column: weights of (t^2-t)-Dyck paths, by enumeration; the other
  // columns follow the colored recurrence.
  std::vector<std::vector<Int>> m(static_cast<std::size_t>(rows));
  for (int i = 1; i <= rows; ++i) {
    auto& row = m[static_cast<std::size_t>(i - 1)];
    row.resize(static_cast<std::size_t>(i));
    row[0] = count_paths(PathClass::colored_dyck(up_colors), 2 * i);
    if (i == 1) continue;
    const auto& prev = m[static_cast<std::size_t>(i - 2)];
    const auto at = [&](int j) -> Int {
      return j >= 1 && j <= i - 1 ? prev[static_cast<std::size_t>(j - 1)] : Int(0);
    };
    for (int j = 2; j <= i; ++j)
      row[static_cast<std::size_t>(j - 1)] =
          at(j - 1) + Int(up_colors + 1) * at(j) + Int(up_colors) * at(j + 1);
  }
  const TriangularMatrix matrix{std::move(m)};

  std::vector<Int> column(static_cast<std::size_t>(rows));
  for (int j = 1; j <= rows; ++j)
    column[static_cast<std::size_t>(j - 1)] =
        int_pow(t, static_cast<unsigned>(j)) - int_pow(t - 1, static_cast<unsigned>(j));
  const std::vector<Int> lhs = matrix_vector_product(matrix, column);

  for (int i = 1; i <= rows; ++i) {
    const Int rhs = int_pow(t * t + t, static_cast<unsigned>(i - 1));
    std::vector<std::string> methods{"colored-count", "recurrence-matrix", "power"};
    bool extra_ok = true;
    if (t <= kSigmaTCap && i <= kSigmaRowCap) {
      Int domain = 0;
      for_each_colored_composition(2 * i, t, [&](const Composition&) { ++domain; });
      methods.push_back("sigma-domain");
      extra_ok = domain == rhs;
    } else {
      methods.push_back("sigma-domain:skipped");
    }
    report.rows.push_back(make_row(i, lhs[static_cast<std::size_t>(i - 1)], rhs, std::move(methods), extra_ok));
  }
  return report;
}

IdentityReport cross_check_matrix(int k, int t, int rows) {
  if (rows < 1 || rows > kEnumRowCap)
    throw std::invalid_argument("cross_check_matrix: rows must lie in 1.." + std::to_string(kEnumRowCap));
  const WeightSpec w = WeightSpec::from_kt(k, t);
  IdentityReport report;
  report.identity = "cross-check";
  report.params = {{"k", k}, {"t", t}, {"rows", rows}};

  const TriangularMatrix by_recurrence = recurrence_matrix(k, t, rows);
  const int order = std::max(rows - 1, 1);
  const TruncatedSeries g = solve_motzkin_gf(k - t - 1, t, order);
  const TruncatedSeries f = TruncatedSeries::monomial(1, 1, order) * g;
  const TriangularMatrix by_riordan = riordan_matrix(RiordanArray(g, f), rows);

  for (int i = 1; i <= rows; ++i) {
    std::vector<Int> rec_row, rio_row, enum_row;
    for (int j = 1; j <= i; ++j) {
      rec_row.push_back(by_recurrence.entry(i, j));
      rio_row.push_back(by_riordan.entry(i, j));
      enum_row.push_back(count_weighted(PathClass::partial_motzkin(j - 1), i - 1, w));
    }
    IdentityRow row;
    row.index = i;
    row.lhs = join_row(rec_row);
    row.rhs = join_row(enum_row);
    row.methods = {"recurrence-matrix", "riordan-matrix", "enumeration"};
    row.verdict = (rec_row == rio_row && rec_row == enum_row) ? "pass" : "fail";
    report.rows.push_back(std::move(row));
  }
  return report;
}

nlohmann::json report_to_json(const IdentityReport& report) {
  nlohmann::json rows = nlohmann::json::array();
  for (const IdentityRow& r : report.rows) {
    rows.push_back(nlohmann::json{
        {"i", r.index}, {"lhs", r.lhs}, {"rhs", r.rhs}, {"methods", r.methods}, {"verdict", r.verdict}});
  }
  nlohmann::json params = nlohmann::json::object();
  for (const auto& [key, value] : report.params) params[key] = value;
  return nlohmann::json{{"identity", report.identity}, {"params", std::move(params)}, {"rows", std::move(rows)}};
}

std::string report_to_table(const IdentityReport& report) {
  std::ostringstream out;
  out << "identity: " << report.identity << " (";
  bool first = true;
  for (const auto& [key, value] : report.params) {
    if (!first) out << ", ";
    out << key << "=" << value;
    first = false;
  }
  out << ")\n";
  for (const IdentityRow& r : report.rows) {
    out << "  i=" << r.index << "  lhs=" << r.lhs << "  rhs=" << r.rhs << "  " << r.verdict << "  [";
    for (std::size_t i = 0; i < r.methods.size(); ++i) {
      if (i > 0) out << ", ";
      out << r.methods[i];
    }
    out << "]\n";
  }
  out << "result: " << (report.passed() ? "pass" : "fail") << "\n";
  return out.str();
}

}  // namespace mfp
