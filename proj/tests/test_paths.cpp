#include "mfp/paths.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "doctest.h"
#include "mfp/numeric.hpp"

using namespace mfp;

namespace {

// Independent oracle: weighted partial Motzkin counts by a level-indexed
// transfer DP, no enumeration involved.
Int dp_partial_count(int length, int end, long long a, long long b) {
  std::vector<Int> cur(static_cast<std::size_t>(length) + 2, 0);
  cur[0] = 1;
  for (int s = 0; s < length; ++s) {
    std::vector<Int> next(cur.size(), 0);
    for (std::size_t h = 0; h < cur.size(); ++h) {
      if (cur[h] == 0) continue;
      if (h + 1 < next.size()) next[h + 1] += cur[h];
      next[h] += cur[h] * a;
      if (h > 0) next[h - 1] += cur[h] * b;
    }
    cur = std::move(next);
  }
  if (end < 0 || static_cast<std::size_t>(end) >= cur.size()) return 0;
  return cur[static_cast<std::size_t>(end)];
}

Int catalan(int n) { return exact_div(binomial(2 * n, n), n + 1); }

}  // namespace

TEST_CASE("text encoding round trips") {
  for (const char* text : {"", "UD", "UHD", "U3HD", "H12U2D", "UH2DH1"}) {
    CHECK(format_path(parse_path(text)) == text);
  }
  CHECK_THROWS_AS(parse_path("UX"), std::invalid_argument);
  CHECK_THROWS_AS(parse_path("U0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_path("3U"), std::invalid_argument);
}

TEST_CASE("json encoding round trips and rejects junk") {
  const LatticePath p = parse_path("U3HDU2H2D");
  CHECK(path_from_json(path_to_json(p)) == p);
  CHECK_THROWS_AS(path_from_json(nlohmann::json{{"steps", nlohmann::json{{"dir", "U"}}}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(path_from_json(nlohmann::json{{"steps", nlohmann::json::array({nlohmann::json{{"dir", "X"}}})}}),
                  std::invalid_argument);
}

TEST_CASE("validate_path checks each class") {
  CHECK(validate_path(parse_path("UD"), PathClass::dyck()).ok);
  const Verdict below = validate_path(parse_path("DU"), PathClass::dyck());
  CHECK_FALSE(below.ok);
  CHECK(below.step == std::size_t{0});
  CHECK(validate_path(parse_path("UUHD"), PathClass::partial_motzkin(1)).ok);
  CHECK_FALSE(validate_path(parse_path("UHD"), PathClass::dyck()).ok);
  CHECK_FALSE(validate_path(parse_path("UDU"), PathClass::dyck()).ok);
  CHECK(validate_path(parse_path("UHD"), PathClass::motzkin()).ok);
  CHECK(validate_path(parse_path("DDUH"), PathClass::free_motzkin()).ok);
  CHECK_FALSE(validate_path(parse_path("UDU"), PathClass::partial_motzkin(2)).ok);
  CHECK(validate_path(parse_path("UDU"), PathClass::partial_motzkin(1)).ok);

  SUBCASE("colored dyck rules") {
    // an up step right before a down step stays uncolored, every other up
    // step carries a color in range
    CHECK(validate_path(parse_path("U2UDD"), PathClass::colored_dyck(2)).ok);
    CHECK_FALSE(validate_path(parse_path("U3UDD"), PathClass::colored_dyck(2)).ok);
    CHECK_FALSE(validate_path(parse_path("UUDD"), PathClass::colored_dyck(2)).ok);
    CHECK_FALSE(validate_path(parse_path("U1D"), PathClass::colored_dyck(2)).ok);
    CHECK(validate_path(parse_path("UD"), PathClass::colored_dyck(2)).ok);
  }
}

TEST_CASE("weight multiplies step weights") {
  CHECK(weight(parse_path("UHD"), {2, 1}) == 2);
  CHECK(weight(parse_path("UHD"), {3, 2}) == 6);
  CHECK(weight(LatticePath{}, {5, 7}) == 1);
  CHECK(weight(parse_path("HH"), {0, 1}) == 0);
}

TEST_CASE("enumeration order and counts") {
  SUBCASE("small fixed sets") {
    std::vector<std::string> dyck4;
    for (const LatticePath& p : enumerate_paths(PathClass::dyck(), 4)) dyck4.push_back(format_path(p));
    CHECK(dyck4 == std::vector<std::string>{"UUDD", "UDUD"});
    CHECK(enumerate_paths(PathClass::motzkin(), 3).size() == 4);
    CHECK(enumerate_paths(PathClass::free_motzkin(), 2).size() == 9);
    CHECK(enumerate_paths(PathClass::dyck(), 0).size() == 1);  // the empty path
    CHECK(enumerate_paths(PathClass::dyck(), 3).empty());
  }

  SUBCASE("lexicographic order with U < H < D") {
    const auto paths = enumerate_paths(PathClass::motzkin(), 3);
    std::vector<std::string> text;
    for (const LatticePath& p : paths) text.push_back(format_path(p));
    CHECK(text == std::vector<std::string>{"UHD", "UDH", "HUD", "HHH"});
  }

  SUBCASE("cardinalities match closed forms") {
    for (int n = 0; n <= 10; ++n) CHECK(count_paths(PathClass::dyck(), 2 * n) == catalan(n));
    for (int n = 0; n <= 12; ++n)
      CHECK(count_paths(PathClass::motzkin(), n) == dp_partial_count(n, 0, 1, 1));
    for (int n = 0; n <= 12; ++n) CHECK(count_paths(PathClass::free_motzkin(), n) == int_pow(3, n));
    // first Motzkin numbers, frozen
    CHECK(count_paths(PathClass::motzkin(), 4) == 9);
    CHECK(count_paths(PathClass::motzkin(), 5) == 21);
  }

  SUBCASE("colored dyck expansion") {
    // length 4: UUDD has one colorable up step, UDUD has none
    CHECK(count_paths(PathClass::colored_dyck(2), 4) == 3);
    const auto expanded = enumerate_paths(PathClass::colored_dyck(2), 4);
    std::vector<std::string> text;
    for (const LatticePath& p : expanded) text.push_back(format_path(p));
    CHECK(text == std::vector<std::string>{"U1UDD", "U2UDD", "UDUD"});
    // 2-colored Dyck counts are the little Schroder numbers
    const Int schroder[] = {1, 1, 3, 11, 45, 197, 903, 4279, 20793};
    for (int n = 0; n <= 8; ++n) CHECK(count_paths(PathClass::colored_dyck(2), 2 * n) == schroder[n]);
  }

  SUBCASE("enumeration cap") {
    CHECK_THROWS_AS(enumerate_paths(PathClass::dyck(), 10, EnumLimits{5}), EnumCapError);
  }
}

TEST_CASE("count_weighted equals the color-expanded cardinality") {
  for (int n = 0; n <= 6; ++n) {
    for (long long a = 0; a <= 4; ++a) {
      for (long long b = 1; b <= 3; ++b) {
        for (const PathClass& cls :
             {PathClass::motzkin(), PathClass::partial_motzkin(1), PathClass::free_motzkin()}) {
          Int expanded = 0;
          for_each_path(cls, n, [&](const LatticePath& p) {
            expanded += Int(expand_step_colors(p, static_cast<int>(a), static_cast<int>(b)).size());
          });
          CHECK(count_weighted(cls, n, {a, b}) == expanded);
        }
      }
    }
  }
  // spot checks at the invariant's edge
  for (const auto& [a, b] : std::vector<std::pair<long long, long long>>{{2, 1}, {3, 2}}) {
    for (int n = 7; n <= 8; ++n) {
      Int expanded = 0;
      for_each_path(PathClass::motzkin(), n, [&](const LatticePath& p) {
        expanded += Int(expand_step_colors(p, static_cast<int>(a), static_cast<int>(b)).size());
      });
      CHECK(count_weighted(PathClass::motzkin(), n, {a, b}) == expanded);
    }
  }
}

TEST_CASE("count_weighted matches the transfer-matrix oracle") {
  CHECK(count_weighted(PathClass::partial_motzkin(1), 3, {2, 1}) == 14);
  CHECK(count_weighted(PathClass::partial_motzkin(2), 4, {3, 2}) == 60);
  CHECK(count_weighted(PathClass::motzkin(), 4, {1, 1}) == 9);
  for (int n = 0; n <= 8; ++n)
    for (int end = 0; end <= n; ++end)
      CHECK(count_weighted(PathClass::partial_motzkin(end), n, {3, 2}) == dp_partial_count(n, end, 3, 2));
}

TEST_CASE("serialize-parse round trip on enumerated paths") {
  for (int n = 0; n <= 8; ++n) {
    for_each_path(PathClass::free_motzkin(), n, [&](const LatticePath& p) {
      CHECK(parse_path(format_path(p)) == p);
    });
  }
  for_each_h_colored(PathClass::partial_motzkin(1), 5, 2, [&](const LatticePath& p) {
    CHECK(parse_path(format_path(p)) == p);
    CHECK(path_from_json(path_to_json(p)) == p);
  });
}

TEST_CASE("compositions enumerate return-point subsets") {
  SUBCASE("counts from the matrix identities") {
    CHECK(enumerate_compositions(2, std::nullopt, false).size() == 1);
    CHECK(enumerate_compositions(2, std::nullopt, true).size() == 1);
    CHECK(enumerate_compositions(4, 1, false).size() == 2);
    CHECK(enumerate_compositions(4, 2, false).size() == 1);
    CHECK(enumerate_compositions(6, 2, false).size() == 4);
  }

  SUBCASE("rooted compositions count 4^(i-1)") {
    for (int i = 1; i <= 6; ++i) {
      Int count = 0;
      for_each_composition(2 * i, std::nullopt, true, [&](const Composition&) { ++count; });
      CHECK(count == int_pow(4, static_cast<unsigned>(i - 1)));
    }
  }

  SUBCASE("segment counts follow the Catalan triangle") {
    for (int i = 1; i <= 6; ++i) {
      for (int j = 1; j <= i; ++j) {
        Int count = 0;
        for_each_composition(2 * i, j, false, [&](const Composition& c) {
          CHECK(validate_composition(c).ok);
          CHECK(c.segment_count() == static_cast<std::size_t>(j));
          ++count;
        });
        CHECK(count == exact_div(Int(j) * binomial(2 * i, i - j), i));
      }
    }
  }

  SUBCASE("validation rejects bad cuts") {
    Composition c;
    c.path = parse_path("UDUD");
    c.cuts = {0, 3};
    CHECK_FALSE(validate_composition(c).ok);  // cut not at a return point
    c.cuts = {1};
    CHECK_FALSE(validate_composition(c).ok);  // ending point not a cut
    c.cuts = {1, 3};
    CHECK(validate_composition(c).ok);
    c.root = 3;
    CHECK_FALSE(validate_composition(c).ok);
    c.root = 2;
    CHECK(validate_composition(c).ok);
  }

  SUBCASE("t-feasible segment colorings") {
    Composition c;
    c.path = parse_path("UDUD");
    c.cuts = {1, 3};
    c.segment_colors = std::vector<int>{2, 2};
    CHECK_FALSE(validate_composition(c, 2).ok);  // color 1 unused
    c.segment_colors = std::vector<int>{2, 1};
    CHECK(validate_composition(c, 2).ok);
    c.segment_colors = std::vector<int>{3, 1};
    CHECK_FALSE(validate_composition(c, 2).ok);  // out of range
  }

  SUBCASE("composition json round trip") {
    Composition c;
    c.path = parse_path("UDUUDDUDUD");
    c.cuts = {1, 7, 9};
    c.root = 2;
    CHECK(composition_from_json(composition_to_json(c)) == c);
  }
}

TEST_CASE("R-visible up steps, one per level") {
  CHECK(r_visible_up_steps(parse_path("UU")) == std::vector<std::size_t>{0, 1});
  CHECK(r_visible_up_steps(parse_path("UDU")) == std::vector<std::size_t>{2});
  CHECK(r_visible_up_steps(parse_path("UD")).empty());
  CHECK_THROWS_AS(r_visible_up_steps(parse_path("DU")), std::invalid_argument);

  for (int n = 0; n <= 10; ++n) {
    for (int end = 0; end <= n; ++end) {
      for_each_path(PathClass::partial_motzkin(end), n, [&](const LatticePath& p) {
        const auto visible = r_visible_up_steps(p);
        REQUIRE(static_cast<int>(visible.size()) == end);
        int level = 0;
        for (std::size_t idx : visible) {
          CHECK(p.steps[idx].dir == Dir::Up);
          CHECK(p.level_at(idx) == level);
          // nothing at the same initial level to the right
          for (std::size_t later = idx + 1; later < p.size(); ++later)
            CHECK((p.steps[later].dir != Dir::Up || p.level_at(later) != level));
          ++level;
        }
        CHECK(std::is_sorted(visible.begin(), visible.end()));
      });
    }
  }
}

TEST_CASE("L-visible down steps mirror R-visibility") {
  CHECK(l_visible_down_steps(parse_path("D")) == std::vector<std::size_t>{0});
  CHECK(l_visible_down_steps(parse_path("UD")).empty());
  CHECK(l_visible_down_steps(parse_path("DUD")) == std::vector<std::size_t>{0});
  CHECK(l_visible_down_steps(parse_path("DD")) == std::vector<std::size_t>{0, 1});
}

TEST_CASE("marked path validation pins the line interleaving") {
  MarkedPartialPath m;
  m.path = parse_path("UU");
  m.marks = {1};
  m.lines = {0, 2};
  CHECK(validate_marked_path(m).ok);
  m.lines = {0, 1};  // top line not above the mark at level 1
  CHECK_FALSE(validate_marked_path(m).ok);
  m.lines = {1, 2};
  CHECK(validate_marked_path(m).ok);
  m.lines = {0, 1, 2};
  CHECK_FALSE(validate_marked_path(m).ok);
  m.marks = {0};
  m.lines = {0, 1};
  CHECK(validate_marked_path(m).ok);
  m.marks = {0};
  m.lines = {1, 2};  // first line must not exceed its mark's level
  CHECK_FALSE(validate_marked_path(m).ok);

  MarkedPartialPath plain;  // no marks: a single line anywhere in 0..end
  plain.path = parse_path("UHU");
  plain.lines = {2};
  CHECK(validate_marked_path(plain).ok);
  plain.lines = {3};
  CHECK_FALSE(validate_marked_path(plain).ok);

  MarkedPartialPath json_case;
  json_case.path = parse_path("UH1U");
  json_case.marks = {0, 2};
  json_case.lines = {0, 1, 2};
  CHECK(validate_marked_path(json_case).ok);
  CHECK(marked_path_from_json(marked_path_to_json(json_case)) == json_case);
}

TEST_CASE("marked configurations per path count binomial(j+m, 2m+1)") {
  for (int len = 0; len <= 6; ++len) {
    for (int end = 0; end <= len; ++end) {
      for (int m = 0; m <= 2; ++m) {
        // group configurations by path; each path must carry C(j+m, 2m+1)
        std::map<std::string, Int> per_path;
        for_each_marked_path(len, end, m, [&](const MarkedPartialPath& mp) {
          CHECK(validate_marked_path(mp).ok);
          ++per_path[format_path(mp.path)];
        });
        const int j = end + 1;
        const Int expected = binomial(j + m, 2 * m + 1);
        for (const auto& [path, count] : per_path) CHECK(count == expected);
      }
    }
  }
  // the two-up-steps path admits exactly four one-mark configurations
  Int configs = 0;
  for_each_marked_path(2, 2, 1, [&](const MarkedPartialPath&) { ++configs; });
  CHECK(configs == 4);
}

TEST_CASE("colored compositions form the sigma domain") {
  std::set<std::string> seen;
  Int count = 0;
  for_each_colored_composition(4, 2, [&](const Composition& c) {
    CHECK(validate_composition(c, 2, 2).ok);
    seen.insert(composition_to_json(c).dump());
    ++count;
  });
  CHECK(count == 6);
  CHECK(seen.size() == 6);
  for (int i = 1; i <= 4; ++i) {
    Int n = 0;
    for_each_colored_composition(2 * i, 2, [&](const Composition&) { ++n; });
    CHECK(n == int_pow(6, static_cast<unsigned>(i - 1)));
  }
}
