#ifndef MFP_PATHS_HPP_
#define MFP_PATHS_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "mfp/numeric.hpp"

namespace mfp {

enum class Dir : std::uint8_t { Up, Down, Horizontal };

char dir_char(Dir d);

// One lattice step. color == 0 means uncolored; colored steps carry a value >= 1.
struct Step {
  Dir dir = Dir::Up;
  int color = 0;

  friend bool operator==(const Step&, const Step&) = default;
  friend auto operator<=>(const Step&, const Step&) = default;
};

// A sequence of U/D/H steps. All constrained path families (Dyck, Motzkin,
// partial Motzkin, ...) are validation predicates over this one type; a path
// with no constraints at all is a free Motzkin path.
struct LatticePath {
  std::vector<Step> steps;

  LatticePath() = default;
  explicit LatticePath(std::vector<Step> s) : steps(std::move(s)) {}

  std::size_t size() const { return steps.size(); }
  bool empty() const { return steps.empty(); }

  // Level before step i (level_at(0) == 0) and after the last step.
  int level_at(std::size_t i) const;
  int end_level() const { return level_at(steps.size()); }
  int min_level() const;

  // Steps [first, last) as a new path.
  LatticePath slice(std::size_t first, std::size_t last) const;
  LatticePath& append(const LatticePath& other);

  friend bool operator==(const LatticePath&, const LatticePath&) = default;
  friend auto operator<=>(const LatticePath&, const LatticePath&) = default;
};

// Canonical text encoding: one character per step ('U', 'D', 'H'), a colored
// step followed by its decimal color, e.g. "UH2DU3". Parsing is strict and
// round-trips losslessly with format_path.
LatticePath parse_path(std::string_view text);
std::string format_path(const LatticePath& path);

nlohmann::json path_to_json(const LatticePath& path);
LatticePath path_from_json(const nlohmann::json& j);

enum class PathKind { Dyck, Motzkin, PartialMotzkin, FreeMotzkin, ColoredDyck };

struct PathClass {
  PathKind kind = PathKind::Dyck;
  int end_level = 0;    // PartialMotzkin only
  int color_count = 0;  // ColoredDyck only

  static PathClass dyck() { return {PathKind::Dyck, 0, 0}; }
  static PathClass motzkin() { return {PathKind::Motzkin, 0, 0}; }
  static PathClass partial_motzkin(int end_level) { return {PathKind::PartialMotzkin, end_level, 0}; }
  static PathClass free_motzkin() { return {PathKind::FreeMotzkin, 0, 0}; }
  static PathClass colored_dyck(int color_count) { return {PathKind::ColoredDyck, 0, color_count}; }
};

// Validation result. Violations are ordinary values, not errors; `reason`
// names the first failed invariant and `step` the offending index when one
// exists.
struct Verdict {
  bool ok = true;
  std::string reason;
  std::optional<std::size_t> step;

  explicit operator bool() const { return ok; }
  static Verdict pass() { return {}; }
  static Verdict fail(std::string reason, std::optional<std::size_t> step = {}) {
    return {false, std::move(reason), step};
  }
};

Verdict validate_path(const LatticePath& path, const PathClass& cls);

// Step weights: up steps weigh 1, horizontal steps weigh `horizontal`, down
// steps weigh `down`. The identity layer maps the pair (k, t) to
// (horizontal, down) = (k - t - 1, t), so that 1 + horizontal + down == k.
struct WeightSpec {
  std::int64_t horizontal = 1;
  std::int64_t down = 1;

  static WeightSpec from_kt(int k, int t);  // throws std::invalid_argument out of range
  std::int64_t total() const { return 1 + horizontal + down; }
};

// Product of the step weights; 1 for the empty path.
Int weight(const LatticePath& path, const WeightSpec& w);

struct EnumLimits {
  std::uint64_t cap = 100'000'000;  // throw EnumCapError past this many objects
};

// Exhaustive enumeration in lexicographic step order with U < H < D; colored
// classes additionally expand all admissible colorings in ascending color
// order. Deterministic, each valid path exactly once.
void for_each_path(const PathClass& cls, int length,
                   const std::function<void(const LatticePath&)>& fn,
                   const EnumLimits& limits = {});
std::vector<LatticePath> enumerate_paths(const PathClass& cls, int length,
                                         const EnumLimits& limits = {});
Int count_paths(const PathClass& cls, int length, const EnumLimits& limits = {});

// Sum of weight(P, w) over every path of the class. Equals the cardinality of
// the color-expanded enumeration (horizontals into `horizontal` colors, downs
// into `down` colors).
Int count_weighted(const PathClass& cls, int length, const WeightSpec& w,
                   const EnumLimits& limits = {});

// Expands each horizontal step into colors 1..h_colors and each down step
// into colors 1..d_colors (1 keeps downs uncolored). Used to realize weighted
// counts as plain cardinalities.
std::vector<LatticePath> expand_step_colors(const LatticePath& path, int h_colors, int d_colors = 1);

// Enumerates paths of the class with horizontal steps carrying colors
// 1..h_colors (the 2-Motzkin / 3-Motzkin families).
void for_each_h_colored(const PathClass& cls, int length, int h_colors,
                        const std::function<void(const LatticePath&)>& fn,
                        const EnumLimits& limits = {});

// A Dyck path cut at return points into nonempty Dyck segments. `cuts` holds
// the step indices after which the path is cut, strictly increasing, and the
// final step index is always present. `root` (1-based) distinguishes one
// segment; `segment_colors` colors each segment (the t-feasible colorings).
struct Composition {
  LatticePath path;
  std::vector<std::size_t> cuts;
  std::optional<int> root;
  std::optional<std::vector<int>> segment_colors;

  std::size_t segment_count() const { return cuts.size(); }
  std::vector<LatticePath> segments() const;

  friend bool operator==(const Composition&, const Composition&) = default;
};

// Checks cut placement, segment nonemptiness, root range, and (when
// `color_count` > 0) that segment_colors is a t-feasible coloring with
// t = color_count. The path itself is validated as Dyck, or as ColoredDyck
// with `up_color_count` colors when up_color_count > 0.
Verdict validate_composition(const Composition& c, int color_count = 0, int up_color_count = 0);

nlohmann::json composition_to_json(const Composition& c);
Composition composition_from_json(const nlohmann::json& j);

// All compositions of Dyck paths of the given (even) length: every subset of
// the return points, the ending point always a cut. Filters to `segments`
// segments when given; `rooted` expands every root choice.
void for_each_composition(int length, std::optional<int> segments, bool rooted,
                          const std::function<void(const Composition&)>& fn,
                          const EnumLimits& limits = {});
std::vector<Composition> enumerate_compositions(int length, std::optional<int> segments,
                                                bool rooted, const EnumLimits& limits = {});

// For each level 0..end_level-1, the rightmost up step whose initial point is
// at that level. Empty for complete paths (end_level == 0). The path must be
// a valid partial Motzkin path.
std::vector<std::size_t> r_visible_up_steps(const LatticePath& path);

// Mirror notion on free paths: for each level -1 down to the minimum level,
// the first (leftmost) down step reaching that level. Empty for paths that
// never go below their start.
std::vector<std::size_t> l_visible_down_steps(const LatticePath& path);

// A partial 2-Motzkin path (horizontal colors in {1,2}) with m marked
// R-visible up steps and m+1 elevation lines. With y_k the initial level of
// the k-th marked step and x_k the k-th line (both increasing), the lines
// interleave the marks as y_{k-1} < x_k <= y_k (y_0 = -1) and
// y_m < x_{m+1} <= end level: exactly one marked step sits between adjacent
// lines, none below the first or above the last.
struct MarkedPartialPath {
  LatticePath path;
  std::vector<std::size_t> marks;
  std::vector<int> lines;

  friend bool operator==(const MarkedPartialPath&, const MarkedPartialPath&) = default;
};

Verdict validate_marked_path(const MarkedPartialPath& m);

nlohmann::json marked_path_to_json(const MarkedPartialPath& m);
MarkedPartialPath marked_path_from_json(const nlohmann::json& j);

// Every MarkedPartialPath with `marks` marked steps on partial 2-Motzkin
// paths of the given length and end level: all paths, all admissible mark
// subsets, all admissible line placements.
void for_each_marked_path(int length, int end_level, int marks,
                          const std::function<void(const MarkedPartialPath&)>& fn,
                          const EnumLimits& limits = {});

// Compositions of (t^2-t)-colored Dyck paths of the given length carrying a
// t-feasible segment coloring: the domain of the sigma bijection.
void for_each_colored_composition(int length, int t,
                                  const std::function<void(const Composition&)>& fn,
                                  const EnumLimits& limits = {});

}  // namespace mfp

#endif  // MFP_PATHS_HPP_
