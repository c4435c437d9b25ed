#include "mfp/paths.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace mfp {

char dir_char(Dir d) {
  switch (d) {
    case Dir::Up: return 'U';
    case Dir::Down: return 'D';
    case Dir::Horizontal: return 'H';
  }
  return '?';
}

namespace {

int level_delta(Dir d) {
  switch (d) {
    case Dir::Up: return 1;
    case Dir::Down: return -1;
    case Dir::Horizontal: return 0;
  }
  return 0;
}

}  // namespace

int LatticePath::level_at(std::size_t i) const {
  int h = 0;
  for (std::size_t s = 0; s < i && s < steps.size(); ++s) h += level_delta(steps[s].dir);
  return h;
}

int LatticePath::min_level() const {
  int h = 0, lo = 0;
  for (const Step& s : steps) {
    h += level_delta(s.dir);
    lo = std::min(lo, h);
  }
  return lo;
}

LatticePath LatticePath::slice(std::size_t first, std::size_t last) const {
  if (first > last || last > steps.size()) throw std::invalid_argument("LatticePath::slice: bad range");
  return LatticePath(std::vector<Step>(steps.begin() + first, steps.begin() + last));
}

LatticePath& LatticePath::append(const LatticePath& other) {
  steps.insert(steps.end(), other.steps.begin(), other.steps.end());
  return *this;
}

LatticePath parse_path(std::string_view text) {
  LatticePath path;
  std::size_t i = 0;
  while (i < text.size()) {
    Dir dir;
    switch (text[i]) {
      case 'U': dir = Dir::Up; break;
      case 'D': dir = Dir::Down; break;
      case 'H': dir = Dir::Horizontal; break;
      default:
        throw std::invalid_argument("parse_path: unexpected character '" + std::string(1, text[i]) +
                                    "' at position " + std::to_string(i));
    }
    ++i;
    int color = 0;
    if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      long value = 0;
      std::size_t start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        value = value * 10 + (text[i] - '0');
        if (value > 1'000'000) throw std::invalid_argument("parse_path: color out of range");
        ++i;
      }
      if (value < 1) throw std::invalid_argument("parse_path: color must be >= 1 at position " + std::to_string(start));
      color = static_cast<int>(value);
    }
    path.steps.push_back({dir, color});
  }
  return path;
}

std::string format_path(const LatticePath& path) {
  std::string out;
  for (const Step& s : path.steps) {
    out.push_back(dir_char(s.dir));
    if (s.color > 0) out += std::to_string(s.color);
  }
  return out;
}

nlohmann::json path_to_json(const LatticePath& path) {
  nlohmann::json steps = nlohmann::json::array();
  for (const Step& s : path.steps) {
    nlohmann::json j;
    j["dir"] = std::string(1, dir_char(s.dir));
    if (s.color > 0) j["color"] = s.color;
    steps.push_back(std::move(j));
  }
  return nlohmann::json{{"steps", std::move(steps)}};
}

LatticePath path_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("steps") || !j["steps"].is_array())
    throw std::invalid_argument("path_from_json: expected {\"steps\": [...]}");
  LatticePath path;
  for (const auto& js : j["steps"]) {
    if (!js.is_object() || !js.contains("dir") || !js["dir"].is_string())
      throw std::invalid_argument("path_from_json: each step needs a \"dir\" string");
    const std::string d = js["dir"].get<std::string>();
    Dir dir;
    if (d == "U") dir = Dir::Up;
    else if (d == "D") dir = Dir::Down;
    else if (d == "H") dir = Dir::Horizontal;
    else throw std::invalid_argument("path_from_json: dir must be U, D or H");
    int color = 0;
    if (js.contains("color") && !js["color"].is_null()) {
      if (!js["color"].is_number_integer()) throw std::invalid_argument("path_from_json: color must be an integer");
      color = js["color"].get<int>();
      if (color < 1) throw std::invalid_argument("path_from_json: color must be >= 1");
    }
    path.steps.push_back({dir, color});
  }
  return path;
}

namespace {

bool is_motzkin_kind(PathKind k) {
  return k == PathKind::Motzkin || k == PathKind::PartialMotzkin || k == PathKind::FreeMotzkin;
}

}  // namespace

Verdict validate_path(const LatticePath& path, const PathClass& cls) {
  if (cls.kind == PathKind::PartialMotzkin && cls.end_level < 0)
    throw std::invalid_argument("validate_path: end_level must be >= 0");
  if (cls.kind == PathKind::ColoredDyck && cls.color_count < 0)
    throw std::invalid_argument("validate_path: color_count must be >= 0");

  for (std::size_t i = 0; i < path.steps.size(); ++i) {
    const Step& s = path.steps[i];
    if (s.color < 0) return Verdict::fail("negative color", i);
    if (s.dir == Dir::Horizontal && !is_motzkin_kind(cls.kind))
      return Verdict::fail("horizontal step in a Dyck-family path", i);
    if (s.dir != Dir::Horizontal && cls.kind != PathKind::ColoredDyck && s.color != 0)
      return Verdict::fail("colored step in an uncolored class", i);
    if (s.dir == Dir::Down && s.color != 0) return Verdict::fail("colored down step", i);
  }

  if (cls.kind == PathKind::ColoredDyck) {
    for (std::size_t i = 0; i < path.steps.size(); ++i) {
      const Step& s = path.steps[i];
      if (s.dir != Dir::Up) continue;
      const bool closes = i + 1 < path.steps.size() && path.steps[i + 1].dir == Dir::Down;
      if (closes && s.color != 0)
        return Verdict::fail("up step immediately followed by a down step must be uncolored", i);
      if (!closes && (s.color < 1 || s.color > cls.color_count))
        return Verdict::fail("up step color out of range 1.." + std::to_string(cls.color_count), i);
    }
  }

  if (cls.kind != PathKind::FreeMotzkin) {
    int h = 0;
    for (std::size_t i = 0; i < path.steps.size(); ++i) {
      h += level_delta(path.steps[i].dir);
      if (h < 0) return Verdict::fail("prefix level below zero", i);
    }
    const int target = cls.kind == PathKind::PartialMotzkin ? cls.end_level : 0;
    if (h != target)
      return Verdict::fail("final level " + std::to_string(h) + " != " + std::to_string(target));
  }
  return Verdict::pass();
}

WeightSpec WeightSpec::from_kt(int k, int t) {
  if (k < 2 || t < 1 || t > k - 1)
    throw std::invalid_argument("WeightSpec::from_kt: need k >= 2 and 1 <= t <= k-1");
  return {static_cast<std::int64_t>(k - t - 1), static_cast<std::int64_t>(t)};
}

Int weight(const LatticePath& path, const WeightSpec& w) {
  if (w.horizontal < 0 || w.down < 1)
    throw std::invalid_argument("weight: horizontal weight must be >= 0 and down weight >= 1");
  Int result = 1;
  for (const Step& s : path.steps) {
    switch (s.dir) {
      case Dir::Up: break;
      case Dir::Horizontal: result *= w.horizontal; break;
      case Dir::Down: result *= w.down; break;
    }
  }
  return result;
}

namespace {

struct Emitter {
  const std::function<void(const LatticePath&)>& fn;
  std::uint64_t cap;
  std::uint64_t emitted = 0;

  void emit(const LatticePath& p) {
    if (++emitted > cap) throw EnumCapError("enumeration cap of " + std::to_string(cap) + " objects exceeded");
    fn(p);
  }
};

// Eligible positions for up-step colors: every up step not immediately
// followed by a down step.
std::vector<std::size_t> colorable_up_steps(const LatticePath& p) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < p.steps.size(); ++i) {
    if (p.steps[i].dir != Dir::Up) continue;
    if (i + 1 < p.steps.size() && p.steps[i + 1].dir == Dir::Down) continue;
    out.push_back(i);
  }
  return out;
}

// Emits every assignment of colors 1..count at `positions`, ascending
// (the last position varies fastest).
void expand_colors_at(LatticePath& p, const std::vector<std::size_t>& positions, int count,
                      Emitter& em) {
  if (positions.empty()) {
    em.emit(p);
    return;
  }
  if (count < 1) return;
  for (std::size_t pos : positions) p.steps[pos].color = 1;
  for (;;) {
    em.emit(p);
    std::size_t i = positions.size();
    while (i > 0) {
      Step& s = p.steps[positions[i - 1]];
      if (s.color < count) {
        ++s.color;
        break;
      }
      s.color = 1;
      --i;
    }
    if (i == 0) break;
  }
  for (std::size_t pos : positions) p.steps[pos].color = 0;
}

class PathEnumerator {
 public:
  PathEnumerator(const PathClass& cls, int length, Emitter& em) : cls_(cls), length_(length), em_(em) {
    if (length < 0) throw std::invalid_argument("enumerate_paths: length must be >= 0");
    if (cls.kind == PathKind::PartialMotzkin && cls.end_level < 0)
      throw std::invalid_argument("enumerate_paths: end_level must be >= 0");
    if (cls.kind == PathKind::ColoredDyck && cls.color_count < 0)
      throw std::invalid_argument("enumerate_paths: color_count must be >= 0");
    current_.steps.reserve(length);
  }

  void run() { descend(0, 0); }

 private:
  bool feasible(int level, int remaining) const {
    switch (cls_.kind) {
      case PathKind::FreeMotzkin:
        return true;
      case PathKind::Motzkin:
        return level >= 0 && level <= remaining;
      case PathKind::PartialMotzkin:
        return level >= 0 && std::abs(level - cls_.end_level) <= remaining;
      case PathKind::Dyck:
      case PathKind::ColoredDyck:
        return level >= 0 && level <= remaining && (remaining - level) % 2 == 0;
    }
    return false;
  }

  void descend(int depth, int level) {
    if (depth == length_) {
      if (cls_.kind == PathKind::ColoredDyck) {
        expand_colors_at(current_, colorable_up_steps(current_), cls_.color_count, em_);
      } else {
        em_.emit(current_);
      }
      return;
    }
    const int remaining = length_ - depth - 1;
    const bool horizontal_ok = is_motzkin_kind(cls_.kind);
    // canonical order: U < H < D
    if (feasible(level + 1, remaining)) step(Dir::Up, depth, level + 1);
    if (horizontal_ok && feasible(level, remaining)) step(Dir::Horizontal, depth, level);
    if (feasible(level - 1, remaining)) step(Dir::Down, depth, level - 1);
  }

  void step(Dir d, int depth, int new_level) {
    current_.steps.push_back({d, 0});
    descend(depth + 1, new_level);
    current_.steps.pop_back();
  }

  const PathClass& cls_;
  int length_;
  Emitter& em_;
  LatticePath current_;
};

}  // namespace

void for_each_path(const PathClass& cls, int length, const std::function<void(const LatticePath&)>& fn,
                   const EnumLimits& limits) {
  Emitter em{fn, limits.cap};
  PathEnumerator(cls, length, em).run();
}

std::vector<LatticePath> enumerate_paths(const PathClass& cls, int length, const EnumLimits& limits) {
  std::vector<LatticePath> out;
  for_each_path(cls, length, [&](const LatticePath& p) { out.push_back(p); }, limits);
  return out;
}

Int count_paths(const PathClass& cls, int length, const EnumLimits& limits) {
  Int count = 0;
  if (cls.kind == PathKind::ColoredDyck) {
    // Count colorings multiplicatively instead of materializing them.
    Emitter em{[&](const LatticePath& p) {
                 count += int_pow(cls.color_count, static_cast<unsigned>(colorable_up_steps(p).size()));
               },
               limits.cap};
    PathEnumerator(PathClass::dyck(), length, em).run();
    return count;
  }
  for_each_path(cls, length, [&](const LatticePath&) { ++count; }, limits);
  return count;
}

Int count_weighted(const PathClass& cls, int length, const WeightSpec& w, const EnumLimits& limits) {
  Int total = 0;
  if (cls.kind == PathKind::ColoredDyck) {
    Emitter em{[&](const LatticePath& p) {
                 total += int_pow(cls.color_count, static_cast<unsigned>(colorable_up_steps(p).size())) *
                          weight(p, w);
               },
               limits.cap};
    PathEnumerator(PathClass::dyck(), length, em).run();
    return total;
  }
  for_each_path(cls, length, [&](const LatticePath& p) { total += weight(p, w); }, limits);
  return total;
}

std::vector<LatticePath> expand_step_colors(const LatticePath& path, int h_colors, int d_colors) {
  if (h_colors < 0 || d_colors < 0) throw std::invalid_argument("expand_step_colors: negative color count");
  std::vector<std::pair<std::size_t, int>> slots;  // position, color count
  for (std::size_t i = 0; i < path.steps.size(); ++i) {
    if (path.steps[i].dir == Dir::Horizontal) slots.emplace_back(i, h_colors);
    if (path.steps[i].dir == Dir::Down) slots.emplace_back(i, d_colors);
  }
  for (const auto& [pos, count] : slots)
    if (count == 0) return {};
  LatticePath work = path;
  for (const auto& [pos, count] : slots) work.steps[pos].color = 1;
  std::vector<LatticePath> out;
  for (;;) {
    out.push_back(work);
    std::size_t i = slots.size();
    while (i > 0) {
      const auto& [pos, count] = slots[i - 1];
      if (work.steps[pos].color < count) {
        ++work.steps[pos].color;
        break;
      }
      work.steps[pos].color = 1;
      --i;
    }
    if (i == 0) break;
  }
  return out;
}

void for_each_h_colored(const PathClass& cls, int length, int h_colors,
                        const std::function<void(const LatticePath&)>& fn, const EnumLimits& limits) {
  if (h_colors < 1) throw std::invalid_argument("for_each_h_colored: need at least one color");
  Emitter em{fn, limits.cap};
  for_each_path(
      cls, length,
      [&](const LatticePath& p) {
        std::vector<std::size_t> h_positions;
        for (std::size_t i = 0; i < p.steps.size(); ++i)
          if (p.steps[i].dir == Dir::Horizontal) h_positions.push_back(i);
        LatticePath work = p;
        expand_colors_at(work, h_positions, h_colors, em);
      },
      limits);
}

std::vector<LatticePath> Composition::segments() const {
  std::vector<LatticePath> out;
  std::size_t begin = 0;
  for (std::size_t cut : cuts) {
    out.push_back(path.slice(begin, cut + 1));
    begin = cut + 1;
  }
  return out;
}

Verdict validate_composition(const Composition& c, int color_count, int up_color_count) {
  const PathClass cls =
      up_color_count > 0 ? PathClass::colored_dyck(up_color_count) : PathClass::dyck();
  if (Verdict v = validate_path(c.path, cls); !v.ok) return v;
  if (c.path.empty()) return Verdict::fail("empty path has no composition");
  if (c.cuts.empty()) return Verdict::fail("cuts must at least contain the final step index");
  for (std::size_t i = 0; i < c.cuts.size(); ++i) {
    if (i > 0 && c.cuts[i] <= c.cuts[i - 1]) return Verdict::fail("cuts not strictly increasing");
    if (c.cuts[i] >= c.path.size()) return Verdict::fail("cut index out of range");
    if (c.path.level_at(c.cuts[i] + 1) != 0)
      return Verdict::fail("cut not at a return point", c.cuts[i]);
  }
  if (c.cuts.back() != c.path.size() - 1) return Verdict::fail("the ending point must be a cut point");
  const int j = static_cast<int>(c.segment_count());
  if (c.root && (*c.root < 1 || *c.root > j)) return Verdict::fail("root segment index out of range");
  if (color_count > 0) {
    if (!c.segment_colors) return Verdict::fail("missing segment colors");
    if (static_cast<int>(c.segment_colors->size()) != j)
      return Verdict::fail("need one segment color per segment");
    bool uses_first = false;
    for (int col : *c.segment_colors) {
      if (col < 1 || col > color_count) return Verdict::fail("segment color out of range");
      uses_first = uses_first || col == 1;
    }
    if (!uses_first) return Verdict::fail("coloring not t-feasible: color 1 unused");
  } else if (c.segment_colors) {
    return Verdict::fail("unexpected segment colors");
  }
  return Verdict::pass();
}

nlohmann::json composition_to_json(const Composition& c) {
  nlohmann::json j;
  j["path"] = path_to_json(c.path);
  j["cuts"] = c.cuts;
  j["root"] = c.root ? nlohmann::json(*c.root) : nlohmann::json(nullptr);
  j["segment_colors"] = c.segment_colors ? nlohmann::json(*c.segment_colors) : nlohmann::json(nullptr);
  return j;
}

Composition composition_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("path") || !j.contains("cuts"))
    throw std::invalid_argument("composition_from_json: expected {\"path\":..., \"cuts\":[...]}");
  Composition c;
  c.path = path_from_json(j["path"]);
  if (!j["cuts"].is_array()) throw std::invalid_argument("composition_from_json: cuts must be an array");
  for (const auto& e : j["cuts"]) {
    if (!e.is_number_integer() || e.get<long long>() < 0)
      throw std::invalid_argument("composition_from_json: cuts must be nonnegative integers");
    c.cuts.push_back(e.get<std::size_t>());
  }
  if (j.contains("root") && !j["root"].is_null()) {
    if (!j["root"].is_number_integer()) throw std::invalid_argument("composition_from_json: root must be an integer");
    c.root = j["root"].get<int>();
  }
  if (j.contains("segment_colors") && !j["segment_colors"].is_null()) {
    std::vector<int> colors;
    for (const auto& e : j["segment_colors"]) {
      if (!e.is_number_integer()) throw std::invalid_argument("composition_from_json: colors must be integers");
      colors.push_back(e.get<int>());
    }
    c.segment_colors = std::move(colors);
  }
  return c;
}

void for_each_composition(int length, std::optional<int> segments, bool rooted,
                          const std::function<void(const Composition&)>& fn, const EnumLimits& limits) {
  if (length <= 0 || length % 2 != 0)
    throw std::invalid_argument("for_each_composition: length must be positive and even");
  if (segments && (*segments < 1 || 2 * *segments > length))
    throw std::invalid_argument("for_each_composition: segment count out of range");
  std::uint64_t emitted = 0;
  const auto emit = [&](const Composition& c) {
    if (++emitted > limits.cap)
      throw EnumCapError("enumeration cap of " + std::to_string(limits.cap) + " objects exceeded");
    fn(c);
  };
  for_each_path(
      PathClass::dyck(), length,
      [&](const LatticePath& p) {
        std::vector<std::size_t> internal;  // internal return cut indices
        int h = 0;
        for (std::size_t i = 0; i + 1 < p.steps.size(); ++i) {
          h += p.steps[i].dir == Dir::Up ? 1 : -1;
          if (h == 0) internal.push_back(i);
        }
        const std::size_t n_masks = std::size_t{1} << internal.size();
        for (std::size_t mask = 0; mask < n_masks; ++mask) {
          Composition c;
          c.path = p;
          for (std::size_t b = 0; b < internal.size(); ++b)
            if (mask & (std::size_t{1} << b)) c.cuts.push_back(internal[b]);
          c.cuts.push_back(p.steps.size() - 1);
          const int j = static_cast<int>(c.cuts.size());
          if (segments && j != *segments) continue;
          if (!rooted) {
            emit(c);
            continue;
          }
          for (int root = 1; root <= j; ++root) {
            c.root = root;
            emit(c);
          }
        }
      },
      limits);
}

std::vector<Composition> enumerate_compositions(int length, std::optional<int> segments, bool rooted,
                                                const EnumLimits& limits) {
  std::vector<Composition> out;
  for_each_composition(length, segments, rooted, [&](const Composition& c) { out.push_back(c); }, limits);
  return out;
}

std::vector<std::size_t> r_visible_up_steps(const LatticePath& path) {
  const int end = path.end_level();
  if (Verdict v = validate_path(path, PathClass::partial_motzkin(std::max(end, 0))); !v.ok)
    throw std::invalid_argument("r_visible_up_steps: not a partial Motzkin path: " + v.reason);
  std::vector<std::size_t> last_up(static_cast<std::size_t>(std::max(end, 1)), 0);
  std::vector<bool> seen(last_up.size(), false);
  int h = 0;
  for (std::size_t i = 0; i < path.steps.size(); ++i) {
    if (path.steps[i].dir == Dir::Up && h < end) {
      last_up[static_cast<std::size_t>(h)] = i;
      seen[static_cast<std::size_t>(h)] = true;
    }
    h += level_delta(path.steps[i].dir);
  }
  std::vector<std::size_t> out;
  out.reserve(static_cast<std::size_t>(end));
  for (int lvl = 0; lvl < end; ++lvl) {
    // A partial path ending at `end` has an up step leaving every lower level.
    if (!seen[static_cast<std::size_t>(lvl)])
      throw std::logic_error("r_visible_up_steps: missing up step at level " + std::to_string(lvl));
    out.push_back(last_up[static_cast<std::size_t>(lvl)]);
  }
  return out;
}

std::vector<std::size_t> l_visible_down_steps(const LatticePath& path) {
  std::vector<std::size_t> out;
  int h = 0, lowest = 0;
  for (std::size_t i = 0; i < path.steps.size(); ++i) {
    h += level_delta(path.steps[i].dir);
    if (h < lowest) {
      lowest = h;
      out.push_back(i);  // the first step reaching a new negative level is a down step
    }
  }
  return out;
}

Verdict validate_marked_path(const MarkedPartialPath& m) {
  const int end = m.path.end_level();
  if (end < 0) return Verdict::fail("path ends below zero");
  if (Verdict v = validate_path(m.path, PathClass::partial_motzkin(end)); !v.ok) return v;
  for (std::size_t i = 0; i < m.path.steps.size(); ++i) {
    const Step& s = m.path.steps[i];
    if (s.dir == Dir::Horizontal && (s.color < 1 || s.color > 2))
      return Verdict::fail("horizontal color must be 1 or 2", i);
  }
  const std::vector<std::size_t> visible = r_visible_up_steps(m.path);
  std::vector<int> mark_levels;
  for (std::size_t k = 0; k < m.marks.size(); ++k) {
    if (k > 0 && m.marks[k] <= m.marks[k - 1]) return Verdict::fail("marks not strictly increasing");
    auto it = std::find(visible.begin(), visible.end(), m.marks[k]);
    if (it == visible.end()) return Verdict::fail("marked step is not an R-visible up step", m.marks[k]);
    mark_levels.push_back(static_cast<int>(it - visible.begin()));
  }
  if (m.lines.size() != m.marks.size() + 1)
    return Verdict::fail("need exactly one more elevation line than marks");
  for (std::size_t k = 0; k < m.lines.size(); ++k) {
    if (m.lines[k] < 0 || m.lines[k] > end) return Verdict::fail("elevation line outside 0..end level");
    if (k > 0 && m.lines[k] <= m.lines[k - 1]) return Verdict::fail("elevation lines not strictly increasing");
  }
  // One marked step between adjacent lines: y_{k-1} < x_k <= y_k, and the top
  // line above every mark. A mark starting exactly on a line counts as above
  // it, matching the elevation rule that flips only levels strictly below.
  for (std::size_t k = 0; k < m.marks.size(); ++k) {
    const int prev_mark = k == 0 ? -1 : mark_levels[k - 1];
    if (!(prev_mark < m.lines[k] && m.lines[k] <= mark_levels[k]))
      return Verdict::fail("elevation line " + std::to_string(k + 1) + " does not sit between its marks");
  }
  if (!m.marks.empty() && m.lines.back() <= mark_levels.back())
    return Verdict::fail("top elevation line must lie above every marked step");
  return Verdict::pass();
}

void for_each_marked_path(int length, int end_level, int marks,
                          const std::function<void(const MarkedPartialPath&)>& fn,
                          const EnumLimits& limits) {
  if (marks < 0) throw std::invalid_argument("for_each_marked_path: marks must be >= 0");
  std::uint64_t emitted = 0;
  const auto emit = [&](const MarkedPartialPath& m) {
    if (++emitted > limits.cap)
      throw EnumCapError("enumeration cap of " + std::to_string(limits.cap) + " objects exceeded");
    fn(m);
  };
  for_each_h_colored(
      PathClass::partial_motzkin(end_level), length, 2,
      [&](const LatticePath& p) {
        const std::vector<std::size_t> visible = r_visible_up_steps(p);
        const int top = static_cast<int>(visible.size());  // levels 0..top-1 carry R-visible ups
        if (marks > top) return;
        // choose mark levels, then place one line in each admissible gap
        std::vector<int> mark_levels(static_cast<std::size_t>(marks));
        std::vector<int> lines(static_cast<std::size_t>(marks) + 1);
        MarkedPartialPath object;
        object.path = p;
        const auto place_lines = [&](auto&& self, int k) -> void {
          if (k == marks + 1) {
            object.marks.clear();
            for (int lvl : mark_levels) object.marks.push_back(visible[static_cast<std::size_t>(lvl)]);
            object.lines.assign(lines.begin(), lines.end());
            emit(object);
            return;
          }
          const int lo = k == 0 ? -1 : mark_levels[static_cast<std::size_t>(k - 1)];
          const int hi = k == marks ? end_level : mark_levels[static_cast<std::size_t>(k)];
          for (int x = lo + 1; x <= hi; ++x) {
            lines[static_cast<std::size_t>(k)] = x;
            self(self, k + 1);
          }
        };
        const auto choose_marks = [&](auto&& self, int from, int chosen) -> void {
          if (chosen == marks) {
            place_lines(place_lines, 0);
            return;
          }
          for (int lvl = from; lvl <= top - (marks - chosen); ++lvl) {
            mark_levels[static_cast<std::size_t>(chosen)] = lvl;
            self(self, lvl + 1, chosen + 1);
          }
        };
        choose_marks(choose_marks, 0, 0);
      },
      limits);
}

void for_each_colored_composition(int length, int t,
                                  const std::function<void(const Composition&)>& fn,
                                  const EnumLimits& limits) {
  if (t < 2) throw std::invalid_argument("for_each_colored_composition: t must be >= 2");
  const int up_colors = t * t - t;
  std::uint64_t emitted = 0;
  const auto emit = [&](const Composition& c) {
    if (++emitted > limits.cap)
      throw EnumCapError("enumeration cap of " + std::to_string(limits.cap) + " objects exceeded");
    fn(c);
  };
  for_each_composition(
      length, std::nullopt, /*rooted=*/false,
      [&](const Composition& plain) {
        const std::vector<std::size_t> up_positions = colorable_up_steps(plain.path);
        Composition work = plain;
        Emitter paths{[&](const LatticePath& colored) {
                        work.path = colored;
                        const int j = static_cast<int>(work.segment_count());
                        std::vector<int> colors(static_cast<std::size_t>(j), 1);
                        // all segment colorings in 1..t that use color 1
                        for (;;) {
                          if (std::find(colors.begin(), colors.end(), 1) != colors.end()) {
                            work.segment_colors = colors;
                            emit(work);
                          }
                          std::size_t i = colors.size();
                          while (i > 0) {
                            if (colors[i - 1] < t) {
                              ++colors[i - 1];
                              break;
                            }
                            colors[i - 1] = 1;
                            --i;
                          }
                          if (i == 0) break;
                        }
                      },
                      limits.cap};
        LatticePath shape = plain.path;
        expand_colors_at(shape, up_positions, up_colors, paths);
      },
      limits);
}

nlohmann::json marked_path_to_json(const MarkedPartialPath& m) {
  nlohmann::json j;
  j["path"] = path_to_json(m.path);
  j["marks"] = m.marks;
  j["lines"] = m.lines;
  return j;
}

MarkedPartialPath marked_path_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("path") || !j.contains("marks") || !j.contains("lines"))
    throw std::invalid_argument("marked_path_from_json: expected {\"path\":..., \"marks\":[...], \"lines\":[...]}");
  MarkedPartialPath m;
  m.path = path_from_json(j["path"]);
  for (const auto& e : j["marks"]) {
    if (!e.is_number_integer() || e.get<long long>() < 0)
      throw std::invalid_argument("marked_path_from_json: marks must be nonnegative integers");
    m.marks.push_back(e.get<std::size_t>());
  }
  for (const auto& e : j["lines"]) {
    if (!e.is_number_integer()) throw std::invalid_argument("marked_path_from_json: lines must be integers");
    m.lines.push_back(e.get<int>());
  }
  return m;
}

}  // namespace mfp
