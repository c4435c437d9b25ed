#include "mfp/bijections.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

namespace mfp {

namespace {

const LatticePath kArch{{Step{Dir::Up, 0}, Step{Dir::Down, 0}}};  // "UD"

// Last-return decomposition of a nonempty Dyck path: P = A U B D with A the
// prefix up to the last internal return and B the elevated middle.
std::pair<LatticePath, LatticePath> last_return_split(const LatticePath& p) {
  std::size_t r = 0;
  int h = 0;
  for (std::size_t q = 0; q + 1 < p.size(); ++q) {
    h += p.steps[q].dir == Dir::Up ? 1 : -1;
    if (h == 0) r = q + 1;
  }
  return {p.slice(0, r), p.slice(r + 1, p.size() - 1)};
}

// First-arch decomposition of a nonempty Dyck path: P = U A D B with the
// shown D closing the initial up step.
std::pair<LatticePath, LatticePath> first_arch_split(const LatticePath& p) {
  int h = 0;
  for (std::size_t q = 0; q < p.size(); ++q) {
    h += p.steps[q].dir == Dir::Up ? 1 : -1;
    if (h == 0) return {p.slice(1, q), p.slice(q + 1, p.size())};
  }
  throw std::logic_error("first_arch_split: path never returns to level 0");
}

Composition assemble_composition(const std::vector<LatticePath>& segments, std::optional<int> root,
                                 std::optional<std::vector<int>> colors) {
  Composition c;
  for (const LatticePath& seg : segments) {
    c.path.append(seg);
    c.cuts.push_back(c.path.size() - 1);
  }
  c.root = root;
  c.segment_colors = std::move(colors);
  return c;
}

}  // namespace

std::string phi(const Composition& rooted) {
  if (Verdict v = validate_composition(rooted); !v.ok)
    throw std::invalid_argument("phi: invalid composition: " + v.reason);
  if (!rooted.root) throw std::invalid_argument("phi: composition must carry a root");

  std::vector<LatticePath> segs = rooted.segments();
  int root = *rooted.root;
  std::string out;
  for (std::size_t len = rooted.path.size(); len > 2; len -= 2) {
    const LatticePath& p1 = segs.front();
    if (p1 == kArch) {
      if (root == 1) {
        out.push_back('1');
      } else {
        out.push_back('2');
        --root;
      }
      segs.erase(segs.begin());
      continue;
    }
    auto [a, b] = last_return_split(p1);
    if (!a.empty() && b.empty()) {
      out.push_back('3');  // P1 = Q UD
      segs.front() = std::move(a);
    } else if (a.empty() && !b.empty()) {
      out.push_back('4');  // P1 = U Q D
      segs.front() = std::move(b);
    } else {
      out.push_back('1');  // P1 = Q1 U Q2 D
      segs.front() = std::move(a);
      segs.insert(segs.begin() + 1, std::move(b));
      ++root;
    }
  }
  if (segs.size() != 1 || segs.front() != kArch || root != 1)
    throw std::logic_error("phi: recursion did not terminate at the base composition");
  return out;
}

Composition phi_inverse(std::string_view word) {
  for (char ch : word)
    if (ch < '1' || ch > '4')
      throw std::invalid_argument("phi_inverse: word must use letters 1..4 only");

  std::vector<LatticePath> segs{kArch};
  int root = 1;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    switch (*it) {
      case '2':
        segs.insert(segs.begin(), kArch);
        ++root;
        break;
      case '3':
        segs.front().append(kArch);
        break;
      case '4': {
        LatticePath p1;
        p1.steps.push_back({Dir::Up, 0});
        p1.append(segs.front());
        p1.steps.push_back({Dir::Down, 0});
        segs.front() = std::move(p1);
        break;
      }
      case '1':
        if (root == 1) {
          segs.insert(segs.begin(), kArch);
        } else {
          LatticePath p1 = std::move(segs.front());
          p1.steps.push_back({Dir::Up, 0});
          p1.append(segs[1]);
          p1.steps.push_back({Dir::Down, 0});
          segs.erase(segs.begin(), segs.begin() + 2);
          segs.insert(segs.begin(), std::move(p1));
          root = root == 2 ? 1 : root - 1;
        }
        break;
    }
  }
  return assemble_composition(segs, root, std::nullopt);
}

LatticePath elevate(const LatticePath& path, int line) {
  const std::vector<std::size_t> visible = r_visible_up_steps(path);
  if (line < 0 || line > path.end_level())
    throw std::out_of_range("elevate: elevation line must lie in 0..end level");
  LatticePath out = path;
  for (int lvl = 0; lvl < line; ++lvl) out.steps[visible[static_cast<std::size_t>(lvl)]].dir = Dir::Down;
  return out;
}

std::pair<LatticePath, int> elevate_inverse(const LatticePath& path) {
  const std::vector<std::size_t> exposed = l_visible_down_steps(path);
  LatticePath out = path;
  for (std::size_t i : exposed) out.steps[i].dir = Dir::Up;
  return {std::move(out), static_cast<int>(exposed.size())};
}

LatticePath multi_elevate(const MarkedPartialPath& marked) {
  if (Verdict v = validate_marked_path(marked); !v.ok)
    throw std::invalid_argument("multi_elevate: " + v.reason);
  LatticePath out;
  int prev_mark_level = -1;
  std::size_t begin = 0;
  for (std::size_t k = 0; k <= marked.marks.size(); ++k) {
    const std::size_t seg_end = k < marked.marks.size() ? marked.marks[k] : marked.path.size();
    const LatticePath segment = marked.path.slice(begin, seg_end);
    const int span = marked.lines[k] - prev_mark_level - 1;
    out.append(elevate(segment, span));
    if (k < marked.marks.size()) {
      out.steps.push_back({Dir::Horizontal, 3});  // dotted step
      prev_mark_level = marked.path.level_at(marked.marks[k]);
      begin = marked.marks[k] + 1;
    }
  }
  return out;
}

MarkedPartialPath multi_elevate_inverse(const LatticePath& path) {
  for (std::size_t i = 0; i < path.steps.size(); ++i) {
    const Step& s = path.steps[i];
    if (s.dir == Dir::Horizontal && (s.color < 1 || s.color > 3))
      throw std::invalid_argument("multi_elevate_inverse: horizontal colors must be 1, 2 or 3");
    if (s.dir != Dir::Horizontal && s.color != 0)
      throw std::invalid_argument("multi_elevate_inverse: up and down steps must be uncolored");
  }
  MarkedPartialPath out;
  std::vector<int> spans;
  std::size_t begin = 0;
  for (std::size_t i = 0; i <= path.size(); ++i) {
    const bool dotted = i < path.size() && path.steps[i].dir == Dir::Horizontal && path.steps[i].color == 3;
    if (i < path.size() && !dotted) continue;
    auto [segment, flips] = elevate_inverse(path.slice(begin, i));
    out.path.append(segment);
    spans.push_back(flips);
    if (dotted) {
      out.marks.push_back(out.path.size());
      out.path.steps.push_back({Dir::Up, 0});
      begin = i + 1;
    }
  }
  int prev_mark_level = -1;
  for (std::size_t k = 0; k < spans.size(); ++k) {
    out.lines.push_back(spans[k] + prev_mark_level + 1);
    if (k < out.marks.size()) prev_mark_level = out.path.level_at(out.marks[k]);
  }
  return out;
}

int sigma_alphabet_size(int t) { return t * t + t; }

std::string format_sigma_word(const SigmaWord& word) {
  std::string out;
  for (std::size_t i = 0; i < word.letters.size(); ++i) {
    if (i > 0) out.push_back(' ');
    const SigmaLetter& l = word.letters[i];
    switch (l.kind) {
      case SigmaLetter::Kind::Alpha: out += "a" + std::to_string(l.index); break;
      case SigmaLetter::Kind::Beta: out += "b" + std::to_string(l.index); break;
      case SigmaLetter::Kind::Gamma: out += "g" + std::to_string(l.index); break;
      case SigmaLetter::Kind::Delta: out += "d"; break;
    }
  }
  return out;
}

namespace {

void check_sigma_letter(const SigmaLetter& l, int t) {
  switch (l.kind) {
    case SigmaLetter::Kind::Alpha:
      if (l.index < 1 || l.index > t) throw std::invalid_argument("sigma word: alpha index out of 1..t");
      return;
    case SigmaLetter::Kind::Beta:
      if (l.index < 1 || l.index > t - 1) throw std::invalid_argument("sigma word: beta index out of 1..t-1");
      return;
    case SigmaLetter::Kind::Gamma:
      if (l.index < 1 || l.index > t * t - t)
        throw std::invalid_argument("sigma word: gamma index out of 1..t^2-t");
      return;
    case SigmaLetter::Kind::Delta:
      if (l.index != 0) throw std::invalid_argument("sigma word: delta carries no index");
      return;
  }
}

}  // namespace

SigmaWord parse_sigma_word(std::string_view text, int t) {
  if (t < 2) throw std::invalid_argument("parse_sigma_word: t must be >= 2");
  SigmaWord word{t, {}};
  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    SigmaLetter letter;
    switch (text[i]) {
      case 'a': letter.kind = SigmaLetter::Kind::Alpha; break;
      case 'b': letter.kind = SigmaLetter::Kind::Beta; break;
      case 'g': letter.kind = SigmaLetter::Kind::Gamma; break;
      case 'd': letter.kind = SigmaLetter::Kind::Delta; break;
      default:
        throw std::invalid_argument("parse_sigma_word: unexpected token at position " + std::to_string(i));
    }
    ++i;
    int value = 0;
    bool has_digits = false;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      value = value * 10 + (text[i] - '0');
      if (value > 1'000'000) throw std::invalid_argument("parse_sigma_word: index out of range");
      has_digits = true;
      ++i;
    }
    if (letter.kind == SigmaLetter::Kind::Delta) {
      if (has_digits) throw std::invalid_argument("parse_sigma_word: delta carries no index");
    } else if (!has_digits) {
      throw std::invalid_argument("parse_sigma_word: missing letter index");
    }
    letter.index = value;
    check_sigma_letter(letter, t);
    word.letters.push_back(letter);
  }
  return word;
}

SigmaWord sigma(const Composition& colored, int t) {
  if (t < 2) throw std::invalid_argument("sigma: t must be >= 2");
  const int up_colors = t * t - t;
  if (colored.root) throw std::invalid_argument("sigma: composition must be unrooted");
  if (Verdict v = validate_composition(colored, t, up_colors); !v.ok)
    throw std::invalid_argument("sigma: invalid colored composition: " + v.reason);

  std::vector<LatticePath> segs = colored.segments();
  std::vector<int> colors = *colored.segment_colors;
  const auto feasible_from = [&](std::size_t first) {
    return std::any_of(colors.begin() + static_cast<std::ptrdiff_t>(first), colors.end(),
                       [](int c) { return c == 1; });
  };

  SigmaWord word{t, {}};
  for (std::size_t len = colored.path.size(); len > 2; len -= 2) {
    const LatticePath& p1 = segs.front();
    if (p1 == kArch) {
      if (feasible_from(1)) {  // case 1: the tail keeps a t-feasible coloring
        word.letters.push_back({SigmaLetter::Kind::Alpha, colors.front()});
        segs.erase(segs.begin());
        colors.erase(colors.begin());
      } else {  // case 2: recolor the next segment to c_1
        if (colors.front() != 1) throw std::logic_error("sigma: first color must be 1 when the tail is infeasible");
        word.letters.push_back({SigmaLetter::Kind::Beta, colors[1] - 1});
        segs.erase(segs.begin());
        colors.erase(colors.begin());
        colors.front() = 1;
      }
      continue;
    }
    auto [a, b] = first_arch_split(p1);
    if (a.empty()) {  // case 3: P1 = UD Q
      word.letters.push_back({SigmaLetter::Kind::Delta, 0});
      segs.front() = std::move(b);
    } else if (b.empty()) {  // case 4: P1 = U Q D, the outer up step carries the color
      word.letters.push_back({SigmaLetter::Kind::Gamma, p1.steps.front().color});
      segs.front() = std::move(a);
    } else {  // case 5: P1 = U Q1 D Q2; pair the up color k as (r, beta_s)
      const int k = p1.steps.front().color;
      const int r = (k - 1) % t + 1;
      const int s = (k - 1) / t + 1;
      word.letters.push_back({SigmaLetter::Kind::Beta, s});
      const int p1_color = colors.front();
      segs.front() = std::move(a);
      colors.front() = r;
      segs.insert(segs.begin() + 1, std::move(b));
      colors.insert(colors.begin() + 1, p1_color);
    }
  }
  if (segs.size() != 1 || segs.front() != kArch || colors.front() != 1)
    throw std::logic_error("sigma: recursion did not terminate at the base composition");
  return word;
}

Composition sigma_inverse(const SigmaWord& word) {
  const int t = word.t;
  if (t < 2) throw std::invalid_argument("sigma_inverse: t must be >= 2");
  for (const SigmaLetter& l : word.letters) check_sigma_letter(l, t);

  std::vector<LatticePath> segs{kArch};
  std::vector<int> colors{1};
  const auto feasible_from = [&](std::size_t first) {
    return std::any_of(colors.begin() + static_cast<std::ptrdiff_t>(first), colors.end(),
                       [](int c) { return c == 1; });
  };

  for (auto it = word.letters.rbegin(); it != word.letters.rend(); ++it) {
    switch (it->kind) {
      case SigmaLetter::Kind::Alpha:
        segs.insert(segs.begin(), kArch);
        colors.insert(colors.begin(), it->index);
        break;
      case SigmaLetter::Kind::Delta: {
        LatticePath p1 = kArch;
        p1.append(segs.front());
        segs.front() = std::move(p1);
        break;
      }
      case SigmaLetter::Kind::Gamma: {
        LatticePath p1;
        p1.steps.push_back({Dir::Up, it->index});
        p1.append(segs.front());
        p1.steps.push_back({Dir::Down, 0});
        segs.front() = std::move(p1);
        break;
      }
      case SigmaLetter::Kind::Beta: {
        const int s = it->index;
        if (segs.size() >= 2 && feasible_from(1)) {  // case 5
          const int r = colors.front();
          LatticePath p1;
          p1.steps.push_back({Dir::Up, (s - 1) * t + r});
          p1.append(segs[0]);
          p1.steps.push_back({Dir::Down, 0});
          p1.append(segs[1]);
          const int color = colors[1];
          segs.erase(segs.begin(), segs.begin() + 2);
          colors.erase(colors.begin(), colors.begin() + 2);
          segs.insert(segs.begin(), std::move(p1));
          colors.insert(colors.begin(), color);
        } else {  // case 2
          if (colors.front() != 1) throw std::logic_error("sigma_inverse: expected color 1 on the first segment");
          colors.front() = s + 1;
          segs.insert(segs.begin(), kArch);
          colors.insert(colors.begin(), 1);
        }
        break;
      }
    }
  }
  return assemble_composition(segs, std::nullopt, std::move(colors));
}

}  // namespace mfp
