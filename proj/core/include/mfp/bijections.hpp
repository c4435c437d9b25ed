#ifndef MFP_BIJECTIONS_HPP_
#define MFP_BIJECTIONS_HPP_

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mfp/paths.hpp"

namespace mfp {

// --- phi: rooted compositions of Dyck paths <-> words over {1,2,3,4} ---
//
// A rooted composition of a Dyck path of length 2i maps to a word of length
// i-1, written as a digit string like "2341". The recursion peels the first
// segment by its last-return decomposition P1 = A U B D:
//   A, B empty          -> letter 1 (root on P1) or 2 (root elsewhere)
//   A nonempty, B empty -> letter 3
//   A empty, B nonempty -> letter 4
//   both nonempty       -> letter 1, root index shifted
std::string phi(const Composition& rooted);

// Total on all words over {1,2,3,4}; phi(phi_inverse(w)) == w.
Composition phi_inverse(std::string_view word);

// --- elevation: partial Motzkin paths with a line <-> free Motzkin paths ---

// Flips the R-visible up steps with initial levels 0..line-1 into down
// steps. `line` must satisfy 0 <= line <= end level; elevate(p, 0) == p.
// The result's weight is down_weight^line times the input's.
LatticePath elevate(const LatticePath& path, int line);

// Flips every L-visible down step back into an up step; returns the partial
// Motzkin path and the number of flips, so that
// elevate(result.first, result.second) reproduces the input.
std::pair<LatticePath, int> elevate_inverse(const LatticePath& path);

// --- multi-elevation: marked partial 2-Motzkin paths <-> free 3-Motzkin ---
//
// Splits the path at its m marked up steps into P_1 U* P_2 U* ... U* P_{m+1},
// turns each marked up step into a dotted horizontal step (color 3), and
// elevates each P_k by the gap between its entry level and the k-th elevation
// line. The image is a free Motzkin path with horizontal colors in {1,2,3}
// and exactly m color-3 steps.
LatticePath multi_elevate(const MarkedPartialPath& marked);

// Splits at the dotted steps, un-elevates each piece, and restores marks and
// elevation lines. Total on free 3-Motzkin paths.
MarkedPartialPath multi_elevate_inverse(const LatticePath& path);

// --- sigma: t-feasibly colored compositions <-> words on t^2+t letters ---

struct SigmaLetter {
  enum class Kind { Alpha, Beta, Gamma, Delta };
  Kind kind = Kind::Delta;
  int index = 0;  // alpha: 1..t, beta: 1..t-1, gamma: 1..t^2-t, delta: 0

  friend bool operator==(const SigmaLetter&, const SigmaLetter&) = default;
};

// A word over the alphabet {alpha_r} u {beta_s} u {gamma_k} u {delta} of
// t^2+t letters, for a fixed t >= 2.
struct SigmaWord {
  int t = 2;
  std::vector<SigmaLetter> letters;

  friend bool operator==(const SigmaWord&, const SigmaWord&) = default;
};

int sigma_alphabet_size(int t);

// Text form: space-separated tokens "a1 b2 g5 d"; the empty word is "".
std::string format_sigma_word(const SigmaWord& word);
SigmaWord parse_sigma_word(std::string_view text, int t);

// Maps a composition of a (t^2-t)-colored Dyck path of length 2i, with a
// t-feasible coloring on the segments, to a word of length i-1. Colors c_k on
// the up steps pair with (c_r, beta_s) through the fixed encoding
// k = (s-1)*t + r.
SigmaWord sigma(const Composition& colored, int t);

// Total on all words; sigma(sigma_inverse(w)) == w.
Composition sigma_inverse(const SigmaWord& word);

}  // namespace mfp

#endif  // MFP_BIJECTIONS_HPP_
