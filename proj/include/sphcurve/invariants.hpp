#pragma once

// Counting invariants of a based decorated word: the four interlaced
// two-arrow pattern counts, their move-invariant combinations, and the
// Seifert circle count.

#include <array>
#include <span>
#include <string>
#include <vector>

#include "sphcurve/embedding.hpp"
#include "sphcurve/word.hpp"

namespace sphcurve {

// The four base placements of the unique interlaced two-arrow diagram.
inline const Word& pattern_u() {
  static const Word w = Word::parse("1 -2 -1 2");
  return w;
}
inline const Word& pattern_b() {
  static const Word w = Word::parse("-1 2 1 -2");
  return w;
}
inline const Word& pattern_l() {
  static const Word w = Word::parse("-1 -2 1 2");
  return w;
}
inline const Word& pattern_r() {
  static const Word w = Word::parse("1 2 -1 -2");
  return w;
}

struct PatternCounts {
  long u = 0, b = 0, l = 0, r = 0;

  long lr() const { return l + r; }
  long x() const { return u + b + l + r; }
};

namespace detail {

/// Which of the four patterns an interlaced pair spans, read off the role
/// sequence at the pair's four positions in circle order.
enum class PairPattern { none, u, b, l, r };

inline PairPattern classify_roles(Role r0, Role r1, Role r2, Role r3) {
  const bool h0 = r0 == Role::head, h1 = r1 == Role::head;
  const bool h2 = r2 == Role::head, h3 = r3 == Role::head;
  if (h0 && !h1 && !h2 && h3) return PairPattern::u;
  if (!h0 && h1 && h2 && !h3) return PairPattern::b;
  if (!h0 && !h1 && h2 && h3) return PairPattern::l;
  if (h0 && h1 && !h2 && !h3) return PairPattern::r;
  return PairPattern::none;
}

}  // namespace detail

/// Count every interlaced chord pair by pattern in one pass.
inline PatternCounts pattern_counts(const Word& w) {
  struct Pos {
    int first = -1, second = -1;
  };
  std::unordered_map<int, Pos> where;
  for (int p = 0; p < w.size(); ++p) {
    Pos& e = where[w[p].chord];
    (e.first < 0 ? e.first : e.second) = p;
  }
  std::vector<Pos> pairs;
  pairs.reserve(where.size());
  for (const auto& [id, e] : where) pairs.push_back(e);

  PatternCounts counts;
  const auto& toks = w.tokens();
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    for (std::size_t j = i + 1; j < pairs.size(); ++j) {
      const Pos a = pairs[i], b = pairs[j];
      const bool interlaced = (a.first < b.first && b.first < a.second && a.second < b.second) ||
                              (b.first < a.first && a.first < b.second && b.second < a.second);
      if (!interlaced) continue;
      std::array<int, 4> p{a.first, b.first, a.second, b.second};
      std::sort(p.begin(), p.end());
      switch (detail::classify_roles(toks[p[0]].role, toks[p[1]].role, toks[p[2]].role,
                                     toks[p[3]].role)) {
        case detail::PairPattern::u: ++counts.u; break;
        case detail::PairPattern::b: ++counts.b; break;
        case detail::PairPattern::l: ++counts.l; break;
        case detail::PairPattern::r: ++counts.r; break;
        case detail::PairPattern::none: break;
      }
    }
  }
  return counts;
}

/// Number of chord subsets of w whose based sub-diagram is isomorphic to
/// `pattern`. Generic over the pattern size k; cost O(C(n,k) * k).
inline long count_pattern(const Word& w, const Word& pattern) {
  const int k = pattern.chords();
  const Word target = canonicalize(pattern);
  const std::vector<int> ids = w.chord_ids();
  const int n = static_cast<int>(ids.size());
  if (k > n) return 0;
  std::vector<int> pick(static_cast<std::size_t>(k));
  long hits = 0;
  // lexicographic k-subsets of ids
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    for (int i = 0; i < k; ++i) pick[i] = ids[static_cast<std::size_t>(idx[i])];
    if (subword(w, std::span<const int>(pick)) == target) ++hits;
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return hits;
}

/// Seifert circle count: smooth every crossing respecting orientation and
/// count the resulting cycles of arcs. Roles do not enter.
inline int seifert_count(const Word& w) {
  const int len = w.size();
  if (len == 0) return 1;
  const std::vector<Token> dense = detail::relabeled(w.tokens());
  const int n = len / 2;
  std::vector<int> first(static_cast<std::size_t>(n + 1), -1);
  std::vector<int> partner(static_cast<std::size_t>(len), -1);
  for (int p = 0; p < len; ++p) {
    int& f = first[dense[static_cast<std::size_t>(p)].chord];
    if (f < 0) {
      f = p;
    } else {
      partner[static_cast<std::size_t>(p)] = f;
      partner[static_cast<std::size_t>(f)] = p;
    }
  }
  std::vector<int> succ(static_cast<std::size_t>(len));
  for (int j = 0; j < len; ++j) succ[static_cast<std::size_t>((j + len - 1) % len)] = partner[static_cast<std::size_t>(j)];
  std::vector<char> seen(static_cast<std::size_t>(len), 0);
  int cycles = 0;
  for (int a = 0; a < len; ++a) {
    if (seen[static_cast<std::size_t>(a)]) continue;
    for (int b = a; !seen[static_cast<std::size_t>(b)]; b = succ[static_cast<std::size_t>(b)]) seen[static_cast<std::size_t>(b)] = 1;
    ++cycles;
  }
  return cycles;
}

struct InvariantVector {
  int n = 0;  // double points, c(P)
  long u = 0, b = 0, l = 0, r = 0;
  long lr = 0;      // l + r
  long x = 0;       // u + b + l + r
  int s = 1;        // Seifert circles
  long kappa = 1;   // s - n
  long inv_s3 = 0;  // lr - b
  long inv_s2 = 0;  // u - lr + b
  long inv_w3 = 0;  // u
  long mu = 1;      // 2 * inv_s2 + kappa
  bool realizable = true;

  friend bool operator==(const InvariantVector&, const InvariantVector&) = default;
};

inline InvariantVector invariant_vector(const Word& w) {
  InvariantVector v;
  const PatternCounts pc = pattern_counts(w);
  v.n = w.chords();
  v.u = pc.u;
  v.b = pc.b;
  v.l = pc.l;
  v.r = pc.r;
  v.lr = pc.lr();
  v.x = pc.x();
  v.s = seifert_count(w);
  v.kappa = v.s - v.n;
  v.inv_s3 = v.lr - v.b;
  v.inv_s2 = v.u - v.lr + v.b;
  v.inv_w3 = v.u;
  v.mu = 2 * v.inv_s2 + v.kappa;
  v.realizable = realizable(w);
  return v;
}

/// The value of J+/2 + St on a spherical curve.
inline long arnold_alias(const Word& w) {
  if (!realizable(w)) throw NonRealizableError("arnold alias needs a genus-0 word");
  const PatternCounts pc = pattern_counts(w);
  return pc.u - pc.lr() + pc.b;
}

/// True when u, b and l+r each take one value over every base rotation and
/// both orientations. Meaningful for genus-0 words; unrestricted on others so
/// counterexamples stay observable.
inline bool base_orientation_independent(const Word& w) {
  const auto probe = [](const Word& v) {
    const PatternCounts pc = pattern_counts(v);
    return std::array<long, 3>{pc.u, pc.b, pc.lr()};
  };
  const auto want = probe(w);
  const int len = std::max(w.size(), 1);
  for (int orient = 0; orient < 2; ++orient) {
    const std::vector<Token> base =
        orient == 0 ? w.tokens() : detail::reversed(w.tokens());
    for (int k = 0; k < len; ++k)
      if (probe(Word(detail::rotated(base, k))) != want) return false;
  }
  return true;
}

}  // namespace sphcurve
