#pragma once

// Sphere realizability and face structure.
//
// Arc A_j is the circle gap between positions j and j+1 (mod 2n). The
// all-negative-crossing decoration fixes a rotation system: at the crossing of
// a chord with head position h (under pass) and tail position t (over pass),
// the counterclockwise order of the four arc ends is
//
//     A_t out, A_h out, A_{t-1} in, A_{h-1} in.
//
// Encoding: arc end ids are out(j) = 2j, in(j) = 2j+1; dart ids share the same
// space (dart 2j runs along the curve on arc j, dart 2j+1 against it), so a
// dart d arrives at end d^1 and the face-tracing successor is
// next_ccw[d ^ 1]. Faces are the orbits; genus follows from V - E + F.

#include <span>
#include <vector>

#include "sphcurve/word.hpp"

namespace sphcurve {

namespace detail {

struct EmbeddingScratch {
  std::vector<int> head_pos, tail_pos;
  std::vector<int> next_end;
  std::vector<char> seen;
};

inline EmbeddingScratch& embedding_scratch() {
  thread_local EmbeddingScratch s;
  return s;
}

/// Walk every face orbit of a word with dense chord ids 1..n. Calls
/// sink(face_index, dart) along each orbit and returns the face count.
/// The crossing-free circle counts as two (boundaryless) faces.
template <class Sink>
inline int trace_faces(std::span<const Token> toks, Sink&& sink) {
  const int len = static_cast<int>(toks.size());
  if (len == 0) return 2;
  const int n = len / 2;
  auto& ws = embedding_scratch();
  ws.head_pos.assign(n + 1, -1);
  ws.tail_pos.assign(n + 1, -1);
  for (int p = 0; p < len; ++p) {
    const Token& t = toks[p];
    (t.role == Role::head ? ws.head_pos : ws.tail_pos)[t.chord] = p;
  }
  ws.next_end.assign(2 * len, -1);
  for (int c = 1; c <= n; ++c) {
    const int h = ws.head_pos[c], t = ws.tail_pos[c];
    const int ends[4] = {2 * t, 2 * h, 2 * ((t + len - 1) % len) + 1,
                         2 * ((h + len - 1) % len) + 1};
    for (int i = 0; i < 4; ++i) ws.next_end[ends[i]] = ends[(i + 1) % 4];
  }
  ws.seen.assign(2 * len, 0);
  int faces = 0;
  for (int d0 = 0; d0 < 2 * len; ++d0) {
    if (ws.seen[d0]) continue;
    int d = d0;
    do {
      ws.seen[d] = 1;
      sink(faces, d);
      d = ws.next_end[d ^ 1];
    } while (d != d0);
    ++faces;
  }
  return faces;
}

inline int face_count(std::span<const Token> toks) {
  return trace_faces(toks, [](int, int) {});
}

inline int genus_from_faces(int n, int faces) {
  const int doubled = 2 + n - faces;  // 2 - (V - E + F) with V = n, E = 2n
  if (doubled % 2 != 0) throw Error("internal error: odd Euler characteristic");
  return doubled / 2;
}

inline int genus_dense(std::span<const Token> toks) {
  return genus_from_faces(static_cast<int>(toks.size()) / 2, face_count(toks));
}

}  // namespace detail

struct Face {
  std::vector<int> arcs;         // arc indices along the boundary walk
  std::vector<bool> with_curve;  // arc traversed in the curve's direction?
  std::vector<int> corners;      // chord at the turn after arcs[i]

  int degree() const { return static_cast<int>(arcs.size()); }

  /// Every boundary arc runs the same way around the face.
  bool coherent() const {
    for (bool f : with_curve)
      if (f != with_curve.front()) return false;
    return true;
  }
};

struct CombinatorialMap {
  int vertices = 0;
  int edges = 0;
  std::vector<Face> faces;
  int genus = 0;

  int face_count() const { return static_cast<int>(faces.size()); }
};

inline CombinatorialMap build_map(const Word& w) {
  const Word c = canonicalize(w);
  const auto& toks = c.tokens();
  const int len = c.size();
  CombinatorialMap map;
  map.vertices = c.chords();
  map.edges = len;
  if (len == 0) {
    map.faces.resize(2);
    return map;
  }
  const int f = detail::trace_faces(std::span<const Token>(toks), [&](int face, int d) {
    if (static_cast<int>(map.faces.size()) <= face) map.faces.emplace_back();
    Face& fc = map.faces[static_cast<std::size_t>(face)];
    const int arc = d >> 1;
    const bool fwd = (d & 1) == 0;
    fc.arcs.push_back(arc);
    fc.with_curve.push_back(fwd);
    const int arrive_pos = fwd ? (arc + 1) % len : arc;
    fc.corners.push_back(toks[static_cast<std::size_t>(arrive_pos)].chord);
  });
  map.genus = detail::genus_from_faces(map.vertices, f);
  return map;
}

inline int genus(const Word& w) {
  return detail::genus_dense(std::span<const Token>(detail::relabeled(w.tokens())));
}

inline bool realizable(const Word& w) { return genus(w) == 0; }

inline std::vector<Face> faces(const Word& w) {
  CombinatorialMap map = build_map(w);
  if (map.genus != 0)
    throw NonRealizableError("word has genus " + std::to_string(map.genus));
  return std::move(map.faces);
}

struct ChordBalance {
  int chord = 0;
  int left_to_right = 0;
  int right_to_left = 0;

  int interlaced() const { return left_to_right + right_to_left; }
};

struct BalanceReport {
  std::vector<ChordBalance> chords;

  bool balanced() const {
    for (const ChordBalance& c : chords)
      if (c.left_to_right != c.right_to_left) return false;
    return true;
  }
};

/// Crossing-direction census per chord. Orient chord X tail-to-head; an
/// interlaced chord crosses it left-to-right exactly when its tail lies on the
/// circle arc from tail(X) to head(X) in reading direction.
inline BalanceReport balance(const Word& w) {
  struct Entry {
    int id, head, tail;
  };
  std::vector<Entry> entries;
  {
    std::unordered_map<int, Entry> pos;
    for (int p = 0; p < w.size(); ++p) {
      const Token& t = w[p];
      Entry& e = pos.try_emplace(t.chord, Entry{t.chord, -1, -1}).first->second;
      (t.role == Role::head ? e.head : e.tail) = p;
    }
    for (auto& [id, e] : pos) entries.push_back(e);
    std::sort(entries.begin(), entries.end(),
              [](const Entry& a, const Entry& b) { return a.id < b.id; });
  }
  const int len = w.size();
  BalanceReport report;
  std::vector<char> inside(static_cast<std::size_t>(len), 0);
  for (const Entry& x : entries) {
    std::fill(inside.begin(), inside.end(), 0);
    for (int p = (x.tail + 1) % len; p != x.head; p = (p + 1) % len) inside[p] = 1;
    ChordBalance cb{x.id, 0, 0};
    for (const Entry& y : entries) {
      if (y.id == x.id) continue;
      const int hits = inside[y.head] + inside[y.tail];
      if (hits != 1) continue;  // not interlaced with x
      if (inside[y.tail])
        ++cb.left_to_right;
      else
        ++cb.right_to_left;
    }
    report.chords.push_back(cb);
  }
  return report;
}

/// All head/tail assignments of an undecorated pairing that embed in the
/// sphere. Input is an unsigned Gauss sequence (each id exactly twice).
inline std::vector<Word> genus_zero_decorations(std::span<const int> pairing) {
  std::unordered_map<int, int> counts;
  for (int id : pairing) {
    if (id < 1) throw DomainError("pairing ids must be positive");
    ++counts[id];
  }
  for (const auto& [id, c] : counts)
    if (c != 2) throw DomainError("id " + std::to_string(id) + " does not appear twice");
  const int n = static_cast<int>(counts.size());
  if (n > 24) throw DomainError("decoration search supports at most 24 chords");

  std::vector<int> first_occurrence;  // ids in first-seen order
  {
    std::unordered_map<int, bool> seen;
    for (int id : pairing)
      if (!seen[id]) {
        seen[id] = true;
        first_occurrence.push_back(id);
      }
  }
  std::unordered_map<int, int> bit;
  for (int i = 0; i < n; ++i) bit[first_occurrence[static_cast<std::size_t>(i)]] = i;

  std::vector<Word> out;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    std::vector<Token> toks;
    toks.reserve(pairing.size());
    std::unordered_map<int, bool> opened;
    for (int id : pairing) {
      const bool first = !opened[id];
      opened[id] = true;
      const Role first_role = (mask >> bit[id]) & 1 ? Role::tail : Role::head;
      toks.push_back(Token{id, first ? first_role : opposite(first_role)});
    }
    std::vector<Token> dense = detail::relabeled(toks);
    if (detail::genus_dense(dense) == 0) out.push_back(Word(std::move(dense)));
  }
  return out;
}

}  // namespace sphcurve
