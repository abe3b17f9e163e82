#pragma once

// Reidemeister moves on decorated words: generation of valid application
// sites, classification into strong/weak variants, per-move invariant deltas
// and breadth-first reachability with invariant-separation certificates.

#include <deque>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "sphcurve/embedding.hpp"
#include "sphcurve/invariants.hpp"
#include "sphcurve/word.hpp"

namespace sphcurve {

enum class MoveKind { r1_add, r1_del, s2_add, s2_del, w2_add, w2_del, s3, w3 };

/// Strong triangles are the coherent ones. Calibrated empirically: over the
/// full n <= 5 corpus, coherent triangle moves shift each of
/// u, b, l+r by +-1 (the strong signature) and incoherent ones shift only l+r
/// (the weak signature).
inline constexpr bool kStrongTriangleCoherent = true;

inline const char* kind_name(MoveKind k) {
  switch (k) {
    case MoveKind::r1_add: return "r1_add";
    case MoveKind::r1_del: return "r1_del";
    case MoveKind::s2_add: return "s2_add";
    case MoveKind::s2_del: return "s2_del";
    case MoveKind::w2_add: return "w2_add";
    case MoveKind::w2_del: return "w2_del";
    case MoveKind::s3: return "s3";
    case MoveKind::w3: return "w3";
  }
  return "?";
}

struct MoveInstance {
  MoveKind kind = MoveKind::r1_add;
  std::vector<int> site;  // gaps for additions, chords for deletions, arcs for triangles
  Word source;            // canonical word the instance was generated from
  Word result;            // canonical, realizable
  std::string label;      // 1a, 1b, s2a, s2b, w2a, w2b, s3a/s3b, w3a/w3b
};

namespace detail {

inline std::string move_label(MoveKind k, long delta_x) {
  switch (k) {
    case MoveKind::r1_add: return "1a";
    case MoveKind::r1_del: return "1b";
    case MoveKind::s2_add: return "s2a";
    case MoveKind::s2_del: return "s2b";
    case MoveKind::w2_add: return "w2a";
    case MoveKind::w2_del: return "w2b";
    case MoveKind::s3: return delta_x > 0 ? "s3a" : "s3b";
    case MoveKind::w3: return delta_x > 0 ? "w3a" : "w3b";
  }
  return "?";
}

inline bool triangle_is_strong(const Face& f) {
  return f.coherent() == kStrongTriangleCoherent;
}

}  // namespace detail

/// Every validity-checked application site of one move kind. Results are
/// canonical and realizable; symmetric duplicates collapse by result.
inline std::vector<MoveInstance> enumerate_moves(const Word& w, MoveKind kind) {
  const Word src = canonicalize(w);
  const CombinatorialMap map = build_map(src);
  if (map.genus != 0) throw NonRealizableError("moves are generated on genus-0 words only");

  const auto& toks = src.tokens();
  const int len = src.size();
  const int n = src.chords();
  const long src_x = pattern_counts(src).x();

  std::vector<MoveInstance> out;
  std::set<std::string> seen;
  const auto emit = [&](std::vector<int> site, std::vector<Token> raw) {
    Word result(detail::relabeled(raw));
    if (genus(result) != 0) return;
    if (!seen.insert(result.str()).second) return;
    const long dx = pattern_counts(result).x() - src_x;
    out.push_back(MoveInstance{kind, std::move(site), src, std::move(result),
                               detail::move_label(kind, dx)});
  };

  const auto insert_blocks = [&](int a, int b, std::span<const Token> block_a,
                                 std::span<const Token> block_b) {
    std::vector<Token> raw;
    raw.reserve(toks.size() + block_a.size() + block_b.size());
    raw.insert(raw.end(), toks.begin(), toks.begin() + a);
    raw.insert(raw.end(), block_a.begin(), block_a.end());
    raw.insert(raw.end(), toks.begin() + a, toks.begin() + b);
    raw.insert(raw.end(), block_b.begin(), block_b.end());
    raw.insert(raw.end(), toks.begin() + b, toks.end());
    return raw;
  };

  const int j = n + 1, k = n + 2;  // fresh chord ids

  switch (kind) {
    case MoveKind::r1_add: {
      for (int g = 0; g <= len; ++g)
        for (int variant = 0; variant < 2; ++variant) {
          const Role first = variant == 0 ? Role::head : Role::tail;
          std::vector<Token> raw(toks);
          raw.insert(raw.begin() + g, {Token{j, first}, Token{j, opposite(first)}});
          emit({g, variant}, std::move(raw));
        }
      break;
    }
    case MoveKind::r1_del: {
      for (int c = 1; c <= n; ++c) {
        int p = -1, q = -1;
        for (int i = 0; i < len; ++i)
          if (toks[static_cast<std::size_t>(i)].chord == c) (p < 0 ? p : q) = i;
        const bool adjacent = q == p + 1 || (p == 0 && q == len - 1);
        if (!adjacent) continue;
        std::vector<Token> raw;
        for (int i = 0; i < len; ++i)
          if (toks[static_cast<std::size_t>(i)].chord != c)
            raw.push_back(toks[static_cast<std::size_t>(i)]);
        emit({c}, std::move(raw));
      }
      break;
    }
    case MoveKind::s2_add:
    case MoveKind::w2_add: {
      for (int a = 0; a <= len; ++a)
        for (int b = a; b <= len; ++b)
          for (int variant = 0; variant < 2; ++variant) {
            std::vector<Token> block_a, block_b;
            if (kind == MoveKind::s2_add) {
              // nested pair, one head per strand
              block_a = {Token{j, Role::head}, Token{k, Role::tail}};
              block_b = {Token{k, Role::head}, Token{j, Role::tail}};
            } else {
              // interlaced pair, one head per strand
              block_a = {Token{j, Role::tail}, Token{k, Role::head}};
              block_b = {Token{j, Role::head}, Token{k, Role::tail}};
            }
            if (variant == 1)
              for (auto* blk : {&block_a, &block_b})
                for (Token& t : *blk) t.role = opposite(t.role);
            emit({a, b, variant}, insert_blocks(a, b, block_a, block_b));
          }
      break;
    }
    case MoveKind::s2_del:
    case MoveKind::w2_del: {
      for (const Face& f : map.faces) {
        if (f.degree() != 2) continue;
        const int c1 = f.corners[0], c2 = f.corners[1];
        if (c1 == c2) continue;
        const bool strong = f.coherent();
        if ((kind == MoveKind::s2_del) != strong) continue;
        std::vector<Token> raw;
        for (const Token& t : toks)
          if (t.chord != c1 && t.chord != c2) raw.push_back(t);
        emit({std::min(c1, c2), std::max(c1, c2)}, std::move(raw));
      }
      break;
    }
    case MoveKind::s3:
    case MoveKind::w3: {
      for (const Face& f : map.faces) {
        if (f.degree() != 3) continue;
        if (f.corners[0] == f.corners[1] || f.corners[1] == f.corners[2] ||
            f.corners[0] == f.corners[2])
          continue;
        if (f.arcs[0] == f.arcs[1] || f.arcs[1] == f.arcs[2] || f.arcs[0] == f.arcs[2]) continue;
        if ((kind == MoveKind::s3) != detail::triangle_is_strong(f)) continue;
        std::vector<Token> raw(toks);
        for (int arc : f.arcs) std::swap(raw[static_cast<std::size_t>(arc)],
                                         raw[static_cast<std::size_t>((arc + 1) % len)]);
        std::vector<int> site(f.arcs.begin(), f.arcs.end());
        std::sort(site.begin(), site.end());
        emit(std::move(site), std::move(raw));
      }
      break;
    }
  }
  return out;
}

/// Replay an instance; rejects instances generated from another word.
inline Word apply_move(const Word& w, const MoveInstance& m) {
  if (canonicalize(w) != m.source) throw DomainError("stale move instance");
  return m.result;
}

/// Field-by-field invariant differences, result minus source.
inline std::map<std::string, long> move_delta(const Word& w, const MoveInstance& m) {
  const InvariantVector before = invariant_vector(canonicalize(w));
  const InvariantVector after = invariant_vector(m.result);
  std::map<std::string, long> d;
  d["n"] = after.n - before.n;
  d["c"] = after.n - before.n;
  d["u"] = after.u - before.u;
  d["b"] = after.b - before.b;
  d["l"] = after.l - before.l;
  d["r"] = after.r - before.r;
  d["lr"] = after.lr - before.lr;
  d["x"] = after.x - before.x;
  d["s"] = after.s - before.s;
  d["kappa"] = after.kappa - before.kappa;
  d["inv_s3"] = after.inv_s3 - before.inv_s3;
  d["inv_s2"] = after.inv_s2 - before.inv_s2;
  d["inv_w3"] = after.inv_w3 - before.inv_w3;
  d["mu"] = after.mu - before.mu;
  return d;
}

/// Quantities known to survive a move family, by name. These back the
/// impossibility certificates of the search.
inline const std::vector<std::string>& preserved_invariants(MoveKind k) {
  static const std::vector<std::string> r1 = {"b",  "lr",     "x",      "x_mod3", "x_mod4",
                                              "kappa", "mu", "inv_s3", "inv_s2", "inv_w3"};
  static const std::vector<std::string> s2 = {"inv_s2", "x_mod4"};
  static const std::vector<std::string> w2 = {"mu", "s"};
  static const std::vector<std::string> s3 = {"inv_s3", "x_mod3"};
  static const std::vector<std::string> w3 = {"inv_w3", "b", "s", "kappa"};
  switch (k) {
    case MoveKind::r1_add:
    case MoveKind::r1_del: return r1;
    case MoveKind::s2_add:
    case MoveKind::s2_del: return s2;
    case MoveKind::w2_add:
    case MoveKind::w2_del: return w2;
    case MoveKind::s3: return s3;
    case MoveKind::w3: return w3;
  }
  throw DomainError("unknown move kind");
}

inline long named_invariant(const Word& w, const std::string& name) {
  const InvariantVector v = invariant_vector(w);
  if (name == "u") return v.u;
  if (name == "b") return v.b;
  if (name == "lr") return v.lr;
  if (name == "x") return v.x;
  if (name == "s") return v.s;
  if (name == "kappa") return v.kappa;
  if (name == "mu") return v.mu;
  if (name == "inv_s3") return v.inv_s3;
  if (name == "inv_s2") return v.inv_s2;
  if (name == "inv_w3") return v.inv_w3;
  if (name == "x_mod3") return ((v.x % 3) + 3) % 3;
  if (name == "x_mod4") return ((v.x % 4) + 4) % 4;
  throw DomainError("unknown invariant name " + name);
}

/// Invariants preserved by every family in the set, headline combinations
/// first so certificates cite the strongest name.
inline std::vector<std::string> shared_preserved(std::span<const MoveKind> kinds) {
  if (kinds.empty()) return {};
  std::vector<std::string> shared = preserved_invariants(kinds.front());
  for (MoveKind k : kinds.subspan(1)) {
    const auto& keep = preserved_invariants(k);
    std::erase_if(shared, [&](const std::string& name) {
      return std::find(keep.begin(), keep.end(), name) == keep.end();
    });
  }
  static const std::vector<std::string> priority = {"inv_s3", "inv_s2", "inv_w3", "mu",
                                                    "kappa",  "s",      "b",      "lr",
                                                    "x",      "x_mod3", "x_mod4"};
  std::sort(shared.begin(), shared.end(), [](const std::string& a, const std::string& b) {
    const auto rank = [](const std::string& n) {
      return std::find(priority.begin(), priority.end(), n) - priority.begin();
    };
    return rank(a) < rank(b);
  });
  return shared;
}

enum class SearchStatus { found, separated, exhausted };

struct SearchStep {
  std::string label;
  Word word;  // curve key reached after the step
};

struct SearchResult {
  SearchStatus status = SearchStatus::exhausted;
  std::vector<SearchStep> path;       // found: moves from source to target
  std::string separating_invariant;   // separated: witness name
  long source_value = 0, target_value = 0;
  long explored = 0;                  // states expanded
  bool frontier_exhausted = false;    // closure complete within the bounds
};

/// Shortest move sequence between the curves of w1 and w2 using the listed
/// move kinds, searched over curve keys. Words larger than
/// max_crossings are never entered; the search stops after max_steps levels.
inline SearchResult bfs_reachable(const Word& w1, const Word& w2,
                                  std::span<const MoveKind> kinds, int max_crossings,
                                  int max_steps) {
  if (!realizable(w1) || !realizable(w2))
    throw NonRealizableError("search endpoints must be genus-0 words");

  SearchResult res;
  for (const std::string& name : shared_preserved(kinds)) {
    const long a = named_invariant(w1, name), b = named_invariant(w2, name);
    if (a != b) {
      res.status = SearchStatus::separated;
      res.separating_invariant = name;
      res.source_value = a;
      res.target_value = b;
      return res;
    }
  }

  const Word start = curve_key(w1);
  const Word goal = curve_key(w2);
  if (start == goal) {
    res.status = SearchStatus::found;
    return res;
  }

  struct Edge {
    std::optional<std::string> parent;
    std::string label;
    Word word;
  };
  std::unordered_map<std::string, Edge> visited;
  visited.emplace(start.str(), Edge{std::nullopt, "", start});
  std::deque<std::pair<Word, int>> queue;
  queue.emplace_back(start, 0);

  while (!queue.empty()) {
    auto [state, depth] = std::move(queue.front());
    queue.pop_front();
    if (depth >= max_steps) {
      res.frontier_exhausted = false;
      res.status = SearchStatus::exhausted;
      return res;
    }
    ++res.explored;
    for (MoveKind k : kinds) {
      for (const MoveInstance& m : enumerate_moves(state, k)) {
        if (m.result.chords() > max_crossings) continue;
        Word key = curve_key(m.result);
        const std::string key_str = key.str();
        if (visited.contains(key_str)) continue;
        visited.emplace(key_str, Edge{state.str(), m.label, key});
        if (key == goal) {
          std::vector<SearchStep> path;
          for (std::string at = key_str;;) {
            const Edge& e = visited.at(at);
            if (!e.parent) break;
            path.push_back(SearchStep{e.label, e.word});
            at = *e.parent;
          }
          std::reverse(path.begin(), path.end());
          res.status = SearchStatus::found;
          res.path = std::move(path);
          return res;
        }
        queue.emplace_back(std::move(key), depth + 1);
      }
    }
  }
  res.status = SearchStatus::exhausted;
  res.frontier_exhausted = true;
  return res;
}

}  // namespace sphcurve
