#pragma once

// Exhaustive enumeration of spherical curves up to a crossing bound, with
// primality and 1-gon filters and table naming.
//
// Two independent strategies exist and must agree: a depth-first generation
// of decorated words filtered to genus 0, and the closure of the crossing-free
// circle under all moves. The first is the workhorse; the second is the
// cross-check oracle.

#include <atomic>
#include <deque>
#include <functional>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "sphcurve/embedding.hpp"
#include "sphcurve/invariants.hpp"
#include "sphcurve/moves.hpp"
#include "sphcurve/rolfsen.hpp"
#include "sphcurve/word.hpp"

namespace sphcurve {

/// No chord has its two tokens cyclically adjacent (1-gon-free).
inline bool is_reduced(const Word& w) {
  const int len = w.size();
  for (int i = 0; i < len; ++i)
    if (w[i].chord == w[(i + 1) % len].chord) return false;
  return true;
}

/// A word splits exactly when some proper nonempty cyclic interval is closed
/// under the chord pairing. The empty curve is neither prime nor composite.
inline bool is_prime(const Word& w) {
  const int len = w.size();
  if (len == 0) return false;
  for (int start = 0; start < len; ++start) {
    std::vector<char> in(static_cast<std::size_t>(len), 0);
    for (int length = 1; length < len; ++length) {
      in[static_cast<std::size_t>((start + length - 1) % len)] = 1;
      if (length % 2 != 0) continue;
      bool closed = true;
      std::unordered_map<int, int> half;
      for (int i = 0; i < len && closed; ++i) {
        const int c = w[i].chord;
        if (in[static_cast<std::size_t>(i)]) ++half[c];
      }
      for (const auto& [c, cnt] : half)
        if (cnt == 1) closed = false;
      if (closed && !half.empty() && static_cast<int>(2 * half.size()) < len) return false;
    }
  }
  return true;
}

namespace detail {

/// Balanced crossing-direction census on dense ids; a cheap necessary
/// condition for genus 0 that rejects most leaves before face tracing.
inline bool balanced_dense(std::span<const Token> toks) {
  const int len = static_cast<int>(toks.size());
  const int n = len / 2;
  auto& ws = embedding_scratch();
  ws.head_pos.assign(n + 1, -1);
  ws.tail_pos.assign(n + 1, -1);
  for (int p = 0; p < len; ++p)
    (toks[static_cast<std::size_t>(p)].role == Role::head ? ws.head_pos
                                                          : ws.tail_pos)[toks[static_cast<std::size_t>(p)].chord] = p;
  ws.seen.assign(static_cast<std::size_t>(len), 0);
  for (int c = 1; c <= n; ++c) {
    const int h = ws.head_pos[c], t = ws.tail_pos[c];
    std::fill(ws.seen.begin(), ws.seen.end(), 0);
    for (int p = (t + 1) % len; p != h; p = (p + 1) % len) ws.seen[static_cast<std::size_t>(p)] = 1;
    int l2r = 0, r2l = 0;
    for (int d = 1; d <= n; ++d) {
      if (d == c) continue;
      const int hits = ws.seen[static_cast<std::size_t>(ws.head_pos[d])] +
                       ws.seen[static_cast<std::size_t>(ws.tail_pos[d])];
      if (hits != 1) continue;
      if (ws.seen[static_cast<std::size_t>(ws.tail_pos[d])])
        ++l2r;
      else
        ++r2l;
    }
    if (l2r != r2l) return false;
  }
  return true;
}

/// Is the word its own curve key? Compares every rotation of both
/// orientations and both mirrorings, relabeled on the fly, with early exit.
inline bool is_curve_key(std::span<const Token> toks) {
  const int len = static_cast<int>(toks.size());
  if (len == 0) return true;
  const int n = len / 2;
  std::vector<int> ren(static_cast<std::size_t>(n + 1));
  std::vector<Token> rev(toks.rbegin(), toks.rend());
  for (int variant = 0; variant < 4; ++variant) {
    const Token* seq = variant & 1 ? rev.data() : toks.data();
    const bool flip = variant & 2;
    for (int start = 0; start < len; ++start) {
      if (variant == 0 && start == 0) continue;
      std::fill(ren.begin(), ren.end(), 0);
      int next = 1;
      for (int i = 0; i < len; ++i) {
        const Token& cand = seq[(start + i) % len];
        int& label = ren[static_cast<std::size_t>(cand.chord)];
        if (label == 0) label = next++;
        const Token mapped{label, flip ? opposite(cand.role) : cand.role};
        const Token& own = toks[static_cast<std::size_t>(i)];
        if (mapped < own) return false;
        if (own < mapped) break;
      }
    }
  }
  return true;
}

struct DfsState {
  std::vector<Token> toks;
  std::vector<int> open;         // ids opened, not yet closed
  std::vector<Role> first_role;  // index = chord id
  int used = 0;
};

template <class Leaf>
void dfs_words(DfsState& st, int max_n, bool heads_only_start, const Leaf& leaf) {
  const int len = static_cast<int>(st.toks.size());
  if (st.open.empty() && len > 0) leaf(std::span<const Token>(st.toks));
  if (len >= 2 * max_n) return;
  for (std::size_t i = 0; i < st.open.size(); ++i) {
    const int id = st.open[i];
    st.open.erase(st.open.begin() + static_cast<std::ptrdiff_t>(i));
    st.toks.push_back(Token{id, opposite(st.first_role[static_cast<std::size_t>(id)])});
    dfs_words(st, max_n, heads_only_start, leaf);
    st.toks.pop_back();
    st.open.insert(st.open.begin() + static_cast<std::ptrdiff_t>(i), id);
  }
  if (st.used < max_n &&
      len + 2 + static_cast<int>(st.open.size()) <= 2 * max_n) {
    const int id = st.used + 1;
    for (int v = 0; v < 2; ++v) {
      const Role role = v == 0 ? Role::head : Role::tail;
      if (len == 0 && heads_only_start && role == Role::tail) continue;
      if (static_cast<int>(st.first_role.size()) <= id) st.first_role.resize(static_cast<std::size_t>(id) + 1);
      st.first_role[static_cast<std::size_t>(id)] = role;
      st.open.push_back(id);
      st.toks.push_back(Token{id, role});
      ++st.used;
      dfs_words(st, max_n, heads_only_start, leaf);
      --st.used;
      st.toks.pop_back();
      st.open.pop_back();
    }
  }
}

/// First pass for parallel runs: emit closed words above the stem depth is
/// left to the workers; states at exactly stem_len are captured.
template <class Leaf>
void dfs_stems(DfsState& st, int max_n, bool heads_only_start, int stem_len,
               std::vector<DfsState>& stems, const Leaf& leaf) {
  const int len = static_cast<int>(st.toks.size());
  if (len == stem_len) {
    stems.push_back(st);
    return;
  }
  if (st.open.empty() && len > 0) leaf(std::span<const Token>(st.toks));
  if (len >= 2 * max_n) return;
  for (std::size_t i = 0; i < st.open.size(); ++i) {
    const int id = st.open[i];
    st.open.erase(st.open.begin() + static_cast<std::ptrdiff_t>(i));
    st.toks.push_back(Token{id, opposite(st.first_role[static_cast<std::size_t>(id)])});
    dfs_stems(st, max_n, heads_only_start, stem_len, stems, leaf);
    st.toks.pop_back();
    st.open.insert(st.open.begin() + static_cast<std::ptrdiff_t>(i), id);
  }
  if (st.used < max_n &&
      len + 2 + static_cast<int>(st.open.size()) <= 2 * max_n) {
    const int id = st.used + 1;
    for (int v = 0; v < 2; ++v) {
      const Role role = v == 0 ? Role::head : Role::tail;
      if (len == 0 && heads_only_start && role == Role::tail) continue;
      if (static_cast<int>(st.first_role.size()) <= id) st.first_role.resize(static_cast<std::size_t>(id) + 1);
      st.first_role[static_cast<std::size_t>(id)] = role;
      st.open.push_back(id);
      st.toks.push_back(Token{id, role});
      ++st.used;
      dfs_stems(st, max_n, heads_only_start, stem_len, stems, leaf);
      --st.used;
      st.toks.pop_back();
      st.open.pop_back();
    }
  }
}

/// Run the word generator with a per-leaf filter, optionally fanned out over
/// threads. Output order is canonical regardless of thread count.
inline std::vector<Word> generate_words(int max_n, bool heads_only_start, int threads,
                                        const std::function<bool(std::span<const Token>)>& keep) {
  std::vector<Word> all;
  const auto leaf_into = [&keep](std::vector<Word>& sink) {
    return [&keep, &sink](std::span<const Token> toks) {
      if (keep(toks)) sink.push_back(Word(std::vector<Token>(toks.begin(), toks.end())));
    };
  };
  if (threads <= 1 || max_n < 3) {
    DfsState st;
    dfs_words(st, max_n, heads_only_start, leaf_into(all));
  } else {
    std::vector<DfsState> stems;
    DfsState st;
    dfs_stems(st, max_n, heads_only_start, std::min(6, max_n), stems, leaf_into(all));
    std::vector<std::vector<Word>> partial(stems.size());
    std::atomic<std::size_t> cursor{0};
    const auto worker = [&]() {
      for (std::size_t i = cursor.fetch_add(1); i < stems.size(); i = cursor.fetch_add(1)) {
        DfsState local = stems[i];
        dfs_words(local, max_n, heads_only_start, leaf_into(partial[i]));
      }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
    for (std::vector<Word>& p : partial)
      all.insert(all.end(), std::make_move_iterator(p.begin()), std::make_move_iterator(p.end()));
  }
  std::sort(all.begin(), all.end(), [](const Word& a, const Word& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return all;
}

}  // namespace detail

/// Every realizable based word (canonical form) with at most max_n chords,
/// including the empty curve.
inline std::vector<Word> realizable_based_words(int max_n, int threads = 1) {
  std::vector<Word> words = detail::generate_words(
      max_n, /*heads_only_start=*/false, threads, [](std::span<const Token> toks) {
        return detail::balanced_dense(toks) && detail::genus_dense(toks) == 0;
      });
  words.insert(words.begin(), Word());
  return words;
}

/// One curve key per realizable curve class, n <= max_n, by direct
/// generation (strategy a).
inline std::vector<Word> curve_class_keys(int max_n, int threads = 1) {
  std::vector<Word> keys = detail::generate_words(
      max_n, /*heads_only_start=*/true, threads, [](std::span<const Token> toks) {
        return detail::balanced_dense(toks) && detail::genus_dense(toks) == 0 &&
               detail::is_curve_key(toks);
      });
  keys.insert(keys.begin(), Word());
  return keys;
}

/// Curve classes reachable from the crossing-free circle by moves staying
/// within max_n crossings (strategy b).
inline std::vector<Word> move_closure_class_keys(int max_n) {
  static constexpr MoveKind kAll[] = {MoveKind::r1_add, MoveKind::r1_del, MoveKind::s2_add,
                                      MoveKind::s2_del, MoveKind::w2_add, MoveKind::w2_del,
                                      MoveKind::s3,     MoveKind::w3};
  std::vector<Word> out;
  std::set<std::string> visited;
  std::deque<Word> queue;
  queue.push_back(Word());
  visited.insert(Word().str());
  while (!queue.empty()) {
    Word state = std::move(queue.front());
    queue.pop_front();
    out.push_back(state);
    for (MoveKind k : kAll)
      for (const MoveInstance& m : enumerate_moves(state, k)) {
        if (m.result.chords() > max_n) continue;
        Word key = curve_key(m.result);
        if (visited.insert(key.str()).second) queue.push_back(std::move(key));
      }
  }
  std::sort(out.begin(), out.end(), [](const Word& a, const Word& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

struct CurveClass {
  Word key;
  int n = 0;
  std::string name;
  bool prime = false;
  bool reduced = false;
  bool name_certain = true;
  InvariantVector inv;
};

struct CorpusFilters {
  bool prime_only = false;    // keeps the trivial curve
  bool reduced_only = false;
};

namespace detail {

inline long vector_distance(const InvariantVector& a, const InvariantVector& b) {
  long d = 0;
  d += std::abs(a.u - b.u);
  d += std::abs(a.b - b.b);
  d += std::abs(a.lr - b.lr);
  d += std::abs(a.x - b.x);
  d += std::abs(static_cast<long>(a.s) - static_cast<long>(b.s));
  d += std::abs(a.kappa - b.kappa);
  d += std::abs(a.inv_s3 - b.inv_s3);
  d += std::abs(a.inv_s2 - b.inv_s2);
  d += std::abs(a.inv_w3 - b.inv_w3);
  d += std::abs(a.mu - b.mu);
  return d;
}

}  // namespace detail

/// Enumerate, name and filter the corpus. Names come from exact key matches
/// against the bundled projection words; at n = 7 the three flype classes are
/// labeled by invariant-vector proximity as best-effort names.
inline std::vector<CurveClass> build_corpus(int max_n, CorpusFilters filters = {},
                                            const std::vector<RolfsenEntry>& names = default_rolfsen(),
                                            int threads = 1) {
  const std::vector<Word> keys = curve_class_keys(max_n, threads);
  std::vector<CurveClass> classes;
  classes.reserve(keys.size());
  for (const Word& key : keys) {
    CurveClass c;
    c.key = key;
    c.n = key.chords();
    c.prime = is_prime(key);
    c.reduced = is_reduced(key);
    c.inv = invariant_vector(key);
    classes.push_back(std::move(c));
  }

  std::unordered_map<std::string, std::string> named;
  for (const RolfsenEntry& e : names) named[curve_key(e.word).str()] = e.name;
  std::unordered_map<std::string, const InvariantVector*> by_name;
  for (CurveClass& c : classes) {
    if (c.n == 0) {
      c.name = "0_1";
      continue;
    }
    const auto it = named.find(c.key.str());
    if (it != named.end()) c.name = it->second;
    if (!c.name.empty()) by_name[c.name] = &c.inv;
  }

  // Flype companions at n = 7: nearest named seven-crossing vector wins.
  if (max_n >= 7) {
    const std::pair<const char*, const char*> flype[] = {
        {"7_A", "7_6"}, {"7_B", "7_7"}, {"7_C", "7_5"}};
    for (const auto& [label, source] : flype) {
      const auto src = by_name.find(source);
      if (src == by_name.end()) continue;
      CurveClass* best = nullptr;
      long best_dist = 0;
      for (CurveClass& c : classes) {
        if (c.n != 7 || !c.name.empty() || !c.prime || !c.reduced) continue;
        const long d = detail::vector_distance(c.inv, *src->second);
        if (!best || d < best_dist) {
          best = &c;
          best_dist = d;
        }
      }
      if (best) {
        best->name = label;
        best->name_certain = false;
      }
    }
  }

  // Machine ids for everything still unnamed, deterministic in sorted order.
  std::unordered_map<int, int> counter;
  for (CurveClass& c : classes) {
    if (!c.name.empty()) continue;
    c.name = std::to_string(c.n) + "m" + std::to_string(++counter[c.n]);
  }

  if (filters.prime_only || filters.reduced_only) {
    std::erase_if(classes, [&](const CurveClass& c) {
      if (filters.prime_only && c.n > 0 && !c.prime) return true;
      if (filters.reduced_only && !c.reduced) return true;
      return false;
    });
  }
  return classes;
}

}  // namespace sphcurve
