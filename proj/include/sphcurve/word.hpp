#pragma once

// Based, arrow-decorated Gauss words.
//
// A word is a sequence of 2n tokens read from the base point in the circle's
// orientation; every chord id occurs exactly twice, once as head and once as
// tail. Text form: whitespace-separated signed integers, positive = head,
// negative = tail. The empty word is the simple closed curve.

#include <algorithm>
#include <charconv>
#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace sphcurve {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input violates the Gauss-word grammar.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Structurally valid input used outside an operation's domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The operation needs a genus-0 word.
class NonRealizableError : public DomainError {
 public:
  using DomainError::DomainError;
};

enum class Role : std::uint8_t { head = 0, tail = 1 };

constexpr Role opposite(Role r) { return r == Role::head ? Role::tail : Role::head; }

/// One arrow endpoint: chord id plus role. Heads order before tails, so token
/// comparison is the one canonical keys use.
struct Token {
  int chord = 0;
  Role role = Role::head;
  friend constexpr auto operator<=>(const Token&, const Token&) = default;
};

class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Token> tokens) : tokens_(std::move(tokens)) { validate(); }

  static Word parse(std::string_view text);

  const std::vector<Token>& tokens() const { return tokens_; }
  const Token& operator[](int i) const { return tokens_[static_cast<std::size_t>(i)]; }
  int size() const { return static_cast<int>(tokens_.size()); }  // 2n
  int chords() const { return size() / 2; }                      // n
  bool empty() const { return tokens_.empty(); }

  /// Distinct chord ids, ascending.
  std::vector<int> chord_ids() const;

  std::string str() const;

  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  void validate() const;

  std::vector<Token> tokens_;
};

inline void Word::validate() const {
  std::unordered_map<int, int> seen;  // chord -> bitmask of roles met
  seen.reserve(tokens_.size());
  for (const Token& t : tokens_) {
    if (t.chord < 1) throw ParseError("chord ids must be positive integers");
    int bit = t.role == Role::head ? 1 : 2;
    int& mask = seen[t.chord];
    if (mask & bit)
      throw ParseError("chord " + std::to_string(t.chord) +
                       (bit == 1 ? " has two heads" : " has two tails"));
    mask |= bit;
  }
  for (const auto& [id, mask] : seen)
    if (mask != 3)
      throw ParseError("chord " + std::to_string(id) + " appears only once");
}

inline Word Word::parse(std::string_view text) {
  std::vector<Token> toks;
  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
    std::string_view piece = text.substr(i, j - i);
    int value = 0;
    auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), value);
    if (ec != std::errc() || ptr != piece.data() + piece.size())
      throw ParseError("malformed token '" + std::string(piece) + "'");
    if (value == 0) throw ParseError("zero is not a valid token");
    toks.push_back(Token{value > 0 ? value : -value, value > 0 ? Role::head : Role::tail});
    i = j;
  }
  return Word(std::move(toks));
}

inline std::vector<int> Word::chord_ids() const {
  std::vector<int> ids;
  ids.reserve(tokens_.size() / 2);
  for (const Token& t : tokens_)
    if (t.role == Role::head) ids.push_back(t.chord);
  std::sort(ids.begin(), ids.end());
  return ids;
}

inline std::string Word::str() const {
  std::string out;
  for (const Token& t : tokens_) {
    if (!out.empty()) out += ' ';
    if (t.role == Role::tail) out += '-';
    out += std::to_string(t.chord);
  }
  return out;
}

namespace detail {

inline std::vector<Token> rotated(std::span<const Token> t, int k) {
  const int len = static_cast<int>(t.size());
  std::vector<Token> out;
  out.reserve(t.size());
  if (len == 0) return out;
  k = ((k % len) + len) % len;
  for (int i = 0; i < len; ++i) out.push_back(t[(i + k) % len]);
  return out;
}

inline std::vector<Token> reversed(std::span<const Token> t) {
  return std::vector<Token>(t.rbegin(), t.rend());
}

inline std::vector<Token> role_swapped(std::span<const Token> t) {
  std::vector<Token> out(t.begin(), t.end());
  for (Token& tok : out) tok.role = opposite(tok.role);
  return out;
}

/// Rename chord ids 1,2,... in order of first occurrence; roles untouched.
inline std::vector<Token> relabeled(std::span<const Token> t) {
  std::unordered_map<int, int> ren;
  ren.reserve(t.size());
  int next = 1;
  std::vector<Token> out;
  out.reserve(t.size());
  for (const Token& tok : t) {
    auto [it, fresh] = ren.try_emplace(tok.chord, next);
    if (fresh) ++next;
    out.push_back(Token{it->second, tok.role});
  }
  return out;
}

inline int max_chord_id(std::span<const Token> t) {
  int m = 0;
  for (const Token& tok : t) m = std::max(m, tok.chord);
  return m;
}

}  // namespace detail

/// Based canonical form: relabel by first occurrence.
inline Word canonicalize(const Word& w) { return Word(detail::relabeled(w.tokens())); }

enum class CanonicalMode { based, unbased, unbased_unoriented };

struct CanonicalKey {
  Word word;
  CanonicalMode mode = CanonicalMode::based;
  friend auto operator<=>(const CanonicalKey&, const CanonicalKey&) = default;
};

namespace detail {

inline std::vector<Token> min_over_rotations(std::span<const Token> t) {
  std::vector<Token> best = relabeled(t);
  const int len = static_cast<int>(t.size());
  for (int k = 1; k < len; ++k) {
    std::vector<Token> cand = relabeled(rotated(t, k));
    if (cand < best) best = std::move(cand);
  }
  return best;
}

}  // namespace detail

inline CanonicalKey canonical_key(const Word& w, CanonicalMode mode) {
  switch (mode) {
    case CanonicalMode::based:
      return {canonicalize(w), mode};
    case CanonicalMode::unbased:
      return {Word(detail::min_over_rotations(w.tokens())), mode};
    case CanonicalMode::unbased_unoriented: {
      std::vector<Token> fwd = detail::min_over_rotations(w.tokens());
      std::vector<Token> rev = detail::min_over_rotations(detail::reversed(w.tokens()));
      return {Word(fwd < rev ? std::move(fwd) : std::move(rev)), mode};
    }
  }
  throw DomainError("unknown canonical mode");
}

/// The word's equivalence class as an unbased, unoriented curve.
inline Word class_key(const Word& w) {
  return canonical_key(w, CanonicalMode::unbased_unoriented).word;
}

/// Mirror image of the curve: every crossing switches, so every role flips.
inline Word mirror(const Word& w) { return Word(detail::role_swapped(w.tokens())); }

/// Identity of the underlying spherical curve: minimal over base rotations,
/// orientation reversal and mirror image. Two words name the same curve on
/// the sphere exactly when their curve keys agree.
inline Word curve_key(const Word& w) {
  std::vector<Token> best = detail::min_over_rotations(w.tokens());
  for (const std::vector<Token>& variant :
       {detail::reversed(w.tokens()), detail::role_swapped(w.tokens()),
        detail::role_swapped(detail::reversed(w.tokens()))}) {
    std::vector<Token> cand = detail::min_over_rotations(variant);
    if (cand < best) best = std::move(cand);
  }
  return Word(std::move(best));
}

/// Move the base point k token positions along the curve.
inline Word rotate_base(const Word& w, int k) {
  return Word(detail::relabeled(detail::rotated(w.tokens(), k)));
}

/// Reverse the curve orientation (diagram reflection): token order flips,
/// roles stay.
inline Word reverse_orientation(const Word& w) {
  return Word(detail::relabeled(detail::reversed(w.tokens())));
}

/// Keep only the listed chords; order and base point survive.
inline Word subword(const Word& w, std::span<const int> chords) {
  std::vector<int> ids = w.chord_ids();
  for (int c : chords)
    if (!std::binary_search(ids.begin(), ids.end(), c))
      throw DomainError("unknown chord id " + std::to_string(c));
  std::vector<Token> out;
  for (const Token& t : w.tokens())
    if (std::find(chords.begin(), chords.end(), t.chord) != chords.end()) out.push_back(t);
  return Word(detail::relabeled(out));
}

inline Word subword(const Word& w, std::initializer_list<int> chords) {
  return subword(w, std::span<const int>(chords.begin(), chords.size()));
}

/// Splice b (rotated so its base point sits at gap_b) into gap_a of a.
/// Gaps index the 2n+1 insertion points of the token sequence.
inline Word connected_sum(const Word& a, const Word& b, int gap_a, int gap_b) {
  if (gap_a < 0 || gap_a > a.size()) throw DomainError("arc index out of range for first word");
  if (gap_b < 0 || gap_b > b.size()) throw DomainError("arc index out of range for second word");
  std::vector<Token> rot = b.empty() ? std::vector<Token>{} : detail::rotated(b.tokens(), gap_b);
  const int shift = detail::max_chord_id(a.tokens());
  std::vector<Token> out;
  out.reserve(a.tokens().size() + rot.size());
  out.insert(out.end(), a.tokens().begin(), a.tokens().begin() + gap_a);
  for (const Token& t : rot) out.push_back(Token{t.chord + shift, t.role});
  out.insert(out.end(), a.tokens().begin() + gap_a, a.tokens().end());
  return Word(detail::relabeled(out));
}

}  // namespace sphcurve
