#pragma once

// Random valid decorated words (any genus) for property tests.

#include <random>
#include <vector>

#include "sphcurve/word.hpp"

namespace sphcurve::testing {

inline Word random_word(std::mt19937& rng, int max_n) {
  std::uniform_int_distribution<int> pick_n(0, max_n);
  const int n = pick_n(rng);
  std::vector<int> slots;
  for (int c = 1; c <= n; ++c) {
    slots.push_back(c);
    slots.push_back(c);
  }
  std::shuffle(slots.begin(), slots.end(), rng);
  std::vector<Token> toks;
  std::vector<char> opened(static_cast<std::size_t>(n + 1), 0);
  std::vector<Role> first(static_cast<std::size_t>(n + 1), Role::head);
  std::uniform_int_distribution<int> coin(0, 1);
  for (int c : slots) {
    if (!opened[static_cast<std::size_t>(c)]) {
      opened[static_cast<std::size_t>(c)] = 1;
      first[static_cast<std::size_t>(c)] = coin(rng) ? Role::head : Role::tail;
      toks.push_back(Token{c, first[static_cast<std::size_t>(c)]});
    } else {
      toks.push_back(Token{c, opposite(first[static_cast<std::size_t>(c)])});
    }
  }
  return Word(std::move(toks));
}

}  // namespace sphcurve::testing
