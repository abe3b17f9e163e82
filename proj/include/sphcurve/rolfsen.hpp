#pragma once

// Standard knot-projection words used to attach table names to enumerated
// curve classes. The decorated words are derived from the classical
// Dowker-Thistlethwaite codes of the Rolfsen diagrams; a copy ships as
// data/rolfsen_projections.txt and must stay identical to the embedded text.

#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "sphcurve/word.hpp"

namespace sphcurve {

struct RolfsenEntry {
  std::string name;
  Word word;
};

inline constexpr std::string_view kRolfsenProjectionData = R"(# Gauss words of the standard knot-projection curves used for table naming.
# Format: name, then the token word (positive = head, negative = tail).
# Names follow the curve tables this library reproduces.
0_1
3_1 1 -2 3 -1 2 -3
4_1 1 2 -3 -1 4 3 -2 -4
5_1 1 -2 3 -4 5 -1 2 -3 4 -5
5_2 1 -2 3 -1 4 -5 2 -3 5 -4
6_1 1 2 -3 -1 4 -5 6 3 -2 -4 5 -6
6_2 1 2 -3 -1 4 -5 6 3 -2 -6 5 -4
6_3 1 2 -3 4 -2 -5 6 -1 5 3 -4 -6
7_1 1 -2 3 -4 5 -6 7 -1 2 -3 4 -5 6 -7
7_2 1 -2 3 -1 4 -5 6 -7 2 -3 7 -6 5 -4
7_3 1 -2 3 -4 5 -1 6 -7 2 -3 4 -5 7 -6
7_4 1 -2 3 -4 5 -1 6 -7 2 -5 4 -3 7 -6
7_5 1 -2 3 -1 4 -5 6 -7 2 -3 7 -4 5 -6
7_6 1 2 -3 -1 4 5 -6 3 -2 7 -5 6 -7 -4
7_7 1 2 -3 -1 4 5 -6 3 -2 -4 7 6 -5 -7
)";

inline std::vector<RolfsenEntry> parse_rolfsen(std::string_view text) {
  std::vector<RolfsenEntry> out;
  std::istringstream lines{std::string(text)};
  std::string line;
  while (std::getline(lines, line)) {
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string name;
    if (!(fields >> name)) continue;
    std::string rest;
    std::getline(fields, rest);
    out.push_back(RolfsenEntry{name, Word::parse(rest)});
  }
  return out;
}

inline const std::vector<RolfsenEntry>& default_rolfsen() {
  static const std::vector<RolfsenEntry> entries = parse_rolfsen(kRolfsenProjectionData);
  return entries;
}

}  // namespace sphcurve
