#include <algorithm>
#include <catch2/catch.hpp>
#include <set>

#include "random_words.hpp"
#include "sphcurve/corpus.hpp"
#include "sphcurve/embedding.hpp"

using namespace sphcurve;

namespace {
const Word kTrefoil = Word::parse("1 -2 3 -1 2 -3");
const Word kKink = Word::parse("1 -1");
const Word kSpiral = Word::parse("1 -2 2 -1");
const Word kInterlaced = Word::parse("1 -2 -1 2");

std::multiset<int> face_degrees(const Word& w) {
  std::multiset<int> degs;
  for (const Face& f : faces(w)) degs.insert(f.degree());
  return degs;
}
}  // namespace

TEST_CASE("balance census") {
  SECTION("trefoil: each chord is crossed once per side") {
    const BalanceReport rep = balance(kTrefoil);
    REQUIRE(rep.chords.size() == 3);
    for (const ChordBalance& c : rep.chords) {
      CHECK(c.left_to_right == 1);
      CHECK(c.right_to_left == 1);
    }
    CHECK(rep.balanced());
  }
  SECTION("a single interlaced pair cannot balance") {
    const BalanceReport rep = balance(kInterlaced);
    REQUIRE(rep.chords.size() == 2);
    CHECK(rep.chords[0].interlaced() == 1);
    CHECK_FALSE(rep.balanced());
  }
  SECTION("empty curve") {
    const BalanceReport rep = balance(Word::parse(""));
    CHECK(rep.chords.empty());
    CHECK(rep.balanced());
  }
}

TEST_CASE("combinatorial map counts") {
  SECTION("kink") {
    const CombinatorialMap m = build_map(kKink);
    CHECK(m.vertices == 1);
    CHECK(m.edges == 2);
    CHECK(m.face_count() == 3);
    CHECK(m.genus == 0);
  }
  SECTION("trefoil") {
    const CombinatorialMap m = build_map(kTrefoil);
    CHECK(m.face_count() == 5);
    CHECK(m.genus == 0);
  }
  SECTION("interlaced pair is not planar") {
    const CombinatorialMap m = build_map(kInterlaced);
    CHECK(m.face_count() == 2);
    CHECK(m.genus == 1);
  }
  SECTION("empty curve") {
    const CombinatorialMap m = build_map(Word::parse(""));
    CHECK(m.face_count() == 2);
    CHECK(m.genus == 0);
  }
}

TEST_CASE("realizable") {
  CHECK(realizable(kTrefoil));
  CHECK_FALSE(realizable(kInterlaced));
  CHECK(realizable(kSpiral));
  CHECK(realizable(Word::parse("")));
}

TEST_CASE("face structure") {
  SECTION("kink shows its 1-gon") {
    CHECK(face_degrees(kKink) == std::multiset<int>{1, 1, 2});
  }
  SECTION("spiral contains a coherent 2-gon between its two chords") {
    bool found = false;
    for (const Face& f : faces(kSpiral)) {
      if (f.degree() != 2 || !f.coherent()) continue;
      std::set<int> corners(f.corners.begin(), f.corners.end());
      if (corners == std::set<int>{1, 2}) found = true;
    }
    CHECK(found);
  }
  SECTION("trefoil has a triangle meeting all three chords") {
    bool found = false;
    for (const Face& f : faces(kTrefoil)) {
      if (f.degree() != 3) continue;
      std::set<int> corners(f.corners.begin(), f.corners.end());
      if (corners == std::set<int>{1, 2, 3}) found = true;
    }
    CHECK(found);
  }
  SECTION("non-realizable words have no face list") {
    CHECK_THROWS_AS(faces(kInterlaced), NonRealizableError);
  }
}

TEST_CASE("euler identity and symmetry of genus") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 300; ++trial) {
    const Word w = sphcurve::testing::random_word(rng, 7);
    CAPTURE(w.str());
    const CombinatorialMap m = build_map(w);
    CHECK(m.vertices - m.edges + m.face_count() == 2 - 2 * m.genus);
    CHECK(m.genus >= 0);
    int total_darts = 0;
    for (const Face& f : m.faces) total_darts += f.degree();
    CHECK(total_darts == 2 * m.edges);

    const int g = genus(w);
    CHECK(g == m.genus);
    CHECK(genus(rotate_base(w, trial % std::max(w.size(), 1))) == g);
    CHECK(genus(reverse_orientation(w)) == g);
    CHECK(genus(mirror(w)) == g);
  }
}

TEST_CASE("realizable words are balanced and evenly interlaced") {
  for (const Word& w : realizable_based_words(4)) {
    CAPTURE(w.str());
    const BalanceReport rep = balance(w);
    REQUIRE(rep.balanced());
    for (const ChordBalance& c : rep.chords) CHECK(c.interlaced() % 2 == 0);
  }
}

TEST_CASE("decoration search recovers each curve up to mirror") {
  SECTION("trefoil pairing") {
    const std::vector<int> pairing = {1, 2, 3, 1, 2, 3};
    const std::vector<Word> decs = genus_zero_decorations(pairing);
    REQUIRE(decs.size() == 2);
    for (const Word& d : decs) CHECK(curve_key(d) == kTrefoil);
  }
  SECTION("interlaced pair admits no decoration") {
    CHECK(genus_zero_decorations(std::vector<int>{1, 2, 1, 2}).empty());
  }
  SECTION("every realizable class reappears among its pairing's decorations") {
    for (const Word& key : curve_class_keys(5)) {
      if (key.empty()) continue;
      std::vector<int> pairing;
      for (const Token& t : key.tokens()) pairing.push_back(t.chord);
      std::set<std::string> classes;
      for (const Word& d : genus_zero_decorations(pairing)) classes.insert(curve_key(d).str());
      CAPTURE(key.str());
      CHECK(classes.count(key.str()) == 1);
      // uniqueness up to mirror holds on prime 1-gon-free words; it fails in
      // general because every curl flips independently
      if (is_prime(key) && is_reduced(key)) CHECK(classes.size() == 1);
    }
  }
}
