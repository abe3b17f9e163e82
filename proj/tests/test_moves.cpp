#include <catch2/catch.hpp>

#include "sphcurve/corpus.hpp"
#include "sphcurve/moves.hpp"

using namespace sphcurve;

namespace {
const Word kEmpty = Word::parse("");
const Word kKink = Word::parse("1 -1");
const Word kTrefoil = Word::parse("1 -2 3 -1 2 -3");
const Word kSpiral = Word::parse("1 -2 2 -1");

bool has_result(const std::vector<MoveInstance>& moves, const Word& w) {
  for (const MoveInstance& m : moves)
    if (m.result == w) return true;
  return false;
}
}  // namespace

TEST_CASE("kink additions and deletions") {
  const auto adds = enumerate_moves(kEmpty, MoveKind::r1_add);
  REQUIRE(adds.size() == 2);
  CHECK(has_result(adds, Word::parse("1 -1")));
  CHECK(has_result(adds, Word::parse("-1 1")));
  CHECK(adds.front().label == "1a");
  CHECK(apply_move(kEmpty, adds.front()) == adds.front().result);

  const auto dels = enumerate_moves(kKink, MoveKind::r1_del);
  REQUIRE(dels.size() == 1);
  CHECK(dels.front().result == kEmpty);
  CHECK(dels.front().label == "1b");
}

TEST_CASE("strong RII on the circle makes the spiral") {
  const auto adds = enumerate_moves(kEmpty, MoveKind::s2_add);
  CHECK(has_result(adds, kSpiral));
  for (const MoveInstance& m : adds) CHECK(m.label == "s2a");

  const auto dels = enumerate_moves(kSpiral, MoveKind::s2_del);
  REQUIRE(dels.size() == 1);
  CHECK(dels.front().result == kEmpty);
}

TEST_CASE("weak RII needs curve material") {
  CHECK(enumerate_moves(kEmpty, MoveKind::w2_add).empty());
  // pushing the kink's loop over the other strand yields the trefoil
  CHECK(has_result(enumerate_moves(kKink, MoveKind::w2_add), kTrefoil));
}

TEST_CASE("the trefoil's triangles are strong sites") {
  const auto strong = enumerate_moves(kTrefoil, MoveKind::s3);
  CHECK_FALSE(strong.empty());
  for (const MoveInstance& m : strong) {
    CHECK(m.label == "s3b");  // the trefoil is the x-heavy side
    CHECK(curve_key(m.result).str() == "1 -1 2 -2 3 -3");
  }
  CHECK(enumerate_moves(kTrefoil, MoveKind::w3).empty());
}

TEST_CASE("moves demand a realizable word") {
  CHECK_THROWS_AS(enumerate_moves(Word::parse("1 -2 -1 2"), MoveKind::r1_add),
                  NonRealizableError);
}

TEST_CASE("stale instances are rejected") {
  const auto adds = enumerate_moves(kKink, MoveKind::r1_add);
  REQUIRE_FALSE(adds.empty());
  CHECK_THROWS_AS(apply_move(kTrefoil, adds.front()), DomainError);
}

TEST_CASE("reference move deltas") {
  SECTION("a kink addition") {
    const auto adds = enumerate_moves(kTrefoil, MoveKind::r1_add);
    REQUIRE_FALSE(adds.empty());
    for (const MoveInstance& m : adds) {
      auto d = move_delta(kTrefoil, m);
      CHECK(d["u"] == 0);
      CHECK(d["b"] == 0);
      CHECK(d["lr"] == 0);
      CHECK(d["s"] == 1);
      CHECK(d["c"] == 1);
      CHECK(d["kappa"] == 0);
      CHECK(d["mu"] == 0);
    }
  }
  SECTION("deleting a trefoil lobe is a weak RII with one spectator arrow") {
    const auto dels = enumerate_moves(kTrefoil, MoveKind::w2_del);
    REQUIRE_FALSE(dels.empty());
    for (const MoveInstance& m : dels) {
      CHECK(curve_key(m.result) == curve_key(kKink));
      auto d = move_delta(kTrefoil, m);
      CHECK(d["u"] == -1);
      CHECK(d["lr"] == -1);
      CHECK(d["b"] == -1);  // b tracks u under weak RII: mu stays put
      CHECK(d["c"] == -2);
      CHECK(d["s"] == 0);
      CHECK(d["mu"] == 0);
    }
  }
  SECTION("a weak triangle moves only l+r, and mu by twice as much") {
    const Word w = Word::parse("1 -1 -2 3 -4 2 -3 4");
    const auto weak = enumerate_moves(w, MoveKind::w3);
    REQUIRE_FALSE(weak.empty());
    bool saw_increase = false;
    for (const MoveInstance& m : weak) {
      auto d = move_delta(w, m);
      CHECK(d["u"] == 0);
      CHECK(d["b"] == 0);
      CHECK(std::abs(d["lr"]) == 1);
      CHECK(d["s"] == 0);
      CHECK(d["mu"] == -2 * d["lr"]);
      if (m.label == "w3a") {
        saw_increase = true;
        CHECK(d["lr"] == 1);
      }
    }
    CHECK(saw_increase);
  }
  SECTION("the trefoil triangle move drops every pattern count once") {
    for (const MoveInstance& m : enumerate_moves(kTrefoil, MoveKind::s3)) {
      auto d = move_delta(kTrefoil, m);
      CHECK(d["u"] == -1);
      CHECK(d["b"] == -1);
      CHECK(d["lr"] == -1);
      CHECK(d["x"] == -3);
      CHECK(d["inv_s3"] == 0);
    }
  }
}

TEST_CASE("every generated instance is realizable and replayable") {
  for (const Word& w : realizable_based_words(3)) {
    for (MoveKind k : {MoveKind::r1_add, MoveKind::r1_del, MoveKind::s2_add, MoveKind::s2_del,
                       MoveKind::w2_add, MoveKind::w2_del, MoveKind::s3, MoveKind::w3}) {
      for (const MoveInstance& m : enumerate_moves(w, k)) {
        CAPTURE(w.str(), kind_name(k), m.result.str());
        CHECK(realizable(m.result));
        CHECK(apply_move(w, m) == m.result);
        CHECK(m.source == canonicalize(w));
      }
    }
  }
}

TEST_CASE("preserved invariant sets intersect by family") {
  const MoveKind r1w3[] = {MoveKind::r1_add, MoveKind::r1_del, MoveKind::w3};
  const auto shared = shared_preserved(r1w3);
  CHECK(std::find(shared.begin(), shared.end(), "inv_w3") != shared.end());
  CHECK(std::find(shared.begin(), shared.end(), "b") != shared.end());
  CHECK(std::find(shared.begin(), shared.end(), "inv_s2") == shared.end());
  CHECK(std::find(shared.begin(), shared.end(), "s") == shared.end());
}

TEST_CASE("search finds short sequences") {
  SECTION("one kink") {
    const MoveKind kinds[] = {MoveKind::r1_add};
    const SearchResult r = bfs_reachable(kEmpty, kKink, kinds, 1, 1);
    REQUIRE(r.status == SearchStatus::found);
    REQUIRE(r.path.size() == 1);
    CHECK(r.path.front().label == "1a");
    CHECK(r.path.front().word == curve_key(kKink));
  }
  SECTION("spiral through a strong RII") {
    const MoveKind kinds[] = {MoveKind::s2_add, MoveKind::s2_del};
    const SearchResult r = bfs_reachable(kEmpty, kSpiral, kinds, 2, 4);
    REQUIRE(r.status == SearchStatus::found);
    CHECK(r.path.size() == 1);
  }
  SECTION("trivial search") {
    const MoveKind kinds[] = {MoveKind::r1_add};
    CHECK(bfs_reachable(kKink, kKink, kinds, 1, 1).status == SearchStatus::found);
  }
}

TEST_CASE("search certifies impossibility by invariants") {
  const MoveKind r1w3[] = {MoveKind::r1_add, MoveKind::r1_del, MoveKind::w3};
  const SearchResult r = bfs_reachable(kEmpty, kTrefoil, r1w3, 5, 10);
  REQUIRE(r.status == SearchStatus::separated);
  CHECK(r.separating_invariant == "inv_w3");
  CHECK(r.source_value == 0);
  CHECK(r.target_value == 1);
}

TEST_CASE("search reports exhausted bounds distinctly") {
  SECTION("step bound") {
    const MoveKind kinds[] = {MoveKind::r1_add};
    const SearchResult r = bfs_reachable(kEmpty, kKink, kinds, 1, 0);
    REQUIRE(r.status == SearchStatus::exhausted);
    CHECK_FALSE(r.frontier_exhausted);
  }
  SECTION("crossing bound drains the frontier") {
    // the spiral needs two crossings; with a bound of one the whole
    // reachable set is explored without meeting it
    const MoveKind kinds[] = {MoveKind::r1_add, MoveKind::r1_del};
    const SearchResult r = bfs_reachable(kEmpty, kSpiral, kinds, 1, 10);
    REQUIRE(r.status == SearchStatus::exhausted);
    CHECK(r.frontier_exhausted);
  }
}
