#include <doctest.h>

#include <set>

#include "oracle_helpers.hpp"
#include "space_builders.hpp"
#include "topo/enumeration.hpp"
#include "topo/error.hpp"
#include "topo/operators.hpp"
#include "topo/space.hpp"
#include "topo/space_io.hpp"

using testutil::make_space;
using testutil::pts;
using testutil::table_of;

TEST_CASE("new_space validates the two table invariants") {
  CHECK(make_space({{0}, {1}}).size() == 2);           // discrete pair
  CHECK(make_space({{0, 1}, {0, 1}}).size() == 2);     // indiscrete pair

  try {
    make_space({{0, 1}, {1, 2}, {2}});
    FAIL("expected TransitivityViolation");
  } catch (const topo::TransitivityViolation& err) {
    CHECK(err.x == 0);
    CHECK(err.y == 1);
  }

  try {
    make_space({{1}, {0, 1}});
    FAIL("expected ReflexivityViolation");
  } catch (const topo::ReflexivityViolation& err) {
    CHECK(err.point == 0);
  }

  // Universe size of each row must match the point count.
  std::vector<topo::PointSet> bad = {topo::PointSet(3, {0}), topo::PointSet(3, {1})};
  CHECK_THROWS_AS(topo::new_space(bad), topo::UniverseMismatch);
}

TEST_CASE("empty space is a first-class value") {
  const topo::Space empty = topo::new_space({});
  CHECK(empty.size() == 0);
  CHECK(empty.universe().empty());
  CHECK(topo::open_sets(empty).count() == 1);
  CHECK(topo::subspace(empty, empty.universe()).size() == 0);
}

TEST_CASE("generate_topology") {
  SUBCASE("two overlapping doubletons") {
    const topo::Space s = topo::generate_topology(
        3, {topo::PointSet(3, {0, 1}), topo::PointSet(3, {1, 2})});
    CHECK(s.table() == table_of({{0, 1}, {1}, {1, 2}}));
  }
  SUBCASE("empty subbasis generates the indiscrete space") {
    const topo::Space s = topo::generate_topology(2, {});
    CHECK(s == testutil::indiscrete(2));
  }
  SUBCASE("singletons generate the discrete space") {
    const topo::Space s = topo::generate_topology(
        3, {topo::PointSet(3, {0}), topo::PointSet(3, {1}), topo::PointSet(3, {2})});
    CHECK(s == testutil::discrete(3));
  }
  SUBCASE("universe mismatch is rejected") {
    CHECK_THROWS_AS(topo::generate_topology(3, {topo::PointSet(2, {0})}),
                    topo::UniverseMismatch);
  }
  SUBCASE("opens agree with the union-of-intersections oracle") {
    // Every subbasis of up to three members over a 4-point universe.
    const int n = 4;
    std::uint64_t state = 0x9e3779b97f4a7c15ULL;
    auto next = [&state]() {
      state = state * 6364136223846793005ULL + 1442695040888963407ULL;
      return state >> 13;
    };
    for (int trial = 0; trial < 200; ++trial) {
      std::vector<topo::PointSet> family;
      const int size = static_cast<int>(next() % 4);
      for (int i = 0; i < size; ++i) {
        family.push_back(topo::PointSet::from_bits(n, next() & 0xF));
      }
      const topo::Space s = topo::generate_topology(n, family);
      const auto expected = oracle::generated_opens(n, family);
      CHECK(oracle::space_opens_as_masks(s) == expected);
    }
  }
}

TEST_CASE("open_sets") {
  CHECK(topo::open_sets(testutil::indiscrete(2)).count() == 2);
  CHECK(topo::open_sets(testutil::discrete(2)).count() == 4);

  const topo::Space s = make_space({{0, 1}, {1}, {1, 2}});
  const topo::OpenFamily fam = topo::open_sets(s);
  CHECK(fam.count() == 5);
  std::set<std::uint64_t> got;
  for (const topo::PointSet& o : fam.opens) got.insert(o.bits());
  CHECK(got == std::set<std::uint64_t>{0b000, 0b010, 0b011, 0b110, 0b111});

  SUBCASE("cap is enforced") {
    CHECK_THROWS_AS(topo::open_sets(testutil::discrete(5), 16), topo::TooManyOpens);
  }

  SUBCASE("matches the up-set scan oracle and is a topology, for all n <= 4") {
    for (int n = 0; n <= 4; ++n) {
      topo::for_each_topology(n, [&](const topo::Space& space) {
        const topo::OpenFamily family = topo::open_sets(space);
        std::set<std::uint64_t> masks;
        for (const topo::PointSet& o : family.opens) masks.insert(o.bits());
        CHECK(masks == oracle::opens_by_scan(space));

        // Closed under union/intersection; contains {} and X.
        CHECK(masks.count(0) == 1);
        CHECK(masks.count(space.universe().bits()) == 1);
        for (std::uint64_t a : masks) {
          for (std::uint64_t b : masks) {
            CHECK(masks.count(a | b) == 1);
            CHECK(masks.count(a & b) == 1);
          }
        }

        // min_nbhd[x] is the intersection of all opens containing x.
        for (int x = 0; x < space.size(); ++x) {
          std::uint64_t meet = space.universe().bits();
          for (std::uint64_t o : masks) {
            if ((o >> x) & 1u) meet &= o;
          }
          CHECK(meet == space.min_nbhd(x).bits());
        }
      });
    }
  }
}

TEST_CASE("subspace") {
  const topo::Space window = topo::khalimsky_window(-2, 2);

  SUBCASE("full set gives the space back") {
    CHECK(topo::subspace(window, window.universe()) == window);
  }
  SUBCASE("empty set gives the empty space") {
    CHECK(topo::subspace(window, window.empty_set()).size() == 0);
  }
  SUBCASE("window [-2,2] restricted to its first three points") {
    const topo::Space sub = topo::subspace(window, pts(window, {0, 1, 2}));
    CHECK(sub.table() == table_of({{0, 1}, {1}, {1, 2}}));
    CHECK(sub.label_of(0) == "-2");
    CHECK(sub.label_of(2) == "0");
  }
  SUBCASE("composition: nested subspaces collapse") {
    topo::for_each_topology(3, [](const topo::Space& s) {
      const std::uint64_t limit = 8;
      for (std::uint64_t a_bits = 0; a_bits < limit; ++a_bits) {
        const topo::PointSet a = topo::PointSet::from_bits(3, a_bits);
        const topo::Space sub_a = topo::subspace(s, a);
        std::uint64_t b_bits = a_bits;
        while (true) {
          const topo::PointSet b = topo::PointSet::from_bits(3, b_bits);
          const topo::PointSet b_in_sub = topo::subspace_map(a).to_sub(b);
          CHECK(topo::subspace(sub_a, b_in_sub) == topo::subspace(s, b));
          if (b_bits == 0) break;
          b_bits = (b_bits - 1) & a_bits;
        }
      }
    });
  }
}

TEST_CASE("product") {
  SUBCASE("discrete x discrete = discrete") {
    CHECK(topo::product(testutil::discrete(2), testutil::discrete(2)) == testutil::discrete(4));
  }
  SUBCASE("sierpinski x sierpinski") {
    const topo::Space p = topo::product(testutil::sierpinski(), testutil::sierpinski());
    CHECK(p.size() == 4);
    CHECK(p.min_nbhd(3) == p.universe());  // (1,1) pulls in everything
    CHECK(p.min_nbhd(0) == pts(p, {0}));   // (0,0)
    CHECK(p.min_nbhd(1) == pts(p, {0, 1}));
    CHECK(p.min_nbhd(2) == pts(p, {0, 2}));
  }
  SUBCASE("empty factor gives the empty space") {
    CHECK(topo::product(testutil::sierpinski(), topo::new_space({})).size() == 0);
  }
  SUBCASE("capacity") {
    const topo::Space eight = testutil::discrete(8);
    CHECK_THROWS_AS(topo::product(eight, eight), topo::CapacityExceeded);
  }
  SUBCASE("associative up to the row-major pairing, over all 2-point triples") {
    std::vector<topo::Space> spaces;
    for (int n = 0; n <= 2; ++n) {
      topo::for_each_topology(n, [&](const topo::Space& s) { spaces.push_back(s); });
    }
    for (const topo::Space& a : spaces) {
      for (const topo::Space& b : spaces) {
        for (const topo::Space& c : spaces) {
          CHECK(topo::product(topo::product(a, b), c) == topo::product(a, topo::product(b, c)));
        }
      }
    }
    // One near-capacity triple: 7 x 3 x 3 = 63 points.
    const topo::Space w7 = topo::khalimsky_window(0, 6);
    const topo::Space w3 = topo::khalimsky_window(1, 3);
    CHECK(topo::product(topo::product(w7, w3), w3) ==
          topo::product(w7, topo::product(w3, w3)));
  }
}

TEST_CASE("khalimsky_window") {
  SUBCASE("window [0,2]") {
    const topo::Space w = topo::khalimsky_window(0, 2);
    CHECK(w.table() == table_of({{0, 1}, {1}, {1, 2}}));
    CHECK(w.label_of(0) == "0");
    CHECK(w.label_of(2) == "2");
  }
  SUBCASE("singleton window on an odd integer is an isolated point") {
    const topo::Space w = topo::khalimsky_window(1, 1);
    CHECK(w.size() == 1);
    CHECK(w.min_nbhd(0) == w.universe());
    CHECK(topo::open_screen(w) == w.universe());
  }
  SUBCASE("open screen of [-2,2] is the odd points") {
    const topo::Space w = topo::khalimsky_window(-2, 2);
    const topo::PointSet screen = topo::open_screen(w);
    CHECK(screen == pts(w, {1, 3}));  // labels -1 and 1
    CHECK(w.label_of(1) == "-1");
    CHECK(w.label_of(3) == "1");
  }
  SUBCASE("bad ranges") {
    CHECK_THROWS_AS(topo::khalimsky_window(3, 2), topo::BadRange);
    CHECK_THROWS_AS(topo::khalimsky_window(0, 63), topo::BadRange);
  }
  SUBCASE("agrees with generate_topology on the clipped generators, all windows in [-10,10]") {
    for (long a = -10; a <= 10; ++a) {
      for (long b = a; b <= 10; ++b) {
        const int n = static_cast<int>(b - a + 1);
        std::vector<topo::PointSet> family;
        for (long k = (a - 2) / 2 - 2; 2 * k - 1 <= b; ++k) {
          topo::PointSet gen(n);
          for (long v = 2 * k - 1; v <= 2 * k + 1; ++v) {
            if (v >= a && v <= b) gen = gen.with(static_cast<int>(v - a));
          }
          if (!gen.empty()) family.push_back(gen);
        }
        CHECK(topo::khalimsky_window(a, b) == topo::generate_topology(n, family));
      }
    }
  }
}

TEST_CASE("parse and serialize") {
  SUBCASE("indiscrete pair from text") {
    const topo::Space s = topo::parse_space("points 2\nnbhd 0: 0 1\nnbhd 1: 0 1\n");
    CHECK(s == testutil::indiscrete(2));
    CHECK(!s.has_labels());
  }
  SUBCASE("comments and blank lines are ignored") {
    const topo::Space s = topo::parse_space(
        "# a Sierpinski space\n\npoints 2\nnbhd 0: 0  # open point\nnbhd 1: 0 1\n");
    CHECK(s == testutil::sierpinski());
  }
  SUBCASE("window round-trips, labels included") {
    const topo::Space w = topo::khalimsky_window(0, 2);
    const topo::Space back = topo::parse_space(topo::serialize_space(w));
    CHECK(topo::equal_including_labels(w, back));
  }
  SUBCASE("reflexivity failure surfaces as ValidationError") {
    try {
      topo::parse_space("points 1\nnbhd 0:\n");
      FAIL("expected ValidationError");
    } catch (const topo::ValidationError& err) {
      CHECK(std::string(err.what()).find("ReflexivityViolation") != std::string::npos);
    }
  }
  SUBCASE("syntax errors carry the line number") {
    try {
      topo::parse_space("points 2\nnbhd 0: 0\nnbhd 0: 0\n");
      FAIL("expected SyntaxError");
    } catch (const topo::SyntaxError& err) {
      CHECK(err.position == 3);
    }
    CHECK_THROWS_AS(topo::parse_space("nbhd 0: 0\n"), topo::SyntaxError);
    CHECK_THROWS_AS(topo::parse_space("points 2\nnbhd 0: 1 0\nnbhd 1: 1\n"),
                    topo::SyntaxError);  // unsorted members
    CHECK_THROWS_AS(topo::parse_space("points 2\nnbhd 0: 0\n"), topo::SyntaxError);
    CHECK_THROWS_AS(topo::parse_space("points 2\nnbhd 0: 0 5\nnbhd 1: 1\n"),
                    topo::SyntaxError);
    CHECK_THROWS_AS(topo::parse_space("points 99\n"), topo::SyntaxError);
  }
  SUBCASE("labels with spaces survive") {
    const topo::Space s =
        topo::parse_space("points 1\nnbhd 0: 0\nlabel 0: the only point\n");
    CHECK(s.label_of(0) == "the only point");
    CHECK(topo::equal_including_labels(s, topo::parse_space(topo::serialize_space(s))));
  }
  SUBCASE("round-trip identity over the n <= 3 enumeration") {
    for (int n = 0; n <= 3; ++n) {
      topo::for_each_topology(n, [](const topo::Space& s) {
        CHECK(topo::equal_including_labels(s, topo::parse_space(topo::serialize_space(s))));
      });
    }
  }
}

TEST_CASE("space equality ignores labels") {
  const topo::Space w = topo::khalimsky_window(0, 2);
  const topo::Space bare = make_space({{0, 1}, {1}, {1, 2}});
  CHECK(w == bare);
  CHECK(!topo::equal_including_labels(w, bare));
}
