#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <set>

#include "persymm/shape.hpp"

using namespace persymm;

TEST_CASE("shape grammar") {
  StackedShape s = parse_shape("[2;2+3;(4)]x6");
  CHECK(s.cols == 6);
  REQUIRE(s.blocks.size() == 3);
  CHECK(s.blocks[0] == BlockSpec{BlockKind::Persymmetric, 2});
  CHECK(s.blocks[1] == BlockSpec{BlockKind::Persymmetric, 5});
  CHECK(s.blocks[2] == BlockSpec{BlockKind::Free, 4});

  CHECK(parse_shape(" [ 5 ] x 5 ") == parse_shape("[5]x5"));
  CHECK(parse_shape("[2;2+3]x4") == parse_shape("[2;5]x4"));
  CHECK(parse_shape("[1]X64").cols == 64);

  CHECK_THROWS_AS(parse_shape(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_shape("[2]x65"), std::invalid_argument);
  CHECK_THROWS_AS(parse_shape("[2]x0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_shape("[2]"), std::invalid_argument);
  CHECK_THROWS_AS(parse_shape("[]x4"), std::invalid_argument);
  CHECK_THROWS_AS(parse_shape("[2;]x4"), std::invalid_argument);
  CHECK_THROWS_AS(parse_shape("[(0)]x4"), std::invalid_argument);
  CHECK_THROWS_AS(parse_shape("[2]x4junk"), std::invalid_argument);
  // error message names the offending input
  try {
    parse_shape("[2]x4junk");
    FAIL("expected throw");
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find("[2]x4junk") != std::string::npos);
  }
}

TEST_CASE("canonical string round-trips") {
  for (const char* txt : {"[5]x5", "[2;2]x4", "[2;5;(1)]x4", "[1;1;1]x1", "[2;(2)]x64"}) {
    StackedShape s = parse_shape(txt);
    CHECK(canonical_string(s) == txt);
    CHECK(parse_shape(canonical_string(s)) == s);
  }
  CHECK(canonical_string(parse_shape("[2;2+3]x4")) == "[2;5]x4");
}

TEST_CASE("parameter counts") {
  CHECK(parse_shape("[5]x5").free_param_count() == 9);          // 5+5-1
  CHECK(parse_shape("[2;2]x4").free_param_count() == 10);       // 5+5
  CHECK(parse_shape("[2;5;(4)]x4").free_param_count() == 29);   // 5+8+16
  CHECK(parse_shape("[2;2;2]x6").free_param_count() == 21);
  CHECK(parse_shape("[2;5;9]x6").free_param_count() == 31);     // 3k+9+l at k=6,l=4
  CHECK(parse_shape("[3;3;7]x6").free_param_count() == 28);     // 3k+6+l at k=6,l=4
  CHECK(parse_shape("[5]x5").max_rank() == 5);
  CHECK(parse_shape("[2;2]x64").max_rank() == 4);
  CHECK(parse_shape("[1;1;1]x1").total_rows() == 3);
}

TEST_CASE("realize produces persymmetric blocks") {
  // [2]x2 with params (1,0,1): anti-diagonals 1,0,1 -> rows 01, 10
  StackedShape s = parse_shape("[2]x2");
  GF2Matrix m = realize({&s, 0b101});
  CHECK(m.row(0) == 0b01);
  CHECK(m.row(1) == 0b10);

  // entry (r, c) equals parameter r+c for every persymmetric block
  StackedShape t = parse_shape("[3;2]x4");
  for (std::uint64_t bits = 0; bits < (1ull << t.free_param_count()); ++bits) {
    GF2Matrix m2 = realize({&t, bits});
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 4; ++c) CHECK(m2.get(r, c) == ((bits >> (r + c)) & 1));
    for (int r = 0; r < 2; ++r)
      for (int c = 0; c < 4; ++c) CHECK(m2.get(3 + r, c) == ((bits >> (6 + r + c)) & 1));
    if (bits > 2000) break;  // exhaustive on the low range is enough
  }

  // anti-diagonal constancy: entry(i,j) == entry(i',j') whenever i+j == i'+j'
  StackedShape u = parse_shape("[4]x5");
  for (std::uint64_t bits = 0; bits < (1ull << u.free_param_count()); ++bits) {
    GF2Matrix m3 = realize({&u, bits});
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 5; ++j)
        for (int i2 = 0; i2 < 4; ++i2) {
          const int j2 = i + j - i2;
          if (j2 >= 0 && j2 < 5) CHECK(m3.get(i, j) == m3.get(i2, j2));
        }
  }
}

TEST_CASE("realize is injective") {
  for (const char* txt : {"[3;2]x3", "[2;(2)]x3", "[1;1;1]x2", "[5]x4"}) {
    StackedShape s = parse_shape(txt);
    REQUIRE(s.free_param_count() <= 16);
    std::set<std::vector<std::uint64_t>> seen;
    for (std::uint64_t bits = 0; bits < (1ull << s.free_param_count()); ++bits)
      CHECK(seen.insert(realize({&s, bits}).rows()).second);
  }
}

TEST_CASE("one-row persymmetric and one-row free blocks agree") {
  // both have k independent entries; the realized matrix multisets match
  StackedShape p = parse_shape("[2;1]x3");
  StackedShape f = parse_shape("[2;(1)]x3");
  REQUIRE(p.free_param_count() == f.free_param_count());
  std::multiset<std::vector<std::uint64_t>> mp, mf;
  for (std::uint64_t bits = 0; bits < (1ull << p.free_param_count()); ++bits) {
    mp.insert(realize({&p, bits}).rows());
    mf.insert(realize({&f, bits}).rows());
  }
  CHECK(mp == mf);
}

TEST_CASE("realize rejects oversized parameter spaces") {
  StackedShape s = parse_shape("[(2)]x64");  // 128 parameters
  CHECK_THROWS_AS(realize({&s, 0}), std::domain_error);
}
