#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "accordion_tau/errors.hpp"
#include "accordion_tau/geometry.hpp"
#include "oracles.hpp"

using namespace accordion_tau;
using namespace accordion_tau::geometry;

namespace {

std::vector<std::pair<int, int>> pairs(std::initializer_list<std::pair<int, int>> p) { return p; }

ErrorCode code_of(int m, std::vector<std::pair<int, int>> p) {
  try {
    validate_dissection(m, p);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_CASE("crosses on the hexagon") {
  const PointCycle c{6};
  CHECK_FALSE(crosses(white_chord(c, 0, 2), white_chord(c, 2, 4)));
  CHECK(crosses(white_chord(c, 0, 2), black_chord(c, 0, 2)));
  CHECK_FALSE(crosses(white_chord(c, 0, 3), black_chord(c, 3, 5)));
}

TEST_CASE("left_of on the hexagon") {
  const PointCycle c{6};
  CHECK(left_of(c, c.black_point(0), c.black_point(3), c.white_point(0)));
  CHECK_FALSE(left_of(c, c.black_point(0), c.black_point(3), c.white_point(2)));
  for (int p = 0; p < 12; ++p)
    for (int q = 0; q < 12; ++q)
      if (p != q && (q + 1) % 12 != p) CHECK(left_of(c, p, q, (q + 1) % 12));
}

TEST_CASE("crosses and left_of agree with unit-circle coordinates") {
  for (int m = 3; m <= 8; ++m) {
    const PointCycle c{m};
    const int n = 2 * m;
    for (int p = 0; p < n; ++p)
      for (int q = 0; q < n; ++q) {
        if (p == q) continue;
        for (int x = 0; x < n; ++x) {
          if (x == p || x == q) continue;
          const bool expected = oracle::orient(oracle::point(m, p), oracle::point(m, q), oracle::point(m, x)) > 0;
          CHECK(left_of(c, p, q, x) == expected);
          CHECK(left_of(c, p, q, x) == !left_of(c, q, p, x));
        }
      }
    std::vector<Chord> chords = white_diagonals(c);
    for (const auto& b : black_diagonals(c)) chords.push_back(b);
    for (const auto& a : chords)
      for (const auto& b : chords) {
        const bool expected = oracle::segments_cross(oracle::point(m, a.a), oracle::point(m, a.b),
                                                     oracle::point(m, b.a), oracle::point(m, b.b));
        CHECK(crosses(a, b) == expected);
        CHECK(crosses(a, b) == crosses(b, a));
        if (a == b || shared_endpoint(a, b)) CHECK_FALSE(crosses(a, b));
      }
  }
}

TEST_CASE("validate_dissection") {
  const auto fan = validate_dissection(6, pairs({{0, 2}, {0, 3}, {0, 4}}));
  CHECK(fan.size() == 3);
  CHECK(fan.label_pairs() == pairs({{0, 2}, {0, 3}, {0, 4}}));
  const auto heptagon = validate_dissection(7, pairs({{0, 2}, {2, 4}, {4, 6}}));
  CHECK(heptagon.size() == 3);
  // Input order fixes coordinates, and endpoints are normalized.
  CHECK(validate_dissection(6, pairs({{4, 0}, {2, 0}})).label_pairs() == pairs({{0, 4}, {0, 2}}));
  CHECK(code_of(6, {{0, 2}, {1, 3}}) == ErrorCode::CrossingPair);
  CHECK(code_of(6, {{0, 1}}) == ErrorCode::AdjacentVertices);
  CHECK(code_of(6, {{5, 0}}) == ErrorCode::AdjacentVertices);
  CHECK(code_of(6, {{0, 2}, {2, 0}}) == ErrorCode::DuplicateDiagonal);
  CHECK(code_of(6, {{0, 6}}) == ErrorCode::InvalidArgument);
  CHECK(code_of(6, {{3, 3}}) == ErrorCode::InvalidArgument);
  CHECK(code_of(2, {}) == ErrorCode::InvalidArgument);
  CHECK(validate_dissection(3, {}).empty());
}

TEST_CASE("crossing pair message names both diagonals") {
  try {
    validate_dissection(6, pairs({{0, 2}, {1, 3}}));
    FAIL("no error");
  } catch (const Error& e) {
    const std::string msg = e.what();
    CHECK(msg.find("(0,2)") != std::string::npos);
    CHECK(msg.find("(1,3)") != std::string::npos);
  }
}

TEST_CASE("cells of small dissections") {
  SUBCASE("hexagon fan") {
    const auto cs = cells(validate_dissection(6, pairs({{0, 2}, {0, 3}, {0, 4}})));
    REQUIRE(cs.size() == 4);
    CHECK(cs[0].vertices == std::vector<int>{0, 1, 2});
    CHECK(cs[1].vertices == std::vector<int>{0, 2, 3});
    CHECK(cs[2].vertices == std::vector<int>{0, 3, 4});
    CHECK(cs[3].vertices == std::vector<int>{0, 4, 5});
  }
  SUBCASE("heptagon with a quadrilateral") {
    const auto d = validate_dissection(7, pairs({{0, 2}, {2, 4}, {4, 6}}));
    const auto cs = cells(d);
    REQUIRE(cs.size() == 4);
    const auto quad = std::find_if(cs.begin(), cs.end(), [](const Cell& c) { return c.vertices.size() == 4; });
    REQUIRE(quad != cs.end());
    CHECK(quad->vertices == std::vector<int>{0, 2, 4, 6});
    const PointCycle c{7};
    CHECK(quad->sides == std::vector<Chord>{white_chord(c, 0, 2), white_chord(c, 2, 4), white_chord(c, 4, 6),
                                            white_chord(c, 6, 0)});
  }
  SUBCASE("no diagonals") {
    const auto cs = cells(validate_dissection(6, {}));
    REQUIRE(cs.size() == 1);
    CHECK(cs[0].vertices == std::vector<int>{0, 1, 2, 3, 4, 5});
  }
}

TEST_CASE("cell invariants hold on every dissection up to the octagon") {
  for (int m = 3; m <= 8; ++m)
    for (const auto& d : enumerate_dissections(m, true)) {
      const auto cs = cells(d);
      std::map<Chord, int> uses;
      int area = 0;
      for (const auto& cell : cs) {
        REQUIRE(cell.sides.size() == cell.vertices.size());
        area += static_cast<int>(cell.sides.size()) - 2;
        for (std::size_t i = 0; i < cell.sides.size(); ++i) {
          const auto& s = cell.sides[i];
          const auto& next = cell.sides[(i + 1) % cell.sides.size()];
          CHECK(shared_endpoint(s, next).has_value());
          ++uses[s];
        }
      }
      CHECK(area == m - 2);
      CHECK(cs.size() == d.size() + 1);
      for (const auto& [chord, n] : uses) CHECK(n == (chord.kind == ChordKind::WhiteDiagonal ? 2 : 1));
      for (const auto& diag : d.diagonals()) CHECK(uses[diag] == 2);
    }
}

TEST_CASE("dissection counts match the Schroeder recurrence and brute force") {
  CHECK(oracle::dissection_count(5) == 11);
  CHECK(oracle::dissection_count(6) == 45);
  for (int m = 3; m <= 9; ++m)
    CHECK(static_cast<long long>(enumerate_dissections(m, true).size()) == oracle::dissection_count(m));
  for (int m = 4; m <= 7; ++m) {
    std::set<std::vector<std::pair<int, int>>> expected;
    for (auto d : oracle::brute_force_dissections(m)) {
      std::sort(d.begin(), d.end());
      expected.insert(d);
    }
    std::set<std::vector<std::pair<int, int>>> got;
    for (const auto& d : enumerate_dissections(m, true)) {
      auto p = d.label_pairs();
      std::sort(p.begin(), p.end());
      got.insert(p);
    }
    CHECK(got == expected);
  }
  CHECK(enumerate_dissections(6, false).size() == 44);
}

TEST_CASE("chord labels and strings") {
  const PointCycle c{6};
  CHECK(to_string(white_chord(c, 0, 2)) == "0-2");
  CHECK(to_string(black_chord(c, 1, 4)) == "b1-b4");
  CHECK(white_chord(c, 5, 0).kind == ChordKind::WhiteBoundary);
  CHECK(labels(white_chord(c, 4, 1)) == std::pair{1, 4});
  CHECK_THROWS_AS(black_chord(c, 0, 1), Error);
  CHECK(white_diagonals(c).size() == 9);
  CHECK(black_diagonals(c).size() == 9);
}
