#include <doctest.h>

#include <numeric>

#include "accordion_tau/errors.hpp"
#include "accordion_tau/quiver.hpp"

using namespace accordion_tau;
using namespace accordion_tau::quiver;

namespace {

GentleQuiver linear3(bool relation) {
  GentleQuiver q{{"1", "2", "3"}, {{"alpha", 0, 1}, {"beta", 1, 2}}, {}};
  if (relation) q.relations.insert({0, 1});
  return q;
}

GentleQuiver cycle3() {
  return {{"1", "2", "3"}, {{"a", 0, 1}, {"b", 1, 2}, {"c", 2, 0}}, {{0, 1}, {1, 2}, {2, 0}}};
}

geometry::Dissection make(int m, std::vector<std::pair<int, int>> p) { return geometry::validate_dissection(m, p); }

std::vector<int> identity(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 0);
  return v;
}

}  // namespace

TEST_CASE("quiver of the heptagon dissection is 1 -> 2 -> 3 with the composite zero") {
  const auto q = quiver_of_dissection(make(7, {{0, 2}, {2, 4}, {4, 6}}));
  CHECK(q.vertices == std::vector<std::string>{"0-2", "2-4", "4-6"});
  CHECK(same_quiver(q, linear3(true), identity(3)));
  CHECK_FALSE(same_quiver(q, linear3(false), identity(3)));
}

TEST_CASE("quiver of the hexagon fan is A3 without relations") {
  const auto q = quiver_of_dissection(make(6, {{0, 2}, {0, 3}, {0, 4}}));
  REQUIRE(q.num_arrows() == 2);
  CHECK(q.relations.empty());
  // The path runs through the middle diagonal 0-3.
  int through_middle = 0;
  for (const auto& a : q.arrows) through_middle += (a.src == 1) + (a.tgt == 1);
  CHECK(through_middle == 2);
}

TEST_CASE("a triangle of three diagonals gives the 3-cycle with all relations") {
  const auto q = quiver_of_dissection(make(6, {{0, 2}, {2, 4}, {0, 4}}));
  CHECK(q.num_arrows() == 3);
  CHECK(q.relations.size() == 3);
  CHECK(check_gentle(q).empty());
  CHECK(algebra_basis(q).dimension() == 6);
}

TEST_CASE("check_gentle") {
  CHECK(check_gentle(cycle3()).empty());
  CHECK(check_gentle(linear3(true)).empty());
  GentleQuiver star{{"0", "1", "2", "3"}, {{"a", 0, 1}, {"b", 0, 2}, {"c", 0, 3}}, {}};
  CHECK_FALSE(check_gentle(star).empty());
  // Two relations continuing the same arrow.
  GentleQuiver fork{{"0", "1", "2", "3"}, {{"a", 0, 1}, {"b", 1, 2}, {"c", 1, 3}}, {{0, 1}, {0, 2}}};
  CHECK_FALSE(check_gentle(fork).empty());
  for (int m = 4; m <= 8; ++m)
    for (const auto& d : geometry::enumerate_dissections(m, false)) CHECK(check_gentle(quiver_of_dissection(d)).empty());
}

TEST_CASE("algebra bases") {
  const AlgebraBasis b(linear3(true));
  CHECK(b.dimension() == 5);
  CHECK(AlgebraBasis(linear3(false)).dimension() == 6);
  CHECK(AlgebraBasis(cycle3()).dimension() == 6);
  CHECK(b.between(0, 1).size() == 1);
  CHECK(b.between(0, 2).empty());
  const int alpha = b.index_of(0, std::vector<int>{0});
  const int beta = b.index_of(1, std::vector<int>{1});
  CHECK(b.product(alpha, beta) == -1);
  CHECK(b.product(b.lazy(0), alpha) == alpha);
  CHECK(b.product(alpha, b.lazy(1)) == alpha);
  CHECK(b.product(alpha, b.lazy(0)) == -1);
  const AlgebraBasis free3(linear3(false));
  const int ab = free3.product(free3.index_of(0, std::vector<int>{0}), free3.index_of(1, std::vector<int>{1}));
  CHECK(ab >= 0);
  CHECK(free3.path(ab).length() == 2);
  GentleQuiver loop{{"1"}, {{"x", 0, 0}}, {}};
  CHECK_THROWS_AS(algebra_basis(loop), Error);
}

TEST_CASE("algebra bases are associative and closed under subpaths") {
  for (int m = 4; m <= 7; ++m)
    for (const auto& d : geometry::enumerate_dissections(m, false)) {
      const AlgebraBasis b(quiver_of_dissection(d));
      const int n = static_cast<int>(b.dimension());
      for (int i = 0; i < n; ++i) {
        const auto& p = b.path(i);
        for (std::size_t k = 0; k < p.length(); ++k) {
          std::vector<int> prefix(p.arrows.begin(), p.arrows.begin() + k);
          CHECK(b.index_of(p.src, prefix) >= 0);
        }
        for (int j = 0; j < n; ++j)
          for (int k = 0; k < n; ++k) {
            const int ij = b.product(i, j);
            const int jk = b.product(j, k);
            const int left = ij < 0 ? -1 : b.product(ij, k);
            const int right = jk < 0 ? -1 : b.product(i, jk);
            CHECK(left == right);
          }
      }
    }
}

TEST_CASE("shortcut quivers") {
  SUBCASE("all vertices is the identity") {
    const auto q = quiver_of_dissection(make(7, {{0, 2}, {2, 4}, {4, 6}}));
    CHECK(same_quiver(shortcut_quiver(q, identity(3)), q, identity(3)));
  }
  SUBCASE("A3 without relations to the endpoints") {
    const std::vector<int> j{0, 2};
    const auto s = shortcut(linear3(false), j);
    REQUIRE(s.quiver.num_arrows() == 1);
    CHECK(s.quiver.arrows[0].src == 0);
    CHECK(s.quiver.arrows[0].tgt == 1);
    CHECK(s.arrow_paths[0].length() == 2);
    CHECK(s.quiver.relations.empty());
  }
  SUBCASE("composite zero leaves no arrow") {
    const std::vector<int> j{0, 2};
    const auto s = shortcut_quiver(linear3(true), j);
    CHECK(s.num_vertices() == 2);
    CHECK(s.num_arrows() == 0);
    const auto r = idempotent_subalgebra_check(linear3(true), j);
    CHECK(r.pass);
    CHECK(r.dimension == 2);
  }
  SUBCASE("dropping the middle fan diagonal") {
    const auto big = quiver_of_dissection(make(6, {{0, 2}, {0, 3}, {0, 4}}));
    const std::vector<int> j{0, 2};
    const auto small = quiver_of_dissection(make(6, {{0, 2}, {0, 4}}));
    CHECK(same_quiver(shortcut_quiver(big, j), small, identity(2)));
  }
  CHECK_THROWS_AS(shortcut_quiver(linear3(true), std::vector<int>{}), Error);
}

TEST_CASE("idempotent subalgebra check on every dissection quiver") {
  for (int m = 4; m <= 7; ++m)
    for (const auto& d : geometry::enumerate_dissections(m, false)) {
      const auto q = quiver_of_dissection(d);
      const int n = q.num_vertices();
      for (unsigned mask = 1; mask < (1u << n); ++mask) {
        std::vector<int> j;
        for (int k = 0; k < n; ++k)
          if (mask >> k & 1) j.push_back(k);
        const auto r = idempotent_subalgebra_check(q, j);
        CHECK(r.pass);
        CHECK(check_gentle(shortcut_quiver(q, j)).empty());
      }
    }
}

TEST_CASE("shortcutting twice equals shortcutting once") {
  for (int m = 5; m <= 7; ++m)
    for (const auto& d : geometry::enumerate_dissections(m, false)) {
      const auto q = quiver_of_dissection(d);
      const int n = q.num_vertices();
      for (unsigned outer = 1; outer < (1u << n); ++outer) {
        std::vector<int> j;
        for (int k = 0; k < n; ++k)
          if (outer >> k & 1) j.push_back(k);
        const auto qj = shortcut_quiver(q, j);
        for (unsigned inner = 1; inner < (1u << j.size()); ++inner) {
          std::vector<int> within, k_direct;
          for (std::size_t t = 0; t < j.size(); ++t)
            if (inner >> t & 1) {
              within.push_back(static_cast<int>(t));
              k_direct.push_back(j[t]);
            }
          const auto twice = shortcut_quiver(qj, within);
          const auto once = shortcut_quiver(q, k_direct);
          CHECK(same_quiver(twice, once, identity(static_cast<int>(within.size()))));
          CHECK(AlgebraBasis(twice).dimension() == AlgebraBasis(once).dimension());
        }
      }
    }
}

TEST_CASE("path strings") {
  const AlgebraBasis b(linear3(false));
  CHECK(to_string(b.quiver(), b.path(0)) == "e_1");
  const int ab = b.index_of(0, std::vector<int>{0, 1});
  REQUIRE(ab >= 0);
  CHECK(to_string(b.quiver(), b.path(ab)) == "alpha*beta");
}
