#pragma once

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

// Combinatorics of a convex polygon with 2m alternately colored boundary
// points. Point t sits at angle 2*pi*t/(2m); white vertex k is point 2k and
// black vertex k is point 2k+1. Every predicate is decided on cyclic order,
// so nothing here touches floating point.
namespace accordion_tau::geometry {

struct PointCycle {
  int m = 0;  // number of white (and of black) vertices

  int num_points() const { return 2 * m; }
  int reduce(int t) const;
  int white_point(int k) const { return reduce(2 * k); }
  int black_point(int k) const { return reduce(2 * k + 1); }
};

enum class ChordKind { WhiteDiagonal, WhiteBoundary, BlackDiagonal };

// Endpoints are point indices with a < b.
struct Chord {
  int a = 0;
  int b = 0;
  ChordKind kind = ChordKind::WhiteDiagonal;

  bool has_endpoint(int p) const { return a == p || b == p; }
  bool is_white() const { return kind != ChordKind::BlackDiagonal; }

  friend bool operator==(const Chord&, const Chord&) = default;
  friend auto operator<=>(const Chord&, const Chord&) = default;
};

// Chord between white vertices u and v (white labels). Classified as boundary
// edge or diagonal; throws InvalidArgument if u == v or out of range.
Chord white_chord(const PointCycle& cycle, int u, int v);

// Black diagonal between black vertices u and v; throws if they coincide or
// are adjacent.
Chord black_chord(const PointCycle& cycle, int u, int v);

// White labels of a white chord / black labels of a black chord, ascending.
std::pair<int, int> labels(const Chord& c);

// "0-2" for white chords, "b1-b4" for black ones.
std::string to_string(const Chord& c);

bool crosses(const Chord& c1, const Chord& c2);

// True iff x lies strictly inside the counterclockwise arc from q to p, i.e.
// to the left of the directed chord p -> q.
bool left_of(const PointCycle& cycle, int p, int q, int x);

std::optional<int> shared_endpoint(const Chord& c1, const Chord& c2);

class Dissection {
 public:
  Dissection(PointCycle cycle, std::vector<Chord> diagonals);

  const PointCycle& cycle() const { return cycle_; }
  int m() const { return cycle_.m; }
  // The order of this list fixes the coordinate order of every g-vector.
  const std::vector<Chord>& diagonals() const { return diagonals_; }
  std::size_t size() const { return diagonals_.size(); }
  bool empty() const { return diagonals_.empty(); }

  // Index of a diagonal in diagonals(), or nullopt.
  std::optional<std::size_t> index_of(const Chord& c) const;
  bool contains(const Chord& c) const { return index_of(c).has_value(); }

  // White-label pairs in coordinate order.
  std::vector<std::pair<int, int>> label_pairs() const;

 private:
  PointCycle cycle_;
  std::vector<Chord> diagonals_;
};

// Validates white-label pairs into a Dissection, preserving input order.
// Throws AdjacentVertices, CrossingPair, DuplicateDiagonal or InvalidArgument.
Dissection validate_dissection(int m, std::span<const std::pair<int, int>> pairs);

struct Cell {
  std::vector<Chord> sides;  // counterclockwise; sides[i] joins vertices[i], vertices[i+1]
  std::vector<int> vertices;  // white labels, rotated to start at the smallest
};

// Faces of the dissection, found by walking the rotation system at each white
// vertex. Sorted lexicographically by vertex list.
std::vector<Cell> cells(const Dissection& d);

std::vector<Chord> white_diagonals(const PointCycle& cycle);
std::vector<Chord> black_diagonals(const PointCycle& cycle);

// Every dissection of the white m-gon, diagonals listed in white_diagonals()
// order. Deterministic.
std::vector<Dissection> enumerate_dissections(int m, bool include_empty);

}  // namespace accordion_tau::geometry
