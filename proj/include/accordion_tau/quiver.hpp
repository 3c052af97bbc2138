#pragma once

#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "accordion_tau/geometry.hpp"

// Gentle quivers with length-2 monomial relations and their path algebras.
// Paths compose left to right: the path "a b" traverses a, then b.
namespace accordion_tau::quiver {

struct Arrow {
  std::string name;
  int src = 0;
  int tgt = 0;
};

struct GentleQuiver {
  std::vector<std::string> vertices;
  std::vector<Arrow> arrows;
  std::set<std::pair<int, int>> relations;  // (a, b): "a then b" is zero

  int num_vertices() const { return static_cast<int>(vertices.size()); }
  int num_arrows() const { return static_cast<int>(arrows.size()); }
  bool is_relation(int a, int b) const { return relations.count({a, b}) > 0; }
};

struct Path {
  int src = 0;
  int tgt = 0;
  std::vector<int> arrows;  // empty for the lazy path at src

  std::size_t length() const { return arrows.size(); }
  friend bool operator==(const Path&, const Path&) = default;
};

std::string to_string(const GentleQuiver& q, const Path& p);

// Basis of kQ/I given by relation-free paths, with its multiplication table.
// Paths 0..n-1 are the lazy paths e_0..e_{n-1}.
class AlgebraBasis {
 public:
  explicit AlgebraBasis(GentleQuiver q);

  const GentleQuiver& quiver() const { return quiver_; }
  const std::vector<Path>& paths() const { return paths_; }
  std::size_t dimension() const { return paths_.size(); }
  const Path& path(int index) const { return paths_[index]; }

  int lazy(int vertex) const { return vertex; }
  // Basis index of p*q (p then q), or -1 when the product vanishes.
  int product(int p, int q) const { return table_[p * paths_.size() + q]; }
  // Basis index of the path, or -1 if it is not a basis path.
  int index_of(int src, std::span<const int> arrows) const;
  // Indices of basis paths from `from` to `to`, i.e. a basis of e_from L e_to.
  const std::vector<int>& between(int from, int to) const {
    return between_[from * quiver_.num_vertices() + to];
  }
  // Position of a path inside its between(src, tgt) list.
  int slot(int index) const { return slot_[index]; }

 private:
  GentleQuiver quiver_;
  std::vector<Path> paths_;
  std::vector<int> table_;
  std::vector<std::vector<int>> between_;
  std::vector<int> slot_;
};

// Throws InfiniteDimensional if a relation-free path longer than
// 2 * |arrows| exists (then a relation-free cycle does too).
AlgebraBasis algebra_basis(const GentleQuiver& q);

// Vertices are the diagonals (in coordinate order); an arrow joins each pair
// of counterclockwise-consecutive diagonal sides of a cell, and each
// consecutive triple of diagonal sides gives a relation. Throws EmptyDissection.
GentleQuiver quiver_of_dissection(const geometry::Dissection& d);

// Empty when the quiver is gentle; otherwise one line per violation.
std::vector<std::string> check_gentle(const GentleQuiver& q);

struct ShortcutQuiver {
  GentleQuiver quiver;
  std::vector<int> vertices;         // original vertex of each shortcut vertex
  std::vector<Path> arrow_paths;     // original path of each shortcut arrow
};

// Arrows are the nonzero paths of length >= 1 with endpoints in J and no
// internal vertex in J; relations are the composable pairs whose concatenation
// vanishes. J is sorted and deduplicated. Throws EmptySubset.
ShortcutQuiver shortcut(const GentleQuiver& q, std::span<const int> subset);
GentleQuiver shortcut_quiver(const GentleQuiver& q, std::span<const int> subset);

struct SubalgebraReport {
  bool pass = true;
  std::size_t dimension = 0;  // dim e_J L e_J
  std::vector<std::string> mismatches;
};

// Checks that factoring the paths of e_J L e_J at their J-visits is an
// algebra isomorphism onto the path algebra of the shortcut quiver.
SubalgebraReport idempotent_subalgebra_check(const GentleQuiver& q, std::span<const int> subset);

// Structural equality under vertex_map (vertex of a -> vertex of b): arrows
// must correspond by endpoints and relations must correspond under that arrow
// bijection. Parallel arrows are resolved by search.
bool same_quiver(const GentleQuiver& a, const GentleQuiver& b, std::span<const int> vertex_map);

}  // namespace accordion_tau::quiver
