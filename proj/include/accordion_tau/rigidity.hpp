#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "accordion_tau/complexes.hpp"
#include "accordion_tau/linalg.hpp"
#include "accordion_tau/quiver.hpp"

// String modules, minimal projective presentations and rigidity of 2-term
// complexes of projectives over a gentle algebra L = kQ/I.
//
// Conventions: modules are right modules, so an arrow a: i -> j acts as a map
// M e_i -> M e_j and a relation (a, b) forces map(b) * map(a) = 0. The
// indecomposable projective e_i L is spanned by the paths leaving i, and a
// morphism e_i L -> e_j L is left multiplication by an element of e_j L e_i.
namespace accordion_tau::rigidity {

using quiver::AlgebraBasis;
using quiver::GentleQuiver;

enum class Direction { Forward, Inverse };

struct Letter {
  int arrow = 0;
  Direction dir = Direction::Forward;

  friend bool operator==(const Letter&, const Letter&) = default;
};

// Walk in the quiver avoiding relations and backtracking. The canonical
// representative of {w, w^-1} is the lexicographically smaller encoding.
struct StringWord {
  int start = 0;
  std::vector<Letter> letters;

  std::size_t length() const { return letters.size(); }
  friend bool operator==(const StringWord&, const StringWord&) = default;
};

std::vector<int> walk(const GentleQuiver& q, const StringWord& w);
StringWord inverse(const GentleQuiver& q, const StringWord& w);
std::string to_string(const GentleQuiver& q, const StringWord& w);

// All strings up to inversion, including one lazy string per vertex; ordered
// by length, then start vertex, then letters. Throws BandDetected when a
// string exceeds 2 * |arrows| letters.
std::vector<StringWord> enumerate_strings(const GentleQuiver& q);

struct Representation {
  std::vector<int> dims;
  std::vector<linalg::Matrix> maps;  // maps[a] is dims[tgt] x dims[src]
};

Representation string_module(const GentleQuiver& q, const StringWord& w);

// Sparse element of L: basis path index -> coefficient.
using PathCombination = std::map<int, linalg::Rational>;

// P1 -> P0 with P1 = sum of e_{p1[c]} L and P0 = sum of e_{p0[r]} L.
// differential[r][c] lies in e_{p0[r]} L e_{p1[c]}; the c-th generator of P1
// goes to sum_r differential[r][c] placed in summand r.
struct TwoTermComplex {
  std::vector<int> p1;
  std::vector<int> p0;
  std::vector<std::vector<PathCombination>> differential;

  std::vector<int> g_vector(int num_vertices) const;
};

TwoTermComplex stalk_projective(int vertex);    // 0 -> e_j L
TwoTermComplex shifted_projective(int vertex);  // e_j L -> 0
TwoTermComplex direct_sum(std::span<const TwoTermComplex> parts);

TwoTermComplex min_presentation(const AlgebraBasis& basis, const Representation& m);

// No differential entry has a lazy-path component, and P1, P0 share no
// summand joined by an invertible entry.
bool is_minimal(const AlgebraBasis& basis, const TwoTermComplex& x);

// dim Hom_K(X, Y[1]) = dim Hom(X1, Y0) / (Hom(X0, Y0) dX + dY Hom(X1, Y1)).
// Throws AlgebraMismatch if either complex does not fit the basis.
std::size_t hom_shift(const AlgebraBasis& basis, const TwoTermComplex& x, const TwoTermComplex& y);

enum class VertexKind { Presentation, ShiftedProjective };

struct SiltingVertex {
  TwoTermComplex complex;
  std::vector<int> g;
  VertexKind kind = VertexKind::Presentation;
  std::optional<StringWord> word;  // for presentations
  int projective = -1;             // for shifted projectives
};

// Minimal presentations of the rigid string modules, then e_j L -> 0 for every
// vertex j; deduplicated by g-vector. Throws NotGentle or BandDetected.
std::vector<SiltingVertex> silting_vertices(const AlgebraBasis& basis);
std::vector<SiltingVertex> silting_vertices(const GentleQuiver& q);

// compatible[i][j] iff i != j and hom_shift vanishes in both directions.
std::vector<std::vector<bool>> compatibility(const AlgebraBasis& basis,
                                             const std::vector<SiltingVertex>& vertices);

// Throws NonPure when a maximal face has fewer than |Q0| vertices.
complexes::LabeledComplex silting_complex(const AlgebraBasis& basis,
                                          const std::vector<SiltingVertex>& vertices);
complexes::LabeledComplex silting_complex(const GentleQuiver& q);

// Subcomplex on vertices whose g-vector vanishes outside J, restricted to J.
complexes::LabeledComplex induced_subcomplex_J(const complexes::LabeledComplex& c,
                                               std::span<const int> subset);

// silting_complex(shortcut_quiver(q, J)) against the J-induced subcomplex of
// silting_complex(q), matched by g-vectors. Throws EmptySubset.
complexes::IsoReport verify_idempotent_reduction(const GentleQuiver& q, std::span<const int> subset);

}  // namespace accordion_tau::rigidity
