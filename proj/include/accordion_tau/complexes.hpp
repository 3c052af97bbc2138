#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace accordion_tau::complexes {

using GVector = std::vector<int>;
using Facet = std::vector<int>;  // sorted vertex indices

struct Vertex {
  GVector g;
  std::string label;         // short human-readable name, used in DOT output
  nlohmann::json payload;    // module-specific fields merged into the JSON export
};

// Abstract simplicial complex stored by its facets. Every vertex lies in at
// least one facet; facets are inclusion-maximal, sorted and pairwise distinct.
struct LabeledComplex {
  std::size_t label_length = 0;
  std::vector<Vertex> vertices;
  std::vector<Facet> facets;  // sorted lexicographically
};

// Maximal cliques of an undirected graph given by a symmetric adjacency
// matrix (Bron-Kerbosch with pivoting). Each clique sorted; result sorted.
std::vector<Facet> maximal_cliques(const std::vector<std::vector<bool>>& adjacent);

// Complex whose faces are the pairwise-compatible vertex sets.
LabeledComplex flag_complex(std::size_t label_length, std::vector<Vertex> vertices,
                            const std::vector<std::vector<bool>>& compatible);

// Subcomplex induced on the vertices kept by `keep`, vertices renumbered in
// order. Facets are the maximal traces of the original facets.
LabeledComplex induced_subcomplex(const LabeledComplex& c, const std::vector<bool>& keep);

// Subcomplex on vertices whose g-vector vanishes outside `coordinates`, with
// labels restricted to those coordinates (in the given order).
LabeledComplex induced_subcomplex_on_coordinates(const LabeledComplex& c,
                                                 std::span<const int> coordinates);

bool is_pure(const LabeledComplex& c);

struct ExchangeGraph {
  std::vector<Facet> nodes;
  std::vector<std::pair<int, int>> edges;  // i < j, sorted

  std::vector<int> degrees() const;
  bool is_regular(int degree) const;
};

// Nodes are facets; an edge joins facets sharing all but one vertex.
// Throws NonPure if the complex is not pure.
ExchangeGraph dual_graph(const LabeledComplex& c);

struct PseudomanifoldReport {
  bool pure = true;
  bool thin = true;       // every ridge in exactly two facets
  bool connected = true;  // facet adjacency graph connected
  std::vector<std::string> witnesses;

  bool pass() const { return pure && thin && connected; }
};

PseudomanifoldReport is_pseudomanifold(const LabeledComplex& c);

enum class IsoStatus {
  Pass,
  NotIsomorphic,
  IsomorphicNotViaGVectors,  // points at a sign or orientation convention error
  Undecided,                 // g-map failed and the generic search hit its size limit
};

const char* to_string(IsoStatus s);

struct IsoReport {
  IsoStatus status = IsoStatus::NotIsomorphic;
  std::vector<int> vertex_map;  // first-complex vertex -> second-complex vertex, -1 if unmatched
  std::vector<std::string> failures;

  bool passed() const { return status == IsoStatus::Pass; }
};

// Matches vertices by equal g-vectors after sending coordinate i of the first
// complex to coordinate coordinate_map[i] of the second (empty map = identity)
// and checks facets correspond exactly. Throws LabelLengthMismatch.
IsoReport iso_by_gvectors(const LabeledComplex& c1, const LabeledComplex& c2,
                          std::span<const int> coordinate_map = {});

// Exact backtracking search for a facet-preserving vertex bijection. Throws
// SizeLimit if either complex has more than vertex_limit vertices.
std::optional<std::vector<int>> generic_iso(const LabeledComplex& c1, const LabeledComplex& c2,
                                            std::size_t vertex_limit = 64);

// g-vector fan checks over all facets.
struct FanReport {
  bool injective = true;
  bool sign_coherent = true;
  bool independent = true;
  std::vector<std::string> failures;

  bool pass() const { return injective && sign_coherent && independent; }
};

FanReport check_gvector_fan(const LabeledComplex& c);

nlohmann::json to_json(const LabeledComplex& c);
nlohmann::json to_json(const IsoReport& r);
nlohmann::json to_json(const ExchangeGraph& g);
std::string to_dot(const LabeledComplex& c, const ExchangeGraph& g);
// One line per vertex and facet, then the exchange graph size.
std::string to_text(const LabeledComplex& c, const ExchangeGraph& g);

}  // namespace accordion_tau::complexes
