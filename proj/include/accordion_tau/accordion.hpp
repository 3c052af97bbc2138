#pragma once

#include <variant>
#include <vector>

#include "accordion_tau/complexes.hpp"
#include "accordion_tau/geometry.hpp"

namespace accordion_tau::accordion {

using geometry::Cell;
using geometry::Chord;
using geometry::Dissection;

// White chords met by a black diagonal, in order from its lower-index
// endpoint. Starts and ends with a boundary edge; the interior entries are the
// crossed diagonals of the reference dissection.
struct CrossingSequence {
  Chord black;
  int start = 0;  // endpoint of black the walk leaves from
  std::vector<Chord> crossed;
};

// Witness that a black diagonal is not an accordion diagonal: it meets two
// non-adjacent sides of this cell.
struct NotAccordion {
  std::size_t cell = 0;
  std::vector<Chord> crossed_sides;
};

using CrossingResult = std::variant<CrossingSequence, NotAccordion>;

CrossingResult crossing_sequence(const Dissection& d, const Chord& black);
CrossingResult crossing_sequence(const Dissection& d, const std::vector<Cell>& cells,
                                 const Chord& black);

// Same chords, walked from the higher-index endpoint.
CrossingSequence reversed(const CrossingSequence& seq);

// +1 / -1 / 0 for a Z / S / V around delta_white. The orientation follows the
// walk order of seq, and the result does not depend on it. Throws NotCrossed.
int sign(const Chord& delta_white, const Dissection& d, const CrossingSequence& seq);

// Throws NotAccordion (as an Error) when black is not an accordion diagonal.
std::vector<int> g_vector(const Dissection& d, const Chord& black);

struct AccordionVertex {
  Chord black;
  std::vector<int> g;
};

// All accordion diagonals with their g-vectors, in black_diagonals() order.
std::vector<AccordionVertex> accordion_vertices(const Dissection& d);

// Faces are sets of pairwise non-crossing accordion diagonals. Throws
// EmptyDissection, and NonPure if a maximal face has the wrong size.
complexes::LabeledComplex accordion_complex(const Dissection& d);

// Compares accordion_complex(d) with the subcomplex of
// accordion_complex(d_prime) whose g-vectors vanish off d, matching vertices
// by black diagonal. Throws NotNested unless d is a subset of d_prime.
complexes::IsoReport verify_nested(const Dissection& d, const Dissection& d_prime);

}  // namespace accordion_tau::accordion
