#include "accordion_tau/accordion.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "accordion_tau/errors.hpp"

namespace accordion_tau::accordion {

using geometry::ChordKind;
using geometry::crosses;

namespace {

std::string chord_list(const std::vector<Chord>& chords) {
  std::string s = "[";
  for (std::size_t i = 0; i < chords.size(); ++i) s += (i ? ", " : "") + geometry::to_string(chords[i]);
  return s + "]";
}

void require_black(const Chord& black) {
  if (black.kind != ChordKind::BlackDiagonal)
    throw Error(ErrorCode::InvalidArgument, geometry::to_string(black) + " is not a black diagonal");
}

nlohmann::json black_payload(const Chord& black) {
  const auto [u, v] = geometry::labels(black);
  return {{"black", {u, v}}};
}

}  // namespace

CrossingResult crossing_sequence(const Dissection& d, const Chord& black) {
  return crossing_sequence(d, geometry::cells(d), black);
}

CrossingResult crossing_sequence(const Dissection& d, const std::vector<Cell>& cells,
                                 const Chord& black) {
  require_black(black);
  std::vector<std::vector<Chord>> hit(cells.size());
  for (std::size_t c = 0; c < cells.size(); ++c) {
    for (const auto& side : cells[c].sides)
      if (crosses(side, black)) hit[c].push_back(side);
    const auto& h = hit[c];
    if (h.size() == 0) continue;
    if (h.size() != 2 || !geometry::shared_endpoint(h[0], h[1]))
      return NotAccordion{c, h};
  }

  const auto& cycle = d.cycle();
  const int p = black.a;
  const int lo = cycle.reduce(p - 1);
  const int hi = cycle.reduce(p + 1);
  const Chord first{std::min(lo, hi), std::max(lo, hi), ChordKind::WhiteBoundary};

  CrossingSequence seq{black, p, {first}};
  std::size_t cell = cells.size();
  for (std::size_t c = 0; c < cells.size(); ++c)
    if (std::find(hit[c].begin(), hit[c].end(), first) != hit[c].end()) cell = c;

  Chord current = first;
  std::size_t prev_cell = cells.size();
  while (cell < cells.size()) {
    const Chord next = hit[cell][0] == current ? hit[cell][1] : hit[cell][0];
    seq.crossed.push_back(next);
    if (next.kind == ChordKind::WhiteBoundary) break;
    prev_cell = cell;
    current = next;
    cell = cells.size();
    for (std::size_t c = 0; c < cells.size(); ++c)
      if (c != prev_cell && std::find(hit[c].begin(), hit[c].end(), current) != hit[c].end()) cell = c;
  }
  return seq;
}

CrossingSequence reversed(const CrossingSequence& seq) {
  CrossingSequence out = seq;
  out.start = seq.start == seq.black.a ? seq.black.b : seq.black.a;
  std::reverse(out.crossed.begin(), out.crossed.end());
  return out;
}

int sign(const Chord& delta_white, const Dissection& d, const CrossingSequence& seq) {
  const auto& x = seq.crossed;
  std::size_t pos = 0;
  while (pos < x.size() && x[pos] != delta_white) ++pos;
  if (pos == 0 || pos + 1 >= x.size() || delta_white.kind != ChordKind::WhiteDiagonal)
    throw Error(ErrorCode::NotCrossed,
                geometry::to_string(delta_white) + " is not crossed by " + geometry::to_string(seq.black));

  const auto before = geometry::shared_endpoint(x[pos - 1], delta_white);
  const auto after = geometry::shared_endpoint(x[pos + 1], delta_white);
  if (!before || !after)
    throw Error(ErrorCode::InvalidArgument, "crossing sequence is not an accordion walk");
  if (*before == *after) return 0;

  const int from = seq.start;
  const int to = from == seq.black.a ? seq.black.b : seq.black.a;
  return geometry::left_of(d.cycle(), from, to, *before) ? 1 : -1;
}

std::vector<int> g_vector(const Dissection& d, const Chord& black) {
  const auto cells = geometry::cells(d);
  const auto result = crossing_sequence(d, cells, black);
  if (const auto* bad = std::get_if<NotAccordion>(&result))
    throw Error(ErrorCode::NotAccordion, geometry::to_string(black) + " crosses " +
                                             chord_list(bad->crossed_sides) + " in cell " +
                                             std::to_string(bad->cell));
  const auto& seq = std::get<CrossingSequence>(result);
  std::vector<int> g(d.size(), 0);
  for (std::size_t i = 1; i + 1 < seq.crossed.size(); ++i)
    g[*d.index_of(seq.crossed[i])] = sign(seq.crossed[i], d, seq);
  return g;
}

std::vector<AccordionVertex> accordion_vertices(const Dissection& d) {
  const auto cells = geometry::cells(d);
  std::vector<AccordionVertex> out;
  for (const auto& black : geometry::black_diagonals(d.cycle())) {
    const auto result = crossing_sequence(d, cells, black);
    const auto* seq = std::get_if<CrossingSequence>(&result);
    if (!seq) continue;
    std::vector<int> g(d.size(), 0);
    for (std::size_t i = 1; i + 1 < seq->crossed.size(); ++i)
      g[*d.index_of(seq->crossed[i])] = sign(seq->crossed[i], d, *seq);
    out.push_back({black, std::move(g)});
  }
  return out;
}

complexes::LabeledComplex accordion_complex(const Dissection& d) {
  if (d.empty()) throw Error(ErrorCode::EmptyDissection, "accordion complex needs a diagonal");
  const auto found = accordion_vertices(d);
  std::vector<complexes::Vertex> vertices;
  for (const auto& v : found)
    vertices.push_back({v.g, geometry::to_string(v.black), black_payload(v.black)});

  const std::size_t n = found.size();
  std::vector<std::vector<bool>> compatible(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      compatible[i][j] = i != j && !crosses(found[i].black, found[j].black);

  auto c = complexes::flag_complex(d.size(), std::move(vertices), compatible);
  for (const auto& f : c.facets)
    if (f.size() != d.size())
      throw Error(ErrorCode::NonPure, "accordion facet of size " + std::to_string(f.size()) +
                                          ", expected " + std::to_string(d.size()));
  return c;
}

complexes::IsoReport verify_nested(const Dissection& d, const Dissection& d_prime) {
  if (d.m() != d_prime.m())
    throw Error(ErrorCode::NotNested, "dissections live on different polygons");
  std::vector<int> coordinates;
  for (const auto& c : d.diagonals()) {
    const auto idx = d_prime.index_of(c);
    if (!idx) throw Error(ErrorCode::NotNested, geometry::to_string(c) + " is missing from the larger dissection");
    coordinates.push_back(static_cast<int>(*idx));
  }

  const auto small = accordion_complex(d);
  const auto induced =
      complexes::induced_subcomplex_on_coordinates(accordion_complex(d_prime), coordinates);

  complexes::IsoReport r;
  r.status = complexes::IsoStatus::Pass;
  std::map<nlohmann::json, int> by_black;
  for (std::size_t w = 0; w < induced.vertices.size(); ++w)
    by_black[induced.vertices[w].payload["black"]] = static_cast<int>(w);
  r.vertex_map.assign(small.vertices.size(), -1);
  std::vector<bool> reached(induced.vertices.size(), false);
  for (std::size_t v = 0; v < small.vertices.size(); ++v) {
    const auto it = by_black.find(small.vertices[v].payload["black"]);
    if (it == by_black.end()) {
      r.failures.push_back(small.vertices[v].label + " missing from the induced subcomplex");
      continue;
    }
    r.vertex_map[v] = it->second;
    reached[it->second] = true;
  }
  for (std::size_t w = 0; w < induced.vertices.size(); ++w)
    if (!reached[w]) r.failures.push_back(induced.vertices[w].label + " is not a vertex of the smaller complex");

  if (r.failures.empty()) {
    std::set<complexes::Facet> target(induced.facets.begin(), induced.facets.end());
    std::set<complexes::Facet> image;
    for (const auto& f : small.facets) {
      complexes::Facet mapped;
      for (int v : f) mapped.push_back(r.vertex_map[v]);
      std::sort(mapped.begin(), mapped.end());
      image.insert(std::move(mapped));
    }
    if (image != target) r.failures.push_back("facet sets differ under the identity on black diagonals");
  }
  if (!r.failures.empty()) r.status = complexes::IsoStatus::NotIsomorphic;
  return r;
}

}  // namespace accordion_tau::accordion
