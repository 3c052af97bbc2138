#include "accordion_tau/geometry.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "accordion_tau/errors.hpp"

namespace accordion_tau::geometry {

namespace {

std::string pair_text(int u, int v) { return "(" + std::to_string(u) + "," + std::to_string(v) + ")"; }

void require_cycle(const PointCycle& cycle) {
  if (cycle.m < 3)
    throw Error(ErrorCode::InvalidArgument, "polygon needs m >= 3, got " + std::to_string(cycle.m));
}

void require_label(const PointCycle& cycle, int v) {
  if (v < 0 || v >= cycle.m)
    throw Error(ErrorCode::InvalidArgument,
                "vertex " + std::to_string(v) + " outside 0.." + std::to_string(cycle.m - 1));
}

bool labels_adjacent(int m, int u, int v) {
  const int d = ((v - u) % m + m) % m;
  return d == 1 || d == m - 1;
}

bool strictly_between(int lo, int x, int hi) { return lo < x && x < hi; }

}  // namespace

int PointCycle::reduce(int t) const {
  const int n = num_points();
  return ((t % n) + n) % n;
}

Chord white_chord(const PointCycle& cycle, int u, int v) {
  require_cycle(cycle);
  require_label(cycle, u);
  require_label(cycle, v);
  if (u == v) throw Error(ErrorCode::InvalidArgument, "degenerate chord " + pair_text(u, v));
  const int p = cycle.white_point(u);
  const int q = cycle.white_point(v);
  return Chord{std::min(p, q), std::max(p, q),
               labels_adjacent(cycle.m, u, v) ? ChordKind::WhiteBoundary : ChordKind::WhiteDiagonal};
}

Chord black_chord(const PointCycle& cycle, int u, int v) {
  require_cycle(cycle);
  require_label(cycle, u);
  require_label(cycle, v);
  if (u == v || labels_adjacent(cycle.m, u, v))
    throw Error(ErrorCode::InvalidArgument, "not a black diagonal: b" + pair_text(u, v));
  const int p = cycle.black_point(u);
  const int q = cycle.black_point(v);
  return Chord{std::min(p, q), std::max(p, q), ChordKind::BlackDiagonal};
}

std::pair<int, int> labels(const Chord& c) { return {c.a / 2, c.b / 2}; }

std::string to_string(const Chord& c) {
  const auto [u, v] = labels(c);
  if (c.kind == ChordKind::BlackDiagonal) return "b" + std::to_string(u) + "-b" + std::to_string(v);
  return std::to_string(u) + "-" + std::to_string(v);
}

bool crosses(const Chord& c1, const Chord& c2) {
  if (c1.has_endpoint(c2.a) || c1.has_endpoint(c2.b)) return false;
  return strictly_between(c1.a, c2.a, c1.b) != strictly_between(c1.a, c2.b, c1.b);
}

bool left_of(const PointCycle& cycle, int p, int q, int x) {
  p = cycle.reduce(p);
  q = cycle.reduce(q);
  x = cycle.reduce(x);
  if (x == p || x == q)
    throw Error(ErrorCode::InvalidArgument, "left_of: point lies on the chord");
  // Offsets measured counterclockwise from q.
  const int to_x = cycle.reduce(x - q);
  const int to_p = cycle.reduce(p - q);
  return to_x < to_p;
}

std::optional<int> shared_endpoint(const Chord& c1, const Chord& c2) {
  if (c1 == c2) return std::nullopt;
  if (c2.has_endpoint(c1.a)) return c1.a;
  if (c2.has_endpoint(c1.b)) return c1.b;
  return std::nullopt;
}

Dissection::Dissection(PointCycle cycle, std::vector<Chord> diagonals)
    : cycle_(cycle), diagonals_(std::move(diagonals)) {}

std::optional<std::size_t> Dissection::index_of(const Chord& c) const {
  for (std::size_t i = 0; i < diagonals_.size(); ++i)
    if (diagonals_[i] == c) return i;
  return std::nullopt;
}

std::vector<std::pair<int, int>> Dissection::label_pairs() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(diagonals_.size());
  for (const auto& c : diagonals_) out.push_back(labels(c));
  return out;
}

Dissection validate_dissection(int m, std::span<const std::pair<int, int>> pairs) {
  const PointCycle cycle{m};
  require_cycle(cycle);
  std::vector<Chord> chords;
  std::vector<std::pair<int, int>> inputs;
  for (const auto& [u, v] : pairs) {
    const Chord c = white_chord(cycle, u, v);
    if (c.kind == ChordKind::WhiteBoundary)
      throw Error(ErrorCode::AdjacentVertices, pair_text(u, v) + " is a boundary edge");
    for (std::size_t i = 0; i < chords.size(); ++i) {
      if (chords[i] == c)
        throw Error(ErrorCode::DuplicateDiagonal, pair_text(u, v) + " repeats " +
                                                      pair_text(inputs[i].first, inputs[i].second));
      if (crosses(chords[i], c))
        throw Error(ErrorCode::CrossingPair, pair_text(inputs[i].first, inputs[i].second) +
                                                 " crosses " + pair_text(u, v));
    }
    chords.push_back(c);
    inputs.emplace_back(u, v);
  }
  return Dissection(cycle, std::move(chords));
}

std::vector<Cell> cells(const Dissection& d) {
  const int m = d.m();
  const PointCycle& cycle = d.cycle();
  std::vector<std::set<int>> neighbors(m);
  for (int v = 0; v < m; ++v) {
    neighbors[v].insert((v + 1) % m);
    neighbors[v].insert((v + m - 1) % m);
  }
  for (const auto& c : d.diagonals()) {
    const auto [u, v] = labels(c);
    neighbors[u].insert(v);
    neighbors[v].insert(u);
  }
  auto offset = [m](int from, int to) { return ((to - from) % m + m) % m; };

  // Seen from v, the other vertices appear counterclockwise in order of
  // increasing offset. The face to the left of u->v continues along the
  // neighbor just clockwise of u.
  auto next_vertex = [&](int u, int v) {
    const int limit = offset(v, u);
    int best = -1;
    int best_offset = -1;
    for (int w : neighbors[v]) {
      const int o = offset(v, w);
      if (o < limit && o > best_offset) {
        best = w;
        best_offset = o;
      }
    }
    return best;
  };

  std::vector<std::pair<int, int>> starts;
  for (int v = 0; v < m; ++v) starts.emplace_back(v, (v + 1) % m);
  for (const auto& [u, v] : d.label_pairs()) {
    starts.emplace_back(u, v);
    starts.emplace_back(v, u);
  }

  std::set<std::pair<int, int>> used;
  std::vector<Cell> result;
  for (const auto& start : starts) {
    if (used.count(start)) continue;
    std::vector<int> loop;
    std::pair<int, int> e = start;
    do {
      used.insert(e);
      loop.push_back(e.first);
      e = {e.second, next_vertex(e.first, e.second)};
    } while (e != start);

    std::rotate(loop.begin(), std::min_element(loop.begin(), loop.end()), loop.end());
    Cell cell;
    cell.vertices = loop;
    for (std::size_t i = 0; i < loop.size(); ++i)
      cell.sides.push_back(white_chord(cycle, loop[i], loop[(i + 1) % loop.size()]));
    result.push_back(std::move(cell));
  }
  std::sort(result.begin(), result.end(),
            [](const Cell& x, const Cell& y) { return x.vertices < y.vertices; });
  return result;
}

std::vector<Chord> white_diagonals(const PointCycle& cycle) {
  std::vector<Chord> out;
  for (int u = 0; u < cycle.m; ++u)
    for (int v = u + 2; v < cycle.m; ++v)
      if (!labels_adjacent(cycle.m, u, v)) out.push_back(white_chord(cycle, u, v));
  return out;
}

std::vector<Chord> black_diagonals(const PointCycle& cycle) {
  std::vector<Chord> out;
  for (int u = 0; u < cycle.m; ++u)
    for (int v = u + 2; v < cycle.m; ++v)
      if (!labels_adjacent(cycle.m, u, v)) out.push_back(black_chord(cycle, u, v));
  return out;
}

std::vector<Dissection> enumerate_dissections(int m, bool include_empty) {
  const PointCycle cycle{m};
  require_cycle(cycle);
  const auto all = white_diagonals(cycle);
  std::vector<Dissection> out;
  std::vector<Chord> chosen;

  auto recurse = [&](auto&& self, std::size_t next) -> void {
    if (next == all.size()) {
      if (include_empty || !chosen.empty()) out.emplace_back(cycle, chosen);
      return;
    }
    self(self, next + 1);
    const Chord& c = all[next];
    if (std::none_of(chosen.begin(), chosen.end(), [&](const Chord& o) { return crosses(o, c); })) {
      chosen.push_back(c);
      self(self, next + 1);
      chosen.pop_back();
    }
  };
  recurse(recurse, 0);
  return out;
}

}  // namespace accordion_tau::geometry
