#include "accordion_tau/quiver.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "accordion_tau/errors.hpp"

namespace accordion_tau::quiver {

namespace {

std::map<std::pair<int, std::vector<int>>, int> index_paths(const std::vector<Path>& paths) {
  std::map<std::pair<int, std::vector<int>>, int> out;
  for (std::size_t i = 0; i < paths.size(); ++i)
    out.emplace(std::make_pair(paths[i].src, paths[i].arrows), static_cast<int>(i));
  return out;
}

std::vector<int> normalized_subset(const GentleQuiver& q, std::span<const int> subset) {
  std::vector<int> j(subset.begin(), subset.end());
  std::sort(j.begin(), j.end());
  j.erase(std::unique(j.begin(), j.end()), j.end());
  if (j.empty()) throw Error(ErrorCode::EmptySubset, "vertex subset J must be non-empty");
  for (int v : j)
    if (v < 0 || v >= q.num_vertices())
      throw Error(ErrorCode::InvalidArgument, "vertex " + std::to_string(v) + " not in quiver");
  return j;
}

}  // namespace

std::string to_string(const GentleQuiver& q, const Path& p) {
  if (p.arrows.empty()) return "e_" + q.vertices[p.src];
  std::string s;
  for (std::size_t i = 0; i < p.arrows.size(); ++i) s += (i ? "*" : "") + q.arrows[p.arrows[i]].name;
  return s;
}

AlgebraBasis::AlgebraBasis(GentleQuiver q) : quiver_(std::move(q)) {
  const int n = quiver_.num_vertices();
  const int na = quiver_.num_arrows();
  for (const auto& a : quiver_.arrows)
    if (a.src < 0 || a.src >= n || a.tgt < 0 || a.tgt >= n)
      throw Error(ErrorCode::InvalidArgument, "arrow " + a.name + " has an endpoint outside the quiver");
  for (const auto& [a, b] : quiver_.relations)
    if (a < 0 || a >= na || b < 0 || b >= na)
      throw Error(ErrorCode::InvalidArgument, "relation refers to a missing arrow");

  for (int v = 0; v < n; ++v) paths_.push_back({v, v, {}});
  std::vector<Path> frontier;
  for (int a = 0; a < na; ++a) frontier.push_back({quiver_.arrows[a].src, quiver_.arrows[a].tgt, {a}});
  const std::size_t bound = 2 * static_cast<std::size_t>(na);
  while (!frontier.empty()) {
    if (frontier.front().length() > bound)
      throw Error(ErrorCode::InfiniteDimensional,
                  "relation-free path longer than " + std::to_string(bound) + ": " +
                      to_string(quiver_, frontier.front()));
    std::vector<Path> next;
    for (const auto& p : frontier) {
      paths_.push_back(p);
      for (int b = 0; b < na; ++b) {
        if (quiver_.arrows[b].src != p.tgt || quiver_.is_relation(p.arrows.back(), b)) continue;
        Path longer = p;
        longer.arrows.push_back(b);
        longer.tgt = quiver_.arrows[b].tgt;
        next.push_back(std::move(longer));
      }
    }
    frontier = std::move(next);
  }

  const auto lookup = index_paths(paths_);
  const std::size_t dim = paths_.size();
  table_.assign(dim * dim, -1);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) {
      const Path& p = paths_[i];
      const Path& r = paths_[j];
      if (p.tgt != r.src) continue;
      if (p.arrows.empty()) {
        table_[i * dim + j] = static_cast<int>(j);
      } else if (r.arrows.empty()) {
        table_[i * dim + j] = static_cast<int>(i);
      } else if (!quiver_.is_relation(p.arrows.back(), r.arrows.front())) {
        std::vector<int> word = p.arrows;
        word.insert(word.end(), r.arrows.begin(), r.arrows.end());
        const auto it = lookup.find({p.src, word});
        if (it != lookup.end()) table_[i * dim + j] = it->second;
      }
    }

  between_.assign(static_cast<std::size_t>(n) * n, {});
  slot_.assign(dim, 0);
  for (std::size_t i = 0; i < dim; ++i) {
    auto& block = between_[paths_[i].src * n + paths_[i].tgt];
    slot_[i] = static_cast<int>(block.size());
    block.push_back(static_cast<int>(i));
  }
}

int AlgebraBasis::index_of(int src, std::span<const int> arrows) const {
  // Walk the word through the multiplication table.
  if (src < 0 || src >= quiver_.num_vertices()) return -1;
  int current = lazy(src);
  for (int a : arrows) {
    if (a < 0 || a >= quiver_.num_arrows()) return -1;
    current = product(current, quiver_.num_vertices() + a);
    if (current < 0) return -1;
  }
  return current;
}

AlgebraBasis algebra_basis(const GentleQuiver& q) { return AlgebraBasis(q); }

GentleQuiver quiver_of_dissection(const geometry::Dissection& d) {
  if (d.empty()) throw Error(ErrorCode::EmptyDissection, "quiver of a dissection needs a diagonal");
  GentleQuiver q;
  for (const auto& c : d.diagonals()) q.vertices.push_back(geometry::to_string(c));

  for (const auto& cell : geometry::cells(d)) {
    const std::size_t k = cell.sides.size();
    std::vector<int> vertex(k, -1);
    for (std::size_t i = 0; i < k; ++i)
      if (const auto idx = d.index_of(cell.sides[i])) vertex[i] = static_cast<int>(*idx);

    // arrow_at[i]: arrow from side i to side i+1, if both are diagonals.
    std::vector<int> arrow_at(k, -1);
    for (std::size_t i = 0; i < k; ++i) {
      const int from = vertex[i];
      const int to = vertex[(i + 1) % k];
      if (from < 0 || to < 0) continue;
      arrow_at[i] = q.num_arrows();
      q.arrows.push_back({"a" + std::to_string(q.arrows.size()), from, to});
    }
    for (std::size_t i = 0; i < k; ++i) {
      const int first = arrow_at[i];
      const int second = arrow_at[(i + 1) % k];
      if (first >= 0 && second >= 0) q.relations.insert({first, second});
    }
  }
  return q;
}

std::vector<std::string> check_gentle(const GentleQuiver& q) {
  std::vector<std::string> issues;
  const int n = q.num_vertices();
  const int na = q.num_arrows();
  std::vector<int> in(n, 0), out(n, 0);
  for (const auto& a : q.arrows) {
    if (a.src < 0 || a.src >= n || a.tgt < 0 || a.tgt >= n) {
      issues.push_back("arrow " + a.name + " has an endpoint outside the quiver");
      continue;
    }
    ++out[a.src];
    ++in[a.tgt];
  }
  for (int v = 0; v < n; ++v) {
    if (out[v] > 2) issues.push_back("vertex " + q.vertices[v] + " has " + std::to_string(out[v]) + " outgoing arrows");
    if (in[v] > 2) issues.push_back("vertex " + q.vertices[v] + " has " + std::to_string(in[v]) + " incoming arrows");
  }
  for (const auto& [a, b] : q.relations) {
    if (a < 0 || a >= na || b < 0 || b >= na) {
      issues.push_back("relation refers to a missing arrow");
      continue;
    }
    if (q.arrows[a].tgt != q.arrows[b].src)
      issues.push_back("relation (" + q.arrows[a].name + "," + q.arrows[b].name + ") is not composable");
  }
  if (!issues.empty()) return issues;

  for (int b = 0; b < na; ++b) {
    int zero_before = 0, nonzero_before = 0, zero_after = 0, nonzero_after = 0;
    for (int a = 0; a < na; ++a) {
      if (q.arrows[a].tgt == q.arrows[b].src) (q.is_relation(a, b) ? zero_before : nonzero_before)++;
      if (q.arrows[b].tgt == q.arrows[a].src) (q.is_relation(b, a) ? zero_after : nonzero_after)++;
    }
    const auto& name = q.arrows[b].name;
    if (zero_before > 1) issues.push_back(name + " is preceded by " + std::to_string(zero_before) + " arrows with zero composite");
    if (nonzero_before > 1) issues.push_back(name + " is preceded by " + std::to_string(nonzero_before) + " arrows with nonzero composite");
    if (zero_after > 1) issues.push_back(name + " is followed by " + std::to_string(zero_after) + " arrows with zero composite");
    if (nonzero_after > 1) issues.push_back(name + " is followed by " + std::to_string(nonzero_after) + " arrows with nonzero composite");
  }
  return issues;
}

ShortcutQuiver shortcut(const GentleQuiver& q, std::span<const int> subset) {
  const auto j = normalized_subset(q, subset);
  const AlgebraBasis basis(q);
  std::vector<int> position(q.num_vertices(), -1);
  for (std::size_t i = 0; i < j.size(); ++i) position[j[i]] = static_cast<int>(i);

  ShortcutQuiver s;
  s.vertices = j;
  for (int v : j) s.quiver.vertices.push_back(q.vertices[v]);
  for (const auto& p : basis.paths()) {
    if (p.arrows.empty() || position[p.src] < 0 || position[p.tgt] < 0) continue;
    bool internal_hit = false;
    for (std::size_t k = 0; k + 1 < p.arrows.size(); ++k)
      internal_hit = internal_hit || position[q.arrows[p.arrows[k]].tgt] >= 0;
    if (internal_hit) continue;
    s.quiver.arrows.push_back({to_string(q, p), position[p.src], position[p.tgt]});
    s.arrow_paths.push_back(p);
  }
  const int na = s.quiver.num_arrows();
  for (int x = 0; x < na; ++x)
    for (int y = 0; y < na; ++y) {
      if (s.quiver.arrows[x].tgt != s.quiver.arrows[y].src) continue;
      const int px = basis.index_of(s.arrow_paths[x].src, s.arrow_paths[x].arrows);
      const int py = basis.index_of(s.arrow_paths[y].src, s.arrow_paths[y].arrows);
      if (basis.product(px, py) < 0) s.quiver.relations.insert({x, y});
    }
  return s;
}

GentleQuiver shortcut_quiver(const GentleQuiver& q, std::span<const int> subset) {
  return shortcut(q, subset).quiver;
}

SubalgebraReport idempotent_subalgebra_check(const GentleQuiver& q, std::span<const int> subset) {
  const AlgebraBasis big(q);
  const ShortcutQuiver s = shortcut(q, subset);
  SubalgebraReport r;
  for (auto& issue : check_gentle(s.quiver)) r.mismatches.push_back("shortcut quiver: " + issue);

  const AlgebraBasis small(s.quiver);
  std::vector<int> position(q.num_vertices(), -1);
  for (std::size_t i = 0; i < s.vertices.size(); ++i) position[s.vertices[i]] = static_cast<int>(i);
  std::map<std::pair<int, std::vector<int>>, int> shortcut_arrow;
  for (std::size_t a = 0; a < s.arrow_paths.size(); ++a)
    shortcut_arrow.emplace(std::make_pair(s.arrow_paths[a].src, s.arrow_paths[a].arrows), static_cast<int>(a));

  // phi: e_J L e_J basis -> shortcut algebra basis.
  std::vector<int> corner;
  std::map<int, int> phi;
  for (std::size_t i = 0; i < big.dimension(); ++i) {
    const Path& p = big.path(static_cast<int>(i));
    if (position[p.src] < 0 || position[p.tgt] < 0) continue;
    corner.push_back(static_cast<int>(i));
    std::vector<int> word;
    std::vector<int> segment;
    int segment_src = p.src;
    bool ok = true;
    for (int a : p.arrows) {
      segment.push_back(a);
      const int v = q.arrows[a].tgt;
      if (position[v] < 0) continue;
      const auto it = shortcut_arrow.find({segment_src, segment});
      if (it == shortcut_arrow.end()) {
        ok = false;
        break;
      }
      word.push_back(it->second);
      segment.clear();
      segment_src = v;
    }
    const int image = ok ? small.index_of(position[p.src], word) : -1;
    if (image < 0) r.mismatches.push_back("path " + to_string(q, p) + " has no image in the shortcut algebra");
    phi[static_cast<int>(i)] = image;
  }
  r.dimension = corner.size();

  std::vector<int> hits(small.dimension(), 0);
  for (const auto& [p, img] : phi)
    if (img >= 0 && ++hits[img] == 2)
      r.mismatches.push_back("two paths map to " + to_string(s.quiver, small.path(img)));
  for (std::size_t k = 0; k < small.dimension(); ++k)
    if (hits[k] == 0)
      r.mismatches.push_back("shortcut path " + to_string(s.quiver, small.path(static_cast<int>(k))) + " not hit");

  if (r.mismatches.empty())
    for (int p : corner)
      for (int t : corner) {
        const int prod = big.product(p, t);
        const int lhs = prod < 0 ? -1 : phi.at(prod);
        const int rhs = small.product(phi.at(p), phi.at(t));
        if (lhs != rhs)
          r.mismatches.push_back("products differ for " + to_string(q, big.path(p)) + " * " +
                                 to_string(q, big.path(t)));
      }
  r.pass = r.mismatches.empty();
  return r;
}

bool same_quiver(const GentleQuiver& a, const GentleQuiver& b, std::span<const int> vertex_map) {
  if (a.num_vertices() != b.num_vertices() || a.num_arrows() != b.num_arrows() ||
      a.relations.size() != b.relations.size() ||
      vertex_map.size() != static_cast<std::size_t>(a.num_vertices()))
    return false;
  const int na = a.num_arrows();
  std::vector<int> arrow_map(na, -1);
  std::vector<bool> used(na, false);

  std::function<bool(int)> assign = [&](int x) -> bool {
    if (x == na) {
      for (const auto& [p, r] : a.relations)
        if (!b.is_relation(arrow_map[p], arrow_map[r])) return false;
      return true;
    }
    for (int y = 0; y < na; ++y) {
      if (used[y] || b.arrows[y].src != vertex_map[a.arrows[x].src] ||
          b.arrows[y].tgt != vertex_map[a.arrows[x].tgt])
        continue;
      used[y] = true;
      arrow_map[x] = y;
      if (assign(x + 1)) return true;
      used[y] = false;
    }
    return false;
  };
  return assign(0);
}

}  // namespace accordion_tau::quiver
