#include "accordion_tau/complexes.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <queue>
#include <set>
#include <sstream>

#include "accordion_tau/errors.hpp"
#include "accordion_tau/linalg.hpp"

namespace accordion_tau::complexes {

namespace {

std::string facet_text(const Facet& f) {
  std::string s = "{";
  for (std::size_t i = 0; i < f.size(); ++i) s += (i ? "," : "") + std::to_string(f[i]);
  return s + "}";
}

std::string gvector_text(const GVector& g) {
  std::string s = "(";
  for (std::size_t i = 0; i < g.size(); ++i) s += (i ? "," : "") + std::to_string(g[i]);
  return s + ")";
}

// Drops duplicates and non-maximal sets; input sets must be sorted.
std::vector<Facet> maximal_sets(std::vector<Facet> sets) {
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<Facet> out;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    bool maximal = true;
    for (std::size_t j = 0; j < sets.size() && maximal; ++j) {
      if (i == j || sets[j].size() <= sets[i].size()) continue;
      if (std::includes(sets[j].begin(), sets[j].end(), sets[i].begin(), sets[i].end()))
        maximal = false;
    }
    if (maximal) out.push_back(sets[i]);
  }
  return out;
}

std::vector<std::vector<int>> cooccurrence(const LabeledComplex& c) {
  const std::size_t n = c.vertices.size();
  std::vector<std::vector<int>> co(n, std::vector<int>(n, 0));
  for (const auto& f : c.facets)
    for (int u : f)
      for (int v : f) ++co[u][v];
  return co;
}

}  // namespace

std::vector<Facet> maximal_cliques(const std::vector<std::vector<bool>>& adjacent) {
  const int n = static_cast<int>(adjacent.size());
  std::vector<Facet> out;
  std::vector<int> clique;

  std::function<void(std::vector<int>, std::vector<int>)> expand = [&](std::vector<int> cand,
                                                                      std::vector<int> excluded) {
    if (cand.empty()) {
      if (excluded.empty()) {
        Facet f = clique;
        std::sort(f.begin(), f.end());
        out.push_back(std::move(f));
      }
      return;
    }
    // Pivot with the most neighbours among the candidates.
    int pivot = -1;
    int best = -1;
    for (const auto* pool : {&cand, &excluded})
      for (int u : *pool) {
        int k = 0;
        for (int v : cand) k += adjacent[u][v] ? 1 : 0;
        if (k > best) {
          best = k;
          pivot = u;
        }
      }
    std::vector<int> branch;
    for (int v : cand)
      if (!adjacent[pivot][v]) branch.push_back(v);

    for (int v : branch) {
      std::vector<int> next_cand;
      std::vector<int> next_excl;
      for (int w : cand)
        if (w != v && adjacent[v][w]) next_cand.push_back(w);
      for (int w : excluded)
        if (adjacent[v][w]) next_excl.push_back(w);
      clique.push_back(v);
      expand(std::move(next_cand), std::move(next_excl));
      clique.pop_back();
      cand.erase(std::find(cand.begin(), cand.end(), v));
      excluded.push_back(v);
    }
  };

  std::vector<int> all(n);
  for (int i = 0; i < n; ++i) all[i] = i;
  if (n > 0) expand(all, {});
  std::sort(out.begin(), out.end());
  return out;
}

LabeledComplex flag_complex(std::size_t label_length, std::vector<Vertex> vertices,
                            const std::vector<std::vector<bool>>& compatible) {
  LabeledComplex c;
  c.label_length = label_length;
  c.vertices = std::move(vertices);
  c.facets = maximal_cliques(compatible);
  return c;
}

LabeledComplex induced_subcomplex(const LabeledComplex& c, const std::vector<bool>& keep) {
  std::vector<int> renumber(c.vertices.size(), -1);
  LabeledComplex out;
  out.label_length = c.label_length;
  for (std::size_t v = 0; v < c.vertices.size(); ++v)
    if (keep[v]) {
      renumber[v] = static_cast<int>(out.vertices.size());
      out.vertices.push_back(c.vertices[v]);
    }
  std::vector<Facet> traces;
  for (const auto& f : c.facets) {
    Facet t;
    for (int v : f)
      if (renumber[v] >= 0) t.push_back(renumber[v]);
    if (!t.empty()) traces.push_back(std::move(t));
  }
  out.facets = maximal_sets(std::move(traces));
  return out;
}

LabeledComplex induced_subcomplex_on_coordinates(const LabeledComplex& c,
                                                 std::span<const int> coordinates) {
  std::vector<bool> inside(c.label_length, false);
  for (int k : coordinates) {
    if (k < 0 || static_cast<std::size_t>(k) >= c.label_length)
      throw Error(ErrorCode::InvalidArgument, "coordinate " + std::to_string(k) + " out of range");
    inside[k] = true;
  }
  std::vector<bool> keep(c.vertices.size(), false);
  for (std::size_t v = 0; v < c.vertices.size(); ++v) {
    keep[v] = true;
    for (std::size_t k = 0; k < c.label_length; ++k)
      if (!inside[k] && c.vertices[v].g[k] != 0) keep[v] = false;
  }
  LabeledComplex out = induced_subcomplex(c, keep);
  out.label_length = coordinates.size();
  for (auto& v : out.vertices) {
    GVector restricted;
    for (int k : coordinates) restricted.push_back(v.g[k]);
    v.g = std::move(restricted);
  }
  return out;
}

bool is_pure(const LabeledComplex& c) {
  if (c.facets.empty()) return true;
  const auto size = c.facets.front().size();
  return std::all_of(c.facets.begin(), c.facets.end(),
                     [size](const Facet& f) { return f.size() == size; });
}

std::vector<int> ExchangeGraph::degrees() const {
  std::vector<int> deg(nodes.size(), 0);
  for (const auto& [a, b] : edges) {
    ++deg[a];
    ++deg[b];
  }
  return deg;
}

bool ExchangeGraph::is_regular(int degree) const {
  const auto deg = degrees();
  return std::all_of(deg.begin(), deg.end(), [degree](int d) { return d == degree; });
}

ExchangeGraph dual_graph(const LabeledComplex& c) {
  if (!is_pure(c)) throw Error(ErrorCode::NonPure, "dual graph needs a pure complex");
  ExchangeGraph g;
  g.nodes = c.facets;
  for (std::size_t i = 0; i < g.nodes.size(); ++i)
    for (std::size_t j = i + 1; j < g.nodes.size(); ++j) {
      Facet common;
      std::set_intersection(g.nodes[i].begin(), g.nodes[i].end(), g.nodes[j].begin(),
                            g.nodes[j].end(), std::back_inserter(common));
      if (common.size() + 1 == g.nodes[i].size())
        g.edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
    }
  return g;
}

PseudomanifoldReport is_pseudomanifold(const LabeledComplex& c) {
  PseudomanifoldReport r;
  if (!is_pure(c)) {
    r.pure = false;
    r.witnesses.push_back("facet sizes differ");
  }

  std::map<Facet, std::vector<int>> ridges;
  for (std::size_t i = 0; i < c.facets.size(); ++i) {
    const auto& f = c.facets[i];
    for (std::size_t drop = 0; drop < f.size(); ++drop) {
      Facet ridge;
      for (std::size_t k = 0; k < f.size(); ++k)
        if (k != drop) ridge.push_back(f[k]);
      ridges[ridge].push_back(static_cast<int>(i));
    }
  }
  for (const auto& [ridge, owners] : ridges)
    if (owners.size() != 2) {
      if (r.thin)
        r.witnesses.push_back("ridge " + facet_text(ridge) + " lies in " +
                              std::to_string(owners.size()) + " facet(s)");
      r.thin = false;
    }

  if (!c.facets.empty()) {
    std::vector<std::vector<int>> adj(c.facets.size());
    for (const auto& [ridge, owners] : ridges)
      for (std::size_t a = 0; a < owners.size(); ++a)
        for (std::size_t b = a + 1; b < owners.size(); ++b) {
          adj[owners[a]].push_back(owners[b]);
          adj[owners[b]].push_back(owners[a]);
        }
    std::vector<bool> seen(c.facets.size(), false);
    std::queue<int> todo;
    todo.push(0);
    seen[0] = true;
    std::size_t reached = 1;
    while (!todo.empty()) {
      const int f = todo.front();
      todo.pop();
      for (int g : adj[f])
        if (!seen[g]) {
          seen[g] = true;
          ++reached;
          todo.push(g);
        }
    }
    if (reached != c.facets.size()) {
      r.connected = false;
      r.witnesses.push_back("facet graph has an unreachable facet from " + facet_text(c.facets[0]));
    }
  }
  return r;
}

const char* to_string(IsoStatus s) {
  switch (s) {
    case IsoStatus::Pass: return "pass";
    case IsoStatus::NotIsomorphic: return "not_isomorphic";
    case IsoStatus::IsomorphicNotViaGVectors: return "isomorphic_not_via_gvectors";
    case IsoStatus::Undecided: return "undecided";
  }
  return "unknown";
}

IsoReport iso_by_gvectors(const LabeledComplex& c1, const LabeledComplex& c2,
                          std::span<const int> coordinate_map) {
  if (c1.label_length != c2.label_length)
    throw Error(ErrorCode::LabelLengthMismatch, std::to_string(c1.label_length) + " vs " +
                                                    std::to_string(c2.label_length));
  std::vector<int> cmap(coordinate_map.begin(), coordinate_map.end());
  if (cmap.empty())
    for (std::size_t i = 0; i < c1.label_length; ++i) cmap.push_back(static_cast<int>(i));
  if (cmap.size() != c1.label_length)
    throw Error(ErrorCode::LabelLengthMismatch, "coordinate map has the wrong length");
  {
    std::vector<int> sorted = cmap;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i)
      if (sorted[i] != static_cast<int>(i))
        throw Error(ErrorCode::LabelLengthMismatch, "coordinate map is not a permutation");
  }

  IsoReport r;
  r.status = IsoStatus::Pass;
  std::map<GVector, int> by_g;
  for (std::size_t v = 0; v < c2.vertices.size(); ++v)
    if (!by_g.emplace(c2.vertices[v].g, static_cast<int>(v)).second)
      r.failures.push_back("second complex repeats g-vector " + gvector_text(c2.vertices[v].g));

  r.vertex_map.assign(c1.vertices.size(), -1);
  std::vector<int> hit(c2.vertices.size(), 0);
  for (std::size_t v = 0; v < c1.vertices.size(); ++v) {
    GVector g(c1.label_length);
    for (std::size_t k = 0; k < c1.label_length; ++k) g[cmap[k]] = c1.vertices[v].g[k];
    auto it = by_g.find(g);
    if (it == by_g.end()) {
      r.failures.push_back("no partner for vertex " + std::to_string(v) + " g=" + gvector_text(g));
      continue;
    }
    r.vertex_map[v] = it->second;
    if (++hit[it->second] == 2)
      r.failures.push_back("g-vector " + gvector_text(g) + " hit twice (not injective)");
  }
  for (std::size_t w = 0; w < c2.vertices.size(); ++w)
    if (hit[w] == 0)
      r.failures.push_back("vertex " + std::to_string(w) + " of the second complex g=" +
                           gvector_text(c2.vertices[w].g) + " not reached (not surjective)");

  if (r.failures.empty()) {
    std::set<Facet> target(c2.facets.begin(), c2.facets.end());
    std::set<Facet> image;
    for (const auto& f : c1.facets) {
      Facet mapped;
      for (int v : f) mapped.push_back(r.vertex_map[v]);
      std::sort(mapped.begin(), mapped.end());
      if (!target.count(mapped)) r.failures.push_back("facet " + facet_text(f) + " maps to a non-facet");
      image.insert(std::move(mapped));
    }
    for (const auto& f : target)
      if (!image.count(f)) r.failures.push_back("facet " + facet_text(f) + " of the second complex not hit");
  }

  if (!r.failures.empty()) {
    try {
      r.status = generic_iso(c1, c2) ? IsoStatus::IsomorphicNotViaGVectors : IsoStatus::NotIsomorphic;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::SizeLimit) throw;
      r.status = IsoStatus::Undecided;
      r.failures.push_back(e.what());
    }
  }
  return r;
}

std::optional<std::vector<int>> generic_iso(const LabeledComplex& c1, const LabeledComplex& c2,
                                            std::size_t vertex_limit) {
  if (c1.vertices.size() > vertex_limit || c2.vertices.size() > vertex_limit)
    throw Error(ErrorCode::SizeLimit, "generic isomorphism search limited to " +
                                          std::to_string(vertex_limit) + " vertices");
  const std::size_t n = c1.vertices.size();
  if (n != c2.vertices.size() || c1.facets.size() != c2.facets.size()) return std::nullopt;

  const auto co1 = cooccurrence(c1);
  const auto co2 = cooccurrence(c2);
  std::vector<int> deg1(n), deg2(n);
  for (std::size_t v = 0; v < n; ++v) {
    deg1[v] = co1[v][v];
    deg2[v] = co2[v][v];
  }
  {
    auto a = deg1, b = deg2;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return std::nullopt;
  }

  std::vector<int> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = static_cast<int>(i);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return deg1[a] > deg1[b]; });

  const std::set<Facet> target(c2.facets.begin(), c2.facets.end());
  std::vector<int> map(n, -1);
  std::vector<bool> used(n, false);

  std::function<bool(std::size_t)> place = [&](std::size_t depth) -> bool {
    if (depth == n) {
      for (const auto& f : c1.facets) {
        Facet img;
        for (int v : f) img.push_back(map[v]);
        std::sort(img.begin(), img.end());
        if (!target.count(img)) return false;
      }
      return true;
    }
    const int u = order[depth];
    for (std::size_t w = 0; w < n; ++w) {
      if (used[w] || deg2[w] != deg1[u]) continue;
      bool ok = true;
      for (std::size_t k = 0; k < depth && ok; ++k) {
        const int x = order[k];
        ok = co1[u][x] == co2[w][map[x]];
      }
      if (!ok) continue;
      map[u] = static_cast<int>(w);
      used[w] = true;
      if (place(depth + 1)) return true;
      used[w] = false;
      map[u] = -1;
    }
    return false;
  };

  if (!place(0)) return std::nullopt;
  return map;
}

FanReport check_gvector_fan(const LabeledComplex& c) {
  FanReport r;
  std::map<GVector, int> seen;
  for (std::size_t v = 0; v < c.vertices.size(); ++v) {
    auto [it, inserted] = seen.emplace(c.vertices[v].g, static_cast<int>(v));
    if (!inserted) {
      r.injective = false;
      r.failures.push_back("vertices " + std::to_string(it->second) + " and " + std::to_string(v) +
                           " share g=" + gvector_text(c.vertices[v].g));
    }
  }
  for (const auto& f : c.facets) {
    for (std::size_t k = 0; k < c.label_length; ++k) {
      bool pos = false, neg = false;
      for (int v : f) {
        pos = pos || c.vertices[v].g[k] > 0;
        neg = neg || c.vertices[v].g[k] < 0;
      }
      if (pos && neg) {
        r.sign_coherent = false;
        r.failures.push_back("facet " + facet_text(f) + " mixes signs in coordinate " +
                             std::to_string(k));
      }
    }
    std::vector<linalg::Vector> rows;
    for (int v : f) {
      linalg::Vector row;
      for (int x : c.vertices[v].g) row.emplace_back(x);
      rows.push_back(std::move(row));
    }
    if (linalg::rank(rows, c.label_length) != f.size()) {
      r.independent = false;
      r.failures.push_back("facet " + facet_text(f) + " has dependent g-vectors");
    }
  }
  return r;
}

nlohmann::json to_json(const LabeledComplex& c) {
  nlohmann::json vertices = nlohmann::json::array();
  for (std::size_t v = 0; v < c.vertices.size(); ++v) {
    nlohmann::json entry = c.vertices[v].payload.is_object() ? c.vertices[v].payload
                                                              : nlohmann::json::object();
    entry["id"] = v;
    entry["g"] = c.vertices[v].g;
    vertices.push_back(std::move(entry));
  }
  return {{"vertices", vertices}, {"facets", c.facets}};
}

nlohmann::json to_json(const IsoReport& r) {
  return {{"status", to_string(r.status)}, {"vertex_map", r.vertex_map}, {"failures", r.failures}};
}

nlohmann::json to_json(const ExchangeGraph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& [a, b] : g.edges) edges.push_back({a, b});
  return {{"nodes", g.nodes}, {"edges", edges}};
}

std::string to_dot(const LabeledComplex& c, const ExchangeGraph& g) {
  std::ostringstream out;
  out << "graph exchange {\n  node [shape=box];\n";
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    out << "  f" << i << " [label=\"";
    for (std::size_t k = 0; k < g.nodes[i].size(); ++k) {
      const int v = g.nodes[i][k];
      out << (k ? "\\n" : "") << v;
      if (!c.vertices[v].label.empty()) out << ": " << c.vertices[v].label;
    }
    out << "\"];\n";
  }
  for (const auto& [a, b] : g.edges) out << "  f" << a << " -- f" << b << ";\n";
  out << "}\n";
  return out.str();
}

std::string to_text(const LabeledComplex& c, const ExchangeGraph& g) {
  std::ostringstream out;
  out << c.vertices.size() << " vertices, " << c.facets.size() << " facets\n";
  for (std::size_t v = 0; v < c.vertices.size(); ++v) {
    out << "  " << v << " g=(";
    for (std::size_t k = 0; k < c.vertices[v].g.size(); ++k) out << (k ? "," : "") << c.vertices[v].g[k];
    out << ") " << c.vertices[v].label << "\n";
  }
  for (const auto& f : c.facets) {
    out << "  facet";
    for (int v : f) out << " " << v;
    out << "\n";
  }
  out << "exchange graph: " << g.nodes.size() << " nodes, " << g.edges.size() << " edges\n";
  return out.str();
}

}  // namespace accordion_tau::complexes
