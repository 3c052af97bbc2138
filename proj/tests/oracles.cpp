#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <stdexcept>

namespace oracle {

namespace {

constexpr double kEps = 1e-9;

using DenseMatrix = std::vector<std::vector<double>>;

int rank_of(DenseMatrix a) {
  int rank = 0;
  const std::size_t cols = a.empty() ? 0 : a[0].size();
  for (std::size_t c = 0; c < cols && rank < static_cast<int>(a.size()); ++c) {
    std::size_t best = rank;
    for (std::size_t r = rank; r < a.size(); ++r)
      if (std::abs(a[r][c]) > std::abs(a[best][c])) best = r;
    if (std::abs(a[best][c]) < kEps) continue;
    std::swap(a[best], a[rank]);
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == static_cast<std::size_t>(rank)) continue;
      const double f = a[r][c] / a[rank][c];
      for (std::size_t k = c; k < cols; ++k) a[r][k] -= f * a[rank][k];
    }
    ++rank;
  }
  return rank;
}

std::optional<int> common(Diag a, Diag b) {
  if (a.first == b.first || a.first == b.second) return a.first;
  if (a.second == b.first || a.second == b.second) return a.second;
  return std::nullopt;
}

bool is_module(const std::string& name) { return name.find('[') == std::string::npos; }

// Triangulations of the sub-polygon on vertices i..j, excluding the chord (i, j).
std::vector<std::vector<Diag>> triangulate(int i, int j) {
  if (j - i < 2) return {{}};
  std::vector<std::vector<Diag>> out;
  for (int k = i + 1; k < j; ++k)
    for (const auto& left : triangulate(i, k))
      for (const auto& right : triangulate(k, j)) {
        auto t = left;
        t.insert(t.end(), right.begin(), right.end());
        if (k - i > 1) t.emplace_back(i, k);
        if (j - k > 1) t.emplace_back(k, j);
        out.push_back(std::move(t));
      }
  return out;
}

}  // namespace

Point point(int m, int t) {
  const double angle = 2 * std::numbers::pi * t / (2.0 * m);
  return {std::cos(angle), std::sin(angle)};
}

double orient(Point p, Point q, Point x) { return (q.x - p.x) * (x.y - p.y) - (q.y - p.y) * (x.x - p.x); }

bool segments_cross(Point p1, Point p2, Point q1, Point q2) {
  const double d1 = orient(p1, p2, q1);
  const double d2 = orient(p1, p2, q2);
  const double d3 = orient(q1, q2, p1);
  const double d4 = orient(q1, q2, p2);
  return ((d1 > kEps && d2 < -kEps) || (d1 < -kEps && d2 > kEps)) &&
         ((d3 > kEps && d4 < -kEps) || (d3 < -kEps && d4 > kEps));
}

long long dissection_count(int m) {
  // s(1) = s(2) = 1, (n + 1) s(n + 1) = 3 (2n - 1) s(n) - (n - 2) s(n - 1);
  // the m-gon has s(m - 1) dissections.
  if (m < 3) throw std::invalid_argument("m >= 3");
  std::vector<long long> s{0, 1, 1};
  for (int n = 2; static_cast<int>(s.size()) <= m - 1; ++n)
    s.push_back((3 * (2 * n - 1) * s[n] - (n - 2) * s[n - 1]) / (n + 1));
  return s[m - 1];
}

long long catalan(int n) {
  long long c = 1;
  for (int k = 0; k < n; ++k) c = c * 2 * (2 * k + 1) / (k + 2);
  return c;
}

std::vector<std::vector<Diag>> triangulations(int n) {
  auto out = triangulate(0, n - 1);
  for (auto& t : out) std::sort(t.begin(), t.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t flip_edges(const std::vector<std::vector<Diag>>& ts) {
  std::size_t edges = 0;
  for (std::size_t i = 0; i < ts.size(); ++i)
    for (std::size_t j = i + 1; j < ts.size(); ++j) {
      std::vector<Diag> shared;
      std::set_intersection(ts[i].begin(), ts[i].end(), ts[j].begin(), ts[j].end(), std::back_inserter(shared));
      if (shared.size() + 1 == ts[i].size() && ts[i].size() == ts[j].size()) ++edges;
    }
  return edges;
}

std::vector<std::vector<int>> maximal_compatible_sets(int n, const std::vector<std::vector<bool>>& compatible) {
  std::vector<unsigned> faces;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a)
      for (int b = a + 1; b < n && ok; ++b)
        if ((mask >> a & 1) && (mask >> b & 1) && !compatible[a][b]) ok = false;
    if (ok) faces.push_back(mask);
  }
  std::vector<std::vector<int>> out;
  for (unsigned f : faces) {
    bool maximal = true;
    for (int v = 0; v < n && maximal; ++v)
      if (!(f >> v & 1) && std::binary_search(faces.begin(), faces.end(), f | (1u << v))) maximal = false;
    if (!maximal) continue;
    std::vector<int> s;
    for (int v = 0; v < n; ++v)
      if (f >> v & 1) s.push_back(v);
    out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end());
  return out;
}

AccordionOracle accordion_oracle(int m, const std::vector<Diag>& dissection) {
  AccordionOracle o;
  o.m = m;
  o.dissection = dissection;
  auto white = [m](int k) { return point(m, 2 * k); };
  auto black = [m](int k) { return point(m, 2 * k + 1); };

  std::vector<Diag> chords = dissection;
  for (int k = 0; k < m; ++k) chords.emplace_back(std::min(k, (k + 1) % m), std::max(k, (k + 1) % m));
  const std::size_t num_diagonals = dissection.size();

  for (int u = 0; u < m; ++u)
    for (int v = u + 2; v < m; ++v) {
      if (u == 0 && v == m - 1) continue;
      const Point s = black(u), e = black(v);
      // Crossed white chords ordered by where they meet the black segment.
      std::vector<std::pair<double, std::size_t>> hits;
      for (std::size_t c = 0; c < chords.size(); ++c) {
        const Point a = white(chords[c].first), b = white(chords[c].second);
        if (!segments_cross(s, e, a, b)) continue;
        const double t = orient(a, b, s) / (orient(a, b, s) - orient(a, b, e));
        hits.emplace_back(t, c);
      }
      std::sort(hits.begin(), hits.end());
      bool accordion = true;
      for (std::size_t i = 0; i + 1 < hits.size(); ++i)
        if (!common(chords[hits[i].second], chords[hits[i + 1].second])) accordion = false;
      if (!accordion) continue;
      std::vector<int> g(num_diagonals, 0);
      for (std::size_t i = 1; i + 1 < hits.size(); ++i) {
        const std::size_t c = hits[i].second;
        if (c >= num_diagonals) continue;
        const int x = *common(chords[hits[i - 1].second], chords[c]);
        const int y = *common(chords[hits[i + 1].second], chords[c]);
        if (x != y) g[c] = orient(s, e, white(x)) > 0 ? 1 : -1;
      }
      o.accordion.emplace_back(u, v);
      o.g.push_back(std::move(g));
    }

  const int n = static_cast<int>(o.accordion.size());
  std::vector<std::vector<bool>> compatible(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j)
        compatible[i][j] = !segments_cross(black(o.accordion[i].first), black(o.accordion[i].second),
                                           black(o.accordion[j].first), black(o.accordion[j].second));
  o.facets = maximal_compatible_sets(n, compatible);
  return o;
}

std::vector<std::vector<Diag>> brute_force_dissections(int m) {
  std::vector<Diag> all;
  for (int u = 0; u < m; ++u)
    for (int v = u + 2; v < m; ++v)
      if (!(u == 0 && v == m - 1)) all.emplace_back(u, v);
  const int n = static_cast<int>(all.size());
  std::vector<std::vector<Diag>> out;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<Diag> d;
    bool ok = true;
    for (int a = 0; a < n && ok; ++a) {
      if (!(mask >> a & 1)) continue;
      for (const auto& other : d)
        if (segments_cross(point(m, 2 * all[a].first), point(m, 2 * all[a].second), point(m, 2 * other.first),
                           point(m, 2 * other.second)))
          ok = false;
      d.push_back(all[a]);
    }
    if (ok) out.push_back(std::move(d));
  }
  return out;
}

std::map<std::string, Module> heptagon_modules() {
  std::map<std::string, Module> out;
  out["S1"] = {"S1", {1, 0, 0}, {}, {}};
  out["S2"] = {"S2", {0, 1, 0}, {}, {}};
  out["S3"] = {"S3", {0, 0, 1}, {}, {}};
  out["P1"] = {"P1", {1, 1, 0}, {{1}}, {}};
  out["P2"] = {"P2", {0, 1, 1}, {}, {{1}}};
  // Zero-size blocks still need their row count.
  for (auto& [name, mod] : out) {
    if (mod.alpha.empty()) mod.alpha.assign(mod.dims[1], std::vector<double>(mod.dims[0], 0));
    if (mod.beta.empty()) mod.beta.assign(mod.dims[2], std::vector<double>(mod.dims[1], 0));
  }
  return out;
}

std::map<std::string, std::string> heptagon_tau() { return {{"S1", "S2"}, {"S2", "S3"}}; }

std::map<std::string, std::array<int, 3>> heptagon_gvectors() {
  return {{"S1", {1, -1, 0}},    {"S2", {0, 1, -1}},    {"S3", {0, 0, 1}},     {"P1", {1, 0, 0}},
          {"P2", {0, 1, 0}},     {"P1[1]", {-1, 0, 0}}, {"P2[1]", {0, -1, 0}}, {"P3[1]", {0, 0, -1}}};
}

int hom_dim(const Module& m, const Module& n) {
  // Unknowns: f_k is n.dims[k] x m.dims[k], flattened row-major in vertex order.
  std::array<int, 3> offset{};
  int unknowns = 0;
  for (int k = 0; k < 3; ++k) {
    offset[k] = unknowns;
    unknowns += n.dims[k] * m.dims[k];
  }
  if (unknowns == 0) return 0;
  DenseMatrix equations;
  // n.arrow * f_src - f_tgt * m.arrow = 0 for the arrows 0 -> 1 and 1 -> 2.
  auto add_arrow = [&](int src, int tgt, const DenseMatrix& na, const DenseMatrix& ma) {
    for (int r = 0; r < n.dims[tgt]; ++r)
      for (int c = 0; c < m.dims[src]; ++c) {
        std::vector<double> row(unknowns, 0);
        for (int k = 0; k < n.dims[src]; ++k) row[offset[src] + k * m.dims[src] + c] += na[r][k];
        for (int k = 0; k < m.dims[tgt]; ++k) row[offset[tgt] + r * m.dims[tgt] + k] -= ma[k][c];
        equations.push_back(std::move(row));
      }
  };
  add_arrow(0, 1, n.alpha, m.alpha);
  add_arrow(1, 2, n.beta, m.beta);
  return unknowns - rank_of(equations);
}

bool heptagon_compatible(const std::string& a, const std::string& b) {
  const auto modules = heptagon_modules();
  const auto tau = heptagon_tau();
  auto hom_to_tau = [&](const std::string& x, const std::string& y) {
    const auto t = tau.find(y);
    return t == tau.end() ? 0 : hom_dim(modules.at(x), modules.at(t->second));
  };
  const bool ma = is_module(a), mb = is_module(b);
  if (ma && mb) return hom_to_tau(a, b) == 0 && hom_to_tau(b, a) == 0;
  if (!ma && !mb) return true;
  const std::string& mod = ma ? a : b;
  const std::string& shifted = ma ? b : a;
  const int j = shifted[1] - '1';
  // Hom(e_j L, M) = M e_j.
  return modules.at(mod).dims[j] == 0;
}

}  // namespace oracle
