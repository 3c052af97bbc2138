#include "accordion_tau/rigidity.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "accordion_tau/errors.hpp"

namespace accordion_tau::rigidity {

using linalg::EchelonBasis;
using linalg::Matrix;
using linalg::Rational;
using linalg::Vector;

namespace {

int letter_code(const Letter& l) { return 2 * l.arrow + (l.dir == Direction::Inverse ? 1 : 0); }

std::vector<int> encode(const StringWord& w) {
  std::vector<int> code;
  for (const auto& l : w.letters) code.push_back(letter_code(l));
  return code;
}

int letter_target(const GentleQuiver& q, const Letter& l) {
  const auto& a = q.arrows[l.arrow];
  return l.dir == Direction::Forward ? a.tgt : a.src;
}

// May `next` follow `last` in a string?
bool may_follow(const GentleQuiver& q, const Letter& last, const Letter& next) {
  const bool fwd_last = last.dir == Direction::Forward;
  const bool fwd_next = next.dir == Direction::Forward;
  if (fwd_last && fwd_next) return !q.is_relation(last.arrow, next.arrow);
  if (!fwd_last && !fwd_next) return !q.is_relation(next.arrow, last.arrow);
  return last.arrow != next.arrow;
}

void require_gentle(const GentleQuiver& q) {
  const auto issues = quiver::check_gentle(q);
  if (!issues.empty()) throw Error(ErrorCode::NotGentle, issues.front());
}

// Element of M e_i moved along one arrow.
Vector act(const Representation& m, int arrow, const Vector& v) { return m.maps[arrow].apply(v); }

Vector act_path(const Representation& m, const quiver::Path& p, Vector v) {
  for (int a : p.arrows) v = act(m, a, v);
  return v;
}

void require_fits(const AlgebraBasis& basis, const TwoTermComplex& x) {
  const int n = basis.quiver().num_vertices();
  auto bad_vertex = [n](int v) { return v < 0 || v >= n; };
  if (std::any_of(x.p0.begin(), x.p0.end(), bad_vertex) || std::any_of(x.p1.begin(), x.p1.end(), bad_vertex))
    throw Error(ErrorCode::AlgebraMismatch, "projective index outside the quiver");
  if (x.differential.size() != x.p0.size())
    throw Error(ErrorCode::AlgebraMismatch, "differential has the wrong number of rows");
  for (std::size_t r = 0; r < x.p0.size(); ++r) {
    if (x.differential[r].size() != x.p1.size())
      throw Error(ErrorCode::AlgebraMismatch, "differential has the wrong number of columns");
    for (std::size_t c = 0; c < x.p1.size(); ++c)
      for (const auto& [path, coef] : x.differential[r][c]) {
        if (path < 0 || static_cast<std::size_t>(path) >= basis.dimension())
          throw Error(ErrorCode::AlgebraMismatch, "path index outside the algebra basis");
        const auto& p = basis.path(path);
        if (p.src != x.p0[r] || p.tgt != x.p1[c])
          throw Error(ErrorCode::AlgebraMismatch, "differential entry has the wrong endpoints");
      }
  }
}

nlohmann::json vertex_names(const GentleQuiver& q, const std::vector<int>& vs) {
  nlohmann::json out = nlohmann::json::array();
  for (int v : vs) out.push_back(q.vertices[v]);
  return out;
}

}  // namespace

std::vector<int> walk(const GentleQuiver& q, const StringWord& w) {
  std::vector<int> out{w.start};
  for (const auto& l : w.letters) out.push_back(letter_target(q, l));
  return out;
}

StringWord inverse(const GentleQuiver& q, const StringWord& w) {
  StringWord out{walk(q, w).back(), {}};
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
    out.letters.push_back({it->arrow, it->dir == Direction::Forward ? Direction::Inverse : Direction::Forward});
  return out;
}

std::string to_string(const GentleQuiver& q, const StringWord& w) {
  if (w.letters.empty()) return "e_" + q.vertices[w.start];
  std::string s;
  for (std::size_t i = 0; i < w.letters.size(); ++i) {
    s += (i ? " " : "") + q.arrows[w.letters[i].arrow].name;
    if (w.letters[i].dir == Direction::Inverse) s += "^-1";
  }
  return s;
}

std::vector<StringWord> enumerate_strings(const GentleQuiver& q) {
  const std::size_t guard = 2 * static_cast<std::size_t>(q.num_arrows());
  std::vector<StringWord> found;
  StringWord current;

  std::function<void(int)> extend = [&](int at) {
    if (current.letters.size() > guard)
      throw Error(ErrorCode::BandDetected, "string " + to_string(q, current) + " exceeds " +
                                               std::to_string(guard) + " letters");
    if (!current.letters.empty() && encode(current) < encode(inverse(q, current))) found.push_back(current);
    for (int a = 0; a < q.num_arrows(); ++a)
      for (Direction dir : {Direction::Forward, Direction::Inverse}) {
        const Letter next{a, dir};
        const auto& arrow = q.arrows[a];
        if ((dir == Direction::Forward ? arrow.src : arrow.tgt) != at) continue;
        if (!current.letters.empty() && !may_follow(q, current.letters.back(), next)) continue;
        current.letters.push_back(next);
        extend(letter_target(q, next));
        current.letters.pop_back();
      }
  };

  for (int v = 0; v < q.num_vertices(); ++v) {
    current = StringWord{v, {}};
    extend(v);
  }
  for (int v = 0; v < q.num_vertices(); ++v) found.push_back(StringWord{v, {}});
  std::sort(found.begin(), found.end(), [](const StringWord& x, const StringWord& y) {
    if (x.length() != y.length()) return x.length() < y.length();
    if (x.start != y.start) return x.start < y.start;
    return encode(x) < encode(y);
  });
  return found;
}

Representation string_module(const GentleQuiver& q, const StringWord& w) {
  const auto vs = walk(q, w);
  Representation m;
  m.dims.assign(q.num_vertices(), 0);
  std::vector<int> local(vs.size());
  for (std::size_t k = 0; k < vs.size(); ++k) local[k] = m.dims[vs[k]]++;
  for (const auto& a : q.arrows) m.maps.emplace_back(m.dims[a.tgt], m.dims[a.src]);
  for (std::size_t k = 1; k < vs.size(); ++k) {
    const Letter& l = w.letters[k - 1];
    if (l.dir == Direction::Forward)
      m.maps[l.arrow](local[k], local[k - 1]) = 1;
    else
      m.maps[l.arrow](local[k - 1], local[k]) = 1;
  }
  return m;
}

std::vector<int> TwoTermComplex::g_vector(int num_vertices) const {
  std::vector<int> g(num_vertices, 0);
  for (int v : p0) ++g[v];
  for (int v : p1) --g[v];
  return g;
}

TwoTermComplex stalk_projective(int vertex) { return {{}, {vertex}, {{}}}; }

TwoTermComplex shifted_projective(int vertex) { return {{vertex}, {}, {}}; }

TwoTermComplex direct_sum(std::span<const TwoTermComplex> parts) {
  TwoTermComplex out;
  for (const auto& x : parts) {
    out.p1.insert(out.p1.end(), x.p1.begin(), x.p1.end());
    out.p0.insert(out.p0.end(), x.p0.begin(), x.p0.end());
  }
  out.differential.assign(out.p0.size(), std::vector<PathCombination>(out.p1.size()));
  std::size_t row = 0, col = 0;
  for (const auto& x : parts) {
    for (std::size_t r = 0; r < x.p0.size(); ++r)
      for (std::size_t c = 0; c < x.p1.size(); ++c) out.differential[row + r][col + c] = x.differential[r][c];
    row += x.p0.size();
    col += x.p1.size();
  }
  return out;
}

TwoTermComplex min_presentation(const AlgebraBasis& basis, const Representation& m) {
  const auto& q = basis.quiver();
  const int n = q.num_vertices();

  // Projective cover: lift a basis of top(M) = M / rad M vertex by vertex.
  std::vector<int> gen_vertex;
  std::vector<Vector> gen_element;
  for (int i = 0; i < n; ++i) {
    EchelonBasis span(m.dims[i]);
    for (int a = 0; a < q.num_arrows(); ++a) {
      if (q.arrows[a].tgt != i) continue;
      for (int k = 0; k < m.dims[q.arrows[a].src]; ++k) {
        Vector e(m.dims[q.arrows[a].src]);
        e[k] = 1;
        span.add(act(m, a, e));
      }
    }
    for (int k = 0; k < m.dims[i]; ++k) {
      Vector e(m.dims[i]);
      e[k] = 1;
      if (span.add(e)) {
        gen_vertex.push_back(i);
        gen_element.push_back(std::move(e));
      }
    }
  }

  // P0 e_t has basis (summand s, path from gen_vertex[s] to t).
  struct Coord {
    int summand;
    int path;
  };
  std::vector<std::vector<Coord>> coords(n);
  std::vector<std::map<std::pair<int, int>, int>> coord_index(n);
  for (std::size_t s = 0; s < gen_vertex.size(); ++s)
    for (int t = 0; t < n; ++t)
      for (int p : basis.between(gen_vertex[s], t)) {
        coord_index[t][{static_cast<int>(s), p}] = static_cast<int>(coords[t].size());
        coords[t].push_back({static_cast<int>(s), p});
      }

  // Kernel of the cover, one vertex at a time.
  std::vector<std::vector<Vector>> kernel(n);
  for (int t = 0; t < n; ++t) {
    Matrix cover(m.dims[t], coords[t].size());
    for (std::size_t c = 0; c < coords[t].size(); ++c) {
      const Vector image = act_path(m, basis.path(coords[t][c].path), gen_element[coords[t][c].summand]);
      for (int r = 0; r < m.dims[t]; ++r) cover(r, c) = image[r];
    }
    kernel[t] = linalg::nullspace(cover);
  }

  // Projective cover of the kernel: lift a basis of K / K rad.
  TwoTermComplex x;
  x.p0 = gen_vertex;
  std::vector<Vector> relations_at;
  std::vector<int> relation_vertex;
  for (int t = 0; t < n; ++t) {
    EchelonBasis span(coords[t].size());
    for (int a = 0; a < q.num_arrows(); ++a) {
      if (q.arrows[a].tgt != t) continue;
      const int u = q.arrows[a].src;
      const int arrow_path = n + a;
      for (const auto& k : kernel[u]) {
        Vector moved(coords[t].size());
        for (std::size_t c = 0; c < coords[u].size(); ++c) {
          if (sgn(k[c]) == 0) continue;
          const int prod = basis.product(coords[u][c].path, arrow_path);
          if (prod < 0) continue;
          moved[coord_index[t].at({coords[u][c].summand, prod})] += k[c];
        }
        span.add(std::move(moved));
      }
    }
    for (const auto& k : kernel[t])
      if (span.add(k)) {
        relation_vertex.push_back(t);
        relations_at.push_back(k);
      }
  }
  x.p1 = relation_vertex;
  x.differential.assign(x.p0.size(), std::vector<PathCombination>(x.p1.size()));
  for (std::size_t col = 0; col < x.p1.size(); ++col) {
    const int t = x.p1[col];
    for (std::size_t c = 0; c < coords[t].size(); ++c)
      if (sgn(relations_at[col][c]) != 0)
        x.differential[coords[t][c].summand][col][coords[t][c].path] = relations_at[col][c];
  }
  return x;
}

bool is_minimal(const AlgebraBasis& basis, const TwoTermComplex& x) {
  // An invertible entry would need a lazy-path component; radical entries
  // leave nothing to split off.
  const int n = basis.quiver().num_vertices();
  for (const auto& row : x.differential)
    for (const auto& entry : row)
      for (const auto& [path, coef] : entry)
        if (path < n && sgn(coef) != 0) return false;
  return true;
}

std::size_t hom_shift(const AlgebraBasis& basis, const TwoTermComplex& x, const TwoTermComplex& y) {
  require_fits(basis, x);
  require_fits(basis, y);

  // Coordinates of Hom(X1, Y0) = sum over (s in Y0, t in X1) of e_{y0_s} L e_{x1_t}.
  const std::size_t rows = y.p0.size();
  const std::size_t cols = x.p1.size();
  std::vector<std::size_t> offset(rows * cols + 1, 0);
  for (std::size_t s = 0; s < rows; ++s)
    for (std::size_t t = 0; t < cols; ++t)
      offset[s * cols + t + 1] = offset[s * cols + t] + basis.between(y.p0[s], x.p1[t]).size();
  const std::size_t dim = offset.back();
  if (dim == 0) return 0;

  EchelonBasis null_homotopic(dim);
  auto place = [&](Vector& v, std::size_t s, std::size_t t, int path, const Rational& coef) {
    v[offset[s * cols + t] + basis.slot(path)] += coef;
  };

  // Hom(X0, Y0) composed with dX.
  for (std::size_t u = 0; u < x.p0.size(); ++u)
    for (std::size_t s = 0; s < rows; ++s)
      for (int p : basis.between(y.p0[s], x.p0[u])) {
        Vector v(dim);
        for (std::size_t t = 0; t < cols; ++t)
          for (const auto& [path, coef] : x.differential[u][t]) {
            const int prod = basis.product(p, path);
            if (prod >= 0) place(v, s, t, prod, coef);
          }
        null_homotopic.add(std::move(v));
      }

  // dY composed with Hom(X1, Y1).
  for (std::size_t t = 0; t < cols; ++t)
    for (std::size_t w = 0; w < y.p1.size(); ++w)
      for (int p : basis.between(y.p1[w], x.p1[t])) {
        Vector v(dim);
        for (std::size_t s = 0; s < rows; ++s)
          for (const auto& [path, coef] : y.differential[s][w]) {
            const int prod = basis.product(path, p);
            if (prod >= 0) place(v, s, t, prod, coef);
          }
        null_homotopic.add(std::move(v));
      }

  return dim - null_homotopic.rank();
}

std::vector<SiltingVertex> silting_vertices(const AlgebraBasis& basis) {
  const auto& q = basis.quiver();
  require_gentle(q);
  const int n = q.num_vertices();
  std::vector<SiltingVertex> out;
  std::set<std::vector<int>> seen;
  for (const auto& w : enumerate_strings(q)) {
    TwoTermComplex x = min_presentation(basis, string_module(q, w));
    if (hom_shift(basis, x, x) != 0) continue;
    auto g = x.g_vector(n);
    if (!seen.insert(g).second) continue;
    out.push_back({std::move(x), std::move(g), VertexKind::Presentation, w, -1});
  }
  for (int j = 0; j < n; ++j) {
    TwoTermComplex x = shifted_projective(j);
    auto g = x.g_vector(n);
    if (!seen.insert(g).second) continue;
    out.push_back({std::move(x), std::move(g), VertexKind::ShiftedProjective, std::nullopt, j});
  }
  return out;
}

std::vector<SiltingVertex> silting_vertices(const GentleQuiver& q) {
  require_gentle(q);
  return silting_vertices(AlgebraBasis(q));
}

std::vector<std::vector<bool>> compatibility(const AlgebraBasis& basis,
                                             const std::vector<SiltingVertex>& vertices) {
  const std::size_t n = vertices.size();
  std::vector<std::vector<std::size_t>> shift(n, std::vector<std::size_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) shift[i][j] = hom_shift(basis, vertices[i].complex, vertices[j].complex);
  std::vector<std::vector<bool>> compatible(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) compatible[i][j] = i != j && shift[i][j] == 0 && shift[j][i] == 0;
  return compatible;
}

complexes::LabeledComplex silting_complex(const AlgebraBasis& basis,
                                          const std::vector<SiltingVertex>& vertices) {
  const auto& q = basis.quiver();
  std::vector<complexes::Vertex> labeled;
  for (const auto& v : vertices) {
    complexes::Vertex cv;
    cv.g = v.g;
    if (v.kind == VertexKind::Presentation) {
      cv.label = "M(" + to_string(q, *v.word) + ")";
      cv.payload = {{"kind", "presentation"}, {"string", to_string(q, *v.word)}};
    } else {
      cv.label = "P(" + q.vertices[v.projective] + ")[1]";
      cv.payload = {{"kind", "shifted_projective"}, {"projective", q.vertices[v.projective]}};
    }
    cv.payload["P1"] = vertex_names(q, v.complex.p1);
    cv.payload["P0"] = vertex_names(q, v.complex.p0);
    labeled.push_back(std::move(cv));
  }
  auto c = complexes::flag_complex(q.vertices.size(), std::move(labeled), compatibility(basis, vertices));
  for (const auto& f : c.facets)
    if (f.size() != q.vertices.size())
      throw Error(ErrorCode::NonPure, "silting facet of size " + std::to_string(f.size()) +
                                          ", expected " + std::to_string(q.vertices.size()));
  return c;
}

complexes::LabeledComplex silting_complex(const GentleQuiver& q) {
  require_gentle(q);
  const AlgebraBasis basis(q);
  return silting_complex(basis, silting_vertices(basis));
}

complexes::LabeledComplex induced_subcomplex_J(const complexes::LabeledComplex& c,
                                               std::span<const int> subset) {
  std::vector<int> j(subset.begin(), subset.end());
  std::sort(j.begin(), j.end());
  j.erase(std::unique(j.begin(), j.end()), j.end());
  return complexes::induced_subcomplex_on_coordinates(c, j);
}

complexes::IsoReport verify_idempotent_reduction(const GentleQuiver& q, std::span<const int> subset) {
  const auto small = silting_complex(quiver::shortcut_quiver(q, subset));
  const auto induced = induced_subcomplex_J(silting_complex(q), subset);
  return complexes::iso_by_gvectors(induced, small);
}

}  // namespace accordion_tau::rigidity
