#include "accordion_tau/accordion_tau.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <new>
#include <optional>
#include <string>
#include <vector>

#include "accordion_tau/accordion.hpp"
#include "accordion_tau/complexes.hpp"
#include "accordion_tau/errors.hpp"
#include "accordion_tau/quiver.hpp"
#include "accordion_tau/rigidity.hpp"
#include "accordion_tau/serialize.hpp"
#include "accordion_tau/verify.hpp"

namespace at = accordion_tau;

struct at_dissection {
  at::geometry::Dissection value;
};

struct at_quiver {
  at::quiver::GentleQuiver value;
};

struct at_complex {
  at::complexes::LabeledComplex value;
  at::complexes::ExchangeGraph graph;
};

struct at_report {
  at::verify::Summary value;
};

namespace {

thread_local std::string last_error;

at_status status_of(at::ErrorCode code) {
  return static_cast<at_status>(static_cast<int>(code) + 1);
}

template <class F>
at_status guarded(F&& f) {
  try {
    f();
    last_error.clear();
    return AT_OK;
  } catch (const at::Error& e) {
    last_error = e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return AT_ERR_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return AT_ERR_INTERNAL;
  }
}

void require(bool ok, const char* what) {
  if (!ok) throw at::Error(at::ErrorCode::InvalidArgument, what);
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

std::optional<std::uint64_t> seed_of(const uint64_t* seed) {
  if (!seed) return std::nullopt;
  return *seed;
}

at_complex* wrap(at::complexes::LabeledComplex c) {
  auto* out = new at_complex{std::move(c), {}};
  out->graph = at::complexes::dual_graph(out->value);
  return out;
}

}  // namespace

extern "C" {

const char* at_last_error(void) { return last_error.c_str(); }

const char* at_status_name(at_status s) {
  if (s == AT_OK) return "Ok";
  if (s == AT_ERR_INTERNAL) return "Internal";
  if (s < AT_OK || s > AT_ERR_INTERNAL) return "Unknown";
  return at::to_string(static_cast<at::ErrorCode>(static_cast<int>(s) - 1));
}

int at_status_is_unsupported_algebra(at_status s) {
  return s == AT_ERR_BAND_DETECTED || s == AT_ERR_NOT_GENTLE || s == AT_ERR_INFINITE_DIMENSIONAL;
}

void at_string_free(char* s) { std::free(s); }

at_status at_dissection_create(int m, const int* pairs, size_t n, at_dissection** out) {
  return guarded([&] {
    require(out != nullptr && (pairs != nullptr || n == 0), "null argument");
    std::vector<std::pair<int, int>> p;
    for (size_t i = 0; i < n; ++i) p.emplace_back(pairs[2 * i], pairs[2 * i + 1]);
    *out = new at_dissection{at::geometry::validate_dissection(m, p)};
  });
}

at_status at_dissection_parse(int m, const char* diagonals, at_dissection** out) {
  return guarded([&] {
    require(diagonals && out, "null argument");
    const auto pairs = at::serialize::parse_diagonals(diagonals);
    *out = new at_dissection{at::geometry::validate_dissection(m, pairs)};
  });
}

at_status at_dissection_from_json(const char* text, at_dissection** out) {
  return guarded([&] {
    require(text && out, "null argument");
    *out = new at_dissection{at::serialize::dissection_from_json(at::serialize::parse_json(text))};
  });
}

at_status at_dissection_to_json(const at_dissection* d, char** out) {
  return guarded([&] {
    require(d && out, "null argument");
    *out = copy_string(at::serialize::to_json(d->value).dump());
  });
}

int at_dissection_m(const at_dissection* d) { return d ? d->value.m() : 0; }

size_t at_dissection_size(const at_dissection* d) { return d ? d->value.size() : 0; }

void at_dissection_destroy(at_dissection* d) { delete d; }

at_status at_quiver_from_json(const char* text, at_quiver** out) {
  return guarded([&] {
    require(text && out, "null argument");
    *out = new at_quiver{at::serialize::quiver_from_json(at::serialize::parse_json(text))};
  });
}

at_status at_quiver_of_dissection(const at_dissection* d, at_quiver** out) {
  return guarded([&] {
    require(d && out, "null argument");
    *out = new at_quiver{at::quiver::quiver_of_dissection(d->value)};
  });
}

at_status at_quiver_to_json(const at_quiver* q, char** out) {
  return guarded([&] {
    require(q && out, "null argument");
    *out = copy_string(at::serialize::to_json(q->value).dump());
  });
}

at_status at_algebra_dump(const at_quiver* q, char** out) {
  return guarded([&] {
    require(q && out, "null argument");
    *out = copy_string(at::serialize::algebra_dump(at::quiver::AlgebraBasis(q->value)).dump());
  });
}

size_t at_quiver_num_vertices(const at_quiver* q) { return q ? q->value.vertices.size() : 0; }

at_status at_quiver_vertex_index(const at_quiver* q, const char* name, int* out) {
  return guarded([&] {
    require(q && name && out, "null argument");
    const auto& vs = q->value.vertices;
    const auto it = std::find(vs.begin(), vs.end(), name);
    if (it == vs.end()) throw at::Error(at::ErrorCode::InvalidArgument, std::string("unknown vertex ") + name);
    *out = static_cast<int>(it - vs.begin());
  });
}

void at_quiver_destroy(at_quiver* q) { delete q; }

at_status at_accordion_complex(const at_dissection* d, at_complex** out) {
  return guarded([&] {
    require(d && out, "null argument");
    *out = wrap(at::accordion::accordion_complex(d->value));
  });
}

at_status at_silting_complex(const at_quiver* q, at_complex** out) {
  return guarded([&] {
    require(q && out, "null argument");
    *out = wrap(at::rigidity::silting_complex(q->value));
  });
}

size_t at_complex_num_vertices(const at_complex* c) { return c ? c->value.vertices.size() : 0; }

size_t at_complex_num_facets(const at_complex* c) { return c ? c->value.facets.size() : 0; }

size_t at_complex_num_exchange_edges(const at_complex* c) { return c ? c->graph.edges.size() : 0; }

size_t at_complex_label_length(const at_complex* c) { return c ? c->value.label_length : 0; }

at_status at_complex_gvector(const at_complex* c, size_t v, int* out) {
  return guarded([&] {
    require(c && out, "null argument");
    require(v < c->value.vertices.size(), "vertex index out of range");
    const auto& g = c->value.vertices[v].g;
    std::copy(g.begin(), g.end(), out);
  });
}

at_status at_complex_render(const at_complex* c, at_format f, char** out) {
  return guarded([&] {
    require(c && out, "null argument");
    switch (f) {
      case AT_FORMAT_JSON: {
        auto j = at::complexes::to_json(c->value);
        j["exchange_graph"] = at::complexes::to_json(c->graph);
        *out = copy_string(j.dump(2) + "\n");
        return;
      }
      case AT_FORMAT_DOT: *out = copy_string(at::complexes::to_dot(c->value, c->graph)); return;
      case AT_FORMAT_TEXT: *out = copy_string(at::complexes::to_text(c->value, c->graph)); return;
    }
    throw at::Error(at::ErrorCode::InvalidArgument, "unknown format");
  });
}

void at_complex_destroy(at_complex* c) { delete c; }

at_status at_verify_dissection(const at_dissection* d, unsigned theorems, const uint64_t* seed,
                               at_report** out) {
  return guarded([&] {
    require(d && out, "null argument");
    require(theorems != 0 && (theorems & ~7u) == 0, "bad theorem selection");
    *out = new at_report{at::verify::verify_dissection(d->value, theorems, seed_of(seed))};
  });
}

at_status at_verify_quiver(const at_quiver* q, const int* subset, size_t n, at_report** out) {
  return guarded([&] {
    require(q && out && (subset || n == 0), "null argument");
    std::vector<int> j(subset, subset + n);
    std::sort(j.begin(), j.end());
    j.erase(std::unique(j.begin(), j.end()), j.end());
    for (int v : j) require(v >= 0 && v < q->value.num_vertices(), "subset vertex out of range");
    *out = new at_report{at::verify::verify_quiver(q->value, j)};
  });
}

at_status at_verify_exhaustive(int m, unsigned theorems, const uint64_t* seed, at_report** out) {
  return guarded([&] {
    require(out != nullptr, "null argument");
    require(m >= 3, "the polygon needs at least 3 white vertices");
    require(theorems != 0 && (theorems & ~7u) == 0, "bad theorem selection");
    *out = new at_report{at::verify::verify_exhaustive(m, theorems, seed_of(seed))};
  });
}

int at_report_passed(const at_report* r) { return r && r->value.pass() ? 1 : 0; }

size_t at_report_num_cases(const at_report* r) { return r ? r->value.cases.size() : 0; }

size_t at_report_num_failed(const at_report* r) { return r ? r->value.failed() : 0; }

at_status at_report_render(const at_report* r, at_format f, char** out) {
  return guarded([&] {
    require(r && out, "null argument");
    if (f == AT_FORMAT_JSON)
      *out = copy_string(r->value.to_json().dump(2) + "\n");
    else if (f == AT_FORMAT_TEXT)
      *out = copy_string(r->value.to_text());
    else
      throw at::Error(at::ErrorCode::InvalidArgument, "reports render as json or text");
  });
}

void at_report_destroy(at_report* r) { delete r; }

}  // extern "C"
