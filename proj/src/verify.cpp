#include "accordion_tau/verify.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "accordion_tau/accordion.hpp"
#include "accordion_tau/errors.hpp"

namespace accordion_tau::verify {

namespace {

void prefixed(std::vector<std::string>& out, const std::string& what, const std::vector<std::string>& lines) {
  for (const auto& l : lines) out.push_back(what + ": " + l);
}

std::string subset_text(const quiver::GentleQuiver& q, std::span<const int> subset) {
  std::string s = "J={";
  for (std::size_t i = 0; i < subset.size(); ++i) s += (i ? "," : "") + q.vertices[subset[i]];
  return s + "}";
}

void finish(CaseResult& r) { r.pass = r.failures.empty(); }

CaseResult idempotent_against(const quiver::GentleQuiver& q, const complexes::LabeledComplex& big,
                              std::span<const int> subset, const std::string& instance) {
  CaseResult r{"idempotent", instance + " " + subset_text(q, subset), true, {}};
  try {
    const auto small = rigidity::silting_complex(quiver::shortcut_quiver(q, subset));
    const auto induced = rigidity::induced_subcomplex_J(big, subset);
    const auto iso = complexes::iso_by_gvectors(induced, small);
    if (!iso.passed()) {
      r.failures.push_back(std::string("iso_by_gvectors: ") + complexes::to_string(iso.status));
      prefixed(r.failures, "iso", iso.failures);
    }
    prefixed(r.failures, "shortcut silting complex", structural_failures(small, "structure"));
    prefixed(r.failures, "induced subcomplex", structural_failures(induced, "structure"));
  } catch (const Error& e) {
    r.failures.push_back(e.what());
  }
  finish(r);
  return r;
}

std::vector<std::vector<int>> nonempty_subsets(int n) {
  if (n > 20) throw Error(ErrorCode::SizeLimit, "subset enumeration limited to 20 vertices");
  std::vector<std::vector<int>> out;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<int> s;
    for (int k = 0; k < n; ++k)
      if (mask & (1u << k)) s.push_back(k);
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace

std::size_t Summary::passed() const {
  return static_cast<std::size_t>(std::count_if(cases.begin(), cases.end(), [](const auto& c) { return c.pass; }));
}

std::size_t Summary::failed() const { return cases.size() - passed(); }

void Summary::append(Summary other) {
  for (auto& c : other.cases) cases.push_back(std::move(c));
}

nlohmann::json Summary::to_json() const {
  nlohmann::json counts = nlohmann::json::object();
  for (const auto& c : cases) {
    auto& entry = counts[c.theorem];
    if (entry.is_null()) entry = {{"passed", 0}, {"failed", 0}};
    entry[c.pass ? "passed" : "failed"] = entry[c.pass ? "passed" : "failed"].get<int>() + 1;
  }
  nlohmann::json failures = nlohmann::json::array();
  for (const auto& c : cases)
    if (!c.pass) failures.push_back({{"theorem", c.theorem}, {"instance", c.instance}, {"failures", c.failures}});
  return {{"status", pass() ? "pass" : "fail"},
          {"cases", cases.size()},
          {"passed", passed()},
          {"failed", failed()},
          {"by_theorem", counts},
          {"failures", failures}};
}

std::string Summary::to_text() const {
  std::ostringstream out;
  for (const auto& c : cases) {
    if (c.pass) continue;
    out << "FAIL " << c.theorem << " " << c.instance << "\n";
    for (const auto& f : c.failures) out << "  " << f << "\n";
  }
  out << (pass() ? "PASS" : "FAIL") << ": " << passed() << "/" << cases.size() << " cases\n";
  return out.str();
}

std::vector<std::string> structural_failures(const complexes::LabeledComplex& c, const std::string& what) {
  std::vector<std::string> out;
  const auto pm = complexes::is_pseudomanifold(c);
  if (!pm.pass()) prefixed(out, what + " pseudomanifold", pm.witnesses);
  for (const auto& f : c.facets)
    if (f.size() != c.label_length) {
      out.push_back(what + ": facet size " + std::to_string(f.size()) + " differs from dimension " +
                    std::to_string(c.label_length));
      break;
    }
  if (pm.pure) {
    const auto g = complexes::dual_graph(c);
    if (!g.is_regular(static_cast<int>(c.label_length)))
      out.push_back(what + ": dual graph is not " + std::to_string(c.label_length) + "-regular");
  }
  const auto fan = complexes::check_gvector_fan(c);
  if (!fan.pass()) prefixed(out, what + " g-vector fan", fan.failures);
  return out;
}

std::vector<std::string> direct_sum_spot_check(const quiver::AlgebraBasis& basis,
                                               const std::vector<rigidity::SiltingVertex>& vertices,
                                               const std::vector<std::vector<bool>>& compatible,
                                               std::uint64_t seed, int trials) {
  std::vector<std::string> out;
  if (vertices.empty()) return out;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, vertices.size() - 1);
  for (int t = 0; t < trials; ++t) {
    // Half the samples grow a compatible set, the rest are arbitrary.
    std::vector<std::size_t> chosen{pick(rng)};
    const std::size_t want = 1 + pick(rng) % std::max<std::size_t>(1, basis.quiver().vertices.size());
    for (int attempts = 0; attempts < 64 && chosen.size() < want; ++attempts) {
      const std::size_t v = pick(rng);
      if (std::find(chosen.begin(), chosen.end(), v) != chosen.end()) continue;
      const bool fits = std::all_of(chosen.begin(), chosen.end(), [&](std::size_t u) { return compatible[u][v]; });
      if (fits || t % 2 == 1) chosen.push_back(v);
    }
    bool expected = true;
    for (auto u : chosen)
      for (auto v : chosen)
        if (u != v && !compatible[u][v]) expected = false;
    std::vector<rigidity::TwoTermComplex> parts;
    for (auto v : chosen) parts.push_back(vertices[v].complex);
    const auto sum = rigidity::direct_sum(parts);
    const bool rigid = rigidity::hom_shift(basis, sum, sum) == 0;
    if (rigid != expected) {
      std::string ids;
      for (auto v : chosen) ids += " " + std::to_string(v);
      out.push_back("direct sum of vertices" + ids + (rigid ? " is rigid" : " is not rigid") +
                    " but pairwise compatibility says otherwise");
    }
  }
  return out;
}

std::string describe(const geometry::Dissection& d) {
  std::string s = "m=" + std::to_string(d.m()) + " D={";
  for (std::size_t i = 0; i < d.size(); ++i) s += (i ? "," : "") + geometry::to_string(d.diagonals()[i]);
  return s + "}";
}

CaseResult verify_main(const geometry::Dissection& d, std::optional<std::uint64_t> seed) {
  CaseResult r{"main", describe(d), true, {}};
  try {
    const auto acc = accordion::accordion_complex(d);
    const auto q = quiver::quiver_of_dissection(d);
    prefixed(r.failures, "quiver not gentle", quiver::check_gentle(q));
    const quiver::AlgebraBasis basis(q);
    const auto vertices = rigidity::silting_vertices(basis);
    const auto silt = rigidity::silting_complex(basis, vertices);
    const auto iso = complexes::iso_by_gvectors(acc, silt);
    if (!iso.passed()) {
      r.failures.push_back(std::string("iso_by_gvectors: ") + complexes::to_string(iso.status));
      prefixed(r.failures, "iso", iso.failures);
    }
    prefixed(r.failures, "accordion", structural_failures(acc, "structure"));
    prefixed(r.failures, "silting", structural_failures(silt, "structure"));
    if (seed) {
      const auto compatible = rigidity::compatibility(basis, vertices);
      prefixed(r.failures, "direct sums", direct_sum_spot_check(basis, vertices, compatible, *seed, 8));
    }
  } catch (const Error& e) {
    r.failures.push_back(e.what());
  }
  finish(r);
  return r;
}

CaseResult verify_nested(const geometry::Dissection& d, const geometry::Dissection& d_prime) {
  CaseResult r{"nested", describe(d) + " in " + describe(d_prime), true, {}};
  try {
    const auto iso = accordion::verify_nested(d, d_prime);
    if (!iso.passed()) prefixed(r.failures, "nested", iso.failures);
    prefixed(r.failures, "accordion", structural_failures(accordion::accordion_complex(d), "structure"));
  } catch (const Error& e) {
    r.failures.push_back(e.what());
  }
  finish(r);
  return r;
}

CaseResult verify_idempotent(const quiver::GentleQuiver& q, std::span<const int> subset,
                             const std::string& instance) {
  try {
    return idempotent_against(q, rigidity::silting_complex(q), subset, instance);
  } catch (const Error& e) {
    CaseResult r{"idempotent", instance, false, {e.what()}};
    return r;
  }
}

CaseResult verify_shortcut_consistency(const geometry::Dissection& d, const geometry::Dissection& d_prime) {
  CaseResult r{"shortcut", describe(d) + " in " + describe(d_prime), true, {}};
  try {
    std::vector<int> coordinates;
    for (const auto& c : d.diagonals()) {
      const auto idx = d_prime.index_of(c);
      if (!idx) throw Error(ErrorCode::NotNested, geometry::to_string(c) + " missing from the larger dissection");
      coordinates.push_back(static_cast<int>(*idx));
    }
    const auto big = quiver::quiver_of_dissection(d_prime);
    const auto s = quiver::shortcut(big, coordinates);
    const auto expected = quiver::quiver_of_dissection(d);
    std::vector<int> vertex_map;
    for (int v : s.vertices) vertex_map.push_back(static_cast<int>(*d.index_of(d_prime.diagonals()[v])));
    if (!quiver::same_quiver(s.quiver, expected, vertex_map))
      r.failures.push_back("shortcut quiver differs from the quiver of the smaller dissection");
    const auto sub = quiver::idempotent_subalgebra_check(big, coordinates);
    prefixed(r.failures, "idempotent subalgebra", sub.mismatches);
  } catch (const Error& e) {
    r.failures.push_back(e.what());
  }
  finish(r);
  return r;
}

std::vector<geometry::Dissection> sub_dissections(const geometry::Dissection& d) {
  std::vector<geometry::Dissection> out;
  for (const auto& subset : nonempty_subsets(static_cast<int>(d.size()))) {
    std::vector<geometry::Chord> chords;
    for (int k : subset) chords.push_back(d.diagonals()[k]);
    out.emplace_back(d.cycle(), std::move(chords));
  }
  return out;
}

Summary verify_dissection(const geometry::Dissection& d, unsigned theorems, std::optional<std::uint64_t> seed) {
  if (d.empty()) throw Error(ErrorCode::EmptyDissection, "theorem checks need a non-empty dissection");
  Summary s;
  if (theorems & kMain) s.cases.push_back(verify_main(d, seed));
  if (theorems & kNested)
    for (const auto& sub : sub_dissections(d)) s.cases.push_back(verify_nested(sub, d));
  if (theorems & kIdempotent) {
    const auto q = quiver::quiver_of_dissection(d);
    try {
      const auto big = rigidity::silting_complex(q);
      for (const auto& subset : nonempty_subsets(q.num_vertices()))
        s.cases.push_back(idempotent_against(q, big, subset, describe(d)));
    } catch (const Error& e) {
      s.cases.push_back({"idempotent", describe(d), false, {e.what()}});
    }
  }
  return s;
}

Summary verify_quiver(const quiver::GentleQuiver& q, std::span<const int> subset) {
  Summary s;
  const auto big = rigidity::silting_complex(q);
  if (!subset.empty()) {
    s.cases.push_back(idempotent_against(q, big, subset, "quiver"));
    return s;
  }
  for (const auto& j : nonempty_subsets(q.num_vertices())) s.cases.push_back(idempotent_against(q, big, j, "quiver"));
  return s;
}

Summary verify_exhaustive(int m, unsigned theorems, std::optional<std::uint64_t> seed) {
  Summary s;
  for (const auto& d : geometry::enumerate_dissections(m, false)) s.append(verify_dissection(d, theorems, seed));
  return s;
}

}  // namespace accordion_tau::verify
