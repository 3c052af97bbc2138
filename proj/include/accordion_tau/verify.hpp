#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "accordion_tau/complexes.hpp"
#include "accordion_tau/geometry.hpp"
#include "accordion_tau/quiver.hpp"
#include "accordion_tau/rigidity.hpp"

// Theorem checks that tie the accordion side to the silting side, plus the
// structural invariants every produced complex must satisfy.
namespace accordion_tau::verify {

enum Theorem : unsigned {
  kMain = 1u << 0,
  kIdempotent = 1u << 1,
  kNested = 1u << 2,
  kAll = kMain | kIdempotent | kNested,
};

struct CaseResult {
  std::string theorem;
  std::string instance;
  bool pass = true;
  std::vector<std::string> failures;
};

struct Summary {
  std::vector<CaseResult> cases;

  std::size_t passed() const;
  std::size_t failed() const;
  bool pass() const { return failed() == 0; }
  void append(Summary other);
  nlohmann::json to_json() const;
  std::string to_text() const;
};

// Pseudomanifold, regularity of the dual graph (degree = label length) and
// the g-vector fan checks. Failures are prefixed with `what`.
std::vector<std::string> structural_failures(const complexes::LabeledComplex& c, const std::string& what);

// Samples vertex subsets and compares rigidity of their direct sum with
// pairwise compatibility. Returns one line per disagreement.
std::vector<std::string> direct_sum_spot_check(const quiver::AlgebraBasis& basis,
                                               const std::vector<rigidity::SiltingVertex>& vertices,
                                               const std::vector<std::vector<bool>>& compatible,
                                               std::uint64_t seed, int trials);

std::string describe(const geometry::Dissection& d);

CaseResult verify_main(const geometry::Dissection& d, std::optional<std::uint64_t> seed = std::nullopt);
CaseResult verify_nested(const geometry::Dissection& d, const geometry::Dissection& d_prime);
CaseResult verify_idempotent(const quiver::GentleQuiver& q, std::span<const int> subset,
                             const std::string& instance);

// Convention check: the shortcut of the quiver of d_prime to d equals the
// quiver of d, and the idempotent subalgebra check passes.
CaseResult verify_shortcut_consistency(const geometry::Dissection& d, const geometry::Dissection& d_prime);

// Every non-empty subset of a dissection's diagonals.
std::vector<geometry::Dissection> sub_dissections(const geometry::Dissection& d);

// Selected theorems on one dissection: main theorem, nested against all
// non-empty sub-dissections, idempotent reduction for all non-empty J.
Summary verify_dissection(const geometry::Dissection& d, unsigned theorems,
                          std::optional<std::uint64_t> seed = std::nullopt);

// Idempotent reduction for the given J, or every non-empty J when empty.
Summary verify_quiver(const quiver::GentleQuiver& q, std::span<const int> subset);

// verify_dissection over every non-empty dissection of the m-gon.
Summary verify_exhaustive(int m, unsigned theorems, std::optional<std::uint64_t> seed = std::nullopt);

}  // namespace accordion_tau::verify
