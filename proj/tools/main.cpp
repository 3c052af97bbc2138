#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "accordion_tau/accordion_tau.h"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitInput = 2;
constexpr int kExitUnsupported = 3;
constexpr int kDefaultMaxM = 9;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Carries a library status out of nested helpers.
struct LibraryError {
  at_status status;
  std::string message;
};

void check(at_status s) {
  if (s != AT_OK) throw LibraryError{s, at_last_error()};
}

struct Free {
  void operator()(char* s) const { at_string_free(s); }
  void operator()(at_dissection* d) const { at_dissection_destroy(d); }
  void operator()(at_quiver* q) const { at_quiver_destroy(q); }
  void operator()(at_complex* c) const { at_complex_destroy(c); }
  void operator()(at_report* r) const { at_report_destroy(r); }
};

template <class T>
using Owned = std::unique_ptr<T, Free>;

struct Config {
  std::optional<int> m;
  std::optional<std::string> diagonals;
  std::optional<std::string> input;
  std::optional<std::string> quiver;
  std::optional<std::string> subset;
  std::optional<int> exhaustive;
  std::optional<std::uint64_t> seed;
  std::string format = "json";
  std::string theorem = "all";
  std::string out;
  bool from_dissection = false;
};

int max_m() {
  const char* env = std::getenv("ACCORDION_TAU_MAX_M");
  if (!env || !*env) return kDefaultMaxM;
  try {
    std::size_t used = 0;
    const int v = std::stoi(env, &used);
    if (used == std::string(env).size() && v > 0) return v;
  } catch (const std::exception&) {
  }
  throw UsageError(std::string("ACCORDION_TAU_MAX_M must be a positive integer, got '") + env + "'");
}

void check_cap(int m) {
  const int cap = max_m();
  if (m > cap)
    throw UsageError("m = " + std::to_string(m) + " exceeds the safety cap " + std::to_string(cap) +
                     " (set ACCORDION_TAU_MAX_M to raise it)");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

at_format parse_format(const std::string& f) {
  if (f == "json") return AT_FORMAT_JSON;
  if (f == "dot") return AT_FORMAT_DOT;
  return AT_FORMAT_TEXT;
}

unsigned parse_theorem(const std::string& t) {
  if (t == "main") return AT_THEOREM_MAIN;
  if (t == "idempotent") return AT_THEOREM_IDEMPOTENT;
  if (t == "nested") return AT_THEOREM_NESTED;
  return AT_THEOREM_ALL;
}

bool has_dissection(const Config& c) { return c.m || c.diagonals || c.input; }

Owned<at_dissection> load_dissection(const Config& c) {
  if (c.input && (c.m || c.diagonals)) throw UsageError("give either --input or --m/--diagonals, not both");
  at_dissection* d = nullptr;
  if (c.input) {
    check(at_dissection_from_json(read_file(*c.input).c_str(), &d));
    Owned<at_dissection> owned(d);
    check_cap(at_dissection_m(d));
    return owned;
  }
  if (!c.m) throw UsageError("--diagonals needs --m");
  check_cap(*c.m);
  check(at_dissection_parse(*c.m, c.diagonals ? c.diagonals->c_str() : "", &d));
  return Owned<at_dissection>(d);
}

Owned<at_quiver> load_quiver(const Config& c) {
  if (c.quiver && has_dissection(c)) throw UsageError("give either --quiver or a dissection, not both");
  at_quiver* q = nullptr;
  if (c.quiver) {
    check(at_quiver_from_json(read_file(*c.quiver).c_str(), &q));
    return Owned<at_quiver>(q);
  }
  if (!has_dissection(c)) throw UsageError("no input: give --quiver, --input or --m with --diagonals");
  auto d = load_dissection(c);
  check(at_quiver_of_dissection(d.get(), &q));
  return Owned<at_quiver>(q);
}

void emit(const Config& c, const std::string& text) {
  if (c.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(c.out);
  if (!out) throw UsageError("cannot write " + c.out);
  out << text;
}

void emit_complex(const Config& c, const at_complex* x) {
  char* s = nullptr;
  check(at_complex_render(x, parse_format(c.format), &s));
  emit(c, Owned<char>(s).get());
}

int cmd_accordion(const Config& c) {
  if (c.quiver) throw UsageError("accordion takes a dissection, not a quiver");
  if (!has_dissection(c)) throw UsageError("no input: give --input or --m with --diagonals");
  auto d = load_dissection(c);
  at_complex* x = nullptr;
  check(at_accordion_complex(d.get(), &x));
  emit_complex(c, Owned<at_complex>(x).get());
  return kExitPass;
}

int cmd_silting(const Config& c) {
  if (c.from_dissection && c.quiver) throw UsageError("--from-dissection conflicts with --quiver");
  if (c.from_dissection && !has_dissection(c)) throw UsageError("--from-dissection needs --input or --m");
  auto q = load_quiver(c);
  at_complex* x = nullptr;
  check(at_silting_complex(q.get(), &x));
  emit_complex(c, Owned<at_complex>(x).get());
  return kExitPass;
}

int cmd_quiver(const Config& c) {
  auto q = load_quiver(c);
  char* s = nullptr;
  check(at_algebra_dump(q.get(), &s));
  Owned<char> dump(s);
  check(at_quiver_to_json(q.get(), &s));
  Owned<char> quiver(s);
  emit(c, "{\"quiver\":" + std::string(quiver.get()) + ",\"algebra\":" + dump.get() + "}\n");
  return kExitPass;
}

std::vector<int> subset_indices(const at_quiver* q, const std::string& names) {
  std::vector<int> out;
  std::stringstream items(names);
  std::string item;
  while (std::getline(items, item, ',')) {
    if (item.empty()) continue;
    int v = 0;
    if (at_quiver_vertex_index(q, item.c_str(), &v) != AT_OK) throw UsageError(at_last_error());
    out.push_back(v);
  }
  if (out.empty()) throw UsageError("--subset must name at least one vertex");
  return out;
}

int cmd_verify(const Config& c) {
  const unsigned theorems = parse_theorem(c.theorem);
  const std::uint64_t* seed = c.seed ? &*c.seed : nullptr;
  at_report* r = nullptr;
  if (c.exhaustive) {
    if (c.quiver || has_dissection(c) || c.subset) throw UsageError("--exhaustive takes no other input");
    check_cap(*c.exhaustive);
    check(at_verify_exhaustive(*c.exhaustive, theorems, seed, &r));
  } else if (c.quiver || c.subset) {
    if (theorems != AT_THEOREM_IDEMPOTENT)
      throw UsageError("--quiver and --subset only apply to --theorem idempotent");
    auto q = load_quiver(c);
    std::vector<int> j;
    if (c.subset) j = subset_indices(q.get(), *c.subset);
    check(at_verify_quiver(q.get(), j.data(), j.size(), &r));
  } else {
    if (!has_dissection(c)) throw UsageError("no input: give --input, --m with --diagonals, --quiver or --exhaustive");
    auto d = load_dissection(c);
    check(at_verify_dissection(d.get(), theorems, seed, &r));
  }
  Owned<at_report> report(r);
  char* s = nullptr;
  check(at_report_render(r, parse_format(c.format), &s));
  emit(c, Owned<char>(s).get());
  return at_report_passed(r) ? kExitPass : kExitFail;
}

void add_dissection_flags(CLI::App* app, Config& c) {
  app->add_option("--m", c.m, "number of white polygon vertices")->check(CLI::PositiveNumber);
  app->add_option("--diagonals", c.diagonals, "comma-separated diagonals, e.g. 0-2,0-3");
  app->add_option("--input", c.input, "dissection JSON file");
}

void add_output_flags(CLI::App* app, Config& c, std::vector<std::string> formats) {
  app->add_option("--format", c.format, "output format")->check(CLI::IsMember(std::move(formats)));
  app->add_option("--out", c.out, "write output here instead of stdout");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Accordion complexes, gentle algebras and 2-term silting complexes"};
  app.require_subcommand(1);
  Config c;

  auto* accordion = app.add_subcommand("accordion", "accordion complex of a dissection");
  add_dissection_flags(accordion, c);
  add_output_flags(accordion, c, {"json", "dot", "text"});

  auto* silting = app.add_subcommand("silting", "2-term silting complex of a gentle quiver");
  add_dissection_flags(silting, c);
  silting->add_option("--quiver", c.quiver, "quiver JSON file");
  silting->add_flag("--from-dissection", c.from_dissection, "build the quiver from the dissection input");
  add_output_flags(silting, c, {"json", "dot", "text"});

  auto* quiver = app.add_subcommand("quiver", "quiver and algebra dump of a dissection or quiver file");
  add_dissection_flags(quiver, c);
  quiver->add_option("--quiver", c.quiver, "quiver JSON file");
  quiver->add_option("--out", c.out, "write output here instead of stdout");

  auto* verify = app.add_subcommand("verify", "check the correspondence theorems");
  add_dissection_flags(verify, c);
  verify->add_option("--quiver", c.quiver, "quiver JSON file (idempotent reduction only)");
  verify->add_option("--subset", c.subset, "comma-separated vertex names J (default: every non-empty J)");
  verify->add_option("--theorem", c.theorem, "which check to run")
      ->check(CLI::IsMember({"main", "idempotent", "nested", "all"}));
  verify->add_option("--exhaustive", c.exhaustive, "run over every non-empty dissection of the m-gon")
      ->check(CLI::PositiveNumber);
  verify->add_option("--seed", c.seed, "seed for randomized direct-sum spot checks");
  add_output_flags(verify, c, {"json", "text"});

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitInput;
  }

  try {
    if (accordion->parsed()) return cmd_accordion(c);
    if (silting->parsed()) return cmd_silting(c);
    if (quiver->parsed()) return cmd_quiver(c);
    return cmd_verify(c);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const LibraryError& e) {
    std::cerr << "error: " << e.message << "\n";
    return at_status_is_unsupported_algebra(e.status) ? kExitUnsupported : kExitInput;
  }
}
