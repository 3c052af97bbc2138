#include <doctest.h>

#include <string>
#include <vector>

#include "accordion_tau/accordion_tau.h"

namespace {

std::string take(char* s) {
  std::string out = s ? s : "";
  at_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("c api: dissection and accordion complex") {
  const int pairs[] = {0, 2, 0, 3, 0, 4};
  at_dissection* d = nullptr;
  REQUIRE(at_dissection_create(6, pairs, 3, &d) == AT_OK);
  CHECK(at_dissection_m(d) == 6);
  CHECK(at_dissection_size(d) == 3);
  at_complex* c = nullptr;
  REQUIRE(at_accordion_complex(d, &c) == AT_OK);
  CHECK(at_complex_num_vertices(c) == 9);
  CHECK(at_complex_num_facets(c) == 14);
  CHECK(at_complex_num_exchange_edges(c) == 21);
  CHECK(at_complex_label_length(c) == 3);
  std::vector<int> g(3);
  CHECK(at_complex_gvector(c, 0, g.data()) == AT_OK);
  CHECK(at_complex_gvector(c, 99, g.data()) == AT_ERR_INVALID_ARGUMENT);
  char* s = nullptr;
  REQUIRE(at_complex_render(c, AT_FORMAT_DOT, &s) == AT_OK);
  CHECK(take(s).rfind("graph exchange", 0) == 0);
  REQUIRE(at_complex_render(c, AT_FORMAT_JSON, &s) == AT_OK);
  CHECK(take(s).find("\"exchange_graph\"") != std::string::npos);
  REQUIRE(at_dissection_to_json(d, &s) == AT_OK);
  CHECK(take(s) == "{\"diagonals\":[[0,2],[0,3],[0,4]],\"m\":6}");
  at_complex_destroy(c);
  at_dissection_destroy(d);
}

TEST_CASE("c api: errors carry codes and messages") {
  at_dissection* d = nullptr;
  CHECK(at_dissection_parse(6, "0-2,1-3", &d) == AT_ERR_CROSSING_PAIR);
  CHECK(d == nullptr);
  CHECK(std::string(at_last_error()).find("CrossingPair") != std::string::npos);
  CHECK(std::string(at_status_name(AT_ERR_CROSSING_PAIR)) == "CrossingPair");
  CHECK(at_dissection_parse(6, "0-2,x", &d) == AT_ERR_PARSE);
  CHECK(at_dissection_from_json("{\"m\": 6, ", &d) == AT_ERR_PARSE);
  CHECK(at_dissection_from_json("{\"diagonals\": []}", &d) == AT_ERR_PARSE);
  CHECK(at_dissection_create(6, nullptr, 1, &d) == AT_ERR_INVALID_ARGUMENT);
  REQUIRE(at_dissection_parse(6, "", &d) == AT_OK);
  at_complex* c = nullptr;
  CHECK(at_accordion_complex(d, &c) == AT_ERR_EMPTY_DISSECTION);
  at_dissection_destroy(d);
  CHECK(at_status_is_unsupported_algebra(AT_ERR_BAND_DETECTED));
  CHECK_FALSE(at_status_is_unsupported_algebra(AT_ERR_PARSE));
  CHECK(std::string(at_status_name(AT_OK)) == "Ok");
}

TEST_CASE("c api: quivers and silting complexes") {
  const char* linear =
      R"({"vertices":["1","2","3"],"arrows":[{"id":"alpha","src":"1","tgt":"2"},)"
      R"({"id":"beta","src":"2","tgt":"3"}],"relations":[["alpha","beta"]]})";
  at_quiver* q = nullptr;
  REQUIRE(at_quiver_from_json(linear, &q) == AT_OK);
  CHECK(at_quiver_num_vertices(q) == 3);
  int v = -1;
  CHECK(at_quiver_vertex_index(q, "3", &v) == AT_OK);
  CHECK(v == 2);
  CHECK(at_quiver_vertex_index(q, "9", &v) == AT_ERR_INVALID_ARGUMENT);
  at_complex* c = nullptr;
  REQUIRE(at_silting_complex(q, &c) == AT_OK);
  CHECK(at_complex_num_vertices(c) == 8);
  CHECK(at_complex_num_facets(c) == 12);
  CHECK(at_complex_num_exchange_edges(c) == 18);
  at_complex_destroy(c);
  char* s = nullptr;
  REQUIRE(at_algebra_dump(q, &s) == AT_OK);
  CHECK(take(s).find("\"dimension\":5") != std::string::npos);
  REQUIRE(at_quiver_to_json(q, &s) == AT_OK);
  CHECK(take(s).find("alpha") != std::string::npos);
  const int j[] = {0, 2};
  at_report* r = nullptr;
  REQUIRE(at_verify_quiver(q, j, 2, &r) == AT_OK);
  CHECK(at_report_passed(r));
  CHECK(at_report_num_cases(r) == 1);
  CHECK(at_report_render(r, AT_FORMAT_DOT, &s) == AT_ERR_INVALID_ARGUMENT);
  at_report_destroy(r);
  at_quiver_destroy(q);

  const char* kronecker =
      R"({"vertices":["1","2"],"arrows":[{"id":"a","src":"1","tgt":"2"},{"id":"b","src":"1","tgt":"2"}]})";
  REQUIRE(at_quiver_from_json(kronecker, &q) == AT_OK);
  CHECK(at_silting_complex(q, &c) == AT_ERR_BAND_DETECTED);
  at_quiver_destroy(q);
}

TEST_CASE("c api: verification reports") {
  at_dissection* d = nullptr;
  REQUIRE(at_dissection_parse(7, "0-2,2-4,4-6", &d) == AT_OK);
  at_quiver* q = nullptr;
  REQUIRE(at_quiver_of_dissection(d, &q) == AT_OK);
  CHECK(at_quiver_num_vertices(q) == 3);
  at_quiver_destroy(q);
  const uint64_t seed = 5;
  at_report* r = nullptr;
  REQUIRE(at_verify_dissection(d, AT_THEOREM_ALL, &seed, &r) == AT_OK);
  CHECK(at_report_passed(r));
  CHECK(at_report_num_cases(r) == 15);
  CHECK(at_report_num_failed(r) == 0);
  char* s = nullptr;
  REQUIRE(at_report_render(r, AT_FORMAT_TEXT, &s) == AT_OK);
  CHECK(take(s) == "PASS: 15/15 cases\n");
  at_report_destroy(r);
  CHECK(at_verify_dissection(d, 0, nullptr, &r) == AT_ERR_INVALID_ARGUMENT);
  at_dissection_destroy(d);
  REQUIRE(at_verify_exhaustive(5, AT_THEOREM_MAIN, nullptr, &r) == AT_OK);
  CHECK(at_report_num_cases(r) == 10);
  at_report_destroy(r);
}

TEST_CASE("c api: identical inputs render identically") {
  std::string first;
  for (int round = 0; round < 2; ++round) {
    at_dissection* d = nullptr;
    REQUIRE(at_dissection_parse(7, "0-2,2-4,4-6", &d) == AT_OK);
    at_quiver* q = nullptr;
    REQUIRE(at_quiver_of_dissection(d, &q) == AT_OK);
    at_complex* c = nullptr;
    REQUIRE(at_silting_complex(q, &c) == AT_OK);
    char* s = nullptr;
    REQUIRE(at_complex_render(c, AT_FORMAT_JSON, &s) == AT_OK);
    const std::string text = take(s);
    if (round == 0)
      first = text;
    else
      CHECK(text == first);
    at_complex_destroy(c);
    at_quiver_destroy(q);
    at_dissection_destroy(d);
  }
}
