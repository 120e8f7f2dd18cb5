#include "sortlat/sortlat.h"

#include <doctest.h>

#include <string>

namespace {

std::string take(char* p) {
  std::string s = p ? p : "";
  sortlat_free(p);
  return s;
}

}  // namespace

TEST_CASE("lattice handle") {
  sortlat_lattice* L = nullptr;
  REQUIRE(sortlat_lattice_create("A3", "1,2,3", -1, &L) == SORTLAT_OK);
  size_t elements = 0, edges = 0;
  CHECK(sortlat_lattice_counts(L, &elements, &edges) == SORTLAT_OK);
  CHECK(elements == 14);
  CHECK(edges == 21);
  char* w = nullptr;
  CHECK(sortlat_lattice_element_word(L, 13, &w) == SORTLAT_OK);
  CHECK(take(w) == "s1s2s3|s1s2|s1");
  CHECK(sortlat_lattice_element_word(L, 14, &w) == SORTLAT_ERR_INVALID_ARGUMENT);
  CHECK(std::string(sortlat_last_error()).find("range") != std::string::npos);

  char* dot = nullptr;
  CHECK(sortlat_lattice_dot(L, &dot) == SORTLAT_OK);
  CHECK(take(dot).find("rankdir=BT") != std::string::npos);
  char* json = nullptr;
  CHECK(sortlat_lattice_json(L, &json) == SORTLAT_OK);
  CHECK(take(json).find("\"edge_count\": 21") != std::string::npos);

  int passed = 0;
  char* report = nullptr;
  CHECK(sortlat_lattice_verify(L, SORTLAT_SUITE_ALL, &passed, &report) == SORTLAT_OK);
  CHECK(passed == 1);
  CHECK(take(report).find("ok   birkhoff") != std::string::npos);
  sortlat_lattice_destroy(L);
}

TEST_CASE("default gamma and caps") {
  sortlat_lattice* L = nullptr;
  CHECK(sortlat_lattice_create("B2", nullptr, -1, &L) == SORTLAT_OK);
  size_t n = 0;
  sortlat_lattice_counts(L, &n, nullptr);
  CHECK(n == 6);
  sortlat_lattice_destroy(L);

  CHECK(sortlat_lattice_create("tC2", "1,3,2", -1, &L) == SORTLAT_ERR_CAP_REQUIRED);
  CHECK(L == nullptr);
  CHECK(sortlat_lattice_create("tC2", "1,3,2", 7, &L) == SORTLAT_OK);
  sortlat_lattice_counts(L, &n, nullptr);
  CHECK(n == 20);
  sortlat_lattice_destroy(L);
}

TEST_CASE("errors") {
  sortlat_lattice* L = nullptr;
  CHECK(sortlat_lattice_create("Q7", nullptr, -1, &L) == SORTLAT_ERR_PARSE);
  CHECK(sortlat_lattice_create("A3", "1,2", -1, &L) == SORTLAT_ERR_INVALID_ARGUMENT);
  CHECK(sortlat_lattice_create("A3", "1,x,3", -1, &L) == SORTLAT_ERR_PARSE);
  CHECK(sortlat_lattice_create(nullptr, nullptr, -1, &L) == SORTLAT_ERR_NULL);
  CHECK(sortlat_lattice_counts(nullptr, nullptr, nullptr) == SORTLAT_ERR_NULL);
  CHECK(std::string(sortlat_status_string(SORTLAT_ERR_CAP_EXCEEDED)) == "cap exceeded");
  char* out = nullptr;
  CHECK(sortlat_field_minpoly(0, &out) == SORTLAT_ERR_INVALID_ARGUMENT);
  sortlat_lattice_destroy(nullptr);
}

TEST_CASE("field, rank and Coxeter elements") {
  char* p = nullptr;
  CHECK(sortlat_field_minpoly(5, &p) == SORTLAT_OK);
  CHECK(take(p) == "x^2 - x - 1");
  int rank = 0;
  CHECK(sortlat_diagram_rank("I2(7)", &rank) == SORTLAT_OK);
  CHECK(rank == 2);
  char* list = nullptr;
  CHECK(sortlat_coxeter_elements("A3", &list) == SORTLAT_OK);
  const std::string s = take(list);
  CHECK(s.find("1,2,3\ts1→s2 s2→s3\n") != std::string::npos);
}

TEST_CASE("scan and oracle diff") {
  int sound = 0, consistent = 0;
  char* out = nullptr;
  CHECK(sortlat_scan("B3", 0, &sound, &consistent, &out) == SORTLAT_OK);
  CHECK(sound == 1);
  CHECK(consistent == 1);
  take(out);
  int agree = 0;
  char* report = nullptr;
  CHECK(sortlat_oracle_diff("A3", "2,1,3", -1, &agree, &report) == SORTLAT_OK);
  CHECK(agree == 1);
  CHECK(take(report).find("ok   meet") != std::string::npos);
  CHECK(sortlat_oracle_diff("tC2", "1,3,2", 6, &agree, nullptr) == SORTLAT_OK);
  CHECK(agree == 1);
}
