#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <string>

#include "koszul/families.hpp"
#include "koszul/kfile.hpp"

using namespace koszul;

namespace {

const char* kGood = R"({
  "n": 4,
  "field": {"kind": "rational"},
  "pairs_order": "lex",
  "basis": [["1", "0", "0", "0", "0", "-2/3"],
            ["0", "1", "0", "0", "0", "0"]]
})";

}  // namespace

TEST_CASE("parse and build a subspace") {
  auto kf = kfile_parse(kGood);
  CHECK(kf.n == 4);
  CHECK(kf.field.kind == FieldConfig::Kind::rational);
  RationalField fq;
  auto k = subspace_from_kfile(kf, fq);
  CHECK(k.n() == 4);
  CHECK(k.dim() == 2);
  CHECK(k.basis().dense_row(0)[5] == Rat(-2, 3));
}

TEST_CASE("round trip preserves the subspace") {
  RationalField fq;
  auto k = random_subspace(5, 4, fq, 7);
  auto text = kfile_dump(kfile_from_subspace(k));
  auto back = subspace_from_kfile(kfile_parse(text), fq);
  REQUIRE(back.dim() == k.dim());
  for (Index r = 0; r < k.dim(); ++r)
    CHECK(back.basis().dense_row(r) == k.basis().dense_row(r));

  PrimeField fp(kDefaultPrime);
  auto kp = random_subspace(4, 3, fp, 11);
  auto text2 = kfile_dump(kfile_from_subspace(kp));
  CHECK(text2.find("2305843009213693951") != std::string::npos);
  auto back2 = subspace_from_kfile(kfile_parse(text2), fp);
  for (Index r = 0; r < kp.dim(); ++r)
    CHECK(back2.basis().dense_row(r) == kp.basis().dense_row(r));
}

TEST_CASE("file round trip") {
  RationalField fq;
  const std::string path = "kfile_roundtrip_tmp.json";
  auto k = weyman(4, fq);
  kfile_write(path, kfile_from_subspace(k));
  auto back = subspace_from_kfile(kfile_read(path), fq);
  CHECK(back.dim() == 5);
  std::remove(path.c_str());
  CHECK_THROWS_AS(kfile_read(path), invalid_input);
}

TEST_CASE("schema violations are invalid input") {
  CHECK_THROWS_AS(kfile_parse("not json"), invalid_input);
  CHECK_THROWS_AS(kfile_parse("[]"), invalid_input);
  CHECK_THROWS_AS(kfile_parse(R"({"n": 4, "field": {"kind": "rational"},
    "basis": []})"),
                  invalid_input);  // pairs_order missing
  CHECK_THROWS_AS(kfile_parse(R"({"n": 4, "field": {"kind": "rational"},
    "pairs_order": "colex", "basis": []})"),
                  invalid_input);
  CHECK_THROWS_AS(kfile_parse(R"({"n": 4, "field": {"kind": "septic"},
    "pairs_order": "lex", "basis": []})"),
                  invalid_input);
  CHECK_THROWS_AS(kfile_parse(R"({"n": 4, "field": {"kind": "prime", "p": 7},
    "pairs_order": "lex", "basis": []})"),
                  invalid_input);  // p must be a string
  CHECK_THROWS_AS(kfile_parse(R"({"n": 4, "field": {"kind": "prime", "p": "6"},
    "pairs_order": "lex", "basis": []})"),
                  invalid_input);  // p must be prime
  CHECK_THROWS_AS(kfile_parse(R"({"n": 4, "field": {"kind": "rational"},
    "pairs_order": "lex", "basis": [["1", 2]]})"),
                  invalid_input);  // coefficients must be strings
}

TEST_CASE("semantic violations surface on subspace construction") {
  RationalField fq;
  auto kf = kfile_parse(kGood);

  auto short_row = kf;
  short_row.basis[0].pop_back();
  CHECK_THROWS_AS(subspace_from_kfile(short_row, fq), invalid_input);

  auto dependent = kf;
  dependent.basis.push_back(dependent.basis[0]);
  CHECK_THROWS_AS(subspace_from_kfile(dependent, fq), invalid_input);

  auto bad_coeff = kf;
  bad_coeff.basis[0][0] = "1/0";
  CHECK_THROWS_AS(subspace_from_kfile(bad_coeff, fq), invalid_input);
}

TEST_CASE("vfile parsing") {
  auto vf = vfile_parse(R"({
    "n": 3,
    "field": {"kind": "rational"},
    "basis": [["1", "0", "-1"], ["0", "1", "1/2"]]
  })");
  CHECK(vf.n == 3);
  RationalField fq;
  auto m = matrix_from_vfile(vf, fq);
  CHECK(m.rows() == 2);
  CHECK(m.cols() == 3);
  CHECK(m.dense_row(1)[2] == Rat(1, 2));

  auto wrong = vf;
  wrong.basis[0].pop_back();
  CHECK_THROWS_AS(matrix_from_vfile(wrong, fq), invalid_input);
}

TEST_CASE("reports serialize exactly, no float tokens") {
  Report rep;
  rep.command = "wq";
  rep.inputs = {{"input", "k.json"}, {"q", "2"}};
  rep.field_label = "rational";
  rep.results = {{"dim", "21"}, {"ratio", "-2/3"}};
  rep.timing_ms = 17;

  auto text = rep.to_text();
  CHECK(text.find("dim = 21") != std::string::npos);
  CHECK(text.find("17 ms") != std::string::npos);

  auto json = rep.to_json();
  CHECK(json.find("\"dim\": \"21\"") != std::string::npos);
  CHECK(json.find("\"ratio\": \"-2/3\"") != std::string::npos);
  CHECK(json.find("\"timing_ms\": \"17\"") != std::string::npos);
  CHECK(json.find('.') == json.find("k.json") + 1);  // the only dot is the path
}
