#include <gtest/gtest.h>

#include <random>

#include "fanokit/error.hpp"
#include "fanokit/json_io.hpp"
#include "oracles.hpp"

using namespace fanokit;

TEST(JsonIo, FieldSpecs) {
  EXPECT_FALSE(parse_field_spec("Q").is_prime());
  EXPECT_EQ(parse_field_spec("p=7").modulus(), 7u);
  EXPECT_THROW(parse_field_spec("p=8"), Error);
  EXPECT_THROW(parse_field_spec("R"), ParseError);
  EXPECT_THROW(parse_field_spec("p="), ParseError);
  for (const Field& f : {Field::rationals(), Field::prime(11)}) EXPECT_EQ(field_from_json(to_json(f)), f);
  EXPECT_EQ(field_from_json(Json("p=5")).modulus(), 5u);
  EXPECT_THROW(field_from_json(Json(3)), ParseError);
}

TEST(JsonIo, ScalarRoundTrip) {
  std::mt19937 rng(71);
  for (const Field& f : {Field::rationals(), Field::prime(13)}) {
    for (int i = 0; i < 50; ++i) {
      Scalar s = oracle::random_scalar(f, rng, 40);
      EXPECT_EQ(scalar_from_json(to_json(s), f), s);
    }
  }
  Field q = Field::rationals();
  EXPECT_EQ(to_json(q.parse("-6/4")), Json("-3/2"));
  EXPECT_EQ(to_json(Field::prime(7).from_int(-1)), Json(6));
  EXPECT_THROW(scalar_from_json(Json(true), q), ParseError);
  EXPECT_THROW(scalar_from_json(Json("1/0"), q), Error);
}

TEST(JsonIo, MatrixRoundTrip) {
  std::mt19937 rng(72);
  for (const Field& f : {Field::rationals(), Field::prime(5)}) {
    Matrix m = oracle::random_matrix(f, 3, 4, rng, 9);
    Json j = to_json(m);
    EXPECT_EQ(j["rows"], 3);
    EXPECT_EQ(j["cols"], 4);
    EXPECT_EQ(matrix_from_json(j, Field::rationals()), m);
  }
  Matrix bare = matrix_from_json(Json::parse("[[1, \"1/2\"], [0, 3]]"), Field::rationals());
  EXPECT_EQ(bare(0, 1), Field::rationals().parse("1/2"));
  EXPECT_THROW(matrix_from_json(Json::parse("[[1, 2], [3]]"), Field::rationals()), ParseError);
  EXPECT_THROW(matrix_from_json(Json::parse(R"({"rows": 3, "entries": [[1]]})"), Field::rationals()), ParseError);
  EXPECT_THROW(matrix_from_json(Json::parse(R"({"cols": 1})"), Field::rationals()), ParseError);
}

TEST(JsonIo, PluckerRoundTrip) {
  std::mt19937 rng(73);
  for (const Field& f : {Field::rationals(), Field::prime(7)}) {
    for (int trial = 0; trial < 10; ++trial) {
      Matrix m = oracle::random_matrix(f, 2, 5, rng, 5);
      if (rank(m) < 2) continue;
      PluckerPoint p = plucker_from_matrix(PlaneFrame(m));
      Json j = to_json(p);
      EXPECT_TRUE(j["coords"].is_object());
      EXPECT_EQ(plucker_from_json(j, Field::rationals()), p);
    }
  }
  // Coordinates as a list in lexicographic order.
  Json list = Json::parse(R"({"k": 1, "n": 3, "coords": [1, 0, 0, 0, 0, 0]})");
  PluckerPoint line = plucker_from_json(list, Field::rationals());
  EXPECT_EQ(to_json(line)["coords"].begin().key(), "1,2");
  EXPECT_THROW(plucker_from_json(Json::parse(R"({"k": 1, "n": 3, "coords": [1, 0]})"), Field::rationals()), ParseError);
  EXPECT_THROW(plucker_from_json(Json::parse(R"({"k": 1, "coords": {}})"), Field::rationals()), ParseError);
  EXPECT_THROW(plucker_from_json(Json::parse(R"({"k": 1, "n": 3, "coords": {"1,x": 1}})"), Field::rationals()),
               ParseError);
}

TEST(JsonIo, SemplePointRoundTrip) {
  std::mt19937 rng(74);
  Field q = Field::rationals();
  SempleChartPoint c{q.from_int(2), oracle::random_matrix(q, 2, 3, rng, 6)};
  Json j = to_json(c);
  EXPECT_EQ(j["k"], 1);
  EXPECT_EQ(j["n"], 4);
  SempleChartPoint back = semple_point_from_json(j, q);
  EXPECT_EQ(back.y, c.y);
  EXPECT_EQ(back.x, c.x);
  Json bad = j;
  bad["k"] = 2;
  EXPECT_THROW(semple_point_from_json(bad, q), ParseError);
  EXPECT_THROW(semple_point_from_json(Json::parse(R"({"y": 1, "x": []})"), q), ParseError);
}

TEST(JsonIo, FamilyInference) {
  Json j = Json::parse(R"({"phi": "u2", "coeffs": {"0,1": "u0", "2,2": "-u0", "0,2": "u1", "1,1": "-u1"}})");
  HypersurfaceFamily fam = family_from_json(j, Field::prime(3));
  EXPECT_EQ(fam.base().r(), 1u);
  EXPECT_EQ(fam.n(), 2u);
  EXPECT_EQ(fam.d(), 2u);
  EXPECT_EQ(fam.mu(), 1u);
  Json back = to_json(fam);
  EXPECT_EQ(back["r"], 1);
  EXPECT_EQ(back["phi"], "u2");
  HypersurfaceFamily again = family_from_json(back, Field::prime(3));
  EXPECT_EQ(again.coeffs(), fam.coeffs());
  // Keys are sorted on input.
  Json swapped = Json::parse(R"({"phi": "u2", "coeffs": {"1,0": "u0", "2,2": "-u0", "2,0": "u1", "1,1": "-u1"}})");
  EXPECT_EQ(family_from_json(swapped, Field::prime(3)).coeffs(), fam.coeffs());
  EXPECT_THROW(family_from_json(Json::parse(R"({"phi": "u2", "coeffs": {}})"), Field::prime(3)), ParseError);
  EXPECT_THROW(family_from_json(Json::parse(R"({"phi": "u2", "coeffs": {"0,1": "u0", "1": "u1"}})"), Field::prime(3)),
               ParseError);
  EXPECT_THROW(family_from_json(Json::parse(R"({"phi": "u2", "coeffs": {"0,1": "u0", "1,0": "u1"}})"), Field::prime(3)),
               ParseError);
  EXPECT_THROW(family_from_json(Json::parse(R"({"coeffs": {"0,1": "u0"}})"), Field::prime(3)), ParseError);
}

TEST(JsonIo, CertificateLayout) {
  CertifyInputs in;
  in.d = 3;
  in.r = 1;
  Json j = to_json(certify(in));
  ASSERT_TRUE(j["certificates"].is_array());
  for (const auto& c : j["certificates"]) {
    std::vector<std::string> keys;
    for (const auto& item : c.items()) keys.push_back(item.key());
    EXPECT_EQ(keys, (std::vector<std::string>{"name", "inputs", "threshold", "satisfied", "witness", "paper_ref"}));
    for (const auto& item : c["inputs"].items()) EXPECT_TRUE(item.value().is_string()) << item.key();
    EXPECT_TRUE(c["threshold"].is_string());
    EXPECT_TRUE(c["satisfied"].is_boolean());
  }
  EXPECT_EQ(j["family_unirationality_bound"], "7");
  EXPECT_EQ(j["inputs"]["n"], "7");
  EXPECT_EQ(j["inputs"]["t"], "-1");
  // Same inputs, same bytes.
  EXPECT_EQ(j.dump(), to_json(certify(in)).dump());
}

TEST(JsonIo, CertificateIntegersAreExact) {
  CertifyInputs in;
  in.d = 9;
  in.r = 3;
  in.t = 2;
  Json j = to_json(certify(in));
  const std::string bound = j["family_unirationality_bound"];
  EXPECT_EQ(bound, family_unirationality_bound(9, 3, 2).get_str());
  EXPECT_GT(bound.size(), 18u);
}
