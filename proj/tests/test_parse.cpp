#include <catch2/catch_amalgamated.hpp>

#include "gwdeg/parse.hpp"

using namespace gwdeg;

TEST_CASE("field descriptors") {
  CHECK(parse_field("Q")->is_rationals());
  CHECK(parse_field("F5")->prime() == 5);
  auto Qi = parse_field("Q[i]/(i^2+1)");
  REQUIRE(Qi->is_extension());
  CHECK(Qi->ext_degree() == 2);
  CHECK(Qi->generator_name() == "i");
  auto Qt = parse_field("Q[t]/(t^2-2)");
  CHECK(Qt->ext_degree() == 2);
  // name round trip
  CHECK(same_field(parse_field(Qi->name()), Qi));
  CHECK(same_field(parse_field("F7"), Field::prime_field(7)));
  // tower
  auto T = parse_field("Q[t]/(t^2-2)[s]/(s^2-t)");
  CHECK(T->absolute_degree() == 4);
  CHECK_THROWS_AS(parse_field("F2"), Error);
  CHECK_THROWS_AS(parse_field("R"), Error);
  CHECK_THROWS_AS(parse_field("Q[i]/(i-1)"), Error);
}

TEST_CASE("elements") {
  auto q = Field::rationals();
  CHECK(parse_element(q, "3/4") == q->from_rat(Rat(3, 4)));
  CHECK(parse_element(q, "-2") == q->from_int(-2));
  CHECK(parse_element(q, "(1+2)*3") == q->from_int(9));
  CHECK(parse_element(q, "2^3") == q->from_int(8));
  auto Qi = parse_field("Q[i]/(i^2+1)");
  CHECK(parse_element(Qi, "i^2") == Qi->from_int(-1));
  CHECK(parse_element(Qi, "1+2*i") == Qi->make({q->one(), q->from_int(2)}));
  auto F7 = Field::prime_field(7);
  CHECK(parse_element(F7, "10") == F7->from_int(3));
  CHECK(parse_element(F7, "1/2") == F7->from_int(4));
  CHECK_THROWS_AS(parse_element(q, "1+"), Error);
  CHECK_THROWS_AS(parse_element(q, "y"), Error);
  CHECK_THROWS_AS(parse_element(q, "1/0"), Error);
}

TEST_CASE("polynomial maps") {
  auto q = Field::rationals();
  PolyMap f = parse_poly_map(q, "x1^2 - x2^2; 2*x1*x2");
  CHECK(f.n == 2);
  CHECK(f.comps[0].total_degree() == 2);
  Element v = f.comps[0].eval({q->from_int(3), q->from_int(1)});
  CHECK(v == q->from_int(8));
  PolyMap g = parse_poly_map(q, "x1^3");
  CHECK(g.n == 1);
  // variables out of range are rejected
  CHECK_THROWS_AS(parse_poly_map(q, "x1 + x2"), Error);
  CHECK_THROWS_AS(parse_poly_map(q, "x1 / x1"), Error);
}

TEST_CASE("points") {
  auto q = Field::rationals();
  auto p = parse_point(q, "1/2, -3");
  REQUIRE(p.size() == 2);
  CHECK(p[0] == q->from_rat(Rat(1, 2)));
  CHECK(p[1] == q->from_int(-3));
}

TEST_CASE("GW expressions") {
  auto q = Field::rationals();
  GWElement x = parse_gw(q, "15<1>+12<-1>");
  CHECK(x.rank() == 27);
  CHECK(x.signature() == 3);
  CHECK(gw_equals(parse_gw(q, "<2>+<-2>"), hyperbolic(q, 1)));
  CHECK(gw_equals(parse_gw(q, "h"), hyperbolic(q, 1)));
  CHECK(gw_equals(parse_gw(q, "2h"), hyperbolic(q, 2)));
  CHECK(gw_equals(parse_gw(q, "<3> - <3>"), GWElement::zero(q)));
  CHECK(gw_equals(parse_gw(q, "3"), gw_generator(q, 1).scaled(3)));
  CHECK(gw_equals(parse_gw(q, "-h + <1> + <-1>"), GWElement::zero(q)));
  auto F5 = Field::prime_field(5);
  CHECK(gw_equals(parse_gw(F5, "<1>+<4>"), parse_gw(F5, "<1>+<1>")));
  CHECK_THROWS_AS(parse_gw(q, "<0>"), Error);
  CHECK_THROWS_AS(parse_gw(q, ""), Error);
  CHECK_THROWS_AS(parse_gw(q, "<1> <2>"), Error);
}

TEST_CASE("diagonal form payloads") {
  auto Qi = parse_field("Q[i]/(i^2+1)");
  auto d = parse_diagonal_form(Qi, "<1> + <i>");
  REQUIRE(d.size() == 2);
  CHECK(d[1] == Qi->generator());
  auto d2 = parse_diagonal_form(Field::rationals(), "2<3>");
  REQUIRE(d2.size() == 2);
  CHECK_THROWS_AS(parse_diagonal_form(Qi, "<1> - <i>"), Error);
}

TEST_CASE("MW expressions") {
  auto q = Field::rationals();
  MWElement x = parse_mw(q, "eta*[-1] + 2");
  CHECK(*x.grade() == 0);
  CHECK(gw_equals(degree0_to_gw(x), hyperbolic(q, 1)));
  MWElement y = parse_mw(q, "eta^2*[2][3] + 3*eta*[6]");
  CHECK(*y.grade() == 0);
  CHECK(parse_mw(q, "eta").terms().begin()->first.eta == 1);
  CHECK(parse_mw(q, "[3][2]").terms().begin()->first.syms.size() == 2);
  CHECK(parse_mw(q, "[1]").is_zero());
  CHECK(parse_mw(q, "5").terms().begin()->second == 5);
  CHECK(parse_mw(q, "eta*eta*[2]") == parse_mw(q, "eta^2*[2]"));
  CHECK_THROWS_AS(parse_mw(q, "[0]"), Error);
  CHECK_THROWS_AS(parse_mw(q, "eta + [2]"), Error);  // grade mismatch
}

TEST_CASE("form JSON round trips") {
  auto j = json::parse(R"({"field":"Q","gram":[["2","0"],["0","-2"]]})");
  BilinearForm f = parse_form_json(j);
  CHECK(f.dim() == 2);
  CHECK(f.gram().at(0, 0) == Field::rationals()->from_int(2));
  json back = form_to_json(f);
  BilinearForm g = parse_form_json(back);
  CHECK(is_isometric(f, g));

  auto jd = json::parse(R"({"field":"Q","diag":["1","-1"]})");
  BilinearForm fd = parse_form_json(jd);
  CHECK(fd.dim() == 2);
  CHECK(is_isometric(fd, f));
  CHECK_THROWS_AS(parse_form_json(json::parse(R"({"field":"Q"})")), Error);
}

TEST_CASE("GW JSON round trips") {
  auto q = Field::rationals();
  GWElement x = parse_gw(q, "<1>+<1>-<3>");
  json j = gw_to_json(x);
  CHECK(j["field"] == "Q");
  GWElement y = parse_gw_json(j);
  CHECK(gw_equals(x, y));
  auto j2 = json::parse(R"({"field":"Q","plus":["1","1","-2"],"minus":["3"]})");
  GWElement z = parse_gw_json(j2);
  CHECK(z.rank() == 2);
}

TEST_CASE("MW JSON shape") {
  auto q = Field::rationals();
  json j = mw_to_json(parse_mw(q, "eta*[-1] + 2"));
  CHECK(j["field"] == "Q");
  CHECK(j["grade"] == 0);
  CHECK(j["terms"].size() == 2);
}

TEST_CASE("normal form JSON") {
  auto q = Field::rationals();
  json j = normal_form_to_json(gw_normal_form(parse_gw(q, "15<1>+12<-1>")));
  CHECK(j["rank"] == "27");
  CHECK(j["sig"] == "3");
  CHECK(j["kind"] == "rational");
}
