#include <fstream>

#include "common.hpp"
#include "doctest.h"
#include "relqh/gallery.hpp"
#include "relqh/io.hpp"

using namespace relqh;

TEST_CASE("algebra JSON round trip") {
  for (Field f : {Field::prime(3), Field::rationals()}) {
    auto a = build_Am(3, f);
    auto b = algebra_from_json(Json::parse(algebra_to_json(*a).dump()));
    CHECK(same_algebra(*a, *b));
    CHECK(b->basis_labels == a->basis_labels);
  }
}

TEST_CASE("quiver JSON") {
  Json q = Json::parse(R"({"vertices": 2,
    "arrows": [{"name": "a1", "from": 0, "to": 1}, {"name": "b1", "from": 1, "to": 0}],
    "relations": [[{"path": ["b1", "a1"], "coeff": "1"}]]})");
  auto a = algebra_from_json(q, Field::prime(3));
  CHECK(same_algebra(*a, *from_quiver(testing_util::a2_quiver(), Field::prime(3))));
  q["field"] = {{"kind", "rational"}};
  CHECK(algebra_from_json(q)->field() == Field::rationals());
  q["arrows"][0]["to"] = 5;
  CHECK_THROWS_AS(algebra_from_json(q), ValidationError);
}

TEST_CASE("module and poset JSON round trip") {
  auto a = build_Am(2, Field::prime(3));
  auto t = direct_sum({projective(a, 1), simple(a, 1)});
  Json j = module_to_json(*t, algebra_to_json(*a));
  auto back = module_from_json(Json::parse(j.dump()), ".", a);
  CHECK(back->algebra() == a);
  CHECK(back->actions() == t->actions());
  auto p = am_poset(a);
  auto q = poset_from_json(poset_to_json(p));
  CHECK(q.labels == p.labels);
  CHECK(q.less == p.less);
  CHECK(q.simple_of == p.simple_of);
}

TEST_CASE("invalid inputs are rejected") {
  CHECK_THROWS_AS(field_from_json(Json::parse(R"({"kind": "prime", "p": 4})")), ValidationError);
  // (b1 b1) b1 = b1 but b1 (b1 b1) = 0
  Json nonassoc = Json::parse(R"({"field": {"kind": "prime", "p": 3}, "dim": 3,
    "mult": [[0,0,0,"1"],[0,1,1,"1"],[0,2,2,"1"],[1,0,1,"1"],[2,0,2,"1"],[1,1,2,"1"],[2,1,1,"1"]],
    "one": ["1","0","0"]})");
  CHECK_THROWS_AS(algebra_from_json(nonassoc), ValidationError);
  auto a = build_Am(2, Field::prime(3));
  Json m{{"algebra", algebra_to_json(*a)}, {"dim", 1}, {"action", Json::array()}};
  CHECK_THROWS_AS(module_from_json(m, "."), ValidationError);
  // an action that is not a representation
  Json bad = module_to_json(*simple(a, 0), algebra_to_json(*a));
  bad["action"][0] = Json::array({Json::array({"0"})});
  CHECK_THROWS_AS(module_from_json(bad, "."), ValidationError);
  CHECK_THROWS_AS(scalar_from_json(Field::prime(3), Json("1/x")), ValidationError);
  CHECK(scalar_from_json(Field::rationals(), Json("-1/3")) == Scalar(Field::rationals(), mpq_class(-1, 3)));
  CHECK_THROWS_AS(poset_from_json(Json::parse(R"({"labels": ["a"], "less_than": [[0, 3]], "simple_of": [0]})")),
                  ValidationError);

  auto path = std::filesystem::temp_directory_path() / "relqh_broken.json";
  std::ofstream(path) << "{\"dim\": ";
  CHECK_THROWS_AS(read_json_file(path), ValidationError);
  std::filesystem::remove(path);
}

TEST_CASE("report JSON") {
  CHECK(to_json(DimValue::exact(2)) == Json::parse(R"({"kind": "Exact", "n": 2})"));
  CHECK(to_json(DimValue::infinite()) == Json::parse(R"({"kind": "Infinite"})"));
  CHECK(to_json(DimValue::at_least(5))["kind"] == "AtLeast");
  auto a = build_Am(2, Field::prime(3));
  auto r = relative_codomdim(projective(a, 1), dual(regular_module(opposite(a))));
  Json j = to_json(r);
  CHECK(j["value"]["n"] == 2);
  CHECK(j["method"] == "mueller");
  CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}
