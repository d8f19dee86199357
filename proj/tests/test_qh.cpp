#include "common.hpp"
#include "doctest.h"
#include "relqh/gallery.hpp"

using namespace relqh;
using testing_util::brute_hom_dim;

namespace {

QHStructure am(std::size_t m, const Field& f = Field::prime(3)) {
  auto a = build_Am(m, f);
  return qh_structure(a, am_poset(a));
}

std::vector<std::size_t> dims(const std::vector<ModulePtr>& v) {
  std::vector<std::size_t> out;
  for (const auto& m : v) out.push_back(m->dim());
  return out;
}

}  // namespace

TEST_CASE("poset closure and validation") {
  auto p = WeightPoset::from_pairs({"a", "b", "c"}, {{0, 1}, {1, 2}}, {0, 1, 2});
  CHECK(p.lt(0, 2));
  CHECK_FALSE(p.lt(2, 0));
  CHECK(p.decreasing_order() == std::vector<std::size_t>{2, 1, 0});
  CHECK_NOTHROW(p.validate(3));
  CHECK_THROWS_AS(p.validate(2), ValidationError);
  CHECK_THROWS_AS(WeightPoset::from_pairs({"a", "b"}, {{0, 1}, {1, 0}}, {0, 1}), ValidationError);
  auto bad = WeightPoset::chain({"a", "b"}, {0, 0});
  CHECK_THROWS_AS(bad.validate(2), ValidationError);
  CHECK(p.reversed().lt(2, 0));
}

TEST_CASE("standard and costandard modules of A_2") {
  auto qh = am(2);
  CHECK(dims(qh.standard) == std::vector<std::size_t>{2, 1});
  CHECK(is_isomorphic(qh.delta(0), qh.proj[0]));
  CHECK(is_isomorphic(qh.delta(1), simple(qh.algebra, qh.poset.simple_of[1])));
  CHECK(is_isomorphic(qh.nabla(0), qh.inj[0]));
  CHECK(is_isomorphic(qh.nabla(1), simple(qh.algebra, qh.poset.simple_of[1])));
  auto r = verify_split_qh(qh);
  CHECK(r.pass);
  CHECK(r.failed_axiom == 0);
}

TEST_CASE("reversed order on A_2 is not quasi-hereditary") {
  auto a = build_Am(2, Field::prime(3));
  auto p = am_poset(a).reversed();
  auto qh = qh_structure(a, p);
  CHECK(qh.delta(1)->dim() == 3);
  CHECK(brute_hom_dim(qh.delta(1), qh.delta(1)) == 2);
  auto r = verify_split_qh(qh);
  CHECK_FALSE(r.pass);
  CHECK(r.failed_axiom == 2);
}

TEST_CASE("A_3 standards and orthogonality") {
  for (Field f : {Field::prime(3), Field::rationals()}) {
    auto qh = am(3, f);
    CHECK(dims(qh.standard) == std::vector<std::size_t>{2, 2, 1});
    CHECK(dimension_vector(qh.delta(1))[qh.poset.simple_of[1]] == 1);
    CHECK(dimension_vector(qh.delta(1))[qh.poset.simple_of[2]] == 1);
    auto r = verify_split_qh(qh);
    CHECK(r.pass);
    for (std::size_t l = 0; l < 3; ++l)
      for (std::size_t m = 0; m < 3; ++m)
        CHECK(brute_hom_dim(qh.delta(m), qh.nabla(l)) == (l == m ? 1u : 0u));
  }
}

TEST_CASE("Delta-filtration tests") {
  auto qh = am(2);
  const auto& a = qh.algebra;
  auto p2 = qh.proj[1];
  CHECK(in_F_delta(p2, qh));
  CHECK(delta_multiplicities(p2, qh) == std::vector<std::size_t>{1, 1});
  CHECK(delta_filtration(p2, qh) == std::vector<std::size_t>{1, 1});
  auto s1 = simple(a, qh.poset.simple_of[0]);
  CHECK_FALSE(in_F_delta(s1, qh));
  CHECK(ext_dim(s1, qh.nabla(1), 1) != 0);
  CHECK_FALSE(delta_filtration(s1, qh).has_value());
  for (std::size_t l = 0; l < 2; ++l) {
    std::vector<std::size_t> ind(2, 0);
    ind[l] = 1;
    CHECK(delta_multiplicities(qh.delta(l), qh) == ind);
    CHECK(in_F_nabla(qh.nabla(l), qh));
  }
  auto qh3 = am(3);
  for (std::size_t t = 0; t < 3; ++t) {
    auto p = qh3.proj[t];
    CHECK(in_F_delta(p, qh3));
    CHECK(delta_filtration(p, qh3) == delta_multiplicities(p, qh3));
    CHECK(in_F_nabla(qh3.inj[t], qh3));
  }
}

TEST_CASE("universal extension of P(1) by S(2) over A_2") {
  auto qh = am(2);
  auto ue = universal_extension(qh.delta(1), qh.delta(0));
  CHECK(ue.copies == 0);
  CHECK(ue.module == qh.delta(1));
  auto x = universal_extension(qh.delta(0), qh.delta(1));
  CHECK(x.copies == 1);
  CHECK(x.module->dim() == 3);
  CHECK(is_isomorphic(x.module, qh.proj[1]));
  CHECK(ModuleMap{qh.delta(0), x.module, x.embedding}.is_homomorphism());
  CHECK(ModuleMap{qh.delta(0), x.module, x.embedding}.injective());
}

TEST_CASE("characteristic tilting modules of A_m") {
  auto qh = am(2);
  auto t = characteristic_tilting(qh);
  CHECK(is_isomorphic(t.summands[0], qh.proj[1]));
  CHECK(is_isomorphic(t.summands[1], simple(qh.algebra, qh.poset.simple_of[1])));
  auto qh3 = am(3);
  auto t3 = characteristic_tilting(qh3);
  CHECK(is_isomorphic(t3.summands[0], qh3.proj[1]));
  CHECK(is_isomorphic(t3.summands[1], qh3.proj[2]));
  CHECK(is_isomorphic(t3.summands[2], simple(qh3.algebra, qh3.poset.simple_of[2])));
  for (std::size_t l = 0; l < 3; ++l) {
    CHECK(is_indecomposable(t3.summands[l]));
    CHECK(t3.delta_mult[l][l] == 1);
    CHECK(t3.nabla_mult[l][l] == 1);
    for (std::size_t m = 0; m < 3; ++m)
      if (t3.delta_mult[l][m]) CHECK(qh3.poset.le(m, l));
  }
}

TEST_CASE("tilting from the opposite side agrees") {
  for (std::size_t m : {2, 3}) {
    auto qh = am(m);
    auto t = characteristic_tilting(qh);
    auto top = characteristic_tilting(opposite_structure(qh));
    for (std::size_t l = 0; l < m; ++l) CHECK(is_isomorphic(t.summands[l], dual(top.summands[l])));
  }
}

TEST_CASE("Ringel dual of A_2 and double dual of A_3") {
  auto qh = am(2);
  auto rd = ringel_dual(qh);
  CHECK(rd.algebra->dim() == 5);
  CHECK(rd.report.pass);
  CHECK(rd.qh.poset.lt(0, 1));
  auto t = characteristic_tilting(qh);
  for (std::size_t l = 0; l < 2; ++l) CHECK(rd.hom_standards[l]->dim() == hom_dim(t.module, qh.nabla(l)));

  auto qh3 = am(3);
  auto r1 = ringel_dual(qh3);
  REQUIRE(r1.report.pass);
  auto r2 = ringel_dual(r1.qh);
  REQUIRE(r2.report.pass);
  CHECK(r2.algebra->dim() == qh3.algebra->dim());
  CHECK(same_morita_invariants(morita_invariants(r2.qh), morita_invariants(qh3)));
}

TEST_CASE("Ringel dual of a semisimple algebra") {
  auto h = build_hecke(2, Scalar(Field::prime(3), 1));
  const auto& a = h.algebra;
  REQUIRE(a->radical().dim() == 0);
  auto p = WeightPoset::from_pairs({"x", "y"}, {}, {0, 1});
  auto qh = qh_structure(a, p);
  CHECK(verify_split_qh(qh).pass);
  auto rd = ringel_dual(qh);
  CHECK(rd.report.pass);
  CHECK(rd.algebra->dim() == a->dim());
  for (std::size_t l = 0; l < 2; ++l) CHECK(rd.qh.delta(l)->dim() == 1);
}

TEST_CASE("split heredity quotients of A_m") {
  auto qh = am(2);
  auto hq = split_heredity_quotient(qh, 0);
  const auto& a = qh.algebra;
  CHECK(hq.ideal.dim() == two_sided_ideal(*a, {a->idempotent_hint()[0]}).dim());
  CHECK(hq.ideal.dim() == 4);
  CHECK(hq.quotient.algebra->dim() == 1);
  CHECK(verify_split_qh(hq.qh).pass);
  CHECK_THROWS_AS(split_heredity_quotient(qh, 1), UsageError);

  QHStructure cur = am(4);
  std::size_t steps = 0;
  while (cur.size() > 0) {
    std::size_t top = cur.poset.decreasing_order().front();
    auto next = split_heredity_quotient(cur, top);
    CHECK(next.quotient.algebra->dim() == cur.algebra->dim() - next.ideal.dim());
    if (next.qh.size()) CHECK(verify_split_qh(next.qh).pass);
    cur = next.qh;
    ++steps;
  }
  CHECK(steps == 4);
  CHECK(cur.algebra->dim() == 0);
}

TEST_CASE("descend and inflate are inverse on A/J-modules") {
  auto qh = am(3);
  auto hq = split_heredity_quotient(qh, 0);
  auto d = descend(qh.delta(1), hq.quotient);
  CHECK_NOTHROW(d->validate());
  auto back = inflate(d, qh.algebra, hq.quotient);
  CHECK(back->actions() == qh.delta(1)->actions());
  CHECK_THROWS_AS(descend(qh.proj[0], hq.quotient), UsageError);
}

TEST_CASE("Schur algebras with the dominance order") {
  struct Case {
    std::size_t n, d;
    std::uint32_t p;
  };
  for (Case c : {Case{2, 2, 2}, Case{2, 2, 3}, Case{2, 3, 3}, Case{3, 3, 2}}) {
    Schur s = build_schur(c.n, c.d, Scalar(Field::prime(c.p), 1));
    auto poset = schur_poset(s);
    auto qh = qh_structure(s.algebra, poset);
    auto r = verify_split_qh(qh);
    CHECK_MESSAGE(r.pass, r.detail);
    for (std::size_t l = 0; l < poset.size(); ++l) {
      const Matrix& xi = s.weight_idempotents[s.weight_index(s.partitions[l])];
      CHECK(rank(qh.delta(l)->act_elem(xi)) == 1);
    }
  }
}

TEST_CASE("tilting for S(2,3) over GF(3)") {
  Schur s = build_schur(2, 3, Scalar(Field::prime(3), 1));
  auto qh = qh_structure(s.algebra, schur_poset(s));
  auto t = characteristic_tilting(qh);
  REQUIRE(t.summands.size() == 2);
  for (const auto& x : t.summands) CHECK(is_indecomposable(x));
  auto rd = ringel_dual(qh, t);
  CHECK(rd.report.pass);
}
