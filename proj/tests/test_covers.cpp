#include "common.hpp"
#include "doctest.h"
#include "relqh/covers.hpp"
#include "relqh/gallery.hpp"

using namespace relqh;

namespace {

QHStructure am(std::size_t m, const Field& f = Field::prime(3)) {
  auto a = build_Am(m, f);
  return qh_structure(a, am_poset(a));
}

CoverOptions quick() {
  CoverOptions o;
  o.cap = 8;
  o.random_checks = 4;
  return o;
}

}  // namespace

TEST_CASE("double centralizer property") {
  auto qh = am(2);
  const auto& a = qh.algebra;
  CHECK(double_centralizer_check(regular_module(a)));
  CHECK_FALSE(double_centralizer_check(simple(a, qh.poset.simple_of[0])));
  CHECK(double_centralizer_check(find_projective_injectives(a).module));
  Schur s = build_schur(2, 3, Scalar(Field::prime(3), 1));
  CHECK(double_centralizer_check(s.tensor));
}

TEST_CASE("unit of the adjunction") {
  auto qh = am(2);
  const auto& a = qh.algebra;
  auto reg = regular_module(a);
  for (const auto& m : qh.standard) CHECK(unit_of_adjunction(reg, m).iso);
  auto pi = find_projective_injectives(a).module;
  CHECK(unit_of_adjunction(pi, reg).iso);
  auto s = simple(a, qh.poset.simple_of[0]);
  auto u = unit_of_adjunction(pi, s);
  CHECK_FALSE(u.injective);
  CHECK(u.target_dim == 0);
}

TEST_CASE("the regular module is an infinitely faithful cover") {
  for (std::size_t m : {2, 3}) {
    auto qh = am(m);
    auto r = hn_dimension(qh, regular_module(qh.algebra), quick());
    CHECK(r.is_cover);
    CHECK(r.hn.is_infinite());
    CHECK(r.random_ok);
  }
}

TEST_CASE("faithfulness of the projective-injective cover of A_m") {
  for (std::size_t m : {2, 3, 4}) {
    auto qh = am(m);
    auto pi = find_projective_injectives(qh.algebra).module;
    auto r = hn_dimension(qh, pi, quick());
    DimValue d = relative_domdim(pi, characteristic_tilting(qh).module).value;
    REQUIRE(d.kind == DimValue::Kind::Exact);
    INFO(r.hn.str(), " vs ", d.str());
    CHECK(r.is_cover);
    CHECK(r.hn == DimValue::exact(d.n - 2));
    CHECK(r.random_ok);
  }
  auto r3 = hn_dimension(am(3), find_projective_injectives(am(3).algebra).module, quick());
  CHECK(r3.hn == DimValue::exact(0));
}

TEST_CASE("non-covers are reported") {
  auto qh = am(3);
  auto r = hn_dimension(qh, qh.proj[0], quick());
  CHECK_FALSE(r.is_cover);
  CHECK(r.str() == "NotCover");
  CHECK_THROWS_AS(hn_dimension(qh, qh.delta(2), quick()), UsageError);
}

TEST_CASE("random Delta-filtered modules lie in F(Delta)") {
  auto qh = am(3);
  for (std::uint64_t s = 0; s < 6; ++s) CHECK(in_F_delta(random_delta_filtered(qh, s), qh));
}

TEST_CASE("Ringel dual covers from partial tilting modules") {
  for (std::size_t m : {2, 3}) {
    auto qh = am(m);
    auto t = characteristic_tilting(qh);
    auto rd = ringel_dual(qh, t);
    REQUIRE(rd.report.pass);
    const std::size_t n = t.summands.size();
    for (std::size_t mask = 1; mask < (1u << n); ++mask) {
      std::vector<ModulePtr> parts;
      for (std::size_t i = 0; i < n; ++i)
        if (mask & (1u << i)) parts.push_back(t.summands[i]);
      auto v = verify_ringel_cover_theorem(qh, t, rd, direct_sum(parts), quick());
      CHECK_MESSAGE(v.pass, v.detail);
    }
    CHECK_THROWS_AS(verify_ringel_cover_theorem(qh, t, rd, qh.delta(0), quick()), UsageError);
  }
}

TEST_CASE("truncation keeps the cover and its faithfulness") {
  auto qh = am(3);
  auto p = direct_sum({qh.proj[1], qh.proj[2]});
  auto chain = truncation_chain_check(qh, p, quick());
  CHECK(chain.size() == 2);
  for (const auto& v : chain) CHECK_MESSAGE(v.pass, v.detail);
  CHECK(chain[0].before.is_cover);
  auto pi = find_projective_injectives(qh.algebra).module;
  for (const auto& v : truncation_chain_check(qh, pi, quick())) CHECK_MESSAGE(v.pass, v.detail);
}

TEST_CASE("corner algebra transfer on A_3") {
  auto qh = am(3);
  auto t = characteristic_tilting(qh);
  const auto& hint = qh.algebra->idempotent_hint();
  Matrix e = hint[0] + hint[1];
  auto pi = find_projective_injectives(qh.algebra).module;
  auto r = eae_transfer_check(qh, t, pi, e);
  CHECK(r.corner_dim == build_Am(2, Field::prime(3))->dim());
  CHECK(r.tilting_bound);
  CHECK(r.low_values);
  CHECK(r.pass);
}

TEST_CASE("partial tilting modules with infinite dominant dimension are tilting") {
  for (std::size_t m : {2, 3}) {
    auto qh = am(m);
    auto t = characteristic_tilting(qh);
    const std::size_t n = t.summands.size();
    for (std::size_t mask = 1; mask < (1u << n); ++mask) {
      std::vector<ModulePtr> parts;
      for (std::size_t i = 0; i < n; ++i)
        if (mask & (1u << i)) parts.push_back(t.summands[i]);
      auto q = direct_sum(parts);
      bool full = mask + 1 == (1u << n);
      CHECK(relative_domdim(q, regular_module(qh.algebra)).value.is_infinite() == full);
    }
  }
}

TEST_CASE("Schur functor on S(2,3) and the classical Schur functor of S(3,3)") {
  Schur s = build_schur(2, 3, Scalar(Field::prime(3), 1));
  auto qh = qh_structure(s.algebra, schur_poset(s));
  // Delta((3)) contains L(2,1) = T(2,1) in characteristic 3, so F Delta((3)) picks up a second map
  CHECK(schur_functor_image(s.tensor, qh.delta(0))->dim() == testing_util::brute_hom_dim(s.tensor, qh.delta(0)));
  CHECK(schur_functor_image(s.tensor, qh.delta(0))->dim() == 2);
  Schur s0 = build_schur(2, 3, Scalar(Field::rationals(), 1));
  auto qh0 = qh_structure(s0.algebra, schur_poset(s0));
  CHECK(schur_functor_image(s0.tensor, qh0.delta(0))->dim() == 1);
  std::size_t sum = 0;
  for (const auto& d : qh.standard) sum += schur_functor_image(s.tensor, d)->dim();
  CHECK(schur_functor_image(s.tensor, direct_sum(qh.standard))->dim() == sum);

  Schur big = build_schur(3, 3, Scalar(Field::prime(3), 1));
  auto bqh = qh_structure(big.algebra, schur_poset(big));
  auto r = hn_dimension(bqh, big.tensor, quick());
  CHECK(r.is_cover);
  CHECK(r.b_dim == 6);
  CHECK(r.hn == DimValue::exact(0));
}
