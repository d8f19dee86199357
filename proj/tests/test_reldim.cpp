#include "common.hpp"
#include "doctest.h"
#include "relqh/gallery.hpp"
#include "relqh/reldim.hpp"

using namespace relqh;

namespace {

std::vector<ModulePtr> named(const AlgebraPtr& a) {
  std::vector<ModulePtr> out;
  for (std::size_t t = 0; t < a->idempotents().num_classes(); ++t) {
    out.push_back(projective(a, t));
    out.push_back(injective(a, t));
    out.push_back(simple(a, t));
  }
  out.push_back(regular_module(a));
  out.push_back(dual(regular_module(opposite(a))));
  return out;
}

}  // namespace

TEST_CASE("A_m quiver matches the hand-written A_3") {
  auto a = build_Am(3, Field::prime(3));
  auto b = from_quiver(testing_util::a3_quiver(), Field::prime(3));
  CHECK(a->dim() == 9);
  CHECK(a->basis_labels == b->basis_labels);
  CHECK(build_Am(1, Field::prime(3))->dim() == 1);
  CHECK(build_Am(2, Field::prime(3))->dim() == 5);
}

TEST_CASE("approximations over A_2") {
  auto a = build_Am(2, Field::prime(3));
  auto p2 = projective(a, 1), s2 = simple(a, 1), s1 = simple(a, 0);
  auto r = right_add_approximation(p2, s2);
  CHECK(r.surjective);
  CHECK(r.map.src->dim() == 3);
  CHECK(r.map.is_homomorphism());
  auto z = right_add_approximation(p2, s1);
  CHECK_FALSE(z.surjective);
  CHECK(z.map.src->dim() == 0);
  auto l = left_add_approximation(p2, regular_module(a));
  CHECK(l.injective);
  CHECK(l.map.is_homomorphism());
  CHECK_FALSE(left_add_approximation(p2, s1).injective);
  auto split = right_add_approximation(p2, p2);
  CHECK(split.surjective);
  auto ml = minimal_left_add_approximation(p2, regular_module(a));
  CHECK(ml.injective);
  CHECK(ml.map.tgt->dim() == 6);
}

TEST_CASE("classical dominant dimension of A_m") {
  for (std::size_t m = 2; m <= 4; ++m) {
    auto a = build_Am(m, Field::prime(3));
    auto pi = find_projective_injectives(a);
    CHECK(pi.classes.size() == m - 1);
    CHECK(classical_domdim(a).value == DimValue::exact(2 * (static_cast<long>(m) - 1)));
  }
  CHECK(classical_domdim(build_Am(2, Field::rationals())).value == DimValue::exact(2));
  CHECK(classical_domdim(build_Am(1, Field::prime(3))).value == DimValue::infinite());
}

TEST_CASE("relative values on A_2") {
  auto a = build_Am(2, Field::prime(3));
  auto p2 = projective(a, 1), s2 = simple(a, 1), s1 = simple(a, 0);
  auto t = direct_sum({p2, s2});
  CHECK(relative_codomdim(t, t).value == DimValue::infinite());
  auto da = dual(regular_module(opposite(a)));
  CHECK(relative_codomdim(p2, da).value == DimValue::exact(2));
  CHECK(relative_domdim(p2, regular_module(a)).value == DimValue::exact(2));
  CHECK(relative_domdim(p2, s2).value == DimValue::exact(1));
  CHECK(codomdim_chain(p2, s1).value == DimValue::exact(0));
  auto rep = relative_codomdim(p2, s2);
  CHECK(rep.chi_surjective);
  CHECK_FALSE(rep.chi_injective);
  CHECK(rep.value == DimValue::exact(1));
  auto ch = codomdim_chain(p2, p2);
  CHECK(ch.value == DimValue::infinite());
  CHECK(ch.steps.size() == 1);
}

TEST_CASE("Mueller and chain agree on named modules of A_2 and A_3") {
  for (std::size_t m = 2; m <= 3; ++m) {
    auto a = build_Am(m, Field::prime(3));
    auto mods = named(a);
    for (const auto& q : mods)
      for (const auto& x : mods) {
        DimValue u = relative_codomdim(q, x, 8).value;
        DimValue v = codomdim_chain(q, x, 8).value;
        CHECK_MESSAGE(u == v, u.str() << " vs " << v.str());
        DimValue w = relative_domdim(q, x, 8).value;
        DimValue z = domdim_chain(q, x, 8).value;
        CHECK_MESSAGE(w == z, w.str() << " vs " << z.str());
      }
  }
}

TEST_CASE("reduced cograde") {
  auto a = build_Am(2, Field::prime(3));
  auto s1 = simple(a, 0), s2 = simple(a, 1);
  CHECK(reduced_cograde(dual(s1), s2) == DimValue::exact(1));
  CHECK(reduced_cograde(dual(s2), s2) == DimValue::infinite());
  CHECK(reduced_cograde(dual(projective(a, 0)), projective(a, 1)) == DimValue::infinite());
  auto r = relative_codomdim(projective(a, 1), s2, 20);
  CHECK(r.value == DimValue::exact(1));
}
