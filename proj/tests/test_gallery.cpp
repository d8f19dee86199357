#include "common.hpp"
#include "doctest.h"
#include "relqh/gallery.hpp"
#include "relqh/qh.hpp"
#include "relqh/reldim.hpp"

using namespace relqh;

namespace {

int sign(const std::vector<int>& p) {
  int s = 1;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) s = -s;
  return s;
}

std::size_t binom(std::size_t n, std::size_t k) {
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

TEST_CASE("A_m dimensions and small cases") {
  CHECK(build_Am(1, Field::prime(3))->dim() == 1);
  CHECK(build_Am(2, Field::prime(3))->dim() == 5);
  CHECK(build_Am(3, Field::prime(3))->dim() == 9);
}

TEST_CASE("Hecke algebra at u = 1 is the group algebra") {
  for (Field f : {Field::rationals(), Field::prime(3)}) {
    Hecke h = build_hecke(3, Scalar(f, 1));
    const auto& a = h.algebra;
    REQUIRE(a->dim() == 6);
    for (std::size_t i = 0; i < 6; ++i)
      for (std::size_t j = 0; j < 6; ++j) {
        const auto& p = h.perms[i];
        const auto& q = h.perms[j];
        std::vector<int> pq(3), qp(3);
        for (std::size_t k = 0; k < 3; ++k) {
          pq[k] = p[static_cast<std::size_t>(q[k])];
          qp[k] = q[static_cast<std::size_t>(p[k])];
        }
        Matrix got = a->mul(a->basis_element(i), a->basis_element(j));
        bool one = got == a->basis_element(h.index_of(pq)) || got == a->basis_element(h.index_of(qp));
        CHECK(one);
      }
  }
  CHECK(build_hecke(2, Scalar(Field::prime(3), 1)).algebra->radical().dim() == 0);
  CHECK(build_hecke(3, Scalar(Field::prime(3), 1)).algebra->radical().dim() == 4);
  CHECK(build_hecke(1, Scalar(Field::prime(3), 1)).algebra->dim() == 1);
  CHECK_THROWS_AS(build_hecke(2, Scalar(Field::prime(3), 0)), UsageError);
}

TEST_CASE("quadratic and braid relations") {
  for (Scalar u : {Scalar(Field::prime(5), 2), Scalar(Field::prime(3), 1), Scalar(Field::rationals(), 3)}) {
    const Field& f = u.field();
    Scalar gap = u - u.inverse();
    Hecke h = build_hecke(3, u);
    const auto& a = h.algebra;
    Matrix one = a->one();
    Matrix s = a->basis_element(h.generators[0]), t = a->basis_element(h.generators[1]);
    CHECK(a->mul(s, s) == s.scaled(gap) + one);
    CHECK(a->mul(a->mul(s, t), s) == a->mul(a->mul(t, s), t));

    TensorSpace v = build_tensor_space(2, 3, u);
    CHECK(v.dim() == 8);
    Matrix id = Matrix::identity(f, v.dim());
    const Matrix& r0 = v.generator_action[0];
    const Matrix& r1 = v.generator_action[1];
    CHECK(r0 * r0 == r0.scaled(gap) + id);
    CHECK(r1 * r1 == r1.scaled(gap) + id);
    CHECK(r0 * r1 * r0 == r1 * r0 * r1);
    CHECK_NOTHROW(tensor_space_module(h, v)->validate());
  }
  TensorSpace sw = build_tensor_space(2, 2, Scalar(Field::prime(3), 1));
  for (std::size_t i = 0; i < sw.dim(); ++i) {
    auto w = sw.words[i];
    std::swap(w[0], w[1]);
    CHECK(sw.generator_action[0].col(i) == Matrix::unit_vector(Field::prime(3), 4, sw.index_of(w)));
  }
}

TEST_CASE("Schur algebra dimensions and weight idempotents") {
  struct Case {
    std::size_t n, d;
    std::size_t dim;
  };
  for (Case c : {Case{2, 2, 10}, Case{2, 3, 20}, Case{3, 3, 165}}) {
    Schur s = build_schur(c.n, c.d, Scalar(Field::prime(3), 1));
    CHECK(s.algebra->dim() == c.dim);
    CHECK(schur_dimension(c.n, c.d) == binom(c.n * c.n + c.d - 1, c.d));
    CHECK(s.labels.size() == c.dim);
    Matrix sum = s.algebra->zero();
    for (std::size_t i = 0; i < s.weights.size(); ++i) {
      const Matrix& x = s.weight_idempotents[i];
      sum = sum + x;
      for (std::size_t j = 0; j < s.weights.size(); ++j)
        CHECK(s.algebra->mul(x, s.weight_idempotents[j]) == (i == j ? x : s.algebra->zero()));
    }
    CHECK(sum == s.algebra->one());
  }
  CHECK(build_schur(2, 2, Scalar(Field::prime(3), 1)).algebra->radical().dim() == 0);
  CHECK_THROWS(build_schur(5, 6, Scalar(Field::prime(3), 1)));
}

TEST_CASE("dominant dimension of Schur algebras") {
  CHECK(classical_domdim(build_schur(2, 2, Scalar(Field::prime(2), 1)).algebra).value == DimValue::exact(2));
  CHECK(classical_domdim(build_schur(3, 3, Scalar(Field::prime(3), 1)).algebra).value == DimValue::exact(4));
}

TEST_CASE("relative dominant dimension of the tilting module against tensor space") {
  struct Case {
    std::size_t n, d;
    std::uint32_t p;
    long bound;
  };
  for (Case c : {Case{2, 3, 3, 2}, Case{2, 3, 2, 1}, Case{2, 4, 3, 2}}) {
    Schur s = build_schur(c.n, c.d, Scalar(Field::prime(c.p), 1));
    auto qh = qh_structure(s.algebra, schur_poset(s));
    auto t = characteristic_tilting(qh);
    CHECK(relative_domdim(s.tensor, t.module).value.lower() >= c.bound);
  }
}

TEST_CASE("corner of S(3,3) is S(2,3)") {
  Schur big = build_schur(3, 3, Scalar(Field::prime(3), 1));
  Schur small = build_schur(2, 3, Scalar(Field::prime(3), 1));
  auto c = schur_corner(big, small);
  CHECK(c.corner.algebra->dim() == 20);
  CHECK(c.invertible);
  CHECK(c.unital);
  CHECK(c.multiplicative);
  CHECK(c.module_iso);
  CHECK_THROWS_AS(truncation_idempotent(small, 1), UsageError);
}

TEST_CASE("Schur-Weyl map") {
  auto sw = schur_weyl_map(2, 2, Scalar(Field::prime(3), 1));
  CHECK(sw.surjective());
  CHECK(sw.injective());

  auto sw3 = schur_weyl_map(2, 3, Scalar(Field::prime(3), 1));
  CHECK(sw3.surjective());
  CHECK_FALSE(sw3.injective());
  const auto& h = sw3.hecke;
  const auto& a = h.algebra;
  const Field& f = a->field();
  Matrix alt(f, a->dim(), 1);
  for (std::size_t i = 0; i < a->dim(); ++i) alt.set(i, 0, Scalar(f, sign(h.perms[i])));
  CHECK(a->mul(alt, alt).is_zero());
  ColumnBasis ker = column_space(f, a->dim(), {sw3.kernel});
  CHECK(ker.contains(alt));
  ColumnBasis k = two_sided_ideal(*a, {alt});
  CHECK(k.dim() == ker.dim());
  CHECK(ideal_product(*a, k, k).dim() < k.dim());
}
