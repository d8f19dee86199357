#include <algorithm>
#include <array>

#include "doctest.h"
#include "relqh/algebra.hpp"

using namespace relqh;

namespace {

QuiverPresentation a2_quiver() {
  QuiverPresentation q;
  q.vertices = 2;
  q.arrows = {{"a1", 0, 1}, {"b1", 1, 0}};
  q.relations = {{{{"b1", "a1"}, "1"}}};
  return q;
}

QuiverPresentation a3_quiver() {
  QuiverPresentation q;
  q.vertices = 3;
  q.arrows = {{"a1", 0, 1}, {"a2", 1, 2}, {"b1", 1, 0}, {"b2", 2, 1}};
  q.relations = {{{{"a2", "a1"}, "1"}},
                 {{{"b1", "b2"}, "1"}},
                 {{{"b1", "a1"}, "1"}},
                 {{{"b2", "a2"}, "1"}, {{"a1", "b1"}, "-1"}}};
  return q;
}

AlgebraPtr matrix_algebra(const Field& f, std::size_t k) {
  std::vector<std::tuple<std::size_t, std::size_t, std::size_t, Scalar>> mult;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t l = 0; l < k; ++l)
        mult.emplace_back(i * k + j, j * k + l, i * k + l, Scalar(f, 1));
  Matrix one(f, k * k, 1);
  for (std::size_t i = 0; i < k; ++i) one.set_int(i * k + i, 0, 1);
  return Algebra::from_structure_constants(f, k * k, mult, one);
}

// Group algebra of S3 with permutations as tuples.
AlgebraPtr group_algebra_s3(const Field& f) {
  std::vector<std::array<int, 3>> perms;
  std::array<int, 3> p{0, 1, 2};
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  std::vector<std::tuple<std::size_t, std::size_t, std::size_t, Scalar>> mult;
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j) {
      std::array<int, 3> c{};
      for (int t = 0; t < 3; ++t) c[t] = perms[i][perms[j][t]];
      std::size_t k = std::find(perms.begin(), perms.end(), c) - perms.begin();
      mult.emplace_back(i, j, k, Scalar(f, 1));
    }
  return Algebra::from_structure_constants(f, 6, mult, Matrix::unit_vector(f, 6, 0));
}

// Largest nilpotent two-sided ideal by brute force: the kernel of A acting on all its simple
// composition factors is found here as the set of x with x*y nilpotent for every y.
std::size_t brute_radical_dim(const Algebra& a) {
  // Over GF(p) with small dim: x in J iff L_{x b} is nilpotent for every basis b.
  const Field& f = a.field();
  std::vector<Matrix> gens;
  for (std::size_t b = 0; b < a.dim(); ++b) gens.push_back(a.basis_element(b));
  // Solve: rad = {x : tr(L_{x y}^k) = 0 ...} is not brute force; enumerate when feasible.
  std::size_t total = 1;
  for (std::size_t i = 0; i < a.dim(); ++i) total *= f.p();
  std::vector<Matrix> members;
  for (std::size_t code = 0; code < total; ++code) {
    Matrix x(f, a.dim(), 1);
    std::size_t c = code;
    for (std::size_t i = 0; i < a.dim(); ++i) {
      x.set_int(i, 0, static_cast<long long>(c % f.p()));
      c /= f.p();
    }
    bool nil = true;
    for (std::size_t b = 0; b < a.dim() && nil; ++b) {
      Matrix l = a.left_matrix(a.mul(x, gens[b]));
      Matrix pw = l;
      for (std::size_t k = 0; k < a.dim(); ++k) pw = pw * l;
      nil = pw.is_zero();
    }
    if (nil) members.push_back(x);
  }
  std::size_t d = 0, cnt = members.size();
  while (cnt > 1) {
    cnt /= f.p();
    ++d;
  }
  return d;
}

}  // namespace

TEST_CASE("structure constants") {
  Field f = Field::prime(3);
  auto k = Algebra::from_structure_constants(f, 1, {{0, 0, 0, Scalar(f, 1)}}, Matrix::unit_vector(f, 1, 0));
  CHECK(k->dim() == 1);
  auto m2 = matrix_algebra(f, 2);
  CHECK(m2->dim() == 4);
  // b0 b0 = b1, b0 b1 = b0: (b0 b0) b1 = 0 but b0 (b0 b1) = b1
  std::vector<std::tuple<std::size_t, std::size_t, std::size_t, Scalar>> bad{
      {0, 0, 1, Scalar(f, 1)}, {0, 1, 0, Scalar(f, 1)}};
  CHECK_THROWS_AS(Algebra::from_structure_constants(f, 2, bad, Matrix::unit_vector(f, 2, 0)), ValidationError);
  std::vector<std::tuple<std::size_t, std::size_t, std::size_t, Scalar>> nonunit{{0, 0, 0, Scalar(f, 1)}};
  CHECK_THROWS_AS(Algebra::from_structure_constants(f, 2, nonunit, Matrix::unit_vector(f, 2, 0)), ValidationError);
}

TEST_CASE("associativity failure names a triple") {
  Field f = Field::prime(5);
  // b0 unit, b1 b1 = b2, b2 b1 = b1, b1 b2 = 0
  std::vector<std::tuple<std::size_t, std::size_t, std::size_t, Scalar>> m;
  for (std::size_t i = 0; i < 3; ++i) {
    m.emplace_back(0, i, i, Scalar(f, 1));
    if (i) m.emplace_back(i, 0, i, Scalar(f, 1));
  }
  m.emplace_back(1, 1, 2, Scalar(f, 1));
  m.emplace_back(2, 1, 1, Scalar(f, 1));
  try {
    Algebra::from_structure_constants(f, 3, m, Matrix::unit_vector(f, 3, 0));
    CHECK(false);
  } catch (const ValidationError& e) {
    CHECK(std::string(e.what()).find("triple") != std::string::npos);
  }
}

TEST_CASE("quiver algebras") {
  Field f = Field::prime(3);
  auto a2 = from_quiver(a2_quiver(), f);
  CHECK(a2->dim() == 5);
  CHECK(a2->basis_labels == std::vector<std::string>{"e1", "e2", "a1", "b1", "a1b1"});
  auto a3 = from_quiver(a3_quiver(), f);
  CHECK(a3->dim() == 9);
  QuiverPresentation loop;
  loop.vertices = 1;
  loop.arrows = {{"x", 0, 0}};
  CHECK_THROWS_AS(from_quiver(loop, f), NotFiniteDimensional);
  QuiverPresentation inh = a2_quiver();
  inh.relations = {{{{"b1", "a1"}, "1"}, {{"b1", "a1", "b1", "a1"}, "1"}}};
  CHECK_THROWS_AS(from_quiver(inh, f), UsageError);
  // arrows compose right to left: a1 b1 is a path from 2 to 2
  Matrix e2 = a2->basis_element(1);
  Matrix a1b1 = a2->basis_element(4);
  CHECK(a2->mul(e2, a1b1) == a1b1);
  CHECK(a2->mul(a1b1, e2) == a1b1);
  CHECK(a2->mul(a2->basis_element(2), a2->basis_element(3)) == a1b1);
  CHECK(a2->mul(a2->basis_element(3), a2->basis_element(2)).is_zero());
  a2->validate();
  a3->validate();
}

TEST_CASE("opposite is an involution") {
  Field f = Field::prime(3);
  auto a2 = from_quiver(a2_quiver(), f);
  auto op = opposite(a2);
  op->validate();
  auto back = opposite(op);
  for (std::size_t i = 0; i < a2->dim(); ++i) CHECK(back->left(i) == a2->left(i));
  // swapping a1 and b1 is an anti-automorphism fixing the vertices
  std::vector<std::size_t> perm{0, 1, 3, 2, 4};
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 5; ++j)
      for (std::size_t k = 0; k < 5; ++k) CHECK(op->coeff(perm[i], perm[j], perm[k]) == a2->coeff(i, j, k));
}

TEST_CASE("radical dimensions") {
  Field f = Field::prime(3);
  CHECK(matrix_algebra(f, 2)->radical().dim() == 0);
  auto a2 = from_quiver(a2_quiver(), f);
  CHECK(a2->radical().dim() == 3);
  auto s3 = group_algebra_s3(f);
  CHECK(s3->radical().dim() == 4);
  CHECK(brute_radical_dim(*s3) == 4);
  CHECK(brute_radical_dim(*a2) == 3);
  auto s3q = group_algebra_s3(Field::rationals());
  CHECK(s3q->radical().dim() == 0);
  auto s3_2 = group_algebra_s3(Field::prime(2));
  CHECK(s3_2->radical().dim() == 1);
  CHECK(brute_radical_dim(*s3_2) == 1);
}

TEST_CASE("radical is nilpotent and the quotient is semisimple") {
  for (std::uint32_t p : {2u, 3u}) {
    Field f = Field::prime(p);
    for (auto a : {group_algebra_s3(f), from_quiver(a3_quiver(), f)}) {
      const ColumnBasis& j = a->radical();
      ColumnBasis pw = j;
      for (std::size_t k = 0; k <= a->dim() && pw.dim() > 0; ++k) pw = ideal_product(*a, pw, j);
      CHECK(pw.dim() == 0);
      auto q = quotient_algebra(a, j);
      CHECK(q.algebra->radical().dim() == 0);
    }
  }
}

TEST_CASE("primitive idempotents") {
  Field f = Field::prime(3);
  auto k = Algebra::from_structure_constants(f, 1, {{0, 0, 0, Scalar(f, 1)}}, Matrix::unit_vector(f, 1, 0));
  CHECK(k->idempotents().primitive.size() == 1);
  for (auto a : {matrix_algebra(f, 2), from_quiver(a2_quiver(), f), from_quiver(a3_quiver(), f),
                 group_algebra_s3(f), group_algebra_s3(Field::prime(2)), group_algebra_s3(Field::rationals())}) {
    const auto& id = a->idempotents();
    Matrix sum = a->zero();
    for (std::size_t i = 0; i < id.primitive.size(); ++i) {
      sum = sum + id.primitive[i];
      for (std::size_t j = 0; j < id.primitive.size(); ++j) {
        Matrix pr = a->mul(id.primitive[i], id.primitive[j]);
        CHECK((i == j ? pr == id.primitive[i] : pr.is_zero()));
      }
      auto c = corner_algebra(a, id.primitive[i]);
      CHECK(c.algebra->dim() - c.algebra->radical().dim() == 1);
    }
    CHECK(sum == a->one());
  }
  CHECK(matrix_algebra(f, 2)->idempotents().primitive.size() == 2);
  CHECK(matrix_algebra(f, 2)->idempotents().num_classes() == 1);
  CHECK(from_quiver(a2_quiver(), f)->idempotents().num_classes() == 2);
  // GF(3)S3 has two simples, both one-dimensional
  CHECK(group_algebra_s3(f)->idempotents().num_classes() == 2);
  // GF(2)S3: trivial and the two-dimensional simple
  const auto& d2 = group_algebra_s3(Field::prime(2))->idempotents();
  CHECK(d2.num_classes() == 2);
  CHECK(d2.primitive.size() == 3);
}

TEST_CASE("non-split quotient is reported") {
  // GF(3)[x]/(x^2+1) = GF(9)
  Field f = Field::prime(3);
  std::vector<std::tuple<std::size_t, std::size_t, std::size_t, Scalar>> m{
      {0, 0, 0, Scalar(f, 1)}, {0, 1, 1, Scalar(f, 1)}, {1, 0, 1, Scalar(f, 1)}, {1, 1, 0, Scalar(f, -1)}};
  auto a = Algebra::from_structure_constants(f, 2, m, Matrix::unit_vector(f, 2, 0));
  CHECK(a->radical().dim() == 0);
  CHECK_THROWS_AS(a->idempotents(), FieldNotSplitting);
}

TEST_CASE("corners and products") {
  Field f = Field::prime(3);
  auto a2 = from_quiver(a2_quiver(), f);
  auto a3 = from_quiver(a3_quiver(), f);
  auto c1 = corner_algebra(a2, a2->basis_element(0));
  CHECK(c1.algebra->dim() == 1);
  CHECK(corner_algebra(a2, a2->one()).algebra.get() == a2.get());
  Matrix e12 = a3->basis_element(0) + a3->basis_element(1);
  auto c2 = corner_algebra(a3, e12);
  CHECK(c2.algebra->dim() == 5);
  CHECK(c2.algebra->radical().dim() == 3);
  CHECK(c2.algebra->idempotents().num_classes() == 2);
  c2.algebra->validate();
  CHECK_THROWS_AS(corner_algebra(a2, a2->basis_element(2)), UsageError);
  auto p = direct_product(a2, a3);
  CHECK(p->dim() == 14);
  p->validate();
  CHECK(p->radical().dim() == 3 + 6);
  CHECK(p->idempotents().num_classes() == 5);
  CHECK_THROWS_AS(direct_product(a2, from_quiver(a2_quiver(), Field::prime(5))), UsageError);
}

TEST_CASE("centralizers") {
  Field f = Field::prime(3);
  auto full = centralizer_algebra(f, 2, {Matrix::identity(f, 2)});
  CHECK(full->dim() == 4);
  // swap on (k^2)^{x2}
  Matrix sw(f, 4, 4);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) sw.set_int(j * 2 + i, i * 2 + j, 1);
  auto s22 = centralizer_algebra(f, 4, {sw});
  CHECK(s22->dim() == 10);
  s22->validate();
  CHECK(s22->radical().dim() == 0);
}
