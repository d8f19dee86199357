#include "doctest.h"
#include "relqh/matrix.hpp"

using namespace relqh;

TEST_CASE("kernel of identity and zero") {
  Field f = Field::prime(3);
  CHECK(mat_kernel(Matrix::identity(f, 3)).cols() == 0);
  Matrix z(f, 2, 3);
  Matrix k = mat_kernel(z);
  CHECK(k.cols() == 3);
  CHECK(rank(k) == 3);
}

TEST_CASE("kernel over GF(3) matches enumeration") {
  Field f = Field::prime(3);
  Matrix m = Matrix::from_rows(f, {{1, 1}, {0, 0}});
  // brute force: all 9 vectors
  std::vector<std::pair<int, int>> annihilated;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      if ((a + b) % 3 == 0) annihilated.push_back({a, b});
  CHECK(annihilated.size() == 3);
  Matrix k = mat_kernel(m);
  REQUIRE(k.cols() == 1);
  CHECK(k.at(0, 0).mod_value() == 1);
  CHECK(k.at(1, 0).mod_value() == 2);
  CHECK((m * k).is_zero());
}

TEST_CASE("solve") {
  Field f = Field::prime(3);
  Matrix a = Matrix::from_rows(f, {{2}});
  Matrix b = Matrix::from_rows(f, {{1}});
  auto x = mat_solve(a, b);
  REQUIRE(x);
  CHECK(x->at(0, 0).mod_value() == 2);
  Matrix bb = Matrix::from_rows(f, {{1, 2}, {0, 1}});
  auto y = mat_solve(Matrix::identity(f, 2), bb);
  REQUIRE(y);
  CHECK(*y == bb);
  CHECK_FALSE(mat_solve(Matrix(f, 2, 2), bb));
  CHECK_THROWS_AS(mat_solve(Matrix(f, 3, 2), bb), UsageError);
}

TEST_CASE("solve is exact on random systems") {
  for (Field f : {Field::prime(5), Field::rationals()}) {
    std::uint64_t s = 12345;
    auto next = [&s] {
      s = s * 6364136223846793005ULL + 1442695040888963407ULL;
      return static_cast<long long>((s >> 33) % 7) - 3;
    };
    for (int trial = 0; trial < 20; ++trial) {
      Matrix a(f, 4, 5), x0(f, 5, 2);
      for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 5; ++j) a.set_int(i, j, next());
      for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = 0; j < 2; ++j) x0.set_int(i, j, next());
      Matrix b = a * x0;
      auto x = mat_solve(a, b);
      REQUIRE(x);
      CHECK(a * *x == b);
      Matrix k = mat_kernel(a);
      CHECK((a * k).is_zero());
      CHECK(rank(a) + k.cols() == 5);
      CHECK(mat_kernel(a) == k);
    }
  }
}

TEST_CASE("rational arithmetic stays exact") {
  Field q = Field::rationals();
  Scalar a = Scalar::parse(q, "-1/3");
  Scalar b = Scalar::parse(q, "2");
  CHECK((a * b).str() == "-2/3");
  CHECK((a + a + a).str() == "-1");
  Matrix m = Matrix::from_rows(q, {{2, 1}, {1, 1}});
  Matrix inv = mat_inverse(m);
  CHECK((m * inv).is_identity());
  CHECK(determinant(m).str() == "1");
  CHECK_THROWS_AS(Scalar::parse(q, "1.5"), ValidationError);
}

TEST_CASE("idempotent lifting") {
  Field q = Field::rationals();
  Matrix e = Matrix::from_rows(q, {{1, 0}, {0, 0}});
  CHECK(lift_idempotent(e, 2) == e);
  CHECK(lift_idempotent(Matrix(q, 2, 2), 2).is_zero());
  Matrix e0 = Matrix::from_rows(q, {{1, 1}, {0, 0}});
  Matrix l = lift_idempotent(e0, 2);
  CHECK(l * l == l);
  CHECK(l.at(0, 0).is_one());
  CHECK(l.at(1, 0).is_zero());
  CHECK(l.at(1, 1).is_zero());
  // defect that is not nilpotent
  Matrix bad = Matrix::from_rows(q, {{2, 0}, {0, 0}});
  CHECK_THROWS_AS(lift_idempotent(bad, 2), InternalError);
}

TEST_CASE("column space and quotient coordinates") {
  Field f = Field::prime(7);
  Matrix m = Matrix::from_rows(f, {{1, 2, 3}, {2, 4, 6}, {0, 1, 1}});
  ColumnBasis cb = column_space(m);
  CHECK(cb.dim() == 2);
  CHECK(cb.basis.select_rows(cb.pivot_rows).is_identity());
  for (std::size_t j = 0; j < 3; ++j) {
    CHECK(cb.contains(m.col(j)));
    CHECK(cb.basis * cb.coords(m.col(j)) == m.col(j));
  }
  QuotientSpace qs = quotient_space(cb, 3);
  CHECK(qs.dim() == 1);
  for (std::size_t j = 0; j < 3; ++j) CHECK(qs.project(m.col(j)).is_zero());
  Matrix v = Matrix::unit_vector(f, 3, qs.free_rows[0]);
  CHECK(qs.project(v).at(0, 0).is_one());
}

TEST_CASE("fast prime kernels agree with generic path") {
  // p > 2^16 exercises the slow path
  for (std::uint32_t p : {3u, 65537u, 2147483647u}) {
    Field f = Field::prime(p);
    Matrix a(f, 6, 6);
    std::uint64_t s = 99;
    for (std::size_t i = 0; i < 6; ++i)
      for (std::size_t j = 0; j < 6; ++j) {
        s = s * 2862933555777941757ULL + 3037000493ULL;
        a.set_int(i, j, static_cast<long long>(s >> 40));
      }
    Matrix b = a * a;
    Matrix slow(f, 6, 6);
    for (std::size_t i = 0; i < 6; ++i)
      for (std::size_t j = 0; j < 6; ++j) {
        Scalar acc(f, 0);
        for (std::size_t t = 0; t < 6; ++t) acc = acc + a.at(i, t) * a.at(t, j);
        slow.set(i, j, acc);
      }
    CHECK(b == slow);
    if (rank(a) == 6) CHECK((a * mat_inverse(a)).is_identity());
  }
}
