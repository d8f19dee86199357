#pragma once

#include "relqh/module.hpp"

namespace testing_util {

inline relqh::QuiverPresentation a2_quiver() {
  relqh::QuiverPresentation q;
  q.vertices = 2;
  q.arrows = {{"a1", 0, 1}, {"b1", 1, 0}};
  q.relations = {{{{"b1", "a1"}, "1"}}};
  return q;
}

inline relqh::QuiverPresentation a3_quiver() {
  relqh::QuiverPresentation q;
  q.vertices = 3;
  q.arrows = {{"a1", 0, 1}, {"a2", 1, 2}, {"b1", 1, 0}, {"b2", 2, 1}};
  q.relations = {{{{"a2", "a1"}, "1"}},
                 {{{"b1", "b2"}, "1"}},
                 {{{"b1", "a1"}, "1"}},
                 {{{"b2", "a2"}, "1"}, {{"a1", "b1"}, "-1"}}};
  return q;
}

// Hom_A(M, N) by solving X act_M(i) = act_N(i) X for every basis element directly.
inline std::size_t brute_hom_dim(const relqh::ModulePtr& m, const relqh::ModulePtr& n) {
  using namespace relqh;
  const Field& f = m->field();
  const std::size_t r = n->dim(), c = m->dim();
  if (r * c == 0) return 0;
  std::vector<Matrix> eqs;
  for (std::size_t i = 0; i < m->algebra()->dim(); ++i) {
    Matrix sys(f, r * c, r * c);
    // (X A)_{ab} - (B X)_{ab}, X flattened row-major
    const Matrix& am = m->act(i);
    const Matrix& bn = n->act(i);
    for (std::size_t a = 0; a < r; ++a)
      for (std::size_t b = 0; b < c; ++b) {
        std::size_t row = a * c + b;
        for (std::size_t k = 0; k < c; ++k)
          if (!am.is_zero_at(k, b)) sys.set(row, a * c + k, sys.at(row, a * c + k) + am.at(k, b));
        for (std::size_t k = 0; k < r; ++k)
          if (!bn.is_zero_at(a, k)) sys.set(row, k * c + b, sys.at(row, k * c + b) - bn.at(a, k));
      }
    eqs.push_back(sys);
  }
  return mat_kernel(Matrix::vstack(f, r * c, eqs)).cols();
}

}  // namespace testing_util
