#pragma once

#include <array>
#include <string>
#include <vector>

#include "relqh/qh.hpp"

namespace relqh {

// Bound quiver algebra on 1 - 2 - ... - m with arrows a_i : i -> i+1, b_i : i+1 -> i.
QuiverPresentation am_quiver(std::size_t m);
AlgebraPtr build_Am(std::size_t m, const Field& f);
// 1 > 2 > ... > m on the vertex simples.
WeightPoset am_poset(const AlgebraPtr& am);
// Idempotent class of the simple at each quiver vertex.
std::vector<std::size_t> vertex_classes(const AlgebraPtr& a);

// Iwahori-Hecke algebra with basis T_sigma; sigma is stored as the image list of 0..d-1.
struct Hecke {
  AlgebraPtr algebra;
  std::size_t d = 0;
  Scalar u;
  std::vector<std::vector<int>> perms;  // basis order
  std::vector<std::size_t> generators;  // basis index of T_(t,t+1)
  std::size_t index_of(const std::vector<int>& perm) const;
};
Hecke build_hecke(std::size_t d, const Scalar& u);

// V^{(x)d} with the deformed place permutation: matrices R_s with R_s v = v . T_s.
struct TensorSpace {
  std::size_t n = 0, d = 0;
  std::vector<std::vector<int>> words;  // I(n, d) in lexicographic order, entries 0-based
  std::vector<Matrix> generator_action;
  std::size_t dim() const { return words.size(); }
  std::size_t index_of(const std::vector<int>& w) const;
};
TensorSpace build_tensor_space(std::size_t n, std::size_t d, const Scalar& u);
// Right Hecke action as a left module over the opposite algebra.
ModulePtr tensor_space_module(const Hecke& h, const TensorSpace& v);

struct Schur {
  AlgebraPtr algebra;
  TensorSpace space;
  ModulePtr tensor;                                  // V^{(x)d} as a left module
  std::vector<std::pair<std::size_t, std::size_t>> labels;  // (row word, column word) orbit representative
  std::vector<std::vector<int>> weights;             // Lambda(n, d), compositions
  std::vector<std::vector<int>> partitions;          // Lambda+(n, d) in decreasing lexicographic order
  std::vector<Matrix> weight_idempotents;            // xi_lambda, same order as weights
  std::vector<std::size_t> pivots;                   // flattened matrix positions giving coordinates
  // Coordinates of an endomorphism of V^{(x)d} lying in the algebra.
  Matrix element(const Matrix& endo) const;
  std::size_t weight_index(const std::vector<int>& w) const;
};

struct GalleryGuard {
  std::size_t max_tensor_dim = 4096;
  std::size_t max_algebra_dim = 4000;
};
std::size_t schur_dimension(std::size_t n, std::size_t d);
Schur build_schur(std::size_t n, std::size_t d, const Scalar& u, GalleryGuard guard = {});

// f = sum of xi_beta over compositions supported on the first n parts, inside S(d, d).
Matrix truncation_idempotent(const Schur& s, std::size_t n);

// fS(d, d)f -> S(n, d) by restricting endomorphisms to words in the first n letters.
struct SchurCorner {
  CornerAlgebra corner;
  Matrix phi;  // dim S(n, d) x dim fS(d, d)f
  bool invertible = false, multiplicative = false, unital = false;
  ModulePtr transported;  // f V^{(x)d} carried over to S(n, d)
  bool module_iso = false;
};
SchurCorner schur_corner(const Schur& big, const Schur& small);

bool dominates(const std::vector<int>& a, const std::vector<int>& b);
std::vector<std::vector<int>> partitions_of(std::size_t d, std::size_t parts);
std::vector<std::vector<int>> compositions_of(std::size_t d, std::size_t parts);
std::string partition_label(const std::vector<int>& p);

struct SchurWeyl {
  Hecke hecke;
  Schur schur;
  std::vector<Matrix> images;  // psi(T_sigma) as endomorphisms of V^{(x)d}
  std::size_t end_dim = 0;     // dim End_S(V^{(x)d})
  std::size_t image_dim = 0;
  Matrix kernel;               // basis of ker psi in Hecke coordinates
  bool surjective() const { return image_dim == end_dim; }
  bool injective() const { return kernel.cols() == 0; }
};
// Dominance order on Lambda+(n, d); each simple is labeled by its dominance-maximal weight.
WeightPoset schur_poset(const Schur& s);

// Product of several algebras with modules extended by zero from a factor.
struct ProductAlgebra {
  AlgebraPtr algebra;
  std::vector<AlgebraPtr> factors;
  std::vector<std::size_t> offsets;  // first basis index of each factor
};
ProductAlgebra product_of(const std::vector<AlgebraPtr>& factors);
ModulePtr extend_from_factor(const ProductAlgebra& p, std::size_t which, const ModulePtr& m);
// Disjoint union of the factor posets, labels prefixed by the factor index.
WeightPoset product_poset(const ProductAlgebra& p, const std::vector<WeightPoset>& posets);

SchurWeyl schur_weyl_map(std::size_t n, std::size_t d, const Scalar& u);

}  // namespace relqh
