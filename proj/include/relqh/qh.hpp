#pragma once

#include <optional>
#include <string>
#include <vector>

#include "relqh/homology.hpp"

namespace relqh {

// Labels with a strict order; label i corresponds to the simple of idempotent class simple_of[i].
struct WeightPoset {
  std::vector<std::string> labels;
  std::vector<std::vector<bool>> less;  // less[i][j]: i < j
  std::vector<std::size_t> simple_of;

  std::size_t size() const { return labels.size(); }
  bool lt(std::size_t i, std::size_t j) const { return less[i][j]; }
  bool le(std::size_t i, std::size_t j) const { return i == j || less[i][j]; }
  std::size_t label_of_class(std::size_t cls) const;
  WeightPoset reversed() const;
  // Linear extension, maximal labels first.
  std::vector<std::size_t> decreasing_order() const;
  // Throws ValidationError on a non-order or a non-bijective labeling.
  void validate(std::size_t num_classes) const;

  // Transitive closure of the given pairs (i < j).
  static WeightPoset from_pairs(std::vector<std::string> labels,
                                const std::vector<std::pair<std::size_t, std::size_t>>& less_than,
                                std::vector<std::size_t> simple_of);
  // labels[0] > labels[1] > ...
  static WeightPoset chain(std::vector<std::string> labels, std::vector<std::size_t> simple_of);
};

// Class of the opposite algebra carrying the dual of each simple.
std::vector<std::size_t> opposite_classes(const AlgebraPtr& a);
WeightPoset opposite_poset(const AlgebraPtr& a, const WeightPoset& p);

struct QHStructure {
  AlgebraPtr algebra;
  WeightPoset poset;
  std::vector<ModulePtr> proj, standard, costandard, inj;
  std::vector<Matrix> standard_map;   // P(l) -> Delta(l)
  std::vector<ModulePtr> standard_kernel;  // C(l)
  const ModulePtr& delta(std::size_t l) const { return standard[l]; }
  const ModulePtr& nabla(std::size_t l) const { return costandard[l]; }
  std::size_t size() const { return poset.size(); }
};

// Delta(l) = P(l) / trace of the projectives above l.
std::vector<QuotientModule> standard_modules(const AlgebraPtr& a, const WeightPoset& p);
// Duals of the standards of the opposite algebra.
std::vector<ModulePtr> costandard_modules(const AlgebraPtr& a, const WeightPoset& p);
QHStructure qh_structure(const AlgebraPtr& a, const WeightPoset& p);
QHStructure opposite_structure(const QHStructure& qh);

struct QHReport {
  bool pass = true;
  int failed_axiom = 0;  // 1..5, 6 for a Ringel dual standard mismatch, 0 when passing
  std::string detail;
  std::vector<std::size_t> standard_dims, costandard_dims;
  std::vector<std::vector<std::size_t>> hom_delta_delta, hom_delta_nabla, ext1_delta_nabla;
};
QHReport verify_split_qh(const QHStructure& qh);
QHReport verify_split_qh(const AlgebraPtr& a, const WeightPoset& p);

// Peels off the trace of a maximal supported label at each step; the multiplicities of a Delta-filtration.
std::optional<std::vector<std::size_t>> delta_filtration(const ModulePtr& m, const QHStructure& qh);
bool in_F_delta(const ModulePtr& m, const QHStructure& qh);
bool in_F_nabla(const ModulePtr& m, const QHStructure& qh);
// [m : Delta(l)] = dim Hom(m, nabla(l)) and [m : nabla(l)] = dim Hom(Delta(l), m).
std::vector<std::size_t> delta_multiplicities(const ModulePtr& m, const QHStructure& qh);
std::vector<std::size_t> nabla_multiplicities(const ModulePtr& m, const QHStructure& qh);

// 0 -> x -> x' -> d^e -> 0 with e = dim Ext^1(d, x), every extension class realized once.
struct UniversalExtension {
  ModulePtr module;
  Matrix embedding;  // x -> x'
  std::size_t copies = 0;
};
UniversalExtension universal_extension(const ModulePtr& x, const ModulePtr& d);
// Cocycles Omega(d) -> x representing a basis of Ext^1(d, x).
std::vector<Matrix> ext1_cocycles(const ModulePtr& d, const ModulePtr& x);
// Pushout of one copy of 0 -> Omega(d) -> P(d) per cocycle.
UniversalExtension extension_from_cocycles(const ModulePtr& x, const ModulePtr& d, const std::vector<Matrix>& cocycles);

struct Tilting {
  std::vector<ModulePtr> summands;  // T(l), indecomposable
  ModulePtr module;                 // sum of the T(l)
  std::vector<std::vector<std::size_t>> delta_mult, nabla_mult;
  std::vector<std::size_t> extension_steps;
};
Tilting characteristic_tilting(const QHStructure& qh);

struct RingelDual {
  AlgebraPtr algebra;  // End_A(T)^op
  ModulePtr tilting;
  std::vector<ModulePtr> hom_standards;  // Hom_A(T, nabla(l))
  QHStructure qh;                        // on the reversed poset
  QHReport report;
};
RingelDual ringel_dual(const QHStructure& qh, const Tilting& t);
RingelDual ringel_dual(const QHStructure& qh);

struct MoritaInvariants {
  std::size_t basic_dim = 0;
  std::vector<std::vector<std::size_t>> cartan;  // dim Hom(P(s), P(t))
  std::vector<std::size_t> delta_dims;           // sorted
};
MoritaInvariants morita_invariants(const QHStructure& qh);
// Equal up to a simultaneous permutation of the Cartan rows and columns.
bool same_morita_invariants(const MoritaInvariants& a, const MoritaInvariants& b);

struct HeredityQuotient {
  ColumnBasis ideal;  // J inside A
  QuotientAlgebra quotient;
  QHStructure qh;     // on the remaining labels
  std::vector<std::size_t> kept;  // old label index of each new label
};
HeredityQuotient split_heredity_quotient(const QHStructure& qh, std::size_t label);

// Modules over A/J from A-modules killed by J, and back.
ModulePtr descend(const ModulePtr& m, const QuotientAlgebra& q);
ModulePtr inflate(const ModulePtr& m, const AlgebraPtr& a, const QuotientAlgebra& q);

}  // namespace relqh
