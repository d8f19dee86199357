#pragma once

#include <vector>

#include "relqh/homology.hpp"

namespace relqh {

struct Approximation {
  ModuleMap map;  // source in add q
  bool surjective = false;
  bool injective = false;
};

// Evaluation q^h -> m over a Hom basis.
Approximation right_add_approximation(const ModulePtr& q, const ModulePtr& m);
// Right minimal version: one summand q e_t per generator of Hom(q, m) over End(q)^op.
Approximation minimal_right_add_approximation(const ModulePtr& q, const ModulePtr& m);
// Dual of the right approximation of Dm by Dq.
Approximation left_add_approximation(const ModulePtr& q, const ModulePtr& m);
Approximation minimal_left_add_approximation(const ModulePtr& q, const ModulePtr& m);

struct MuellerReport {
  DimValue value;
  std::size_t b_dim = 0;
  std::size_t hom_dim = 0;
  std::size_t tensor_dim = 0;
  bool chi_surjective = false, chi_injective = false;
  std::vector<std::size_t> tor_dims;  // Tor_1, Tor_2, ... as far as computed
  bool resolution_terminated = false;
};

// q-codominant dimension of m through the counit and a Tor ladder over End(q)^op.
MuellerReport relative_codomdim(const ModulePtr& q, const ModulePtr& m, std::size_t cap = 20);
// q-dominant dimension of m, computed on the duals.
MuellerReport relative_domdim(const ModulePtr& q, const ModulePtr& m, std::size_t cap = 20);

struct ChainReport {
  DimValue value;
  std::vector<Approximation> steps;
  std::vector<std::size_t> kernel_dims;
};

// Iterated minimal right approximations of m and its kernels.
ChainReport codomdim_chain(const ModulePtr& q, const ModulePtr& m, std::size_t cap = 20);
// Same on the duals; the chain is reported over the opposite algebra.
ChainReport domdim_chain(const ModulePtr& q, const ModulePtr& m, std::size_t cap = 20);

struct ProjectiveInjectives {
  std::vector<std::size_t> classes;
  ModulePtr module;  // multiplicity-free sum, zero module when empty
};
ProjectiveInjectives find_projective_injectives(const AlgebraPtr& a);
// Dominant dimension of the regular module; Exact(0) when no projective is injective.
MuellerReport classical_domdim(const AlgebraPtr& a, std::size_t cap = 20);

// inf{i > 0 : Tor_i(x, m) != 0} with x over the opposite algebra.
DimValue reduced_cograde(const ModulePtr& x, const ModulePtr& m, std::size_t cap = 20);

}  // namespace relqh
