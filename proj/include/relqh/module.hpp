#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "relqh/algebra.hpp"

namespace relqh {

class Module;
using ModulePtr = std::shared_ptr<const Module>;

// Finite-dimensional left module: one action matrix per basis element of the algebra.
class Module {
 public:
  static ModulePtr make(AlgebraPtr a, std::vector<Matrix> action, bool validate = false, std::string name = "");

  const AlgebraPtr& algebra() const { return alg_; }
  const Field& field() const { return alg_->field(); }
  std::size_t dim() const { return dim_; }
  const Matrix& act(std::size_t i) const { return act_[i]; }
  const std::vector<Matrix>& actions() const { return act_; }
  Matrix act_elem(const Matrix& x) const;
  // Throws ValidationError if the action is not a representation.
  void validate() const;
  std::uint64_t fingerprint() const;

  std::string name;

  template <class T>
  std::shared_ptr<const T> memo(const std::string& key, const std::function<std::shared_ptr<const T>()>& make) const {
    {
      std::lock_guard<std::mutex> g(mu_);
      auto it = memo_.find(key);
      if (it != memo_.end()) return std::static_pointer_cast<const T>(it->second);
    }
    auto v = make();
    std::lock_guard<std::mutex> g(mu_);
    auto [it, ins] = memo_.emplace(key, v);
    return std::static_pointer_cast<const T>(it->second);
  }

 private:
  Module() = default;
  AlgebraPtr alg_;
  std::size_t dim_ = 0;
  std::vector<Matrix> act_;
  mutable std::mutex mu_;
  mutable std::map<std::string, std::shared_ptr<const void>> memo_;
};

void require_same_algebra(const Module& m, const Module& n, const char* op);

struct ModuleMap {
  ModulePtr src, tgt;
  Matrix m;  // tgt.dim x src.dim
  bool injective() const { return rank(m) == src->dim(); }
  bool surjective() const { return rank(m) == tgt->dim(); }
  bool is_homomorphism() const;
};

struct Submodule {
  ModulePtr module;
  Matrix inclusion;  // ambient.dim x sub.dim
  ColumnBasis space;
};
struct QuotientModule {
  ModulePtr module;
  Matrix projection;  // quot.dim x ambient.dim
  QuotientSpace space;
};

ModulePtr regular_module(const AlgebraPtr& a);
ModulePtr zero_module(const AlgebraPtr& a);
ModulePtr direct_sum(const std::vector<ModulePtr>& parts);
ModulePtr power(const ModulePtr& m, std::size_t k);
Submodule submodule(const ModulePtr& m, const ColumnBasis& invariant_space);
// Smallest submodule containing the given column vectors.
Submodule generated_submodule(const ModulePtr& m, const Matrix& vectors);
QuotientModule quotient_module(const ModulePtr& m, const ColumnBasis& invariant_space);
Submodule kernel(const ModuleMap& f);
Submodule image(const ModuleMap& f);
QuotientModule cokernel(const ModuleMap& f);

// Dual module over opposite(algebra): action by transposes.
ModulePtr dual(const ModulePtr& m);

// Indecomposable projective A e_t for the primitive idempotent class t.
ModulePtr projective(const AlgebraPtr& a, std::size_t cls);
const ColumnBasis& projective_space(const AlgebraPtr& a, std::size_t cls);
ModulePtr injective(const AlgebraPtr& a, std::size_t cls);
ModulePtr simple(const AlgebraPtr& a, std::size_t cls);

Submodule module_radical(const ModulePtr& m);
QuotientModule top(const ModulePtr& m);
Submodule socle(const ModulePtr& m);
// dim e_t M for each class t
std::vector<std::size_t> dimension_vector(const ModulePtr& m);
std::vector<std::size_t> top_multiplicities(const ModulePtr& m);
std::vector<std::size_t> socle_multiplicities(const ModulePtr& m);

struct ProjectiveCover {
  std::vector<std::size_t> classes;  // class of each summand of P0
  std::vector<Matrix> gens;          // generator in e_t M of each summand
  std::vector<std::size_t> offsets;  // start of each summand inside P0
  ModulePtr p0;
  Matrix map;  // P0 -> M
};
const ProjectiveCover& projective_cover(const ModulePtr& m);
// Kernel of the projective cover.
const Submodule& syzygy(const ModulePtr& m);
// Generators of the syzygy as algebra elements: rel[l][j] in e_{s_l} A e_{t_j}.
struct Relations {
  std::vector<std::size_t> classes;
  std::vector<std::vector<Matrix>> rel;
};
const Relations& relations(const ModulePtr& m);
// Express a vector of P0 as its algebra-element components.
std::vector<Matrix> p0_components(const ModulePtr& m, const Matrix& v);

ModuleMap injective_envelope(const ModulePtr& m);

class HomSpace {
 public:
  HomSpace() = default;
  HomSpace(ModulePtr src, ModulePtr tgt, std::vector<Matrix> raw);
  const ModulePtr& src() const { return src_; }
  const ModulePtr& tgt() const { return tgt_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Matrix>& basis() const { return basis_; }
  const Matrix& operator[](std::size_t i) const { return basis_[i]; }
  // Coordinates of a map lying in the space.
  Matrix coords(const Matrix& phi) const;
  bool contains(const Matrix& phi) const;
  Matrix combine(const Matrix& c) const;

 private:
  ModulePtr src_, tgt_;
  std::vector<Matrix> basis_;
  std::vector<std::size_t> pivots_;  // flattened positions
};
// Memoized per pair.
std::shared_ptr<const HomSpace> hom_space(const ModulePtr& m, const ModulePtr& n);
std::size_t hom_dim(const ModulePtr& m, const ModulePtr& n);

// End algebra with composition product and B = its opposite.
struct EndData {
  ModulePtr q;
  std::shared_ptr<const HomSpace> endo;
  AlgebraPtr e;        // basis = endo basis, product = composition
  AlgebraPtr b;        // opposite(e)
  ModulePtr q_right;   // q as a left e-module (= right B-module)
};
std::shared_ptr<const EndData> end_algebra(const ModulePtr& q);

// Hom_A(q, m) as a left B-module via precomposition, with the Hom basis used for coordinates.
struct HomModule {
  std::shared_ptr<const EndData> end;
  std::shared_ptr<const HomSpace> hom;
  ModulePtr module;
};
HomModule hom_module(const ModulePtr& q, const ModulePtr& m);

// x (left module over B^op) tensored over B with y (left B-module).  If outer is given, it is a
// left A-module on the same space as x whose action commutes with x's, and the result is an A-module.
struct Tensor {
  std::size_t dim = 0;
  ModulePtr module;       // set when outer is given
  Matrix ambient_to_tensor;  // projection from the ambient x^k onto the tensor coordinates
  Matrix sub_basis;          // basis of sum x e_t inside the ambient x^k
  Matrix lift;               // ambient preimages of the tensor basis
  std::vector<std::size_t> classes;
  std::size_t x_dim = 0;
};
Tensor tensor_over(const ModulePtr& x, const ModulePtr& y, const ModulePtr& outer = nullptr);

// Evaluation q (x)_B Hom(q, m) -> m.
struct Counit {
  Tensor tensor;
  ModuleMap chi;
  bool surjective = false, injective = false;
};
// Without the module, chi.src is left empty and only the ranks are meaningful.
Counit counit(const ModulePtr& q, const ModulePtr& m, bool with_module = true);

Submodule trace_submodule(const ModulePtr& x, const ModulePtr& m);
// Trace of P(t): the submodule A e_t M.
Submodule projective_trace(const ModulePtr& m, std::size_t cls);

ModulePtr corner_module(const ModulePtr& m, const CornerAlgebra& c);

std::optional<Matrix> is_isomorphic(const ModulePtr& m, const ModulePtr& n);
// Indecomposable summands as submodules (images of primitive idempotents of End).
std::vector<Submodule> decompose(const ModulePtr& m);
bool is_indecomposable(const ModulePtr& m);

}  // namespace relqh
