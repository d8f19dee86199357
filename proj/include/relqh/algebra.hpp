#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "relqh/matrix.hpp"

namespace relqh {

class Algebra;
using AlgebraPtr = std::shared_ptr<const Algebra>;
AlgebraPtr opposite(const AlgebraPtr& a);

enum class Provenance { Raw, Quiver, Centralizer, Product, Corner, Quotient, Opposite, Endomorphism };
const char* provenance_name(Provenance p);

struct QuiverArrow {
  std::string name;
  int from = 0, to = 0;  // 0-based vertices
};

struct QuiverTerm {
  std::vector<std::string> path;  // leftmost arrow is applied last
  std::string coeff = "1";
};

struct QuiverPresentation {
  int vertices = 0;
  std::vector<QuiverArrow> arrows;
  std::vector<std::vector<QuiverTerm>> relations;
};

struct IdempotentData {
  std::vector<Matrix> primitive;        // complete orthogonal primitive set
  std::vector<std::size_t> class_of;    // isomorphism class of A e
  std::vector<std::size_t> class_rep;   // representative idempotent index per class
  std::vector<std::size_t> class_size;  // = dimension of the simple module
  std::size_t num_classes() const { return class_rep.size(); }
  const Matrix& rep(std::size_t cls) const { return primitive[class_rep[cls]]; }
};

class Algebra {
 public:
  // Build from left multiplication matrices: column j of left[i] = coords of b_i b_j.
  static std::shared_ptr<Algebra> from_left_matrices(const Field& f, std::vector<Matrix> left,
                                                     Matrix one, Provenance prov, bool validate);
  static AlgebraPtr from_structure_constants(
      const Field& f, std::size_t dim,
      const std::vector<std::tuple<std::size_t, std::size_t, std::size_t, Scalar>>& mult,
      const Matrix& one);

  const Field& field() const { return f_; }
  std::size_t dim() const { return dim_; }
  Provenance provenance() const { return prov_; }

  const Matrix& left(std::size_t i) const { return left_[i]; }
  const Matrix& right(std::size_t j) const;
  Scalar coeff(std::size_t i, std::size_t j, std::size_t k) const { return left_[i].at(k, j); }
  const Matrix& one() const { return one_; }
  Matrix basis_element(std::size_t i) const { return Matrix::unit_vector(f_, dim_, i); }
  Matrix zero() const { return Matrix(f_, dim_, 1); }

  Matrix mul(const Matrix& x, const Matrix& y) const;
  Matrix left_matrix(const Matrix& x) const;
  Matrix right_matrix(const Matrix& x) const;
  bool is_idempotent(const Matrix& e) const { return mul(e, e) == e; }

  // Exhaustive associativity and unit check; throws ValidationError naming a triple.
  void validate() const;

  // A faithful left representation, one matrix per basis element.
  const std::vector<Matrix>& faithful_rep() const;
  void set_faithful_rep(std::vector<Matrix> rep);
  void set_idempotent_hint(std::vector<Matrix> idem);
  const std::vector<Matrix>& idempotent_hint() const { return hint_; }

  std::vector<std::string> basis_labels;

  const ColumnBasis& radical() const;
  // Elements g with J = sum g A.
  const std::vector<Matrix>& radical_generators() const;
  std::size_t nilpotency_bound() const { return radical().dim() + 1; }
  const IdempotentData& idempotents() const;

  // Per-algebra memo slots for higher layers.
  template <class T>
  std::shared_ptr<const T> memo(const std::string& key, const std::function<std::shared_ptr<const T>()>& make) const {
    {
      std::lock_guard<std::mutex> g(memo_mu_);
      auto it = memo_.find(key);
      if (it != memo_.end()) return std::static_pointer_cast<const T>(it->second);
    }
    auto v = make();
    std::lock_guard<std::mutex> g(memo_mu_);
    auto [it, ins] = memo_.emplace(key, v);
    return std::static_pointer_cast<const T>(it->second);
  }

  std::uint64_t fingerprint() const;

 private:
  Algebra() = default;
  Field f_;
  std::size_t dim_ = 0;
  std::vector<Matrix> left_;
  Matrix one_;
  Provenance prov_ = Provenance::Raw;
  std::vector<Matrix> hint_;

  mutable std::once_flag right_once_, rep_once_, rad_once_, gens_once_, idem_once_;
  mutable std::vector<Matrix> right_;
  mutable std::vector<Matrix> rep_;
  bool rep_given_ = false;
  mutable ColumnBasis rad_;
  mutable std::vector<Matrix> rad_gens_;
  mutable IdempotentData idem_;
  mutable std::mutex memo_mu_;
  mutable std::map<std::string, std::shared_ptr<const void>> memo_;

  // Opposite bookkeeping: the opposite of an opposite returns the original object.
  mutable std::mutex op_mu_;
  mutable std::shared_ptr<const Algebra> op_strong_;
  mutable std::weak_ptr<const Algebra> op_weak_;
  friend AlgebraPtr opposite(const AlgebraPtr& a);
};

bool same_algebra(const Algebra& a, const Algebra& b);

AlgebraPtr from_quiver(const QuiverPresentation& q, const Field& f, std::size_t degree_cap = 64);
AlgebraPtr opposite(const AlgebraPtr& a);
AlgebraPtr direct_product(const AlgebraPtr& a, const AlgebraPtr& b);

struct CornerAlgebra {
  AlgebraPtr algebra;
  Matrix inclusion;  // dim A x dim eAe, columns are the basis of eAe inside A
  Matrix idempotent;
  ColumnBasis space;
};
CornerAlgebra corner_algebra(const AlgebraPtr& a, const Matrix& e);

struct QuotientAlgebra {
  AlgebraPtr algebra;
  QuotientSpace space;  // projection A -> A/I
  Matrix project(const Matrix& x) const { return space.project(x); }
};
QuotientAlgebra quotient_algebra(const AlgebraPtr& a, const ColumnBasis& ideal);
ColumnBasis two_sided_ideal(const Algebra& a, const std::vector<Matrix>& gens);
// Span of all products x y, x in I, y in K.
ColumnBasis ideal_product(const Algebra& a, const ColumnBasis& i, const ColumnBasis& k);

// Commutant of the given matrices acting on F^n.
AlgebraPtr centralizer_algebra(const Field& f, std::size_t n, const std::vector<Matrix>& generators);

// Independent computations used by the checks.
ColumnBasis radical_via_rep(const Algebra& a, const std::vector<Matrix>& rep);
std::vector<Matrix> split_semisimple(const Algebra& s, std::uint64_t seed = 1);
Matrix lift_idempotent_in(const Algebra& a, const Matrix& e0);

}  // namespace relqh
