#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "relqh/qh.hpp"
#include "relqh/reldim.hpp"

namespace relqh {

// Hom_A(p, m) as a module over End_A(p)^op.
ModulePtr schur_functor_image(const ModulePtr& p, const ModulePtr& m);
// Induced map Hom_A(p, src) -> Hom_A(p, tgt) in Hom-basis coordinates.
ModuleMap schur_functor_map(const ModulePtr& p, const ModuleMap& f);

// The canonical map A -> End_B(q)^op with B = End_A(q)^op is bijective.
bool double_centralizer_check(const ModulePtr& q);

// m -> Hom_B(F_p A, F_p m), one flattened linear map per basis vector of m.
struct UnitData {
  bool injective = false, iso = false;
  std::size_t source_dim = 0, target_dim = 0;
};
UnitData unit_of_adjunction(const ModulePtr& p, const ModulePtr& m);

struct CoverOptions {
  std::size_t cap = 10;
  std::size_t random_checks = 20;
  std::uint64_t seed = 0x5eed;
};

struct CoverReport {
  bool projective = false;
  bool fully_faithful = false;       // on the indecomposable projectives
  bool double_centralizer = false;   // A -> End_B(F_p A)^op bijective
  bool is_cover = false;
  // Exact(-1) for a cover that is not 0-faithful; meaningless unless is_cover.
  DimValue hn;
  std::size_t b_dim = 0, fa_dim = 0;
  std::vector<UnitData> eta_standard;
  bool eta_tilting_iso = false;
  std::vector<std::vector<std::size_t>> ext;  // ext[l][j-1] = dim Ext^j_B(F A, F Delta(l))
  std::string certification;
  std::size_t random_checked = 0;
  bool random_ok = true;
  std::string str() const { return is_cover ? hn.str() : "NotCover"; }
};
CoverReport hn_dimension(const QHStructure& qh, const ModulePtr& p, const CoverOptions& opt = {});

// X in F(Delta) built from random extensions between standards.
ModulePtr random_delta_filtered(const QHStructure& qh, std::uint64_t seed, std::size_t steps = 3);

// Whether q is a direct sum of summands of the characteristic tilting module.
bool in_add_tilting(const ModulePtr& q, const Tilting& t);

struct RingelCoverVerdict {
  DimValue n;  // q-codominant dimension of T
  CoverReport cover;
  bool applicable = false;  // n >= 2
  bool pass = false;
  std::string detail;
};
RingelCoverVerdict verify_ringel_cover_theorem(const QHStructure& qh, const Tilting& t, const RingelDual& rd,
                                               const ModulePtr& q, const CoverOptions& opt = {});
RingelCoverVerdict verify_ringel_cover_theorem(const QHStructure& qh, const ModulePtr& q, const CoverOptions& opt = {});

// P / JP over A / J for the heredity ideal of a maximal label.
ModulePtr truncate_module(const ModulePtr& p, const HeredityQuotient& hq);

struct TruncationVerdict {
  CoverReport before, after;
  bool trivial = false;
  bool pass = false;
  std::string detail;
};
TruncationVerdict truncate_cover_check(const QHStructure& qh, const ModulePtr& p, std::size_t label,
                                       const CoverOptions& opt = {});
// Truncates at a maximal label until one label is left; one verdict per step.
std::vector<TruncationVerdict> truncation_chain_check(const QHStructure& qh, const ModulePtr& p,
                                                      const CoverOptions& opt = {});

// Bounds for the corner eAe with p a faithful projective-injective of A.
struct TransferReport {
  std::size_t corner_dim = 0;
  DimValue domdim_t;         // p-domdim_A T
  DimValue corner_domdim_t;  // ep-domdim_eAe eT
  bool tilting_bound = false;
  std::vector<DimValue> codomdim_m, corner_codomdim_m;  // over the costandards, then T
  bool low_values = false;
  bool pass = false;
};
TransferReport eae_transfer_check(const QHStructure& qh, const Tilting& t, const ModulePtr& p, const Matrix& e,
                                  std::size_t cap = 12);

}  // namespace relqh
