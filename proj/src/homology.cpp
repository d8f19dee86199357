#include "relqh/homology.hpp"

#include <map>

namespace relqh {

std::string DimValue::str() const {
  switch (kind) {
    case Kind::Exact: return "Exact(" + std::to_string(n) + ")";
    case Kind::AtLeast: return "AtLeast(" + std::to_string(n) + ")";
    case Kind::Infinite: return "Infinite";
  }
  return "";
}

DimValue min(const DimValue& a, const DimValue& b) {
  if (a.is_infinite()) return b;
  if (b.is_infinite()) return a;
  using K = DimValue::Kind;
  if (a.kind == K::Exact && b.kind == K::Exact) return a.n <= b.n ? a : b;
  if (a.kind == K::AtLeast && b.kind == K::AtLeast) return a.n <= b.n ? a : b;
  const DimValue& e = a.kind == K::Exact ? a : b;
  const DimValue& l = a.kind == K::Exact ? b : a;
  return e.n <= l.n ? e : l;
}

bool Resolution::minimal() const {
  for (std::size_t i = 1; i < differential.size(); ++i) {
    Submodule rad = module_radical(terms[i - 1]);
    const Matrix& d = differential[i];
    for (std::size_t c = 0; c < d.cols(); ++c)
      if (!rad.space.contains(d.col(c))) return false;
  }
  return true;
}

const Resolution& minimal_projective_resolution(const ModulePtr& m, std::size_t cap) {
  auto r = m->memo<Resolution>("res:" + std::to_string(cap), [&m, cap] {
    auto res = std::make_shared<Resolution>();
    res->base = m;
    res->cap = cap;
    res->syzygies.push_back(m);
    ModulePtr omega = m;
    Matrix incl;  // Omega^i inside P_{i-1}
    for (std::size_t i = 0; i <= cap; ++i) {
      if (omega->dim() == 0) break;
      const ProjectiveCover& c = projective_cover(omega);
      res->terms.push_back(c.p0);
      res->classes.push_back(c.classes);
      if (i == 0) {
        res->differential.push_back(c.map);
        res->elements.emplace_back();
      } else {
        res->differential.push_back(incl * c.map);
        std::vector<std::vector<Matrix>> el;
        for (const auto& g : c.gens) el.push_back(p0_components(res->syzygies[i - 1], incl * g));
        res->elements.push_back(std::move(el));
      }
      const Submodule& s = syzygy(omega);
      incl = s.inclusion;
      omega = s.module;
      res->syzygies.push_back(omega);
    }
    res->terminated = omega->dim() == 0;
    return std::shared_ptr<const Resolution>(res);
  });
  return *r;
}

namespace {

// Cached bases of e_t X for the classes of an algebra acting on X.
struct CornerSpaces {
  const Module* mod;
  std::map<std::size_t, ColumnBasis> cache;
  const ColumnBasis& get(std::size_t cls, const Algebra& a) {
    auto it = cache.find(cls);
    if (it != cache.end()) return it->second;
    return cache.emplace(cls, column_space(mod->act_elem(a.idempotents().rep(cls)))).first->second;
  }
};

// Boundary from degree i: rows indexed by summands of P_{i-1}, columns by P_i.
// Ext: C^{i-1} -> C^i with blocks act_N(D[l][j]) (rows l of P_i, columns j of P_{i-1}).
// Tor: C_i -> C_{i-1} with blocks act_x(D[l][j]) (rows j, columns l).
Matrix boundary(const Resolution& r, std::size_t i, const Module& target, const Algebra& a, CornerSpaces& sp,
                bool cohomological) {
  const Field& f = a.field();
  const auto& cl_hi = r.classes[i];
  const auto& cl_lo = r.classes[i - 1];
  std::vector<std::size_t> off_hi, off_lo;
  std::size_t n_hi = 0, n_lo = 0;
  for (auto c : cl_hi) off_hi.push_back(n_hi), n_hi += sp.get(c, a).dim();
  for (auto c : cl_lo) off_lo.push_back(n_lo), n_lo += sp.get(c, a).dim();
  Matrix out = cohomological ? Matrix(f, n_hi, n_lo) : Matrix(f, n_lo, n_hi);
  const auto& d = r.elements[i];
  for (std::size_t l = 0; l < cl_hi.size(); ++l)
    for (std::size_t j = 0; j < cl_lo.size(); ++j) {
      if (d[l][j].is_zero()) continue;
      Matrix act = target.act_elem(d[l][j]);
      const ColumnBasis& hi = sp.get(cl_hi[l], a);
      const ColumnBasis& lo = sp.get(cl_lo[j], a);
      if (cohomological) {
        if (lo.dim() == 0 || hi.dim() == 0) continue;
        out.set_block(off_hi[l], off_lo[j], hi.coords(act * lo.basis));
      } else {
        if (lo.dim() == 0 || hi.dim() == 0) continue;
        out.set_block(off_lo[j], off_hi[l], lo.coords(act * hi.basis));
      }
    }
  return out;
}

std::size_t chain_dim(const Resolution& r, std::size_t i, const Algebra& a, CornerSpaces& sp) {
  if (i >= r.terms.size()) return 0;
  std::size_t n = 0;
  for (auto c : r.classes[i]) n += sp.get(c, a).dim();
  return n;
}

// rank of the boundary out of degree i (0 when degree i is beyond the resolution).
std::size_t boundary_rank(const Resolution& r, std::size_t i, const Module& target, const Algebra& a,
                          CornerSpaces& sp, bool cohom) {
  if (i == 0) return 0;
  if (i >= r.terms.size()) {
    if (!r.terminated) throw CapExceeded("resolution cap " + std::to_string(r.cap) + " reached");
    return 0;
  }
  return rank(boundary(r, i, target, a, sp, cohom));
}

}  // namespace

std::size_t ext_dim(const ModulePtr& m, const ModulePtr& n, std::size_t i, std::size_t cap) {
  require_same_algebra(*m, *n, "ext_dim");
  const Resolution& r = minimal_projective_resolution(m, cap);
  if (!r.terminated && i >= cap) throw CapExceeded("ext_dim: degree beyond resolution cap");
  CornerSpaces sp{n.get(), {}};
  const Algebra& a = *m->algebra();
  std::size_t c = chain_dim(r, i, a, sp);
  if (c == 0) return 0;
  return c - boundary_rank(r, i + 1, *n, a, sp, true) - boundary_rank(r, i, *n, a, sp, true);
}

std::vector<std::size_t> tor_dims(const ModulePtr& x, const ModulePtr& y, std::size_t k, std::size_t cap,
                                  bool stop_at_nonzero) {
  const AlgebraPtr& b = y->algebra();
  if (!same_algebra(*x->algebra(), *opposite(b))) throw UsageError("tor: algebra mismatch");
  const Resolution& r = minimal_projective_resolution(y, cap);
  CornerSpaces sp{x.get(), {}};
  const Algebra& a = *b;
  std::vector<std::size_t> out;
  std::size_t prev_rank = boundary_rank(r, 1, *x, a, sp, false);
  for (std::size_t i = 1; i <= k; ++i) {
    if (!r.terminated && i >= cap) throw CapExceeded("tor: degree beyond resolution cap");
    std::size_t c = chain_dim(r, i, a, sp);
    std::size_t next_rank = c ? boundary_rank(r, i + 1, *x, a, sp, false) : 0;
    std::size_t t = c ? c - prev_rank - next_rank : 0;
    out.push_back(t);
    prev_rank = next_rank;
    if (stop_at_nonzero && t) break;
    if (r.terminated && i >= r.length()) {
      // every further degree vanishes
      for (std::size_t j = i + 1; j <= k && !stop_at_nonzero; ++j) out.push_back(0);
      break;
    }
  }
  return out;
}

std::size_t tor_dim(const ModulePtr& x, const ModulePtr& y, std::size_t i, std::size_t cap) {
  if (i == 0) return tensor_over(x, y).dim;
  auto v = tor_dims(x, y, i, cap, false);
  return i <= v.size() ? v[i - 1] : 0;
}

DimValue projective_dimension(const ModulePtr& m, std::size_t cap) {
  const Resolution& r = minimal_projective_resolution(m, cap);
  if (r.terminated) return DimValue::exact(static_cast<long>(r.length()));
  return DimValue::at_least(static_cast<long>(cap + 1));
}

DimValue injective_dimension(const ModulePtr& m, std::size_t cap) { return projective_dimension(dual(m), cap); }

bool is_exact_at(const Matrix& f, const Matrix& g) {
  if (!(g * f).is_zero()) return false;
  return rank(f) + rank(g) == g.cols();
}

}  // namespace relqh
