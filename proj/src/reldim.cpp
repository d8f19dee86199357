#include "relqh/reldim.hpp"

namespace relqh {

namespace {

Approximation finish(ModulePtr src, const ModulePtr& tgt, Matrix m) {
  Approximation a{ModuleMap{std::move(src), tgt, std::move(m)}};
  std::size_t r = rank(a.map.m);
  a.surjective = r == tgt->dim();
  a.injective = r == a.map.src->dim();
  return a;
}

Approximation dualize(const Approximation& r, const ModulePtr& m) {
  ModulePtr src = dual(r.map.src);
  Approximation a{ModuleMap{m, src, r.map.m.transpose()}};
  a.injective = r.surjective;
  a.surjective = r.injective;
  return a;
}

}  // namespace

Approximation right_add_approximation(const ModulePtr& q, const ModulePtr& m) {
  require_same_algebra(*q, *m, "right_add_approximation");
  auto h = hom_space(q, m);
  if (h->dim() == 0) return finish(zero_module(q->algebra()), m, Matrix(q->field(), m->dim(), 0));
  return finish(power(q, h->dim()), m, Matrix::hstack(q->field(), m->dim(), h->basis()));
}

Approximation minimal_right_add_approximation(const ModulePtr& q, const ModulePtr& m) {
  require_same_algebra(*q, *m, "minimal_right_add_approximation");
  HomModule hm = hom_module(q, m);
  const Field& f = q->field();
  if (hm.module->dim() == 0) return finish(zero_module(q->algebra()), m, Matrix(f, m->dim(), 0));
  const ProjectiveCover& c = projective_cover(hm.module);
  const Algebra& b = *hm.end->b;
  std::vector<ModulePtr> parts;
  std::vector<Matrix> blocks;
  for (std::size_t l = 0; l < c.gens.size(); ++l) {
    Matrix e = hm.end->endo->combine(b.idempotents().rep(c.classes[l]));
    ColumnBasis cb = column_space(e);
    parts.push_back(submodule(q, cb).module);
    blocks.push_back(hm.hom->combine(c.gens[l]) * cb.basis);
  }
  return finish(direct_sum(parts), m, Matrix::hstack(f, m->dim(), blocks));
}

Approximation left_add_approximation(const ModulePtr& q, const ModulePtr& m) {
  return dualize(right_add_approximation(dual(q), dual(m)), m);
}

Approximation minimal_left_add_approximation(const ModulePtr& q, const ModulePtr& m) {
  return dualize(minimal_right_add_approximation(dual(q), dual(m)), m);
}

MuellerReport relative_codomdim(const ModulePtr& q, const ModulePtr& m, std::size_t cap) {
  require_same_algebra(*q, *m, "relative_codomdim");
  if (cap < 2) throw UsageError("relative_codomdim: cap must be at least 2");
  MuellerReport r;
  HomModule hm = hom_module(q, m);
  r.b_dim = hm.end->b->dim();
  r.hom_dim = hm.hom->dim();
  Counit cu = counit(q, m, false);
  r.tensor_dim = cu.tensor.dim;
  r.chi_surjective = cu.surjective;
  r.chi_injective = cu.injective;
  if (!cu.surjective) {
    r.value = DimValue::exact(0);
    return r;
  }
  if (!cu.injective) {
    r.value = DimValue::exact(1);
    return r;
  }
  // Tor_i for i <= cap - 2 needs the resolution up to degree cap - 1
  const std::size_t rcap = cap - 1;
  const Resolution& res = minimal_projective_resolution(hm.module, rcap);
  r.resolution_terminated = res.terminated;
  std::size_t k = res.terminated ? std::min(std::max<std::size_t>(res.length(), 1), cap - 2) : cap - 2;
  if (k > 0) r.tor_dims = tor_dims(hm.end->q_right, hm.module, k, rcap, true);
  for (std::size_t i = 0; i < r.tor_dims.size(); ++i)
    if (r.tor_dims[i]) {
      r.value = DimValue::exact(static_cast<long>(i + 2));
      return r;
    }
  if (res.terminated && res.length() <= cap - 2) {
    r.value = DimValue::infinite();
  } else if (res.terminated) {
    // the last possibly nonzero degree lies beyond the reported range
    std::vector<std::size_t> all = tor_dims(hm.end->q_right, hm.module, res.length(), rcap, true);
    r.value = all.back() == 0 ? DimValue::infinite() : DimValue::at_least(static_cast<long>(cap));
  } else {
    r.value = DimValue::at_least(static_cast<long>(cap));
  }
  return r;
}

MuellerReport relative_domdim(const ModulePtr& q, const ModulePtr& m, std::size_t cap) {
  return relative_codomdim(dual(q), dual(m), cap);
}

ChainReport codomdim_chain(const ModulePtr& q, const ModulePtr& m, std::size_t cap) {
  require_same_algebra(*q, *m, "codomdim_chain");
  ChainReport r;
  ModulePtr k = m;
  for (std::size_t s = 1; s <= cap; ++s) {
    Approximation ap = minimal_right_add_approximation(q, k);
    r.steps.push_back(ap);
    if (!ap.surjective) {
      r.value = DimValue::exact(static_cast<long>(s - 1));
      return r;
    }
    Submodule ker = kernel(ap.map);
    r.kernel_dims.push_back(ker.module->dim());
    if (ker.module->dim() == 0) {
      r.value = DimValue::infinite();
      return r;
    }
    k = ker.module;
  }
  r.value = DimValue::at_least(static_cast<long>(cap));
  return r;
}

ChainReport domdim_chain(const ModulePtr& q, const ModulePtr& m, std::size_t cap) {
  return codomdim_chain(dual(q), dual(m), cap);
}

ProjectiveInjectives find_projective_injectives(const AlgebraPtr& a) {
  ProjectiveInjectives out;
  const auto& id = a->idempotents();
  std::vector<ModulePtr> parts;
  for (std::size_t t = 0; t < id.num_classes(); ++t) {
    ModulePtr p = projective(a, t);
    auto soc = socle_multiplicities(p);
    std::size_t total = 0, u = 0;
    for (std::size_t s = 0; s < soc.size(); ++s)
      if (soc[s]) total += soc[s], u = s;
    if (total != 1) continue;
    // P(t) embeds in I(u); equal dimensions make it an isomorphism
    std::size_t inj_dim = rank(a->left_matrix(id.rep(u)));
    if (inj_dim != p->dim()) continue;
    out.classes.push_back(t);
    parts.push_back(p);
  }
  out.module = parts.empty() ? zero_module(a) : direct_sum(parts);
  return out;
}

MuellerReport classical_domdim(const AlgebraPtr& a, std::size_t cap) {
  ProjectiveInjectives pi = find_projective_injectives(a);
  if (pi.classes.empty()) {
    MuellerReport r;
    r.value = DimValue::exact(0);
    return r;
  }
  return relative_domdim(pi.module, regular_module(a), cap);
}

DimValue reduced_cograde(const ModulePtr& x, const ModulePtr& m, std::size_t cap) {
  if (cap < 1) throw UsageError("reduced_cograde: cap must be positive");
  const Resolution& res = minimal_projective_resolution(m, cap);
  std::size_t k = res.terminated ? std::max<std::size_t>(res.length(), 1) : cap - 1;
  std::vector<std::size_t> t = k ? tor_dims(x, m, k, cap, true) : std::vector<std::size_t>{};
  for (std::size_t i = 0; i < t.size(); ++i)
    if (t[i]) return DimValue::exact(static_cast<long>(i + 1));
  return res.terminated ? DimValue::infinite() : DimValue::at_least(static_cast<long>(cap));
}

}  // namespace relqh
