#include "relqh/qh.hpp"

#include <algorithm>
#include <numeric>

namespace relqh {

std::size_t WeightPoset::label_of_class(std::size_t cls) const {
  for (std::size_t i = 0; i < simple_of.size(); ++i)
    if (simple_of[i] == cls) return i;
  throw UsageError("no label for idempotent class " + std::to_string(cls));
}

WeightPoset WeightPoset::reversed() const {
  WeightPoset r = *this;
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = 0; j < size(); ++j) r.less[i][j] = less[j][i];
  return r;
}

std::vector<std::size_t> WeightPoset::decreasing_order() const {
  const std::size_t n = size();
  std::vector<bool> done(n, false);
  std::vector<std::size_t> out;
  while (out.size() < n) {
    bool found = false;
    for (std::size_t i = 0; i < n && !found; ++i) {
      if (done[i]) continue;
      bool maximal = true;
      for (std::size_t j = 0; j < n; ++j)
        if (!done[j] && less[i][j]) maximal = false;
      if (maximal) {
        done[i] = true;
        out.push_back(i);
        found = true;
      }
    }
    if (!found) throw ValidationError("poset relation has a cycle");
  }
  return out;
}

void WeightPoset::validate(std::size_t num_classes) const {
  const std::size_t n = size();
  if (less.size() != n || simple_of.size() != n) throw ValidationError("poset: inconsistent sizes");
  if (n != num_classes)
    throw ValidationError("poset has " + std::to_string(n) + " labels but the algebra has " +
                          std::to_string(num_classes) + " simples");
  std::vector<bool> hit(n, false);
  for (auto c : simple_of) {
    if (c >= n || hit[c]) throw ValidationError("poset: labels do not biject with simples");
    hit[c] = true;
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (less[i].size() != n) throw ValidationError("poset: relation matrix not square");
    if (less[i][i]) throw ValidationError("poset: " + labels[i] + " < " + labels[i]);
    for (std::size_t j = 0; j < n; ++j) {
      if (less[i][j] && less[j][i]) throw ValidationError("poset: not antisymmetric at " + labels[i]);
      for (std::size_t k = 0; k < n; ++k)
        if (less[i][j] && less[j][k] && !less[i][k])
          throw ValidationError("poset: not transitive at " + labels[i] + ", " + labels[k]);
    }
  }
}

WeightPoset WeightPoset::from_pairs(std::vector<std::string> labels,
                                    const std::vector<std::pair<std::size_t, std::size_t>>& less_than,
                                    std::vector<std::size_t> simple_of) {
  WeightPoset p;
  const std::size_t n = labels.size();
  p.labels = std::move(labels);
  p.simple_of = std::move(simple_of);
  p.less.assign(n, std::vector<bool>(n, false));
  for (auto [i, j] : less_than) {
    if (i >= n || j >= n) throw ValidationError("poset: relation index out of range");
    p.less[i][j] = true;
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (p.less[i][k] && p.less[k][j]) p.less[i][j] = true;
  for (std::size_t i = 0; i < n; ++i)
    if (p.less[i][i]) throw ValidationError("poset: relation has a cycle through " + p.labels[i]);
  return p;
}

WeightPoset WeightPoset::chain(std::vector<std::string> labels, std::vector<std::size_t> simple_of) {
  std::vector<std::pair<std::size_t, std::size_t>> rel;
  for (std::size_t i = 0; i + 1 < labels.size(); ++i) rel.emplace_back(i + 1, i);
  return from_pairs(std::move(labels), rel, std::move(simple_of));
}

std::vector<std::size_t> opposite_classes(const AlgebraPtr& a) {
  const std::size_t n = a->idempotents().num_classes();
  std::vector<std::size_t> out(n);
  for (std::size_t t = 0; t < n; ++t) {
    auto tm = top_multiplicities(dual(simple(a, t)));
    std::size_t hits = 0;
    for (std::size_t c = 0; c < tm.size(); ++c)
      if (tm[c]) out[t] = c, hits += tm[c];
    if (hits != 1) throw InternalError("dual of a simple is not simple");
  }
  return out;
}

WeightPoset opposite_poset(const AlgebraPtr& a, const WeightPoset& p) {
  auto oc = opposite_classes(a);
  WeightPoset q = p;
  for (auto& c : q.simple_of) c = oc.at(c);
  return q;
}

std::vector<QuotientModule> standard_modules(const AlgebraPtr& a, const WeightPoset& p) {
  p.validate(a->idempotents().num_classes());
  const Field& f = a->field();
  std::vector<QuotientModule> out;
  for (std::size_t l = 0; l < p.size(); ++l) {
    ModulePtr pl = projective(a, p.simple_of[l]);
    std::vector<Matrix> cols;
    for (std::size_t m = 0; m < p.size(); ++m)
      if (p.lt(l, m)) cols.push_back(projective_trace(pl, p.simple_of[m]).inclusion);
    ColumnBasis tr = column_space(f, pl->dim(), cols);
    out.push_back(quotient_module(pl, tr));
  }
  return out;
}

std::vector<ModulePtr> costandard_modules(const AlgebraPtr& a, const WeightPoset& p) {
  std::vector<ModulePtr> out;
  for (const auto& s : standard_modules(opposite(a), opposite_poset(a, p))) out.push_back(dual(s.module));
  return out;
}

QHStructure qh_structure(const AlgebraPtr& a, const WeightPoset& p) {
  QHStructure qh;
  qh.algebra = a;
  qh.poset = p;
  auto st = standard_modules(a, p);
  qh.costandard = costandard_modules(a, p);
  for (std::size_t l = 0; l < p.size(); ++l) {
    ModulePtr pl = projective(a, p.simple_of[l]);
    qh.proj.push_back(pl);
    qh.inj.push_back(injective(a, p.simple_of[l]));
    qh.standard.push_back(st[l].module);
    qh.standard_map.push_back(st[l].projection);
    qh.standard_kernel.push_back(kernel(ModuleMap{pl, st[l].module, st[l].projection}).module);
  }
  return qh;
}

QHStructure opposite_structure(const QHStructure& qh) {
  return qh_structure(opposite(qh.algebra), opposite_poset(qh.algebra, qh.poset));
}

std::optional<std::vector<std::size_t>> delta_filtration(const ModulePtr& m, const QHStructure& qh) {
  const WeightPoset& p = qh.poset;
  const auto order = p.decreasing_order();
  std::vector<std::size_t> mult(p.size(), 0);
  ModulePtr cur = m;
  while (cur->dim() > 0) {
    auto dv = dimension_vector(cur);
    std::size_t l = p.size();
    for (auto c : order)
      if (dv[p.simple_of[c]]) {
        l = c;
        break;
      }
    if (l == p.size()) return std::nullopt;
    const std::size_t cls = p.simple_of[l];
    if (dimension_vector(qh.delta(l))[cls] != 1) return std::nullopt;
    // the trace of P(l) is a quotient of Delta(l)^k since nothing above l is supported
    const std::size_t k = dv[cls];
    Submodule u = projective_trace(cur, cls);
    if (u.module->dim() != k * qh.delta(l)->dim()) return std::nullopt;
    mult[l] += k;
    cur = quotient_module(cur, u.space).module;
  }
  return mult;
}

bool in_F_delta(const ModulePtr& m, const QHStructure& qh) {
  for (std::size_t l = 0; l < qh.size(); ++l)
    if (ext_dim(m, qh.nabla(l), 1)) return false;
  return true;
}

bool in_F_nabla(const ModulePtr& m, const QHStructure& qh) {
  for (std::size_t l = 0; l < qh.size(); ++l)
    if (ext_dim(qh.delta(l), m, 1)) return false;
  return true;
}

std::vector<std::size_t> delta_multiplicities(const ModulePtr& m, const QHStructure& qh) {
  std::vector<std::size_t> out;
  for (std::size_t l = 0; l < qh.size(); ++l) out.push_back(hom_dim(m, qh.nabla(l)));
  return out;
}

std::vector<std::size_t> nabla_multiplicities(const ModulePtr& m, const QHStructure& qh) {
  std::vector<std::size_t> out;
  for (std::size_t l = 0; l < qh.size(); ++l) out.push_back(hom_dim(qh.delta(l), m));
  return out;
}

namespace {

void fail(QHReport& r, int axiom, const std::string& why) {
  if (!r.pass) return;
  r.pass = false;
  r.failed_axiom = axiom;
  r.detail = why;
}

}  // namespace

QHReport verify_split_qh(const QHStructure& qh) {
  QHReport r;
  const WeightPoset& p = qh.poset;
  const AlgebraPtr& a = qh.algebra;
  const std::size_t n = p.size();
  try {
    p.validate(a->idempotents().num_classes());
  } catch (const ValidationError& e) {
    fail(r, 4, e.what());
    return r;
  }
  for (std::size_t l = 0; l < n; ++l) {
    r.standard_dims.push_back(qh.delta(l)->dim());
    r.costandard_dims.push_back(qh.nabla(l)->dim());
  }
  r.hom_delta_delta.assign(n, std::vector<std::size_t>(n, 0));
  r.hom_delta_nabla = r.ext1_delta_nabla = r.hom_delta_delta;
  for (std::size_t l = 0; l < n; ++l)
    for (std::size_t m = 0; m < n; ++m) {
      std::size_t h = hom_dim(qh.delta(l), qh.delta(m));
      r.hom_delta_delta[l][m] = h;
      if (l != m && h && !p.le(l, m)) fail(r, 1, "Hom(Delta(" + p.labels[l] + "), Delta(" + p.labels[m] + ")) != 0");
    }
  for (std::size_t l = 0; l < n; ++l)
    if (r.hom_delta_delta[l][l] != 1) fail(r, 2, "End(Delta(" + p.labels[l] + ")) is not the field");
  for (std::size_t l = 0; l < n; ++l) {
    auto mult = delta_filtration(qh.standard_kernel[l], qh);
    bool ok = mult.has_value();
    for (std::size_t m = 0; ok && m < n; ++m)
      if ((*mult)[m] && !p.lt(l, m)) ok = false;
    if (!ok) fail(r, 3, "C(" + p.labels[l] + ") has no filtration by higher standards");
  }
  std::size_t total = 0;
  const auto& id = a->idempotents();
  for (std::size_t l = 0; l < n; ++l) total += id.class_size[p.simple_of[l]] * qh.proj[l]->dim();
  if (total != a->dim()) fail(r, 4, "projectives do not add up to the regular module");
  for (std::size_t m = 0; m < n; ++m)
    for (std::size_t l = 0; l < n; ++l) {
      r.hom_delta_nabla[m][l] = hom_dim(qh.delta(m), qh.nabla(l));
      r.ext1_delta_nabla[m][l] = ext_dim(qh.delta(m), qh.nabla(l), 1);
      if (r.hom_delta_nabla[m][l] != (l == m ? 1u : 0u) || r.ext1_delta_nabla[m][l])
        fail(r, 5, "orthogonality fails at (" + p.labels[m] + ", " + p.labels[l] + ")");
    }
  return r;
}

QHReport verify_split_qh(const AlgebraPtr& a, const WeightPoset& p) {
  try {
    return verify_split_qh(qh_structure(a, p));
  } catch (const ValidationError& e) {
    QHReport r;
    fail(r, 4, e.what());
    return r;
  }
}

std::vector<Matrix> ext1_cocycles(const ModulePtr& d, const ModulePtr& x) {
  require_same_algebra(*x, *d, "ext1_cocycles");
  const Field& f = x->field();
  const ProjectiveCover& c = projective_cover(d);
  const Submodule& om = syzygy(d);
  auto h_om = hom_space(om.module, x);
  if (h_om->dim() == 0) return {};
  auto h_p = hom_space(c.p0, x);
  Matrix res(f, h_om->dim(), h_p->dim());
  for (std::size_t k = 0; k < h_p->dim(); ++k) res.set_block(0, k, h_om->coords((*h_p)[k] * om.inclusion));
  QuotientSpace ext = quotient_space(column_space(res), h_om->dim());
  std::vector<Matrix> out;
  for (auto r : ext.free_rows) out.push_back((*h_om)[r]);
  return out;
}

UniversalExtension extension_from_cocycles(const ModulePtr& x, const ModulePtr& d, const std::vector<Matrix>& cocycles) {
  const Field& f = x->field();
  UniversalExtension out{x, Matrix::identity(f, x->dim()), 0};
  const std::size_t e = cocycles.size();
  if (e == 0) return out;
  const ProjectiveCover& c = projective_cover(d);
  const Submodule& om = syzygy(d);
  const std::size_t dx = x->dim(), dp = c.p0->dim(), dw = om.module->dim();
  std::vector<ModulePtr> parts{x};
  for (std::size_t k = 0; k < e; ++k) parts.push_back(c.p0);
  ModulePtr amb = direct_sum(parts);
  Matrix rel(f, dx + e * dp, e * dw);
  Matrix neg_incl = om.inclusion.scaled(Scalar(f, -1));
  for (std::size_t k = 0; k < e; ++k) {
    rel.set_block(0, k * dw, cocycles[k]);
    rel.set_block(dx + k * dp, k * dw, neg_incl);
  }
  QuotientModule q = cokernel(ModuleMap{power(om.module, e), amb, rel});
  out.module = q.module;
  out.embedding = q.projection.block(0, 0, q.module->dim(), dx);
  out.copies = e;
  return out;
}

UniversalExtension universal_extension(const ModulePtr& x, const ModulePtr& d) {
  return extension_from_cocycles(x, d, ext1_cocycles(d, x));
}

Tilting characteristic_tilting(const QHStructure& qh) {
  const WeightPoset& p = qh.poset;
  const std::size_t n = p.size();
  const auto order = p.decreasing_order();
  const std::size_t guard = n * std::max<std::size_t>(qh.algebra->dim(), 1);
  Tilting t;
  for (std::size_t l = 0; l < n; ++l) {
    ModulePtr x = qh.delta(l);
    std::size_t steps = 0;
    bool changed = true;
    while (changed) {
      changed = false;
      for (auto m : order) {
        if (!p.lt(m, l)) continue;
        if (!ext_dim(qh.delta(m), x, 1)) continue;
        x = universal_extension(x, qh.delta(m)).module;
        changed = true;
        if (++steps > guard) throw InternalError("tilting construction does not terminate");
      }
    }
    const std::size_t cls = p.simple_of[l];
    ModulePtr pick;
    for (const auto& s : decompose(x)) {
      if (!dimension_vector(s.module)[cls]) continue;
      if (pick) throw InternalError("two summands contain Delta(" + p.labels[l] + ")");
      pick = s.module;
    }
    if (!pick) throw InternalError("no summand contains Delta(" + p.labels[l] + ")");
    if (!in_F_delta(pick, qh) || !in_F_nabla(pick, qh))
      throw InternalError("T(" + p.labels[l] + ") is not in F(Delta) and F(nabla)");
    t.summands.push_back(pick);
    t.delta_mult.push_back(delta_multiplicities(pick, qh));
    t.nabla_mult.push_back(nabla_multiplicities(pick, qh));
    t.extension_steps.push_back(steps);
  }
  t.module = direct_sum(t.summands);
  return t;
}

RingelDual ringel_dual(const QHStructure& qh, const Tilting& t) {
  RingelDual rd;
  rd.tilting = t.module;
  auto ed = end_algebra(t.module);
  rd.algebra = ed->b;
  const std::size_t n = qh.size();
  WeightPoset rp = qh.poset.reversed();
  for (std::size_t l = 0; l < n; ++l) {
    rd.hom_standards.push_back(hom_module(t.module, qh.nabla(l)).module);
    auto tm = top_multiplicities(rd.hom_standards.back());
    std::size_t hits = 0;
    for (std::size_t c = 0; c < tm.size(); ++c)
      if (tm[c]) rp.simple_of[l] = c, hits += tm[c];
    if (hits != 1) {
      fail(rd.report, 4, "Hom(T, nabla(" + qh.poset.labels[l] + ")) does not have a simple top");
      return rd;
    }
  }
  try {
    rd.qh = qh_structure(rd.algebra, rp);
  } catch (const ValidationError& e) {
    fail(rd.report, 4, e.what());
    return rd;
  }
  rd.report = verify_split_qh(rd.qh);
  for (std::size_t l = 0; l < n && rd.report.pass; ++l)
    if (!is_isomorphic(rd.qh.delta(l), rd.hom_standards[l]))
      fail(rd.report, 6, "standard " + rp.labels[l] + " differs from Hom(T, nabla)");
  return rd;
}

RingelDual ringel_dual(const QHStructure& qh) { return ringel_dual(qh, characteristic_tilting(qh)); }

MoritaInvariants morita_invariants(const QHStructure& qh) {
  MoritaInvariants mi;
  const std::size_t n = qh.size();
  mi.cartan.assign(n, std::vector<std::size_t>(n, 0));
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t t = 0; t < n; ++t) {
      mi.cartan[s][t] = hom_dim(qh.proj[s], qh.proj[t]);
      mi.basic_dim += mi.cartan[s][t];
    }
  for (const auto& d : qh.standard) mi.delta_dims.push_back(d->dim());
  std::sort(mi.delta_dims.begin(), mi.delta_dims.end());
  return mi;
}

bool same_morita_invariants(const MoritaInvariants& a, const MoritaInvariants& b) {
  if (a.basic_dim != b.basic_dim || a.delta_dims != b.delta_dims || a.cartan.size() != b.cartan.size()) return false;
  const std::size_t n = a.cartan.size();
  std::vector<std::size_t> pi(n);
  std::iota(pi.begin(), pi.end(), 0);
  do {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i)
      for (std::size_t j = 0; j < n && ok; ++j) ok = a.cartan[i][j] == b.cartan[pi[i]][pi[j]];
    if (ok) return true;
  } while (std::next_permutation(pi.begin(), pi.end()));
  return false;
}

ModulePtr descend(const ModulePtr& m, const QuotientAlgebra& q) {
  const ColumnBasis& j = q.space.sub;
  for (std::size_t c = 0; c < j.dim(); ++c)
    if (!m->act_elem(j.basis.col(c)).is_zero()) throw UsageError("descend: module is not killed by the ideal");
  std::vector<Matrix> act;
  for (auto r : q.space.free_rows) act.push_back(m->act(r));
  return Module::make(q.algebra, std::move(act));
}

ModulePtr inflate(const ModulePtr& m, const AlgebraPtr& a, const QuotientAlgebra& q) {
  std::vector<Matrix> act;
  for (std::size_t i = 0; i < a->dim(); ++i) act.push_back(m->act_elem(q.project(a->basis_element(i))));
  return Module::make(a, std::move(act));
}

HeredityQuotient split_heredity_quotient(const QHStructure& qh, std::size_t label) {
  const WeightPoset& p = qh.poset;
  const AlgebraPtr& a = qh.algebra;
  const Field& f = a->field();
  if (label >= p.size()) throw UsageError("split_heredity_quotient: label out of range");
  for (std::size_t m = 0; m < p.size(); ++m)
    if (p.lt(label, m)) throw UsageError("split_heredity_quotient: " + p.labels[label] + " is not maximal");
  const std::size_t cls = p.simple_of[label];
  Submodule j = projective_trace(regular_module(a), cls);
  const std::size_t dj = j.module->dim();
  std::vector<Matrix> right_images{j.space.basis};
  for (std::size_t b = 0; b < a->dim(); ++b) right_images.push_back(a->right(b) * j.space.basis);
  if (column_space(f, a->dim(), right_images).dim() != dj) throw ValidationError("trace ideal is not two-sided");
  if (ideal_product(*a, j.space, j.space).dim() != dj) throw ValidationError("trace ideal is not idempotent");
  if (projective_cover(j.module).p0->dim() != dj) throw ValidationError("trace ideal is not projective");
  const std::size_t dp = qh.proj[label]->dim();
  if (dj % dp != 0) throw ValidationError("trace ideal is not a sum of copies of P(" + p.labels[label] + ")");
  const std::size_t k = dj / dp;
  if (hom_dim(j.module, j.module) != k * k) throw ValidationError("End(J) is not a full matrix algebra");

  HeredityQuotient hq;
  hq.ideal = j.space;
  hq.quotient = quotient_algebra(a, j.space);
  for (std::size_t m = 0; m < p.size(); ++m)
    if (m != label) hq.kept.push_back(m);
  WeightPoset np;
  const std::size_t n = hq.kept.size();
  np.less.assign(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) {
    np.labels.push_back(p.labels[hq.kept[i]]);
    for (std::size_t t = 0; t < n; ++t) np.less[i][t] = p.lt(hq.kept[i], hq.kept[t]);
    auto tm = top_multiplicities(descend(simple(a, p.simple_of[hq.kept[i]]), hq.quotient));
    np.simple_of.push_back(static_cast<std::size_t>(std::find(tm.begin(), tm.end(), 1) - tm.begin()));
  }
  if (n == 0) {
    hq.qh.algebra = hq.quotient.algebra;
    hq.qh.poset = np;
    return hq;
  }
  hq.qh = qh_structure(hq.quotient.algebra, np);
  return hq;
}

}  // namespace relqh
