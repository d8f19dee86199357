#include "relqh/module.hpp"

namespace relqh {

HomSpace::HomSpace(ModulePtr src, ModulePtr tgt, std::vector<Matrix> raw) : src_(std::move(src)), tgt_(std::move(tgt)) {
  const Field& f = src_->field();
  const std::size_t r = tgt_->dim(), c = src_->dim();
  if (raw.empty() || r * c == 0) return;
  std::vector<Matrix> flat;
  for (const auto& m : raw) flat.push_back(m.flatten());
  ColumnBasis cs = column_space(f, r * c, flat);
  pivots_ = cs.pivot_rows;
  for (std::size_t k = 0; k < cs.dim(); ++k) {
    Matrix m(f, r, c);
    Matrix col = cs.basis.col(k);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j)
        if (!col.is_zero_at(i * c + j, 0)) m.set(i, j, col.at(i * c + j, 0));
    basis_.push_back(std::move(m));
  }
}

Matrix HomSpace::coords(const Matrix& phi) const {
  Matrix out(src_->field(), basis_.size(), 1);
  const std::size_t c = src_->dim();
  for (std::size_t k = 0; k < pivots_.size(); ++k) {
    std::size_t p = pivots_[k];
    if (!phi.is_zero_at(p / c, p % c)) out.set(k, 0, phi.at(p / c, p % c));
  }
  return out;
}

bool HomSpace::contains(const Matrix& phi) const { return combine(coords(phi)) == phi; }

Matrix HomSpace::combine(const Matrix& c) const {
  Matrix acc(src_->field(), tgt_->dim(), src_->dim());
  for (std::size_t k = 0; k < basis_.size(); ++k)
    if (!c.is_zero_at(k, 0)) acc.add_scaled(basis_[k], c.at(k, 0));
  return acc;
}

namespace {

std::vector<Matrix> solve_hom(const ModulePtr& m, const ModulePtr& n) {
  const AlgebraPtr& a = m->algebra();
  const Field& f = a->field();
  if (m->dim() == 0 || n->dim() == 0) return {};
  const ProjectiveCover& c = projective_cover(m);
  const Relations& rel = relations(m);
  const std::size_t k = c.gens.size();
  // unknowns n_j in e_{t_j} N
  std::vector<ColumnBasis> ej;
  std::vector<std::size_t> uoff;
  std::size_t u = 0;
  for (std::size_t j = 0; j < k; ++j) {
    ej.push_back(column_space(n->act_elem(a->idempotents().rep(c.classes[j]))));
    uoff.push_back(u);
    u += ej.back().dim();
  }
  if (u == 0) return {};
  Matrix sol;
  if (rel.rel.empty()) {
    sol = Matrix::identity(f, u);
  } else {
    std::vector<Matrix> rows;
    for (const auto& r : rel.rel) {
      std::vector<Matrix> blocks;
      for (std::size_t j = 0; j < k; ++j)
        blocks.push_back(ej[j].dim() ? n->act_elem(r[j]) * ej[j].basis : Matrix(f, n->dim(), 0));
      rows.push_back(Matrix::hstack(f, n->dim(), blocks));
    }
    sol = mat_kernel(Matrix::vstack(f, u, rows));
  }
  const std::size_t h = sol.cols();
  if (h == 0) return {};
  // A basis of M made of cover images b e_t . m_j.
  Echelon ech = rref(c.map);
  const auto& pc = ech.pivots;  // columns of P0
  Matrix mbasis = c.map.select_cols(pc);
  Matrix minv = mat_inverse(mbasis);
  // Psi columns: act_N(K_t col) E_j z_j
  Matrix psi_all(f, n->dim() * h, pc.size());  // stacked per solution
  for (std::size_t idx = 0; idx < pc.size(); ++idx) {
    std::size_t col = pc[idx];
    std::size_t j = 0;
    while (j + 1 < k && c.offsets[j + 1] <= col) ++j;
    const ColumnBasis& kt = projective_space(a, c.classes[j]);
    Matrix elem = kt.basis.col(col - c.offsets[j]);
    if (ej[j].dim() == 0) continue;
    Matrix g = n->act_elem(elem) * ej[j].basis;                 // N x dim E_j
    Matrix vals = g * sol.block(uoff[j], 0, ej[j].dim(), h);    // N x h
    for (std::size_t s = 0; s < h; ++s) psi_all.set_block(s * n->dim(), idx, vals.col(s));
  }
  std::vector<Matrix> out;
  for (std::size_t s = 0; s < h; ++s) out.push_back(psi_all.block(s * n->dim(), 0, n->dim(), pc.size()) * minv);
  return out;
}

}  // namespace

std::shared_ptr<const HomSpace> hom_space(const ModulePtr& m, const ModulePtr& n) {
  require_same_algebra(*m, *n, "hom_space");
  std::string key = "hom:" + std::to_string(n->fingerprint()) + ":" + std::to_string(n->dim());
  return m->memo<HomSpace>(key, [&] { return std::make_shared<const HomSpace>(m, n, solve_hom(m, n)); });
}

std::size_t hom_dim(const ModulePtr& m, const ModulePtr& n) { return hom_space(m, n)->dim(); }

std::shared_ptr<const EndData> end_algebra(const ModulePtr& q) {
  return q->memo<EndData>("end", [&q] {
    auto d = std::make_shared<EndData>();
    d->q = q;
    d->endo = hom_space(q, q);
    const Field& f = q->field();
    const auto& bs = d->endo->basis();
    const std::size_t h = bs.size();
    std::vector<Matrix> left(h, Matrix(f, h, h));
    for (std::size_t x = 0; x < h; ++x)
      for (std::size_t y = 0; y < h; ++y) left[x].set_block(0, y, d->endo->coords(bs[x] * bs[y]));
    Matrix one = d->endo->coords(Matrix::identity(f, q->dim()));
    auto e = Algebra::from_left_matrices(f, std::move(left), one, Provenance::Endomorphism, false);
    if (q->dim() < h) e->set_faithful_rep(bs);
    d->e = e;
    d->b = opposite(d->e);
    d->q_right = Module::make(d->e, bs, false, q->name);
    return std::shared_ptr<const EndData>(d);
  });
}

HomModule hom_module(const ModulePtr& q, const ModulePtr& m) {
  HomModule hm;
  hm.end = end_algebra(q);
  hm.hom = hom_space(q, m);
  const auto& eb = hm.end->endo->basis();
  const auto& hb = hm.hom->basis();
  const Field& f = q->field();
  std::vector<Matrix> act;
  for (std::size_t a = 0; a < eb.size(); ++a) {
    Matrix x(f, hb.size(), hb.size());
    for (std::size_t c = 0; c < hb.size(); ++c) x.set_block(0, c, hm.hom->coords(hb[c] * eb[a]));
    act.push_back(x);
  }
  hm.module = Module::make(hm.end->b, std::move(act), false, "Hom(" + q->name + "," + m->name + ")");
  return hm;
}

Tensor tensor_over(const ModulePtr& x, const ModulePtr& y, const ModulePtr& outer) {
  const AlgebraPtr& b = y->algebra();
  if (!same_algebra(*x->algebra(), *opposite(b))) throw UsageError("tensor_over: algebra mismatch");
  const Field& f = b->field();
  Tensor t;
  t.x_dim = x->dim();
  const std::size_t nx = x->dim();
  const ProjectiveCover& c = projective_cover(y);
  const Relations& rel = relations(y);
  const std::size_t k = c.gens.size();
  t.classes = c.classes;
  // sum of x e_{t_j} inside x^k; x e acts through the opposite algebra with the same coordinates
  std::vector<Matrix> sub_blocks;
  for (std::size_t j = 0; j < k; ++j) sub_blocks.push_back(column_space(x->act_elem(b->idempotents().rep(c.classes[j]))).basis);
  Matrix sub = sub_blocks.empty() ? Matrix(f, 0, 0) : Matrix::block_diag(f, sub_blocks);
  std::vector<Matrix> img_cols;
  for (const auto& r : rel.rel) {
    std::vector<Matrix> parts;
    for (std::size_t j = 0; j < k; ++j) parts.push_back(x->act_elem(r[j]));
    img_cols.push_back(Matrix::vstack(f, nx, parts));
  }
  ColumnBasis img = column_space(f, nx * k, img_cols);
  ColumnBasis subb = column_space(sub.rows() ? sub : Matrix(f, nx * k, 0));
  // tensor = subb / img
  QuotientSpace qs = quotient_space(img, nx * k);
  Matrix sub_proj = subb.dim() ? qs.project(subb.basis) : Matrix(f, qs.dim(), 0);
  ColumnBasis span = column_space(sub_proj);
  t.dim = span.dim();
  t.sub_basis = subb.basis;
  // ambient -> tensor coordinates: project to quotient, then coordinates in span
  Matrix pr = Matrix::identity(f, nx * k);
  Matrix qproj = qs.dim() ? qs.project(pr) : Matrix(f, 0, nx * k);
  t.ambient_to_tensor = t.dim ? span.coords(qproj) : Matrix(f, 0, nx * k);
  // preimages of the tensor basis, well defined modulo the relations
  t.lift = t.dim ? qs.section() * span.basis : Matrix(f, nx * k, 0);
  if (outer) {
    if (outer->dim() != nx) throw UsageError("tensor_over: outer action on a different space");
    const AlgebraPtr& a = outer->algebra();
    std::vector<Matrix> act;
    const Matrix& basis_amb = t.lift;
    for (std::size_t i = 0; i < a->dim(); ++i) {
      Matrix blk = Matrix::block_diag(f, std::vector<Matrix>(k, outer->act(i)));
      act.push_back(t.dim ? t.ambient_to_tensor * (blk * basis_amb) : Matrix(f, 0, 0));
    }
    t.module = Module::make(a, std::move(act), false, "tensor");
  }
  return t;
}

Counit counit(const ModulePtr& q, const ModulePtr& m, bool with_module) {
  Counit cu;
  HomModule hm = hom_module(q, m);
  cu.tensor = tensor_over(hm.end->q_right, hm.module, with_module ? q : nullptr);
  const Field& f = q->field();
  const ProjectiveCover& c = projective_cover(hm.module);
  const std::size_t k = c.gens.size();
  std::vector<Matrix> blocks;
  for (std::size_t j = 0; j < k; ++j) blocks.push_back(hm.hom->combine(c.gens[j]));
  Matrix ev = k ? Matrix::hstack(f, m->dim(), blocks) : Matrix(f, m->dim(), 0);
  Matrix basis_amb = cu.tensor.lift;
  cu.chi = ModuleMap{cu.tensor.module, m, ev * basis_amb};
  std::size_t r = rank(cu.chi.m);
  cu.surjective = r == m->dim();
  cu.injective = r == cu.tensor.dim;
  return cu;
}

}  // namespace relqh
