#include "relqh/module.hpp"

namespace relqh {

ModulePtr Module::make(AlgebraPtr a, std::vector<Matrix> action, bool validate, std::string name) {
  if (action.size() != a->dim()) throw ValidationError("module needs one action matrix per algebra basis element");
  std::size_t n = action.empty() ? 0 : action[0].rows();
  for (const auto& m : action)
    if (m.rows() != n || m.cols() != n || m.field() != a->field())
      throw ValidationError("module action matrices have inconsistent shape");
  std::shared_ptr<Module> mod(new Module());
  mod->alg_ = std::move(a);
  mod->dim_ = n;
  mod->act_ = std::move(action);
  mod->name = std::move(name);
  if (validate) mod->validate();
  return mod;
}

Matrix Module::act_elem(const Matrix& x) const {
  Matrix acc(field(), dim_, dim_);
  for (std::size_t i = 0; i < act_.size(); ++i)
    if (!x.is_zero_at(i, 0)) acc.add_scaled(act_[i], x.at(i, 0));
  return acc;
}

void Module::validate() const {
  const Algebra& a = *alg_;
  if (!act_elem(a.one()).is_identity()) throw ValidationError("unit does not act as the identity");
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) {
      Matrix lhs = act_[i] * act_[j];
      Matrix rhs = act_elem(a.left(i).col(j));
      if (lhs != rhs)
        throw ValidationError("action is not a representation on basis pair (" + std::to_string(i) + "," +
                              std::to_string(j) + ")");
    }
}

std::uint64_t Module::fingerprint() const {
  auto h = memo<std::uint64_t>("fingerprint", [this] {
    std::uint64_t v = alg_->fingerprint() ^ (dim_ * 0x9e3779b97f4a7c15ULL);
    for (const auto& m : act_) v = (v ^ m.fingerprint()) * 1099511628211ULL;
    return std::make_shared<const std::uint64_t>(v);
  });
  return *h;
}

void require_same_algebra(const Module& m, const Module& n, const char* op) {
  if (!same_algebra(*m.algebra(), *n.algebra()))
    throw UsageError(std::string(op) + ": modules are over different algebras");
}

bool ModuleMap::is_homomorphism() const {
  for (std::size_t i = 0; i < src->algebra()->dim(); ++i)
    if (m * src->act(i) != tgt->act(i) * m) return false;
  return true;
}

ModulePtr regular_module(const AlgebraPtr& a) {
  auto m = a->memo<Module>("regular", [&a] {
    std::vector<Matrix> act;
    for (std::size_t i = 0; i < a->dim(); ++i) act.push_back(a->left(i));
    return Module::make(a, std::move(act), false, "A");
  });
  return m;
}

ModulePtr zero_module(const AlgebraPtr& a) {
  std::vector<Matrix> act(a->dim(), Matrix(a->field(), 0, 0));
  return Module::make(a, std::move(act), false, "0");
}

ModulePtr direct_sum(const std::vector<ModulePtr>& parts) {
  if (parts.empty()) throw UsageError("direct_sum of nothing");
  for (const auto& p : parts) require_same_algebra(*parts[0], *p, "direct_sum");
  const AlgebraPtr& a = parts[0]->algebra();
  std::vector<Matrix> act;
  for (std::size_t i = 0; i < a->dim(); ++i) {
    std::vector<Matrix> blocks;
    for (const auto& p : parts) blocks.push_back(p->act(i));
    act.push_back(Matrix::block_diag(a->field(), blocks));
  }
  std::string nm;
  for (const auto& p : parts) nm += (nm.empty() ? "" : "+") + p->name;
  return Module::make(a, std::move(act), false, nm);
}

ModulePtr power(const ModulePtr& m, std::size_t k) {
  if (k == 0) return zero_module(m->algebra());
  return direct_sum(std::vector<ModulePtr>(k, m));
}

Submodule submodule(const ModulePtr& m, const ColumnBasis& space) {
  Submodule s;
  s.space = space;
  s.inclusion = space.basis;
  std::vector<Matrix> act;
  act.reserve(m->algebra()->dim());
  for (std::size_t i = 0; i < m->algebra()->dim(); ++i)
    act.push_back(space.dim() ? m->act(i).select_rows(space.pivot_rows) * space.basis
                              : Matrix(m->field(), 0, 0));
  s.module = Module::make(m->algebra(), std::move(act), false);
  return s;
}

Submodule generated_submodule(const ModulePtr& m, const Matrix& vectors) {
  if (vectors.cols() == 0) return submodule(m, column_space(Matrix(m->field(), m->dim(), 0)));
  std::vector<Matrix> cols;
  for (std::size_t i = 0; i < m->algebra()->dim(); ++i) cols.push_back(m->act(i) * vectors);
  return submodule(m, column_space(m->field(), m->dim(), cols));
}

QuotientModule quotient_module(const ModulePtr& m, const ColumnBasis& space) {
  QuotientModule q;
  q.space = quotient_space(space, m->dim());
  const auto& fr = q.space.free_rows;
  const Field& f = m->field();
  Matrix id = Matrix::identity(f, m->dim());
  q.projection = id.select_rows(fr);
  if (space.dim()) q.projection.add_scaled(space.basis.select_rows(fr) * id.select_rows(space.pivot_rows), Scalar(f, -1));
  std::vector<Matrix> act;
  act.reserve(m->algebra()->dim());
  for (std::size_t i = 0; i < m->algebra()->dim(); ++i) {
    Matrix cols = m->act(i).select_cols(fr);
    Matrix a = cols.select_rows(fr);
    if (space.dim()) a.add_scaled(space.basis.select_rows(fr) * cols.select_rows(space.pivot_rows), Scalar(f, -1));
    act.push_back(a);
  }
  q.module = Module::make(m->algebra(), std::move(act), false);
  return q;
}

Submodule kernel(const ModuleMap& f) { return submodule(f.src, column_space(mat_kernel(f.m))); }
Submodule image(const ModuleMap& f) { return submodule(f.tgt, column_space(f.m)); }
QuotientModule cokernel(const ModuleMap& f) { return quotient_module(f.tgt, column_space(f.m)); }

ModulePtr dual(const ModulePtr& m) {
  auto op = opposite(m->algebra());
  std::vector<Matrix> act;
  for (const auto& x : m->actions()) act.push_back(x.transpose());
  return Module::make(op, std::move(act), false, "D(" + m->name + ")");
}

namespace {
struct ProjData {
  ColumnBasis space;
  ModulePtr module;
};

std::shared_ptr<const ProjData> proj_data(const AlgebraPtr& a, std::size_t cls) {
  if (cls >= a->idempotents().num_classes()) throw UsageError("projective: class index out of range");
  return a->memo<ProjData>("proj" + std::to_string(cls), [&a, cls] {
    auto d = std::make_shared<ProjData>();
    const Matrix& e = a->idempotents().rep(cls);
    d->space = column_space(a->right_matrix(e));
    std::vector<Matrix> act;
    for (std::size_t i = 0; i < a->dim(); ++i)
      act.push_back(a->left(i).select_rows(d->space.pivot_rows) * d->space.basis);
    d->module = Module::make(a, std::move(act), false, "P(" + std::to_string(cls + 1) + ")");
    return std::shared_ptr<const ProjData>(d);
  });
}
}  // namespace

ModulePtr projective(const AlgebraPtr& a, std::size_t cls) { return proj_data(a, cls)->module; }
const ColumnBasis& projective_space(const AlgebraPtr& a, std::size_t cls) { return proj_data(a, cls)->space; }

ModulePtr injective(const AlgebraPtr& a, std::size_t cls) {
  return a->memo<Module>("inj" + std::to_string(cls), [&a, cls] {
    auto op = opposite(a);
    ModulePtr d = dual(projective(op, cls));
    auto m = Module::make(a, d->actions(), false, "I(" + std::to_string(cls + 1) + ")");
    return m;
  });
}

ModulePtr simple(const AlgebraPtr& a, std::size_t cls) {
  return a->memo<Module>("simple" + std::to_string(cls), [&a, cls] {
    ModulePtr t = top(projective(a, cls)).module;
    return Module::make(a, t->actions(), false, "S(" + std::to_string(cls + 1) + ")");
  });
}

Submodule module_radical(const ModulePtr& m) {
  const auto& gens = m->algebra()->radical_generators();
  std::vector<Matrix> cols;
  for (const auto& g : gens) cols.push_back(m->act_elem(g));
  if (cols.empty()) cols.push_back(Matrix(m->field(), m->dim(), 0));
  return submodule(m, column_space(m->field(), m->dim(), cols));
}

QuotientModule top(const ModulePtr& m) { return quotient_module(m, module_radical(m).space); }

Submodule socle(const ModulePtr& m) {
  const auto& gens = m->algebra()->radical_generators();
  std::vector<Matrix> rows;
  for (const auto& g : gens) rows.push_back(m->act_elem(g));
  Matrix stack = rows.empty() ? Matrix(m->field(), 0, m->dim()) : Matrix::vstack(m->field(), m->dim(), rows);
  return submodule(m, column_space(mat_kernel(stack)));
}

std::vector<std::size_t> dimension_vector(const ModulePtr& m) {
  const auto& id = m->algebra()->idempotents();
  std::vector<std::size_t> v;
  for (std::size_t t = 0; t < id.num_classes(); ++t) v.push_back(rank(m->act_elem(id.rep(t))));
  return v;
}

std::vector<std::size_t> top_multiplicities(const ModulePtr& m) { return dimension_vector(top(m).module); }
std::vector<std::size_t> socle_multiplicities(const ModulePtr& m) { return dimension_vector(socle(m).module); }

const ProjectiveCover& projective_cover(const ModulePtr& m) {
  auto pc = m->memo<ProjectiveCover>("cover", [&m] {
    auto c = std::make_shared<ProjectiveCover>();
    const AlgebraPtr& a = m->algebra();
    const Field& f = a->field();
    const auto& id = a->idempotents();
    Submodule rad = module_radical(m);
    std::vector<ModulePtr> parts;
    std::vector<Matrix> blocks;
    std::size_t off = 0;
    for (std::size_t t = 0; t < id.num_classes(); ++t) {
      Matrix et = m->act_elem(id.rep(t));
      ColumnBasis etm = column_space(et);
      if (etm.dim() == 0) continue;
      Matrix etr = rad.space.dim() ? et * rad.space.basis : Matrix(f, m->dim(), 0);
      Matrix both = Matrix::hstack(f, m->dim(), {etr, etm.basis});
      Echelon e = rref(both);
      const ColumnBasis& kt = projective_space(a, t);
      for (std::size_t col : e.pivots) {
        if (col < etr.cols()) continue;
        Matrix g = etm.basis.col(col - etr.cols());
        c->classes.push_back(t);
        c->gens.push_back(g);
        c->offsets.push_back(off);
        off += kt.dim();
        parts.push_back(projective(a, t));
        // columns b e_t . g for the basis of A e_t
        std::vector<Matrix> w;
        for (std::size_t i = 0; i < a->dim(); ++i) w.push_back(m->act(i) * g);
        blocks.push_back(Matrix::hstack(f, m->dim(), w) * kt.basis);
      }
    }
    c->p0 = parts.empty() ? zero_module(a) : direct_sum(parts);
    c->map = Matrix::hstack(f, m->dim(), blocks);
    if (blocks.empty()) c->map = Matrix(f, m->dim(), 0);
    if (rank(c->map) != m->dim()) throw InternalError("projective cover is not surjective");
    return std::shared_ptr<const ProjectiveCover>(c);
  });
  return *pc;
}

const Submodule& syzygy(const ModulePtr& m) {
  auto s = m->memo<Submodule>("syzygy", [&m] {
    const ProjectiveCover& c = projective_cover(m);
    return std::make_shared<const Submodule>(submodule(c.p0, column_space(mat_kernel(c.map))));
  });
  return *s;
}

std::vector<Matrix> p0_components(const ModulePtr& m, const Matrix& v) {
  const ProjectiveCover& c = projective_cover(m);
  const AlgebraPtr& a = m->algebra();
  std::vector<Matrix> out;
  for (std::size_t j = 0; j < c.classes.size(); ++j) {
    const ColumnBasis& kt = projective_space(a, c.classes[j]);
    out.push_back(kt.basis * v.block(c.offsets[j], 0, kt.dim(), 1));
  }
  return out;
}

const Relations& relations(const ModulePtr& m) {
  auto r = m->memo<Relations>("relations", [&m] {
    auto rel = std::make_shared<Relations>();
    const Submodule& om = syzygy(m);
    if (om.module->dim() == 0) return std::shared_ptr<const Relations>(rel);
    const ProjectiveCover& oc = projective_cover(om.module);
    for (std::size_t l = 0; l < oc.gens.size(); ++l) {
      rel->classes.push_back(oc.classes[l]);
      rel->rel.push_back(p0_components(m, om.inclusion * oc.gens[l]));
    }
    return std::shared_ptr<const Relations>(rel);
  });
  return *r;
}

ModuleMap injective_envelope(const ModulePtr& m) {
  ModulePtr dm = dual(m);
  const ProjectiveCover& c = projective_cover(dm);
  ModulePtr i = dual(c.p0);
  return ModuleMap{m, i, c.map.transpose()};
}

Submodule trace_submodule(const ModulePtr& x, const ModulePtr& m) {
  auto h = hom_space(x, m);
  std::vector<Matrix> cols;
  for (const auto& phi : h->basis()) cols.push_back(phi);
  if (cols.empty()) cols.push_back(Matrix(m->field(), m->dim(), 0));
  return submodule(m, column_space(m->field(), m->dim(), cols));
}

Submodule projective_trace(const ModulePtr& m, std::size_t cls) {
  Matrix e = m->act_elem(m->algebra()->idempotents().rep(cls));
  return generated_submodule(m, column_space(e).basis);
}

ModulePtr corner_module(const ModulePtr& m, const CornerAlgebra& c) {
  if (c.algebra.get() == m->algebra().get()) return m;
  ColumnBasis em = column_space(m->act_elem(c.idempotent));
  std::vector<Matrix> act;
  for (std::size_t x = 0; x < c.algebra->dim(); ++x) {
    Matrix ax = m->act_elem(c.inclusion.col(x));
    act.push_back(em.dim() ? ax.select_rows(em.pivot_rows) * em.basis : Matrix(m->field(), 0, 0));
  }
  return Module::make(c.algebra, std::move(act), false, "e" + m->name);
}

}  // namespace relqh
