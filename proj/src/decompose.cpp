#include <random>

#include "relqh/module.hpp"

namespace relqh {

namespace {

struct Piece {
  Submodule sub;
  Matrix proj;  // sub.dim x ambient.dim
};

std::vector<Piece> pieces(const ModulePtr& m) {
  std::vector<Piece> out;
  if (m->dim() == 0) return out;
  auto ed = end_algebra(m);
  const Algebra& e = *ed->e;
  if (e.dim() - e.radical().dim() == 1) {
    Matrix id = Matrix::identity(m->field(), m->dim());
    out.push_back({submodule(m, column_space(id)), id});
    return out;
  }
  for (const auto& idem : e.idempotents().primitive) {
    Matrix phi = ed->endo->combine(idem);
    ColumnBasis cb = column_space(phi);
    Piece p{submodule(m, cb), cb.coords(phi)};
    out.push_back(std::move(p));
  }
  return out;
}

bool invertible(const Matrix& m) { return m.rows() == m.cols() && rank(m) == m.rows(); }

// Isomorphism between indecomposables, if any: some g_b f_a is invertible.
std::optional<Matrix> indecomposable_iso(const ModulePtr& x, const ModulePtr& y) {
  if (x->dim() != y->dim()) return std::nullopt;
  if (dimension_vector(x) != dimension_vector(y)) return std::nullopt;
  auto xy = hom_space(x, y);
  auto yx = hom_space(y, x);
  for (const auto& f : xy->basis()) {
    if (invertible(f)) return f;
    for (const auto& g : yx->basis())
      if (invertible(g * f)) return f;
  }
  return std::nullopt;
}

}  // namespace

std::vector<Submodule> decompose(const ModulePtr& m) {
  std::vector<Submodule> out;
  for (auto& p : pieces(m)) out.push_back(std::move(p.sub));
  return out;
}

bool is_indecomposable(const ModulePtr& m) {
  if (m->dim() == 0) return false;
  const Algebra& e = *end_algebra(m)->e;
  if (e.dim() - e.radical().dim() == 1) return true;
  return e.idempotents().primitive.size() == 1;
}

std::optional<Matrix> is_isomorphic(const ModulePtr& m, const ModulePtr& n) {
  require_same_algebra(*m, *n, "is_isomorphic");
  if (m->dim() != n->dim()) return std::nullopt;
  if (m->dim() == 0) return Matrix(m->field(), 0, 0);
  if (dimension_vector(m) != dimension_vector(n)) return std::nullopt;
  auto h = hom_space(m, n);
  if (h->dim() == 0) return std::nullopt;
  std::mt19937_64 rng(0x5eed);
  const Field& f = m->field();
  for (int attempt = 0; attempt < 4; ++attempt) {
    Matrix c(f, h->dim(), 1);
    for (std::size_t i = 0; i < h->dim(); ++i) c.set_int(i, 0, static_cast<long long>(rng() % 1000003));
    Matrix phi = h->combine(c);
    if (invertible(phi)) return phi;
  }
  // certified answer from the indecomposable summands
  auto pm = pieces(m);
  auto pn = pieces(n);
  if (pm.size() != pn.size()) return std::nullopt;
  std::vector<bool> used(pn.size(), false);
  Matrix total(f, n->dim(), m->dim());
  for (const auto& x : pm) {
    bool found = false;
    for (std::size_t j = 0; j < pn.size() && !found; ++j) {
      if (used[j]) continue;
      auto iso = indecomposable_iso(x.sub.module, pn[j].sub.module);
      if (!iso) continue;
      used[j] = true;
      found = true;
      total = total + pn[j].sub.inclusion * (*iso * x.proj);
    }
    if (!found) return std::nullopt;
  }
  if (!invertible(total)) throw InternalError("is_isomorphic: assembled map is singular");
  return total;
}

}  // namespace relqh
