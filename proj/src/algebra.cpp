#include "relqh/algebra.hpp"

#include <algorithm>
#include <unordered_map>

namespace relqh {

const char* provenance_name(Provenance p) {
  switch (p) {
    case Provenance::Raw: return "raw";
    case Provenance::Quiver: return "quiver";
    case Provenance::Centralizer: return "centralizer";
    case Provenance::Product: return "product";
    case Provenance::Corner: return "corner";
    case Provenance::Quotient: return "quotient";
    case Provenance::Opposite: return "opposite";
    case Provenance::Endomorphism: return "endomorphism";
  }
  return "raw";
}

std::shared_ptr<Algebra> Algebra::from_left_matrices(const Field& f, std::vector<Matrix> left, Matrix one,
                                                     Provenance prov, bool validate) {
  const std::size_t n = left.size();
  for (const auto& m : left)
    if (m.rows() != n || m.cols() != n || m.field() != f)
      throw ValidationError("structure tensor has inconsistent shape");
  if (one.rows() != n || one.cols() != 1) throw ValidationError("unit vector has wrong length");
  std::shared_ptr<Algebra> a(new Algebra());
  a->f_ = f;
  a->dim_ = n;
  a->left_ = std::move(left);
  a->one_ = std::move(one);
  a->prov_ = prov;
  if (validate) a->validate();
  return a;
}

AlgebraPtr Algebra::from_structure_constants(
    const Field& f, std::size_t dim,
    const std::vector<std::tuple<std::size_t, std::size_t, std::size_t, Scalar>>& mult, const Matrix& one) {
  std::vector<Matrix> left(dim, Matrix(f, dim, dim));
  for (const auto& [i, j, k, c] : mult) {
    if (i >= dim || j >= dim || k >= dim) throw ValidationError("structure constant index out of range");
    left[i].set(k, j, left[i].at(k, j) + c);
  }
  return from_left_matrices(f, std::move(left), one, Provenance::Raw, true);
}

const Matrix& Algebra::right(std::size_t j) const {
  std::call_once(right_once_, [this] {
    right_.assign(dim_, Matrix(f_, dim_, dim_));
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t jj = 0; jj < dim_; ++jj)
        for (std::size_t k = 0; k < dim_; ++k)
          if (!left_[i].is_zero_at(k, jj)) right_[jj].set(k, i, left_[i].at(k, jj));
  });
  return right_[j];
}

Matrix Algebra::mul(const Matrix& x, const Matrix& y) const {
  Matrix acc(f_, dim_, 1);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (x.is_zero_at(i, 0)) continue;
    acc.add_scaled(left_[i] * y, x.at(i, 0));
  }
  return acc;
}

Matrix Algebra::left_matrix(const Matrix& x) const {
  Matrix acc(f_, dim_, dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    if (!x.is_zero_at(i, 0)) acc.add_scaled(left_[i], x.at(i, 0));
  return acc;
}

Matrix Algebra::right_matrix(const Matrix& x) const {
  Matrix acc(f_, dim_, dim_);
  for (std::size_t j = 0; j < dim_; ++j)
    if (!x.is_zero_at(j, 0)) acc.add_scaled(right(j), x.at(j, 0));
  return acc;
}

void Algebra::validate() const {
  const Matrix id = Matrix::identity(f_, dim_);
  if (left_matrix(one_) != id || right_matrix(one_) != id) {
    for (std::size_t k = 0; k < dim_; ++k) {
      Matrix bk = basis_element(k);
      if (mul(one_, bk) != bk || mul(bk, one_) != bk)
        throw ValidationError("unit axiom fails on basis element " + std::to_string(k));
    }
  }
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) {
      Matrix lhs = left_matrix(left_[i].col(j));  // L_{b_i b_j}
      Matrix rhs = left_[i] * left_[j];
      if (lhs == rhs) continue;
      for (std::size_t k = 0; k < dim_; ++k)
        if (lhs.col(k) != rhs.col(k))
          throw ValidationError("associativity fails on basis triple (" + std::to_string(i) + "," +
                                std::to_string(j) + "," + std::to_string(k) + ")");
    }
}

const std::vector<Matrix>& Algebra::faithful_rep() const { return rep_given_ ? rep_ : left_; }

void Algebra::set_faithful_rep(std::vector<Matrix> rep) {
  if (rep.size() != dim_) throw UsageError("faithful representation has wrong length");
  rep_ = std::move(rep);
  rep_given_ = true;
}

void Algebra::set_idempotent_hint(std::vector<Matrix> idem) { hint_ = std::move(idem); }

std::uint64_t Algebra::fingerprint() const {
  std::uint64_t h = 1469598103934665603ULL ^ dim_;
  for (const auto& m : left_) h = (h ^ m.fingerprint()) * 1099511628211ULL;
  h = (h ^ one_.fingerprint()) * 1099511628211ULL;
  return h;
}

bool same_algebra(const Algebra& a, const Algebra& b) {
  if (&a == &b) return true;
  if (a.field() != b.field() || a.dim() != b.dim()) return false;
  if (a.one() != b.one()) return false;
  for (std::size_t i = 0; i < a.dim(); ++i)
    if (a.left(i) != b.left(i)) return false;
  return true;
}

// ---- quiver algebras ----

namespace {

using Path = std::vector<int>;  // arrow indices, leftmost applied last

struct DegreeTable {
  std::vector<Path> paths;                  // ascending lexicographic
  std::map<Path, std::size_t> index;
  std::vector<std::size_t> reps;            // path indices kept as basis
  std::vector<long> rep_pos;                // path index -> position in reps or -1
  Matrix ideal_rows;                        // RREF rows over reversed path order
  std::vector<long> row_of_pivot;           // path index -> RREF row or -1
};

int path_target(const Path& p, const QuiverPresentation& q) { return q.arrows[p.front()].to; }
int path_source(const Path& p, const QuiverPresentation& q) { return q.arrows[p.back()].from; }

}  // namespace

AlgebraPtr from_quiver(const QuiverPresentation& q, const Field& f, std::size_t degree_cap) {
  if (q.vertices <= 0) throw ValidationError("quiver needs at least one vertex");
  std::map<std::string, int> arrow_id;
  for (std::size_t a = 0; a < q.arrows.size(); ++a) {
    const auto& ar = q.arrows[a];
    if (ar.from < 0 || ar.to < 0 || ar.from >= q.vertices || ar.to >= q.vertices)
      throw ValidationError("arrow " + ar.name + " has an endpoint out of range");
    if (!arrow_id.emplace(ar.name, static_cast<int>(a)).second)
      throw ValidationError("duplicate arrow name " + ar.name);
  }
  // Parse relations into (degree, list of (path, coeff)).
  struct Rel {
    std::size_t degree;
    std::vector<std::pair<Path, Scalar>> terms;
  };
  std::vector<Rel> rels;
  for (const auto& rel : q.relations) {
    if (rel.empty()) continue;
    Rel r{0, {}};
    for (const auto& t : rel) {
      Path p;
      for (const auto& nm : t.path) {
        auto it = arrow_id.find(nm);
        if (it == arrow_id.end()) throw ValidationError("relation uses unknown arrow " + nm);
        p.push_back(it->second);
      }
      if (p.size() < 2) throw ValidationError("relation paths must have length at least 2");
      for (std::size_t w = 0; w + 1 < p.size(); ++w)
        if (q.arrows[p[w]].from != q.arrows[p[w + 1]].to)
          throw ValidationError("relation path is not composable");
      if (r.degree == 0) r.degree = p.size();
      if (p.size() != r.degree) throw UsageError("inhomogeneous relation: unsupported");
      r.terms.emplace_back(p, Scalar::parse(f, t.coeff));
    }
    rels.push_back(std::move(r));
  }

  std::vector<DegreeTable> deg;  // index = degree, starting at 1
  deg.emplace_back();            // degree 0 placeholder
  // degree 1
  {
    DegreeTable t;
    for (std::size_t a = 0; a < q.arrows.size(); ++a) t.paths.push_back({static_cast<int>(a)});
    std::sort(t.paths.begin(), t.paths.end());
    for (std::size_t i = 0; i < t.paths.size(); ++i) t.index[t.paths[i]] = i;
    t.rep_pos.assign(t.paths.size(), -1);
    t.row_of_pivot.assign(t.paths.size(), -1);
    for (std::size_t i = 0; i < t.paths.size(); ++i) {
      t.rep_pos[i] = static_cast<long>(t.reps.size());
      t.reps.push_back(i);
    }
    t.ideal_rows = Matrix(f, 0, t.paths.size());
    deg.push_back(std::move(t));
  }
  const std::size_t path_limit = 200000;
  std::size_t maxdeg = q.arrows.empty() ? 0 : 1;
  if (!q.arrows.empty()) {
    for (std::size_t d = 2;; ++d) {
      if (deg[d - 1].reps.empty()) {
        maxdeg = d - 2;
        break;
      }
      if (d > degree_cap) throw NotFiniteDimensional("quiver algebra is not finite-dimensional (degree cap reached)");
      DegreeTable t;
      for (const auto& p : deg[d - 1].paths)
        for (std::size_t a = 0; a < q.arrows.size(); ++a)
          if (q.arrows[a].from == path_target(p, q)) {
            Path np;
            np.push_back(static_cast<int>(a));
            np.insert(np.end(), p.begin(), p.end());
            t.paths.push_back(std::move(np));
          }
      if (t.paths.size() > path_limit) throw UsageError("quiver presentation too large for path enumeration");
      std::sort(t.paths.begin(), t.paths.end());
      const std::size_t np = t.paths.size();
      for (std::size_t i = 0; i < np; ++i) t.index[t.paths[i]] = i;
      auto col_of = [np](std::size_t idx) { return np - 1 - idx; };
      std::vector<Matrix> gen_rows;
      const DegreeTable& prev = deg[d - 1];
      const std::size_t pn = prev.paths.size();
      for (std::size_t r = 0; r < prev.ideal_rows.rows(); ++r) {
        for (std::size_t a = 0; a < q.arrows.size(); ++a) {
          Matrix left_row(f, 1, np), right_row(f, 1, np);
          bool lnz = false, rnz = false;
          for (std::size_t c = 0; c < pn; ++c) {
            if (prev.ideal_rows.is_zero_at(r, c)) continue;
            const Path& w = prev.paths[pn - 1 - c];
            Scalar s = prev.ideal_rows.at(r, c);
            if (q.arrows[a].from == path_target(w, q)) {
              Path x{static_cast<int>(a)};
              x.insert(x.end(), w.begin(), w.end());
              std::size_t cc = col_of(t.index.at(x));
              left_row.set(0, cc, left_row.at(0, cc) + s);
              lnz = true;
            }
            if (q.arrows[a].to == path_source(w, q)) {
              Path x = w;
              x.push_back(static_cast<int>(a));
              std::size_t cc = col_of(t.index.at(x));
              right_row.set(0, cc, right_row.at(0, cc) + s);
              rnz = true;
            }
          }
          if (lnz) gen_rows.push_back(left_row);
          if (rnz) gen_rows.push_back(right_row);
        }
      }
      for (const auto& rel : rels) {
        if (rel.degree != d) continue;
        Matrix row(f, 1, np);
        for (const auto& [p, c] : rel.terms) {
          std::size_t cc = col_of(t.index.at(p));
          row.set(0, cc, row.at(0, cc) + c);
        }
        gen_rows.push_back(row);
      }
      Echelon e = rref(gen_rows.empty() ? Matrix(f, 0, np) : Matrix::vstack(f, np, gen_rows));
      t.ideal_rows = e.r.block(0, 0, e.pivots.size(), np);
      t.rep_pos.assign(np, -1);
      t.row_of_pivot.assign(np, -1);
      for (std::size_t k = 0; k < e.pivots.size(); ++k) t.row_of_pivot[np - 1 - e.pivots[k]] = static_cast<long>(k);
      for (std::size_t i = 0; i < np; ++i)
        if (t.row_of_pivot[i] < 0) {
          t.rep_pos[i] = static_cast<long>(t.reps.size());
          t.reps.push_back(i);
        }
      deg.push_back(std::move(t));
    }
  }

  // Basis: vertices, then representatives by degree.
  const std::size_t m = static_cast<std::size_t>(q.vertices);
  std::vector<std::size_t> offset(maxdeg + 2, 0);
  std::size_t n = m;
  for (std::size_t d = 1; d <= maxdeg; ++d) {
    offset[d] = n;
    n += deg[d].reps.size();
  }
  std::vector<Path> basis_path(n);
  std::vector<std::string> labels(n);
  for (std::size_t v = 0; v < m; ++v) labels[v] = "e" + std::to_string(v + 1);
  for (std::size_t d = 1; d <= maxdeg; ++d)
    for (std::size_t r = 0; r < deg[d].reps.size(); ++r) {
      const Path& p = deg[d].paths[deg[d].reps[r]];
      basis_path[offset[d] + r] = p;
      std::string s;
      for (int a : p) s += q.arrows[a].name;
      labels[offset[d] + r] = s;
    }
  auto normal_form = [&](const Path& p, Matrix& out, std::size_t col_unused) {
    (void)col_unused;
    std::size_t d = p.size();
    if (d > maxdeg) return;
    const DegreeTable& t = deg[d];
    std::size_t idx = t.index.at(p);
    if (t.rep_pos[idx] >= 0) {
      out.set_int(offset[d] + t.rep_pos[idx], 0, 1);
      return;
    }
    std::size_t row = static_cast<std::size_t>(t.row_of_pivot[idx]);
    const std::size_t np = t.paths.size();
    for (std::size_t c = 0; c < np; ++c) {
      std::size_t pi = np - 1 - c;
      if (pi == idx || t.ideal_rows.is_zero_at(row, c)) continue;
      out.set(offset[d] + t.rep_pos[pi], 0, -t.ideal_rows.at(row, c));
    }
  };
  auto src = [&](std::size_t b) -> int { return b < m ? static_cast<int>(b) : path_source(basis_path[b], q); };
  auto tgt = [&](std::size_t b) -> int { return b < m ? static_cast<int>(b) : path_target(basis_path[b], q); };

  std::vector<Matrix> left(n, Matrix(f, n, n));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      if (src(x) != tgt(y)) continue;
      Matrix col(f, n, 1);
      if (x < m) {
        col.set_int(y, 0, 1);
      } else if (y < m) {
        col.set_int(x, 0, 1);
      } else {
        Path cat = basis_path[x];
        cat.insert(cat.end(), basis_path[y].begin(), basis_path[y].end());
        normal_form(cat, col, 0);
      }
      left[x].set_block(0, y, col);
    }
  Matrix one(f, n, 1);
  for (std::size_t v = 0; v < m; ++v) one.set_int(v, 0, 1);
  auto alg = Algebra::from_left_matrices(f, std::move(left), one, Provenance::Quiver, false);
  alg->basis_labels = labels;
  std::vector<Matrix> hint;
  for (std::size_t v = 0; v < m; ++v) hint.push_back(Matrix::unit_vector(f, n, v));
  alg->set_idempotent_hint(hint);
  return alg;
}

AlgebraPtr opposite(const AlgebraPtr& a) {
  std::lock_guard<std::mutex> g(a->op_mu_);
  if (auto back = a->op_weak_.lock()) return back;
  if (a->op_strong_) return a->op_strong_;
  std::vector<Matrix> left;
  for (std::size_t i = 0; i < a->dim(); ++i) left.push_back(a->right(i));
  auto op = Algebra::from_left_matrices(a->field(), std::move(left), a->one(), Provenance::Opposite, false);
  op->basis_labels = a->basis_labels;
  if (a->rep_given_) {
    std::vector<Matrix> rep;
    for (const auto& r : a->faithful_rep()) rep.push_back(r.transpose());
    op->set_faithful_rep(rep);
  }
  op->set_idempotent_hint(a->idempotent_hint());
  op->op_weak_ = a;
  a->op_strong_ = op;
  return op;
}

AlgebraPtr direct_product(const AlgebraPtr& a, const AlgebraPtr& b) {
  if (a->field() != b->field()) throw UsageError("direct_product: field mismatch");
  const Field& f = a->field();
  const std::size_t da = a->dim(), db = b->dim(), n = da + db;
  std::vector<Matrix> left;
  for (std::size_t i = 0; i < da; ++i) left.push_back(Matrix::block_diag(f, {a->left(i), Matrix(f, db, db)}));
  for (std::size_t i = 0; i < db; ++i) left.push_back(Matrix::block_diag(f, {Matrix(f, da, da), b->left(i)}));
  Matrix one = Matrix::vstack(f, 1, {a->one(), b->one()});
  auto p = Algebra::from_left_matrices(f, std::move(left), one, Provenance::Product, false);
  for (std::size_t i = 0; i < da; ++i)
    p->basis_labels.push_back("L:" + (i < a->basis_labels.size() ? a->basis_labels[i] : std::to_string(i)));
  for (std::size_t i = 0; i < db; ++i)
    p->basis_labels.push_back("R:" + (i < b->basis_labels.size() ? b->basis_labels[i] : std::to_string(i)));
  const auto& ra = a->faithful_rep();
  const auto& rb = b->faithful_rep();
  std::size_t na = da ? ra[0].rows() : 0, nb = db ? rb[0].rows() : 0;
  if (na + nb < n) {
    std::vector<Matrix> rep;
    for (std::size_t i = 0; i < da; ++i) rep.push_back(Matrix::block_diag(f, {ra[i], Matrix(f, nb, nb)}));
    for (std::size_t i = 0; i < db; ++i) rep.push_back(Matrix::block_diag(f, {Matrix(f, na, na), rb[i]}));
    p->set_faithful_rep(rep);
  }
  if ((da == 0 || !a->idempotent_hint().empty()) && (db == 0 || !b->idempotent_hint().empty())) {
    std::vector<Matrix> hint;
    for (const auto& e : a->idempotent_hint()) hint.push_back(Matrix::vstack(f, 1, {e, Matrix(f, db, 1)}));
    for (const auto& e : b->idempotent_hint()) hint.push_back(Matrix::vstack(f, 1, {Matrix(f, da, 1), e}));
    p->set_idempotent_hint(hint);
  }
  return p;
}

CornerAlgebra corner_algebra(const AlgebraPtr& a, const Matrix& e) {
  if (e.rows() != a->dim() || e.cols() != 1) throw UsageError("corner_algebra: element has wrong shape");
  if (!a->is_idempotent(e)) throw UsageError("corner_algebra: element is not idempotent");
  const Field& f = a->field();
  CornerAlgebra c;
  c.idempotent = e;
  if (e == a->one()) {
    c.algebra = a;
    c.inclusion = Matrix::identity(f, a->dim());
    c.space = column_space(c.inclusion);
    return c;
  }
  c.space = column_space(a->left_matrix(e) * a->right_matrix(e));
  const std::size_t s = c.space.dim();
  c.inclusion = c.space.basis;
  std::vector<Matrix> left;
  for (std::size_t x = 0; x < s; ++x) {
    Matrix lx = a->left_matrix(c.space.basis.col(x)) * c.space.basis;
    left.push_back(lx.select_rows(c.space.pivot_rows));
  }
  Matrix one = c.space.coords(e);
  auto alg = Algebra::from_left_matrices(f, std::move(left), one, Provenance::Corner, false);
  for (std::size_t x = 0; x < s; ++x) {
    std::size_t r = c.space.pivot_rows[x];
    alg->basis_labels.push_back(r < a->basis_labels.size() ? a->basis_labels[r] : std::to_string(r));
  }
  const auto& rep = a->faithful_rep();
  if (a->dim() && rep[0].rows() < a->dim()) {
    Matrix re(f, rep[0].rows(), rep[0].rows());
    for (std::size_t t = 0; t < a->dim(); ++t)
      if (!e.is_zero_at(t, 0)) re.add_scaled(rep[t], e.at(t, 0));
    ColumnBasis ev = column_space(re);
    if (ev.dim() < s) {
      std::vector<Matrix> sub;
      for (std::size_t x = 0; x < s; ++x) {
        Matrix rx(f, rep[0].rows(), rep[0].rows());
        for (std::size_t t = 0; t < a->dim(); ++t)
          if (!c.space.basis.is_zero_at(t, x)) rx.add_scaled(rep[t], c.space.basis.at(t, x));
        sub.push_back((rx * ev.basis).select_rows(ev.pivot_rows));
      }
      alg->set_faithful_rep(sub);
    }
  }
  // Hint: corner of a sum of hinted idempotents.
  if (!a->idempotent_hint().empty()) {
    std::vector<Matrix> kept;
    Matrix sum(f, a->dim(), 1);
    for (const auto& h : a->idempotent_hint()) {
      if (a->mul(e, h) == h && a->mul(h, e) == h) {
        kept.push_back(c.space.coords(h));
        sum = sum + h;
      }
    }
    if (sum == e) alg->set_idempotent_hint(kept);
  }
  c.algebra = alg;
  return c;
}

QuotientAlgebra quotient_algebra(const AlgebraPtr& a, const ColumnBasis& ideal) {
  const Field& f = a->field();
  QuotientAlgebra q;
  q.space = quotient_space(ideal, a->dim());
  const auto& fr = q.space.free_rows;
  std::vector<Matrix> left;
  for (std::size_t x : fr) {
    Matrix cols = a->left(x).select_cols(fr);
    Matrix pr = cols.select_rows(fr);
    if (ideal.dim() > 0)
      pr.add_scaled(ideal.basis.select_rows(fr) * cols.select_rows(ideal.pivot_rows), Scalar(f, -1));
    left.push_back(pr);
  }
  auto alg = Algebra::from_left_matrices(f, std::move(left), q.space.project(a->one()), Provenance::Quotient, false);
  for (std::size_t x : fr) alg->basis_labels.push_back(x < a->basis_labels.size() ? a->basis_labels[x] : std::to_string(x));
  if (!a->idempotent_hint().empty()) {
    std::vector<Matrix> hint;
    for (const auto& h : a->idempotent_hint()) {
      Matrix ph = q.space.project(h);
      if (!ph.is_zero()) hint.push_back(ph);
    }
    alg->set_idempotent_hint(hint);
  }
  q.algebra = alg;
  return q;
}

ColumnBasis two_sided_ideal(const Algebra& a, const std::vector<Matrix>& gens) {
  const Field& f = a.field();
  std::vector<Matrix> cols;
  for (const auto& g : gens) cols.push_back(a.left_matrix(g));
  ColumnBasis right_ideal = column_space(f, a.dim(), cols);
  if (right_ideal.dim() == 0) return right_ideal;
  std::vector<Matrix> all;
  for (std::size_t i = 0; i < a.dim(); ++i) all.push_back(a.left(i) * right_ideal.basis);
  return column_space(f, a.dim(), all);
}

ColumnBasis ideal_product(const Algebra& a, const ColumnBasis& i, const ColumnBasis& k) {
  const Field& f = a.field();
  std::vector<Matrix> cols;
  if (i.dim() > 0 && k.dim() > 0)
    for (std::size_t x = 0; x < i.dim(); ++x) cols.push_back(a.left_matrix(i.basis.col(x)) * k.basis);
  return column_space(f, a.dim(), cols);
}

AlgebraPtr centralizer_algebra(const Field& f, std::size_t n, const std::vector<Matrix>& generators) {
  const std::size_t n2 = n * n;
  Matrix eqs(f, generators.size() * n2, n2);
  for (std::size_t g = 0; g < generators.size(); ++g) {
    const Matrix& gm = generators[g];
    if (gm.rows() != n || gm.cols() != n) throw UsageError("centralizer_algebra: generator has wrong size");
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) {
        std::size_t row = g * n2 + r * n + c;
        for (std::size_t t = 0; t < n; ++t) {
          if (!gm.is_zero_at(t, c)) eqs.set(row, r * n + t, eqs.at(row, r * n + t) + gm.at(t, c));
          if (!gm.is_zero_at(r, t)) eqs.set(row, t * n + c, eqs.at(row, t * n + c) - gm.at(r, t));
        }
      }
  }
  Matrix ker = generators.empty() ? Matrix::identity(f, n2) : mat_kernel(eqs);
  const std::size_t d = ker.cols();
  ColumnBasis kb = column_space(ker);
  std::vector<Matrix> basis;
  for (std::size_t x = 0; x < d; ++x) {
    Matrix m(f, n, n);
    Matrix col = kb.basis.col(x);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) m.set(r, c, col.at(r * n + c, 0));
    basis.push_back(m);
  }
  std::vector<Matrix> left(d, Matrix(f, d, d));
  for (std::size_t x = 0; x < d; ++x)
    for (std::size_t y = 0; y < d; ++y) {
      Matrix pr = (basis[x] * basis[y]).flatten();
      left[x].set_block(0, y, kb.coords(pr));
    }
  Matrix one = kb.coords(Matrix::identity(f, n).flatten());
  auto alg = Algebra::from_left_matrices(f, std::move(left), one, Provenance::Centralizer, false);
  for (std::size_t x = 0; x < d; ++x) {
    std::size_t p = kb.pivot_rows[x];
    alg->basis_labels.push_back("E[" + std::to_string(p / n) + "," + std::to_string(p % n) + "]");
  }
  alg->set_faithful_rep(basis);
  return alg;
}

}  // namespace relqh
