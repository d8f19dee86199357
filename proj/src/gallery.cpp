#include "relqh/gallery.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace relqh {

QuiverPresentation am_quiver(std::size_t m) {
  if (m < 1) throw UsageError("build_Am: m must be at least 1");
  QuiverPresentation q;
  q.vertices = static_cast<int>(m);
  auto a = [](std::size_t i) { return "a" + std::to_string(i); };
  auto b = [](std::size_t i) { return "b" + std::to_string(i); };
  for (std::size_t i = 1; i < m; ++i) q.arrows.push_back({a(i), static_cast<int>(i - 1), static_cast<int>(i)});
  for (std::size_t i = 1; i < m; ++i) q.arrows.push_back({b(i), static_cast<int>(i), static_cast<int>(i - 1)});
  for (std::size_t i = 1; i + 1 < m; ++i) q.relations.push_back({{{a(i + 1), a(i)}, "1"}});
  for (std::size_t i = 1; i + 1 < m; ++i) q.relations.push_back({{{b(i), b(i + 1)}, "1"}});
  if (m >= 2) q.relations.push_back({{{b(1), a(1)}, "1"}});
  for (std::size_t i = 2; i < m; ++i) q.relations.push_back({{{b(i), a(i)}, "1"}, {{a(i - 1), b(i - 1)}, "-1"}});
  return q;
}

AlgebraPtr build_Am(std::size_t m, const Field& f) { return from_quiver(am_quiver(m), f); }

std::vector<std::size_t> vertex_classes(const AlgebraPtr& a) {
  const auto& hint = a->idempotent_hint();
  if (hint.empty()) throw UsageError("vertex_classes: algebra has no vertex idempotents");
  std::vector<std::size_t> out;
  for (const auto& e : hint) {
    std::size_t found = a->idempotents().num_classes();
    for (std::size_t c = 0; c < a->idempotents().num_classes(); ++c)
      if (!simple(a, c)->act_elem(e).is_zero()) found = c;
    if (found == a->idempotents().num_classes()) throw InternalError("vertex idempotent acts as zero on every simple");
    out.push_back(found);
  }
  return out;
}

WeightPoset am_poset(const AlgebraPtr& am) {
  auto cls = vertex_classes(am);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < cls.size(); ++i) labels.push_back(std::to_string(i + 1));
  return WeightPoset::chain(std::move(labels), std::move(cls));
}

namespace {

// Reduced word s_{t_1} ... s_{t_k} of a permutation.
std::vector<std::size_t> reduced_word(std::vector<int> p) {
  std::vector<std::size_t> tail;
  for (;;) {
    std::size_t t = 0;
    while (t + 1 < p.size() && p[t] < p[t + 1]) ++t;
    if (t + 1 >= p.size()) break;
    std::swap(p[t], p[t + 1]);
    tail.push_back(t);
  }
  std::reverse(tail.begin(), tail.end());
  return tail;
}

}  // namespace

std::size_t Hecke::index_of(const std::vector<int>& perm) const {
  auto it = std::find(perms.begin(), perms.end(), perm);
  if (it == perms.end()) throw UsageError("Hecke: not a permutation of the right size");
  return static_cast<std::size_t>(it - perms.begin());
}

Hecke build_hecke(std::size_t d, const Scalar& u) {
  if (d < 1) throw UsageError("build_hecke: d must be positive");
  if (u.is_zero()) throw UsageError("build_hecke: u must be invertible");
  const Field& f = u.field();
  Hecke h;
  h.d = d;
  h.u = u;
  std::vector<int> p(d);
  for (std::size_t i = 0; i < d; ++i) p[i] = static_cast<int>(i);
  do h.perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  const std::size_t n = h.perms.size();
  std::map<std::vector<int>, std::size_t> idx;
  for (std::size_t i = 0; i < n; ++i) idx[h.perms[i]] = i;
  Scalar gap = u - u.inverse();
  // x . T_{s_t} on coefficient vectors
  auto times_s = [&](const Matrix& x, std::size_t t) {
    Matrix y(f, n, 1);
    for (std::size_t r = 0; r < n; ++r) {
      if (x.is_zero_at(r, 0)) continue;
      Scalar c = x.at(r, 0);
      std::vector<int> rs = h.perms[r];
      std::swap(rs[t], rs[t + 1]);
      std::size_t k = idx[rs];
      y.set(k, 0, y.at(k, 0) + c);
      if (h.perms[r][t] > h.perms[r][t + 1]) y.set(r, 0, y.at(r, 0) + c * gap);
    }
    return y;
  };
  std::vector<std::vector<std::size_t>> words;
  for (const auto& q : h.perms) words.push_back(reduced_word(q));
  std::vector<Matrix> left(n, Matrix(f, n, n));
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t t = 0; t < n; ++t) {
      Matrix x = Matrix::unit_vector(f, n, s);
      for (std::size_t g : words[t]) x = times_s(x, g);
      left[s].set_block(0, t, x);
    }
  auto alg = Algebra::from_left_matrices(f, std::move(left), Matrix::unit_vector(f, n, 0), Provenance::Raw, false);
  for (const auto& q : h.perms) {
    std::string lab = "T[";
    for (std::size_t i = 0; i < q.size(); ++i) lab += (i ? "," : "") + std::to_string(q[i] + 1);
    alg->basis_labels.push_back(lab + "]");
  }
  h.algebra = alg;
  for (std::size_t t = 0; t + 1 < d; ++t) {
    std::vector<int> s(d);
    for (std::size_t i = 0; i < d; ++i) s[i] = static_cast<int>(i);
    std::swap(s[t], s[t + 1]);
    h.generators.push_back(idx[s]);
  }
  return h;
}

std::size_t TensorSpace::index_of(const std::vector<int>& w) const {
  std::size_t k = 0;
  for (int x : w) k = k * n + static_cast<std::size_t>(x);
  return k;
}

TensorSpace build_tensor_space(std::size_t n, std::size_t d, const Scalar& u) {
  if (n < 1 || d < 1) throw UsageError("build_tensor_space: n and d must be positive");
  const Field& f = u.field();
  TensorSpace v;
  v.n = n;
  v.d = d;
  std::vector<int> w(d, 0);
  for (;;) {
    v.words.push_back(w);
    std::size_t p = d;
    while (p > 0 && w[p - 1] == static_cast<int>(n) - 1) w[--p] = 0;
    if (p == 0) break;
    ++w[p - 1];
  }
  Scalar gap = u - u.inverse();
  const std::size_t big = v.words.size();
  for (std::size_t t = 0; t + 1 < d; ++t) {
    Matrix r(f, big, big);
    for (std::size_t c = 0; c < big; ++c) {
      const auto& i = v.words[c];
      std::vector<int> sw = i;
      std::swap(sw[t], sw[t + 1]);
      std::size_t k = v.index_of(sw);
      if (i[t] < i[t + 1]) {
        r.set(k, c, Scalar(f, 1));
      } else if (i[t] == i[t + 1]) {
        r.set(c, c, u);
      } else {
        r.set(c, c, gap);
        r.set(k, c, Scalar(f, 1));
      }
    }
    v.generator_action.push_back(r);
  }
  return v;
}

ModulePtr tensor_space_module(const Hecke& h, const TensorSpace& v) {
  const Field& f = h.u.field();
  auto op = opposite(h.algebra);
  std::vector<Matrix> act;
  for (const auto& p : h.perms) {
    Matrix m = Matrix::identity(f, v.dim());
    for (std::size_t t : reduced_word(p)) m = v.generator_action[t] * m;
    act.push_back(m);
  }
  return Module::make(op, std::move(act), false, "V^(x)" + std::to_string(v.d));
}

std::size_t schur_dimension(std::size_t n, std::size_t d) {
  // C(n^2 + d - 1, d)
  unsigned long long num = 1;
  const std::size_t top = n * n + d - 1;
  for (std::size_t i = 1; i <= d; ++i) num = num * (top - d + i) / i;
  return static_cast<std::size_t>(num);
}

bool dominates(const std::vector<int>& a, const std::vector<int>& b) {
  int sa = 0, sb = 0;
  for (std::size_t i = 0; i < std::max(a.size(), b.size()); ++i) {
    sa += i < a.size() ? a[i] : 0;
    sb += i < b.size() ? b[i] : 0;
    if (sa < sb) return false;
  }
  return true;
}

std::vector<std::vector<int>> compositions_of(std::size_t d, std::size_t parts) {
  std::vector<std::vector<int>> out;
  std::vector<int> c(parts, 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
    if (i + 1 == parts) {
      c[i] = left;
      out.push_back(c);
      return;
    }
    for (int x = left; x >= 0; --x) {
      c[i] = x;
      rec(i + 1, left - x);
    }
  };
  if (parts == 0) return out;
  rec(0, static_cast<int>(d));
  return out;
}

std::vector<std::vector<int>> partitions_of(std::size_t d, std::size_t parts) {
  std::vector<std::vector<int>> out;
  for (const auto& c : compositions_of(d, parts))
    if (std::is_sorted(c.begin(), c.end(), std::greater<int>())) out.push_back(c);
  return out;
}

std::string partition_label(const std::vector<int>& p) {
  std::string s = "(";
  bool first = true;
  for (int x : p) {
    if (x == 0) continue;
    s += (first ? "" : ",") + std::to_string(x);
    first = false;
  }
  return s + ")";
}

Matrix Schur::element(const Matrix& endo) const {
  Matrix flat = endo.flatten();
  Matrix c = flat.select_rows(pivots);
  Matrix back(algebra->field(), endo.rows(), endo.cols());
  const auto& rep = algebra->faithful_rep();
  for (std::size_t k = 0; k < rep.size(); ++k)
    if (!c.is_zero_at(k, 0)) back.add_scaled(rep[k], c.at(k, 0));
  if (back != endo) throw UsageError("Schur::element: endomorphism does not commute with the Hecke action");
  return c;
}

std::size_t Schur::weight_index(const std::vector<int>& w) const {
  auto it = std::find(weights.begin(), weights.end(), w);
  if (it == weights.end()) throw UsageError("Schur: unknown weight");
  return static_cast<std::size_t>(it - weights.begin());
}

namespace {
std::vector<int> weight_of(const std::vector<int>& word, std::size_t n) {
  std::vector<int> w(n, 0);
  for (int x : word) ++w[static_cast<std::size_t>(x)];
  return w;
}
}  // namespace

Schur build_schur(std::size_t n, std::size_t d, const Scalar& u, GalleryGuard guard) {
  std::size_t nd = 1;
  for (std::size_t i = 0; i < d; ++i) {
    nd *= n;
    if (nd > guard.max_tensor_dim) throw UsageError("build_schur: n^d exceeds the size guard");
  }
  if (schur_dimension(n, d) > guard.max_algebra_dim) throw UsageError("build_schur: dimension exceeds the size guard");
  Schur s;
  s.space = build_tensor_space(n, d, u);
  const Field& f = u.field();
  const std::size_t big = s.space.dim();
  s.algebra = centralizer_algebra(f, big, s.space.generator_action);
  const auto& rep = s.algebra->faithful_rep();
  if (rep.size() != schur_dimension(n, d)) throw InternalError("build_schur: basis size differs from the orbit count");
  std::vector<Matrix> flat;
  for (const auto& m : rep) flat.push_back(m.flatten());
  s.pivots = column_space(f, big * big, flat).pivot_rows;
  // label each basis element by the orbit of its pivot position
  std::set<std::vector<std::pair<int, int>>> seen;
  auto alg = std::const_pointer_cast<Algebra>(s.algebra);
  alg->basis_labels.clear();
  for (std::size_t p : s.pivots) {
    const auto& i = s.space.words[p / big];
    const auto& j = s.space.words[p % big];
    std::vector<std::pair<int, int>> pairs;
    for (std::size_t t = 0; t < d; ++t) pairs.push_back({i[t], j[t]});
    std::sort(pairs.begin(), pairs.end());
    if (!seen.insert(pairs).second) throw InternalError("build_schur: two basis elements share an orbit");
    std::vector<int> ci, cj;
    for (const auto& pr : pairs) ci.push_back(pr.first), cj.push_back(pr.second);
    s.labels.push_back({s.space.index_of(ci), s.space.index_of(cj)});
    std::string lab = "xi[";
    for (int x : ci) lab += std::to_string(x + 1);
    lab += ",";
    for (int x : cj) lab += std::to_string(x + 1);
    alg->basis_labels.push_back(lab + "]");
  }
  s.tensor = Module::make(s.algebra, rep, false, "V^(x)" + std::to_string(d));
  s.weights = compositions_of(d, n);
  s.partitions = partitions_of(d, n);
  for (const auto& w : s.weights) {
    Matrix proj(f, big, big);
    for (std::size_t c = 0; c < big; ++c)
      if (weight_of(s.space.words[c], n) == w) proj.set_int(c, c, 1);
    s.weight_idempotents.push_back(s.element(proj));
  }
  return s;
}

Matrix truncation_idempotent(const Schur& s, std::size_t n) {
  const std::size_t d = s.space.d;
  if (s.space.n != d) throw UsageError("truncation_idempotent: needs S(d, d)");
  if (n >= d) throw UsageError("truncation_idempotent: needs n < d");
  Matrix f(s.algebra->field(), s.algebra->dim(), 1);
  for (std::size_t k = 0; k < s.weights.size(); ++k) {
    const auto& w = s.weights[k];
    bool ok = true;
    for (std::size_t i = n; i < w.size(); ++i) ok = ok && w[i] == 0;
    if (ok) f = f + s.weight_idempotents[k];
  }
  return f;
}

SchurCorner schur_corner(const Schur& big, const Schur& small) {
  const std::size_t n = small.space.n, d = big.space.d;
  if (small.space.d != d || n >= big.space.n) throw UsageError("schur_corner: needs S(d, d) and S(n, d) with n < d");
  SchurCorner r;
  r.corner = corner_algebra(big.algebra, truncation_idempotent(big, n));
  const Field& f = big.algebra->field();
  std::vector<std::size_t> rows;
  for (std::size_t i = 0; i < big.space.dim(); ++i) {
    const auto& w = big.space.words[i];
    if (std::all_of(w.begin(), w.end(), [&](int x) { return x < static_cast<int>(n); })) rows.push_back(i);
  }
  if (rows.size() != small.space.dim()) throw InternalError("schur_corner: word count mismatch");
  const std::size_t k = r.corner.algebra->dim();
  auto image = [&](const Matrix& x) {
    Matrix endo = big.tensor->act_elem(r.corner.inclusion * x);
    return small.element(endo.select_rows(rows).select_cols(rows));
  };
  r.phi = Matrix(f, small.algebra->dim(), k);
  for (std::size_t j = 0; j < k; ++j) r.phi.set_block(0, j, image(r.corner.algebra->basis_element(j)));
  r.invertible = k == small.algebra->dim() && rank(r.phi) == k;
  r.unital = r.phi * r.corner.algebra->one() == small.algebra->one();
  r.multiplicative = true;
  for (std::size_t i = 0; i < k && r.multiplicative; ++i)
    for (std::size_t j = 0; j < k && r.multiplicative; ++j) {
      Matrix x = r.corner.algebra->basis_element(i), y = r.corner.algebra->basis_element(j);
      r.multiplicative = r.phi * r.corner.algebra->mul(x, y) == small.algebra->mul(r.phi * x, r.phi * y);
    }
  if (!r.invertible) return r;
  ModulePtr fv = corner_module(big.tensor, r.corner);
  Matrix inv = mat_inverse(r.phi);
  std::vector<Matrix> act;
  for (std::size_t j = 0; j < k; ++j) act.push_back(fv->act_elem(inv.col(j)));
  r.transported = Module::make(small.algebra, std::move(act), true, "fV");
  r.module_iso = is_isomorphic(r.transported, small.tensor).has_value();
  return r;
}

WeightPoset schur_poset(const Schur& s) {
  const auto& parts = s.partitions;
  const std::size_t n = parts.size();
  std::vector<std::string> labels;
  std::vector<std::pair<std::size_t, std::size_t>> rel;
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back(partition_label(parts[i]));
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && dominates(parts[j], parts[i])) rel.emplace_back(i, j);
  }
  const AlgebraPtr& a = s.algebra;
  const std::size_t nc = a->idempotents().num_classes();
  std::vector<std::size_t> simple_of(n, nc);
  for (std::size_t c = 0; c < nc; ++c) {
    ModulePtr l = simple(a, c);
    std::vector<std::size_t> supp;
    for (std::size_t k = 0; k < s.weights.size(); ++k)
      if (!l->act_elem(s.weight_idempotents[k]).is_zero()) supp.push_back(k);
    std::size_t top = s.weights.size();
    for (auto k : supp) {
      bool all = true;
      for (auto k2 : supp) all = all && dominates(s.weights[k], s.weights[k2]);
      if (all) top = k;
    }
    if (top == s.weights.size()) throw InternalError("schur_poset: simple without a highest weight");
    auto it = std::find(parts.begin(), parts.end(), s.weights[top]);
    if (it == parts.end()) throw InternalError("schur_poset: highest weight is not a partition");
    std::size_t idx = static_cast<std::size_t>(it - parts.begin());
    if (simple_of[idx] != nc) throw InternalError("schur_poset: two simples share a highest weight");
    simple_of[idx] = c;
  }
  return WeightPoset::from_pairs(std::move(labels), rel, std::move(simple_of));
}

ProductAlgebra product_of(const std::vector<AlgebraPtr>& factors) {
  if (factors.empty()) throw UsageError("product_of: no factors");
  ProductAlgebra p;
  p.factors = factors;
  p.algebra = factors[0];
  p.offsets.push_back(0);
  for (std::size_t i = 1; i < factors.size(); ++i) {
    p.offsets.push_back(p.algebra->dim());
    p.algebra = direct_product(p.algebra, factors[i]);
  }
  return p;
}

ModulePtr extend_from_factor(const ProductAlgebra& p, std::size_t which, const ModulePtr& m) {
  if (which >= p.factors.size() || !same_algebra(*m->algebra(), *p.factors[which]))
    throw UsageError("extend_from_factor: module is not over the chosen factor");
  const Field& f = p.algebra->field();
  std::vector<Matrix> act(p.algebra->dim(), Matrix(f, m->dim(), m->dim()));
  for (std::size_t i = 0; i < p.factors[which]->dim(); ++i) act[p.offsets[which] + i] = m->act(i);
  return Module::make(p.algebra, std::move(act), false, m->name);
}

WeightPoset product_poset(const ProductAlgebra& p, const std::vector<WeightPoset>& posets) {
  if (posets.size() != p.factors.size()) throw UsageError("product_poset: one poset per factor expected");
  std::vector<std::string> labels;
  std::vector<std::pair<std::size_t, std::size_t>> rel;
  std::vector<std::size_t> simple_of;
  for (std::size_t b = 0; b < posets.size(); ++b) {
    const WeightPoset& q = posets[b];
    const std::size_t base = labels.size();
    for (std::size_t i = 0; i < q.size(); ++i) {
      labels.push_back(std::to_string(b + 1) + ":" + q.labels[i]);
      for (std::size_t j = 0; j < q.size(); ++j)
        if (q.lt(i, j)) rel.emplace_back(base + i, base + j);
      auto tm = top_multiplicities(extend_from_factor(p, b, simple(p.factors[b], q.simple_of[i])));
      simple_of.push_back(static_cast<std::size_t>(std::find(tm.begin(), tm.end(), 1) - tm.begin()));
    }
  }
  return WeightPoset::from_pairs(std::move(labels), rel, std::move(simple_of));
}

SchurWeyl schur_weyl_map(std::size_t n, std::size_t d, const Scalar& u) {
  SchurWeyl sw;
  sw.hecke = build_hecke(d, u);
  sw.schur = build_schur(n, d, u);
  const Field& f = u.field();
  ModulePtr v = tensor_space_module(sw.hecke, sw.schur.space);
  sw.images = v->actions();
  std::vector<Matrix> flat;
  for (const auto& m : sw.images) flat.push_back(m.flatten());
  const std::size_t big = sw.schur.space.dim();
  Matrix stack = Matrix::hstack(f, big * big, flat);
  sw.image_dim = rank(stack);
  sw.kernel = mat_kernel(stack);
  sw.end_dim = hom_dim(sw.schur.tensor, sw.schur.tensor);
  return sw;
}

}  // namespace relqh
