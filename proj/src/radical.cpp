#include <random>

#include "relqh/algebra.hpp"

namespace relqh {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

// Integer matrix over Z / m, row-major.
std::vector<u64> int_mul(const std::vector<u64>& a, const std::vector<u64>& b, std::size_t n, u64 m) {
  std::vector<u64> c(n * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t t = 0; t < n; ++t) {
      u64 x = a[i * n + t];
      if (!x) continue;
      for (std::size_t j = 0; j < n; ++j) c[i * n + j] = static_cast<u64>((c[i * n + j] + static_cast<u128>(x) * b[t * n + j]) % m);
    }
  return c;
}

// (Tr(x^e) mod p*q) / q with q = p^i and e = q, for x given by a GF(p) matrix.
std::uint32_t layered_trace(const Matrix& x, u64 p, std::size_t i) {
  const std::size_t n = x.rows();
  u64 q = 1;
  for (std::size_t k = 0; k < i; ++k) q *= p;
  const u64 m = q * p;
  std::vector<u64> base(n * n), acc(n * n, 0);
  for (std::size_t k = 0; k < n * n; ++k) base[k] = x.mod_data()[k];
  for (std::size_t k = 0; k < n; ++k) acc[k * n + k] = 1;
  u64 e = q;
  while (e) {
    if (e & 1) acc = int_mul(acc, base, n, m);
    e >>= 1;
    if (e) base = int_mul(base, base, n, m);
  }
  u64 tr = 0;
  for (std::size_t k = 0; k < n; ++k) tr = (tr + acc[k * n + k]) % m;
  if (tr % q != 0) throw InternalError("layered trace not divisible; representation is inconsistent");
  return static_cast<std::uint32_t>(tr / q);
}

Matrix reshape(const Matrix& flat, std::size_t n) {
  Matrix m(flat.field(), n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m.set(r, c, flat.at(r * n + c, 0));
  return m;
}

}  // namespace

ColumnBasis radical_via_rep(const Algebra& a, const std::vector<Matrix>& rep) {
  const Field& f = a.field();
  const std::size_t d = a.dim();
  if (d == 0) return column_space(Matrix(f, 0, 0));
  if (rep.size() != d) throw UsageError("radical_via_rep: representation has wrong length");
  const std::size_t n = rep[0].rows();
  std::vector<Matrix> flat;
  for (const auto& r : rep) flat.push_back(r.flatten());
  const Matrix rflat = Matrix::hstack(f, n * n, flat);  // n^2 x d

  std::size_t layers = 1;
  if (f.is_prime()) {
    u64 pw = f.p();
    while (pw <= n) {
      ++layers;
      pw *= f.p();
    }
  }
  Matrix u = Matrix::identity(f, d);  // basis of the current ideal, as columns
  for (std::size_t i = 0; i < layers && u.cols() > 0; ++i) {
    const std::size_t k = u.cols();
    Matrix fmat = rflat * u;  // columns = flattened rho(u_j)
    Matrix phi(f, 1, k);
    for (std::size_t j = 0; j < k; ++j) {
      Matrix x = reshape(fmat.col(j), n);
      if (i == 0)
        phi.set(0, j, x.trace());
      else
        phi.set(0, j, Scalar::from_mod(f, layered_trace(x, f.p(), i)));
    }
    ColumnBasis cs = column_space(fmat);
    if (cs.dim() != k) throw InternalError("representation is not faithful on the ideal");
    Matrix psi = phi * mat_inverse(fmat.select_rows(cs.pivot_rows));
    Matrix big(f, n, n);
    for (std::size_t t = 0; t < k; ++t) {
      std::size_t pos = cs.pivot_rows[t];
      big.set(pos / n, pos % n, psi.at(0, t));
    }
    std::vector<Matrix> zrows;
    for (std::size_t b = 0; b < d; ++b) zrows.push_back((big * rep[b].transpose()).flatten().transpose());
    Matrix g = Matrix::vstack(f, n * n, zrows) * fmat;  // d x k
    Matrix ker = mat_kernel(g);
    u = u * ker;
  }
  return column_space(u);
}

const ColumnBasis& Algebra::radical() const {
  std::call_once(rad_once_, [this] {
    if (auto src = op_weak_.lock()) {
      rad_ = src->radical();
      return;
    }
    rad_ = radical_via_rep(*this, faithful_rep());
    if (prov_ == Provenance::Quiver) {
      const std::size_t m = hint_.size();
      bool ok = rad_.dim() + m == dim_;
      for (std::size_t b = m; ok && b < dim_; ++b) ok = rad_.contains(basis_element(b));
      if (!ok) throw InternalError("radical disagrees with the arrow ideal");
    }
  });
  return rad_;
}

const std::vector<Matrix>& Algebra::radical_generators() const {
  std::call_once(gens_once_, [this] {
    if (auto src = op_weak_.lock()) {
      rad_gens_ = src->radical_generators();
      return;
    }
    const ColumnBasis& j = radical();
    if (j.dim() == 0) return;
    ColumnBasis j2 = ideal_product(*this, j, j);
    Matrix both = Matrix::hstack(f_, dim_, {j2.basis, j.basis});
    Echelon e = rref(both);
    for (std::size_t pc : e.pivots)
      if (pc >= j2.dim()) rad_gens_.push_back(j.basis.col(pc - j2.dim()));
  });
  return rad_gens_;
}

Matrix lift_idempotent_in(const Algebra& a, const Matrix& e0) {
  Matrix e = e0;
  const std::size_t bound = 2 * a.nilpotency_bound() + 2;
  const Scalar three(a.field(), 3), mtwo(a.field(), -2);
  for (std::size_t step = 0; step <= bound; ++step) {
    Matrix e2 = a.mul(e, e);
    if (e2 == e) return e;
    Matrix e3 = a.mul(e2, e);
    Matrix next = e2.scaled(three);
    next.add_scaled(e3, mtwo);
    e = next;
  }
  throw InternalError("idempotent lifting did not stabilize");
}

namespace {

// Monic minimal polynomial coefficients c_0..c_{k-1} with z^k = sum c_j z^j.
std::vector<Scalar> min_poly(const Algebra& c, const Matrix& z) {
  const std::size_t n = c.dim();
  std::vector<Matrix> pw{c.one()};
  for (std::size_t k = 1; k <= n; ++k) pw.push_back(c.mul(z, pw.back()));
  Echelon e = rref(Matrix::hstack(c.field(), n, pw));
  std::size_t k = 0;
  while (k < e.pivots.size() && e.pivots[k] == k) ++k;
  std::vector<Scalar> coeffs;
  for (std::size_t j = 0; j < k; ++j) coeffs.push_back(e.r.at(j, k));
  return coeffs;
}

std::optional<Scalar> find_root(const Field& f, const std::vector<Scalar>& c) {
  const std::size_t k = c.size();
  // m(x) = x^k - sum c_j x^j
  auto eval = [&](const Scalar& x) {
    Scalar acc(f, 1);
    for (std::size_t j = k; j-- > 0;) acc = acc * x - c[j];
    return acc;
  };
  if (f.is_prime()) {
    if (f.p() > 1000000) return std::nullopt;
    for (std::uint32_t r = 0; r < f.p(); ++r) {
      Scalar x = Scalar::from_mod(f, r);
      if (eval(x).is_zero()) return x;
    }
    return std::nullopt;
  }
  // Rational root theorem on the integer-scaled polynomial.
  mpz_class l = 1;
  for (const auto& s : c) {
    mpz_class den = s.rational().get_den();
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), den.get_mpz_t());
  }
  mpq_class c0q = -(c[0].rational() * l);
  mpz_class c0 = c0q.get_num();
  if (c0 == 0) return Scalar(f, 0);
  mpz_class lead = l;
  auto divisors = [](mpz_class v) -> std::optional<std::vector<mpz_class>> {
    v = abs(v);
    if (v > mpz_class("1000000000000")) return std::nullopt;
    std::vector<mpz_class> out;
    for (mpz_class t = 1; t * t <= v; ++t)
      if (v % t == 0) {
        out.push_back(t);
        if (t * t != v) out.push_back(v / t);
      }
    return out;
  };
  auto da = divisors(c0), db = divisors(lead);
  if (!da || !db) return std::nullopt;
  for (const auto& a : *da)
    for (const auto& b : *db)
      for (int s : {1, -1}) {
        Scalar x(f, mpq_class(a * s, b));
        if (eval(x).is_zero()) return x;
      }
  return std::nullopt;
}

// A nontrivial idempotent of the semisimple algebra c, or nothing if c looks like a division algebra.
std::optional<Matrix> split_once(const Algebra& c, std::mt19937_64& rng) {
  const Field& f = c.field();
  const std::size_t n = c.dim();
  auto try_element = [&](const Matrix& z) -> std::optional<Matrix> {
    auto mp = min_poly(c, z);
    if (mp.size() <= 1) return std::nullopt;
    auto r = find_root(f, mp);
    if (!r) return std::nullopt;
    Matrix w = z;
    w.add_scaled(c.one(), -*r);
    // Left ideal C w and its generating idempotent.
    ColumnBasis l = column_space(c.right_matrix(w));
    const std::size_t k = l.dim();
    std::vector<Matrix> blocks;
    std::vector<Matrix> rhs;
    for (std::size_t t = 0; t < k; ++t) {
      Matrix ut = l.basis.col(t);
      blocks.push_back(c.left_matrix(ut) * l.basis);
      rhs.push_back(ut);
    }
    Matrix sys = Matrix::vstack(f, k, blocks);
    Matrix b = Matrix::vstack(f, 1, rhs);
    auto sol = mat_solve(sys, b);
    if (!sol) throw InternalError("left ideal of a semisimple algebra has no idempotent generator");
    return l.basis * *sol;
  };
  for (std::size_t b = 0; b < n; ++b)
    if (auto e = try_element(c.basis_element(b))) return e;
  std::uniform_int_distribution<long long> dist(f.is_prime() ? 0 : -3, f.is_prime() ? std::min<long long>(f.p() - 1, 6) : 3);
  for (int attempt = 0; attempt < 64; ++attempt) {
    Matrix z(f, n, 1);
    for (std::size_t b = 0; b < n; ++b) z.set(b, 0, Scalar(f, dist(rng)));
    if (auto e = try_element(z)) return e;
  }
  return std::nullopt;
}

}  // namespace

std::vector<Matrix> split_semisimple(const Algebra& s, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Matrix> done, work{s.one()};
  auto sp = std::shared_ptr<const Algebra>(std::shared_ptr<const Algebra>(), &s);
  while (!work.empty()) {
    Matrix e = work.back();
    work.pop_back();
    if (e.is_zero()) continue;
    CornerAlgebra c = corner_algebra(sp, e);
    if (c.algebra->dim() == 1) {
      done.push_back(e);
      continue;
    }
    auto g = split_once(*c.algebra, rng);
    if (!g) throw FieldNotSplitting("semisimple quotient is not split over " + s.field().name() +
                                    "; a field extension is needed");
    Matrix f1 = c.inclusion * *g;
    Matrix f2 = e - f1;
    work.push_back(f2);
    work.push_back(f1);
  }
  return done;
}

namespace {

bool hint_is_primitive_set(const Algebra& a, const std::vector<Matrix>& h) {
  if (h.empty()) return false;
  Matrix sum(a.field(), a.dim(), 1);
  for (std::size_t i = 0; i < h.size(); ++i) {
    sum = sum + h[i];
    for (std::size_t j = 0; j < h.size(); ++j) {
      Matrix p = a.mul(h[i], h[j]);
      if (i == j ? p != h[i] : !p.is_zero()) return false;
    }
  }
  if (sum != a.one()) return false;
  const ColumnBasis& rad = a.radical();
  for (const auto& e : h) {
    ColumnBasis corner = column_space(a.left_matrix(e) * a.right_matrix(e));
    std::size_t in_rad = 0;
    std::vector<Matrix> cols;
    for (std::size_t k = 0; k < corner.dim(); ++k) cols.push_back(corner.basis.col(k));
    // dim eJe = dim(eAe ∩ J); count via rank of the union.
    std::vector<Matrix> all = cols;
    all.push_back(rad.basis);
    std::size_t union_dim = column_space(a.field(), a.dim(), all).dim();
    in_rad = corner.dim() + rad.dim() - union_dim;
    if (corner.dim() - in_rad != 1) return false;
  }
  return true;
}

}  // namespace

const IdempotentData& Algebra::idempotents() const {
  std::call_once(idem_once_, [this] {
    if (auto src = op_weak_.lock()) {
      idem_ = src->idempotents();
      return;
    }
    IdempotentData d;
    if (dim_ == 0) {
      idem_ = d;
      return;
    }
    if (hint_is_primitive_set(*this, hint_)) {
      d.primitive = hint_;
    } else {
      const ColumnBasis& j = radical();
      std::vector<Matrix> lifted;
      if (j.dim() == 0) {
        lifted = split_semisimple(*this);
      } else {
        auto self = std::shared_ptr<const Algebra>(std::shared_ptr<const Algebra>(), this);
        QuotientAlgebra q = quotient_algebra(self, j);
        std::vector<Matrix> bar = split_semisimple(*q.algebra);
        Matrix sec = q.space.section();
        Matrix acc(f_, dim_, 1);
        for (std::size_t k = 0; k + 1 < bar.size(); ++k) {
          Matrix comp = one_ - acc;
          Matrix x = mul(mul(comp, sec * bar[k]), comp);
          Matrix e = lift_idempotent_in(*this, x);
          lifted.push_back(e);
          acc = acc + e;
        }
        lifted.push_back(one_ - acc);
      }
      d.primitive = lifted;
    }
    const ColumnBasis& rad = radical();
    auto linked = [&](const Matrix& es, const Matrix& et) {
      Matrix sp = left_matrix(es) * right_matrix(et);
      for (std::size_t c = 0; c < dim_; ++c) {
        Matrix v = sp.col(c);
        if (!v.is_zero() && !rad.contains(v)) return true;
      }
      return false;
    };
    for (std::size_t s = 0; s < d.primitive.size(); ++s) {
      std::size_t cls = d.class_rep.size();
      for (std::size_t r = 0; r < d.class_rep.size(); ++r)
        if (linked(d.primitive[s], d.primitive[d.class_rep[r]])) {
          cls = r;
          break;
        }
      if (cls == d.class_rep.size()) {
        d.class_rep.push_back(s);
        d.class_size.push_back(0);
      }
      d.class_of.push_back(cls);
      ++d.class_size[cls];
    }
    idem_ = std::move(d);
  });
  return idem_;
}

}  // namespace relqh
