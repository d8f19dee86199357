#include "relqh/matrix.hpp"

#include <algorithm>

namespace relqh {

namespace {

// Lemire reduction, valid for inputs below 2^32.
struct FastMod {
  std::uint32_t p;
  std::uint64_t m;
  explicit FastMod(std::uint32_t p_) : p(p_), m(~std::uint64_t(0) / p_ + 1) {}
  std::uint32_t red(std::uint32_t a) const {
    std::uint64_t low = m * a;
    return static_cast<std::uint32_t>((static_cast<unsigned __int128>(low) * p) >> 64);
  }
};

void check_same(const Matrix& a, const Matrix& b, const char* what) {
  if (a.field() != b.field()) throw UsageError(std::string(what) + ": field mismatch");
}

}  // namespace

Matrix::Matrix(const Field& f, std::size_t rows, std::size_t cols) : f_(f), r_(rows), c_(cols) {
  if (f.is_prime())
    a_.assign(rows * cols, 0);
  else
    q_.assign(rows * cols, mpq_class(0));
}

Matrix Matrix::identity(const Field& f, std::size_t n) {
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m.set_int(i, i, 1);
  return m;
}

Matrix Matrix::from_ints(const Field& f, std::size_t rows, std::size_t cols,
                         const std::vector<long long>& row_major) {
  if (row_major.size() != rows * cols) throw UsageError("from_ints: entry count mismatch");
  Matrix m(f, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m.set_int(i, j, row_major[i * cols + j]);
  return m;
}

Matrix Matrix::from_rows(const Field& f, const std::vector<std::vector<long long>>& rows) {
  std::size_t c = rows.empty() ? 0 : rows[0].size();
  Matrix m(f, rows.size(), c);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != c) throw UsageError("from_rows: ragged rows");
    for (std::size_t j = 0; j < c; ++j) m.set_int(i, j, rows[i][j]);
  }
  return m;
}

Matrix Matrix::unit_vector(const Field& f, std::size_t n, std::size_t i) {
  Matrix m(f, n, 1);
  m.set_int(i, 0, 1);
  return m;
}

Matrix Matrix::hstack(const Field& f, std::size_t rows, const std::vector<Matrix>& parts) {
  std::size_t c = 0;
  for (const auto& p : parts) {
    if (p.rows() != rows) throw UsageError("hstack: row mismatch");
    c += p.cols();
  }
  Matrix m(f, rows, c);
  std::size_t off = 0;
  for (const auto& p : parts) {
    m.set_block(0, off, p);
    off += p.cols();
  }
  return m;
}

Matrix Matrix::vstack(const Field& f, std::size_t cols, const std::vector<Matrix>& parts) {
  std::size_t r = 0;
  for (const auto& p : parts) {
    if (p.cols() != cols) throw UsageError("vstack: column mismatch");
    r += p.rows();
  }
  Matrix m(f, r, cols);
  std::size_t off = 0;
  for (const auto& p : parts) {
    m.set_block(off, 0, p);
    off += p.rows();
  }
  return m;
}

Matrix Matrix::block_diag(const Field& f, const std::vector<Matrix>& parts) {
  std::size_t r = 0, c = 0;
  for (const auto& p : parts) {
    r += p.rows();
    c += p.cols();
  }
  Matrix m(f, r, c);
  std::size_t ro = 0, co = 0;
  for (const auto& p : parts) {
    m.set_block(ro, co, p);
    ro += p.rows();
    co += p.cols();
  }
  return m;
}

Scalar Matrix::at(std::size_t i, std::size_t j) const {
  if (f_.is_prime()) return Scalar::from_mod(f_, a_[i * c_ + j]);
  return Scalar(f_, q_[i * c_ + j]);
}

void Matrix::set(std::size_t i, std::size_t j, const Scalar& s) {
  if (f_.is_prime())
    a_[i * c_ + j] = s.mod_value();
  else
    q_[i * c_ + j] = s.rational();
}

void Matrix::set_int(std::size_t i, std::size_t j, long long v) { set(i, j, Scalar(f_, v)); }

bool Matrix::is_zero_at(std::size_t i, std::size_t j) const {
  return f_.is_prime() ? a_[i * c_ + j] == 0 : sgn(q_[i * c_ + j]) == 0;
}

bool Matrix::is_zero() const {
  if (f_.is_prime()) return std::all_of(a_.begin(), a_.end(), [](std::uint32_t x) { return x == 0; });
  return std::all_of(q_.begin(), q_.end(), [](const mpq_class& x) { return sgn(x) == 0; });
}

bool Matrix::is_identity() const {
  if (r_ != c_) return false;
  for (std::size_t i = 0; i < r_; ++i)
    for (std::size_t j = 0; j < c_; ++j) {
      bool z = is_zero_at(i, j);
      if (i == j ? (z || !at(i, j).is_one()) : !z) return false;
    }
  return true;
}

bool Matrix::operator==(const Matrix& o) const {
  if (f_ != o.f_ || r_ != o.r_ || c_ != o.c_) return false;
  return f_.is_prime() ? a_ == o.a_ : q_ == o.q_;
}

Matrix Matrix::operator*(const Matrix& o) const {
  check_same(*this, o, "multiply");
  if (c_ != o.r_) throw UsageError("multiply: dimension mismatch");
  Matrix m(f_, r_, o.c_);
  const std::size_t n = o.c_;
  if (f_.is_prime()) {
    const std::uint64_t p = f_.p();
    const std::uint64_t sq = (p - 1) * (p - 1);
    const std::uint64_t chunk = sq == 0 ? ~std::uint64_t(0) : (~std::uint64_t(0) - p) / sq;
    std::vector<std::uint64_t> acc(n);
    for (std::size_t i = 0; i < r_; ++i) {
      std::fill(acc.begin(), acc.end(), 0);
      std::uint64_t used = 0;
      const std::uint32_t* arow = &a_[i * c_];
      for (std::size_t k = 0; k < c_; ++k) {
        std::uint64_t a = arow[k];
        if (a == 0) continue;
        const std::uint32_t* brow = &o.a_[k * n];
        for (std::size_t j = 0; j < n; ++j) acc[j] += a * brow[j];
        if (++used >= chunk) {
          for (auto& x : acc) x %= p;
          used = 0;
        }
      }
      std::uint32_t* mrow = &m.a_[i * n];
      for (std::size_t j = 0; j < n; ++j) mrow[j] = static_cast<std::uint32_t>(acc[j] % p);
    }
  } else {
    for (std::size_t i = 0; i < r_; ++i)
      for (std::size_t k = 0; k < c_; ++k) {
        const mpq_class& a = q_[i * c_ + k];
        if (sgn(a) == 0) continue;
        for (std::size_t j = 0; j < n; ++j) {
          const mpq_class& b = o.q_[k * n + j];
          if (sgn(b) != 0) m.q_[i * n + j] += a * b;
        }
      }
  }
  return m;
}

Matrix Matrix::operator+(const Matrix& o) const {
  Matrix m = *this;
  m.add_scaled(o, Scalar(f_, 1));
  return m;
}

Matrix Matrix::operator-(const Matrix& o) const {
  Matrix m = *this;
  m.add_scaled(o, Scalar(f_, -1));
  return m;
}

Matrix Matrix::scaled(const Scalar& s) const {
  Matrix m(f_, r_, c_);
  m.add_scaled(*this, s);
  return m;
}

void Matrix::add_scaled(const Matrix& o, const Scalar& s) {
  check_same(*this, o, "add");
  if (r_ != o.r_ || c_ != o.c_) throw UsageError("add: dimension mismatch");
  if (s.is_zero()) return;
  if (f_.is_prime()) {
    const std::uint64_t p = f_.p(), k = s.mod_value();
    for (std::size_t i = 0; i < a_.size(); ++i)
      if (o.a_[i]) a_[i] = static_cast<std::uint32_t>((a_[i] + k * o.a_[i]) % p);
  } else {
    const mpq_class& k = s.rational();
    for (std::size_t i = 0; i < q_.size(); ++i)
      if (sgn(o.q_[i]) != 0) q_[i] += k * o.q_[i];
  }
}

Matrix Matrix::transpose() const {
  Matrix m(f_, c_, r_);
  for (std::size_t i = 0; i < r_; ++i)
    for (std::size_t j = 0; j < c_; ++j) {
      if (f_.is_prime())
        m.a_[j * r_ + i] = a_[i * c_ + j];
      else
        m.q_[j * r_ + i] = q_[i * c_ + j];
    }
  return m;
}

Scalar Matrix::trace() const {
  Scalar t(f_, 0);
  for (std::size_t i = 0; i < std::min(r_, c_); ++i) t += at(i, i);
  return t;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > r_ || c0 + nc > c_) throw UsageError("block: out of range");
  Matrix m(f_, nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) {
      if (f_.is_prime())
        m.a_[i * nc + j] = a_[(r0 + i) * c_ + c0 + j];
      else
        m.q_[i * nc + j] = q_[(r0 + i) * c_ + c0 + j];
    }
  return m;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& m) {
  check_same(*this, m, "set_block");
  if (r0 + m.r_ > r_ || c0 + m.c_ > c_) throw UsageError("set_block: out of range");
  for (std::size_t i = 0; i < m.r_; ++i)
    for (std::size_t j = 0; j < m.c_; ++j) {
      if (f_.is_prime())
        a_[(r0 + i) * c_ + c0 + j] = m.a_[i * m.c_ + j];
      else
        q_[(r0 + i) * c_ + c0 + j] = m.q_[i * m.c_ + j];
    }
}

Matrix Matrix::select_rows(const std::vector<std::size_t>& idx) const {
  Matrix m(f_, idx.size(), c_);
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = 0; j < c_; ++j) {
      if (f_.is_prime())
        m.a_[i * c_ + j] = a_[idx[i] * c_ + j];
      else
        m.q_[i * c_ + j] = q_[idx[i] * c_ + j];
    }
  return m;
}

Matrix Matrix::select_cols(const std::vector<std::size_t>& idx) const {
  Matrix m(f_, r_, idx.size());
  for (std::size_t i = 0; i < r_; ++i)
    for (std::size_t j = 0; j < idx.size(); ++j) {
      if (f_.is_prime())
        m.a_[i * idx.size() + j] = a_[i * c_ + idx[j]];
      else
        m.q_[i * idx.size() + j] = q_[i * c_ + idx[j]];
    }
  return m;
}

Matrix Matrix::flatten() const {
  Matrix m(f_, r_ * c_, 1);
  m.a_ = a_;
  m.q_ = q_;
  return m;
}

std::uint64_t Matrix::fingerprint() const {
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&h](std::uint64_t x) {
    for (int b = 0; b < 8; ++b) {
      h ^= (x >> (8 * b)) & 0xff;
      h *= 1099511628211ULL;
    }
  };
  mix(r_);
  mix(c_);
  mix(f_.p());
  if (f_.is_prime()) {
    for (auto x : a_) mix(x);
  } else {
    for (const auto& x : q_)
      for (char ch : x.get_str()) mix(static_cast<unsigned char>(ch));
  }
  return h;
}

// ---- elimination kernels ----

namespace {

void rref_mod(std::vector<std::uint32_t>& d, std::size_t r, std::size_t c, std::uint32_t p,
              std::vector<std::size_t>& piv) {
  const bool small = p < 65536;
  FastMod fm(p);
  std::size_t row = 0;
  for (std::size_t col = 0; col < c && row < r; ++col) {
    std::size_t pr = row;
    while (pr < r && d[pr * c + col] == 0) ++pr;
    if (pr == r) continue;
    if (pr != row)
      std::swap_ranges(d.begin() + pr * c, d.begin() + pr * c + c, d.begin() + row * c);
    std::uint32_t* prow = &d[row * c];
    const std::uint64_t inv = mod_inverse(prow[col], p);
    for (std::size_t j = col; j < c; ++j)
      if (prow[j]) prow[j] = static_cast<std::uint32_t>(prow[j] * inv % p);
    // Nonzero tail of the pivot row.
    std::vector<std::size_t> nz;
    for (std::size_t j = col; j < c; ++j)
      if (prow[j]) nz.push_back(j);
    for (std::size_t i = 0; i < r; ++i) {
      if (i == row) continue;
      std::uint32_t* irow = &d[i * c];
      const std::uint32_t f = irow[col];
      if (f == 0) continue;
      const std::uint32_t g = p - f;
      if (small) {
        for (std::size_t j : nz) irow[j] = fm.red(irow[j] + g * prow[j]);
      } else {
        for (std::size_t j : nz)
          irow[j] = static_cast<std::uint32_t>((irow[j] + static_cast<std::uint64_t>(g) * prow[j]) % p);
      }
    }
    piv.push_back(col);
    ++row;
  }
}

void rref_rat(std::vector<mpq_class>& d, std::size_t r, std::size_t c, std::vector<std::size_t>& piv) {
  std::size_t row = 0;
  for (std::size_t col = 0; col < c && row < r; ++col) {
    std::size_t pr = row;
    while (pr < r && sgn(d[pr * c + col]) == 0) ++pr;
    if (pr == r) continue;
    if (pr != row)
      for (std::size_t j = 0; j < c; ++j) std::swap(d[pr * c + j], d[row * c + j]);
    mpq_class inv = 1 / d[row * c + col];
    for (std::size_t j = col; j < c; ++j) d[row * c + j] *= inv;
    for (std::size_t i = 0; i < r; ++i) {
      if (i == row) continue;
      mpq_class f = d[i * c + col];
      if (sgn(f) == 0) continue;
      for (std::size_t j = col; j < c; ++j)
        if (sgn(d[row * c + j]) != 0) d[i * c + j] -= f * d[row * c + j];
    }
    piv.push_back(col);
    ++row;
  }
}

}  // namespace

Echelon rref(const Matrix& m) {
  Echelon e{m, {}};
  if (m.field().is_prime())
    rref_mod(e.r.mod_data(), m.rows(), m.cols(), m.field().p(), e.pivots);
  else
    rref_rat(e.r.rat_data(), m.rows(), m.cols(), e.pivots);
  return e;
}

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

Matrix mat_kernel(const Matrix& m) {
  const Field& f = m.field();
  Echelon e = rref(m);
  std::vector<bool> is_piv(m.cols(), false);
  for (auto c : e.pivots) is_piv[c] = true;
  std::vector<std::size_t> freec;
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (!is_piv[c]) freec.push_back(c);
  Matrix kt(f, freec.size(), m.cols());
  for (std::size_t t = 0; t < freec.size(); ++t) {
    kt.set_int(t, freec[t], 1);
    for (std::size_t k = 0; k < e.pivots.size(); ++k)
      kt.set(t, e.pivots[k], -e.r.at(k, freec[t]));
  }
  Echelon n = rref(kt);
  return n.r.transpose();
}

std::optional<Matrix> mat_solve(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw UsageError("mat_solve: row count mismatch");
  if (a.field() != b.field()) throw UsageError("mat_solve: field mismatch");
  const Field& f = a.field();
  Matrix aug = Matrix::hstack(f, a.rows(), {a, b});
  Echelon e = rref(aug);
  Matrix x(f, a.cols(), b.cols());
  for (std::size_t k = 0; k < e.pivots.size(); ++k) {
    std::size_t pc = e.pivots[k];
    if (pc >= a.cols()) return std::nullopt;
    for (std::size_t j = 0; j < b.cols(); ++j) x.set(pc, j, e.r.at(k, a.cols() + j));
  }
  return x;
}

Matrix mat_inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw UsageError("mat_inverse: not square");
  if (rank(m) != m.rows()) throw UsageError("mat_inverse: singular matrix");
  return *mat_solve(m, Matrix::identity(m.field(), m.rows()));
}

Scalar determinant(const Matrix& m) {
  if (m.rows() != m.cols()) throw UsageError("determinant: not square");
  const Field& f = m.field();
  const std::size_t n = m.rows();
  Matrix a = m;
  Scalar det(f, 1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pr = col;
    while (pr < n && a.is_zero_at(pr, col)) ++pr;
    if (pr == n) return Scalar(f, 0);
    if (pr != col) {
      for (std::size_t j = 0; j < n; ++j) {
        Scalar t = a.at(pr, j);
        a.set(pr, j, a.at(col, j));
        a.set(col, j, t);
      }
      det = -det;
    }
    Scalar pv = a.at(col, col);
    det *= pv;
    Scalar inv = pv.inverse();
    for (std::size_t i = col + 1; i < n; ++i) {
      if (a.is_zero_at(i, col)) continue;
      Scalar fct = a.at(i, col) * inv;
      for (std::size_t j = col; j < n; ++j) a.set(i, j, a.at(i, j) - fct * a.at(col, j));
    }
  }
  return det;
}

Matrix lift_idempotent(const Matrix& e0, std::size_t nil_bound) {
  if (e0.rows() != e0.cols()) throw UsageError("lift_idempotent: not square");
  const Field& f = e0.field();
  Matrix e = e0;
  const std::size_t steps = 2 * std::max<std::size_t>(nil_bound, 1);
  for (std::size_t s = 0; s <= steps; ++s) {
    Matrix e2 = e * e;
    if (e2 == e) return e;
    Matrix e3 = e2 * e;
    e = e2.scaled(Scalar(f, 3));
    e.add_scaled(e3, Scalar(f, -2));
  }
  throw InternalError("lift_idempotent: iteration did not stabilize");
}

ColumnBasis column_space(const Matrix& m) {
  const Field& f = m.field();
  Echelon e = rref(m.transpose());
  std::size_t k = e.pivots.size();
  ColumnBasis cb;
  cb.basis = e.r.block(0, 0, k, m.rows()).transpose();
  cb.pivot_rows = e.pivots;
  if (k == 0) cb.basis = Matrix(f, m.rows(), 0);
  return cb;
}

ColumnBasis column_space(const Field& f, std::size_t n, const std::vector<Matrix>& cols) {
  if (cols.empty()) {
    ColumnBasis cb;
    cb.basis = Matrix(f, n, 0);
    return cb;
  }
  return column_space(Matrix::hstack(f, n, cols));
}

bool ColumnBasis::contains(const Matrix& v) const {
  if (dim() == 0) return v.is_zero();
  Matrix r = v - basis * coords(v);
  return r.is_zero();
}

Matrix QuotientSpace::project(const Matrix& v) const {
  Matrix out = v.select_rows(free_rows);
  if (sub.dim() > 0) out.add_scaled(sub.basis.select_rows(free_rows) * v.select_rows(sub.pivot_rows),
                                    Scalar(v.field(), -1));
  return out;
}

Matrix QuotientSpace::section() const {
  const Field& f = sub.basis.field();
  Matrix s(f, ambient, free_rows.size());
  for (std::size_t i = 0; i < free_rows.size(); ++i) s.set_int(free_rows[i], i, 1);
  return s;
}

QuotientSpace quotient_space(const ColumnBasis& sub, std::size_t ambient) {
  QuotientSpace q;
  q.sub = sub;
  q.ambient = ambient;
  std::vector<bool> piv(ambient, false);
  for (auto r : sub.pivot_rows) piv[r] = true;
  for (std::size_t r = 0; r < ambient; ++r)
    if (!piv[r]) q.free_rows.push_back(r);
  return q;
}

}  // namespace relqh
