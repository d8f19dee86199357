#include "relqh/field.hpp"

#include <cctype>

namespace relqh {

bool is_prime_number(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t p) {
  std::int64_t t = 0, nt = 1, r = p, nr = a % p;
  while (nr != 0) {
    std::int64_t q = r / nr;
    std::int64_t tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  if (r != 1) throw UsageError("inverse of zero in GF(" + std::to_string(p) + ")");
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

Field Field::prime(std::uint32_t p) {
  if (!is_prime_number(p) || p >= (1u << 31))
    throw UsageError("field characteristic " + std::to_string(p) + " is not a supported prime");
  return Field(Kind::Prime, p);
}

std::string Field::name() const {
  return is_prime() ? "GF(" + std::to_string(p_) + ")" : "Q";
}

Scalar::Scalar(const Field& f, long long v) : f_(f) {
  if (f.is_prime()) {
    long long r = v % static_cast<long long>(f.p());
    if (r < 0) r += f.p();
    v_ = static_cast<std::uint32_t>(r);
  } else {
    q_ = mpq_class(static_cast<long>(v));
  }
}

Scalar::Scalar(const Field& f, const mpq_class& q) : f_(f) {
  if (f.is_prime()) {
    mpz_class num = q.get_num(), den = q.get_den();
    mpz_class pm = f.p();
    mpz_class n = num % pm;
    if (n < 0) n += pm;
    mpz_class d = den % pm;
    if (d == 0) throw UsageError("denominator vanishes in " + f.name());
    std::uint32_t nv = static_cast<std::uint32_t>(n.get_ui());
    std::uint32_t dv = static_cast<std::uint32_t>(d.get_ui());
    v_ = static_cast<std::uint32_t>(static_cast<std::uint64_t>(nv) * mod_inverse(dv, f.p()) % f.p());
  } else {
    q_ = q;
    q_.canonicalize();
  }
}

Scalar Scalar::from_mod(const Field& f, std::uint32_t v) {
  Scalar s;
  s.f_ = f;
  s.v_ = v % f.p();
  return s;
}

Scalar Scalar::parse(const Field& f, const std::string& text) {
  std::string t;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  if (t.empty()) throw ValidationError("empty coefficient");
  for (char c : t)
    if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+' || c == '/'))
      throw ValidationError("malformed coefficient \"" + text + "\"");
  mpq_class q;
  try {
    if (t[0] == '+') t = t.substr(1);
    q = mpq_class(t, 10);
  } catch (const std::invalid_argument&) {
    throw ValidationError("malformed coefficient \"" + text + "\"");
  }
  if (q.get_den() == 0) throw ValidationError("zero denominator in \"" + text + "\"");
  q.canonicalize();
  return Scalar(f, q);
}

bool Scalar::is_zero() const { return f_.is_prime() ? v_ == 0 : sgn(q_) == 0; }

bool Scalar::is_one() const { return f_.is_prime() ? v_ == 1 : q_ == 1; }

std::string Scalar::str() const {
  return f_.is_prime() ? std::to_string(v_) : q_.get_str();
}

Scalar Scalar::operator+(const Scalar& o) const {
  Scalar r;
  r.f_ = f_;
  if (f_.is_prime()) {
    std::uint32_t s = v_ + o.v_;
    r.v_ = s >= f_.p() ? s - f_.p() : s;
  } else {
    r.q_ = q_ + o.q_;
  }
  return r;
}

Scalar Scalar::operator-(const Scalar& o) const {
  Scalar r;
  r.f_ = f_;
  if (f_.is_prime())
    r.v_ = v_ >= o.v_ ? v_ - o.v_ : v_ + f_.p() - o.v_;
  else
    r.q_ = q_ - o.q_;
  return r;
}

Scalar Scalar::operator*(const Scalar& o) const {
  Scalar r;
  r.f_ = f_;
  if (f_.is_prime())
    r.v_ = static_cast<std::uint32_t>(static_cast<std::uint64_t>(v_) * o.v_ % f_.p());
  else
    r.q_ = q_ * o.q_;
  return r;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw UsageError("inverse of zero scalar");
  Scalar r;
  r.f_ = f_;
  if (f_.is_prime())
    r.v_ = mod_inverse(v_, f_.p());
  else
    r.q_ = 1 / q_;
  return r;
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::operator-() const { return Scalar(f_, 0) - *this; }

Scalar Scalar::pow(std::uint64_t e) const {
  Scalar base = *this, acc(f_, 1);
  while (e) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

bool Scalar::operator==(const Scalar& o) const {
  return f_.is_prime() ? v_ == o.v_ : q_ == o.q_;
}

}  // namespace relqh
