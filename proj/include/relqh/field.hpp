#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace relqh {

// Error taxonomy shared by every module.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct UsageError : Error {
  using Error::Error;
};
struct ValidationError : Error {
  using Error::Error;
};
struct InternalError : Error {
  using Error::Error;
};
struct NotFiniteDimensional : Error {
  using Error::Error;
};
struct FieldNotSplitting : Error {
  using Error::Error;
};
struct CapExceeded : Error {
  using Error::Error;
};

class Field {
 public:
  enum class Kind { Prime, Rational };

  static Field prime(std::uint32_t p);
  static Field rationals() { return Field(Kind::Rational, 0); }

  Kind kind() const { return kind_; }
  bool is_prime() const { return kind_ == Kind::Prime; }
  std::uint32_t p() const { return p_; }
  std::uint32_t characteristic() const { return p_; }
  std::string name() const;

  bool operator==(const Field& o) const { return kind_ == o.kind_ && p_ == o.p_; }
  bool operator!=(const Field& o) const { return !(*this == o); }

 private:
  Field(Kind k, std::uint32_t p) : kind_(k), p_(p) {}
  Kind kind_ = Kind::Rational;
  std::uint32_t p_ = 0;

 public:
  Field() = default;
};

bool is_prime_number(std::uint64_t n);
std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t p);

// Exact field element; GF(p) values are kept reduced in [0, p).
class Scalar {
 public:
  Scalar() = default;
  Scalar(const Field& f, long long v);
  Scalar(const Field& f, const mpq_class& q);
  static Scalar from_mod(const Field& f, std::uint32_t v);
  static Scalar parse(const Field& f, const std::string& text);

  const Field& field() const { return f_; }
  bool is_zero() const;
  bool is_one() const;
  std::uint32_t mod_value() const { return v_; }
  const mpq_class& rational() const { return q_; }
  std::string str() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar inverse() const;
  Scalar pow(std::uint64_t e) const;
  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

 private:
  Field f_;
  std::uint32_t v_ = 0;
  mpq_class q_;
};

}  // namespace relqh
