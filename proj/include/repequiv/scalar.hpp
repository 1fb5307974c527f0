#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>

namespace repequiv {

struct FieldError : std::runtime_error {
  explicit FieldError(const std::string& what) : std::runtime_error(what) {}
};

/// Exact field element: a rational number (characteristic 0) or a residue
/// mod a prime p. Arithmetic never rounds; mixing two different prime
/// characteristics throws, while characteristic-0 values entering a prime
/// field are reduced (denominator must be a unit mod p).
class Scalar {
 public:
  Scalar() : v_(0), p_(0) {}
  Scalar(int n) : v_(n), p_(0) {}
  Scalar(long n) : v_(static_cast<long>(n)), p_(0) {}
  explicit Scalar(const mpq_class& v) : v_(v), p_(0) { v_.canonicalize(); }
  Scalar(const mpq_class& v, std::uint32_t p) : v_(v), p_(p) {
    v_.canonicalize();
    if (p_ != 0) reduce_mod_p();
  }

  static Scalar rational(long num, long den);
  static Scalar of_field(const Scalar& x, std::uint32_t p) { return Scalar(x.v_, p); }

  std::uint32_t characteristic() const { return p_; }
  const mpq_class& value() const { return v_; }

  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_integer() const { return v_.get_den() == 1; }

  Scalar operator-() const;
  Scalar inverse() const;

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);

  Scalar& operator+=(const Scalar& o) { *this = *this + o; return *this; }
  Scalar& operator-=(const Scalar& o) { *this = *this - o; return *this; }
  Scalar& operator*=(const Scalar& o) { *this = *this * o; return *this; }
  Scalar& operator/=(const Scalar& o) { *this = *this / o; return *this; }

  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  std::string str() const;

 private:
  void reduce_mod_p();
  // Reconciles the field tags of two operands, promoting char-0 values
  // into the other side's prime field.
  static std::uint32_t join(const Scalar& a, const Scalar& b, mpq_class& av, mpq_class& bv);

  mpq_class v_;
  std::uint32_t p_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace repequiv

namespace Eigen {

template <typename T>
struct NumTraits;

template <>
struct NumTraits<repequiv::Scalar> {
  using Real = repequiv::Scalar;
  using NonInteger = repequiv::Scalar;
  using Nested = repequiv::Scalar;
  using Literal = repequiv::Scalar;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 40,
    MulCost = 40
  };
  static Real epsilon() { return repequiv::Scalar(0); }
  static Real dummy_precision() { return repequiv::Scalar(0); }
  static int digits10() { return 0; }
};

}  // namespace Eigen
