#include "repequiv/scalar.hpp"

#include <ostream>
#include <sstream>

namespace repequiv {

Scalar Scalar::rational(long num, long den) {
  if (den == 0) throw FieldError("rational with zero denominator");
  mpq_class v(num, den);
  v.canonicalize();
  return Scalar(v);
}

void Scalar::reduce_mod_p() {
  mpz_class p(static_cast<unsigned long>(p_));
  mpz_class den = v_.get_den();
  mpz_class dmod = den % p;
  if (dmod == 0) throw FieldError("denominator not invertible mod " + std::to_string(p_));
  mpz_class inv;
  if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t()) == 0)
    throw FieldError("denominator not invertible mod " + std::to_string(p_));
  mpz_class r = (v_.get_num() % p) * inv % p;
  if (r < 0) r += p;
  v_ = mpq_class(r);
}

std::uint32_t Scalar::join(const Scalar& a, const Scalar& b, mpq_class& av, mpq_class& bv) {
  av = a.v_;
  bv = b.v_;
  if (a.p_ == b.p_) return a.p_;
  if (a.p_ == 0) {
    Scalar t(a.v_, b.p_);
    av = t.value();
    return b.p_;
  }
  if (b.p_ == 0) {
    Scalar t(b.v_, a.p_);
    bv = t.value();
    return a.p_;
  }
  throw FieldError("mixed characteristics " + std::to_string(a.p_) + " and " + std::to_string(b.p_));
}

Scalar Scalar::operator-() const { return Scalar(mpq_class(-v_), p_); }

Scalar Scalar::inverse() const {
  if (is_zero()) throw FieldError("inverse of zero");
  if (p_ == 0) return Scalar(mpq_class(1 / v_), 0);
  mpz_class p(static_cast<unsigned long>(p_)), inv;
  mpz_class n = v_.get_num();
  mpz_invert(inv.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
  return Scalar(mpq_class(inv), p_);
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  mpq_class av, bv;
  std::uint32_t p = Scalar::join(a, b, av, bv);
  return Scalar(av + bv, p);
}

Scalar operator-(const Scalar& a, const Scalar& b) {
  mpq_class av, bv;
  std::uint32_t p = Scalar::join(a, b, av, bv);
  return Scalar(av - bv, p);
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  mpq_class av, bv;
  std::uint32_t p = Scalar::join(a, b, av, bv);
  return Scalar(av * bv, p);
}

Scalar operator/(const Scalar& a, const Scalar& b) {
  mpq_class av, bv;
  std::uint32_t p = Scalar::join(a, b, av, bv);
  Scalar bb(bv, p);
  return Scalar(av, p) * bb.inverse();
}

bool operator==(const Scalar& a, const Scalar& b) {
  mpq_class av, bv;
  Scalar::join(a, b, av, bv);
  return av == bv;
}

std::string Scalar::str() const {
  std::ostringstream os;
  os << v_;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.value(); }

}  // namespace repequiv
