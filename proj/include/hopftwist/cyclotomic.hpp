#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <vector>

namespace hopftwist {

/// Element of the cyclotomic field Q(zeta_N): exact rational coordinates in
/// the power basis 1, zeta, ..., zeta^{phi(N)-1}, reduced modulo the N-th
/// cyclotomic polynomial. Values of different conductors combine by lifting
/// both to Q(zeta_lcm). There is no rounding anywhere.
class Cyc {
 public:
  Cyc() : n_(1), c_(1) {}
  Cyc(long v) : n_(1), c_(1) { c_[0] = v; }
  Cyc(const mpq_class& v) : n_(1), c_(1) { c_[0] = v; }
  /// coeffs must already be reduced; length phi(conductor).
  Cyc(long conductor, std::vector<mpq_class> coeffs);

  /// zeta_n^k (k may be negative or >= n).
  static Cyc rootOfUnity(long n, long k);

  long conductor() const { return n_; }
  const std::vector<mpq_class>& coeffs() const { return c_; }

  bool isZero() const;
  bool isRational() const;
  const mpq_class& rationalValue() const;  // requires isRational()

  /// Rewrite at conductor m; m must be a multiple of conductor().
  Cyc liftedTo(long m) const;

  Cyc operator-() const;
  Cyc& operator+=(const Cyc& o);
  Cyc& operator-=(const Cyc& o);
  Cyc& operator*=(const Cyc& o);
  Cyc& operator/=(const Cyc& o);
  friend Cyc operator+(Cyc a, const Cyc& b) { a += b; return a; }
  friend Cyc operator-(Cyc a, const Cyc& b) { a -= b; return a; }
  friend Cyc operator*(Cyc a, const Cyc& b) { a *= b; return a; }
  friend Cyc operator/(Cyc a, const Cyc& b) { a /= b; return a; }
  friend bool operator==(const Cyc& a, const Cyc& b);
  friend bool operator!=(const Cyc& a, const Cyc& b) { return !(a == b); }

  Cyc inverse() const;  // throws Error on division by zero

  std::string str() const;
  friend std::ostream& operator<<(std::ostream& os, const Cyc& v);

 private:
  long n_;                    // conductor
  std::vector<mpq_class> c_;  // length phi(n_)
};

long eulerPhi(long n);

/// Coefficients of the N-th cyclotomic polynomial, ascending, monic.
const std::vector<mpz_class>& cyclotomicPolynomial(long n);

}  // namespace hopftwist
