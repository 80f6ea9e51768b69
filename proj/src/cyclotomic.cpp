#include "hopftwist/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <ostream>
#include <sstream>
#include <utility>

#include "hopftwist/errors.hpp"

namespace hopftwist {

namespace {

using QPoly = std::vector<mpq_class>;  // ascending coefficients

int degreeOf(const QPoly& p) {
  for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
    if (p[i] != 0) return i;
  return -1;
}

// Remainder and quotient of a by b over Q[x]; b nonzero.
std::pair<QPoly, QPoly> polyDivMod(QPoly a, const QPoly& b) {
  const int db = degreeOf(b);
  QPoly q(a.size(), mpq_class(0));
  const mpq_class& lead = b[static_cast<size_t>(db)];
  for (int da = degreeOf(a); da >= db; da = degreeOf(a)) {
    mpq_class f = a[static_cast<size_t>(da)] / lead;
    q[static_cast<size_t>(da - db)] = f;
    for (int t = 0; t <= db; ++t)
      a[static_cast<size_t>(da - db + t)] -= f * b[static_cast<size_t>(t)];
    a[static_cast<size_t>(da)] = 0;
  }
  return {std::move(q), std::move(a)};
}

QPoly polyMul(const QPoly& a, const QPoly& b) {
  QPoly r(a.size() + b.size() - 1, mpq_class(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j)
      if (b[j] != 0) r[i + j] += a[i] * b[j];
  }
  return r;
}

QPoly polySub(QPoly a, const QPoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), mpq_class(0));
  for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  return a;
}

// Integer polynomial division, exact when den is monic and divides num.
std::vector<mpz_class> zPolyDivExact(std::vector<mpz_class> num,
                                     const std::vector<mpz_class>& den) {
  const int dd = static_cast<int>(den.size()) - 1;
  const int dn = static_cast<int>(num.size()) - 1;
  std::vector<mpz_class> q(static_cast<size_t>(dn - dd + 1), mpz_class(0));
  for (int d = dn; d >= dd; --d) {
    mpz_class f = num[static_cast<size_t>(d)];
    if (f == 0) continue;
    q[static_cast<size_t>(d - dd)] = f;
    for (int t = 0; t <= dd; ++t)
      num[static_cast<size_t>(d - dd + t)] -= f * den[static_cast<size_t>(t)];
  }
  for (const auto& c : num)
    if (c != 0) throw Error("cyclotomic polynomial division not exact");
  return q;
}

std::mutex& cycCacheMutex() {
  static std::mutex m;
  return m;
}

std::map<long, std::vector<mpz_class>>& phiPolyCache() {
  static std::map<long, std::vector<mpz_class>> cache;
  return cache;
}

// Reduce an arbitrary-length coefficient vector modulo Phi_n.
std::vector<mpq_class> reduceModPhi(std::vector<mpq_class> raw, long n) {
  const auto& phi = cyclotomicPolynomial(n);
  const size_t deg = phi.size() - 1;
  if (raw.size() < deg) raw.resize(deg, mpq_class(0));
  for (size_t t = raw.size(); t-- > deg;) {
    if (raw[t] == 0) continue;
    mpq_class c = raw[t];
    raw[t] = 0;
    for (size_t s = 0; s < deg; ++s) raw[t - deg + s] -= c * mpq_class(phi[s]);
  }
  raw.resize(deg);
  return raw;
}

std::string rationalStr(const mpq_class& q) { return q.get_str(); }

}  // namespace

long eulerPhi(long n) {
  long m = n, result = n;
  for (long p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      while (m % p == 0) m /= p;
      result -= result / p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

const std::vector<mpz_class>& cyclotomicPolynomial(long n) {
  if (n < 1) throw Error("cyclotomicPolynomial: conductor must be positive");
  {
    std::lock_guard<std::mutex> lock(cycCacheMutex());
    auto it = phiPolyCache().find(n);
    if (it != phiPolyCache().end()) return it->second;
  }
  // x^n - 1 divided by Phi_d for every proper divisor d of n.
  std::vector<mpz_class> poly(static_cast<size_t>(n) + 1, mpz_class(0));
  poly[0] = -1;
  poly[static_cast<size_t>(n)] = 1;
  for (long d = 1; d < n; ++d)
    if (n % d == 0) poly = zPolyDivExact(std::move(poly), cyclotomicPolynomial(d));
  std::lock_guard<std::mutex> lock(cycCacheMutex());
  return phiPolyCache().emplace(n, std::move(poly)).first->second;
}

Cyc::Cyc(long conductor, std::vector<mpq_class> coeffs) : n_(conductor), c_(std::move(coeffs)) {
  if (conductor < 1) throw Error("Cyc: conductor must be positive");
  if (static_cast<long>(c_.size()) != eulerPhi(conductor))
    throw Error("Cyc: coefficient count must equal phi(conductor)");
}

Cyc Cyc::rootOfUnity(long n, long k) {
  if (n < 1) throw Error("rootOfUnity: order must be positive");
  long e = ((k % n) + n) % n;
  std::vector<mpq_class> raw(static_cast<size_t>(e) + 1, mpq_class(0));
  raw[static_cast<size_t>(e)] = 1;
  return Cyc(n, reduceModPhi(std::move(raw), n));
}

bool Cyc::isZero() const {
  for (const auto& c : c_)
    if (c != 0) return false;
  return true;
}

bool Cyc::isRational() const {
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

const mpq_class& Cyc::rationalValue() const {
  if (!isRational()) throw Error("rationalValue: value is not rational");
  return c_[0];
}

Cyc Cyc::liftedTo(long m) const {
  if (m == n_) return *this;
  if (m < 1 || m % n_ != 0) throw Error("liftedTo: target conductor must be a multiple");
  const long stride = m / n_;
  std::vector<mpq_class> raw(static_cast<size_t>((static_cast<long>(c_.size()) - 1) * stride + 1),
                             mpq_class(0));
  for (size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0) raw[i * static_cast<size_t>(stride)] = c_[i];
  return Cyc(m, reduceModPhi(std::move(raw), m));
}

Cyc Cyc::operator-() const {
  Cyc r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

Cyc& Cyc::operator+=(const Cyc& o) {
  if (n_ == o.n_) {
    for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
  }
  long l = std::lcm(n_, o.n_);
  *this = liftedTo(l);
  Cyc b = o.liftedTo(l);
  for (size_t i = 0; i < c_.size(); ++i) c_[i] += b.c_[i];
  return *this;
}

Cyc& Cyc::operator-=(const Cyc& o) {
  *this += -o;
  return *this;
}

Cyc& Cyc::operator*=(const Cyc& o) {
  long l = std::lcm(n_, o.n_);
  Cyc a = liftedTo(l);
  Cyc b = o.liftedTo(l);
  std::vector<mpq_class> raw(a.c_.size() + b.c_.size() - 1, mpq_class(0));
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (size_t j = 0; j < b.c_.size(); ++j)
      if (b.c_[j] != 0) raw[i + j] += a.c_[i] * b.c_[j];
  }
  n_ = l;
  c_ = reduceModPhi(std::move(raw), l);
  return *this;
}

Cyc& Cyc::operator/=(const Cyc& o) {
  *this *= o.inverse();
  return *this;
}

Cyc Cyc::inverse() const {
  if (isZero()) throw Error("division by zero");
  if (n_ == 1) return Cyc(mpq_class(1) / c_[0]);
  // Extended Euclid in Q[x] against Phi_n (irreducible over Q).
  const auto& phiZ = cyclotomicPolynomial(n_);
  QPoly phi(phiZ.size());
  for (size_t i = 0; i < phiZ.size(); ++i) phi[i] = mpq_class(phiZ[i]);
  QPoly r0 = phi, r1 = c_;
  QPoly s0{mpq_class(0)}, s1{mpq_class(1)};
  while (degreeOf(r1) > 0) {
    auto [q, r2] = polyDivMod(r0, r1);
    QPoly s2 = polySub(std::move(s0), polyMul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r2);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  const int dr = degreeOf(r1);
  if (dr != 0) throw Error("inverse: gcd with the cyclotomic polynomial is not constant");
  const mpq_class lead = r1[0];
  QPoly res = reduceModPhi(std::move(s1), n_);
  for (auto& c : res) c /= lead;
  return Cyc(n_, std::move(res));
}

bool operator==(const Cyc& a, const Cyc& b) {
  if (a.n_ == b.n_) return a.c_ == b.c_;
  long l = std::lcm(a.n_, b.n_);
  return a.liftedTo(l).c_ == b.liftedTo(l).c_;
}

std::string Cyc::str() const {
  if (isZero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    mpq_class c = c_[i];
    if (first) {
      if (c < 0) {
        os << "-";
        c = -c;
      }
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    }
    if (i == 0) {
      os << rationalStr(c);
    } else {
      if (c != 1) os << rationalStr(c) << "*";
      os << "z" << n_;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Cyc& v) { return os << v.str(); }

}  // namespace hopftwist
