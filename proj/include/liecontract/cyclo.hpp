#pragma once

#include <gmpxx.h>

#include <array>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "liecontract/errors.hpp"

namespace liecontract {

using Rational = mpq_class;
using Integer = mpz_class;

bool is_prime(long n);

// Element of Q(zeta_n) for prime n <= 5, stored as residues modulo
// 1 + x + ... + x^(n-1). The default value is zero in Q(zeta_3).
class CycloNumber {
 public:
  static constexpr int kMaxDegree = 4;

  CycloNumber() : CycloNumber(3) {}
  explicit CycloNumber(int order);
  CycloNumber(int order, const Rational& r);
  CycloNumber(int order, long r) : CycloNumber(order, Rational(r)) {}
  // coefficients of 1, w, w^2, ...; length may exceed order-1 and is reduced
  CycloNumber(int order, const std::vector<Rational>& coeffs);

  static CycloNumber root_power(int n, long k);
  static CycloNumber parse(std::string_view text, int order = 3);

  int order() const { return order_; }
  int degree() const { return order_ - 1; }
  std::vector<Rational> coeffs() const;
  const Rational& coeff(int k) const { return c_[k]; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;
  CycloNumber inverse() const;
  // complex conjugation: w -> w^(n-1)
  CycloNumber conj() const;
  // x^e for any integer e; negative powers need x != 0
  CycloNumber pow(long e) const;

  CycloNumber& operator+=(const CycloNumber& o);
  CycloNumber& operator-=(const CycloNumber& o);
  CycloNumber& operator*=(const CycloNumber& o);
  CycloNumber& operator/=(const CycloNumber& o);
  CycloNumber operator-() const;

  friend CycloNumber operator+(CycloNumber a, const CycloNumber& b) { return a += b; }
  friend CycloNumber operator-(CycloNumber a, const CycloNumber& b) { return a -= b; }
  friend CycloNumber operator*(CycloNumber a, const CycloNumber& b) { return a *= b; }
  friend CycloNumber operator/(CycloNumber a, const CycloNumber& b) { return a /= b; }
  friend bool operator==(const CycloNumber& a, const CycloNumber& b);
  friend bool operator!=(const CycloNumber& a, const CycloNumber& b) { return !(a == b); }
  // deterministic total order for use as a map key; not a field order
  friend bool operator<(const CycloNumber& a, const CycloNumber& b);

  std::string str() const;
  size_t hash() const;

 private:
  void check_order(const CycloNumber& o) const;
  void reduce_full(std::array<Rational, 2 * kMaxDegree + 1>& p, int len);

  int order_;
  std::array<Rational, kMaxDegree> c_;
};

std::ostream& operator<<(std::ostream& os, const CycloNumber& x);

CycloNumber operator*(const Rational& r, const CycloNumber& x);

// Canonical rendering of a rational: "p" or "p/q".
std::string rational_str(const Rational& r);
Rational parse_rational(std::string_view text);

}  // namespace liecontract
