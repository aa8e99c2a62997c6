#include "liecontract/cyclo.hpp"

#include <cctype>
#include <functional>
#include <ostream>
#include <sstream>

namespace liecontract {

namespace {

using Poly = std::vector<Rational>;

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// returns (q, r) with a = q*b + r
std::pair<Poly, Poly> divmod(Poly a, const Poly& b) {
  trim(a);
  Poly q;
  if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, Rational(0));
  while (a.size() >= b.size() && !a.empty()) {
    size_t shift = a.size() - b.size();
    Rational f = a.back() / b.back();
    q[shift] = f;
    for (size_t i = 0; i < b.size(); ++i) a[i + shift] -= f * b[i];
    trim(a);
  }
  trim(q);
  return {q, a};
}

Poly mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, Rational(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

Poly sub(Poly a, const Poly& b) {
  if (a.size() < b.size()) a.resize(b.size(), Rational(0));
  for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

void check_supported(int n) {
  if (n < 2 || !is_prime(n) || n - 1 > CycloNumber::kMaxDegree)
    throw UnsupportedOrder("unsupported cyclotomic order " + std::to_string(n));
}

}  // namespace

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

CycloNumber::CycloNumber(int order) : order_(order) { check_supported(order); }

CycloNumber::CycloNumber(int order, const Rational& r) : CycloNumber(order) { c_[0] = r; }

CycloNumber::CycloNumber(int order, const std::vector<Rational>& coeffs) : CycloNumber(order) {
  std::array<Rational, 2 * kMaxDegree + 1> p;
  int len = 0;
  for (size_t k = 0; k < coeffs.size(); ++k) {
    size_t slot = k % order;
    p[slot] += coeffs[k];
    len = std::max(len, static_cast<int>(slot) + 1);
  }
  reduce_full(p, len);
}

void CycloNumber::reduce_full(std::array<Rational, 2 * kMaxDegree + 1>& p, int len) {
  const int n = order_;
  for (int k = len - 1; k >= n; --k) {
    p[k - n] += p[k];
    p[k] = 0;
  }
  if (len >= n && p[n - 1] != 0) {
    Rational top = p[n - 1];
    for (int k = 0; k < n - 1; ++k) p[k] -= top;
  }
  for (int k = 0; k < kMaxDegree; ++k) c_[k] = k < n - 1 ? p[k] : Rational(0);
}

CycloNumber CycloNumber::root_power(int n, long k) {
  check_supported(n);
  long e = ((k % n) + n) % n;
  CycloNumber r(n);
  if (e < n - 1) {
    r.c_[e] = 1;
  } else {
    for (int i = 0; i < n - 1; ++i) r.c_[i] = -1;
  }
  return r;
}

std::vector<Rational> CycloNumber::coeffs() const {
  return std::vector<Rational>(c_.begin(), c_.begin() + degree());
}

bool CycloNumber::is_zero() const {
  for (int k = 0; k < degree(); ++k)
    if (c_[k] != 0) return false;
  return true;
}

bool CycloNumber::is_one() const { return is_rational() && c_[0] == 1; }

bool CycloNumber::is_rational() const {
  for (int k = 1; k < degree(); ++k)
    if (c_[k] != 0) return false;
  return true;
}

void CycloNumber::check_order(const CycloNumber& o) const {
  if (o.order_ != order_)
    throw OrderMismatch("cyclotomic orders differ: " + std::to_string(order_) + " vs " +
                        std::to_string(o.order_));
}

CycloNumber& CycloNumber::operator+=(const CycloNumber& o) {
  check_order(o);
  for (int k = 0; k < degree(); ++k) c_[k] += o.c_[k];
  return *this;
}

CycloNumber& CycloNumber::operator-=(const CycloNumber& o) {
  check_order(o);
  for (int k = 0; k < degree(); ++k) c_[k] -= o.c_[k];
  return *this;
}

CycloNumber& CycloNumber::operator*=(const CycloNumber& o) {
  check_order(o);
  const int d = degree();
  if (o.is_rational()) {
    for (int k = 0; k < d; ++k) c_[k] *= o.c_[0];
    return *this;
  }
  if (is_rational()) {
    Rational s = c_[0];
    for (int k = 0; k < d; ++k) c_[k] = s * o.c_[k];
    return *this;
  }
  std::array<Rational, 2 * kMaxDegree + 1> p;
  for (int i = 0; i < d; ++i) {
    if (c_[i] == 0) continue;
    for (int j = 0; j < d; ++j)
      if (o.c_[j] != 0) p[i + j] += c_[i] * o.c_[j];
  }
  reduce_full(p, 2 * d - 1);
  return *this;
}

CycloNumber CycloNumber::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero");
  if (is_rational()) return CycloNumber(order_, Rational(1) / c_[0]);
  // extended Euclid: s*a + t*phi = g, g a nonzero constant
  Poly phi(order_, Rational(1));
  Poly a = coeffs();
  trim(a);
  Poly r0 = phi, r1 = a;
  Poly s0, s1{Rational(1)};
  while (r1.size() > 1) {
    auto [q, r] = divmod(r0, r1);
    Poly s2 = sub(s0, mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r1 is a nonzero constant since phi is irreducible
  for (auto& c : s1) c /= r1[0];
  return CycloNumber(order_, s1);
}

CycloNumber& CycloNumber::operator/=(const CycloNumber& o) {
  check_order(o);
  if (o.is_rational()) {
    if (o.c_[0] == 0) throw DivisionByZero("division by zero");
    for (int k = 0; k < degree(); ++k) c_[k] /= o.c_[0];
    return *this;
  }
  return *this *= o.inverse();
}

CycloNumber CycloNumber::operator-() const {
  CycloNumber r(*this);
  for (int k = 0; k < degree(); ++k) r.c_[k] = -r.c_[k];
  return r;
}

CycloNumber CycloNumber::conj() const {
  std::vector<Rational> p(order_, Rational(0));
  for (int k = 0; k < degree(); ++k) p[(order_ - k) % order_] += c_[k];
  return CycloNumber(order_, p);
}

CycloNumber CycloNumber::pow(long e) const {
  CycloNumber base = e < 0 ? inverse() : *this;
  unsigned long m = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  CycloNumber r(order_, 1);
  while (m) {
    if (m & 1) r *= base;
    m >>= 1;
    if (m) base *= base;
  }
  return r;
}

bool operator==(const CycloNumber& a, const CycloNumber& b) {
  if (a.order_ != b.order_) return false;
  for (int k = 0; k < a.degree(); ++k)
    if (a.c_[k] != b.c_[k]) return false;
  return true;
}

bool operator<(const CycloNumber& a, const CycloNumber& b) {
  if (a.order_ != b.order_) return a.order_ < b.order_;
  for (int k = 0; k < a.degree(); ++k)
    if (a.c_[k] != b.c_[k]) return a.c_[k] < b.c_[k];
  return false;
}

CycloNumber operator*(const Rational& r, const CycloNumber& x) {
  return CycloNumber(x.order(), r) * x;
}

std::string rational_str(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string CycloNumber::str() const {
  std::string out;
  for (int k = 0; k < degree(); ++k) {
    const Rational& c = c_[k];
    if (c == 0) continue;
    bool neg = c < 0;
    Rational mag = neg ? Rational(-c) : c;
    if (neg)
      out += "-";
    else if (!out.empty())
      out += "+";
    if (k == 0) {
      out += rational_str(mag);
      continue;
    }
    if (mag.get_den() != 1)
      out += "(" + rational_str(mag) + ")";
    else if (mag != 1)
      out += mag.get_num().get_str();
    out += "w";
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out.empty() ? "0" : out;
}

size_t CycloNumber::hash() const {
  size_t h = std::hash<int>()(order_);
  for (int k = 0; k < degree(); ++k) {
    size_t v = std::hash<long>()(mpz_get_si(c_[k].get_num_mpz_t())) * 31 +
               std::hash<long>()(mpz_get_si(c_[k].get_den_mpz_t()));
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

std::ostream& operator<<(std::ostream& os, const CycloNumber& x) { return os << x.str(); }

namespace {

struct Cursor {
  std::string_view s;
  size_t i = 0;
  void skip() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool eof() {
    skip();
    return i >= s.size();
  }
  char peek() {
    skip();
    return i < s.size() ? s[i] : '\0';
  }
  bool accept(char c) {
    if (peek() == c) {
      ++i;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& msg) {
    throw ParseError(msg + " at offset " + std::to_string(i) + " in '" + std::string(s) + "'");
  }
  Integer digits() {
    skip();
    size_t b = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (b == i) fail("expected digits");
    return Integer(std::string(s.substr(b, i - b)));
  }
  bool at_digit() {
    skip();
    return i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]));
  }
};

Rational read_fraction(Cursor& c) {
  Integer num = c.digits();
  if (c.accept('/')) {
    Integer den = c.digits();
    if (den == 0) c.fail("zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
  }
  return Rational(num);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  Cursor c{text};
  bool neg = false;
  if (c.accept('-'))
    neg = true;
  else
    c.accept('+');
  Rational r = read_fraction(c);
  if (!c.eof()) c.fail("trailing characters");
  return neg ? Rational(-r) : r;
}

CycloNumber CycloNumber::parse(std::string_view text, int order) {
  check_supported(order);
  Cursor c{text};
  std::vector<Rational> p(order, Rational(0));
  if (c.eof()) c.fail("empty number");
  bool first = true;
  while (!c.eof()) {
    bool neg = false;
    if (c.accept('-'))
      neg = true;
    else if (!c.accept('+') && !first)
      c.fail("expected '+' or '-'");
    first = false;
    Rational coef(1);
    bool have_coef = false;
    if (c.accept('(')) {
      bool inner_neg = c.accept('-');
      coef = read_fraction(c);
      if (inner_neg) coef = -coef;
      if (!c.accept(')')) c.fail("expected ')'");
      have_coef = true;
    } else if (c.at_digit()) {
      coef = read_fraction(c);
      have_coef = true;
    }
    long power = 0;
    if (c.accept('w')) {
      power = 1;
      if (c.accept('^')) power = c.digits().get_si();
    } else if (!have_coef) {
      c.fail("expected a term");
    }
    p[power % order] += neg ? Rational(-coef) : coef;
  }
  return CycloNumber(order, p);
}

}  // namespace liecontract
