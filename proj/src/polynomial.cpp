#include "liecontract/polynomial.hpp"

#include <cctype>

#include "liecontract/errors.hpp"

namespace liecontract {

Polynomial Polynomial::constant(int nvars, const CycloNumber& c) {
  Polynomial p(nvars, c.order());
  p.add_term(Monomial(nvars, 0), c);
  return p;
}

Polynomial Polynomial::variable(int nvars, int i, int order) {
  Polynomial p(nvars, order);
  Monomial m(nvars, 0);
  m[i] = 1;
  p.add_term(m, CycloNumber(order, 1));
  return p;
}

int Polynomial::total_degree() const {
  int d = 0;
  for (const auto& [m, c] : terms_) {
    int s = 0;
    for (int e : m) s += e;
    d = std::max(d, s);
  }
  return d;
}

void Polynomial::add_term(const Monomial& m, const CycloNumber& c) {
  if (static_cast<int>(m.size()) != nvars_) throw ShapeMismatch("monomial has wrong arity");
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  Polynomial r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  Polynomial r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  Polynomial r(nvars_, order_);
  for (const auto& [m1, c1] : terms_)
    for (const auto& [m2, c2] : o.terms_) {
      Monomial m(nvars_);
      for (int i = 0; i < nvars_; ++i) m[i] = m1[i] + m2[i];
      r.add_term(m, c1 * c2);
    }
  return r;
}

Polynomial Polynomial::scaled(const CycloNumber& s) const {
  Polynomial r(nvars_, order_);
  for (const auto& [m, c] : terms_) r.add_term(m, c * s);
  return r;
}

Polynomial Polynomial::derivative(int i) const {
  Polynomial r(nvars_, order_);
  for (const auto& [m, c] : terms_) {
    if (m[i] == 0) continue;
    Monomial d = m;
    --d[i];
    r.add_term(d, CycloNumber(order_, static_cast<long>(m[i])) * c);
  }
  return r;
}

std::optional<Vec> Polynomial::as_linear() const {
  Vec v = zero_vec(nvars_, order_);
  for (const auto& [m, c] : terms_) {
    int deg = 0, var = -1;
    for (int i = 0; i < nvars_; ++i)
      if (m[i]) {
        deg += m[i];
        var = i;
      }
    if (deg != 1) return std::nullopt;
    v[var] = c;
  }
  return v;
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  // highest degree first, then by variables
  std::vector<std::pair<Monomial, CycloNumber>> items(terms_.begin(), terms_.end());
  std::stable_sort(items.begin(), items.end(), [](const auto& a, const auto& b) {
    int da = 0, db = 0;
    for (int e : a.first) da += e;
    for (int e : b.first) db += e;
    if (da != db) return da > db;
    return a.first > b.first;
  });
  for (const auto& [m, c] : items) {
    std::string vars;
    for (size_t i = 0; i < m.size(); ++i) {
      if (!m[i]) continue;
      vars += "e" + std::to_string(i + 1);
      if (m[i] > 1) vars += "^" + std::to_string(m[i]);
    }
    bool neg = false;
    std::string coef;
    if (c.is_rational()) {
      Rational r = c.coeff(0);
      neg = r < 0;
      Rational a = neg ? Rational(-r) : r;
      if (a != 1 || vars.empty()) coef = rational_str(a);
    } else {
      coef = "(" + c.str() + ")";
    }
    if (neg)
      out += "-";
    else if (!out.empty())
      out += "+";
    out += coef + vars;
  }
  return out;
}

namespace {

struct Reader {
  std::string_view s;
  size_t i = 0;
  bool eof() const { return i >= s.size(); }
  char peek() const { return eof() ? '\0' : s[i]; }
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg + " at offset " + std::to_string(i) + " in '" + std::string(s) + "'");
  }
  Integer digits() {
    size_t b = i;
    while (!eof() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (b == i) fail("expected digits");
    return Integer(std::string(s.substr(b, i - b)));
  }
};

}  // namespace

Polynomial Polynomial::parse(std::string_view text, int nvars, const Bindings& params, int order) {
  std::string compact;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) compact += ch;
  Reader r{compact};
  if (r.eof()) r.fail("empty polynomial");
  Polynomial out(nvars, order);
  bool first = true;
  while (!r.eof()) {
    CycloNumber coef(order, 1);
    if (r.peek() == '-') {
      coef = -coef;
      ++r.i;
    } else if (r.peek() == '+') {
      ++r.i;
    } else if (!first) {
      r.fail("expected '+' or '-'");
    }
    first = false;
    Monomial m(nvars, 0);
    bool any = false;
    while (!r.eof() && r.peek() != '+' && r.peek() != '-') {
      char ch = r.peek();
      any = true;
      if (std::isdigit(static_cast<unsigned char>(ch))) {
        Integer num = r.digits();
        Rational q(num);
        if (r.peek() == '/') {
          ++r.i;
          Integer den = r.digits();
          if (den == 0) r.fail("zero denominator");
          q = Rational(num, den);
          q.canonicalize();
        }
        coef *= CycloNumber(order, q);
      } else if (ch == '(') {
        size_t close = compact.find(')', r.i);
        if (close == std::string::npos) r.fail("unbalanced '('");
        coef *= CycloNumber::parse(std::string_view(compact).substr(r.i + 1, close - r.i - 1), order);
        r.i = close + 1;
      } else if (ch == 'w') {
        ++r.i;
        long e = 1;
        if (r.peek() == '^') {
          ++r.i;
          e = r.digits().get_si();
        }
        coef *= CycloNumber::root_power(order, e);
      } else if (ch == 'e' || ch == 'x') {
        ++r.i;
        long k = r.digits().get_si();
        if (k < 1 || k > nvars) r.fail("variable index out of range");
        long e = 1;
        if (r.peek() == '^') {
          ++r.i;
          e = r.digits().get_si();
        }
        m[k - 1] += static_cast<int>(e);
      } else if (ch >= 'a' && ch <= 'f') {
        ++r.i;
        auto it = params.find(ch);
        if (it == params.end()) throw BindingError(std::string("missing binding for parameter ") + ch);
        coef *= it->second;
      } else if (ch == '*') {
        ++r.i;
      } else {
        r.fail(std::string("unexpected character '") + ch + "'");
      }
    }
    if (!any) r.fail("empty term");
    out.add_term(m, coef);
  }
  return out;
}

}  // namespace liecontract
