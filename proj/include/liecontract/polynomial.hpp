#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "liecontract/contraction.hpp"

namespace liecontract {

// Sparse polynomial over Q(zeta_n) in x_1..x_nvars.
class Polynomial {
 public:
  using Monomial = std::vector<int>;  // exponent per variable

  Polynomial(int nvars, int order) : nvars_(nvars), order_(order) {}
  static Polynomial constant(int nvars, const CycloNumber& c);
  static Polynomial variable(int nvars, int i, int order);  // 0-based
  // Terms like "2e1e7^2", "-a(1+w)e8", "(1/3)we2"; letters a-f are looked up in `params`.
  // Variables are e<k> or x<k>, 1-based.
  static Polynomial parse(std::string_view text, int nvars, const Bindings& params = {},
                          int order = 3);

  int nvars() const { return nvars_; }
  int order() const { return order_; }
  const std::map<Monomial, CycloNumber>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int total_degree() const;
  void add_term(const Monomial& m, const CycloNumber& c);

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial scaled(const CycloNumber& c) const;
  Polynomial derivative(int i) const;
  bool operator==(const Polynomial& o) const { return terms_ == o.terms_; }

  // coefficient vector when the polynomial is linear and homogeneous
  std::optional<Vec> as_linear() const;
  std::string str() const;

 private:
  int nvars_, order_;
  std::map<Monomial, CycloNumber> terms_;
};

}  // namespace liecontract
