#pragma once

#include <loci/common.hpp>

namespace loci {

// Integer affine form: sum of coeff * var plus a constant. Canonical form
// stores no zero coefficients.
struct LinearTerm {
  std::map<std::string, Int> coeffs;
  Int constant = 0;

  LinearTerm() = default;
  explicit LinearTerm(Int c) : constant(std::move(c)) {}
  static LinearTerm variable(const std::string& v) {
    LinearTerm t;
    t.coeffs[v] = 1;
    return t;
  }

  bool is_constant() const { return coeffs.empty(); }

  Int coeff(const std::string& v) const {
    auto it = coeffs.find(v);
    return it == coeffs.end() ? Int(0) : it->second;
  }

  void set_coeff(const std::string& v, Int c) {
    if (c == 0)
      coeffs.erase(v);
    else
      coeffs[v] = std::move(c);
  }

  LinearTerm& operator+=(const LinearTerm& o) {
    for (const auto& [v, c] : o.coeffs) set_coeff(v, coeff(v) + c);
    constant += o.constant;
    return *this;
  }
  LinearTerm& operator-=(const LinearTerm& o) {
    for (const auto& [v, c] : o.coeffs) set_coeff(v, coeff(v) - c);
    constant -= o.constant;
    return *this;
  }
  LinearTerm& operator*=(const Int& k) {
    if (k == 0) {
      coeffs.clear();
      constant = 0;
      return *this;
    }
    for (auto& [v, c] : coeffs) c *= k;
    constant *= k;
    return *this;
  }

  friend LinearTerm operator+(LinearTerm a, const LinearTerm& b) { return a += b; }
  friend LinearTerm operator-(LinearTerm a, const LinearTerm& b) { return a -= b; }
  friend LinearTerm operator*(LinearTerm a, const Int& k) { return a *= k; }
  friend LinearTerm operator-(LinearTerm a) { return a *= Int(-1); }

  bool operator==(const LinearTerm& o) const {
    return constant == o.constant && coeffs == o.coeffs;
  }

  Int evaluate(const Point& p) const {
    Int r = constant;
    for (const auto& [v, c] : coeffs) {
      auto it = p.find(v);
      if (it == p.end()) throw domain_error("unbound variable in evaluation: " + v);
      r += c * it->second;
    }
    return r;
  }

  // Substitute var := replacement.
  LinearTerm substituted(const std::string& var, const LinearTerm& repl) const {
    LinearTerm r = *this;
    Int c = r.coeff(var);
    if (c == 0) return r;
    r.coeffs.erase(var);
    r += repl * c;
    return r;
  }

  // gcd of all variable coefficients (0 if constant).
  Int coeff_gcd() const {
    Int g = 0;
    for (const auto& [v, c] : coeffs) g = loci::gcd(g, c);
    return g;
  }

  std::string to_string() const;
};

}  // namespace loci
