#pragma once

// Truncated formal power series in z with MultiPoly coefficients.  The
// truncation order is fixed per value; arithmetic never consults
// coefficients beyond it.

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "qtcat/multipoly.hpp"

namespace qtcat {

class PowerSeries {
 public:
  PowerSeries(int order, std::vector<std::string> vars)
      : order_(order), vars_(std::move(vars)) {
    if (order_ < 0) throw Error("series order must be >= 0");
    coeffs_.assign(order_ + 1, MultiPoly(vars_));
  }

  static PowerSeries one(int order, std::vector<std::string> vars) {
    PowerSeries s(order, std::move(vars));
    s.coeffs_[0] = MultiPoly::constant(s.vars_, 1);
    return s;
  }

  int order() const { return order_; }
  const std::vector<std::string>& vars() const { return vars_; }
  const MultiPoly& coeff(int k) const { return coeffs_.at(k); }

  void set_coeff(int k, MultiPoly p) {
    if (p.vars() != vars_) throw Error("series coefficient variable mismatch");
    coeffs_.at(k) = std::move(p);
  }

  bool operator==(const PowerSeries& o) const {
    return order_ == o.order_ && vars_ == o.vars_ && coeffs_ == o.coeffs_;
  }
  bool operator!=(const PowerSeries& o) const { return !(*this == o); }

  PowerSeries operator+(const PowerSeries& o) const {
    PowerSeries r(common(o), vars_);
    for (int k = 0; k <= r.order_; ++k) r.coeffs_[k] = coeffs_[k] + o.coeffs_[k];
    return r;
  }

  PowerSeries operator-(const PowerSeries& o) const {
    PowerSeries r(common(o), vars_);
    for (int k = 0; k <= r.order_; ++k) r.coeffs_[k] = coeffs_[k] - o.coeffs_[k];
    return r;
  }

  PowerSeries operator*(const PowerSeries& o) const {
    PowerSeries r(common(o), vars_);
    for (int i = 0; i <= r.order_; ++i) {
      if (coeffs_[i].is_zero()) continue;
      for (int j = 0; i + j <= r.order_; ++j) {
        if (o.coeffs_[j].is_zero()) continue;
        r.coeffs_[i + j] = r.coeffs_[i + j] + coeffs_[i] * o.coeffs_[j];
      }
    }
    return r;
  }

  PowerSeries scaled(const MultiPoly& p) const {
    PowerSeries r(order_, vars_);
    for (int k = 0; k <= order_; ++k) r.coeffs_[k] = coeffs_[k] * p;
    return r;
  }

  // Multiply by z^k.
  PowerSeries shifted_z(int k) const {
    if (k < 0) throw Error("shifted_z: negative shift");
    PowerSeries r(order_, vars_);
    for (int i = 0; i + k <= order_; ++i) r.coeffs_[i + k] = coeffs_[i];
    return r;
  }

  // Series reciprocal; the constant coefficient must be the constant +-1.
  PowerSeries reciprocal() const {
    const MultiPoly& c0 = coeffs_[0];
    if (!c0.is_constant() || (c0.constant_value() != 1 && c0.constant_value() != -1))
      throw Error("reciprocal: constant term must be +-1");
    Int u = c0.constant_value();
    PowerSeries r(order_, vars_);
    r.coeffs_[0] = MultiPoly::constant(vars_, u);
    for (int n = 1; n <= order_; ++n) {
      MultiPoly s(vars_);
      for (int k = 1; k <= n; ++k) {
        if (coeffs_[k].is_zero() || r.coeffs_[n - k].is_zero()) continue;
        s = s + coeffs_[k] * r.coeffs_[n - k];
      }
      r.coeffs_[n] = s.scaled(-u);
    }
    return r;
  }

  // One coefficient polynomial per line: "z^k: <poly>".
  std::string str() const {
    std::string out;
    for (int k = 0; k <= order_; ++k) {
      out += "z^" + std::to_string(k) + ": " + coeffs_[k].str() + "\n";
    }
    return out;
  }

 private:
  int common(const PowerSeries& o) const {
    if (vars_ != o.vars_) throw Error("series variable-list mismatch");
    if (order_ != o.order_) throw Error("series order mismatch");
    return order_;
  }

  int order_;
  std::vector<std::string> vars_;
  std::vector<MultiPoly> coeffs_;
};

// Iterate S <- F(S) from the zero series; each step must gain at least one
// correct coefficient, so order+2 iterations suffice.  Throws if the
// iteration fails to reach a fixed point (non-contracting F).
inline PowerSeries solve_algebraic_fixed_point(
    const std::function<PowerSeries(const PowerSeries&)>& equation, int order,
    std::vector<std::string> vars) {
  PowerSeries s(order, std::move(vars));
  for (int it = 0; it <= order + 1; ++it) {
    PowerSeries next = equation(s);
    if (next == s) return s;
    s = std::move(next);
  }
  if (equation(s) == s) return s;
  throw Error("solve_algebraic_fixed_point: did not stabilize");
}

}  // namespace qtcat
