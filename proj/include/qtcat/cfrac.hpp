#pragma once

// Stieltjes and Jacobi continued-fraction series engines and the named
// polynomial families built on them.
//
// Stieltjes:  1/(1 - c_1 z/(1 - c_2 z/(1 - ...)))
// Jacobi:     1/(1 - b_0 z - λ_1 z²/(1 - b_1 z - λ_2 z²/(1 - ...)))
// Both are evaluated bottom-up with exact series reciprocals; truncation at
// depth D = order+1 (Stieltjes) or ⌈order/2⌉+1 (Jacobi) leaves every
// coefficient up to z^order unchanged by deeper tails.

#include <functional>
#include <string>
#include <vector>

#include "qtcat/classes.hpp"
#include "qtcat/multipoly.hpp"
#include "qtcat/report.hpp"
#include "qtcat/series.hpp"

namespace qtcat {

struct CFSpec {
  enum class Kind { Stieltjes, Jacobi };

  Kind kind = Kind::Stieltjes;
  std::vector<std::string> vars;
  std::function<MultiPoly(int)> c;       // Stieltjes, h >= 1
  std::function<MultiPoly(int)> b;       // Jacobi, h >= 0
  std::function<MultiPoly(int)> lambda;  // Jacobi, h >= 1

  static CFSpec stieltjes(std::vector<std::string> vars,
                          std::function<MultiPoly(int)> c) {
    CFSpec s;
    s.kind = Kind::Stieltjes;
    s.vars = std::move(vars);
    s.c = std::move(c);
    return s;
  }

  static CFSpec jacobi(std::vector<std::string> vars,
                       std::function<MultiPoly(int)> b,
                       std::function<MultiPoly(int)> lambda) {
    CFSpec s;
    s.kind = Kind::Jacobi;
    s.vars = std::move(vars);
    s.b = std::move(b);
    s.lambda = std::move(lambda);
    return s;
  }
};

// depth < 0 picks the minimal sufficient depth for the order.
inline PowerSeries cf_series(const CFSpec& spec, int order, int depth = -1) {
  if (order < 0) throw Error("cf_series: order < 0");
  PowerSeries one = PowerSeries::one(order, spec.vars);
  PowerSeries g = one;
  if (spec.kind == CFSpec::Kind::Stieltjes) {
    int d = depth >= 0 ? depth : order + 1;
    for (int h = d; h >= 1; --h) {
      // g <- 1/(1 - c_h z g)
      g = (one - g.shifted_z(1).scaled(spec.c(h))).reciprocal();
    }
  } else {
    int d = depth >= 0 ? depth : (order + 1) / 2 + 1;
    for (int h = d; h >= 0; --h) {
      // g <- 1/(1 - b_h z - λ_{h+1} z² g)
      PowerSeries bz = one.shifted_z(1).scaled(spec.b(h));
      PowerSeries lz = g.shifted_z(2).scaled(spec.lambda(h + 1));
      g = (one - bz - lz).reciprocal();
    }
  }
  return g;
}

// [h]_{u,v} = u^{h-1} + u^{h-2} v + ... + v^{h-1}, as an explicit sum.
inline MultiPoly bracket(int h, const MultiPoly& u, const MultiPoly& v) {
  if (h < 0) throw Error("bracket: h < 0");
  MultiPoly out(u.vars());
  for (int i = 0; i <= h - 1; ++i) out = out + u.pow(i) * v.pow(h - 1 - i);
  return out;
}

// Eq. (1.1) continued fraction: c_{2k-1} = q^{k-1}, c_{2k} = t q^{k-1}.
inline CFSpec qt_catalan_cf() {
  std::vector<std::string> vars{"t", "q"};
  return CFSpec::stieltjes(vars, [vars](int h) {
    int k = (h + 1) / 2;
    MultiPoly m = MultiPoly::var(vars, "q").pow(k - 1);
    if (h % 2 == 0) m = m * MultiPoly::var(vars, "t");
    return m;
  });
}

inline MultiPoly qt_catalan(int n) {
  if (n < 0) throw Error("qt_catalan: n < 0");
  return cf_series(qt_catalan_cf(), n).coeff(n);
}

// The S-fraction with coefficients 2, 2, 1, 1, 1, ...; its z^n coefficient
// is u_n, the number of alternating (1342,2431)-avoiders of length 2n+1.
inline CFSpec u_series_cf() {
  std::vector<std::string> vars{};
  return CFSpec::stieltjes(vars, [vars](int h) {
    return MultiPoly::constant(vars, h <= 2 ? 2 : 1);
  });
}

// Quint-variate Jacobi CF over (x, y, q, p, s):
//   a_h = s^{2h+1} [h+1]_{q,ps},  b_h = y p^h s^{2h} + (x+q) s^h [h]_{q,ps},
//   c_h = x [h]_{q,ps},  λ_h = a_{h-1} c_h.
// Its z^n coefficient is Σ_{S_n} x^des y^fmax q^{31-2} p^{2-31} s^MAD.
inline CFSpec quint_cf() {
  std::vector<std::string> vars{"q", "x", "y", "p", "s"};
  MultiPoly q = MultiPoly::var(vars, "q");
  MultiPoly x = MultiPoly::var(vars, "x");
  MultiPoly y = MultiPoly::var(vars, "y");
  MultiPoly p = MultiPoly::var(vars, "p");
  MultiPoly s = MultiPoly::var(vars, "s");
  MultiPoly ps = p * s;
  auto a = [=](int h) { return s.pow(2 * h + 1) * bracket(h + 1, q, ps); };
  auto c = [=](int h) { return x * bracket(h, q, ps); };
  auto b = [=](int h) {
    return y * p.pow(h) * s.pow(2 * h) + (x + q) * s.pow(h) * bracket(h, q, ps);
  };
  auto lam = [=](int h) { return a(h - 1) * c(h); };
  return CFSpec::jacobi(vars, b, lam);
}

inline MultiPoly quint_gf(int n) {
  if (n < 0) throw Error("quint_gf: n < 0");
  return cf_series(quint_cf(), n).coeff(n);
}

// Jacobi CF over (t, q, y): b_0 = y, b_h = (1+t) q^h, λ_h = t q^{2h-1}.
// Its z^n coefficient is Σ_{S_n(321)} q^inv t^exc y^fix.
inline CFSpec ceks_cf() {
  std::vector<std::string> vars{"t", "q", "y"};
  MultiPoly t = MultiPoly::var(vars, "t");
  MultiPoly q = MultiPoly::var(vars, "q");
  MultiPoly y = MultiPoly::var(vars, "y");
  MultiPoly one = MultiPoly::constant(vars, 1);
  auto b = [=](int h) { return h == 0 ? y : (one + t) * q.pow(h); };
  auto lam = [=](int h) { return t * q.pow(2 * h - 1); };
  return CFSpec::jacobi(vars, b, lam);
}

inline MultiPoly ceks_gf(int n) {
  if (n < 0) throw Error("ceks_gf: n < 0");
  return cf_series(ceks_cf(), n).coeff(n);
}

// Named families.
//   carlitz:  C_n(q)   = qt_catalan(n) at t = q, q = q²
//   narayana: C_n(t,1) = qt_catalan(n) at q = 1
//   dyck_bp:  qt_catalan(n) at t = tq, q = q²
//   cstar:    Σ_{A_{2n}(132)} q^{(2-31)}
//   chat:     Σ_{A_{2n}(231)} q^{(13-2)}
//   cbar:     Σ_{A_{2n}(231)} q^{(2-13)}
inline MultiPoly named_family(const std::string& name, int n) {
  if (n < 0) throw Error("named_family: n < 0");
  if (name == "qt-catalan") return qt_catalan(n);
  if (name == "carlitz") {
    std::map<std::string, SignedMonomial> binds;
    binds["t"] = SignedMonomial{1, {{"q", 1}}};
    binds["q"] = SignedMonomial{1, {{"q", 2}}};
    return qt_catalan(n).substitute(binds, {"q"});
  }
  if (name == "narayana") {
    std::map<std::string, SignedMonomial> binds;
    binds["q"] = SignedMonomial{1, {}};
    return qt_catalan(n).substitute(binds, {"t"});
  }
  if (name == "dyck-bp" || name == "dyck_bp") {
    std::map<std::string, SignedMonomial> binds;
    binds["t"] = SignedMonomial{1, {{"t", 1}, {"q", 1}}};
    binds["q"] = SignedMonomial{1, {{"q", 2}}};
    return qt_catalan(n).substitute(binds, {"t", "q"});
  }
  auto alt_dist = [n](const std::string& pat, const std::string& vinc) {
    ClassSpec spec;
    spec.n = 2 * n;
    spec.shape = Shape::UpDown;
    spec.avoided = {Perm::parse(pat)};
    return distribution(spec, {Weight::parse("q^" + vinc)});
  };
  if (name == "cstar") return alt_dist("132", "2-31");
  if (name == "chat") return alt_dist("231", "13-2");
  if (name == "cbar") return alt_dist("231", "2-13");
  throw Error("unknown family: " + name);
}

// Lemma contra-formula: the S-fraction with coefficients (c_h) equals its
// even contraction (b_0 = c_1, b_h = c_{2h} + c_{2h+1}, λ_h = c_{2h-1} c_{2h})
// and 1 + c_1 z J where J is the odd contraction (b_0 = c_1 + c_2,
// b_h = c_{2h+1} + c_{2h+2}, λ_h = c_{2h} c_{2h+1}).
inline Report contraction_check(const std::function<MultiPoly(int)>& c,
                                const std::vector<std::string>& vars, int order) {
  Report rep;
  rep.suite = "contraction";
  rep.params = "order=" + std::to_string(order);
  PowerSeries s = cf_series(CFSpec::stieltjes(vars, c), order);
  CFSpec even = CFSpec::jacobi(
      vars, [&](int h) { return h == 0 ? c(1) : c(2 * h) + c(2 * h + 1); },
      [&](int h) { return c(2 * h - 1) * c(2 * h); });
  PowerSeries je = cf_series(even, order);
  CFSpec odd = CFSpec::jacobi(
      vars, [&](int h) { return c(2 * h + 1) + c(2 * h + 2); },
      [&](int h) { return c(2 * h) * c(2 * h + 1); });
  PowerSeries jo =
      PowerSeries::one(order, vars) +
      cf_series(odd, order).shifted_z(1).scaled(c(1));
  if (s != je) rep.fail("S-fraction != even contraction:\n" + s.str() + "vs\n" + je.str());
  if (s != jo) rep.fail("S-fraction != odd contraction:\n" + s.str() + "vs\n" + jo.str());
  return rep;
}

inline CFSpec named_cf(const std::string& id) {
  if (id == "qt-catalan") return qt_catalan_cf();
  if (id == "quint") return quint_cf();
  if (id == "ceks") return ceks_cf();
  if (id == "u-series") return u_series_cf();
  throw Error("unknown CF spec: " + id);
}

}  // namespace qtcat
