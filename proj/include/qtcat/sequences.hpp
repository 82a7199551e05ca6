#pragma once

// Integer sequences of §5-§6 with their independent computation routes:
// closed forms, recurrences, generating-function fixed points, and raw
// enumeration.  Cross-route agreement is part of the verification surface.

#include <functional>
#include <string>
#include <vector>

#include "qtcat/cfrac.hpp"
#include "qtcat/classes.hpp"
#include "qtcat/multipoly.hpp"
#include "qtcat/series.hpp"

namespace qtcat {

inline Int binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  Int r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;  // exact at every step: r is C(n-k+i, i)
  }
  return r;
}

inline Int catalan_number(int n) {
  if (n < 0) throw Error("catalan_number: n < 0");
  return binomial(2 * n, n) / (n + 1);
}

// Ballot numbers f(n,k) = (n-k+1)/(n+1) * C(n+k,k) for 0 <= k <= n, else 0.
inline Int ballot_number(int n, int k) {
  if (n < 0 || k < 0 || k > n) return 0;
  return binomial(n + k, k) * (n - k + 1) / (n + 1);
}

// Rows of the same triangle from the recurrence
// f(n,k) = f(n,k-1) + f(n-1,k), f(n,0) = 1, f(n,k) = 0 for k > n.
inline std::vector<std::vector<Int>> ballot_rows_by_recurrence(int n_max) {
  std::vector<std::vector<Int>> rows;
  for (int n = 0; n <= n_max; ++n) {
    std::vector<Int> row(n + 1);
    row[0] = 1;
    for (int k = 1; k <= n; ++k)
      row[k] = row[k - 1] + (n - 1 >= k ? rows[n - 1][k] : 0);
    rows.push_back(std::move(row));
  }
  return rows;
}

// r_n = |A_{2n+1}(2413,3142)|, closed form (Eq. sep-odd):
// r_n = (2/n) Σ_{i=0}^{n-1} 2^i C(2n,i) C(n,i+1), r_0 = 1.
inline Int r_closed(int n) {
  if (n < 0) throw Error("r_closed: n < 0");
  if (n == 0) return 1;
  Int s = 0;
  Int pw = 1;
  for (int i = 0; i <= n - 1; ++i) {
    s += pw * binomial(2 * n, i) * binomial(n, i + 1);
    pw *= 2;
  }
  return 2 * s / n;
}

// t_n = |A_{2n}(2413,3142)|, closed form (Eq. sep-even):
// t_n = (4/(n-1)) Σ_{i=0}^{n-2} 2^i C(2n-1,i) C(n-1,i+1), t_1 = 1.
inline Int t_closed(int n) {
  if (n < 1) throw Error("t_closed: n < 1");
  if (n == 1) return 1;
  Int s = 0;
  Int pw = 1;
  for (int i = 0; i <= n - 2; ++i) {
    s += pw * binomial(2 * n - 1, i) * binomial(n - 1, i + 1);
    pw *= 2;
  }
  return 4 * s / (n - 1);
}

// Unified form (both parities, n >= 3): with m = ⌊(n-1)/2⌋,
// |A_n(2413,3142)| = (2^{n-2m}/m) Σ_{i=0}^{m-1} 2^i C(m,i+1) C(n-1,i).
inline Int separable_alt_unified(int n) {
  if (n < 3) throw Error("separable_alt_unified: n < 3");
  int m = (n - 1) / 2;
  Int s = 0;
  Int pw = 1;
  for (int i = 0; i <= m - 1; ++i) {
    s += pw * binomial(m, i + 1) * binomial(n - 1, i);
    pw *= 2;
  }
  Int v = s;
  for (int j = 0; j < n - 2 * m; ++j) v *= 2;
  return v / m;
}

// u_n = |A_{2n+1}(1342,2431)| via the convolution recurrence
// u_n = 2 Σ_{m=0}^{n-1} u_m C_{n-1-m} + Σ_{m=1}^{n-1} u_m C_{n-m}, u_0 = 1.
inline std::vector<Int> u_by_recurrence(int n_max) {
  if (n_max < 0) return {};
  std::vector<Int> u(n_max + 1);
  u[0] = 1;
  for (int n = 1; n <= n_max; ++n) {
    Int s = 0;
    for (int m = 0; m <= n - 1; ++m) s += 2 * u[m] * catalan_number(n - 1 - m);
    for (int m = 1; m <= n - 1; ++m) s += u[m] * catalan_number(n - m);
    u[n] = s;
  }
  return u;
}

// Multiple-sum formula (Eq. sum formula):
// u_n = Σ_{m=1}^{n} 2^m Σ_{k_1+...+k_m = n-m, k_i >= 0} Π C(2k_i, k_i).
inline Int u_multisum(int n) {
  if (n < 1) throw Error("u_multisum: n < 1");
  Int tot = 0;
  std::vector<int> parts;
  std::function<void(int, int, Int)> rec = [&](int left, int m, Int prod) {
    if (m == 0) {
      if (left == 0) tot += prod;
      return;
    }
    for (int k = 0; k <= left; ++k)
      rec(left - k, m - 1, prod * binomial(2 * k, k));
  };
  Int pw = 2;
  for (int m = 1; m <= n; ++m) {
    rec(n - m, m, pw);
    pw *= 2;
  }
  return tot;
}

// U(x) = Σ u_n x^n = 1/(1 - Σ_{k>=0} 2 C(2k,k) x^{k+1}).
inline PowerSeries u_series_by_reciprocal(int order) {
  std::vector<std::string> vars{};
  PowerSeries denom = PowerSeries::one(order, vars);
  for (int k = 0; k + 1 <= order; ++k)
    denom.set_coeff(k + 1, MultiPoly::constant(vars, -2 * binomial(2 * k, k)));
  return denom.reciprocal();
}

// R(x) = Σ_{n>=1} r_n x^n as the fixed point of R = x(R+1)² + x(R+1)³
// (Eq. sep-odd-gf).
inline PowerSeries r_series(int order) {
  std::vector<std::string> vars{};
  return solve_algebraic_fixed_point(
      [&](const PowerSeries& R) {
        PowerSeries R1 = R + PowerSeries::one(order, vars);
        PowerSeries sq = R1 * R1;
        return (sq + sq * R1).shifted_z(1);
      },
      order, vars);
}

// T(x) = Σ_{n>=1} t_n x^n = x(R+1)² (Eq. sep-even-gf).
inline PowerSeries t_series(int order) {
  std::vector<std::string> vars{};
  PowerSeries R1 = r_series(order) + PowerSeries::one(order, vars);
  return (R1 * R1).shifted_z(1);
}

// G_n(t) = Σ_{D_n(123)} t^exc (conjecture §5.3).
inline MultiPoly conjecture_g(int n) {
  ClassSpec spec;
  spec.n = n;
  spec.avoided = {Perm::parse("123")};
  spec.derangement = true;
  return distribution(spec, {Weight::parse("t^exc")});
}

// Named sequence values, `count` terms from the sequence's natural start:
//   catalan n>=0; r n>=0; t n>=1; u n>=0; Gat1 = G_n(1), n>=1;
//   F with F_m = |G_{2m}(-1)|, m>=1.
inline std::vector<Int> sequence_values(const std::string& name, int count) {
  if (count < 0) throw Error("sequence_values: count < 0");
  std::vector<Int> out;
  if (name == "catalan") {
    for (int n = 0; n < count; ++n) out.push_back(catalan_number(n));
  } else if (name == "r") {
    for (int n = 0; n < count; ++n) out.push_back(r_closed(n));
  } else if (name == "t") {
    for (int n = 1; n <= count; ++n) out.push_back(t_closed(n));
  } else if (name == "u") {
    return u_by_recurrence(count - 1);
  } else if (name == "Gat1") {
    for (int n = 1; n <= count; ++n) {
      std::map<std::string, Int> at1{{"t", 1}};
      out.push_back(conjecture_g(n).evaluate(at1));
    }
  } else if (name == "F") {
    for (int m = 1; m <= count; ++m) {
      std::map<std::string, Int> atm1{{"t", -1}};
      Int v = conjecture_g(2 * m).evaluate(atm1);
      out.push_back(v < 0 ? -v : v);
    }
  } else {
    throw Error("unknown sequence: " + name);
  }
  return out;
}

// Natural first index of each named sequence (b-file numbering).
inline int sequence_offset(const std::string& name) {
  if (name == "catalan" || name == "r" || name == "u") return 0;
  if (name == "t" || name == "Gat1" || name == "F") return 1;
  throw Error("unknown sequence: " + name);
}

}  // namespace qtcat
