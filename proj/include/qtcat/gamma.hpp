#pragma once

// Gamma-basis expansion: p = sum_k gamma_k t^k (1+t)^{span-2k}, and the
// (1+t/q) variant via the change of variable t = q*s.

#include <string>
#include <utility>
#include <vector>

#include "qtcat/multipoly.hpp"

namespace qtcat {

enum class GammaKind { OnePlusT, OnePlusTOverQ };

struct GammaBasis {
  GammaKind kind = GammaKind::OnePlusT;
  int span = 0;  // total degree N of the basis family
};

// Failure is a value (the conjecture explorer inspects near-misses): ok=false
// carries the peeled prefix plus the nonzero remainder.
struct GammaResult {
  bool ok = false;
  std::vector<MultiPoly> gammas;  // gamma_0 .. gamma_{floor(span/2)}
  MultiPoly remainder;
};

namespace detail {

// Peels gamma_k = coefficient of `var`^k of the running remainder.
inline GammaResult gamma_peel(const MultiPoly& p, const std::string& var, int span) {
  if (span < 0) throw Error("gamma_expand: negative span");
  if (!p.is_zero()) {
    auto [lo, hi] = p.degree_range(var);
    if (lo < 0 || hi > span) throw Error("gamma_expand: support outside [0, span]");
  }
  MultiPoly one_plus = MultiPoly::constant(p.vars(), 1) + MultiPoly::var(p.vars(), var);
  GammaResult res;
  MultiPoly rem = p;
  for (int k = 0; 2 * k <= span; ++k) {
    MultiPoly gk = rem.coeff_of(var, k);
    res.gammas.push_back(gk);
    if (gk.is_zero()) continue;
    rem = rem - gk.shifted(var, k) * one_plus.pow(span - 2 * k);
  }
  res.remainder = std::move(rem);
  res.ok = res.remainder.is_zero();
  return res;
}

}  // namespace detail

// OnePlusT: expansion of p (over `var`, default t) in t^k (1+t)^{span-2k}.
// OnePlusTOverQ: substitute t = q*s, expand in s, then multiply gamma_k by
// q^{-k}; the returned gammas are Laurent in q and satisfy
// p = sum_k gamma_k t^k (1+t/q)^{span-2k}.
inline GammaResult gamma_expand(const MultiPoly& p, const GammaBasis& basis,
                                const std::string& var = "t") {
  if (basis.kind == GammaKind::OnePlusT) return detail::gamma_peel(p, var, basis.span);

  if (var != "t") throw Error("gamma_expand: OnePlusTOverQ expands in t only");
  std::vector<std::string> svars;  // input vars with t replaced by s (kept ordered)
  bool has_q = false;
  for (const auto& v : p.vars()) {
    if (v == "t") continue;
    if (v == "q") has_q = true;
    if (v == "s") throw Error("gamma_expand: input already uses s");
    svars.push_back(v);
  }
  if (!has_q) svars.insert(svars.begin(), "q");
  svars.push_back("s");
  std::map<std::string, SignedMonomial> binding;
  binding["t"] = SignedMonomial{1, {{"q", 1}, {"s", 1}}};
  MultiPoly ps = p.substitute(binding, svars);
  GammaResult res = detail::gamma_peel(ps, "s", basis.span);
  // Map the coefficients back onto the input variables (plus q): their
  // s-exponents are zero after peeling, and gamma_k picks up q^{-k}.
  std::vector<std::string> rvars = p.vars();
  if (!has_q) {
    rvars.push_back("q");
    std::sort(rvars.begin(), rvars.end(), [](const std::string& a, const std::string& b) {
      return global_var_rank(a) < global_var_rank(b);
    });
  }
  std::map<std::string, SignedMonomial> drop_s;
  drop_s["s"] = SignedMonomial{1, {}};
  std::map<std::string, SignedMonomial> undo_s;  // s = t/q for the remainder
  undo_s["s"] = SignedMonomial{1, {{"t", 1}, {"q", -1}}};
  for (std::size_t k = 0; k < res.gammas.size(); ++k) {
    res.gammas[k] =
        res.gammas[k].shifted("q", -static_cast<int>(k)).substitute(drop_s, rvars);
  }
  res.remainder = res.remainder.substitute(undo_s, rvars);
  return res;
}

// Re-sum gammas against the basis; verifies ok results bit-exactly.
inline MultiPoly gamma_reconstruct(const std::vector<MultiPoly>& gammas,
                                   const GammaBasis& basis,
                                   const std::string& var = "t") {
  if (gammas.empty()) throw Error("gamma_reconstruct: no coefficients");
  const std::vector<std::string>& vars = gammas[0].vars();
  MultiPoly base(vars);
  if (basis.kind == GammaKind::OnePlusT) {
    base = MultiPoly::constant(vars, 1) + MultiPoly::var(vars, var);
  } else {
    base = MultiPoly::constant(vars, 1) +
           MultiPoly::var(vars, var).shifted("q", -1);
  }
  MultiPoly total(vars);
  for (std::size_t k = 0; k < gammas.size(); ++k) {
    if (gammas[k].is_zero()) continue;
    total = total + gammas[k].shifted(var, static_cast<int>(k)) *
                        base.pow(basis.span - 2 * static_cast<int>(k));
  }
  return total;
}

}  // namespace qtcat
