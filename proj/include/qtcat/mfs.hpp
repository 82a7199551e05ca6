#pragma once

// Foata-Strehl x-factorization and the modified actions, with orbit closure
// and canonical orbit representatives.

#include <set>
#include <string>
#include <vector>

#include "qtcat/classes.hpp"
#include "qtcat/stats.hpp"

namespace qtcat {

// Which modification of the MFS action; each kind bundles its boundary and
// block direction, so callers can never mix a kind with the wrong convention.
//   PhiPrimeZero:     all-greater blocks, fixes valleys under boundary Zero
//   PhiPrimeNPlusOne: all-smaller blocks, fixes peaks under boundary NPlusOne
//   PhiBar:           all-smaller blocks (NPlusOne), additionally fixes
//                     valleys and the left-to-right maxima of the current
//                     permutation
enum class ActionKind { PhiPrimeZero, PhiPrimeNPlusOne, PhiBar };

inline ActionKind parse_action_kind(const std::string& text) {
  if (text == "zero") return ActionKind::PhiPrimeZero;
  if (text == "np1") return ActionKind::PhiPrimeNPlusOne;
  if (text == "bar") return ActionKind::PhiBar;
  throw Error("unknown action kind: " + text + " (expected zero|np1|bar)");
}

inline std::string action_kind_name(ActionKind k) {
  switch (k) {
    case ActionKind::PhiPrimeZero: return "zero";
    case ActionKind::PhiPrimeNPlusOne: return "np1";
    default: return "bar";
  }
}

struct XFactorization {
  std::vector<int> w1, w2, w3, w4;  // pi = w1 w2 x w3 w4
};

// Maximal contiguous blocks adjacent to x whose letters all compare to x the
// same way: greater when `larger`, smaller otherwise.
inline XFactorization x_factorization(const Perm& p, int x, bool larger = true) {
  int n = p.size();
  if (x < 1 || x > n) throw Error("x_factorization: x out of range");
  int i = p.inverse()(x);  // 1-based position of x
  auto side = [&](int v) { return larger ? v > x : v < x; };
  int a = i;
  while (a > 1 && side(p(a - 1))) --a;
  int b = i + 1;
  while (b <= n && side(p(b))) ++b;
  XFactorization f;
  for (int j = 1; j < a; ++j) f.w1.push_back(p(j));
  for (int j = a; j < i; ++j) f.w2.push_back(p(j));
  for (int j = i + 1; j < b; ++j) f.w3.push_back(p(j));
  for (int j = b; j <= n; ++j) f.w4.push_back(p(j));
  return f;
}

// phi_x: swap w2 and w3 around x.
inline Perm phi(const Perm& p, int x, bool larger = true) {
  XFactorization f = x_factorization(p, x, larger);
  std::vector<int> out = f.w1;
  out.insert(out.end(), f.w3.begin(), f.w3.end());
  out.push_back(x);
  out.insert(out.end(), f.w2.begin(), f.w2.end());
  out.insert(out.end(), f.w4.begin(), f.w4.end());
  return Perm(std::move(out));
}

namespace detail {

inline bool valley_at(const Perm& p, int x, Boundary b) {
  auto e = extended(p, b);
  int i = p.inverse()(x);
  return e[i - 1] > e[i] && e[i] < e[i + 1];
}

inline bool peak_at(const Perm& p, int x, Boundary b) {
  auto e = extended(p, b);
  int i = p.inverse()(x);
  return e[i - 1] < e[i] && e[i] > e[i + 1];
}

inline bool is_ltr_max(const Perm& p, int x) {
  for (int j = 1; j <= p.size(); ++j) {
    if (p(j) == x) return true;
    if (p(j) > x) return false;
  }
  return false;
}

}  // namespace detail

// One generator of the Z_2^n action; an involution for every x and kind.
inline Perm act(const Perm& p, int x, ActionKind kind) {
  switch (kind) {
    case ActionKind::PhiPrimeZero:
      if (detail::valley_at(p, x, Boundary::Zero)) return p;
      return phi(p, x, true);
    case ActionKind::PhiPrimeNPlusOne:
      if (detail::peak_at(p, x, Boundary::NPlusOne)) return p;
      return phi(p, x, false);
    default:
      // Fixed-point set re-evaluated on the current permutation at each
      // application: peaks, valleys (both NPlusOne) and left-to-right maxima.
      if (detail::peak_at(p, x, Boundary::NPlusOne) ||
          detail::valley_at(p, x, Boundary::NPlusOne) ||
          detail::is_ltr_max(p, x))
        return p;
      return phi(p, x, false);
  }
}

inline std::set<Perm> orbit(const Perm& p, ActionKind kind) {
  std::set<Perm> seen{p};
  std::vector<Perm> frontier{p};
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (const Perm& q : frontier)
      for (int x = 1; x <= p.size(); ++x) {
        Perm r = act(q, x, kind);
        if (seen.insert(r).second) next.push_back(r);
      }
    frontier = std::move(next);
  }
  return seen;
}

// Canonical orbit element: for the PhiPrime kinds the unique member without
// double descents under the kind's boundary; for PhiBar the unique member
// whose only double descent (NPlusOne) sits at the first letter.  Throws if
// the orbit does not contain exactly one such element.
inline Perm representative(const Perm& p, ActionKind kind) {
  std::set<Perm> orb = orbit(p, kind);
  std::vector<Perm> found;
  for (const Perm& q : orb) {
    bool good;
    if (kind == ActionKind::PhiBar) {
      good = dd_positions(q, Boundary::NPlusOne) == std::vector<int>{1};
    } else {
      Boundary b = kind == ActionKind::PhiPrimeZero ? Boundary::Zero
                                                    : Boundary::NPlusOne;
      good = dd(q, b) == 0;
    }
    if (good) found.push_back(q);
  }
  if (found.size() != 1)
    throw Error("representative: orbit of " + p.str() + " has " +
                std::to_string(found.size()) + " canonical elements");
  return found.front();
}

}  // namespace qtcat
