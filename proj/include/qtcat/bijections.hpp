#pragma once

// The two bijections behind the ballot-number refinement of A_{2n}(231):
// alpha : a^p_{n+1,k} -> a_{n+1,k-1} swaps the last value with its
// predecessor; beta : a^v_{n+1,k} -> a_{n,k-1} deletes the final two letters
// and renumbers.  a^p / a^v split a_{n,k} by whether pi(2n)-1 is a peak.

#include <vector>

#include "qtcat/permutation.hpp"

namespace qtcat {

// Is value v sitting at a peak, reading missing neighbors as 0?
inline bool value_is_peak(const Perm& p, int v) {
  int i = p.inverse()(v);
  int left = i > 1 ? p(i - 1) : 0;
  int right = i < p.size() ? p(i + 1) : 0;
  return left < v && v > right;
}

// Swap the positions of the values pi(2n) and pi(2n)-1.
inline Perm alpha(const Perm& p) {
  int n = p.size();
  if (n < 2 || p(n) < 2) throw Error("alpha: last letter has no predecessor");
  int v = p(n);
  if (!value_is_peak(p, v - 1)) throw Error("alpha: " + p.str() + " is not in a^p");
  std::vector<int> q = p.values();
  q[p.inverse()(v - 1) - 1] = v;
  q[n - 1] = v - 1;
  return Perm(std::move(q));
}

// Delete the last two letters and close the value gap left by them.
inline Perm beta(const Perm& p) {
  int n = p.size();
  if (n < 2) throw Error("beta: length < 2");
  int last = p(n);
  if (value_is_peak(p, last - 1)) throw Error("beta: " + p.str() + " is not in a^v");
  std::vector<int> q;
  for (int i = 1; i <= n - 2; ++i) q.push_back(p(i) > last ? p(i) - 2 : p(i));
  return Perm(std::move(q));
}

// Two-sided inverse of beta: shift values >= sigma(end) up by 2, then append
// v, v+1.
inline Perm beta_inv(const Perm& s) {
  if (s.size() == 0) throw Error("beta_inv: empty permutation");
  int v = s(s.size());
  std::vector<int> q;
  for (int x : s.values()) q.push_back(x >= v ? x + 2 : x);
  q.push_back(v);
  q.push_back(v + 1);
  return Perm(std::move(q));
}

}  // namespace qtcat
