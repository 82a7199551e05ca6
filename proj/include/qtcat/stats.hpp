#pragma once

// Permutation statistics.  Positions and values are 1-based throughout; the
// boundary conventions pad the word with \pi(0) and \pi(n+1) before reading
// off peaks, valleys, double ascents and double descents.

#include <functional>
#include <string>
#include <vector>

#include "qtcat/patterns.hpp"
#include "qtcat/permutation.hpp"

namespace qtcat {

// Boundary convention: values assumed at positions 0 and n+1.
//   Zero     -> (0, 0)
//   NPlusOne -> (n+1, n+1)
//   Mixed    -> (0, n+1)
enum class Boundary { Zero, NPlusOne, Mixed };

inline Boundary parse_boundary(const std::string& text) {
  if (text == "zero") return Boundary::Zero;
  if (text == "np1") return Boundary::NPlusOne;
  if (text == "mixed") return Boundary::Mixed;
  throw Error("unknown boundary: " + text + " (expected zero|np1|mixed)");
}

inline std::string boundary_name(Boundary b) {
  switch (b) {
    case Boundary::Zero: return "zero";
    case Boundary::NPlusOne: return "np1";
    default: return "mixed";
  }
}

namespace detail {

inline std::pair<int, int> boundary_vals(int n, Boundary b) {
  switch (b) {
    case Boundary::Zero: return {0, 0};
    case Boundary::NPlusOne: return {n + 1, n + 1};
    default: return {0, n + 1};
  }
}

// Extended word e[0..n+1] with e[i] = pi(i) for 1 <= i <= n.
inline std::vector<int> extended(const Perm& p, Boundary b) {
  int n = p.size();
  auto [l, r] = boundary_vals(n, b);
  std::vector<int> e(n + 2);
  e[0] = l;
  for (int i = 1; i <= n; ++i) e[i] = p(i);
  e[n + 1] = r;
  return e;
}

}  // namespace detail

inline long long des(const Perm& p) {
  long long c = 0;
  for (int i = 1; i < p.size(); ++i) c += p(i) > p(i + 1);
  return c;
}

inline long long asc(const Perm& p) {
  long long c = 0;
  for (int i = 1; i < p.size(); ++i) c += p(i) < p(i + 1);
  return c;
}

inline long long exc(const Perm& p) {
  long long c = 0;
  for (int i = 1; i <= p.size(); ++i) c += p(i) > i;
  return c;
}

inline long long fix(const Perm& p) {
  long long c = 0;
  for (int i = 1; i <= p.size(); ++i) c += p(i) == i;
  return c;
}

inline long long wex(const Perm& p) {
  long long c = 0;
  for (int i = 1; i <= p.size(); ++i) c += p(i) >= i;
  return c;
}

inline long long drop(const Perm& p) {
  long long c = 0;
  for (int i = 1; i <= p.size(); ++i) c += p(i) < i;
  return c;
}

inline long long inv(const Perm& p) {
  long long c = 0;
  for (int i = 1; i <= p.size(); ++i)
    for (int j = i + 1; j <= p.size(); ++j) c += p(i) > p(j);
  return c;
}

// First letter (0 for the empty permutation).
inline long long fl(const Perm& p) { return p.size() ? p(1) : 0; }

inline std::vector<bool> ltr_max_flags(const Perm& p) {
  std::vector<bool> out(p.size());
  int m = 0;
  for (int i = 1; i <= p.size(); ++i) {
    out[i - 1] = p(i) > m;
    m = std::max(m, p(i));
  }
  return out;
}

// Ascent bottoms (with the convention pi(n+1) = n+1) that are also
// left-to-right maxima.
inline long long fmax(const Perm& p) {
  int n = p.size();
  auto flags = ltr_max_flags(p);
  long long c = 0;
  for (int i = 1; i <= n; ++i) {
    int nxt = (i < n) ? p(i + 1) : n + 1;
    if (p(i) < nxt && flags[i - 1]) ++c;
  }
  return c;
}

// MAD pi = des pi + (31-2) pi + 2 (2-31) pi.
inline long long mad(const Perm& p) {
  return des(p) + count_vincular(p, "31-2") + 2 * count_vincular(p, "2-31");
}

// Crossings: i < j <= pi(i) < pi(j)  or  pi(i) < pi(j) < i < j.
inline long long cros(const Perm& p) {
  int n = p.size();
  long long c = 0;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      if (j <= p(i) && p(i) < p(j)) ++c;
      if (p(i) < p(j) && p(j) < i) ++c;
    }
  return c;
}

// Nestings: i < j <= pi(j) < pi(i)  or  pi(j) < pi(i) < i < j.
inline long long nest(const Perm& p) {
  int n = p.size();
  long long c = 0;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      if (j <= p(j) && p(j) < p(i)) ++c;
      if (p(j) < p(i) && p(i) < i) ++c;
    }
  return c;
}

inline long long icr(const Perm& p) { return cros(p.inverse()); }
inline long long ine(const Perm& p) { return nest(p.inverse()); }

inline long long peak(const Perm& p, Boundary b) {
  auto e = detail::extended(p, b);
  long long c = 0;
  for (int i = 1; i <= p.size(); ++i) c += e[i - 1] < e[i] && e[i] > e[i + 1];
  return c;
}

inline long long valley(const Perm& p, Boundary b) {
  auto e = detail::extended(p, b);
  long long c = 0;
  for (int i = 1; i <= p.size(); ++i) c += e[i - 1] > e[i] && e[i] < e[i + 1];
  return c;
}

inline long long da(const Perm& p, Boundary b) {
  auto e = detail::extended(p, b);
  long long c = 0;
  for (int i = 1; i <= p.size(); ++i) c += e[i - 1] < e[i] && e[i] < e[i + 1];
  return c;
}

inline long long dd(const Perm& p, Boundary b) {
  auto e = detail::extended(p, b);
  long long c = 0;
  for (int i = 1; i <= p.size(); ++i) c += e[i - 1] > e[i] && e[i] > e[i + 1];
  return c;
}

// Positions of double descents under the given boundary, in increasing order.
inline std::vector<int> dd_positions(const Perm& p, Boundary b) {
  auto e = detail::extended(p, b);
  std::vector<int> out;
  for (int i = 1; i <= p.size(); ++i)
    if (e[i - 1] > e[i] && e[i] > e[i + 1]) out.push_back(i);
  return out;
}

// Cyclic statistics: classify each value x by comparing pi^{-1}(x) and pi(x)
// against x.
inline long long cvalley(const Perm& p) {
  Perm q = p.inverse();
  long long c = 0;
  for (int x = 1; x <= p.size(); ++x) c += q(x) > x && p(x) > x;
  return c;
}

inline long long cda(const Perm& p) {
  Perm q = p.inverse();
  long long c = 0;
  for (int x = 1; x <= p.size(); ++x) c += q(x) < x && p(x) > x;
  return c;
}

inline long long cdd(const Perm& p) {
  Perm q = p.inverse();
  long long c = 0;
  for (int x = 1; x <= p.size(); ++x) c += q(x) > x && p(x) < x;
  return c;
}

// Admissible inversions (convention pi(0) = pi(n+1) = 0): inversions (i,j)
// with  (j < n and pi(j) < pi(j+1))  or  some i < l < j with pi(l) < pi(j).
inline long long adi(const Perm& p) {
  int n = p.size();
  long long c = 0;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      if (p(i) <= p(j)) continue;
      bool ok = (j < n && p(j) < p(j + 1));
      for (int l = i + 1; l < j && !ok; ++l) ok = p(l) < p(j);
      if (ok) ++c;
    }
  return c;
}

// Star admissible inversions (convention pi(0) = pi(n+1) = n+1): inversions
// (i,j) with  (i > 1 and pi(i-1) < pi(i))  or  some i < l < j with
// pi(i) < pi(l).
inline long long adi_star(const Perm& p) {
  int n = p.size();
  long long c = 0;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      if (p(i) <= p(j)) continue;
      bool ok = (i > 1 && p(i - 1) < p(i));
      for (int l = i + 1; l < j && !ok; ++l) ok = p(i) < p(l);
      if (ok) ++c;
    }
  return c;
}

using StatFn = std::function<long long(const Perm&)>;

inline bool base_is_boundary_sensitive(const std::string& key) {
  return key == "peak" || key == "valley" || key == "da" || key == "dd";
}

// StatKey grammar:
//   plain keys        des asc exc fix wex inv drop fl fmax MAD cros nest
//                     icr ine adi adiStar cvalley cda cdd
//   boundary keys     peak:KIND valley:KIND da:KIND dd:KIND
//                     with KIND in {zero, np1, mixed}
//   vincular keys     any pattern text starting with a digit, e.g. 31-2
inline StatFn parse_stat(const std::string& key) {
  if (key == "des") return [](const Perm& p) { return des(p); };
  if (key == "asc") return [](const Perm& p) { return asc(p); };
  if (key == "exc") return [](const Perm& p) { return exc(p); };
  if (key == "fix") return [](const Perm& p) { return fix(p); };
  if (key == "wex") return [](const Perm& p) { return wex(p); };
  if (key == "inv") return [](const Perm& p) { return inv(p); };
  if (key == "drop") return [](const Perm& p) { return drop(p); };
  if (key == "fl") return [](const Perm& p) { return fl(p); };
  if (key == "fmax") return [](const Perm& p) { return fmax(p); };
  if (key == "MAD" || key == "mad") return [](const Perm& p) { return mad(p); };
  if (key == "cros") return [](const Perm& p) { return cros(p); };
  if (key == "nest") return [](const Perm& p) { return nest(p); };
  if (key == "icr") return [](const Perm& p) { return icr(p); };
  if (key == "ine") return [](const Perm& p) { return ine(p); };
  if (key == "adi") return [](const Perm& p) { return adi(p); };
  if (key == "adiStar" || key == "adi*")
    return [](const Perm& p) { return adi_star(p); };
  if (key == "cvalley") return [](const Perm& p) { return cvalley(p); };
  if (key == "cda") return [](const Perm& p) { return cda(p); };
  if (key == "cdd") return [](const Perm& p) { return cdd(p); };
  if (key == "one" || key == "1") return [](const Perm&) { return 0LL; };
  auto colon = key.find(':');
  if (colon != std::string::npos) {
    std::string base = key.substr(0, colon);
    Boundary b = parse_boundary(key.substr(colon + 1));
    if (base == "peak") return [b](const Perm& p) { return peak(p, b); };
    if (base == "valley") return [b](const Perm& p) { return valley(p, b); };
    if (base == "da") return [b](const Perm& p) { return da(p, b); };
    if (base == "dd") return [b](const Perm& p) { return dd(p, b); };
    throw Error("unknown boundary statistic: " + key);
  }
  if (base_is_boundary_sensitive(key))
    throw Error("statistic " + key + " needs a boundary, e.g. " + key + ":zero");
  if (!key.empty() && key[0] >= '1' && key[0] <= '9') {
    Pattern pat = Pattern::parse(key);
    return [pat](const Perm& p) { return count_vincular(p, pat); };
  }
  throw Error("unknown statistic: " + key);
}

inline long long stat(const Perm& p, const std::string& key) {
  return parse_stat(key)(p);
}

}  // namespace qtcat
