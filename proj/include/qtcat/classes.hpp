#pragma once

// Permutation classes: pattern-avoidance sets intersected with shape and
// structural predicates, plus the parameterized families used in the
// (-1)-evaluation and gamma-coefficient interpretations.
//
// ClassSpec text grammar: semicolon-separated atoms, with the length given
// once as @n=INT attached to any atom.  Atoms:
//   all                 no constraint
//   av:P1,P2,...        avoid each classical pattern
//   alt                 alternating, pi(1) < pi(2) > pi(3) < ...
//   downup              the reverse shape, pi(1) > pi(2) < pi(3) > ...
//   der                 derangements, fix = 0
//   coder               coderangements, fmax = 0
//   normal              1 appears to the left of n
//   tilde:TAU,K         S~_{n,K}(TAU): avoid TAU, no double descents, des = K
//                       (boundary np1 for TAU in {132,231}, zero for {213,312})
//   hat:K               S^_{n,K}(321): exc = K and pi(i) > i  =>
//                       pi^{-1}(i+1) >= i+1 for 1 <= i <= n-1
//   ndw:K               NDW_{n,K}: 321-avoiders, wex = K, no i in 1..n-1 with
//                       pi(i+1) >= i+1 and i >= pi^{-1}(i)
//   nde:K               NDE_{n,K}: 321-avoiding derangements, exc = K, no i
//                       with pi^{-1}(i) < i < pi(i)
//   dbar132:K           D-bar*_{n,K}(132): 132-avoiding coderangements with
//                       exactly one double descent (np1) and des = K
//   ballot:K            a_{n,K}: pi in A_{2n}(231) with pi(2n) = n+K+1
//                       (here @n gives the subscript n; the length is 2n)
// Example: "av:231,132@n=6", "alt@n=9;av:2413,3142", "ballot:2@n=3".

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qtcat/multipoly.hpp"
#include "qtcat/patterns.hpp"
#include "qtcat/stats.hpp"

namespace qtcat {

inline bool is_involution(const Perm& p) { return p.inverse() == p; }

inline bool is_derangement(const Perm& p) { return fix(p) == 0; }

// Coderangements: fmax = 0.
inline bool is_coderangement(const Perm& p) { return fmax(p) == 0; }

// 1 appears strictly to the left of n (n >= 2).
inline bool is_normal(const Perm& p) {
  if (p.size() < 2) return false;
  return p.inverse()(1) < p.inverse()(p.size());
}

struct ClassSpec {
  enum class Special { None, Tilde, Hat, Ndw, Nde, Dbar132, Ballot };

  int n = -1;  // for Ballot this is the subscript; the length is 2n
  std::vector<Perm> avoided;
  Shape shape = Shape::Any;
  bool derangement = false;
  bool coderangement = false;
  bool normal = false;
  Special special = Special::None;
  int param_k = 0;
  Perm tilde_tau;

  int length() const { return special == Special::Ballot ? 2 * n : n; }

  static ClassSpec parse(const std::string& text);
  std::string str() const;
};

namespace detail {

inline bool hat_condition(const Perm& p) {
  Perm q = p.inverse();
  for (int i = 1; i < p.size(); ++i)
    if (p(i) > i && q(i + 1) < i + 1) return false;
  return true;
}

inline bool ndw_condition(const Perm& p) {
  Perm q = p.inverse();
  for (int i = 1; i < p.size(); ++i)
    if (p(i + 1) >= i + 1 && i >= q(i)) return false;
  return true;
}

inline bool nde_condition(const Perm& p) {
  Perm q = p.inverse();
  for (int i = 1; i <= p.size(); ++i)
    if (q(i) < i && i < p(i)) return false;
  return true;
}

}  // namespace detail

inline ClassSpec ClassSpec::parse(const std::string& text) {
  ClassSpec spec;
  std::string body = text;
  auto at = body.find("@n=");
  if (at == std::string::npos) throw Error("class spec needs @n=INT: " + text);
  auto end = body.find(';', at);
  std::string num = body.substr(at + 3, end == std::string::npos
                                            ? std::string::npos
                                            : end - (at + 3));
  try {
    spec.n = std::stoi(num);
  } catch (const std::exception&) {
    throw Error("bad @n= value in class spec: " + text);
  }
  if (spec.n < 0) throw Error("class spec needs n >= 0: " + text);
  body.erase(at, 3 + num.size());

  std::vector<std::string> atoms;
  std::size_t i = 0;
  while (i <= body.size()) {
    auto j = body.find(';', i);
    if (j == std::string::npos) j = body.size();
    if (j > i) atoms.push_back(body.substr(i, j - i));
    i = j + 1;
  }
  if (atoms.empty()) throw Error("empty class spec: " + text);

  auto int_arg = [&](const std::string& atom, std::size_t colon) {
    try {
      return std::stoi(atom.substr(colon + 1));
    } catch (const std::exception&) {
      throw Error("bad class atom: " + atom);
    }
  };

  for (const std::string& atom : atoms) {
    if (atom == "all") continue;
    if (atom == "alt") {
      spec.shape = Shape::UpDown;
      continue;
    }
    if (atom == "downup") {
      spec.shape = Shape::DownUp;
      continue;
    }
    if (atom == "der") {
      spec.derangement = true;
      continue;
    }
    if (atom == "coder") {
      spec.coderangement = true;
      continue;
    }
    if (atom == "normal") {
      spec.normal = true;
      continue;
    }
    auto colon = atom.find(':');
    if (colon == std::string::npos) throw Error("bad class atom: " + atom);
    std::string head = atom.substr(0, colon);
    if (head == "av") {
      std::string rest = atom.substr(colon + 1);
      std::size_t k = 0;
      while (k <= rest.size()) {
        auto c = rest.find(',', k);
        if (c == std::string::npos) c = rest.size();
        if (c > k) spec.avoided.push_back(Perm::parse(rest.substr(k, c - k)));
        k = c + 1;
      }
      if (spec.avoided.empty()) throw Error("bad class atom: " + atom);
      continue;
    }
    if (head == "tilde") {
      auto comma = atom.find(',', colon);
      if (comma == std::string::npos) throw Error("bad class atom: " + atom);
      spec.special = Special::Tilde;
      spec.tilde_tau = Perm::parse(atom.substr(colon + 1, comma - colon - 1));
      try {
        spec.param_k = std::stoi(atom.substr(comma + 1));
      } catch (const std::exception&) {
        throw Error("bad class atom: " + atom);
      }
      continue;
    }
    if (head == "hat" || head == "ndw" || head == "nde" || head == "dbar132" ||
        head == "ballot") {
      spec.special = head == "hat"      ? Special::Hat
                     : head == "ndw"    ? Special::Ndw
                     : head == "nde"    ? Special::Nde
                     : head == "ballot" ? Special::Ballot
                                        : Special::Dbar132;
      spec.param_k = int_arg(atom, colon);
      continue;
    }
    throw Error("bad class atom: " + atom);
  }
  return spec;
}

inline std::string ClassSpec::str() const {
  std::string out;
  auto add = [&](const std::string& a) {
    if (!out.empty()) out += ';';
    out += a;
  };
  if (!avoided.empty()) {
    std::string a = "av:";
    for (std::size_t i = 0; i < avoided.size(); ++i) {
      if (i) a += ',';
      std::string digits;
      for (int v : avoided[i].values()) digits += std::to_string(v);
      a += digits;
    }
    add(a);
  }
  if (shape == Shape::UpDown) add("alt");
  if (shape == Shape::DownUp) add("downup");
  if (derangement) add("der");
  if (coderangement) add("coder");
  if (normal) add("normal");
  switch (special) {
    case Special::Tilde: {
      std::string digits;
      for (int v : tilde_tau.values()) digits += std::to_string(v);
      add("tilde:" + digits + "," + std::to_string(param_k));
      break;
    }
    case Special::Hat: add("hat:" + std::to_string(param_k)); break;
    case Special::Ndw: add("ndw:" + std::to_string(param_k)); break;
    case Special::Nde: add("nde:" + std::to_string(param_k)); break;
    case Special::Dbar132: add("dbar132:" + std::to_string(param_k)); break;
    case Special::Ballot: add("ballot:" + std::to_string(param_k)); break;
    case Special::None: break;
  }
  if (out.empty()) out = "all";
  return out + "@n=" + std::to_string(n);
}

// Membership test against the full predicate set (length must match).
inline bool membership(const Perm& p, const ClassSpec& spec) {
  if (p.size() != spec.length()) return false;
  if (!avoids(p, spec.avoided)) return false;
  if (!has_shape(p, spec.shape)) return false;
  if (spec.derangement && !is_derangement(p)) return false;
  if (spec.coderangement && !is_coderangement(p)) return false;
  if (spec.normal && !is_normal(p)) return false;
  switch (spec.special) {
    case ClassSpec::Special::None:
      break;
    case ClassSpec::Special::Tilde: {
      if (!avoids(p, {spec.tilde_tau})) return false;
      int f = spec.tilde_tau(1);
      Boundary b = (f == 1 || (f == 2 && spec.tilde_tau(2) == 3))
                       ? Boundary::NPlusOne
                       : Boundary::Zero;
      if (dd(p, b) != 0 || des(p) != spec.param_k) return false;
      break;
    }
    case ClassSpec::Special::Hat:
      if (!avoids(p, {Perm::parse("321")})) return false;
      if (exc(p) != spec.param_k || !detail::hat_condition(p)) return false;
      break;
    case ClassSpec::Special::Ndw:
      if (!avoids(p, {Perm::parse("321")})) return false;
      if (wex(p) != spec.param_k || !detail::ndw_condition(p)) return false;
      break;
    case ClassSpec::Special::Nde:
      if (!avoids(p, {Perm::parse("321")})) return false;
      if (fix(p) != 0 || exc(p) != spec.param_k || !detail::nde_condition(p))
        return false;
      break;
    case ClassSpec::Special::Dbar132:
      if (!avoids(p, {Perm::parse("132")})) return false;
      if (!is_coderangement(p)) return false;
      if (dd(p, Boundary::NPlusOne) != 1 || des(p) != spec.param_k)
        return false;
      break;
    case ClassSpec::Special::Ballot:
      if (!avoids(p, {Perm::parse("231")})) return false;
      if (!has_shape(p, Shape::UpDown)) return false;
      if (p(p.size()) != spec.n + spec.param_k + 1) return false;
      break;
  }
  return true;
}

// Enumerate the class, visiting each member once.  The avoidance patterns and
// shape prune the search tree; the remaining predicates filter at the leaves.
inline void enumerate(const ClassSpec& spec,
                      const std::function<void(const Perm&)>& emit) {
  std::vector<Perm> avoided = spec.avoided;
  Shape shape = spec.shape;
  switch (spec.special) {
    case ClassSpec::Special::Tilde: avoided.push_back(spec.tilde_tau); break;
    case ClassSpec::Special::Hat:
    case ClassSpec::Special::Ndw:
    case ClassSpec::Special::Nde:
      avoided.push_back(Perm::parse("321"));
      break;
    case ClassSpec::Special::Dbar132:
      avoided.push_back(Perm::parse("132"));
      break;
    case ClassSpec::Special::Ballot:
      avoided.push_back(Perm::parse("231"));
      shape = Shape::UpDown;
      break;
    case ClassSpec::Special::None: break;
  }
  std::function<bool(const std::vector<int>&)> prefix_ok;
  if (spec.derangement || spec.special == ClassSpec::Special::Nde)
    prefix_ok = [](const std::vector<int>& w) {
      return w.back() != static_cast<int>(w.size());
    };
  enumerate_avoiders(spec.length(), avoided, shape, prefix_ok,
                     [&](const Perm& p) {
                       if (membership(p, spec)) emit(p);
                     });
}

inline std::vector<Perm> enumerate(const ClassSpec& spec) {
  std::vector<Perm> out;
  enumerate(spec, [&](const Perm& p) { out.push_back(p); });
  return out;
}

inline long long class_size(const ClassSpec& spec) {
  long long c = 0;
  enumerate(spec, [&](const Perm&) { ++c; });
  return c;
}

// One multiplicative weight factor (sign*var)^(+-stat).
//   text grammar: [-]BASE^[-]STATKEY with BASE a variable name or 1
//   examples: t^des   -1^des   -q^des   q^-exc   q^31-2
struct Weight {
  std::string stat;
  std::string var;  // empty when the base is 1 or -1
  bool neg_base = false;
  bool neg_exp = false;

  static Weight parse(const std::string& text) {
    Weight w;
    std::string s = text;
    if (!s.empty() && s[0] == '-') {
      w.neg_base = true;
      s.erase(0, 1);
    }
    auto caret = s.find('^');
    if (caret == std::string::npos || caret == 0)
      throw Error("bad weight (need BASE^STAT): " + text);
    std::string base = s.substr(0, caret);
    std::string st = s.substr(caret + 1);
    if (base != "1") {
      global_var_rank(base);  // validates the name
      w.var = base;
    }
    if (!st.empty() && st[0] == '-') {
      w.neg_exp = true;
      st.erase(0, 1);
    }
    if (st.empty()) throw Error("bad weight (empty stat): " + text);
    if (w.var.empty() && w.neg_exp)
      throw Error("bad weight (sign base takes no exponent sign): " + text);
    parse_stat(st);  // validates the key
    w.stat = st;
    return w;
  }

  std::string str() const {
    std::string out;
    if (neg_base) out += '-';
    out += var.empty() ? "1" : var;
    out += '^';
    if (neg_exp) out += '-';
    return out + stat;
  }
};

inline std::vector<Weight> parse_weights(const std::string& text) {
  std::vector<Weight> out;
  std::size_t i = 0;
  while (i <= text.size()) {
    auto j = text.find(',', i);
    if (j == std::string::npos) j = text.size();
    if (j > i) out.push_back(Weight::parse(text.substr(i, j - i)));
    i = j + 1;
  }
  if (out.empty()) throw Error("empty weight list");
  return out;
}

// Sum over the class of the product of weight factors, as an exact MultiPoly
// over the weights' variables (global order).
inline MultiPoly distribution(const ClassSpec& spec,
                              const std::vector<Weight>& weights) {
  std::vector<std::string> vars;
  for (const std::string& name : global_var_order()) {
    for (const Weight& w : weights)
      if (w.var == name) {
        vars.push_back(name);
        break;
      }
  }
  std::vector<StatFn> fns;
  std::vector<int> slot;  // index into vars, or -1
  for (const Weight& w : weights) {
    fns.push_back(parse_stat(w.stat));
    int s = -1;
    for (std::size_t i = 0; i < vars.size(); ++i)
      if (vars[i] == w.var) s = static_cast<int>(i);
    slot.push_back(s);
  }
  MultiPoly::TermMap terms;
  enumerate(spec, [&](const Perm& p) {
    MultiPoly::Exp e(vars.size(), 0);
    int sign = 1;
    for (std::size_t i = 0; i < weights.size(); ++i) {
      long long v = fns[i](p);
      if (weights[i].neg_base && (v & 1)) sign = -sign;
      if (slot[i] >= 0) e[slot[i]] += weights[i].neg_exp ? -static_cast<int>(v)
                                                         : static_cast<int>(v);
    }
    terms[e] += sign;
  });
  return MultiPoly::from_terms(vars, std::move(terms));
}

inline MultiPoly distribution(const std::string& class_text,
                              const std::string& weights_text) {
  return distribution(ClassSpec::parse(class_text), parse_weights(weights_text));
}

}  // namespace qtcat
