#pragma once

// Sparse exact multivariate Laurent polynomials over a fixed global variable
// order (t, q, x, y, p, s).  Canonical form: no zero coefficients, exponent
// vectors aligned with the declared variable list.  Printing is descending
// lexicographic in the exponent vector, coefficient first: 3*t^2*q^-1.

#include <algorithm>
#include <cstddef>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace qtcat {

using Int = boost::multiprecision::cpp_int;

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

inline const std::vector<std::string>& global_var_order() {
  static const std::vector<std::string> order = {"t", "q", "x", "y", "p", "s"};
  return order;
}

inline int global_var_rank(const std::string& name) {
  const auto& order = global_var_order();
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (order[i] == name) return static_cast<int>(i);
  }
  throw Error("unknown variable: " + name);
}

// Validates that vars is an ordered subsequence of the global order.
inline void check_var_list(const std::vector<std::string>& vars) {
  int prev = -1;
  for (const auto& v : vars) {
    int r = global_var_rank(v);
    if (r <= prev) throw Error("variable list not in global order: " + v);
    prev = r;
  }
}

// A signed monomial: sign * prod var^exp, the only substitution target shape.
struct SignedMonomial {
  int sign = 1;  // +1 or -1
  std::map<std::string, int> exps;
};

class MultiPoly {
 public:
  using Exp = std::vector<int>;
  using TermMap = std::map<Exp, Int>;

  MultiPoly() = default;  // zero polynomial over the empty variable list

  explicit MultiPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {
    check_var_list(vars_);
  }

  static MultiPoly constant(std::vector<std::string> vars, Int c) {
    MultiPoly r(std::move(vars));
    if (c != 0) r.terms_[Exp(r.vars_.size(), 0)] = std::move(c);
    return r;
  }

  static MultiPoly monomial(std::vector<std::string> vars, Int coef, Exp exps) {
    MultiPoly r(std::move(vars));
    if (exps.size() != r.vars_.size()) throw Error("exponent vector length mismatch");
    if (coef != 0) r.terms_[std::move(exps)] = std::move(coef);
    return r;
  }

  static MultiPoly from_terms(std::vector<std::string> vars, TermMap terms) {
    MultiPoly r(std::move(vars));
    for (auto& [e, c] : terms)
      if (e.size() != r.vars_.size()) throw Error("exponent vector length mismatch");
    std::erase_if(terms, [](const auto& t) { return t.second == 0; });
    r.terms_ = std::move(terms);
    return r;
  }

  // The monomial 1*name over vars; name must be in vars.
  static MultiPoly var(std::vector<std::string> vars, const std::string& name) {
    MultiPoly r(std::move(vars));
    Exp e(r.vars_.size(), 0);
    e[r.index_of(name)] = 1;
    r.terms_[std::move(e)] = 1;
    return r;
  }

  const std::vector<std::string>& vars() const { return vars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  bool is_constant() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 &&
           std::all_of(terms_.begin()->first.begin(), terms_.begin()->first.end(),
                       [](int e) { return e == 0; });
  }

  Int constant_value() const {
    auto it = terms_.find(Exp(vars_.size(), 0));
    return it == terms_.end() ? Int(0) : it->second;
  }

  Int coefficient(const Exp& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Int(0) : it->second;
  }

  MultiPoly operator+(const MultiPoly& o) const {
    check_same_vars(o);
    MultiPoly r(vars_);
    r.terms_ = terms_;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
  }

  MultiPoly operator-(const MultiPoly& o) const {
    check_same_vars(o);
    MultiPoly r(vars_);
    r.terms_ = terms_;
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
  }

  MultiPoly operator-() const {
    MultiPoly r(vars_);
    for (const auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
  }

  MultiPoly operator*(const MultiPoly& o) const {
    check_same_vars(o);
    MultiPoly r(vars_);
    for (const auto& [e1, c1] : terms_) {
      for (const auto& [e2, c2] : o.terms_) {
        Exp e(e1);
        for (std::size_t i = 0; i < e.size(); ++i) e[i] += e2[i];
        r.add_term(std::move(e), c1 * c2);
      }
    }
    return r;
  }

  bool operator==(const MultiPoly& o) const {
    return vars_ == o.vars_ && terms_ == o.terms_;
  }
  bool operator!=(const MultiPoly& o) const { return !(*this == o); }

  MultiPoly scaled(const Int& k) const {
    MultiPoly r(vars_);
    if (k == 0) return r;
    for (const auto& [e, c] : terms_) r.terms_[e] = c * k;
    return r;
  }

  MultiPoly pow(int e) const {
    if (e < 0) throw Error("pow: negative exponent");
    MultiPoly r = constant(vars_, 1);
    for (int i = 0; i < e; ++i) r = r * *this;
    return r;
  }

  // Multiply by name^k (k may be negative: Laurent shift).
  MultiPoly shifted(const std::string& name, int k) const {
    int vi = index_of(name);
    MultiPoly r(vars_);
    for (const auto& [e, c] : terms_) {
      Exp e2(e);
      e2[vi] += k;
      r.terms_[std::move(e2)] = c;
    }
    return r;
  }

  // Coefficient of name^k, as a MultiPoly over the same vars with that
  // variable's exponent zeroed.
  MultiPoly coeff_of(const std::string& name, int k) const {
    int vi = index_of(name);
    MultiPoly r(vars_);
    for (const auto& [e, c] : terms_) {
      if (e[vi] != k) continue;
      Exp e2(e);
      e2[vi] = 0;
      r.add_term(std::move(e2), c);
    }
    return r;
  }

  // [min, max] exponent of name over the support; requires a nonzero poly.
  std::pair<int, int> degree_range(const std::string& name) const {
    if (terms_.empty()) throw Error("degree_range: zero polynomial");
    int vi = index_of(name);
    int lo = terms_.begin()->first[vi], hi = lo;
    for (const auto& [e, c] : terms_) {
      lo = std::min(lo, e[vi]);
      hi = std::max(hi, e[vi]);
    }
    return {lo, hi};
  }

  // Simultaneous substitution var -> signed monomial over result_vars.
  // Unbound variables must themselves appear in result_vars.
  MultiPoly substitute(const std::map<std::string, SignedMonomial>& bindings,
                       std::vector<std::string> result_vars) const {
    MultiPoly r(std::move(result_vars));
    std::vector<int> self_slot(vars_.size(), -1);  // identity mapping if unbound
    std::vector<const SignedMonomial*> bound(vars_.size(), nullptr);
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      auto it = bindings.find(vars_[i]);
      if (it != bindings.end()) {
        if (it->second.sign != 1 && it->second.sign != -1)
          throw Error("substitute: sign must be +1 or -1");
        bound[i] = &it->second;
      } else {
        self_slot[i] = r.index_of(vars_[i]);
      }
    }
    for (const auto& [e, c] : terms_) {
      Exp out(r.vars_.size(), 0);
      Int coef = c;
      for (std::size_t i = 0; i < vars_.size(); ++i) {
        if (e[i] == 0) continue;
        if (bound[i]) {
          const SignedMonomial& m = *bound[i];
          if (m.sign == -1 && (e[i] % 2 != 0)) coef = -coef;
          for (const auto& [vn, ve] : m.exps) out[r.index_of(vn)] += ve * e[i];
        } else {
          out[self_slot[i]] += e[i];
        }
      }
      r.add_term(std::move(out), std::move(coef));
    }
    return r;
  }

  // Full evaluation; negative exponents only valid at values +-1.
  Int evaluate(const std::map<std::string, Int>& values) const {
    Int total = 0;
    for (const auto& [e, c] : terms_) {
      Int term = c;
      for (std::size_t i = 0; i < vars_.size(); ++i) {
        if (e[i] == 0) continue;
        auto it = values.find(vars_[i]);
        if (it == values.end()) throw Error("evaluate: unbound variable " + vars_[i]);
        const Int& v = it->second;
        if (e[i] < 0 && v != 1 && v != -1) throw Error("evaluate: negative exponent");
        int k = e[i] < 0 ? -e[i] : e[i];
        for (int j = 0; j < k; ++j) term *= v;
      }
      total += term;
    }
    return total;
  }

  // Canonical text form, pinned by golden files: terms in descending
  // lexicographic exponent order, coefficient first, ^ for exponents != 1,
  // unit coefficients elided, zero prints as "0".
  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      std::string mon;
      for (std::size_t i = 0; i < vars_.size(); ++i) {
        int e = it->first[i];
        if (e == 0) continue;
        if (!mon.empty()) mon += '*';
        mon += vars_[i];
        if (e != 1) mon += '^' + std::to_string(e);
      }
      std::string term;
      const Int& c = it->second;
      if (mon.empty()) {
        term = c.str();
      } else if (c == 1) {
        term = mon;
      } else if (c == -1) {
        term = '-' + mon;
      } else {
        term = c.str() + '*' + mon;
      }
      if (!out.empty() && term[0] != '-') out += '+';
      out += term;
    }
    return out;
  }

  // {"vars":[...],"terms":[{"exp":[..],"coef":"decimal"}]} in print order.
  std::string json() const {
    std::ostringstream os;
    os << "{\"vars\":[";
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      if (i) os << ',';
      os << '"' << vars_[i] << '"';
    }
    os << "],\"terms\":[";
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      if (!first) os << ',';
      first = false;
      os << "{\"exp\":[";
      for (std::size_t i = 0; i < it->first.size(); ++i) {
        if (i) os << ',';
        os << it->first[i];
      }
      os << "],\"coef\":\"" << it->second.str() << "\"}";
    }
    os << "]}";
    return os.str();
  }

  static MultiPoly parse(const std::string& text, std::vector<std::string> vars);

  int index_of(const std::string& name) const {
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      if (vars_[i] == name) return static_cast<int>(i);
    }
    throw Error("variable not in polynomial: " + name);
  }

 private:
  void check_same_vars(const MultiPoly& o) const {
    if (vars_ != o.vars_) throw Error("variable-list mismatch");
  }

  void add_term(Exp e, Int c) {
    auto [it, inserted] = terms_.try_emplace(std::move(e), c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    } else if (it->second == 0) {
      terms_.erase(it);
    }
  }

  std::vector<std::string> vars_;
  TermMap terms_;
};

// Parser for the canonical text form (round-trip inverse of str()).
inline MultiPoly MultiPoly::parse(const std::string& text, std::vector<std::string> vars) {
  MultiPoly result(std::move(vars));
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
  };
  auto parse_int = [&]() -> Int {
    skip_ws();
    std::size_t start = i;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) ++i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == start || (i == start + 1 && !std::isdigit(static_cast<unsigned char>(text[start]))))
      throw Error("parse: expected integer at offset " + std::to_string(start));
    return Int(text.substr(start, i - start));
  };
  auto parse_name = [&]() -> std::string {
    skip_ws();
    std::size_t start = i;
    while (i < text.size() && std::isalpha(static_cast<unsigned char>(text[i]))) ++i;
    if (i == start) throw Error("parse: expected variable at offset " + std::to_string(start));
    return text.substr(start, i - start);
  };
  skip_ws();
  if (i < text.size() && text.compare(i, 1, "0") == 0 && i + 1 == text.size())
    return result;
  bool first = true;
  while (true) {
    skip_ws();
    if (i >= text.size()) {
      if (first) throw Error("parse: empty polynomial");
      break;
    }
    int sign = 1;
    if (text[i] == '+' || text[i] == '-') {
      if (text[i] == '-') sign = -1;
      ++i;
    } else if (!first) {
      throw Error("parse: expected + or - at offset " + std::to_string(i));
    }
    first = false;
    skip_ws();
    Int coef = 1;
    bool have_coef = false;
    if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      coef = parse_int();
      have_coef = true;
    }
    Exp e(result.vars_.size(), 0);
    bool have_var = false;
    while (true) {
      skip_ws();
      if (have_coef || have_var) {
        if (i >= text.size() || text[i] != '*') break;
        ++i;
        skip_ws();
      }
      if (i >= text.size() || !std::isalpha(static_cast<unsigned char>(text[i]))) {
        if (have_coef || have_var) throw Error("parse: expected variable after *");
        break;
      }
      std::string name = parse_name();
      int exp = 1;
      if (i < text.size() && text[i] == '^') {
        ++i;
        Int v = parse_int();
        exp = static_cast<int>(v);
      }
      e[result.index_of(name)] += exp;
      have_var = true;
    }
    if (!have_coef && !have_var) throw Error("parse: empty term");
    result.add_term(std::move(e), sign * coef);
  }
  return result;
}

// True iff the coefficient of var^(lo+i) equals that of var^(hi-i) for all i.
// The support of p in var must lie within [lo, hi].
inline bool is_palindromic(const MultiPoly& p, const std::string& var, int lo, int hi) {
  if (hi < lo) throw Error("is_palindromic: empty window");
  if (!p.is_zero()) {
    auto [mn, mx] = p.degree_range(var);
    if (mn < lo || mx > hi) throw Error("is_palindromic: support outside window");
  }
  for (int i = 0; lo + i < hi - i; ++i) {
    if (p.coeff_of(var, lo + i) != p.coeff_of(var, hi - i)) return false;
  }
  return true;
}

}  // namespace qtcat
