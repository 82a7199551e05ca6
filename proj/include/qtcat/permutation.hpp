#pragma once

// One-line permutations of {1..n}; positions and values are 1-based in every
// statistic definition.

#include <algorithm>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "qtcat/multipoly.hpp"

namespace qtcat {

class Perm {
 public:
  Perm() = default;  // the empty permutation

  explicit Perm(std::vector<int> values) : v_(std::move(values)) {
    std::vector<bool> seen(v_.size() + 1, false);
    for (int x : v_) {
      if (x < 1 || x > static_cast<int>(v_.size()) || seen[x])
        throw Error("not a permutation of {1..n}");
      seen[x] = true;
    }
  }

  static Perm identity(int n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    return Perm(std::move(v));
  }

  int size() const { return static_cast<int>(v_.size()); }
  int operator()(int i) const { return v_[i - 1]; }  // 1-based
  const std::vector<int>& values() const { return v_; }

  Perm inverse() const {
    std::vector<int> r(v_.size());
    for (int i = 1; i <= size(); ++i) r[(*this)(i)-1] = i;
    return Perm(std::move(r));
  }

  Perm reversed() const {
    std::vector<int> r(v_.rbegin(), v_.rend());
    return Perm(std::move(r));
  }

  Perm complemented() const {
    std::vector<int> r(v_.size());
    for (std::size_t i = 0; i < v_.size(); ++i) r[i] = size() + 1 - v_[i];
    return Perm(std::move(r));
  }

  Perm reverse_complemented() const { return reversed().complemented(); }

  // Space-separated values; a single digit string is accepted on input for
  // n <= 9 (e.g. "28531746").
  static Perm parse(const std::string& text) {
    std::vector<int> vals;
    bool spaced = text.find(' ') != std::string::npos;
    if (spaced) {
      std::size_t i = 0;
      while (i < text.size()) {
        while (i < text.size() && text[i] == ' ') ++i;
        if (i >= text.size()) break;
        std::size_t j = i;
        while (j < text.size() && text[j] != ' ') ++j;
        vals.push_back(std::stoi(text.substr(i, j - i)));
        i = j;
      }
    } else {
      for (char c : text) {
        if (c < '1' || c > '9') throw Error("bad permutation text: " + text);
        vals.push_back(c - '0');
      }
    }
    return Perm(std::move(vals));
  }

  std::string str() const {
    std::string out;
    for (std::size_t i = 0; i < v_.size(); ++i) {
      if (i) out += ' ';
      out += std::to_string(v_[i]);
    }
    return out;
  }

  bool operator==(const Perm& o) const { return v_ == o.v_; }
  bool operator!=(const Perm& o) const { return v_ != o.v_; }
  bool operator<(const Perm& o) const { return v_ < o.v_; }

 private:
  std::vector<int> v_;
};

// The unique order-isomorphic permutation of a word with distinct letters.
inline Perm standardize(const std::vector<int>& word) {
  std::vector<int> sorted(word);
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw Error("standardize: repeated letters");
  std::vector<int> out(word.size());
  for (std::size_t i = 0; i < word.size(); ++i) {
    out[i] = static_cast<int>(
                 std::lower_bound(sorted.begin(), sorted.end(), word[i]) - sorted.begin()) +
             1;
  }
  return Perm(std::move(out));
}

// Visit all of S_n in lexicographic order.
inline void for_each_perm(int n, const std::function<void(const Perm&)>& fn) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  do {
    fn(Perm(v));
  } while (std::next_permutation(v.begin(), v.end()));
}

}  // namespace qtcat
