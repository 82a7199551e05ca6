#pragma once

// Classical and vincular patterns, containment tests, and a pruned
// depth-first enumerator for pattern-avoidance classes.

#include <functional>
#include <string>
#include <vector>

#include "qtcat/permutation.hpp"

namespace qtcat {

// A vincular pattern: letters plus a block index per letter.  Letters inside
// one block must occupy adjacent positions in an occurrence; a dash between
// blocks allows any gap.  A classical pattern has every letter in its own
// block ("231" == "2-3-1").
struct Pattern {
  Perm letters;
  std::vector<int> block;

  bool classical() const {
    for (std::size_t i = 1; i < block.size(); ++i)
      if (block[i] == block[i - 1]) return false;
    return true;
  }

  static Pattern parse(const std::string& text) {
    std::vector<int> vals;
    std::vector<int> blk;
    int b = 0;
    for (char c : text) {
      if (c == '-') {
        if (vals.empty() || (!blk.empty() && blk.back() != b))
          throw Error("bad pattern text: " + text);
        ++b;
      } else if (c >= '1' && c <= '9') {
        vals.push_back(c - '0');
        blk.push_back(b);
      } else {
        throw Error("bad pattern text: " + text);
      }
    }
    if (vals.empty()) throw Error("bad pattern text: " + text);
    return Pattern{Perm(std::move(vals)), std::move(blk)};
  }

  std::string str() const {
    std::string out;
    for (int i = 1; i <= letters.size(); ++i) {
      if (i > 1 && block[i - 1] != block[i - 2]) out += '-';
      out += std::to_string(letters(i));
    }
    return out;
  }
};

namespace detail {

// Do the values at `pos` (increasing positions into w) realize `pat`?
inline bool order_isomorphic(const std::vector<int>& w, const std::vector<int>& pos,
                             const Perm& pat) {
  int k = pat.size();
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if ((w[pos[i]] < w[pos[j]]) != (pat(i + 1) < pat(j + 1))) return false;
  return true;
}

// Some occurrence of the classical pattern `pat` ends at the last letter of w.
inline bool occurrence_ends_at_last(const std::vector<int>& w, const Perm& pat) {
  int k = pat.size();
  int n = static_cast<int>(w.size());
  if (n < k) return false;
  std::vector<int> pos(k);
  pos[k - 1] = n - 1;
  // Pick positions for slots 0..k-2 among 0..n-2, checking pairwise order
  // against already-placed slots as we go.
  std::function<bool(int, int)> dfs = [&](int slot, int from) -> bool {
    if (slot == k - 1) return true;
    for (int p = from; p <= n - 1 - (k - 1 - slot); ++p) {
      bool ok = true;
      for (int s = 0; s < slot && ok; ++s)
        ok = (w[pos[s]] < w[p]) == (pat(s + 1) < pat(slot + 1));
      if (ok) ok = (w[p] < w[n - 1]) == (pat(slot + 1) < pat(k));
      if (!ok) continue;
      pos[slot] = p;
      if (dfs(slot + 1, p + 1)) return true;
    }
    return false;
  };
  return dfs(0, 0);
}

}  // namespace detail

inline bool contains(const Perm& p, const Perm& pattern) {
  std::vector<int> w;
  for (int x : p.values()) {
    w.push_back(x);
    if (detail::occurrence_ends_at_last(w, pattern)) return true;
  }
  return false;
}

inline bool avoids(const Perm& p, const std::vector<Perm>& patterns) {
  for (const Perm& pat : patterns)
    if (contains(p, pat)) return false;
  return true;
}

// Number of occurrences of a vincular pattern.
inline long long count_vincular(const Perm& p, const Pattern& pat) {
  const std::vector<int>& w = p.values();
  int n = p.size();
  int k = pat.letters.size();
  if (n < k) return 0;
  // Group the letters into blocks of consecutive slots.
  std::vector<std::pair<int, int>> blocks;  // (first slot, length)
  for (int i = 0; i < k; ++i) {
    if (blocks.empty() || pat.block[i] != pat.block[blocks.back().first])
      blocks.push_back({i, 1});
    else
      ++blocks.back().second;
  }
  long long count = 0;
  std::vector<int> pos(k);
  std::function<void(std::size_t, int)> dfs = [&](std::size_t b, int from) {
    if (b == blocks.size()) {
      count += detail::order_isomorphic(w, pos, pat.letters) ? 1 : 0;
      return;
    }
    auto [slot, len] = blocks[b];
    for (int s = from; s + len <= n; ++s) {
      for (int i = 0; i < len; ++i) pos[slot + i] = s + i;
      dfs(b + 1, s + len);
    }
  };
  dfs(0, 0);
  return count;
}

inline long long count_vincular(const Perm& p, const std::string& pattern_text) {
  return count_vincular(p, Pattern::parse(pattern_text));
}

// Alternation shape of a full permutation (and of prefixes during search).
enum class Shape { Any, UpDown, DownUp };

namespace detail {

inline bool shape_step_ok(Shape shape, int pos /*1-based of appended letter*/, int prev,
                          int next) {
  if (shape == Shape::Any || pos < 2) return true;
  bool ascent_wanted =
      (shape == Shape::UpDown) ? (pos % 2 == 0) : (pos % 2 == 1);
  return ascent_wanted ? prev < next : prev > next;
}

}  // namespace detail

inline bool has_shape(const Perm& p, Shape shape) {
  for (int i = 2; i <= p.size(); ++i)
    if (!detail::shape_step_ok(shape, i, p(i - 1), p(i))) return false;
  return true;
}

// Depth-first enumeration of permutations of {1..n} avoiding every classical
// pattern in `avoided`, with the given alternation shape.  A new pattern
// occurrence can only end at the letter just appended, so each append costs
// one suffix-anchored containment check per pattern.  `prefix_ok` (optional)
// can prune on the partial word after each append; `emit` receives each
// surviving permutation.
inline void enumerate_avoiders(
    int n, const std::vector<Perm>& avoided, Shape shape,
    const std::function<bool(const std::vector<int>&)>& prefix_ok,
    const std::function<void(const Perm&)>& emit) {
  for (const Perm& pat : avoided)
    if (pat.size() == 0) throw Error("empty avoided pattern");
  if (n < 0) throw Error("enumerate_avoiders: n < 0");
  std::vector<int> prefix;
  std::vector<bool> used(n + 1, false);
  std::function<void()> dfs = [&]() {
    if (static_cast<int>(prefix.size()) == n) {
      emit(Perm(prefix));
      return;
    }
    int pos = static_cast<int>(prefix.size()) + 1;
    for (int v = 1; v <= n; ++v) {
      if (used[v]) continue;
      if (!prefix.empty() &&
          !detail::shape_step_ok(shape, pos, prefix.back(), v))
        continue;
      prefix.push_back(v);
      used[v] = true;
      bool ok = true;
      for (const Perm& pat : avoided)
        if (detail::occurrence_ends_at_last(prefix, pat)) {
          ok = false;
          break;
        }
      if (ok && prefix_ok) ok = prefix_ok(prefix);
      if (ok) dfs();
      prefix.pop_back();
      used[v] = false;
    }
  };
  dfs();
}

}  // namespace qtcat
