#pragma once

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace hyperend {

// A bijection of {0, ..., n-1} stored as its image list.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images) : img_(std::move(images)) {
    std::vector<char> seen(img_.size(), 0);
    for (int v : img_) {
      if (v < 0 || static_cast<std::size_t>(v) >= img_.size() || seen[v])
        throw std::invalid_argument("images do not form a permutation");
      seen[v] = 1;
    }
  }

  static Permutation identity(int n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 0);
    return Permutation(std::move(v));
  }

  // Product of disjoint or overlapping cycles, applied right to left.
  static Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
    Permutation acc = identity(n);
    for (auto it = cycles.rbegin(); it != cycles.rend(); ++it) {
      std::vector<int> v(n);
      std::iota(v.begin(), v.end(), 0);
      const auto& c = *it;
      for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] < 0 || c[i] >= n) throw std::invalid_argument("cycle entry out of range");
        v[c[i]] = c[(i + 1) % c.size()];
      }
      acc = Permutation(std::move(v)) * acc;
    }
    return acc;
  }

  int degree() const { return static_cast<int>(img_.size()); }
  int operator()(int i) const { return img_[i]; }
  const std::vector<int>& images() const { return img_; }

  bool is_identity() const {
    for (int i = 0; i < degree(); ++i)
      if (img_[i] != i) return false;
    return true;
  }

  int fixed_points() const {
    int c = 0;
    for (int i = 0; i < degree(); ++i) c += img_[i] == i;
    return c;
  }

  // (a * b)(i) = a(b(i)).
  friend Permutation operator*(const Permutation& a, const Permutation& b) {
    if (a.degree() != b.degree()) throw std::invalid_argument("degree mismatch");
    std::vector<int> v(a.degree());
    for (int i = 0; i < a.degree(); ++i) v[i] = a.img_[b.img_[i]];
    Permutation r;
    r.img_ = std::move(v);
    return r;
  }

  Permutation inverse() const {
    std::vector<int> v(degree());
    for (int i = 0; i < degree(); ++i) v[img_[i]] = i;
    Permutation r;
    r.img_ = std::move(v);
    return r;
  }

  std::vector<std::vector<int>> cycles() const {
    std::vector<std::vector<int>> out;
    std::vector<char> seen(degree(), 0);
    for (int i = 0; i < degree(); ++i) {
      if (seen[i]) continue;
      std::vector<int> c;
      for (int j = i; !seen[j]; j = img_[j]) {
        seen[j] = 1;
        c.push_back(j);
      }
      out.push_back(std::move(c));
    }
    return out;
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) { return a.img_ <=> b.img_; }

 private:
  std::vector<int> img_;
};

// Sorted cycle lengths, fixed points included.
inline std::vector<int> cycle_type(const Permutation& p) {
  std::vector<int> t;
  for (auto& c : p.cycles()) t.push_back(static_cast<int>(c.size()));
  std::sort(t.begin(), t.end());
  return t;
}

inline int element_order(const Permutation& p) {
  int o = 1;
  for (int len : cycle_type(p)) o = std::lcm(o, len);
  return o;
}

// "(0 1 2)(3 4)"; identity is "()".
inline std::string to_string(const Permutation& p) {
  std::string s;
  for (auto& c : p.cycles()) {
    if (c.size() < 2) continue;
    s += '(';
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) s += ' ';
      s += std::to_string(c[i]);
    }
    s += ')';
  }
  return s.empty() ? "()" : s;
}

inline Permutation parse_permutation(const std::string& text, int n) {
  std::vector<std::vector<int>> cycles;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip();
  while (i < text.size()) {
    if (text[i] != '(') throw std::invalid_argument("expected '(' in cycle notation");
    ++i;
    std::vector<int> c;
    for (;;) {
      skip();
      if (i >= text.size()) throw std::invalid_argument("unterminated cycle");
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (text[i] == ',') {
        ++i;
        continue;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i]))) throw std::invalid_argument("bad cycle entry");
      int v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) v = v * 10 + (text[i++] - '0');
      if (v >= n) throw std::invalid_argument("cycle entry out of range");
      if (std::find(c.begin(), c.end(), v) != c.end()) throw std::invalid_argument("repeated point in cycle");
      c.push_back(v);
    }
    if (!c.empty()) cycles.push_back(std::move(c));
    skip();
  }
  return Permutation::from_cycles(n, cycles);
}

}  // namespace hyperend
