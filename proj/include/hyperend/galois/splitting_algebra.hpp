#pragma once

// Exact arithmetic in the universal splitting algebra of a monic depressed quintic
// g = x^5 + a3 x^3 + a2 x^2 + a1 x + a0, presented by Cauchy modules:
//   C_k(x1..xk) = sum_{j >= k-1} a_j h_{j-k+1}(x1..xk),  monic of degree 6-k in x_k,
// with x5 = -(x1 + x2 + x3 + x4) eliminated. Normal forms have e_k < 6 - k.

#include <hyperend/exactalg/integer.hpp>
#include <hyperend/exactalg/polynomial.hpp>
#include <hyperend/exactalg/stem_field.hpp>
#include <hyperend/permgrp/group.hpp>

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <vector>

namespace hyperend {

class QuinticSplittingAlgebra {
 public:
  using Exps = std::array<int, 4>;
  // Key order: x4 most significant, so reductions only ever produce smaller keys.
  using Element = std::map<std::uint32_t, Integer, std::greater<std::uint32_t>>;

  explicit QuinticSplittingAlgebra(const IntPolynomial& depressed) : g_(depressed) {
    if (g_.degree() != 5 || g_.lead() != 1 || g_[4] != 0) throw std::invalid_argument("monic depressed quintic required");
    for (int k = 1; k <= 4; ++k) tails_[k - 1] = cauchy_tail(k);
  }

  static std::uint32_t key(const Exps& e) {
    return static_cast<std::uint32_t>(((e[3] * 64 + e[2]) * 64 + e[1]) * 64 + e[0]);
  }
  static Exps exps(std::uint32_t k) {
    return {static_cast<int>(k % 64), static_cast<int>((k / 64) % 64), static_cast<int>((k / 4096) % 64),
            static_cast<int>(k / 262144)};
  }

  static Element constant(const Integer& c) {
    Element e;
    if (c != 0) e[0] = c;
    return e;
  }

  // Root x_i, i in 0..4.
  static Element root(int i) {
    Element e;
    if (i < 4) {
      Exps x{0, 0, 0, 0};
      x[i] = 1;
      e[key(x)] = 1;
    } else {
      for (int j = 0; j < 4; ++j) {
        Exps x{0, 0, 0, 0};
        x[j] = 1;
        e[key(x)] = -1;
      }
    }
    return e;
  }

  static Element add(const Element& a, const Element& b, int sign = 1) {
    Element r = a;
    for (auto& [k, c] : b) {
      auto& slot = r[k];
      if (sign > 0)
        slot += c;
      else
        slot -= c;
      if (slot == 0) r.erase(k);
    }
    return r;
  }

  Element mul(const Element& a, const Element& b) const {
    Element prod;
    for (auto& [ka, ca] : a)
      for (auto& [kb, cb] : b) {
        auto& slot = prod[ka + kb];
        slot += ca * cb;
      }
    return reduce(std::move(prod));
  }

  Element reduce(Element work) const {
    Element out;
    while (!work.empty()) {
      auto it = work.begin();
      const std::uint32_t k = it->first;
      Integer c = std::move(it->second);
      work.erase(it);
      if (c == 0) continue;
      Exps e = exps(k);
      int var = -1;
      for (int v = 3; v >= 0; --v)
        if (e[v] >= 5 - v) {
          var = v;
          break;
        }
      if (var < 0) {
        out[k] = std::move(c);
        continue;
      }
      // x_var^(5-var) = -(tail of C_(var+1)).
      e[var] -= 5 - var;
      for (auto& [tk, tc] : tails_[var]) {
        Exps t = exps(tk);
        Exps s{e[0] + t[0], e[1] + t[1], e[2] + t[2], e[3] + t[3]};
        auto& slot = work[key(s)];
        slot -= c * tc;
      }
    }
    for (auto it = out.begin(); it != out.end();)
      it = it->second == 0 ? out.erase(it) : std::next(it);
    return out;
  }

 private:
  // C_k minus its leading power x_k^(6-k), over the variables x1..xk.
  Element cauchy_tail(int k) const {
    Element t;
    for (int j = k - 1; j <= 5; ++j) {
      const Integer a = g_[j];
      if (a == 0) continue;
      const int m = j - k + 1;
      // h_m(x1..xk): all exponent vectors of total degree m in k variables.
      std::vector<int> e(k, 0);
      std::function<void(int, int)> rec = [&](int pos, int left) {
        if (pos == k - 1) {
          e[pos] = left;
          Exps x{0, 0, 0, 0};
          for (int i = 0; i < k; ++i) x[i] = e[i];
          if (!(j == 5 && x[k - 1] == 6 - k)) {
            auto& slot = t[key(x)];
            slot += a;
          }
          return;
        }
        for (int v = 0; v <= left; ++v) {
          e[pos] = v;
          rec(pos + 1, left - v);
        }
      };
      rec(0, m);
    }
    for (auto it = t.begin(); it != t.end();)
      it = it->second == 0 ? t.erase(it) : std::next(it);
    return t;
  }

  IntPolynomial g_;
  std::array<Element, 4> tails_;
};

// 5^5 h((x - a4)/5) for the monic associate h of f: monic, integral, no x^4 term.
inline IntPolynomial depressed_quintic(const IntPolynomial& f) {
  if (f.degree() != 5) throw std::invalid_argument("quintic required");
  IntPolynomial h = monic_associate(f);
  // h(x/5) * 5^5 is monic with x^4 coefficient a4; then shift by -a4.
  std::vector<Integer> c(6);
  Integer pw = 1;
  for (int i = 5; i >= 0; --i) {
    c[i] = h[i] * pw;
    pw *= 5;
  }
  // c is 5^5 h(x/5) reversed-weighted: coefficient of x^i is h_i 5^(5-i).
  IntPolynomial scaled(std::move(c));
  return scaled.shift(Integer(-h[4]));
}

namespace detail {

// u = sum x_i x_(i+1) - sum x_i x_(i+2) (indices mod 5), whose square has stabiliser F20.
inline std::vector<std::vector<int>> sextic_coset_representatives() {
  std::vector<std::vector<int>> reps;
  std::vector<std::map<std::pair<int, int>, int>> seen;
  const PermutationGroup S5 = symmetric_group(5);
  for (auto& s : S5.elements()) {
    std::map<std::pair<int, int>, int> u;
    for (int i = 0; i < 5; ++i) {
      int a = s(i), b = s((i + 1) % 5), c = s((i + 2) % 5);
      u[{std::min(a, b), std::max(a, b)}] += 1;
      u[{std::min(a, c), std::max(a, c)}] -= 1;
    }
    auto neg = u;
    for (auto& [k, v] : neg) v = -v;
    bool dup = false;
    for (auto& w : seen) dup = dup || w == u || w == neg;
    if (dup) continue;
    seen.push_back(u);
    reps.push_back(s.images());
  }
  if (reps.size() != 6) throw std::logic_error("expected six cosets of F20 in S5");
  return reps;
}

}  // namespace detail

// Degree-6 resolvent prod (y - theta_s), theta = u^2 over the six cosets of F20 in S5, for a monic
// depressed quintic. Power sums of the theta_s are symmetric, so they reduce to constants.
inline IntPolynomial sextic_resolvent(const IntPolynomial& depressed) {
  QuinticSplittingAlgebra A(depressed);
  using E = QuinticSplittingAlgebra::Element;
  std::array<E, 5> x;
  for (int i = 0; i < 5; ++i) x[i] = QuinticSplittingAlgebra::root(i);
  std::vector<E> thetas;
  for (auto& s : detail::sextic_coset_representatives()) {
    E u;
    for (int i = 0; i < 5; ++i) {
      u = QuinticSplittingAlgebra::add(u, A.mul(x[s[i]], x[s[(i + 1) % 5]]));
      u = QuinticSplittingAlgebra::add(u, A.mul(x[s[i]], x[s[(i + 2) % 5]]), -1);
    }
    thetas.push_back(A.mul(u, u));
  }
  std::vector<Integer> sums(7, 0);
  for (auto& t : thetas) {
    E pw = QuinticSplittingAlgebra::constant(1);
    for (int m = 1; m <= 6; ++m) {
      pw = A.mul(pw, t);
      sums[m] += pw.count(0) ? pw.at(0) : Integer(0);
    }
  }
  // Non-constant parts must cancel across the orbit.
  for (int m = 1; m <= 6; ++m) {
    E total;
    for (auto& t : thetas) {
      E pw = QuinticSplittingAlgebra::constant(1);
      for (int i = 0; i < m; ++i) pw = A.mul(pw, t);
      total = QuinticSplittingAlgebra::add(total, pw);
    }
    for (auto& [k, c] : total)
      if (k != 0 && c != 0) throw std::logic_error("resolvent power sum is not symmetric");
  }
  return from_power_sums(sums, 6);
}

}  // namespace hyperend
