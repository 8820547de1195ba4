#pragma once

#include <hyperend/exactalg/integer.hpp>
#include <hyperend/exactalg/modpoly.hpp>

#include <nlohmann/json.hpp>

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace hyperend {

// Square matrix over F_l, row-major.
class ModMatrix {
 public:
  ModMatrix() = default;
  ModMatrix(std::uint64_t l, int m) : l_(l), m_(m), a_(static_cast<std::size_t>(m) * m, 0) {}
  ModMatrix(std::uint64_t l, int m, std::vector<std::uint64_t> entries) : l_(l), m_(m), a_(std::move(entries)) {
    if (a_.size() != static_cast<std::size_t>(m) * m) throw std::invalid_argument("entry count does not match dimension");
    for (auto& x : a_) x %= l_;
  }

  static ModMatrix identity(std::uint64_t l, int m) {
    ModMatrix r(l, m);
    for (int i = 0; i < m; ++i) r(i, i) = 1 % l;
    return r;
  }

  // Companion matrix of a monic polynomial: x acting on F_l[x]/(h) in the basis 1, x, ..., x^(d-1).
  static ModMatrix companion(const ModPolynomial& h) {
    const int d = h.degree();
    if (d < 1 || h.lead() != 1) throw std::invalid_argument("companion matrix needs a monic polynomial of positive degree");
    const std::uint64_t l = h.modulus();
    ModMatrix r(l, d);
    for (int i = 1; i < d; ++i) r(i, i - 1) = 1;
    for (int i = 0; i < d; ++i) r(i, d - 1) = (l - h.coeffs()[i]) % l;
    return r;
  }

  std::uint64_t modulus() const { return l_; }
  int dim() const { return m_; }
  const std::vector<std::uint64_t>& entries() const { return a_; }

  std::uint64_t& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * m_ + j]; }
  std::uint64_t operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * m_ + j]; }

  friend bool operator==(const ModMatrix&, const ModMatrix&) = default;

  friend ModMatrix operator*(const ModMatrix& x, const ModMatrix& y) {
    if (x.m_ != y.m_ || x.l_ != y.l_) throw std::invalid_argument("matrix shape or modulus mismatch");
    ModMatrix r(x.l_, x.m_);
    for (int i = 0; i < x.m_; ++i)
      for (int k = 0; k < x.m_; ++k) {
        const std::uint64_t a = x(i, k);
        if (!a) continue;
        for (int j = 0; j < x.m_; ++j) r(i, j) = (r(i, j) + mulmod(a, y(k, j), x.l_)) % x.l_;
      }
    return r;
  }

  std::vector<std::uint64_t> apply(const std::vector<std::uint64_t>& v) const {
    std::vector<std::uint64_t> r(m_, 0);
    for (int i = 0; i < m_; ++i)
      for (int j = 0; j < m_; ++j) r[i] = (r[i] + mulmod((*this)(i, j), v[j], l_)) % l_;
    return r;
  }

  ModMatrix transpose() const {
    ModMatrix r(l_, m_);
    for (int i = 0; i < m_; ++i)
      for (int j = 0; j < m_; ++j) r(j, i) = (*this)(i, j);
    return r;
  }

  ModMatrix pow(std::uint64_t e) const {
    ModMatrix r = identity(l_, m_), b = *this;
    for (; e; e >>= 1) {
      if (e & 1) r = r * b;
      b = b * b;
    }
    return r;
  }

  ModMatrix inverse() const;

 private:
  std::uint64_t l_ = 2;
  int m_ = 0;
  std::vector<std::uint64_t> a_;
};

inline std::uint64_t inv_mod(std::uint64_t a, std::uint64_t l) {
  if (a % l == 0) throw std::domain_error("zero has no inverse");
  return powmod(a % l, l - 2, l);
}

// Reduced row echelon form of a rectangular matrix (rows of length cols), in place; returns rank.
inline int rref(std::vector<std::vector<std::uint64_t>>& rows, std::uint64_t l) {
  int rank = 0;
  const int cols = rows.empty() ? 0 : static_cast<int>(rows[0].size());
  for (int c = 0; c < cols && rank < static_cast<int>(rows.size()); ++c) {
    int piv = -1;
    for (int r = rank; r < static_cast<int>(rows.size()); ++r)
      if (rows[r][c]) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(rows[rank], rows[piv]);
    const std::uint64_t iv = inv_mod(rows[rank][c], l);
    for (auto& x : rows[rank]) x = mulmod(x, iv, l);
    for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
      if (r == rank || !rows[r][c]) continue;
      const std::uint64_t f = rows[r][c];
      for (int j = c; j < cols; ++j) rows[r][j] = (rows[r][j] + l - mulmod(f, rows[rank][j], l)) % l;
    }
    ++rank;
  }
  rows.resize(rank);
  return rank;
}

inline int rank(const ModMatrix& a) {
  std::vector<std::vector<std::uint64_t>> rows(a.dim(), std::vector<std::uint64_t>(a.dim()));
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j) rows[i][j] = a(i, j);
  return rref(rows, a.modulus());
}

inline ModMatrix ModMatrix::inverse() const {
  std::vector<std::vector<std::uint64_t>> rows(m_, std::vector<std::uint64_t>(2 * m_, 0));
  for (int i = 0; i < m_; ++i) {
    for (int j = 0; j < m_; ++j) rows[i][j] = (*this)(i, j);
    rows[i][m_ + i] = 1 % l_;
  }
  if (rref(rows, l_) < m_) throw std::domain_error("singular matrix");
  for (int i = 0; i < m_; ++i)
    if (rows[i][i] != 1) throw std::domain_error("singular matrix");
  ModMatrix r(l_, m_);
  for (int i = 0; i < m_; ++i)
    for (int j = 0; j < m_; ++j) r(i, j) = rows[i][m_ + j];
  return r;
}

// Characteristic polynomial det(xI - A) via Hessenberg reduction.
inline ModPolynomial charpoly(const ModMatrix& A) {
  const std::uint64_t l = A.modulus();
  const int n = A.dim();
  ModMatrix H = A;
  auto sub = [l](std::uint64_t a, std::uint64_t b) { return (a + l - b) % l; };
  for (int k = 0; k + 2 <= n; ++k) {
    int piv = -1;
    for (int i = k + 1; i < n; ++i)
      if (H(i, k)) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != k + 1) {
      for (int j = 0; j < n; ++j) std::swap(H(piv, j), H(k + 1, j));
      for (int i = 0; i < n; ++i) std::swap(H(i, piv), H(i, k + 1));
    }
    const std::uint64_t iv = inv_mod(H(k + 1, k), l);
    for (int i = k + 2; i < n; ++i) {
      const std::uint64_t f = mulmod(H(i, k), iv, l);
      if (!f) continue;
      for (int j = 0; j < n; ++j) H(i, j) = sub(H(i, j), mulmod(f, H(k + 1, j), l));
      for (int r = 0; r < n; ++r) H(r, k + 1) = (H(r, k + 1) + mulmod(f, H(r, i), l)) % l;
    }
  }
  // p_k = det(xI - H[0..k)) by the Hessenberg recurrence.
  std::vector<ModPolynomial> p{ModPolynomial::constant(l, 1)};
  for (int k = 1; k <= n; ++k) {
    ModPolynomial xk(l, std::vector<std::uint64_t>{sub(0, H(k - 1, k - 1)), 1});
    ModPolynomial acc = xk * p[k - 1];
    std::uint64_t prod = 1;
    for (int i = 1; i < k; ++i) {
      prod = mulmod(prod, H(k - i, k - i - 1), l);
      const std::uint64_t c = mulmod(prod, H(k - i - 1, k - 1), l);
      if (c) acc = acc - ModPolynomial::constant(l, c) * p[k - i - 1];
    }
    p.push_back(acc);
  }
  return p[n];
}

inline ModMatrix block_diagonal(const ModMatrix& a, const ModMatrix& b) {
  if (a.modulus() != b.modulus()) throw std::invalid_argument("modulus mismatch");
  ModMatrix r(a.modulus(), a.dim() + b.dim());
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j) r(i, j) = a(i, j);
  for (int i = 0; i < b.dim(); ++i)
    for (int j = 0; j < b.dim(); ++j) r(a.dim() + i, a.dim() + j) = b(i, j);
  return r;
}

inline nlohmann::ordered_json to_json(const ModMatrix& a) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (int i = 0; i < a.dim(); ++i) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (int j = 0; j < a.dim(); ++j) row.push_back(a(i, j));
    rows.push_back(row);
  }
  return {{"modulus", a.modulus()}, {"rows", rows}};
}

inline ModMatrix matrix_from_json(const nlohmann::json& j) {
  const std::uint64_t l = j.at("modulus").get<std::uint64_t>();
  const auto& rows = j.at("rows");
  const int m = static_cast<int>(rows.size());
  std::vector<std::uint64_t> e;
  for (auto& row : rows) {
    if (static_cast<int>(row.size()) != m) throw std::invalid_argument("matrix is not square");
    for (auto& x : row) e.push_back(x.get<std::uint64_t>());
  }
  return ModMatrix(l, m, std::move(e));
}

}  // namespace hyperend
