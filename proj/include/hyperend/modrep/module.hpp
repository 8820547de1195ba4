#pragma once

#include <hyperend/exactalg/integer.hpp>
#include <hyperend/exactalg/modpoly.hpp>
#include <hyperend/modrep/matrix.hpp>
#include <hyperend/permgrp/group.hpp>

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

namespace hyperend {

struct CyclotomicFactorization {
  ModFactorList factors;  // of x^p - 1 over F_l
  int s = 0;              // common degree of the nonlinear factors, ord_p(l)
};

inline CyclotomicFactorization cyclotomic_factors_mod(std::uint64_t p, std::uint64_t l) {
  if (!is_prime_u64(p)) throw std::invalid_argument("p must be prime");
  require_prime_modulus(l);
  if (l == p) throw std::domain_error("wild case out of scope");
  std::vector<std::uint64_t> c(p + 1, 0);
  c[0] = l - 1;
  c[p] = 1;
  CyclotomicFactorization out;
  out.factors = factor_mod(ModPolynomial(l, std::move(c)));
  out.s = static_cast<int>(multiplicative_order(l % p, p));
  for (auto& [h, e] : out.factors.factors)
    if (e != 1 || (h.degree() != 1 && h.degree() != out.s)) throw std::logic_error("unexpected cyclotomic factorization");
  return out;
}

// The image of a generator of Z/pZ acting on F_l^m.
struct CpModule {
  std::uint64_t l = 2;
  std::uint64_t p = 2;
  ModMatrix action;
  bool trivial = false;

  int dim() const { return action.dim(); }
};

inline CpModule make_cp_module(std::uint64_t p, const ModMatrix& action, bool allow_trivial = false) {
  CpModule M{action.modulus(), p, action, false};
  const ModMatrix I = ModMatrix::identity(action.modulus(), action.dim());
  if (action.pow(p) != I) throw std::domain_error("action does not have order dividing p");
  if (action == I) {
    if (!allow_trivial) throw std::domain_error("action is not faithful");
    M.trivial = true;
  }
  return M;
}

// Jordan-Holder constituent dimensions. With l != p the module is semisimple and its
// constituents correspond to the irreducible factors of the characteristic polynomial.
inline std::vector<int> module_constituents(const CpModule& M) {
  if (M.l == M.p) throw std::domain_error("wild case out of scope");
  if (M.action.pow(M.p) != ModMatrix::identity(M.l, M.dim())) throw std::domain_error("action does not have order dividing p");
  std::vector<int> dims;
  if (M.dim() == 0) return dims;
  for (auto& [h, e] : factor_mod(charpoly(M.action)).factors)
    for (unsigned i = 0; i < e; ++i) dims.push_back(h.degree());
  std::sort(dims.begin(), dims.end());
  return dims;
}

inline constexpr std::uint64_t kSubspaceEnumerationCap = std::uint64_t{1} << 20;

struct SubmoduleLattice {
  std::vector<std::vector<std::vector<std::uint64_t>>> submodules;  // RREF bases
  std::vector<int> dims;                                          // sorted, one entry per submodule

  std::vector<int> distinct_dims() const {
    std::vector<int> d = dims;
    d.erase(std::unique(d.begin(), d.end()), d.end());
    return d;
  }
  bool irreducible() const { return dims.size() == 2 && dims[0] == 0 && dims[1] > 0; }
};

namespace detail {

using Basis = std::vector<std::vector<std::uint64_t>>;

inline Basis span_rref(Basis rows, std::uint64_t l) {
  rref(rows, l);
  return rows;
}

inline Basis krylov_span(const ModMatrix& A, std::vector<std::uint64_t> v) {
  Basis rows;
  for (int i = 0; i < A.dim(); ++i) {
    Basis trial = rows;
    trial.push_back(v);
    if (rref(trial, A.modulus()) == static_cast<int>(rows.size())) break;
    rows = std::move(trial);
    v = A.apply(v);
  }
  return rows;
}

}  // namespace detail

// Every sigma-invariant subspace, found as sums of cyclic submodules.
inline SubmoduleLattice brute_force_submodule_dims(const CpModule& M) {
  const std::uint64_t l = M.l;
  const int m = M.dim();
  std::uint64_t count = 1;
  for (int i = 0; i < m; ++i) {
    count *= l;
    if (count > kSubspaceEnumerationCap) throw std::length_error("subspace enumeration cap exceeded");
  }
  // c sigma^i v generates the same cyclic submodule as v: one span per orbit of scalars and sigma.
  auto index_of = [&](const std::vector<std::uint64_t>& w) {
    std::uint64_t idx = 0;
    for (int i = m - 1; i >= 0; --i) idx = idx * l + w[i];
    return idx;
  };
  std::vector<bool> visited(count, false);
  std::set<detail::Basis> cyclic;
  std::vector<std::uint64_t> v(m, 0);
  for (std::uint64_t idx = 1; idx < count; ++idx) {
    if (visited[idx]) continue;
    std::uint64_t t = idx;
    for (int i = 0; i < m; ++i) {
      v[i] = t % l;
      t /= l;
    }
    cyclic.insert(detail::krylov_span(M.action, v));
    std::vector<std::uint64_t> w = v;
    for (std::uint64_t i = 0; i < M.p; ++i) {
      for (std::uint64_t c = 1; c < l; ++c) {
        std::vector<std::uint64_t> cw(m);
        for (int k = 0; k < m; ++k) cw[k] = c * w[k] % l;
        visited[index_of(cw)] = true;
      }
      w = M.action.apply(w);
    }
  }
  std::set<detail::Basis> seen{detail::Basis{}};
  std::deque<detail::Basis> queue{detail::Basis{}};
  while (!queue.empty()) {
    detail::Basis S = std::move(queue.front());
    queue.pop_front();
    for (auto& C : cyclic) {
      detail::Basis sum = S;
      sum.insert(sum.end(), C.begin(), C.end());
      sum = detail::span_rref(std::move(sum), l);
      if (seen.insert(sum).second) queue.push_back(std::move(sum));
    }
  }
  SubmoduleLattice out;
  for (auto& S : seen) {
    out.dims.push_back(static_cast<int>(S.size()));
    out.submodules.push_back(S);
  }
  std::sort(out.dims.begin(), out.dims.end());
  return out;
}

struct SymplecticSpace {
  std::uint64_t l = 2;
  int dim = 0;
  ModMatrix gram;
};

// Standard hyperbolic form J = [[0, I], [-I, 0]].
inline SymplecticSpace standard_symplectic_space(std::uint64_t l, int g) {
  SymplecticSpace V{l, 2 * g, ModMatrix(l, 2 * g)};
  for (int i = 0; i < g; ++i) {
    V.gram(i, g + i) = 1 % l;
    V.gram(g + i, i) = (l - 1) % l;
  }
  return V;
}

inline bool preserves_form(const ModMatrix& X, const ModMatrix& J) { return X.transpose() * J * X == J; }

struct SymplecticElement {
  SymplecticSpace space;
  CpModule module;
  ModPolynomial u_charpoly;  // characteristic polynomial on U
  ModPolynomial w_charpoly;  // on W
};

// M (+) (M^T)^(-1) on U (+) W with U, W Lagrangian, M the companion matrix of a degree-g
// factor of x^p - 1 over F_l.
inline SymplecticElement symplectic_order_p_element(int g, std::uint64_t l) {
  if (g < 3 || g % 2 == 0) throw std::domain_error("g must be odd and at least 3");
  const std::uint64_t p = 2 * static_cast<std::uint64_t>(g) + 1;
  if (!is_prime_u64(p)) throw std::domain_error("2g+1 is not prime");
  require_prime_modulus(l);
  if (l == p) throw std::domain_error("wild case out of scope");
  if (multiplicative_order(l % p, p) != static_cast<std::uint64_t>(g)) throw std::domain_error("order of l modulo p is not g");
  auto cf = cyclotomic_factors_mod(p, l);
  const ModPolynomial* h = nullptr;
  for (auto& [f, e] : cf.factors.factors)
    if (f.degree() == g) {
      h = &f;
      break;
    }
  if (!h) throw std::logic_error("no degree-g factor of x^p - 1");
  const ModMatrix M = ModMatrix::companion(*h);
  const ModMatrix N = M.transpose().inverse();
  const ModMatrix X = block_diagonal(M, N);
  SymplecticElement out{standard_symplectic_space(l, g), make_cp_module(p, X), charpoly(M), charpoly(N)};
  if (!preserves_form(X, out.space.gram)) throw std::logic_error("constructed element does not preserve the form");
  return out;
}

// dim {A : A G = G A for all generators G}.
inline int centralizer_algebra_dim(const std::vector<ModMatrix>& gens) {
  if (gens.empty()) throw std::invalid_argument("no generators");
  const std::uint64_t l = gens[0].modulus();
  const int m = gens[0].dim();
  for (auto& G : gens)
    if (G.dim() != m || G.modulus() != l) throw std::invalid_argument("dimension mismatch");
  const int unknowns = m * m;
  std::vector<std::vector<std::uint64_t>> rows;
  // (A G - G A)_{ij} = sum_k A_ik G_kj - G_ik A_kj; unknown A_ab sits at column a*m+b.
  for (auto& G : gens)
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) {
        std::vector<std::uint64_t> row(unknowns, 0);
        for (int k = 0; k < m; ++k) {
          auto& x = row[i * m + k];
          x = (x + G(k, j)) % l;
          auto& y = row[k * m + j];
          y = (y + l - G(i, k)) % l;
        }
        rows.push_back(std::move(row));
      }
  return unknowns - rref(rows, l);
}

// Matrix of g on F_l[X]: e_i -> e_{g(i)}.
inline ModMatrix permutation_matrix(const Permutation& g, std::uint64_t l) {
  ModMatrix P(l, g.degree());
  for (int i = 0; i < g.degree(); ++i) P(g(i), i) = 1 % l;
  return P;
}

inline std::vector<ModMatrix> permutation_module(const PermutationGroup& G, std::uint64_t l) {
  require_prime_modulus(l);
  std::vector<ModMatrix> out;
  for (auto& g : G.generators()) out.push_back(permutation_matrix(g, l));
  if (out.empty()) out.push_back(ModMatrix::identity(l, G.degree()));
  return out;
}

// Action on the augmentation kernel in the basis e_i - e_{n-1}, i < n-1.
inline ModMatrix deleted_matrix(const Permutation& g, std::uint64_t l) {
  const int n = g.degree();
  ModMatrix D(l, n - 1);
  const int last = g(n - 1);
  for (int i = 0; i + 1 < n; ++i) {
    if (g(i) != n - 1) D(g(i), i) = (D(g(i), i) + 1) % l;
    if (last != n - 1) D(last, i) = (D(last, i) + l - 1) % l;
  }
  return D;
}

inline std::vector<ModMatrix> deleted_permutation_module(const PermutationGroup& G, std::uint64_t l) {
  require_prime_modulus(l);
  if (G.degree() % l == 0) throw std::domain_error("no complement");
  std::vector<ModMatrix> out;
  for (auto& g : G.generators()) out.push_back(deleted_matrix(g, l));
  if (out.empty()) out.push_back(ModMatrix::identity(l, G.degree() - 1));
  return out;
}

}  // namespace hyperend
