#pragma once

// Independent reference constructions used by the tests.  Nothing here calls into the
// library except for the plain matrix typedefs.

#include <cmath>
#include <complex>
#include <numeric>
#include <set>
#include <vector>

#include "modinv/types.hpp"

namespace oracle {

using modinv::Int;
using modinv::IntMatrix;
using modinv::IntVector;
using Cx = std::complex<double>;

// Closed-form SU(2)_k fusion: |a-b| <= c <= min(a+b, 2k-a-b), a+b+c even.
inline Int su2_fusion(int k, int a, int b, int c) {
  if ((a + b + c) % 2 != 0) return 0;
  return std::abs(a - b) <= c && c <= std::min(a + b, 2 * k - a - b) ? 1 : 0;
}

inline double su2_dimension(int k, int a) { return std::sin(M_PI * (a + 1) / (k + 2)) / std::sin(M_PI / (k + 2)); }

inline Eigen::MatrixXd su2_S(int k) {
  Eigen::MatrixXd s(k + 1, k + 1);
  for (int a = 0; a <= k; ++a)
    for (int b = 0; b <= k; ++b) s(a, b) = std::sqrt(2.0 / (k + 2)) * std::sin(M_PI * (a + 1) * (b + 1) / (k + 2));
  return s;
}

inline double su2_central_charge(int k) { return 3.0 * k / (k + 2); }

// Z_n with h_j = a j^2 / 2n: S_{jj'} = exp(-2πi a j j' / n) / √n.
inline Eigen::MatrixXcd zn_S(int n, int a) {
  Eigen::MatrixXcd s(n, n);
  for (int j = 0; j < n; ++j)
    for (int jp = 0; jp < n; ++jp) s(j, jp) = std::polar(1.0 / std::sqrt(n), -2 * M_PI * a * j * jp / n);
  return s;
}

// Z = Σ_blocks |Σ_{λ∈block} χ_λ|² plus explicit extra entries.
inline IntMatrix from_blocks(int m, const std::vector<std::vector<int>>& blocks) {
  IntMatrix z = IntMatrix::Zero(m, m);
  for (const auto& b : blocks)
    for (int x : b)
      for (int y : b) z(x, y) += 1;
  return z;
}

inline IntMatrix su2_A(int k) { return IntMatrix::Identity(k + 1, k + 1); }

inline IntMatrix su2_D(int k) {
  IntMatrix z = IntMatrix::Zero(k + 1, k + 1);
  if (k % 4 == 0) {
    for (int j = 0; j < k / 2; j += 2) {
      z(j, j) = z(k - j, k - j) = z(j, k - j) = z(k - j, j) = 1;
    }
    z(k / 2, k / 2) = 2;
  } else {
    for (int j = 0; j <= k; ++j) z(j, j % 2 == 0 ? j : k - j) = 1;
  }
  return z;
}

inline IntMatrix su2_E6() { return from_blocks(11, {{0, 6}, {3, 7}, {4, 10}}); }

inline IntMatrix su2_E7() {
  IntMatrix z = from_blocks(17, {{0, 16}, {4, 12}, {6, 10}, {8}});
  for (int x : {2, 14}) z(x, 8) = z(8, x) = 1;
  return z;
}

inline IntMatrix su2_E8() { return from_blocks(29, {{0, 10, 18, 28}, {6, 12, 16, 22}}); }

// Every SU(2)_k invariant, deduplicated (D coincides with A at k = 2).
inline std::vector<IntMatrix> su2_invariants(int k) {
  std::vector<IntMatrix> out{su2_A(k)};
  if (k % 2 == 0 && su2_D(k) != su2_A(k)) out.push_back(su2_D(k));
  if (k == 10) out.push_back(su2_E6());
  if (k == 16) out.push_back(su2_E7());
  if (k == 28) out.push_back(su2_E8());
  return out;
}

// Coxeter exponents m with eigenvalues 2cos(πm/h).
inline std::vector<int> exponents(char family, int n) {
  switch (family) {
    case 'A': {
      std::vector<int> e(n);
      std::iota(e.begin(), e.end(), 1);
      return e;
    }
    case 'D': {
      std::vector<int> e;
      for (int j = 1; j <= 2 * n - 3; j += 2) e.push_back(j);
      e.push_back(n - 1);
      return e;
    }
    case 'E':
      if (n == 6) return {1, 4, 5, 7, 8, 11};
      if (n == 7) return {1, 5, 7, 9, 11, 13, 17};
      return {1, 7, 11, 13, 17, 19, 23, 29};
  }
  return {};
}

inline int coxeter_number(char family, int n) {
  switch (family) {
    case 'A': return n + 1;
    case 'D': return 2 * n - 2;
    case 'E': return n == 6 ? 12 : n == 7 ? 18 : 30;
  }
  return 0;
}

// Extended Euclid, independent of the library's search.
inline std::tuple<Int, Int, Int> egcd(Int a, Int b) {
  if (b == 0) return {a, 1, 0};
  auto [g, x, y] = egcd(b, a % b);
  return {g, y, x - (a / b) * y};
}

inline int n_tilde(int n) { return n % 2 == 0 ? n / 2 : n; }

// The Z_n invariant labelled by δ | ñ.
inline IntMatrix zn_invariant(int n, int delta) {
  const int nt = n_tilde(n);
  const Int alpha = std::gcd(delta, nt / delta);
  const Int A = nt / (delta * alpha), B = delta / alpha;
  auto [g, x, y] = egcd(A, B);  // x A + y B = 1, so r = x, s = -y
  (void)g;
  const Int omega = x * A - y * B;
  const Int mod = n / alpha;
  IntMatrix z = IntMatrix::Zero(n, n);
  for (int j = 0; j < n; j += static_cast<int>(alpha))
    for (int jp = 0; jp < n; jp += static_cast<int>(alpha))
      if (((jp - omega * j) % mod + mod) % mod == 0) z(j, jp) = 1;
  return z;
}

inline std::vector<int> divisors(int n) {
  std::vector<int> d;
  for (int i = 1; i <= n; ++i)
    if (n % i == 0) d.push_back(i);
  return d;
}

// Eigenvalues of the SU(4) fundamental-weight fusion graph at level 6 for a diagonal sector ρ.
// ε_i are the weights of the vector representation; δ is the Weyl vector; height k + 4 = 10.
inline Cx su4_level6_character(int p, int q, int r) {
  // Orthonormal-basis coordinates of the fundamental weights, summing to zero.
  const double w1[4] = {0.75, -0.25, -0.25, -0.25};
  const double w2[4] = {0.5, 0.5, -0.5, -0.5};
  const double w3[4] = {0.25, 0.25, 0.25, -0.75};
  double v[4];
  for (int i = 0; i < 4; ++i) v[i] = (p + 1) * w1[i] + (q + 1) * w2[i] + (r + 1) * w3[i];
  Cx acc = 0;
  for (int i = 0; i < 4; ++i) acc += std::polar(1.0, -2 * M_PI * v[i] / 10.0);
  return acc;
}

inline std::vector<Cx> spectrum_from_diagonal(const IntMatrix& z, const std::vector<std::vector<int>>& weights) {
  std::vector<Cx> out;
  for (Eigen::Index a = 0; a < z.rows(); ++a)
    for (Int c = 0; c < z(a, a); ++c)
      out.push_back(su4_level6_character(weights[a][0], weights[a][1], weights[a][2]));
  return out;
}

}  // namespace oracle
